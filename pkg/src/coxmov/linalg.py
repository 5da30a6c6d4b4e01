"""Exact dense linear algebra over rationals and quadratic field scalars.

Matrices are immutable tuples-of-tuples.  Entries are ``Fraction`` (integer
inputs are promoted) or ``QuadExt``; every operation is exact.  Sizes here
are tiny (the Picard rank m), so plain Gaussian elimination with exact
division is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .exact import QuadExt


def _norm_entry(e):
    if isinstance(e, (Fraction, QuadExt)):
        return e
    if isinstance(e, float):
        raise TypeError("exact matrices do not accept floats")
    return Fraction(e)


def dot(u, v):
    """Exact inner product of two same-length vectors."""
    if len(u) != len(v):
        raise ValueError("length mismatch")
    total = u[0] * v[0]
    for x, y in zip(u[1:], v[1:]):
        total = total + x * y
    return total


class Matrix:
    """Immutable exact matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(_norm_entry(e) for e in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return Matrix([[Fraction(0)] * m for _ in range(n)])

    @staticmethod
    def from_columns(cols) -> "Matrix":
        cols = [tuple(c) for c in cols]
        return Matrix([[cols[j][i] for j in range(len(cols))]
                       for i in range(len(cols[0]))])

    # -- structure -------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows) for j in range(i))

    def column(self, j: int) -> tuple:
        """Column j, 1-based."""
        if not 1 <= j <= self.ncols:
            raise IndexError("column index out of range")
        return tuple(row[j - 1] for row in self.rows)

    def columns(self) -> tuple:
        return tuple(self.column(j + 1) for j in range(self.ncols))

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)])

    def map(self, f) -> "Matrix":
        return Matrix([[f(e) for e in row] for row in self.rows])

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __neg__(self):
        return self.map(lambda e: -e)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            bt = other.transpose().rows
            return Matrix([[dot(row, col) for col in bt] for row in self.rows])
        if isinstance(other, (tuple, list)):
            if self.ncols != len(other):
                raise ValueError("dimension mismatch")
            return tuple(dot(row, other) for row in self.rows)
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.map(lambda e: e * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.map(lambda e: other * e)
        return NotImplemented

    def __pow__(self, k: int):
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- elimination-based operations --------------------------------------

    def det(self):
        """Exact determinant via elimination with division."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            det = det * a[col][col]
            inv = 1 / a[col][col] if isinstance(a[col][col], Fraction) \
                else a[col][col].inverse()
            for r in range(col + 1, n):
                f = a[r][col] * inv
                if f != 0:
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return det

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan; raises ValueError when singular."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise ValueError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            pivval = a[col][col]
            a[col] = [x / pivval for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix([row[n:] for row in a])

    def charpoly(self) -> tuple:
        """Monic characteristic polynomial, constant coefficient first.

        Faddeev-LeVerrier recursion: exact over the rationals, no
        eigensolves, no fraction-free bookkeeping needed at this size.
        """
        if not self.is_square:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.nrows
        coeffs = [Fraction(1)]          # descending powers: x^n first
        mk = Matrix.identity(n)
        for k in range(1, n + 1):
            am = self * mk
            trace = am.rows[0][0]
            for i in range(1, n):
                trace = trace + am.rows[i][i]
            ck = -(trace / k)
            coeffs.append(ck)
            if k < n:
                mk = am + Matrix.identity(n) * ck
        return tuple(reversed(coeffs))

    def signature(self) -> tuple[int, int, int]:
        """Exact inertia (positives, negatives, zeros) of a symmetric matrix.

        Congruence reduction: split off a nonzero diagonal pivot when one
        exists, otherwise a hyperbolic 2x2 block (which contributes one
        positive and one negative).  No floating point anywhere.
        """
        if not self.is_symmetric():
            raise ValueError("signature of a non-symmetric matrix")
        a = [list(r) for r in self.rows]
        idx = list(range(self.nrows))
        pos = neg = zero = 0
        while idx:
            piv = next((i for i in idx if a[i][i] != 0), None)
            if piv is not None:
                p = a[piv][piv]
                if p > 0:
                    pos += 1
                else:
                    neg += 1
                idx.remove(piv)
                for r in idx:
                    if a[r][piv] != 0:
                        f = a[r][piv] / p
                        for c in idx:
                            a[r][c] -= f * a[piv][c]
                # column entries in the eliminated rows are now stale but
                # never read again: we only touch the active index set
                for r in idx:
                    a[r][piv] = Fraction(0)
                continue
            off = next(((i, j) for i in idx for j in idx
                        if j != i and a[i][j] != 0), None)
            if off is None:
                zero += len(idx)
                break
            i, j = off
            q = a[i][j]
            pos += 1
            neg += 1
            idx.remove(i)
            idx.remove(j)
            for r in idx:
                ri, rj = a[r][i], a[r][j]
                if ri != 0 or rj != 0:
                    for c in idx:
                        a[r][c] -= (ri * a[j][c] + rj * a[i][c]) / q
            for r in idx:
                a[r][i] = a[r][j] = Fraction(0)
        return pos, neg, zero

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.rows)
        return f"Matrix[{body}]"


def nullspace_vector(mat: Matrix):
    """One nonzero kernel vector of a square matrix, or None if invertible.

    Works over any exact field the entries support (rationals or a fixed
    quadratic extension).
    """
    n = mat.nrows
    a = [list(r) for r in mat.rows]
    pivots = []
    row = 0
    for col in range(mat.ncols):
        piv = next((r for r in range(row, n) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pv = a[row][col]
        a[row] = [x / pv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(mat.ncols) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    vec = [Fraction(0)] * mat.ncols
    vec[c0] = Fraction(1)
    for r, pc in enumerate(pivots):
        vec[pc] = -a[r][c0]
    return tuple(vec)


def primitive_int_vector(vec) -> tuple[int, ...]:
    """Rescale an exact rational vector to coprime integers.

    Direction-preserving: the scaling factor is always positive, so ray
    orientation is never flipped.
    """
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        raise ValueError("zero vector has no primitive form")
    denom = lcm(*(f.denominator for f in fracs))
    ints = [int(f * denom) for f in fracs]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def primitive_quad_vector(vec) -> tuple[QuadExt, ...]:
    """Primitive form of a quadratic-field vector.

    Clears denominators, divides by the content of all rational and radical
    coefficients, then fixes the sign so the coordinate sum is >= 0 (first
    nonzero coordinate decides when the sum vanishes).
    """
    vals = [v if isinstance(v, QuadExt) else QuadExt(v) for v in vec]
    if all(v.a == 0 and v.b == 0 for v in vals):
        raise ValueError("zero vector has no primitive form")
    denom = lcm(*(x.denominator for v in vals for x in (v.a, v.b)))
    nums = [x.numerator * denom // x.denominator
            for v in vals for x in (v.a, v.b)]
    g = gcd(*nums)
    scale = Fraction(denom, g)
    vals = [v * scale for v in vals]
    total = vals[0]
    for v in vals[1:]:
        total = total + v
    s = total.sign()
    if s == 0:
        s = next(v.sign() for v in vals if v.sign() != 0)
    if s < 0:
        vals = [-v for v in vals]
    return tuple(vals)
