"""Reflection groups attached to Calabi-Yau complete intersections.

For parameters (n, m) -- n the dimension of each projective-space factor,
m the number of factors / the Picard rank -- the group is generated by m
involutions whose Gram matrix has unit diagonal and constant off-diagonal
entries -n/2.  This module builds the Gram matrix, the reflection matrices
in both the primal and the dual basis, permutation matrices, the invariant
integral quadric, and the Lorentzian signature data.

Interfaces are 1-based throughout, matching the hyperplane classes
H_1, ..., H_m; storage is 0-based internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, primitive_int_vector


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., m}, stored by its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        m = len(self.images)
        if sorted(self.images) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation of 1..{m}: {self.images}")

    @staticmethod
    def identity(m: int) -> "Permutation":
        return Permutation(tuple(range(1, m + 1)))

    @staticmethod
    def transposition(m: int, i: int, j: int) -> "Permutation":
        imgs = list(range(1, m + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return Permutation(tuple(imgs))

    @staticmethod
    def from_cycle(m: int, cycle) -> "Permutation":
        """The cycle (c1 c2 ... ck): maps c1 -> c2 -> ... -> ck -> c1."""
        cycle = list(cycle)
        if len(set(cycle)) != len(cycle):
            raise ValueError("repeated entry in cycle")
        imgs = list(range(1, m + 1))
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            imgs[a - 1] = b
        return Permutation(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self * other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self(other(i)) for i in range(1, self.degree + 1)))

    def inverse(self) -> "Permutation":
        imgs = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            imgs[img - 1] = i
        return Permutation(tuple(imgs))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.degree + 1))

    def sign(self) -> int:
        seen = [False] * self.degree
        sgn = 1
        for i in range(1, self.degree + 1):
            if seen[i - 1]:
                continue
            length = 0
            j = i
            while not seen[j - 1]:
                seen[j - 1] = True
                j = self(j)
                length += 1
            if length % 2 == 0:
                sgn = -sgn
        return sgn


def perm_matrix(sigma: Permutation) -> Matrix:
    """Matrix with column l equal to the standard vector e_{sigma(l)}.

    This is the unique convention compatible with both identities
    P(sigma)*P(tau) = P(sigma*tau) and P(sigma)*t_i = t_{sigma(i)}*P(sigma).
    """
    m = sigma.degree
    rows = [[Fraction(0)] * m for _ in range(m)]
    for l in range(1, m + 1):
        rows[sigma(l) - 1][l - 1] = Fraction(1)
    return Matrix(rows)


def reflection_from_gram(gram: Matrix, i: int) -> Matrix:
    """Reflection w -> w - 2*Q(w, alpha_i)*alpha_i in the alpha basis.

    Low-level entry point for an arbitrary Gram matrix Q (unit diagonal,
    off-diagonal entries <= -1 for the infinite-order pairs); the (n, m)
    family is the special case Q_ij = -n/2.
    """
    m = gram.nrows
    if not 1 <= i <= m:
        raise IndexError(f"generator index {i} out of range 1..{m}")
    rows = [list(r) for r in Matrix.identity(m).rows]
    rows[i - 1] = [(Fraction(int(j == i - 1)) - 2 * gram.rows[i - 1][j])
                   for j in range(m)]
    return Matrix(rows)


def dual_reflection_from_gram(gram: Matrix, i: int) -> Matrix:
    """The same reflection acting on the dual basis: the transpose."""
    return reflection_from_gram(gram, i).transpose()


class CoxeterSystem:
    """The rank-m reflection group of the (n, m) family.

    The Gram matrix has 1 on the diagonal and -n/2 off it; for n = 1 the
    products of two distinct generators have order 3, for n >= 2 infinite
    order (the group is then a free product of m copies of Z/2Z).
    """

    def __init__(self, n: int, m: int, gram: Matrix):
        self.n = n
        self.m = m
        self.gram = gram
        self.lorentzian = gram.signature() == (m - 1, 1, 0)
        self._dual_cache: dict[int, Matrix] = {}
        self._quadric: Matrix | None = None

    def __repr__(self):
        return f"CoxeterSystem(n={self.n}, m={self.m})"

    def tau(self, i: int) -> Matrix:
        """Generator matrix in the primal (simple-root) basis."""
        return reflection_from_gram(self.gram, i)

    def t(self, i: int) -> Matrix:
        """Generator matrix in the dual basis: identity with column i
        replaced by (n, ..., n, -1, n, ..., n)^T."""
        if i not in self._dual_cache:
            self._dual_cache[i] = self.tau(i).transpose()
        return self._dual_cache[i]

    def quadric_matrix(self) -> Matrix:
        """Primitive integral matrix of the invariant quadric.

        The quadric carried by the inverse Gram matrix, rescaled to a
        primitive integer matrix.  Sign normalization: diagonal entries
        >= 0 when the diagonal is nonzero (so the standard basis rays
        evaluate >= 0), with the all-ones vector evaluating > 0 as the
        tie-break for a vanishing diagonal.
        """
        if self._quadric is None:
            inv = self.gram.inverse()      # ValueError when degenerate
            flat = [e for row in inv.rows for e in row]
            ints = primitive_int_vector(flat)
            m = self.m
            mat = [list(ints[r * m:(r + 1) * m]) for r in range(m)]
            diag = next((mat[i][i] for i in range(m) if mat[i][i] != 0), None)
            if diag is not None:
                sign = 1 if diag > 0 else -1
            else:
                ones_val = sum(sum(row) for row in mat)
                if ones_val != 0:
                    sign = 1 if ones_val > 0 else -1
                else:
                    first = next(e for row in mat for e in row if e != 0)
                    sign = 1 if first > 0 else -1
            self._quadric = Matrix([[sign * e for e in row] for row in mat])
        return self._quadric

    def gram_eigen_check(self) -> bool:
        """Exact verification of the two eigenvalue families of the Gram
        matrix: 1 + n/2 on the differences e_1 - e_i, and 1 - n(m-1)/2 on
        the all-ones vector."""
        n, m = self.n, self.m
        lam1 = 1 + Fraction(n, 2)
        lam2 = 1 - Fraction(n * (m - 1), 2)
        ones = tuple(Fraction(1) for _ in range(m))
        if self.gram * ones != tuple(lam2 * x for x in ones):
            return False
        for i in range(2, m + 1):
            v = tuple(Fraction(1) if k == 1 else (Fraction(-1) if k == i else Fraction(0))
                      for k in range(1, m + 1))
            if self.gram * v != tuple(lam1 * x for x in v):
                return False
        return True


def build_system(n: int, m: int, enforce_dimension_bound: bool = False) -> CoxeterSystem:
    """Assemble the (n, m) system: Gram matrix plus Lorentzian flag.

    With ``enforce_dimension_bound`` the parameters must also satisfy
    n*m - (n+1) >= 3, the threefold bound on the dimension of the
    Calabi-Yau complete intersections the group acts for.
    """
    if n < 1 or m < 2:
        raise ValueError(f"need n >= 1 and m >= 2, got ({n}, {m})")
    if enforce_dimension_bound and n * m - (n + 1) < 3:
        raise ValueError(
            f"parameters ({n}, {m}) violate n*m - (n+1) >= 3")
    half = Fraction(n, 2)
    gram = Matrix([[Fraction(1) if i == j else -half for j in range(m)]
                   for i in range(m)])
    return CoxeterSystem(n, m, gram)
