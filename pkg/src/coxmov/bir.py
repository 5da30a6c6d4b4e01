"""The birational automorphism group as exact matrices and words.

Generators psi_{i,j} (compositions of three flops through the minimal
models X_i and X_j) act on divisor classes by the integer matrix
t_i * t_j * t_i * P(i j).  For n >= 2 every group element factors uniquely
as a freely reduced word in the involutions t_k times a coordinate
permutation, which is the normal form used for all word problems here.
Word-level operations reject n = 1, where the braid relation
(t_i t_j)^3 = 1 breaks free reduction; the matrices themselves are fine
for any n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

from .coxeter import CoxeterSystem, Permutation, perm_matrix
from .exact import QuadExt, quad_roots
from .linalg import Matrix, nullspace_vector, primitive_quad_vector

DEFAULT_WORD_BUDGET = 10 ** 6
BUDGET_ENV_VAR = "COXMOV_WORD_BUDGET"


class BudgetError(ValueError):
    """An enumeration would exceed the configured word-count budget."""


def word_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_WORD_BUDGET
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer: {raw!r}") from exc
    if val <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive")
    return val


def _require_infinite_order(sys: CoxeterSystem):
    if sys.n < 2:
        raise ValueError("word operations need n >= 2 "
                         "(for n = 1 the generators satisfy (t_i t_j)^3 = 1)")


# ---------------------------------------------------------------------------
# generator matrices


def flop_pullback(sys: CoxeterSystem, i: int, j: int) -> Matrix:
    """Pullback matrix of the flop between minimal models X_i and X_j.

    Model indices run 0..m with 0 the base model; the matrix is expressed
    in the hyperplane bases of the two models.  For i < j it is
    t_j * P(cycle(i+1..j))^{-1}, for i > j it is t_{j+1} * P(cycle(j+1..i)).
    """
    m = sys.m
    if not (0 <= i <= m and 0 <= j <= m):
        raise IndexError(f"model index out of range 0..{m}")
    if i == j:
        raise ValueError("flop needs two distinct models")
    if i < j:
        cyc = Permutation.from_cycle(m, range(i + 1, j + 1)).inverse()
        return sys.t(j) * perm_matrix(cyc)
    cyc = Permutation.from_cycle(m, range(j + 1, i + 1))
    return sys.t(j + 1) * perm_matrix(cyc)


def psi_matrix(sys: CoxeterSystem, i: int, j: int) -> Matrix:
    """Pullback matrix of the birational self-map through models i and j:
    t_i * t_j * t_i * P(i j).  Valid for either order of the indices;
    psi_{j,i} is the inverse of psi_{i,j}."""
    m = sys.m
    if not (1 <= i <= m and 1 <= j <= m):
        raise IndexError(f"generator index out of range 1..{m}")
    if i == j:
        raise ValueError("generator needs two distinct indices")
    swap = perm_matrix(Permutation.transposition(m, i, j))
    return sys.t(i) * sys.t(j) * sys.t(i) * swap


def swap_identity_holds(sys: CoxeterSystem, sigma: Permutation, i: int) -> bool:
    """Exact check of P(sigma) * t_i == t_{sigma(i)} * P(sigma)."""
    p = perm_matrix(sigma)
    return p * sys.t(i) == sys.t(sigma(i)) * p


# ---------------------------------------------------------------------------
# words and normal forms


def free_reduce(letters) -> tuple[int, ...]:
    """Cancel adjacent equal letters (each t_i is an involution)."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class GroupElementNF:
    """Normal form of a group element: reduced t-word times a permutation.

    The represented matrix is t_{k_1} * ... * t_{k_r} * P(sigma); for
    n >= 2 this factorization is unique.
    """

    letters: tuple[int, ...]
    perm: Permutation

    @staticmethod
    def identity(m: int) -> "GroupElementNF":
        return GroupElementNF((), Permutation.identity(m))

    def __mul__(self, other: "GroupElementNF") -> "GroupElementNF":
        # push the left permutation through the right t-word
        mapped = tuple(self.perm(k) for k in other.letters)
        return GroupElementNF(free_reduce(self.letters + mapped),
                              self.perm * other.perm)

    def inverse(self) -> "GroupElementNF":
        inv = self.perm.inverse()
        return GroupElementNF(tuple(inv(k) for k in reversed(self.letters)), inv)

    def matrix(self, sys: CoxeterSystem) -> Matrix:
        out = perm_matrix(self.perm)
        for k in reversed(self.letters):
            out = sys.t(k) * out
        return out

    @property
    def t_length(self) -> int:
        return len(self.letters)


class PsiWord:
    """A freely reduced word in the generators psi_{i,j}.

    Letters are stored as (i, j, exponent) with i < j and nonzero exponent;
    psi_{j,i} is recorded as psi_{i,j}^{-1}.  Adjacent letters never share
    the same index pair.
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        merged: list[list[int]] = []
        for (i, j, e) in letters:
            if i == j:
                raise ValueError("generator needs two distinct indices")
            if e == 0:
                continue
            if i > j:
                i, j, e = j, i, -e
            if merged and merged[-1][0] == i and merged[-1][1] == j:
                merged[-1][2] += e
                if merged[-1][2] == 0:
                    merged.pop()
            else:
                merged.append([i, j, e])
        self.letters = tuple((i, j, e) for i, j, e in merged)

    @staticmethod
    def generator(i: int, j: int, exponent: int = 1) -> "PsiWord":
        return PsiWord(((i, j, exponent),))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def letter_length(self) -> int:
        return sum(abs(e) for _, _, e in self.letters)

    def single_letters(self):
        """Yield the word spelled out as (i, j, +-1) letters."""
        for (i, j, e) in self.letters:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield (i, j, step)

    def __mul__(self, other: "PsiWord") -> "PsiWord":
        return PsiWord(self.letters + other.letters)

    def inverse(self) -> "PsiWord":
        return PsiWord(tuple((i, j, -e) for (i, j, e) in reversed(self.letters)))

    def __eq__(self, other):
        return isinstance(other, PsiWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        if not self.letters:
            return "PsiWord()"
        body = " ".join(f"psi[{i},{j}]^{e}" if e != 1 else f"psi[{i},{j}]"
                        for i, j, e in self.letters)
        return f"PsiWord<{body}>"


def _letter_nf(m: int, i: int, j: int, step: int) -> GroupElementNF:
    # psi_{i,j} = t_i t_j t_i * P(i j); its inverse is t_j t_i t_j * P(i j)
    swap = Permutation.transposition(m, i, j)
    if step > 0:
        return GroupElementNF((i, j, i), swap)
    return GroupElementNF((j, i, j), swap)


def t_normal_form(sys: CoxeterSystem, word: PsiWord) -> GroupElementNF:
    """Expand a psi-word into its canonical (reduced t-word, permutation)
    factorization by pushing all permutations to the right."""
    _require_infinite_order(sys)
    out = GroupElementNF.identity(sys.m)
    for (i, j, step) in word.single_letters():
        out = out * _letter_nf(sys.m, i, j, step)
    return out


def psi_word_matrix(sys: CoxeterSystem, word: PsiWord) -> Matrix:
    out = Matrix.identity(sys.m)
    for (i, j, step) in word.single_letters():
        mat = psi_matrix(sys, i, j)
        if step < 0:
            mat = psi_matrix(sys, j, i)
        out = out * mat
    return out


def psi_from_t(sys: CoxeterSystem, letters) -> PsiWord:
    """Produce a psi-word whose chamber contains the chamber of a t-word.

    Peeling two letters at a time: for w = t_a t_b (rest), emit psi_{a,b}
    and recurse on the reduced word t_b swap(rest) with swap = (a b).  The
    guarantee, tested via normal forms, is that the residual
    (psi-word)^{-1} * w has t-length <= 1, i.e. w.D lies inside the image
    of the fundamental region under the psi-word.
    """
    _require_infinite_order(sys)
    w = free_reduce(letters)
    out: list[tuple[int, int, int]] = []
    while len(w) >= 2:
        a, b = w[0], w[1]
        out.append((a, b, 1))
        mapped = tuple(b if k == a else (a if k == b else k) for k in w[2:])
        w = free_reduce((b,) + mapped)
    return PsiWord(out)


def prefix_check(sys: CoxeterSystem, word: PsiWord) -> bool:
    """The first two t-letters of the normal form must spell the leading
    generator: (i, j) for a leading psi_{i,j}, (j, i) for its inverse."""
    if word.is_empty:
        raise ValueError("empty word has no leading generator")
    nf = t_normal_form(sys, word)
    i, j, e = word.letters[0]
    expected = (i, j) if e > 0 else (j, i)
    return nf.letters[:2] == expected


@dataclass(frozen=True)
class FreeReport:
    words_checked: int
    collisions: int


def _reduced_word_count(num_gens: int, depth: int) -> int:
    # signed alphabet of size 2K, no letter followed by its inverse
    total = 0
    level = 2 * num_gens
    for _ in range(depth):
        total += level
        level *= 2 * num_gens - 1
    return total


def verify_free(sys: CoxeterSystem, depth: int,
                budget: int | None = None) -> FreeReport:
    """Enumerate all freely reduced psi-words of length <= depth and check
    pairwise distinctness of their normal forms.

    A free group of rank C(m, 2) admits no collision; the report returns
    the number of words checked and the number of collisions found.
    """
    _require_infinite_order(sys)
    if depth < 0:
        raise ValueError("negative depth")
    m = sys.m
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    cap = word_budget() if budget is None else budget
    expected = _reduced_word_count(len(pairs), depth)
    if expected > cap:
        raise BudgetError(
            f"{expected} words at depth {depth} exceed the budget {cap}")

    gens = [(i, j, s) for (i, j) in pairs for s in (1, -1)]
    nf_gens = {g: _letter_nf(m, *g) for g in gens}
    seen = {((), GroupElementNF.identity(m).perm.images)}
    words_checked = 0
    collisions = 0

    def key(nf: GroupElementNF):
        return (nf.letters, nf.perm.images)

    stack = [(GroupElementNF.identity(m), None, 0)]
    while stack:
        nf, last, length = stack.pop()
        if length >= depth:
            continue
        for g in gens:
            if last is not None and g == (last[0], last[1], -last[2]):
                continue
            child = nf * nf_gens[g]
            words_checked += 1
            k = key(child)
            if k in seen:
                collisions += 1
            else:
                seen.add(k)
            stack.append((child, g, length + 1))
    return FreeReport(words_checked, collisions)


# ---------------------------------------------------------------------------
# eigen data of the two-generator products


class PairClass(Enum):
    """Degenerate spectral types of t_i * t_j."""
    FINITE_ORDER = "finite_order"    # n = 1: the product has order 3
    UNIPOTENT = "unipotent"          # n = 2: eigenvalue 1 only, not diagonalizable


@dataclass(frozen=True)
class EigenPair:
    """The eigenvalue > 1 of t_i * t_j together with a primitive exact
    eigenvector over the quadratic field."""
    value: QuadExt
    vector: tuple[QuadExt, ...]


def eigen_pair(sys: CoxeterSystem, i: int, j: int):
    """Spectral data of t_i * t_j.

    For n >= 3 returns the EigenPair for the root lambda > 1 of
    x^2 - (n^2 - 2)x + 1; for n = 2 and n = 1 returns the matching
    PairClass marker (unipotent, finite order).
    """
    if i == j:
        raise ValueError("need two distinct indices")
    n = sys.n
    if n == 1:
        return PairClass.FINITE_ORDER
    if n == 2:
        return PairClass.UNIPOTENT
    lam, _ = quad_roots(-(n * n - 2), 1)
    prod = sys.t(i) * sys.t(j)
    shifted = Matrix([[QuadExt(e) - lam if r == c else QuadExt(e)
                       for c, e in enumerate(row)]
                      for r, row in enumerate(prod.rows)])
    vec = nullspace_vector(shifted)
    if vec is None:
        raise ArithmeticError("eigenvalue computation produced no kernel")
    return EigenPair(lam, primitive_quad_vector(vec))


def aut_codimension(n: int, m: int) -> int:
    """Codimension of the locus of forms with extra symmetry:
    (n+1)^m - (m+1)*((n+1)^2 - 1); valid (and increasing) for n, m >= 3."""
    if n < 3 or m < 3:
        raise ValueError("codimension count needs n >= 3 and m >= 3")
    return (n + 1) ** m - (m + 1) * ((n + 1) ** 2 - 1)
