"""Chamber geometry of the movable cone.

The nef cone is the standard simplicial cone on the hyperplane classes
H_1, ..., H_m.  Its orbit under the group generated by the t_i tiles the
effective movable cone; chambers are indexed by freely reduced t-words.
This module enumerates that tiling, classifies divisor classes to a marked
minimal model by walking back to the fundamental region, and samples the
boundary (apex eigenvectors over the quadratic field plus rational rays).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bir import (BudgetError, GroupElementNF, PairClass, PsiWord,
                  _require_infinite_order, eigen_pair, psi_from_t,
                  t_normal_form, word_budget)
from .coxeter import CoxeterSystem, Permutation
from .exact import QuadExt
from .linalg import Matrix, dot, primitive_int_vector, primitive_quad_vector

DEFAULT_MAX_STEPS = 1000


def word_matrix(sys: CoxeterSystem, letters) -> Matrix:
    out = Matrix.identity(sys.m)
    for k in letters:
        out = out * sys.t(k)
    return out


def reduced_words(sys: CoxeterSystem, depth: int, budget: int | None = None):
    """All freely reduced t-words of length <= depth with their matrices,
    in breadth-first order (by length, then lexicographically)."""
    if depth < 0:
        raise ValueError("negative depth")
    m = sys.m
    cap = word_budget() if budget is None else budget
    count, level = 1, m
    for _ in range(depth):
        count += level
        level *= m - 1
    if count > cap:
        raise BudgetError(f"{count} words at depth {depth} exceed the budget {cap}")

    frontier = [((), Matrix.identity(m))]
    yield frontier[0]
    for _ in range(depth):
        nxt = []
        for letters, mat in frontier:
            last = letters[-1] if letters else None
            for k in range(1, m + 1):
                if k != last:
                    item = (letters + (k,), mat * sys.t(k))
                    nxt.append(item)
                    yield item
        frontier = nxt


@dataclass(frozen=True)
class Chamber:
    """A translate of the nef cone: m primitive integer rays plus the
    reduced t-word that produces it.  ``model`` marks the fundamental-
    region chambers (0 for the nef cone itself, i for its flop images)."""

    rays: tuple[tuple[int, ...], ...]
    word: tuple[int, ...]
    model: int | None = None

    def ray_key(self):
        return tuple(sorted(self.rays))

    def interior_point(self) -> tuple[int, ...]:
        return tuple(sum(r[k] for r in self.rays) for k in range(len(self.rays[0])))


def _chamber_from_matrix(mat: Matrix, word, model=None) -> Chamber:
    rays = tuple(primitive_int_vector(col) for col in mat.columns())
    return Chamber(rays, tuple(word), model)


def fundamental_domain(sys: CoxeterSystem) -> list[Chamber]:
    """The m+1 chambers whose union is one fundamental region: the nef
    cone (model 0) and its m flop images t_i . Nef (model i)."""
    out = [_chamber_from_matrix(Matrix.identity(sys.m), (), 0)]
    for i in range(1, sys.m + 1):
        out.append(_chamber_from_matrix(sys.t(i), (i,), i))
    return out


def enumerate_chambers(sys: CoxeterSystem, depth: int,
                       budget: int | None = None) -> list[Chamber]:
    """One chamber per freely reduced t-word of length <= depth."""
    _require_infinite_order(sys)
    return [_chamber_from_matrix(mat, letters)
            for letters, mat in reduced_words(sys, depth, budget)]


class ClassificationError(Exception):
    """Raised when coordinate reduction fails to reach the nef cone."""

    def __init__(self, message, last_iterate, steps):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.steps = steps


@dataclass(frozen=True)
class ClassificationResult:
    """Where a divisor class lives in the chamber structure.

    Reconstruction contract: with W the matrix of ``t_word``, the input
    class equals W * nef_coords; equivalently it equals
    (psi-word matrix) * t_model * P(perm) * nef_coords, which expresses the
    class as the psi-word translate of a class pulled back from the marked
    minimal model ``model_index``.
    """

    t_word: tuple[int, ...]
    psi_word: PsiWord
    model_index: int
    perm: Permutation
    nef_coords: tuple[Fraction, ...]


def classify(sys: CoxeterSystem, coords, max_steps: int = DEFAULT_MAX_STEPS) -> ClassificationResult:
    """Reduce a divisor class to the nef cone and read off its chamber.

    While some coordinate is negative, apply the generator of the most
    negative coordinate (smallest index on ties) and record the letter.
    Interior points of the tiled cone reach all-nonnegative coordinates in
    exactly the word length of their chamber; points outside oscillate and
    hit the step cap, which raises ``ClassificationError``.
    """
    _require_infinite_order(sys)
    vec = tuple(Fraction(x) for x in coords)
    if len(vec) != sys.m:
        raise ValueError(f"expected {sys.m} coordinates")
    if all(x == 0 for x in vec):
        raise ValueError("zero vector has no chamber")
    letters: list[int] = []
    for _ in range(max_steps):
        worst = min(vec)
        if worst >= 0:
            break
        i = vec.index(worst) + 1
        letters.append(i)
        vec = sys.t(i) * vec
    else:
        if min(vec) < 0:
            raise ClassificationError(
                f"no nonnegative iterate within {max_steps} steps "
                "(class outside the tiled cone, or cap too small)",
                vec, max_steps)
    word = tuple(letters)
    psi = psi_from_t(sys, word)
    residual = t_normal_form(sys, psi).inverse() * GroupElementNF(word, Permutation.identity(sys.m))
    if residual.t_length > 1:
        raise ArithmeticError("residual of the psi-word translation is not "
                              "a single marking")
    model = residual.letters[0] if residual.letters else 0
    return ClassificationResult(word, psi, model, residual.perm, vec)


@dataclass(frozen=True)
class BoundaryPatch:
    """One translate of a boundary cone: an apex ray over the quadratic
    field (all-zero when n = 2) and the m-2 transported rational rays."""

    pair: tuple[int, int]
    word: tuple[int, ...]
    apex: tuple[QuadExt, ...]
    base_rays: tuple[tuple[int, ...], ...]

    @property
    def has_apex(self) -> bool:
        return any(bool(x) for x in self.apex)


def _apex_key(apex):
    return tuple((x.a, x.b, x.d) for x in apex)


def boundary_patches(sys: CoxeterSystem, depth: int,
                     budget: int | None = None) -> list[BoundaryPatch]:
    """Boundary cones of the movable cone, sampled to word length ``depth``.

    For every unordered generator pair (i, j) and every reduced t-word w:
    the cone spanned by w.v (v the eigenvector of t_i t_j for the
    eigenvalue > 1; zero for n = 2) and the rays w.H_k for k != i, j.
    Patches are deduplicated by their canonical ray data, keeping the
    first (breadth-first) word that produces each.
    """
    _require_infinite_order(sys)
    m = sys.m
    pairs = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    apexes = {}
    for (i, j) in pairs:
        data = eigen_pair(sys, i, j)
        apexes[(i, j)] = None if isinstance(data, PairClass) else data.vector

    zero_apex = tuple(QuadExt(0) for _ in range(m))
    seen = set()
    out: list[BoundaryPatch] = []
    for letters, mat in reduced_words(sys, depth, budget):
        for (i, j) in pairs:
            base = tuple(sorted(primitive_int_vector(mat.column(k))
                                for k in range(1, m + 1) if k not in (i, j)))
            vec = apexes[(i, j)]
            if vec is None:
                apex = zero_apex
            else:
                apex = primitive_quad_vector(mat * vec)
            key = (_apex_key(apex), base)
            if key in seen:
                continue
            seen.add(key)
            out.append(BoundaryPatch((i, j), tuple(letters), apex, base))
    return out


def project_affine(v):
    """Scale a vector onto the affine chart of coordinate-sum one."""
    vals = tuple(Fraction(x) if isinstance(x, int) else x for x in v)
    total = vals[0]
    for x in vals[1:]:
        total = total + x
    if not total:
        raise ValueError("zero coordinate sum: direction at infinity")
    return tuple(x / total for x in vals)


def isotropy_value(sys: CoxeterSystem, v):
    """Evaluate the invariant quadric on a vector: v^T * Qhat * v."""
    qhat = sys.quadric_matrix()
    return dot(v, qhat * tuple(v))
