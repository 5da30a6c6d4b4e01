"""The (n, m) = (2, 3) family member cut out by a symmetric form.

When the defining form is invariant under swapping the first two factors,
the map through models 1 and 2 becomes a biregular involution a, and the
group acting on the movable cone is generated by a and the infinite-order
map b through models 1 and 3:  Z/2 * Z, with a b a equal to the map
through models 2 and 3.  The fundamental region is the quadrilateral half
of the general hexagon cut along the symmetry axis, and the
pseudoeffective cone acquires boundary segments tangent to the quadric.

Everything here is hard-coded to (n, m) = (2, 3); no other parameters
produce this picture concretely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .atlas import isotropy_value
from .bir import psi_matrix
from .coxeter import CoxeterSystem, Permutation, build_system, perm_matrix
from .linalg import Matrix, dot, primitive_int_vector


def base_system() -> CoxeterSystem:
    return build_system(2, 3)


def sym_generators() -> tuple[Matrix, Matrix]:
    """The two generators acting on divisor classes: the coordinate swap
    a (order two) and the infinite-order map b through models 1 and 3."""
    a = perm_matrix(Permutation.transposition(3, 1, 2))
    b = psi_matrix(base_system(), 1, 3)
    return a, b


def sym_relation_check() -> bool:
    """a * b * a must equal the map through models 2 and 3 exactly."""
    a, b = sym_generators()
    return a * b * a == psi_matrix(base_system(), 2, 3)


def sym_fundamental_domain() -> tuple[tuple[int, ...], ...]:
    """Rays of the quadrilateral fundamental region, in the cyclic order of
    the affine chart: e3, (-1,2,2), e2, (2,2,-1)."""
    return ((0, 0, 1), (-1, 2, 2), (0, 1, 0), (2, 2, -1))


@dataclass(frozen=True)
class TangentLine:
    """A line p^T * Qhat * x = 0 tangent to the quadric at the point p."""

    coefficients: tuple[int, int, int]

    def evaluate(self, v):
        return dot(self.coefficients, tuple(v))


def tangent_line(p) -> TangentLine:
    """Tangent line to the quadric conic at a point of the conic."""
    sys = base_system()
    p = tuple(Fraction(x) for x in p)
    if isotropy_value(sys, p) != 0:
        raise ValueError(f"{p} is not on the quadric")
    coeffs = primitive_int_vector(sys.quadric_matrix() * p)
    return TangentLine(coeffs)


def d_classes() -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two integral divisor classes at the tangent-line crossings.

    D1 sits where the tangents at e3 and at (-1,2,2) meet; D2 is its image
    under the swap a.  Each class is twice the primitive ray generator,
    matching the integral divisors the construction produces: D1 =
    (-2, 2, 6) and D2 = (2, -2, 6).
    """
    l1 = tangent_line((0, 0, 1)).coefficients
    l2 = tangent_line((-1, 2, 2)).coefficients
    cross = (l1[1] * l2[2] - l1[2] * l2[1],
             l1[2] * l2[0] - l1[0] * l2[2],
             l1[0] * l2[1] - l1[1] * l2[0])
    ray = primitive_int_vector(cross)
    if sum(ray) < 0:
        ray = tuple(-x for x in ray)
    d1 = tuple(2 * x for x in ray)
    d2 = (d1[1], d1[0], d1[2])
    return d1, d2


# ---------------------------------------------------------------------------
# words in Z/2 * Z


@dataclass(frozen=True)
class SymWord:
    """Normal form in Z/2 * Z: alternating syllables ('a', 1) / ('b', k)."""

    syllables: tuple[tuple[str, int], ...]

    @staticmethod
    def identity() -> "SymWord":
        return SymWord(())

    @staticmethod
    def from_letters(letters) -> "SymWord":
        """Build from a sequence over {'a', 'b', 'B'} (B the inverse of b)."""
        syl: list[list] = []
        for ch in letters:
            if ch == "a":
                if syl and syl[-1][0] == "a":
                    syl.pop()
                else:
                    syl.append(["a", 1])
            elif ch in ("b", "B"):
                step = 1 if ch == "b" else -1
                if syl and syl[-1][0] == "b":
                    syl[-1][1] += step
                    if syl[-1][1] == 0:
                        syl.pop()
                else:
                    syl.append(["b", step])
            else:
                raise ValueError(f"unknown letter {ch!r}")
        return SymWord(tuple((g, k) for g, k in syl))

    @property
    def syllable_length(self) -> int:
        return len(self.syllables)

    def matrix(self) -> Matrix:
        a, b = sym_generators()
        out = Matrix.identity(3)
        for gen, k in self.syllables:
            out = out * (a if gen == "a" else b ** k)
        return out

    def spell(self) -> str:
        if not self.syllables:
            return "1"
        parts = []
        for gen, k in self.syllables:
            parts.append(gen if k == 1 else f"{gen}^{k}")
        return ".".join(parts)


def sym_words(depth: int):
    """All freely reduced words over {a, b, b^-1} of letter length <= depth,
    as SymWord normal forms, breadth-first."""
    if depth < 0:
        raise ValueError("negative depth")
    frontier = [""]
    yield SymWord.identity()
    for _ in range(depth):
        nxt = []
        for w in frontier:
            last = w[-1] if w else None
            for ch in "abB":
                if (last == "a" and ch == "a") or \
                   (last == "b" and ch == "B") or (last == "B" and ch == "b"):
                    continue
                nxt.append(w + ch)
                yield SymWord.from_letters(w + ch)
        frontier = nxt


@dataclass(frozen=True)
class SymChamber:
    """A translate of the quadrilateral fundamental region."""

    word: SymWord
    rays: tuple[tuple[int, ...], ...]     # cyclic order preserved

    def ray_key(self):
        return tuple(sorted(self.rays))

    def interior_point(self) -> tuple[int, ...]:
        return tuple(sum(r[k] for r in self.rays) for k in range(3))


def sym_enumerate(depth: int) -> list[SymChamber]:
    """Translates g . Pi of the quadrilateral for all reduced words up to
    the given depth, deduplicated by canonical ray set."""
    base = sym_fundamental_domain()
    seen = set()
    out = []
    for word in sym_words(depth):
        mat = word.matrix()
        rays = tuple(primitive_int_vector(mat * r) for r in base)
        key = tuple(sorted(rays))
        if key in seen:
            continue
        seen.add(key)
        out.append(SymChamber(word, rays))
    return out


# ---------------------------------------------------------------------------
# expected pseudoeffective boundary


@dataclass(frozen=True)
class PsefPatch:
    """A piece of pseudoeffective-boundary data attached to one group
    translate.  ``status`` separates the proven boundary segments from the
    conjectural tangential gluing read off the expected picture."""

    word: SymWord
    label: str
    rays: tuple[tuple[int, ...], ...]
    status: str          # "proven" | "expected"


def psef_patches(depth: int) -> list[PsefPatch]:
    """Boundary data of the expected pseudoeffective cone up to depth.

    Per translate g: the segment [g.D1, g.D2] (tangent to the quadric at
    g.e3) and the two tangent segments [g.D1, g.(-1,2,2)] and
    [g.D2, g.(2,-1,2)] are proven boundary pieces; the filled cones glued
    tangentially at g.D1 and g.D2 are emitted as the expected layer.

    Endpoints are exact images of the integral divisor classes (D1 itself
    is twice its primitive ray generator), not rescaled ray generators.
    """
    d1, d2 = d_classes()
    touch1 = (-1, 2, 2)          # tangency point shared with D1
    touch2 = (2, -1, 2)          # its swap image, shared with D2
    e3 = (0, 0, 1)
    seen = set()
    out: list[PsefPatch] = []

    def emit(word, label, rays, status):
        # geometric dedup: the swap a interchanges the D1- and D2-families,
        # so the same segment can arrive under either label
        key = tuple(sorted(rays))
        if key in seen:
            return
        seen.add(key)
        out.append(PsefPatch(word, label, rays, status))

    for word in sym_words(depth):
        mat = word.matrix()

        def g(v, mat=mat):
            image = mat * v
            assert all(x.denominator == 1 for x in image)
            return tuple(x.numerator for x in image)

        gd1, gd2 = g(d1), g(d2)
        emit(word, "segment-d1-d2", (gd1, gd2), "proven")
        emit(word, "segment-d1-tangent", (gd1, g(touch1)), "proven")
        emit(word, "segment-d2-tangent", (gd2, g(touch2)), "proven")
        emit(word, "glued-cone-d1", (g(e3), gd1, g(touch1)), "expected")
        emit(word, "glued-cone-d2", (g(e3), gd2, g(touch2)), "expected")
    return out
