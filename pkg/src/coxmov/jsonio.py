"""Deterministic JSON serialization for every exported data type.

Rationals are emitted as reduced integer-or-"p/q" strings (never floats),
quadratic scalars as {"a", "b", "d"} objects, words as integer arrays.
The schema is versioned and documented in ``schema/coxmov.schema.json``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .atlas import BoundaryPatch, Chamber, ClassificationResult
from .bir import PsiWord
from .coxeter import CoxeterSystem, Permutation
from .exact import QuadExt
from .linalg import Matrix
from .symmetric import PsefPatch, SymChamber, SymWord

SCHEMA_VERSION = "1"


# -- scalars ---------------------------------------------------------------

def frac_to_str(x) -> str:
    return str(Fraction(x))


def str_to_frac(s: str) -> Fraction:
    return Fraction(s)


def quad_to_obj(x: QuadExt) -> dict:
    return {"a": frac_to_str(x.a), "b": frac_to_str(x.b), "d": x.d}


def obj_to_quad(obj: dict) -> QuadExt:
    return QuadExt(str_to_frac(obj["a"]), str_to_frac(obj["b"]), obj["d"])


# -- aggregates -------------------------------------------------------------

def matrix_to_obj(mat: Matrix) -> list:
    return [[frac_to_str(e) for e in row] for row in mat.rows]


def obj_to_matrix(obj) -> Matrix:
    return Matrix([[str_to_frac(e) for e in row] for row in obj])


def frac_vec_to_obj(vec) -> list:
    return [frac_to_str(x) for x in vec]


def quad_vec_to_obj(vec) -> list:
    return [quad_to_obj(x) for x in vec]


def psi_word_to_obj(word: PsiWord) -> list:
    return [[i, j, e] for (i, j, e) in word.letters]


def obj_to_psi_word(obj) -> PsiWord:
    return PsiWord(tuple((i, j, e) for i, j, e in obj))


def chamber_to_obj(ch: Chamber) -> dict:
    out = {"word": list(ch.word), "rays": [list(r) for r in ch.rays]}
    if ch.model is not None:
        out["model"] = ch.model
    return out


def obj_to_chamber(obj) -> Chamber:
    return Chamber(tuple(tuple(r) for r in obj["rays"]),
                   tuple(obj["word"]), obj.get("model"))


def patch_to_obj(p: BoundaryPatch) -> dict:
    return {
        "pair": list(p.pair),
        "word": list(p.word),
        "apex": quad_vec_to_obj(p.apex),
        "base_rays": [list(r) for r in p.base_rays],
    }


def obj_to_patch(obj) -> BoundaryPatch:
    return BoundaryPatch(tuple(obj["pair"]), tuple(obj["word"]),
                         tuple(obj_to_quad(a) for a in obj["apex"]),
                         tuple(tuple(r) for r in obj["base_rays"]))


def classification_to_obj(res: ClassificationResult) -> dict:
    return {
        "t_word": list(res.t_word),
        "psi_word": psi_word_to_obj(res.psi_word),
        "model_index": res.model_index,
        "perm": list(res.perm.images),
        "nef_coords": frac_vec_to_obj(res.nef_coords),
    }


def obj_to_classification(obj) -> ClassificationResult:
    return ClassificationResult(tuple(obj["t_word"]),
                                obj_to_psi_word(obj["psi_word"]),
                                obj["model_index"],
                                Permutation(tuple(obj["perm"])),
                                tuple(str_to_frac(x) for x in obj["nef_coords"]))


def sym_word_to_obj(word: SymWord) -> list:
    return [[gen, k] for gen, k in word.syllables]


def sym_chamber_to_obj(ch: SymChamber) -> dict:
    return {"word": sym_word_to_obj(ch.word),
            "rays": [list(r) for r in ch.rays]}


def psef_patch_to_obj(p: PsefPatch) -> dict:
    return {"word": sym_word_to_obj(p.word), "label": p.label,
            "status": p.status, "rays": [list(r) for r in p.rays]}


# -- documents ---------------------------------------------------------------

def document(command: str, params: dict, body: dict) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command,
           "params": params}
    doc.update(body)
    return doc


def system_document(sys: CoxeterSystem) -> dict:
    body = {
        "gram": matrix_to_obj(sys.gram),
        "lorentzian": sys.lorentzian,
        "generators": [matrix_to_obj(sys.t(i)) for i in range(1, sys.m + 1)],
        "quadric": matrix_to_obj(sys.quadric_matrix()),
    }
    return document("system", {"n": sys.n, "m": sys.m}, body)


def chambers_document(sys: CoxeterSystem, depth: int, chambers) -> dict:
    return document("chambers", {"n": sys.n, "m": sys.m, "depth": depth},
                    {"count": len(chambers),
                     "chambers": [chamber_to_obj(c) for c in chambers]})


def classify_document(sys: CoxeterSystem, coords, res: ClassificationResult) -> dict:
    return document("classify",
                    {"n": sys.n, "m": sys.m, "class": frac_vec_to_obj(coords)},
                    {"result": classification_to_obj(res)})


def boundary_document(sys: CoxeterSystem, depth: int, patches) -> dict:
    return document("boundary", {"n": sys.n, "m": sys.m, "depth": depth},
                    {"count": len(patches),
                     "patches": [patch_to_obj(p) for p in patches]})


def symmetric_document(depth: int, layer: str, items) -> dict:
    if layer == "movable":
        body = {"count": len(items),
                "cones": [sym_chamber_to_obj(c) for c in items]}
    else:
        body = {"count": len(items),
                "patches": [psef_patch_to_obj(p) for p in items]}
    return document("symmetric", {"depth": depth, "layer": layer}, body)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"
