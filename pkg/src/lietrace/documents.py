"""JSON document parsing and rendering for the command line.

All rationals cross the boundary as strings in lowest terms ('7', '-3/2');
plain JSON integers are also accepted on input, floats never are.  Parse
errors carry a JSON-pointer-style path to the offending field.
"""

from __future__ import annotations

from fractions import Fraction

from .liealg import LieAlgebra, LieMorphism
from .ratlin import Matrix, format_rational, parse_rational
from .repn import Intertwiner, Representation


class InvalidDocument(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _fail(path, message):
    raise InvalidDocument(path, message)


def _rational(value, path) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        _fail(path, f"expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except ValueError as exc:
            _fail(path, str(exc))
    _fail(path, f"expected a rational string, got {type(value).__name__}")


def _matrix(value, path, rows=None, cols=None) -> Matrix:
    if not isinstance(value, list) or not value or \
            not all(isinstance(r, list) for r in value):
        _fail(path, "expected a non-empty list of rows")
    entries = [[_rational(x, f"{path}/{i}/{j}") for j, x in enumerate(row)]
               for i, row in enumerate(value)]
    width = len(entries[0])
    for i, row in enumerate(entries):
        if len(row) != width:
            _fail(f"{path}/{i}", "ragged row")
    if rows is not None and len(entries) != rows:
        _fail(path, f"expected {rows} rows, got {len(entries)}")
    if cols is not None and width != cols:
        _fail(path, f"expected {cols} columns, got {width}")
    return Matrix(entries)


def _index(value, path, dim) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < dim:
        _fail(path, f"expected a basis index in 0..{dim - 1}, got {value!r}")
    return value


# ---------------------------------------------------------------------------
# algebra documents
# ---------------------------------------------------------------------------

def algebra_from_doc(doc, path="/algebra") -> LieAlgebra:
    if not isinstance(doc, dict):
        _fail(path, "expected an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        _fail(f"{path}/dim", "expected a positive integer")
    labels = doc.get("basis")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != dim
                or not all(isinstance(x, str) for x in labels)):
            _fail(f"{path}/basis", f"expected {dim} label strings")
    brackets = {}
    raw = doc.get("brackets", [])
    if not isinstance(raw, list):
        _fail(f"{path}/brackets", "expected a list")
    for idx, item in enumerate(raw):
        here = f"{path}/brackets/{idx}"
        if not isinstance(item, dict):
            _fail(here, "expected an object")
        i = _index(item.get("left"), f"{here}/left", dim)
        j = _index(item.get("right"), f"{here}/right", dim)
        if not i < j:
            _fail(here, f"need left < right, got ({i},{j})")
        if (i, j) in brackets:
            _fail(here, f"duplicate bracket ({i},{j})")
        result = item.get("result")
        if not isinstance(result, dict):
            _fail(f"{here}/result", "expected an object of index -> rational")
        comps = {}
        for key, val in result.items():
            try:
                k = int(key)
            except (TypeError, ValueError):
                k = -1
            if not 0 <= k < dim:
                _fail(f"{here}/result/{key}", f"expected a basis index in 0..{dim - 1}")
            comps[k] = _rational(val, f"{here}/result/{key}")
        brackets[(i, j)] = comps
    try:
        return LieAlgebra(dim=dim, brackets=brackets,
                          labels=tuple(labels) if labels else ())
    except ValueError as exc:
        _fail(path, str(exc))


def algebra_to_doc(algebra: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(algebra.brackets):
        comps = algebra.brackets[(i, j)]
        brackets.append({
            "left": i, "right": j,
            "result": {str(k): format_rational(c)
                       for k, c in sorted(comps.items())}})
    return {"dim": algebra.dim, "basis": list(algebra.labels),
            "brackets": brackets}


# ---------------------------------------------------------------------------
# task documents: algebra + map + optional module/intertwiner/split
# ---------------------------------------------------------------------------

class TaskDocument:
    def __init__(self, algebra, morphism, module, intertwiner, split,
                 has_explicit_module):
        self.algebra = algebra
        self.morphism = morphism            # LieMorphism or None
        self.module = module                # Representation
        self.intertwiner = intertwiner      # Intertwiner or None (no map)
        self.split = split                  # (nil_ideal, complement) or None
        self.has_explicit_module = has_explicit_module


def task_from_doc(doc) -> TaskDocument:
    from .catalog import UnknownEntry, get
    from .repn import trivial_module

    if not isinstance(doc, dict):
        _fail("", "expected a top-level object")
    if "algebra" not in doc:
        _fail("/algebra", "missing")
    raw_algebra = doc["algebra"]
    if isinstance(raw_algebra, str):
        try:
            entry = get(raw_algebra)
        except UnknownEntry:
            _fail("/algebra", f"unknown catalog entry {raw_algebra!r}")
        algebra = entry.algebra
        if "split" not in doc and entry.split is not None:
            split = entry.split
        else:
            split = None
    else:
        algebra = algebra_from_doc(raw_algebra, "/algebra")
        split = None

    module = trivial_module(algebra)
    has_module = "module" in doc
    if has_module:
        module = module_from_doc(doc["module"], algebra, "/module")

    morphism = None
    if "map" in doc:
        raw_map = doc["map"]
        if not isinstance(raw_map, dict) or "matrix" not in raw_map:
            _fail("/map", "expected an object with a 'matrix' field")
        matrix = _matrix(raw_map["matrix"], "/map/matrix",
                         rows=algebra.dim, cols=algebra.dim)
        morphism = LieMorphism(source=algebra, target=algebra, matrix=matrix)

    intertwiner = None
    if morphism is not None:
        if "intertwiner" in doc:
            raw_xi = doc["intertwiner"]
            if not isinstance(raw_xi, dict) or "matrix" not in raw_xi:
                _fail("/intertwiner", "expected an object with a 'matrix' field")
            matrix = _matrix(raw_xi["matrix"], "/intertwiner/matrix",
                             rows=module.dim, cols=module.dim)
        else:
            matrix = Matrix.identity(module.dim)
        intertwiner = Intertwiner(morphism=morphism, module=module,
                                  matrix=matrix)
    elif "intertwiner" in doc:
        _fail("/intertwiner", "an intertwiner needs a map")

    if "split" in doc:
        raw_split = doc["split"]
        if not isinstance(raw_split, dict):
            _fail("/split", "expected an object")
        ideal = raw_split.get("nil_ideal")
        comp = raw_split.get("complement")
        if not isinstance(ideal, list) or not isinstance(comp, list):
            _fail("/split", "expected 'nil_ideal' and 'complement' index lists")
        ideal = [_index(x, f"/split/nil_ideal/{k}", algebra.dim)
                 for k, x in enumerate(ideal)]
        comp = [_index(x, f"/split/complement/{k}", algebra.dim)
                for k, x in enumerate(comp)]
        split = (tuple(ideal), tuple(comp))

    return TaskDocument(algebra=algebra, morphism=morphism, module=module,
                        intertwiner=intertwiner, split=split,
                        has_explicit_module=has_module)


def module_from_doc(doc, algebra, path="/module") -> Representation:
    if not isinstance(doc, dict):
        _fail(path, "expected an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        _fail(f"{path}/dim", "expected a positive integer")
    raw_actions = doc.get("actions")
    if not isinstance(raw_actions, list) or len(raw_actions) != algebra.dim:
        _fail(f"{path}/actions", f"expected {algebra.dim} action matrices")
    actions = [_matrix(a, f"{path}/actions/{i}", rows=dim, cols=dim)
               for i, a in enumerate(raw_actions)]
    return Representation(algebra=algebra, dim=dim, actions=tuple(actions))


def module_to_doc(module: Representation) -> dict:
    return {"dim": module.dim,
            "actions": [matrix_to_doc(a) for a in module.actions]}


def matrix_to_doc(m: Matrix) -> list:
    return [[format_rational(x) for x in row] for row in m.entries]
