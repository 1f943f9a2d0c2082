"""The on-disk structure format: one JSON document per bundle.

A document needs "version": 1 and then any combination of sections:

    algebra        {dim, bracket (n x n x n), twist (n x n)}
    representation {carrier_dim, beta, action (one matrix per basis vector)}
    cobracket      n x n x n array, delta(e_k) = plane k
    rmatrix        n x n array
    lsa            {dim, product (m x m x m), psi (m x m)}
    ooperator      {"T": n x m array}

plus an optional "name" and an optional "builtin" reference ("aff2" or
"builtin:aff2") that is resolved first, with explicit sections layered on
top. Scalars are rational strings "p/q" (or "p"); bare JSON integers are
accepted on input. Any dense array may instead be written sparsely as
{"entries": [[indices..., "p/q"], ...]} with 1-based indices, matching
the e1, e2, ... naming everywhere else; output is always dense.

parse_structure(emit_structure(s)) == s exactly, including names.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace

from .bialgebra import Cobracket
from .coboundary import RMatrix
from .corpus import builtin_sections, lookup_builtin
from .hom_lie import HomLieAlgebra
from .operators import HomLeftSymmetric
from .representation import Representation
from .tensor import Matrix, Q, ShapeError, Tensor3, format_q


class StructureParseError(ValueError):
    """Bad structure document; .path points at the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class Structure:
    """A parsed document: domain objects, ready for the check runners."""

    name: str = ""
    algebra: HomLieAlgebra | None = None
    representation: Representation | None = None
    cobracket: Cobracket | None = None
    rmatrix: RMatrix | None = None
    lsa: HomLeftSymmetric | None = None
    ooperator_t: Matrix | None = None


_RATIONAL = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def _parse_q(node, path: str) -> Q:
    if isinstance(node, int) and not isinstance(node, bool):
        return Q(node)
    if isinstance(node, str):
        if not _RATIONAL.match(node):
            raise StructureParseError(
                path, f"not a rational: {node!r} (want 'p/q' or 'p')"
            )
        return Q(node)
    raise StructureParseError(path, f"expected a rational string, got {node!r}")


def _require_list(node, path: str) -> list:
    if not isinstance(node, list):
        raise StructureParseError(path, "expected an array")
    return node


def _sparse_entries(node, path: str, rank: int):
    entries = _require_list(node.get("entries"), f"{path}.entries")
    out = []
    for pos, row in enumerate(entries):
        here = f"{path}.entries[{pos}]"
        row = _require_list(row, here)
        if len(row) != rank + 1:
            raise StructureParseError(
                here, f"want {rank} indices plus a value, got {len(row)} items"
            )
        idx = []
        for x in row[:rank]:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise StructureParseError(here, "indices are 1-based integers")
            idx.append(x - 1)
        out.append((idx, _parse_q(row[rank], here)))
    return out


def _parse_matrix(node, path: str, nrows: int, ncols: int) -> Matrix:
    if isinstance(node, dict):
        rows = [[Q(0)] * ncols for _ in range(nrows)]
        for idx, val in _sparse_entries(node, path, 2):
            i, j = idx
            if i >= nrows or j >= ncols:
                raise StructureParseError(
                    path, f"entry ({i + 1}, {j + 1}) outside {nrows} x {ncols}"
                )
            rows[i][j] = val
        return Matrix(rows)
    node = _require_list(node, path)
    if len(node) != nrows:
        raise StructureParseError(path, f"want {nrows} rows, got {len(node)}")
    rows = []
    for i, rnode in enumerate(node):
        rnode = _require_list(rnode, f"{path}[{i}]")
        if len(rnode) != ncols:
            raise StructureParseError(
                f"{path}[{i}]", f"want {ncols} columns, got {len(rnode)}"
            )
        rows.append([_parse_q(x, f"{path}[{i}][{j}]") for j, x in enumerate(rnode)])
    return Matrix(rows)


def _parse_tensor3(node, path: str, dims: tuple[int, int, int]) -> Tensor3:
    d1, d2, d3 = dims
    if isinstance(node, dict):
        box = [[[Q(0)] * d3 for _ in range(d2)] for _ in range(d1)]
        for idx, val in _sparse_entries(node, path, 3):
            i, j, k = idx
            if i >= d1 or j >= d2 or k >= d3:
                raise StructureParseError(
                    path,
                    f"entry ({i + 1}, {j + 1}, {k + 1}) outside "
                    f"{d1} x {d2} x {d3}",
                )
            box[i][j][k] = val
        return Tensor3(box)
    node = _require_list(node, path)
    if len(node) != d1:
        raise StructureParseError(path, f"want {d1} planes, got {len(node)}")
    box = []
    for i, plane in enumerate(node):
        plane = _require_list(plane, f"{path}[{i}]")
        if len(plane) != d2:
            raise StructureParseError(
                f"{path}[{i}]", f"want {d2} rows, got {len(plane)}"
            )
        rows = []
        for j, rnode in enumerate(plane):
            rnode = _require_list(rnode, f"{path}[{i}][{j}]")
            if len(rnode) != d3:
                raise StructureParseError(
                    f"{path}[{i}][{j}]", f"want {d3} entries, got {len(rnode)}"
                )
            rows.append(
                [_parse_q(x, f"{path}[{i}][{j}][{k}]") for k, x in enumerate(rnode)]
            )
        box.append(rows)
    return Tensor3(box)


def _parse_dim(node, path: str) -> int:
    if not isinstance(node, int) or isinstance(node, bool) or node < 1:
        raise StructureParseError(path, "dimension must be a positive integer")
    return node


def _domain(path: str, fn):
    """Run a domain constructor, turning its ShapeError into a parse error."""
    try:
        return fn()
    except ShapeError as e:
        raise StructureParseError(path, str(e)) from None


def parse_structure(text: str) -> Structure:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructureParseError("", f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return structure_from_doc(doc)


def structure_from_doc(doc) -> Structure:
    if not isinstance(doc, dict):
        raise StructureParseError("", "top level must be an object")
    if doc.get("version") != 1:
        raise StructureParseError("version", "missing or unsupported (want 1)")
    known = {
        "version",
        "name",
        "builtin",
        "algebra",
        "representation",
        "cobracket",
        "rmatrix",
        "lsa",
        "ooperator",
    }
    for key in doc:
        if key not in known:
            raise StructureParseError(key, "unknown field")

    name = doc.get("name", "")
    if not isinstance(name, str):
        raise StructureParseError("name", "must be a string")

    base = Structure()
    ref = doc.get("builtin")
    if ref is not None:
        if not isinstance(ref, str):
            raise StructureParseError("builtin", "must be a string")
        short = ref.removeprefix("builtin:")
        try:
            base = builtin_structure(short)
        except KeyError as e:
            raise StructureParseError("builtin", str(e.args[0])) from None
        if not name:
            name = base.name

    algebra = base.algebra
    if "algebra" in doc:
        sec = doc["algebra"]
        if not isinstance(sec, dict):
            raise StructureParseError("algebra", "expected an object")
        n = _parse_dim(sec.get("dim"), "algebra.dim")
        bracket = _parse_tensor3(sec.get("bracket"), "algebra.bracket", (n, n, n))
        twist = _parse_matrix(sec.get("twist"), "algebra.twist", n, n)
        algebra = HomLieAlgebra(bracket, twist, name)
    elif algebra is not None and name != base.name:
        algebra = replace(algebra, label=name)

    representation = base.representation
    if "representation" in doc:
        sec = doc["representation"]
        if not isinstance(sec, dict):
            raise StructureParseError("representation", "expected an object")
        if algebra is None:
            raise StructureParseError(
                "representation", "needs an algebra section to act on"
            )
        m = _parse_dim(sec.get("carrier_dim"), "representation.carrier_dim")
        beta = _parse_matrix(sec.get("beta"), "representation.beta", m, m)
        acts = _require_list(sec.get("action"), "representation.action")
        if len(acts) != algebra.dim:
            raise StructureParseError(
                "representation.action",
                f"want one matrix per basis vector ({algebra.dim}), "
                f"got {len(acts)}",
            )
        action = [
            _parse_matrix(a, f"representation.action[{i}]", m, m)
            for i, a in enumerate(acts)
        ]
        representation = Representation(algebra, beta, action)
    elif representation is not None and algebra is not None:
        rep = representation
        representation = _domain(
            "representation", lambda: Representation(algebra, rep.beta, rep.action)
        )

    cobracket = base.cobracket
    if "cobracket" in doc:
        if algebra is None:
            raise StructureParseError("cobracket", "needs an algebra section")
        n = algebra.dim
        coeffs = _parse_tensor3(doc["cobracket"], "cobracket", (n, n, n))
        cobracket = Cobracket(algebra, coeffs)
    elif cobracket is not None and algebra is not None:
        cb = cobracket
        cobracket = _domain("cobracket", lambda: Cobracket(algebra, cb.coeffs))

    rmatrix = base.rmatrix
    if "rmatrix" in doc:
        if algebra is None:
            raise StructureParseError("rmatrix", "needs an algebra section")
        n = algebra.dim
        rmatrix = RMatrix(algebra, _parse_matrix(doc["rmatrix"], "rmatrix", n, n))
    elif rmatrix is not None and algebra is not None:
        rm = rmatrix
        rmatrix = _domain("rmatrix", lambda: RMatrix(algebra, rm.coeffs))

    lsa = base.lsa
    if "lsa" in doc:
        sec = doc["lsa"]
        if not isinstance(sec, dict):
            raise StructureParseError("lsa", "expected an object")
        m = _parse_dim(sec.get("dim"), "lsa.dim")
        product = _parse_tensor3(sec.get("product"), "lsa.product", (m, m, m))
        psi = _parse_matrix(sec.get("psi"), "lsa.psi", m, m)
        lsa = HomLeftSymmetric(product, psi, name)
    elif lsa is not None and name != base.name:
        lsa = replace(lsa, label=name)

    ooperator_t = base.ooperator_t
    if "ooperator" in doc:
        sec = doc["ooperator"]
        if not isinstance(sec, dict) or "T" not in sec:
            raise StructureParseError("ooperator", 'expected an object with "T"')
        if algebra is not None:
            nrows = algebra.dim
            ncols = (
                representation.carrier_dim
                if representation is not None
                else algebra.dim
            )
        elif lsa is not None:
            nrows = ncols = lsa.dim
        else:
            raise StructureParseError(
                "ooperator", "needs an algebra+representation or an lsa section"
            )
        ooperator_t = _parse_matrix(sec["T"], "ooperator.T", nrows, ncols)

    return Structure(
        name=name,
        algebra=algebra,
        representation=representation,
        cobracket=cobracket,
        rmatrix=rmatrix,
        lsa=lsa,
        ooperator_t=ooperator_t,
    )


def _matrix_doc(m: Matrix) -> list:
    return [[format_q(x) for x in row] for row in m.rows]


def _tensor3_doc(t: Tensor3) -> list:
    return [[[format_q(x) for x in row] for row in plane] for plane in t.entries]


def structure_to_doc(s: Structure) -> dict:
    doc: dict = {"version": 1}
    if s.name:
        doc["name"] = s.name
    if s.algebra is not None:
        doc["algebra"] = {
            "dim": s.algebra.dim,
            "bracket": _tensor3_doc(s.algebra.bracket),
            "twist": _matrix_doc(s.algebra.twist),
        }
    if s.representation is not None:
        doc["representation"] = {
            "carrier_dim": s.representation.carrier_dim,
            "beta": _matrix_doc(s.representation.beta),
            "action": [_matrix_doc(a) for a in s.representation.action],
        }
    if s.cobracket is not None:
        doc["cobracket"] = _tensor3_doc(s.cobracket.coeffs)
    if s.rmatrix is not None:
        doc["rmatrix"] = _matrix_doc(s.rmatrix.coeffs)
    if s.lsa is not None:
        doc["lsa"] = {
            "dim": s.lsa.dim,
            "product": _tensor3_doc(s.lsa.product),
            "psi": _matrix_doc(s.lsa.psi),
        }
    if s.ooperator_t is not None:
        doc["ooperator"] = {"T": _matrix_doc(s.ooperator_t)}
    return doc


def emit_structure(s: Structure) -> str:
    return json.dumps(structure_to_doc(s), indent=2) + "\n"


def load_structure(path: str) -> Structure:
    with open(path, encoding="utf-8") as f:
        return parse_structure(f.read())


def builtin_structure(name: str) -> Structure:
    """The named builtin as a Structure whose parts carry the builtin name."""
    entry = lookup_builtin(name)
    secs = builtin_sections(entry.name)
    algebra = secs.get("algebra")
    if algebra is not None and algebra.label != entry.name:
        algebra = replace(algebra, label=entry.name)
    cobracket = secs.get("cobracket")
    if cobracket is not None:
        cobracket = Cobracket(algebra, cobracket.coeffs)
    lsa = secs.get("lsa")
    if lsa is not None and lsa.label != entry.name:
        lsa = replace(lsa, label=entry.name)
    return Structure(
        name=entry.name,
        algebra=algebra,
        cobracket=cobracket,
        lsa=lsa,
        ooperator_t=secs.get("ooperator"),
    )
