"""JSON file formats: algebra files, almost complex structure files, reports.

Every rational is written as a string ``"p/q"`` (or ``"p"``).

Algebra file::

    {"name": "r2r2", "dim": 4,
     "brackets": [{"i": 1, "j": 2, "terms": [{"k": 2, "coeff": "1"}]},
                  {"i": 3, "j": 4, "terms": [{"k": 4, "coeff": "1"}]}]}

Almost complex structure file (``m`` is row-major, column ``c`` is ``M e_{c+1}``)::

    {"lambda": "2", "m": [["0", "-1", "0", "1"], ...]}
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .acs4 import AlmostComplexStructure, SignatureRecord, TameReport, Verdict
from .exactla import Matrix, Subspace, parse_rational
from .lie import LieAlgebra


class FormatError(ValueError):
    """Malformed input file; the message carries the location."""


def _rational(value: Any, where: str) -> Fraction:
    if not isinstance(value, str):
        raise FormatError(f"{where}: expected a rational string like \"1/2\", got {value!r}")
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def _int(value: Any, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


def _keys(obj: Any, where: str, required: set[str], optional: set[str] = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    unknown = set(obj) - required - optional
    if unknown:
        raise FormatError(f"{where}: unknown field(s) {', '.join(sorted(unknown))}")
    missing = required - set(obj)
    if missing:
        raise FormatError(f"{where}: missing field(s) {', '.join(sorted(missing))}")
    return obj


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def algebra_from_dict(doc: Any, source: str = "<algebra>") -> LieAlgebra:
    _keys(doc, source, {"name", "dim", "brackets"})
    name = doc["name"]
    if not isinstance(name, str):
        raise FormatError(f"{source}.name: expected a string")
    n = _int(doc["dim"], f"{source}.dim")
    if n < 1:
        raise FormatError(f"{source}.dim: must be positive")
    if not isinstance(doc["brackets"], list):
        raise FormatError(f"{source}.brackets: expected a list")
    table: dict[tuple[int, int], list[Fraction]] = {}
    for bi, br in enumerate(doc["brackets"]):
        where = f"{source}.brackets[{bi}]"
        _keys(br, where, {"i", "j", "terms"})
        i, j = _int(br["i"], f"{where}.i"), _int(br["j"], f"{where}.j")
        if not (1 <= i < j <= n):
            raise FormatError(f"{where}: need 1 <= i < j <= {n}, got i={i}, j={j}")
        if (i, j) in table:
            raise FormatError(f"{where}: bracket [e{i}, e{j}] given twice")
        row = [Fraction(0)] * n
        if not isinstance(br["terms"], list):
            raise FormatError(f"{where}.terms: expected a list")
        for ti, term in enumerate(br["terms"]):
            tw = f"{where}.terms[{ti}]"
            _keys(term, tw, {"k", "coeff"})
            k = _int(term["k"], f"{tw}.k")
            if not 1 <= k <= n:
                raise FormatError(f"{tw}.k: index {k} out of range 1..{n}")
            row[k - 1] += _rational(term["coeff"], f"{tw}.coeff")
        table[(i, j)] = row
    return LieAlgebra(n, tuple(((i - 1, j - 1), tuple(v)) for (i, j), v in table.items()), name)


def algebra_to_dict(g: LieAlgebra) -> dict:
    return {
        "name": g.name,
        "dim": g.dim,
        "brackets": [
            {"i": i + 1, "j": j + 1,
             "terms": [{"k": k + 1, "coeff": str(c)} for k, c in enumerate(coeffs) if c]}
            for (i, j), coeffs in g.constants
        ],
    }


def load_algebra(path: str | Path) -> LieAlgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    return algebra_from_dict(_load_json(text, str(path)), str(path))


def acs_from_dict(doc: Any, source: str = "<acs>") -> AlmostComplexStructure:
    _keys(doc, source, {"lambda", "m"})
    lam = _rational(doc["lambda"], f"{source}.lambda")
    rows = doc["m"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError(f"{source}.m: expected a square array of rational strings")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise FormatError(f"{source}.m: expected a {n}x{n} array")
    m = Matrix([[_rational(x, f"{source}.m[{a}][{b}]") for b, x in enumerate(r)] for a, r in enumerate(rows)])
    try:
        return AlmostComplexStructure(m, lam)
    except ValueError as exc:
        raise FormatError(f"{source}: {exc}") from None


def acs_to_dict(j: AlmostComplexStructure) -> dict:
    return {"lambda": str(j.lam), "m": j.m.to_strings()}


def load_acs(path: str | Path) -> AlmostComplexStructure:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    return acs_from_dict(_load_json(text, str(path)), str(path))


def _basis(sub: Subspace) -> list[list[str]]:
    return [[str(x) for x in v] for v in sub.vectors]


def _transcript(records: list[SignatureRecord]) -> list[dict]:
    return [
        {"name": r.name, "gram": r.gram.to_strings(), "signature": list(r.signature)}
        for r in records
    ]


@dataclass
class ReportDocument:
    algebra: str
    orientation: str
    verdict: str
    z2_basis: list | None = None
    b2_basis: list | None = None
    b2_signature: list | None = None
    witness_j: dict | None = None
    tamed: bool | None = None
    compatible: bool | None = None
    taming_form: list | None = None
    compatible_form: list | None = None
    check: str | None = None
    detail: str | None = None
    transcript: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, doc: dict) -> "ReportDocument":
        return cls(**_keys(doc, "report", {"algebra", "orientation", "verdict"},
                           set(cls.__dataclass_fields__)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        return cls.from_dict(_load_json(text, "report"))


def report_from_verdict(g: LieAlgebra, v: Verdict) -> ReportDocument:
    doc = ReportDocument(
        algebra=g.name,
        orientation=str(v.orientation.c),
        verdict=v.kind.value,
        z2_basis=_basis(v.z2),
        b2_basis=_basis(v.b2),
        b2_signature=list(v.b2_signature),
        transcript=_transcript(v.transcript),
    )
    if v.witness_j is not None:
        doc.witness_j = acs_to_dict(v.witness_j)
    if v.report is not None:
        _fill_tame(doc, v.report)
    return doc


def _fill_tame(doc: ReportDocument, rep: TameReport) -> None:
    doc.tamed = rep.tamed
    doc.compatible = rep.compatible
    if rep.taming_form is not None:
        doc.taming_form = [str(x) for x in rep.taming_form.coords]
    if rep.compatible_form is not None:
        doc.compatible_form = [str(x) for x in rep.compatible_form.coords]


def report_from_tame(g: LieAlgebra, orientation: Fraction, j: AlmostComplexStructure,
                     rep: TameReport) -> ReportDocument:
    if rep.compatible:
        verdict = "compatible"
    elif rep.tamed:
        verdict = "tamed-not-compatible"
    else:
        verdict = "not-tamed"
    doc = ReportDocument(algebra=g.name, orientation=str(orientation), verdict=verdict,
                         witness_j=acs_to_dict(j), transcript=_transcript(rep.transcript))
    _fill_tame(doc, rep)
    return doc
