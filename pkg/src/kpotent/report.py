"""Stable, versioned report on which classically quoted identities for the
representation maps actually hold, regime by regime.

Each finding is decided twice, from exhaustive basis pairs and from a fixed
seeded random sample, and the two verdicts are required to agree; the
report is fully deterministic.  Disagreement with a quoted identity is
recorded as data (the whole point of the report), never raised.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass

from .algebra import OctAlgebra, QuatAlgebra, cd_double_mul
from .fields import parse_field
from .represent import block_check, left_rep, right_rep

REPORT_VERSION = "1"

_RANDOM_PAIRS = 12
_BASE_SEED = 0x5EED

_QUAT_REGIMES = (
    ("f5", ("-1", "-1")),
    ("f5", ("2", "3")),
    ("f13", ("-1", "-1")),
    ("q", ("-1", "-1")),
    ("q", ("1", "1")),
    ("q", ("2", "3")),
    ("q[sqrt2]", ("-1", "-1")),
)

_OCT_REGIMES = (
    ("f5", ("-1", "-1", "-1")),
    ("f13", ("-1", "-1", "-1")),
    ("q", ("-1", "-1", "-1")),
    ("q", ("1", "1", "1")),
    ("q", ("2", "3", "6")),
    ("q[sqrt2]", ("-1", "-1", "-1")),
)


@dataclass(frozen=True)
class Finding:
    ident: str
    regime: str
    verdict: str
    detail: str

    def as_dict(self) -> dict:
        return {
            "id": self.ident,
            "regime": self.regime,
            "verdict": self.verdict,
            "detail": self.detail,
        }


def _algebras(kind):
    if kind == "quat":
        for field_str, params in _QUAT_REGIMES:
            field = parse_field(field_str)
            label = f"H({','.join(params)})/{field_str}"
            yield label, QuatAlgebra(field, *(field.parse(t) for t in params))
    else:
        for field_str, params in _OCT_REGIMES:
            field = parse_field(field_str)
            label = f"O({','.join(params)})/{field_str}"
            yield label, OctAlgebra(field, *(field.parse(t) for t in params))


def _pairs(algebra, evidence: str, seed: int):
    if evidence in ("basis", "both"):
        basis = algebra.basis()
        for x in basis:
            for y in basis:
                yield x, y
    if evidence in ("random", "both"):
        rng = random.Random(seed)
        for _ in range(_RANDOM_PAIRS):
            yield algebra.random_element(rng), algebra.random_element(rng)


def _singles(algebra, evidence: str, seed: int):
    if evidence in ("basis", "both"):
        yield from algebra.basis()
    if evidence in ("random", "both"):
        rng = random.Random(seed)
        for _ in range(_RANDOM_PAIRS):
            yield algebra.random_element(rng)


def _pair_law(check, algebra, evidence, seed):
    """Verdict plus first counterexample (as element literals) for a pair law."""
    for x, y in _pairs(algebra, evidence, seed):
        if not check(x, y):
            return "fails", f"counterexample x={x} y={y}"
    return "holds", ""


def _single_law(check, algebra, evidence, seed):
    for x in _singles(algebra, evidence, seed):
        if not check(x):
            return "fails", f"counterexample x={x}"
    return "holds", ""


def _seed_stable(ident: str, regime: str) -> int:
    # builtin hash() is salted per process; derive a stable seed from bytes
    data = f"{ident}|{regime}".encode()
    h = 0
    for byte in data:
        h = (h * 131 + byte) & 0xFFFFFFFF
    return h ^ _BASE_SEED


_PAIR_CHECKS_QUAT = (
    (
        "quat-left-map-multiplicative",
        lambda x, y: left_rep(x * y) == left_rep(x) * left_rep(y),
    ),
    (
        "quat-right-map-direct-order",
        lambda x, y: right_rep(x * y) == right_rep(x) * right_rep(y),
    ),
    (
        "quat-right-map-reversed-order",
        lambda x, y: right_rep(x * y) == right_rep(y) * right_rep(x),
    ),
)

_SINGLE_CHECKS_QUAT = (
    (
        "quat-conjugate-transpose-law",
        lambda x: left_rep(x.conjugate()) == left_rep(x).transpose()
        and right_rep(x.conjugate()) == right_rep(x).transpose(),
    ),
    (
        "quat-inverse-law",
        lambda x: x.norm().is_zero
        or (
            left_rep(x) * left_rep(x.inverse())
            == left_rep(x.algebra.one)
        ),
    ),
)

_SINGLE_CHECKS_OCT = (
    (
        "oct-conjugate-transpose-law",
        lambda x: left_rep(x.conjugate()) == left_rep(x).transpose()
        and right_rep(x.conjugate()) == right_rep(x).transpose(),
    ),
    (
        "oct-square-law",
        lambda x: left_rep(x * x) == left_rep(x) ** 2
        and right_rep(x * x) == right_rep(x) ** 2,
    ),
)

_BLOCK_FORM_IDENTS = (
    ("oct-left-block-form-classical", "left_classical_agrees"),
    ("oct-right-block-form-classical", "right_classical_agrees"),
    ("oct-left-block-form-parametric", "left_parametric_agrees"),
    ("oct-right-block-form-parametric", "right_parametric_agrees"),
)


def _block_form_findings(evidence: str):
    # one block_check per element decides all four block-form findings
    for regime, alg in _algebras("oct"):
        seed = _seed_stable("oct-block-forms", regime)
        outcomes = {ident: ("holds", "") for ident, _ in _BLOCK_FORM_IDENTS}
        for x in _singles(alg, evidence, seed):
            checked = block_check(x)
            for ident, attr in _BLOCK_FORM_IDENTS:
                if outcomes[ident][0] == "holds" and not getattr(checked, attr):
                    outcomes[ident] = ("fails", f"counterexample x={x}")
        for ident, _ in _BLOCK_FORM_IDENTS:
            verdict, detail = outcomes[ident]
            yield Finding(ident, regime, verdict, detail)

_PAIR_CHECKS_OCT = (
    (
        "oct-sandwich-law",
        lambda x, y: left_rep(x * (y * x)) == left_rep(x) * left_rep(y) * left_rep(x)
        and right_rep(x * (y * x)) == right_rep(x) * right_rep(y) * right_rep(x),
    ),
    (
        "oct-table-vs-doubling",
        lambda x, y: x * y == cd_double_mul(x, y),
    ),
)


def _erratum_findings():
    # the quoted norm of the F5 showcase element does not match the norm form
    field = parse_field("f5")
    alg = QuatAlgebra(field, field.parse("-1"), field.parse("-1"))
    x = alg.element((2, 3, 1, 3))
    computed = str(x.norm())
    verdict = "matches" if computed == "1" else "differs"
    yield Finding(
        ident="f5-showcase-norm-value",
        regime="H(-1,-1)/f5",
        verdict=verdict,
        detail=f"quoted norm 1, computed {computed} for element {x}",
    )
    # the doubled-basis diagonal entry that is normalized to the first
    # parameter: f1*f1 = a, cross-checked against the doubling product
    ok = True
    for label, oct_alg in _algebras("oct"):
        f1 = oct_alg.basis_element(1)
        ok = ok and (f1 * f1 == oct_alg.one.scale(oct_alg.a))
        ok = ok and (cd_double_mul(f1, f1) == f1 * f1)
    yield Finding(
        ident="oct-table-f1-square-normalization",
        regime="all octonion regimes",
        verdict="consistent" if ok else "inconsistent",
        detail="the ambiguous diagonal entry is read as f1*f1 = a; "
        "the doubling product confirms it",
    )


def discrepancy_report(evidence: str = "both") -> dict:
    """Run every recorded-finding suite; returns a JSON-ready dict.

    evidence selects the deciding route: "basis" (exhaustive basis pairs),
    "random" (fixed seeded samples) or "both".  Verdicts must not depend on
    the route; the acceptance suite enforces that.
    """
    if evidence not in ("basis", "random", "both"):
        raise ValueError(f"unknown evidence route {evidence!r}")
    findings = []
    for ident, check in _PAIR_CHECKS_QUAT:
        for regime, alg in _algebras("quat"):
            verdict, detail = _pair_law(check, alg, evidence, _seed_stable(ident, regime))
            findings.append(Finding(ident, regime, verdict, detail))
    for ident, check in _SINGLE_CHECKS_QUAT:
        for regime, alg in _algebras("quat"):
            verdict, detail = _single_law(check, alg, evidence, _seed_stable(ident, regime))
            findings.append(Finding(ident, regime, verdict, detail))
    for ident, check in _SINGLE_CHECKS_OCT:
        for regime, alg in _algebras("oct"):
            verdict, detail = _single_law(check, alg, evidence, _seed_stable(ident, regime))
            findings.append(Finding(ident, regime, verdict, detail))
    findings.extend(_block_form_findings(evidence))
    for ident, check in _PAIR_CHECKS_OCT:
        for regime, alg in _algebras("oct"):
            verdict, detail = _pair_law(check, alg, evidence, _seed_stable(ident, regime))
            findings.append(Finding(ident, regime, verdict, detail))
    findings.extend(_erratum_findings())
    return {
        "version": REPORT_VERSION,
        "findings": [f.as_dict() for f in findings],
    }


def render_text(report: dict) -> str:
    lines = [f"exact-identity report v{report['version']}"]
    for f in report["findings"]:
        line = f"[{f['verdict']:<10}] {f['id']:<36} {f['regime']}"
        if f["detail"]:
            line += f"  ({f['detail']})"
        lines.append(line)
    return "\n".join(lines)


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "regime", "verdict", "detail"])
    for f in report["findings"]:
        writer.writerow([f["id"], f["regime"], f["verdict"], f["detail"]])
    return buf.getvalue()


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2)
