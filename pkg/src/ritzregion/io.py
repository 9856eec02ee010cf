"""JSON wire formats for spectra and regions.

Floats are written with Python's shortest round-trip repr, so parsing an
emitted document reproduces every number bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import InputError
from .spectrum import Spectrum

_EIG_KEYS = {"re", "im", "mult"}


def _number(x, what: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{what} must be a number")
    x = float(x)
    if not math.isfinite(x):
        raise InputError(f"{what} must be finite")
    return x


def parse_spectrum(text: str) -> Spectrum:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"eigenvalues"}:
        raise InputError('a spectrum file is an object with the single key "eigenvalues"')
    items = doc["eigenvalues"]
    if not isinstance(items, list) or not items:
        raise InputError('"eigenvalues" must be a nonempty list')
    values, mults = [], []
    for k, it in enumerate(items):
        if not isinstance(it, dict):
            raise InputError(f"eigenvalue {k} must be an object")
        extra = set(it) - _EIG_KEYS
        if extra:
            raise InputError(f"eigenvalue {k} has unknown keys {sorted(extra)}")
        if "re" not in it or "im" not in it:
            raise InputError(f"eigenvalue {k} needs both re and im")
        m = it.get("mult", 1)
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise InputError(f"eigenvalue {k}: mult must be an integer >= 1")
        values.append(complex(_number(it["re"], "re"), _number(it["im"], "im")))
        mults.append(m)
    if sum(mults) < 2:
        raise InputError("a spectrum needs total multiplicity at least 2")
    S = Spectrum(values, mults)
    if len(S.values) != len(values):
        raise InputError("distinct eigenvalues must be separated by more than the tolerance")
    return S


def emit_spectrum(S: Spectrum) -> str:
    items = []
    for v, m in zip(S.values, S.mults):
        d = {"re": float(v.real), "im": float(v.imag)}
        if m != 1:
            d["mult"] = int(m)
        items.append(d)
    return json.dumps({"eigenvalues": items}, indent=2) + "\n"


def _pt(p) -> list:
    return [float(complex(p).real), float(complex(p).imag)]


def _unpt(x, what: str) -> tuple:
    if not isinstance(x, list) or len(x) != 2:
        raise InputError(f"{what} must be a [re, im] pair")
    return (_number(x[0], what), _number(x[1], what))


@dataclass(frozen=True)
class RegionFile:
    case: str
    region: tuple
    generating_points: tuple
    witness_residuals: tuple
    W: tuple
    Lambda2: tuple | str

    @classmethod
    def from_report(cls, report, S: Spectrum, back=lambda z: z) -> "RegionFile":
        """Serialize a RegionReport, mapping points through ``back``."""
        gps = []
        for g in report.generating_points:
            d = {"point": tuple(_pt(back(g.point))), "kind": g.kind}
            if g.K:
                d["K"] = tuple(int(k) for k in g.K)
            else:
                d["index"] = int(g.index)
            gps.append(tuple(sorted(d.items())))
        L2 = "empty" if report.L2.is_empty else tuple(tuple(_pt(back(z))) for z in report.L2.vertices)
        return cls(
            case=str(report.case),
            region=tuple(tuple(_pt(back(z))) for z in report.region.vertices),
            generating_points=tuple(gps),
            witness_residuals=tuple(float(r) for r in report.witness_residuals(S)),
            W=tuple(tuple(_pt(back(z))) for z in report.W.vertices),
            Lambda2=L2,
        )

    def to_json(self) -> dict:
        gps = []
        for g in self.generating_points:
            d = dict(g)
            d["point"] = list(d["point"])
            if "K" in d:
                d["K"] = list(d["K"])
            gps.append(d)
        return {
            "case": self.case,
            "region": [list(p) for p in self.region],
            "generating_points": gps,
            "witness_residuals": list(self.witness_residuals),
            "W": [list(p) for p in self.W],
            "Lambda2": self.Lambda2 if isinstance(self.Lambda2, str) else [list(p) for p in self.Lambda2],
        }

    def emit(self) -> str:
        return json.dumps(self.to_json(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def parse(cls, text: str) -> "RegionFile":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        keys = {"case", "region", "generating_points", "witness_residuals", "W", "Lambda2"}
        if not isinstance(doc, dict) or set(doc) != keys:
            raise InputError(f"a region file has exactly the keys {sorted(keys)}")
        gps = []
        for g in doc["generating_points"]:
            if not isinstance(g, dict) or not {"point", "kind"} <= set(g) <= {"point", "kind", "K", "index"}:
                raise InputError("malformed generating point")
            d = {"point": _unpt(g["point"], "point"), "kind": str(g["kind"])}
            if "K" in g:
                d["K"] = tuple(int(k) for k in g["K"])
            if "index" in g:
                d["index"] = int(g["index"])
            gps.append(tuple(sorted(d.items())))
        L2 = doc["Lambda2"]
        if L2 != "empty":
            L2 = tuple(_unpt(p, "Lambda2") for p in L2)
        return cls(
            case=str(doc["case"]),
            region=tuple(_unpt(p, "region") for p in doc["region"]),
            generating_points=tuple(gps),
            witness_residuals=tuple(_number(r, "residual") for r in doc["witness_residuals"]),
            W=tuple(_unpt(p, "W") for p in doc["W"]),
            Lambda2=L2,
        )
