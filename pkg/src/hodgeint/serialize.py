"""Deterministic JSON for the exact types.

Rationals are strings ``"p/q"`` (``"3"`` when integral), never floats;
plain ints such as orders and exponents stay JSON integers. A
tau-polynomial is stored column-wise as ``{"tau_exp": [...], "re": [...], "im": [...]}``
in increasing exponent. :func:`parse` recognises each shape and rebuilds the
value, so ``parse(serialize(x)) == x``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from hodgeint.algebra.gaussian import GaussianRational
from hodgeint.algebra.qrat import QRat
from hodgeint.algebra.series import LambdaSeries
from hodgeint.algebra.taupoly import TauPoly
from hodgeint.genfun import PairMap, PartitionMap
from hodgeint.localp2 import LocalCYSeries
from hodgeint.partitions import Partition
from hodgeint.reports import Report


def _rat(value) -> str:
    return str(Fraction(value))


def to_obj(value):
    """Convert a library value to plain JSON-compatible data."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Partition):
        return [int(p) for p in value]
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _rat(value)
    if isinstance(value, GaussianRational):
        return {"re": _rat(value.re), "im": _rat(value.im)}
    if isinstance(value, TauPoly):
        items = value.items()
        return {
            "tau_exp": [k for k, _ in items],
            "re": [_rat(c.re) for _, c in items],
            "im": [_rat(c.im) for _, c in items],
        }
    if isinstance(value, LambdaSeries):
        coeffs = [to_obj(value.coeff(k)) for k in range(value.valuation, value.order + 1)] if value else []
        return {"valuation": value.valuation if value else 0, "order": value.order, "coeffs": coeffs}
    if isinstance(value, QRat):
        return {
            "numerator": [[k, _rat(c)] for k, c in sorted(value.numerator.items())],
            "denominator": [[k, _rat(c)] for k, c in sorted(value.denominator.items())],
        }
    if isinstance(value, PartitionMap):
        return {"max_size": value.max_size,
                "entries": [{"mu": to_obj(k), "value": to_obj(v)} for k, v in value.items()]}
    if isinstance(value, PairMap):
        return {"max_size": value.max_size,
                "entries": [{"mu_plus": to_obj(p), "mu_minus": to_obj(m), "value": to_obj(v)}
                            for (p, m), v in value.items()]}
    if isinstance(value, LocalCYSeries):
        return {"max_degree": value.max_degree, "per_degree": [to_obj(s) for s in value.per_degree]}
    if isinstance(value, Report):
        return {"name": value.name, "passed": value.passed, "checked": value.checked,
                "failures": [to_obj(f) for f in value.failures], "notes": list(value.notes),
                "params": to_obj(value.params)}
    if isinstance(value, dict):
        return {str(k): to_obj(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_obj(v) for v in value]
    if isinstance(value, str):
        return value
    raise TypeError(f"cannot serialise {type(value).__name__}")


def serialize(value, indent: int | None = None) -> str:
    return json.dumps(to_obj(value), indent=indent, sort_keys=False, separators=None if indent else (",", ":"))


def _is_rat(obj) -> bool:
    if not isinstance(obj, str):
        return False
    try:
        Fraction(obj)
    except ValueError:
        return False
    return True


def from_obj(obj):
    """Inverse of :func:`to_obj` for the value shapes it produces."""
    if isinstance(obj, str) and _is_rat(obj):
        return Fraction(obj)
    if isinstance(obj, list):
        if all(isinstance(v, int) and not isinstance(v, bool) for v in obj):
            return Partition(obj)
        return [from_obj(v) for v in obj]
    if isinstance(obj, dict):
        keys = set(obj)
        if keys == {"re", "im"}:
            return GaussianRational(Fraction(obj["re"]), Fraction(obj["im"]))
        if keys == {"tau_exp", "re", "im"}:
            return TauPoly({k: GaussianRational(Fraction(r), Fraction(i))
                            for k, r, i in zip(obj["tau_exp"], obj["re"], obj["im"])})
        if keys == {"valuation", "order", "coeffs"}:
            return LambdaSeries([from_obj(c) for c in obj["coeffs"]], obj["valuation"], obj["order"])
        if keys == {"numerator", "denominator"}:
            return QRat({k: Fraction(c) for k, c in obj["numerator"]},
                        {k: Fraction(c) for k, c in obj["denominator"]})
        if keys == {"max_size", "entries"}:
            entries = obj["entries"]
            if entries and "mu_plus" in entries[0]:
                return PairMap({(tuple(e["mu_plus"]), tuple(e["mu_minus"])): from_obj(e["value"]) for e in entries},
                               obj["max_size"])
            return PartitionMap({tuple(e["mu"]): from_obj(e["value"]) for e in entries}, obj["max_size"])
        if keys == {"max_degree", "per_degree"}:
            return LocalCYSeries(obj["max_degree"], tuple(from_obj(s) for s in obj["per_degree"]))
        return {k: from_obj(v) for k, v in obj.items()}
    return obj


def parse(text: str):
    return from_obj(json.loads(text))


__all__ = ["from_obj", "parse", "serialize", "to_obj"]
