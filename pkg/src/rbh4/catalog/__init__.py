"""Catalog of parametric RB operator families with symbolic and finite-field checks."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from ..exactalg import GF, RF, _as_rf
from ..rbcore import LinearOperator, RBReport, check_rb
from .families import build_all, build_supplementary
from .model import (
    LAM,
    AnyNonZero,
    Atom,
    Constraint,
    ConstraintViolation,
    DenominatorVanishes,
    Family,
    FamilyError,
    MalformedFamily,
    ModPEvaluator,
    NonZero,
    TooManyParameters,
    Zero,
    display_name,
    instantiate,
    zero_substituted,
)

__all__ = [
    "Atom", "AnyNonZero", "Constraint", "ConstraintViolation", "DenominatorVanishes",
    "DiscrepancyRecord", "Family", "FamilyError", "MalformedFamily", "NonZero",
    "TooManyParameters", "Zero", "all_families", "display_name", "enumerate_instances",
    "export_catalog", "families_for", "get_family", "instance_index", "instantiate",
    "membership", "symbolic_report", "supplementary_families", "verify_symbolic", "LAM",
    "DEFAULT_PARAM_BOUND",
]

DEFAULT_PARAM_BOUND = 10


@dataclass(frozen=True)
class DiscrepancyRecord:
    """A family whose symbolic RB residual does not vanish."""

    family: str
    pair: tuple
    component: str
    residual_numerator: str
    note: str = ""

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "pair": list(self.pair),
            "component": self.component,
            "residual_numerator": self.residual_numerator,
            "note": self.note,
        }


@lru_cache(maxsize=1)
def _catalog() -> tuple:
    return tuple(build_all())


@lru_cache(maxsize=1)
def _supplementary() -> tuple:
    return tuple(build_supplementary())


def all_families() -> tuple:
    """The transcribed catalog, in catalog order."""
    return _catalog()


def supplementary_families() -> tuple:
    """Scan-derived families outside the transcription (ids start with ``supp.``)."""
    return _supplementary()


def get_family(id: str) -> Family:
    for f in _catalog() + _supplementary():
        if f.id == id:
            return f
    raise KeyError(f"unknown family {id!r}")


def families_for(algebra: str, supplementary: bool = False) -> list:
    pool = _catalog() + _supplementary() if supplementary else _catalog()
    return [f for f in pool if f.algebra == algebra]


def symbolic_report(fam: Family, weight=None, assignment: Mapping | None = None) -> RBReport:
    """RB report over rational functions with Zero atoms substituted.

    ``weight`` overrides the weight argument (default: the symbol lam) and
    ``assignment`` partially specializes parameters, both without touching
    the family's matrix otherwise.
    """
    matrix = zero_substituted(fam)
    if assignment:
        subs = {k: _as_rf(v) for k, v in assignment.items()}
        matrix = tuple(tuple(x.subs(subs) for x in row) for row in matrix)
    R = LinearOperator(matrix, RF)
    lam = _as_rf(weight) if weight is not None else _as_rf(_lam_symbol())
    return check_rb(fam.spec, R, lam)


def _lam_symbol():
    from ..exactalg import Polynomial

    return Polynomial.variable(LAM)


def verify_symbolic(fam: Family, weight=None, assignment: Mapping | None = None):
    """RBReport on success, DiscrepancyRecord for the first offending basis pair."""
    report = symbolic_report(fam, weight, assignment)
    if report.passed:
        return report
    pair, vec = report.residuals[0]
    k = next(i for i, x in enumerate(vec) if not x.is_zero())
    return DiscrepancyRecord(fam.id, pair, fam.spec.basis[k], vec[k].num.to_str(), fam.note)


# ------------------------------------------------------------------ finite fields


def _check_bound(fam: Family, bound: int):
    if len(fam.params) > bound:
        raise TooManyParameters(
            f"{fam.id} has {len(fam.params)} parameters, above the bound {bound}"
        )


def enumerate_instances(fam: Family, p: int, lam, bound: int = DEFAULT_PARAM_BOUND) -> Iterator:
    """Distinct instances over F_p, as (LinearOperator, assignment) pairs.

    The first assignment (in lexicographic order) producing each operator is
    the one reported.
    """
    for key, assignment in _instances(fam, p, int(lam) % p, bound).items():
        yield _operator_from_key(key, fam.dim, p), assignment


def _operator_from_key(key, dim, p) -> LinearOperator:
    F = GF(p)
    rows = tuple(tuple(F.convert(key[r * dim + c]) for c in range(dim)) for r in range(dim))
    return LinearOperator(rows, F)


@lru_cache(maxsize=None)
def _instances_cached(fam_id: str, p: int, lam: int, bound: int) -> dict:
    return _compute_instances(get_family(fam_id), p, lam, bound)


def _instances(fam: Family, p: int, lam: int, bound: int) -> dict:
    if fam in _catalog() or fam in _supplementary():
        return _instances_cached(fam.id, p, lam, bound)
    return _compute_instances(fam, p, lam, bound)


def _compute_instances(fam: Family, p: int, lam: int, bound: int) -> dict:
    _check_bound(fam, bound)
    ev = ModPEvaluator(fam, p)
    out = {}
    for vals in ev.assignments(lam):
        if not ev.satisfied(vals):
            continue
        key = ev.key(vals)
        if key is None or key in out:
            continue
        out[key] = dict(zip(fam.params, vals[:-1]))
    return out


def instance_index(fam: Family, p: int, lam, bound: int = DEFAULT_PARAM_BOUND) -> dict:
    """Map from row-major int key to the first assignment producing it."""
    return _instances(fam, p, int(lam) % p, bound)


def membership(fam: Family, M: LinearOperator, lam, bound: int = DEFAULT_PARAM_BOUND):
    """An assignment instantiating ``fam`` to ``M`` over F_p, or None."""
    p = M.field.characteristic
    if not p:
        raise FamilyError("membership needs an operator over a prime field")
    if M.dim != fam.dim:
        return None
    return _instances(fam, p, int(lam) % p, bound).get(M.key())


# ------------------------------------------------------------------ export


def export_catalog(families=None) -> str:
    families = _catalog() if families is None else families
    return json.dumps([f.to_json() for f in families], indent=1, ensure_ascii=False)
