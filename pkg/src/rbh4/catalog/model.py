"""Parametric operator families with their constraints, evaluated over any field."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Mapping, Sequence

from ..algebra import AlgebraSpec, get_algebra
from ..exactalg import (
    QQ,
    RF,
    Field,
    GFElement,
    Polynomial,
    RationalFunction,
    _as_rf,
    symbol_key,
)
from ..expr import Vec, evaluate, parse_polynomial, parse_scalar
from ..rbcore import LinearOperator
from .. import linalg

LAM = "lam"

# basis labels as they are spelled inside image expressions
IDENTIFIERS = {"1": "one"}

_GREEK = {
    "alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ", "xi": "ξ", "mu": "μ", "nu": "ν",
    "eta": "η", "sigma": "σ", "zeta": "ζ", "lam": "λ", "p": "p", "w": "w",
}
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def display_name(name: str) -> str:
    """ASCII parameter name -> printed symbol, e.g. beta2 -> β₂."""
    stem = name.rstrip("0123456789")
    digits = name[len(stem):]
    return _GREEK.get(stem, stem) + digits.translate(_SUB)


class FamilyError(ValueError):
    pass


class MalformedFamily(FamilyError):
    pass


class ConstraintViolation(FamilyError):
    def __init__(self, atom: "Atom", message: str | None = None):
        super().__init__(message or f"constraint violated: {atom}")
        self.atom = atom


class DenominatorVanishes(FamilyError):
    pass


class TooManyParameters(FamilyError):
    pass


# --------------------------------------------------------------------------
# constraints


@dataclass(frozen=True)
class Atom:
    """One constraint atom: ``nonzero``, ``zero`` or ``any_nonzero``."""

    kind: str
    polys: tuple

    def holds(self, values: Sequence) -> bool:
        if self.kind == "nonzero":
            return values[0] != 0
        if self.kind == "zero":
            return values[0] == 0
        return any(v != 0 for v in values)

    def __str__(self):
        if self.kind == "nonzero":
            return f"{self.polys[0]} != 0"
        if self.kind == "zero":
            return f"{self.polys[0]} = 0"
        return " or ".join(f"{p} != 0" for p in self.polys)

    def to_json(self) -> dict:
        if self.kind == "any_nonzero":
            return {"kind": self.kind, "polys": [p.to_str() for p in self.polys]}
        return {"kind": self.kind, "poly": self.polys[0].to_str()}

    @classmethod
    def from_json(cls, data) -> "Atom":
        if data["kind"] == "any_nonzero":
            return cls("any_nonzero", tuple(parse_polynomial(s) for s in data["polys"]))
        return cls(data["kind"], (parse_polynomial(data["poly"]),))


def NonZero(p) -> Atom:
    return Atom("nonzero", (_poly(p),))


def Zero(p) -> Atom:
    return Atom("zero", (_poly(p),))


def AnyNonZero(*ps) -> Atom:
    return Atom("any_nonzero", tuple(_poly(p) for p in ps))


def _poly(p) -> Polynomial:
    return parse_polynomial(p) if isinstance(p, str) else p


@dataclass(frozen=True)
class Constraint:
    atoms: tuple = ()

    def violated(self, assignment: Mapping, field: Field):
        """First atom that fails under ``assignment`` (or None)."""
        for atom in self.atoms:
            vals = [p.eval(assignment, field) for p in atom.polys]
            if not atom.holds(vals):
                return atom
        return None

    @property
    def nonzero_polys(self):
        return [a.polys[0] for a in self.atoms if a.kind == "nonzero"]

    @property
    def zero_polys(self):
        return [a.polys[0] for a in self.atoms if a.kind == "zero"]


# --------------------------------------------------------------------------
# families


@dataclass
class Family:
    id: str
    algebra: str
    params: tuple
    matrix: tuple  # rows of RationalFunction
    constraint: Constraint
    source: str
    note: str = ""
    sample: dict = dc_field(default_factory=dict)

    @property
    def spec(self) -> AlgebraSpec:
        return get_algebra(self.algebra)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def param_names(self) -> dict:
        return {p: display_name(p) for p in self.params + (LAM,)}

    def operator(self) -> LinearOperator:
        return LinearOperator(self.matrix, RF)

    def entries(self):
        for r, row in enumerate(self.matrix):
            for c, x in enumerate(row):
                yield r, c, x

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "algebra": self.algebra,
            "params": list(self.params),
            "param_names": self.param_names,
            "matrix": [[x.to_str() for x in row] for row in self.matrix],
            "constraint": [a.to_json() for a in self.constraint.atoms],
            "source": self.source,
            "note": self.note,
            "sample": {k: str(v) for k, v in self.sample.items()},
        }

    @classmethod
    def from_json(cls, data) -> "Family":
        matrix = tuple(tuple(parse_scalar(s) for s in row) for row in data["matrix"])
        atoms = tuple(Atom.from_json(a) for a in data["constraint"])
        sample = {k: Fraction(v) for k, v in data.get("sample", {}).items()}
        return cls(
            data["id"], data["algebra"], tuple(data["params"]), matrix, Constraint(atoms),
            data["source"], data.get("note", ""), sample,
        )


def build_family(
    id: str,
    algebra: str,
    images: Mapping[str, str],
    *,
    let: Sequence[tuple] = (),
    constraints: Sequence[Atom] = (),
    source: str,
    note: str = "",
) -> Family:
    """Assemble a family from image expressions.

    ``let`` holds ordered (name, expression) definitions (derived basis
    vectors such as ``h = alpha*one + g`` or named images such as ``Rf``)
    usable by later definitions and by ``images``.
    """
    spec = get_algebra(algebra)
    idents = [IDENTIFIERS.get(b, b) for b in spec.basis]
    env = {}
    for name, text in let:
        env[name] = _vector(evaluate(text, env, idents), spec.dim, f"{id}: {name}")
    cols = []
    for ident, label in zip(idents, spec.basis):
        if ident not in images:
            raise MalformedFamily(f"{id}: no image given for basis element {label}")
        cols.append(_vector(evaluate(images[ident], env, idents), spec.dim, f"{id}: R({label})"))
    extra = set(images) - set(idents)
    if extra:
        raise MalformedFamily(f"{id}: images for unknown basis elements {sorted(extra)}")
    matrix = linalg.transpose(cols)
    params = set()
    for row in matrix:
        for x in row:
            params.update(x.variables())
    atoms = [NonZero(LAM)] + list(constraints)
    for a in atoms:
        for p in a.polys:
            params.update(p.vars)
    params.discard(LAM)
    fam = Family(
        id, algebra, tuple(sorted(params, key=symbol_key)), tuple(tuple(r) for r in matrix),
        Constraint(tuple(atoms)), source, note,
    )
    check_denominators(fam)
    fam.sample = find_sample(fam)
    return fam


def _vector(value, dim: int, where: str) -> Vec:
    if isinstance(value, Vec):
        return value
    if isinstance(value, RationalFunction) and value.is_zero():
        return Vec(_as_rf(0) for _ in range(dim))
    raise MalformedFamily(f"{where} is a scalar, expected a vector")


def check_denominators(fam: Family) -> None:
    """Every denominator factor must divide some NonZero-constrained polynomial."""
    guards = fam.constraint.nonzero_polys
    for r, c, x in fam.entries():
        for d in x.den:
            if not any(g.exact_div(d) is not None for g in guards):
                raise MalformedFamily(
                    f"{fam.id}: denominator {d} of entry ({r},{c}) is not constrained nonzero"
                )


def find_sample(fam: Family, tries: int = 500) -> dict:
    """Deterministic rational assignment satisfying the constraint."""
    rng = random.Random(fam.id)
    names = fam.params + (LAM,)
    zero_subs = _zero_substitutions(fam)
    for attempt in range(tries):
        spread = 3 + attempt // 20
        values = {n: Fraction(rng.randint(-spread, spread)) for n in names}
        if attempt % 3 == 2:
            values = {n: v / rng.randint(1, 3) for n, v in values.items()}
        for v, expr in zero_subs.items():
            try:
                values[v] = expr.eval({k: values[k] for k in expr.variables()}, QQ)
            except ZeroDivisionError:
                break
        try:
            if fam.constraint.violated(values, QQ) is not None:
                continue
            for _, _, x in fam.entries():
                x.eval(values, QQ) if x.variables() else None
        except ZeroDivisionError:
            continue
        return values
    raise MalformedFamily(f"{fam.id}: no sample assignment satisfies the constraint")


def _zero_substitutions(fam: Family) -> dict:
    """Solve each Zero atom for a variable that occurs linearly with constant coefficient."""
    subs = {}
    for p in fam.constraint.zero_polys:
        p = _as_rf(p).subs(subs).num if subs else p
        for v in reversed(p.vars):
            if v == LAM or p.degree_in(v) != 1:
                continue
            coeff = p.coefficient_of(v, 1)
            if coeff.is_constant():
                rest = p - coeff * Polynomial.variable(v)
                subs[v] = _as_rf(rest * (-1 / coeff.constant_value()))
                break
        else:
            raise MalformedFamily(f"{fam.id}: cannot solve zero atom {p} = 0")
    return subs


def zero_substituted(fam: Family) -> tuple:
    """Matrix with every Zero atom solved and substituted."""
    subs = _zero_substitutions(fam)
    if not subs:
        return fam.matrix
    return tuple(tuple(x.subs(subs) for x in row) for row in fam.matrix)


# --------------------------------------------------------------------------
# evaluation


def instantiate(fam: Family, assignment: Mapping, lam=None, field: Field | None = None) -> LinearOperator:
    """Concrete operator for parameter values (and weight) in ``field``."""
    values = dict(assignment)
    if lam is not None:
        values[LAM] = lam
    if field is None:
        sample = next(iter(values.values()), Fraction(0))
        field = GFElementField(sample) if isinstance(sample, GFElement) else QQ
    values = {k: _coerce(v, field) for k, v in values.items()}
    missing = [p for p in fam.params + (LAM,) if p not in values]
    if missing:
        raise FamilyError(f"{fam.id}: no value for {', '.join(missing)}")
    atom = fam.constraint.violated(values, field)
    if atom is not None:
        raise ConstraintViolation(atom, f"{fam.id}: constraint violated: {atom}")
    rows = []
    for row in fam.matrix:
        out = []
        for x in row:
            try:
                out.append(x.eval(values, field) if x.variables() else field.convert(x.num.constant_value() if not x.num.is_zero() else 0))
            except ZeroDivisionError as exc:
                raise DenominatorVanishes(f"{fam.id}: {exc}") from exc
        rows.append(tuple(out))
    return LinearOperator(tuple(rows), field)


def GFElementField(x: GFElement) -> Field:
    from ..exactalg import GF

    return GF(x.p)


def _coerce(v, field: Field):
    if isinstance(v, GFElement):
        return v
    if isinstance(v, str):
        return field.parse(v)
    return field.convert(Fraction(v))


class ModPEvaluator:
    """Evaluates a family's entries and constraint over F_p with plain ints."""

    def __init__(self, fam: Family, p: int):
        self.fam = fam
        self.p = p
        self.names = fam.params + (LAM,)
        pos = {n: i for i, n in enumerate(self.names)}
        self.entries = [
            (self._compile(x.num, pos), [self._compile(d, pos) for d in x.den])
            for row in fam.matrix
            for x in row
        ]
        self.atoms = [(a.kind, [self._compile(q, pos) for q in a.polys]) for a in fam.constraint.atoms]

    def _compile(self, poly: Polynomial, pos):
        p = self.p
        slots = [pos[v] for v in poly.vars]
        terms = []
        for mono, c in poly.terms.items():
            cm = c.numerator * pow(c.denominator, -1, p) % p
            terms.append((cm, [(s, e) for s, e in zip(slots, mono) if e]))
        return terms

    def _ev(self, terms, vals):
        p = self.p
        acc = 0
        for c, factors in terms:
            t = c
            for s, e in factors:
                t = t * pow(vals[s], e, p)
            acc += t
        return acc % p

    def satisfied(self, vals) -> bool:
        for kind, polys in self.atoms:
            v = [self._ev(t, vals) for t in polys]
            if kind == "nonzero" and v[0] == 0:
                return False
            if kind == "zero" and v[0] != 0:
                return False
            if kind == "any_nonzero" and not any(v):
                return False
        return True

    def key(self, vals):
        """Row-major int tuple of the instance, or None if a denominator vanishes."""
        p = self.p
        out = []
        for num, dens in self.entries:
            n = self._ev(num, vals)
            if dens:
                d = 1
                for dt in dens:
                    d = d * self._ev(dt, vals) % p
                if d == 0:
                    return None
                n = n * pow(d, -1, p) % p
            out.append(n)
        return tuple(out)

    def assignments(self, lam: int):
        for combo in itertools.product(range(self.p), repeat=len(self.fam.params)):
            yield combo + (lam % self.p,)
