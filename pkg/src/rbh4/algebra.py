"""Finite-dimensional algebras given by structure constants.

Concrete algebras live in :data:`ALGEBRAS`:

``h4``       Sweedler algebra, basis (1, g, x, gx), associative
``h4minus``  its commutator Lie algebra in the basis (1, g, e, f),
             e = x + gx, f = x - gx
``h4plus``   its Jordan algebra a∘b = (ab + ba)/2, basis (1, g, e, f)
``lm2``      Lie algebra (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = 0
``lm3``      Lie algebra (h, y, z): [h,y] = 2y, [h,z] = [y,z] = 0
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exactalg import QQ, Field, field_of, format_fraction
from . import linalg

ASSOCIATIVE = "associative"
LIE = "lie"
JORDAN = "jordan"
KINDS = (ASSOCIATIVE, LIE, JORDAN)


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    """Algebra with product e_i * e_j = sum_k c[i][j][k] e_k."""

    name: str
    kind: str
    basis: tuple
    constants: tuple  # c[i][j][k] as Fractions

    def __post_init__(self):
        if self.kind not in KINDS:
            raise AlgebraError(f"unknown kind {self.kind!r}")
        d = len(self.basis)
        c = self.constants
        if len(c) != d or any(len(r) != d or any(len(v) != d for v in r) for r in c):
            raise AlgebraError("structure constants must be dim x dim x dim")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _sparse(self):
        return tuple(
            (i, j, k, c)
            for i, row in enumerate(self.constants)
            for j, vec in enumerate(row)
            for k, c in enumerate(vec)
            if c
        )

    def _converted(self, field: Field):
        cache = self.__dict__.setdefault("_conv_cache", {})
        key = field.name
        if key not in cache:
            cache[key] = tuple((i, j, k, field.convert(c)) for i, j, k, c in self._sparse)
        return cache[key]

    def multiply(self, a: Sequence, b: Sequence, field: Field | None = None) -> tuple:
        """Bilinear product of coordinate vectors."""
        d = self.dim
        if len(a) != d or len(b) != d:
            raise AlgebraError(f"expected vectors of length {d}, got {len(a)} and {len(b)}")
        field = field or field_of(a[0])
        out = [field.zero] * d
        for i, j, k, c in self._converted(field):
            ai = a[i]
            if field.is_zero(ai):
                continue
            bj = b[j]
            if field.is_zero(bj):
                continue
            out[k] = out[k] + c * ai * bj
        return tuple(out)

    def unit(self, i: int, field: Field = QQ) -> tuple:
        return tuple(field.one if k == i else field.zero for k in range(self.dim))

    def vector(self, coords: dict, field: Field = QQ) -> tuple:
        """Vector from a {basis label: scalar} mapping."""
        out = [field.zero] * self.dim
        for label, c in coords.items():
            out[self.index(label)] = field.convert(c) if isinstance(c, (int, Fraction)) else c
        return tuple(out)

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise AlgebraError(f"{label!r} is not a basis label of {self.name}") from None

    def scaled(self, c) -> "AlgebraSpec":
        """Same algebra with the product multiplied by the constant ``c``."""
        c = Fraction(c)
        consts = tuple(tuple(tuple(v * c for v in vec) for vec in row) for row in self.constants)
        return AlgebraSpec(f"{self.name}*{format_fraction(c)}", self.kind, self.basis, consts)

    # --- axioms

    def associator_violations(self):
        F = QQ
        bad = []
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            a, b, c = self.unit(i), self.unit(j), self.unit(k)
            if self.multiply(self.multiply(a, b, F), c, F) != self.multiply(a, self.multiply(b, c, F), F):
                bad.append((i, j, k))
        return bad

    def jacobi_violations(self):
        F = QQ
        bad = []
        for i, j, k in itertools.combinations_with_replacement(range(self.dim), 3):
            a, b, c = self.unit(i), self.unit(j), self.unit(k)
            t1 = self.multiply(a, self.multiply(b, c, F), F)
            t2 = self.multiply(b, self.multiply(c, a, F), F)
            t3 = self.multiply(c, self.multiply(a, b, F), F)
            if any(x + y + z for x, y, z in zip(t1, t2, t3)):
                bad.append((i, j, k))
        return bad

    def is_antisymmetric(self) -> bool:
        d = self.dim
        c = self.constants
        return all(c[i][j][k] == -c[j][i][k] for i in range(d) for j in range(d) for k in range(d))

    def is_commutative(self) -> bool:
        d = self.dim
        c = self.constants
        return all(c[i][j][k] == c[j][i][k] for i in range(d) for j in range(d) for k in range(d))

    def validate(self) -> None:
        """Raise AlgebraError unless the constants satisfy the axioms of ``kind``."""
        if self.kind == LIE:
            if not self.is_antisymmetric():
                raise AlgebraError(f"{self.name}: bracket is not antisymmetric")
            bad = self.jacobi_violations()
            if bad:
                raise AlgebraError(f"{self.name}: Jacobi fails on {bad[0]}")
        elif self.kind == ASSOCIATIVE:
            bad = self.associator_violations()
            if bad:
                raise AlgebraError(f"{self.name}: associativity fails on {bad[0]}")
        elif not self.is_commutative():
            raise AlgebraError(f"{self.name}: Jordan product is not commutative")

    # --- serialization

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "basis": list(self.basis),
            "constants": [[[format_fraction(v) for v in vec] for vec in row] for row in self.constants],
        }

    @classmethod
    def from_json(cls, data) -> "AlgebraSpec":
        if isinstance(data, str):
            data = json.loads(data)
        consts = tuple(
            tuple(tuple(Fraction(v) for v in vec) for vec in row) for row in data["constants"]
        )
        return cls(data["name"], data["kind"], tuple(data["basis"]), consts)


def from_table(name: str, kind: str, basis: Sequence[str], table: dict) -> AlgebraSpec:
    """Build a spec from {(label_i, label_j): {label_k: coeff}} (missing products are 0).

    For Lie algebras only one of each antisymmetric pair needs listing.
    """
    d = len(basis)
    pos = {b: i for i, b in enumerate(basis)}
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for (a, b), out in table.items():
        for k, v in out.items():
            c[pos[a]][pos[b]][pos[k]] = Fraction(v)
            if kind == LIE:
                c[pos[b]][pos[a]][pos[k]] = -Fraction(v)
    consts = tuple(tuple(tuple(v) for v in row) for row in c)
    return AlgebraSpec(name, kind, tuple(basis), consts)


def _with_unit(basis, unit, table):
    full = dict(table)
    for b in basis:
        full[(unit, b)] = {b: 1}
        full[(b, unit)] = {b: 1}
    return full


def sweedler() -> AlgebraSpec:
    # g^2 = 1, x^2 = 0, xg = -gx
    basis = ("1", "g", "x", "gx")
    table = {
        ("g", "g"): {"1": 1},
        ("g", "x"): {"gx": 1},
        ("g", "gx"): {"x": 1},
        ("x", "g"): {"gx": -1},
        ("x", "x"): {},
        ("x", "gx"): {},
        ("gx", "g"): {"x": -1},
        ("gx", "x"): {},
        ("gx", "gx"): {},
    }
    return from_table("h4", ASSOCIATIVE, basis, _with_unit(basis, "1", table))


def adjoint_minus(spec: AlgebraSpec, name: str | None = None) -> AlgebraSpec:
    """Commutator algebra [a, b] = ab - ba."""
    if spec.kind != ASSOCIATIVE:
        raise AlgebraError(f"{spec.name} is not associative")
    spec.validate()
    d = spec.dim
    c = spec.constants
    consts = tuple(
        tuple(tuple(c[i][j][k] - c[j][i][k] for k in range(d)) for j in range(d)) for i in range(d)
    )
    out = AlgebraSpec(name or f"{spec.name}^(-)", LIE, spec.basis, consts)
    out.validate()
    return out


def adjoint_plus(spec: AlgebraSpec, name: str | None = None) -> AlgebraSpec:
    """Jordan algebra a∘b = (ab + ba)/2; needs characteristic != 2."""
    if spec.kind != ASSOCIATIVE:
        raise AlgebraError(f"{spec.name} is not associative")
    spec.validate()
    d = spec.dim
    c = spec.constants
    half = Fraction(1, 2)
    consts = tuple(
        tuple(tuple((c[i][j][k] + c[j][i][k]) * half for k in range(d)) for j in range(d))
        for i in range(d)
    )
    out = AlgebraSpec(name or f"{spec.name}^(+)", JORDAN, spec.basis, consts)
    out.validate()
    return out


def transport(spec: AlgebraSpec, new_basis, labels, name: str | None = None) -> AlgebraSpec:
    """Rewrite ``spec`` in a new basis.

    ``new_basis[k]`` is the k-th new basis vector in old coordinates.
    """
    d = spec.dim
    P = linalg.transpose([tuple(Fraction(x) for x in v) for v in new_basis])  # columns = new vectors
    Pinv = linalg.inverse(P, QQ)
    consts = []
    for a in range(d):
        row = []
        for b in range(d):
            prod = spec.multiply(tuple(Fraction(x) for x in new_basis[a]), tuple(Fraction(x) for x in new_basis[b]), QQ)
            row.append(linalg.mat_vec(Pinv, prod, QQ))
        consts.append(tuple(row))
    return AlgebraSpec(name or spec.name, spec.kind, tuple(labels), tuple(consts))


# basis change (1, g, x, gx) <-> (1, g, e, f)
_EF_IN_XGX = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1))  # rows: 1, g, e, f


def change_basis_ef_to_xgx(v: Sequence, field: Field | None = None) -> tuple:
    """(1, g, e, f)-coordinates -> (1, g, x, gx)-coordinates."""
    field = field or field_of(v[0])
    one, g, e, f = v
    return (one, g, e + f, e - f)


def change_basis_xgx_to_ef(v: Sequence, field: Field | None = None) -> tuple:
    """(1, g, x, gx)-coordinates -> (1, g, e, f)-coordinates; x = (e+f)/2, gx = (e-f)/2."""
    field = field or field_of(v[0])
    half = field.one / field.convert(2)
    one, g, x, gx = v
    return (one, g, (x + gx) * half, (x - gx) * half)


def ef_to_xgx_matrix(field: Field = QQ):
    """Matrix sending (1,g,e,f)-coordinates to (1,g,x,gx)-coordinates."""
    cols = [change_basis_ef_to_xgx(tuple(field.one if k == i else field.zero for k in range(4)))
            for i in range(4)]
    return linalg.transpose(cols)


def _h4minus() -> AlgebraSpec:
    return transport(adjoint_minus(sweedler()), _EF_IN_XGX, ("1", "g", "e", "f"), "h4minus")


def _h4plus() -> AlgebraSpec:
    return transport(adjoint_plus(sweedler()), _EF_IN_XGX, ("1", "g", "e", "f"), "h4plus")


def hef_algebra() -> AlgebraSpec:
    return from_table("lm2", LIE, ("h", "e", "f"), {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}})


def hyz_algebra() -> AlgebraSpec:
    return from_table("lm3", LIE, ("h", "y", "z"), {("h", "y"): {"y": 2}})


ALGEBRAS = {
    "h4": sweedler(),
    "h4minus": _h4minus(),
    "h4plus": _h4plus(),
    "lm2": hef_algebra(),
    "lm3": hyz_algebra(),
}


def get_algebra(name: str) -> AlgebraSpec:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise AlgebraError(f"unknown algebra {name!r}; choose from {sorted(ALGEBRAS)}") from None


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Subspace given by a reduced row echelon basis."""

    ambient: int
    basis: tuple = dc_field(default=())

    @classmethod
    def span(cls, vectors, ambient: int, field: Field | None = None) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        if not vectors:
            return cls(ambient, ())
        field = field or field_of(vectors[0][0])
        red, _ = linalg.rref(vectors, field)
        return cls(ambient, tuple(red))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v, field: Field | None = None) -> bool:
        if not self.basis:
            return all(x == 0 for x in v)
        field = field or field_of(v[0])
        return linalg.rank(list(self.basis) + [tuple(v)], field) == self.dim

    def __contains__(self, v):
        return self.contains(v)


@dataclass(frozen=True)
class SubspaceInfo:
    is_subalgebra: bool
    is_ideal: bool
    is_abelian: bool


def subspace_ops(spec: AlgebraSpec, S: Subspace, field: Field | None = None) -> SubspaceInfo:
    if S.ambient != spec.dim:
        raise AlgebraError("subspace lives in a different dimension")
    if not S.basis:
        return SubspaceInfo(True, True, True)
    field = field or field_of(S.basis[0][0])
    prods = [spec.multiply(u, v, field) for u in S.basis for v in S.basis]
    sub = all(S.contains(w, field) for w in prods)
    abelian = all(field.is_zero(x) for w in prods for x in w)
    ideal = sub and all(
        S.contains(spec.multiply(u, spec.unit(i, field), field), field)
        and S.contains(spec.multiply(spec.unit(i, field), u, field), field)
        for u in S.basis
        for i in range(spec.dim)
    )
    return SubspaceInfo(sub, ideal, abelian)


def identify_ideal(spec: AlgebraSpec, S: Subspace, field: Field | None = None):
    """Name an ideal of H4^(-): one of K, K_e, K_f, I, J (with alpha), other.

    Returns (tag, alpha) with alpha None except for J.
    """
    if spec.basis != ("1", "g", "e", "f") or spec.kind != LIE:
        raise AlgebraError("ideal names are defined for h4minus only")
    field = field or (field_of(S.basis[0][0]) if S.basis else QQ)
    if not subspace_ops(spec, S, field).is_ideal:
        raise AlgebraError("subspace is not an ideal")
    z, o = field.zero, field.one
    named = {
        "K": [(z, z, o, z), (z, z, z, o)],
        "K_e": [(o, z, z, z), (z, z, o, z)],
        "K_f": [(o, z, z, z), (z, z, z, o)],
        "I": [(o, z, z, z), (z, z, o, z), (z, z, z, o)],
    }
    for tag, vecs in named.items():
        if S == Subspace.span(vecs, 4, field):
            return tag, None
    e, f = (z, z, o, z), (z, z, z, o)
    if S.dim == 3 and S.contains(e, field) and S.contains(f, field):
        # the unique representative alpha*1 + g
        for row in S.basis:
            if not field.is_zero(row[1]):
                alpha = row[0] / row[1]
                return "J", alpha
    return "other", None


# --------------------------------------------------------------------------
# automorphisms


@dataclass(frozen=True)
class Automorphism:
    """Invertible linear map (columns = images of basis vectors) certified multiplicative."""

    spec: AlgebraSpec
    matrix: tuple  # rows
    name: str = ""

    def __post_init__(self):
        bad = automorphism_violations(self.spec, self.matrix)
        if bad:
            raise AlgebraError(f"{self.name or 'map'} is not multiplicative on pair {bad[0]}")
        try:
            linalg.inverse(self.matrix, QQ)
        except ValueError:
            raise AlgebraError(f"{self.name or 'map'} is not invertible") from None

    def over(self, field: Field):
        return tuple(tuple(field.convert(x) for x in row) for row in self.matrix)

    def inverse_over(self, field: Field):
        inv = linalg.inverse(self.matrix, QQ)
        return tuple(tuple(field.convert(x) for x in row) for row in inv)


def automorphism_violations(spec: AlgebraSpec, matrix):
    F = QQ
    m = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    bad = []
    for i in range(spec.dim):
        for j in range(spec.dim):
            si = linalg.mat_vec(m, spec.unit(i, F), F)
            sj = linalg.mat_vec(m, spec.unit(j, F), F)
            lhs = spec.multiply(si, sj, F)
            rhs = linalg.mat_vec(m, spec.multiply(spec.unit(i, F), spec.unit(j, F), F), F)
            if lhs != rhs:
                bad.append((spec.basis[i], spec.basis[j]))
    return bad


def _from_images(spec: AlgebraSpec, images: dict):
    cols = [spec.vector(images[b]) for b in spec.basis]
    return linalg.transpose(cols)


def phi() -> Automorphism:
    """1 -> 1, g -> -g, e -> -f, f -> -e on h4minus."""
    spec = ALGEBRAS["h4minus"]
    m = _from_images(spec, {"1": {"1": 1}, "g": {"g": -1}, "e": {"f": -1}, "f": {"e": -1}})
    return Automorphism(spec, m, "phi")


def psi() -> Automorphism:
    """h -> -h, e -> -f, f -> -e on lm2."""
    spec = ALGEBRAS["lm2"]
    m = _from_images(spec, {"h": {"h": -1}, "e": {"f": -1}, "f": {"e": -1}})
    return Automorphism(spec, m, "psi")


NAMED_AUTOMORPHISMS = {"h4minus": phi, "lm2": psi}
