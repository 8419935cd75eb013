"""Rota-Baxter identity checks and the structure of RB operators.

For a product m on an algebra and a weight lam, R is an RB operator when

    m(R a, R b) = R( m(R a, b) + m(a, R b) + lam * m(a, b) )

for all a, b. By bilinearity it suffices to check basis pairs. The same
formula covers associative, Lie (m = bracket) and Jordan products.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import (
    ASSOCIATIVE,
    JORDAN,
    LIE,
    AlgebraError,
    AlgebraSpec,
    Automorphism,
    Subspace,
    adjoint_minus,
    adjoint_plus,
    get_algebra,
    identify_ideal,
    subspace_ops,
)
from .exactalg import RF, Field, RationalFunction, _as_rf, field_of

__all__ = [
    "LinearOperator",
    "RBReport",
    "NotRBError",
    "rb_residual",
    "check_rb",
    "kernel_basis",
    "image_basis",
    "conjugate",
    "classify",
    "Classification",
    "resolve_spec",
    "pair_order",
]


class NotRBError(ValueError):
    """classify() was handed an operator that fails the RB identity."""


@dataclass(frozen=True)
class LinearOperator:
    """Square matrix over one field; column j is the image of basis vector j."""

    rows: tuple
    field: Field

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("operator matrix must be square")

    @classmethod
    def from_rows(cls, rows, field: Field | None = None) -> "LinearOperator":
        rows = [list(r) for r in rows]
        field = field or field_of(rows[0][0])
        conv = [tuple(x if _is_native(x, field) else field.convert(x) for x in r) for r in rows]
        return cls(tuple(conv), field)

    @classmethod
    def from_columns(cls, cols, field: Field | None = None) -> "LinearOperator":
        return cls.from_rows(linalg.transpose(cols), field)

    @classmethod
    def zero(cls, dim: int, field: Field) -> "LinearOperator":
        return cls(tuple((field.zero,) * dim for _ in range(dim)), field)

    @classmethod
    def scalar(cls, dim: int, c, field: Field) -> "LinearOperator":
        c = c if _is_native(c, field) else field.convert(c)
        return cls(
            tuple(tuple(c if i == j else field.zero for j in range(dim)) for i in range(dim)), field
        )

    @property
    def dim(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self) -> tuple:
        return linalg.transpose(self.rows)

    def apply(self, v: Sequence) -> tuple:
        F = self.field
        out = [F.zero] * self.dim
        for j, c in enumerate(v):
            if F.is_zero(c):
                continue
            for i in range(self.dim):
                a = self.rows[i][j]
                if not F.is_zero(a):
                    out[i] = out[i] + a * c
        return tuple(out)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(linalg.mat_mul(self.rows, other.rows, self.field), self.field)

    def scale(self, c) -> "LinearOperator":
        return LinearOperator(tuple(tuple(x * c for x in r) for r in self.rows), self.field)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for r in self.rows for x in r)

    def key(self) -> tuple:
        """Row-major flat tuple of ints (prime-field operators only)."""
        return tuple(int(x) for r in self.rows for x in r)

    def to_strings(self):
        return [[self.field.format(x) for x in r] for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.dim == other.dim and all(
            self.field.is_zero(a - b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __hash__(self):
        if self.field.characteristic:
            return hash(self.key())
        return hash(self.dim)


def _is_native(x, field: Field) -> bool:
    if field.characteristic:
        return getattr(x, "p", None) == field.characteristic
    if field.name == "Q":
        return isinstance(x, Fraction)
    return isinstance(x, RationalFunction)


@dataclass
class RBReport:
    verdict: str  # "pass" | "fail"
    residuals: list = dc_field(default_factory=list)  # [((label_i, label_j), vector)]
    field: Field | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        fmt = self.field.format if self.field else str
        return {
            "verdict": self.verdict,
            "residuals": [
                {"pair": list(pair), "residual": [fmt(x) for x in vec]} for pair, vec in self.residuals
            ],
        }


def _weight(lam, field: Field):
    if _is_native(lam, field):
        return lam
    if field is RF:
        return _as_rf(lam)
    return field.convert(lam)


def rb_residual(spec: AlgebraSpec, R: LinearOperator, lam, i: int, j: int) -> tuple:
    """m(Re_i, Re_j) - R(m(Re_i, e_j) + m(e_i, Re_j) + lam m(e_i, e_j))."""
    if R.dim != spec.dim:
        raise AlgebraError(f"operator has dim {R.dim}, algebra {spec.name} has dim {spec.dim}")
    F = R.field
    lam = _weight(lam, F)
    ei, ej = spec.unit(i, F), spec.unit(j, F)
    Ri, Rj = R.column(i), R.column(j)
    lhs = spec.multiply(Ri, Rj, F)
    inner = [a + b for a, b in zip(spec.multiply(Ri, ej, F), spec.multiply(ei, Rj, F))]
    mij = spec.multiply(ei, ej, F)
    inner = tuple(a + lam * c for a, c in zip(inner, mij))
    rhs = R.apply(inner)
    return tuple(a - b for a, b in zip(lhs, rhs))


def pair_order(spec: AlgebraSpec):
    """Basis pairs to check, pairs with a nonzero product first.

    Lie: i < j (antisymmetry; i = j is trivial). Jordan: i <= j (the identity
    is symmetric in a, b for a commutative product). Associative: all pairs.
    """
    d = spec.dim
    if spec.kind == LIE:
        pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    elif spec.kind == JORDAN:
        pairs = [(i, j) for i in range(d) for j in range(i, d)]
    else:
        pairs = [(i, j) for i in range(d) for j in range(d)]
    nonzero = {(i, j) for i, j, _, _ in spec._sparse}
    return sorted(pairs, key=lambda p: p not in nonzero)


def check_rb(spec: AlgebraSpec, R: LinearOperator, lam, first_failure: bool = False) -> RBReport:
    F = R.field
    residuals = []
    for i, j in pair_order(spec):
        r = rb_residual(spec, R, lam, i, j)
        if not all(F.is_zero(x) for x in r):
            residuals.append(((spec.basis[i], spec.basis[j]), r))
            if first_failure:
                break
    return RBReport("fail" if residuals else "pass", residuals, F)


def resolve_spec(algebra: str | AlgebraSpec, kind: str = "auto") -> AlgebraSpec:
    """The algebra itself, or its commutator/Jordan algebra when ``kind`` asks for it."""
    spec = get_algebra(algebra) if isinstance(algebra, str) else algebra
    if kind in ("auto", spec.kind):
        return spec
    if spec.kind == ASSOCIATIVE and kind == LIE:
        return adjoint_minus(spec)
    if spec.kind == ASSOCIATIVE and kind == JORDAN:
        return adjoint_plus(spec)
    raise AlgebraError(f"cannot view {spec.name} ({spec.kind}) as a {kind} algebra")


def kernel_basis(R: LinearOperator) -> Subspace:
    return Subspace(R.dim, tuple(linalg.null_space(R.rows, R.field)))


def image_basis(R: LinearOperator) -> Subspace:
    return Subspace.span(R.columns, R.dim, R.field)


def conjugate(R: LinearOperator, sigma: Automorphism) -> LinearOperator:
    """sigma o R o sigma^-1."""
    if sigma.spec.dim != R.dim:
        raise AlgebraError("automorphism and operator dimensions differ")
    F = R.field
    S = LinearOperator(sigma.over(F), F)
    Sinv = LinearOperator(sigma.inverse_over(F), F)
    return S @ R @ Sinv


@dataclass(frozen=True)
class Classification:
    kernel_dim: int
    kernel_tag: str
    image_tag: str
    kernel_abelian: bool
    bucket: str
    kernel: Subspace
    image: Subspace

    def to_json(self, field: Field) -> dict:
        return {
            "kernel_dim": self.kernel_dim,
            "kernel_tag": self.kernel_tag,
            "image_tag": self.image_tag,
            "kernel_abelian": self.kernel_abelian,
            "theorem_bucket": self.bucket,
            "kernel_basis": [[field.format(x) for x in v] for v in self.kernel.basis],
            "image_basis": [[field.format(x) for x in v] for v in self.image.basis],
        }


def _tag(spec: AlgebraSpec, S: Subspace, field: Field) -> str:
    info = subspace_ops(spec, S, field)
    if spec.name == "h4minus" and info.is_ideal and 0 < S.dim < 4:
        tag, alpha = identify_ideal(spec, S, field)
        if tag == "J":
            return f"J_{field.format(alpha)}"
        if tag != "other":
            return tag
    if info.is_ideal:
        return "ideal"
    if info.is_subalgebra:
        return "subalgebra"
    return "subspace"


def classify(spec: AlgebraSpec, R: LinearOperator, lam) -> Classification:
    report = check_rb(spec, R, lam, first_failure=True)
    if not report.passed:
        pair = report.residuals[0][0]
        raise NotRBError(f"operator fails the RB identity on pair {pair}")
    F = R.field
    ker = kernel_basis(R)
    im = image_basis(R)
    ker_info = subspace_ops(spec, ker, F)
    kd = ker.dim
    if spec.name == "h4minus":
        if kd == 4:
            bucket = "zero"
        elif kd == 3:
            bucket = "kernel-dim-3"
        elif kd == 2:
            bucket = "kernel-dim-2-abelian" if ker_info.is_abelian else "kernel-dim-2-nonabelian"
        elif kd == 1:
            img = _tag(spec, im, F)
            if img == "I":
                bucket = "kernel-dim-1-image-I"
            elif img.startswith("J_"):
                bucket = "kernel-dim-1-image-J"
            else:
                bucket = "kernel-dim-1-image-nonideal"
        else:
            bucket = "nondegenerate"
    else:
        bucket = f"kernel-dim-{kd}"
    return Classification(kd, _tag(spec, ker, F), _tag(spec, im, F), ker_info.is_abelian, bucket, ker, im)
