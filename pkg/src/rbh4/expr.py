"""Small expression language for operator images and canonical scalar strings.

Expressions are Python-syntax arithmetic (``^`` is accepted for powers).
Their atoms are numbers and names; a name is a parameter, a basis element or
a previously defined vector. Scalars evaluate to :class:`RationalFunction`; basis names evaluate
to coordinate vectors, so ``-(lam + p1)*x + p2*gx`` is a vector.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from typing import Mapping, Sequence

from .exactalg import RationalFunction, Polynomial, _as_rf

__all__ = ["ExprError", "evaluate", "parse_scalar", "parse_polynomial", "Vec"]


class ExprError(ValueError):
    pass


class Vec(tuple):
    """Coordinate vector of rational functions supporting linear operations."""

    def __add__(self, other):
        if not isinstance(other, Vec):
            if _is_zero_scalar(other):
                return self
            raise ExprError("cannot add a scalar to a vector")
        return Vec(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Vec):
            if _is_zero_scalar(other):
                return self
            raise ExprError("cannot subtract a scalar from a vector")
        return Vec(a - b for a, b in zip(self, other))

    def __rsub__(self, other):
        if _is_zero_scalar(other):
            return -self
        raise ExprError("cannot subtract a vector from a scalar")

    def __neg__(self):
        return Vec(-a for a in self)

    def __mul__(self, other):
        if isinstance(other, Vec):
            raise ExprError("product of two vectors is not defined here")
        return Vec(a * other for a in self)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Vec):
            raise ExprError("division by a vector")
        return Vec(a / other for a in self)


def _is_zero_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, RationalFunction)) and not isinstance(x, Vec) and (
        x == 0 if not isinstance(x, RationalFunction) else x.is_zero()
    )


_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def evaluate(text: str, env: Mapping[str, object] | None = None, basis: Sequence[str] = ()):
    """Evaluate ``text``.

    Names found in ``env`` resolve to their value; names in ``basis`` resolve
    to unit vectors; any other identifier is a polynomial variable.
    """
    env = env or {}
    src = text.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {text!r}: {exc.msg}") from exc
    units = {}
    for i, name in enumerate(basis):
        units[name] = Vec(_as_rf(1 if k == i else 0) for k in range(len(basis)))

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise ExprError(f"only integer literals allowed, got {node.value!r}")
            return _as_rf(node.value)
        if isinstance(node, ast.Name):
            if node.id in env:
                return env[node.id]
            if node.id in units:
                return units[node.id]
            return _as_rf(Polynomial.variable(node.id))
        if isinstance(node, ast.UnaryOp):
            v = walk(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = walk(node.left)
                exp = node.right
                if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                    exp, sign = exp.operand, -1
                else:
                    sign = 1
                if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                    raise ExprError("exponent must be an integer literal")
                return base ** (sign * exp.value)
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(walk(node.left), walk(node.right))
        raise ExprError(f"unsupported syntax in {text!r}: {ast.dump(node)[:60]}")

    return walk(tree)


def parse_scalar(text: str) -> RationalFunction:
    value = evaluate(text)
    if isinstance(value, Vec):
        raise ExprError(f"{text!r} is a vector, expected a scalar")
    return value


def parse_polynomial(text: str) -> Polynomial:
    value = parse_scalar(text)
    if value.den:
        raise ExprError(f"{text!r} is not a polynomial")
    return value.num
