"""Exact scalar arithmetic.

Rationals are :class:`fractions.Fraction`. On top of them this module builds
sparse multivariate polynomials and rational functions whose denominators are
kept as products of factors. Prime fields come from :func:`GF`. Every scalar
type is wrapped in a ``Field`` object (such as :data:`QQ` or :data:`RF`) so
that linear-algebra code sees a single interface.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "Polynomial",
    "RationalFunction",
    "GFElement",
    "Field",
    "QQ",
    "RF",
    "GF",
    "field_of",
    "var",
    "const",
    "poly_arith",
    "ratfunc_arith",
    "poly_eval",
    "is_zero",
    "format_fraction",
    "parse_fraction",
    "symbol_key",
    "MissingSymbolError",
]


class MissingSymbolError(KeyError):
    """Raised when evaluating a polynomial without a value for one of its variables."""

    def __init__(self, symbol: str):
        super().__init__(symbol)
        self.symbol = symbol

    def __str__(self):
        return f"no value assigned to symbol {self.symbol!r}"


def symbol_key(name: str):
    # global total order on symbols; the weight symbol always sorts last
    return (name == "lam", name)


def format_fraction(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    return Fraction(s.strip())


# --------------------------------------------------------------------------
# prime fields


class GFElement:
    """An element of the prime field F_p, p odd."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Fraction):
            value = value.numerator * pow(value.denominator, -1, p)
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return GFElement(other, self.p).value
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise ZeroDivisionError("zero has no inverse in F_%d" % self.p)
        return GFElement(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * GFElement(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GFElement(o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return GFElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == GFElement(other, self.p).value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF{self.p}({self.value})"

    def __str__(self):
        return str(self.value)


# --------------------------------------------------------------------------
# polynomials


def _align(vars_a, vars_b):
    if vars_a == vars_b:
        return vars_a, None, None
    merged = tuple(sorted(set(vars_a) | set(vars_b), key=symbol_key))
    pos = {v: i for i, v in enumerate(merged)}
    return merged, [pos[v] for v in vars_a], [pos[v] for v in vars_b]


def _lift(terms, slots, width):
    if slots is None:
        return terms
    out = {}
    for mono, c in terms.items():
        m = [0] * width
        for s, e in zip(slots, mono):
            m[s] = e
        out[tuple(m)] = c
    return out


class Polynomial:
    """Sparse multivariate polynomial with rational coefficients.

    ``vars`` is the variable table (sorted by :func:`symbol_key`); ``terms``
    maps dense exponent tuples (one slot per variable) to nonzero
    coefficients. Variables that do not occur are pruned, so two equal
    polynomials always have identical tables.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None, vars: Iterable[str] = ()):
        vars = tuple(vars)
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        # prune unused variables
        if vars:
            used = [i for i in range(len(vars)) if any(m[i] for m in clean)]
            if len(used) != len(vars):
                vars = tuple(vars[i] for i in used)
                clean = {tuple(m[i] for i in used): c for m, c in clean.items()}
        self.vars = vars
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(): Fraction(c)}, ())

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls({(1,): Fraction(1)}, (name,))

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self) -> Fraction:
        if self.vars:
            raise ValueError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    def variables(self) -> tuple:
        return self.vars

    # arithmetic
    def _binary(self, other, sign):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        merged, sa, sb = _align(self.vars, other.vars)
        a = _lift(self.terms, sa, len(merged))
        b = _lift(other.terms, sb, len(merged))
        out = dict(a)
        for m, c in b.items():
            out[m] = out.get(m, 0) + sign * c
        return Polynomial(out, merged)

    def __add__(self, other):
        return self._binary(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, -1)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other._binary(self, -1)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.vars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({m: c * other for m, c in self.terms.items()}, self.vars)
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        merged, sa, sb = _align(self.vars, other.vars)
        a = _lift(self.terms, sa, len(merged))
        b = _lift(other.terms, sb, len(merged))
        out = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial(out, merged)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # ordering / division
    def _sorted_monomials(self):
        # graded lex, descending
        return sorted(self.terms, key=lambda m: (sum(m), m), reverse=True)

    def leading(self):
        """(monomial, coefficient) of the leading term in lex order."""
        m = max(self.terms)
        return m, self.terms[m]

    def exact_div(self, other: "Polynomial") -> "Polynomial | None":
        """Quotient ``self / other`` if ``other`` divides exactly, else None.

        One-divisor lex division: the remainder is zero iff ``other`` divides.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Polynomial()
        if not set(other.vars) <= set(self.vars):
            return None
        width = len(self.vars)
        sb = [self.vars.index(v) for v in other.vars]
        div = _lift(other.terms, sb, width)
        lt_d = max(div)
        lc_d = div[lt_d]
        rem = dict(self.terms)
        quot = {}
        while rem:
            lt = max(rem)
            if any(a < b for a, b in zip(lt, lt_d)):
                return None
            qm = tuple(a - b for a, b in zip(lt, lt_d))
            qc = rem[lt] / lc_d
            quot[qm] = quot.get(qm, 0) + qc
            for m, c in div.items():
                mm = tuple(a + b for a, b in zip(qm, m))
                v = rem.get(mm, 0) - qc * c
                if v:
                    rem[mm] = v
                else:
                    rem.pop(mm, None)
        return Polynomial(quot, self.vars)

    # evaluation / substitution
    def eval(self, assignment: Mapping[str, object], field: "Field | None" = None):
        for v in self.vars:
            if v not in assignment:
                raise MissingSymbolError(v)
        vals = [assignment[v] for v in self.vars]
        if field is None:
            field = field_of(vals[0]) if vals else QQ
        total = field.zero
        for mono, c in self.terms.items():
            t = field.convert(c)
            for x, e in zip(vals, mono):
                if e:
                    t = t * x**e
            total = total + t
        return total

    def subs(self, mapping: Mapping[str, object]):
        """Substitute polynomials or rational functions for some variables."""
        if not any(v in mapping for v in self.vars):
            return self
        result = Polynomial()
        for mono, c in self.terms.items():
            t = Polynomial.constant(c)
            for v, e in zip(self.vars, mono):
                if not e:
                    continue
                if v in mapping:
                    t = t * (mapping[v] ** e)
                else:
                    t = t * Polynomial({(e,): 1}, (v,))
            result = result + t
        return result

    def degree_in(self, name: str) -> int:
        if name not in self.vars:
            return 0
        i = self.vars.index(name)
        return max(m[i] for m in self.terms)

    def coefficient_of(self, name: str, power: int) -> "Polynomial":
        """Coefficient polynomial of ``name**power``."""
        if name not in self.vars:
            return self if power == 0 else Polynomial()
        i = self.vars.index(name)
        out = {}
        for m, c in self.terms.items():
            if m[i] == power:
                out[m[:i] + (0,) + m[i + 1:]] = c
        return Polynomial(out, self.vars)

    def content_normalized(self):
        """Split into (leading coefficient, monic polynomial)."""
        if self.is_zero():
            return Fraction(1), self
        _, lc = self.leading()
        return lc, self * (1 / lc)

    # text
    def to_str(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in self._sorted_monomials():
            c = self.terms[mono]
            factors = []
            for v, e in zip(self.vars, mono):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(c)
            if factors:
                body = "*".join(factors)
                if mag != 1:
                    body = f"{format_fraction(mag)}*{body}"
            else:
                body = format_fraction(mag)
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_str

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return NotImplemented


def var(name: str) -> Polynomial:
    return Polynomial.variable(name)


def const(c) -> Polynomial:
    return Polynomial.constant(c)


# --------------------------------------------------------------------------
# rational functions


def _factor_key(p: Polynomial):
    return (p.vars, tuple(sorted(p.terms.items())))


class RationalFunction:
    """Quotient of a polynomial by a product of nonzero polynomial factors.

    The denominator is a sorted tuple of monic, nonconstant factors. No
    multivariate gcd is taken: after each operation only factors that divide
    the numerator exactly are cancelled. Equality is cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den: Iterable[Polynomial] = ()):
        num = _as_poly(num) if not isinstance(num, Polynomial) else num
        scale = Fraction(1)
        factors = []
        for d in den:
            if d.is_zero():
                raise ZeroDivisionError("denominator is the zero polynomial")
            if d.is_constant():
                scale *= d.constant_value()
                continue
            lc, monic = d.content_normalized()
            scale *= lc
            if len(monic.terms) == 1:
                # split monomials into single-variable factors
                (mono,) = monic.terms
                for v, e in zip(monic.vars, mono):
                    factors.extend([Polynomial.variable(v)] * e)
            else:
                factors.append(monic)
        if scale != 1:
            num = num * (1 / scale)
        factors.sort(key=_factor_key)
        self.num = num
        self.den = tuple(factors)
        if num.is_zero():
            self.den = ()
        else:
            self._cancel()

    def _cancel(self):
        num = self.num
        kept = []
        for d in self.den:
            q = num.exact_div(d)
            if q is None:
                kept.append(d)
            else:
                num = q
        self.num = num
        self.den = tuple(kept)

    @property
    def denominator(self) -> Polynomial:
        out = Polynomial.constant(1)
        for d in self.den:
            out = out * d
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        common, ra, rb = _lcm_factors(self.den, other.den)
        num = self.num * _prod(ra) + other.num * _prod(rb)
        return RationalFunction(num, common)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            out = RationalFunction.__new__(RationalFunction)
            out.num = self.num * other
            out.den = self.den if other else ()
            return out
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * _prod(other.den), self.den + (other.num,))

    def __rtruediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(1) / (self ** (-n))
        out = RationalFunction(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * _prod(other.den) == other.num * _prod(self.den)

    def __hash__(self):
        # equal values may have different denominators; hash is coarse on purpose
        return hash(self.num.is_zero())

    def eval(self, assignment, field: "Field | None" = None):
        n = self.num.eval(assignment, field)
        if not self.den:
            return n
        d = self.denominator.eval(assignment, field)
        fld = field or field_of(d)
        if fld.is_zero(d):
            raise ZeroDivisionError(f"denominator {self.denominator} vanishes")
        return n / d

    def subs(self, mapping):
        out = _as_rf(self.num.subs(mapping))
        for d in self.den:
            out = out / _as_rf(d.subs(mapping))
        return out

    def variables(self) -> tuple:
        names = set(self.num.vars)
        for d in self.den:
            names |= set(d.vars)
        return tuple(sorted(names, key=symbol_key))

    def to_str(self) -> str:
        if not self.den:
            return self.num.to_str()
        n = self.num.to_str()
        if len(self.num.terms) > 1 or "/" in n:
            n = f"({n})"
        ds = []
        for d in self.den:
            s = d.to_str()
            ds.append(s if s.isidentifier() else f"({s})")
        dens = "*".join(ds)
        if len(self.den) > 1:
            dens = f"({dens})"
        return f"{n}/{dens}"

    __str__ = to_str

    def __repr__(self):
        return f"RationalFunction({self.to_str()!r})"


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = x, ()
        return out
    if isinstance(x, (int, Fraction)):
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = Polynomial.constant(x), ()
        return out
    return NotImplemented


def _prod(polys) -> Polynomial:
    out = Polynomial.constant(1)
    for p in polys:
        out = out * p
    return out


def _lcm_factors(a, b):
    """Syntactic lcm of two factor multisets and the cofactors for each side."""
    rest_b = list(b)
    common = []
    for d in a:
        common.append(d)
        if d in rest_b:
            rest_b.remove(d)
    common.extend(rest_b)
    ra = list(common)
    for d in a:
        ra.remove(d)
    rb = list(common)
    for d in b:
        rb.remove(d)
    return tuple(common), ra, rb


# --------------------------------------------------------------------------
# fields


class Field:
    """Uniform access to zero, one and conversions for one scalar type."""

    def __init__(self, name: str, zero, one, convert, parse):
        self.name = name
        self.zero = zero
        self.one = one
        self._convert = convert
        self._parse = parse

    def convert(self, q):
        return self._convert(q)

    def parse(self, text) -> object:
        return self._parse(text)

    def is_zero(self, x) -> bool:
        if isinstance(x, RationalFunction):
            return x.is_zero()
        return x == 0

    def format(self, x) -> str:
        if isinstance(x, Fraction):
            return format_fraction(x)
        return str(x)

    @property
    def characteristic(self) -> int:
        return getattr(self, "p", 0)

    def elements(self):
        raise TypeError(f"field {self.name} is infinite")

    def __repr__(self):
        return f"<Field {self.name}>"


def _parse_rational(text) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational scalar: {text!r}") from exc


QQ = Field("Q", Fraction(0), Fraction(1), Fraction, _parse_rational)


def _rf_convert(q):
    return _as_rf(Fraction(q))


def _rf_parse(text):
    from .expr import parse_scalar  # local import: expr depends on this module

    return parse_scalar(str(text))


RF = Field("Q(params)", _as_rf(0), _as_rf(1), _rf_convert, _rf_parse)


class _PrimeField(Field):
    def __init__(self, p: int):
        self.p = p
        super().__init__(
            f"F{p}",
            GFElement(0, p),
            GFElement(1, p),
            lambda q: GFElement(Fraction(q), p),
            lambda t: GFElement(_parse_rational(t), p),
        )

    def elements(self):
        return [GFElement(v, self.p) for v in range(self.p)]


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, math.isqrt(n) + 1))


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    """The prime field F_p (p odd prime)."""
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _PrimeField(p)


def field_of(x) -> Field:
    if isinstance(x, GFElement):
        return GF(x.p)
    if isinstance(x, (RationalFunction, Polynomial)):
        return RF
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"no field for scalar {x!r}")


# --------------------------------------------------------------------------
# operation-level entry points


def poly_arith(a: Polynomial, b: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


def ratfunc_arith(a, b, kind: str) -> RationalFunction:
    a, b = _as_rf(a), _as_rf(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown kind {kind!r}")


def poly_eval(p, assignment, field: Field | None = None):
    return p.eval(assignment, field)


def is_zero(x) -> bool:
    if isinstance(x, (RationalFunction, Polynomial)):
        return x.is_zero() if isinstance(x, Polynomial) else x.num.is_zero()
    return x == 0
