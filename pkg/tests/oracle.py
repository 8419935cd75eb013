"""Independent reference implementations used to freeze expected values.

Nothing here imports the package's arithmetic or structure constants. Each
algebra is realized by concrete sympy matrices (H4 inside 4x4 matrices, the
two 3-dimensional Lie algebras inside 3x3 matrices). Products are matrix
products or commutators, and coordinates come from solving a linear system.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

import sympy as sp

E = lambda i, j, n=4: sp.Matrix(n, n, lambda r, c: 1 if (r, c) == (i, j) else 0)  # noqa: E731

# H4: g = diag(1, 1, -1, -1), x = E13 + E42 (0-based E02 + E31); x^2 = 0, xg = -gx.
_G = sp.diag(1, 1, -1, -1)
_X = E(0, 2) + E(3, 1)
H4_XGX = [sp.eye(4), _G, _X, _G * _X]
H4_EF = [sp.eye(4), _G, _X + _G * _X, _X - _G * _X]

# [h,e] = 2e, [h,f] = -2f, [e,f] = 0
_H2 = sp.diag(1, -1, 3)
LM2 = [_H2, E(0, 1, 3), E(0, 2, 3)]
# [h,y] = 2y, [h,z] = [y,z] = 0
LM3 = [sp.diag(1, -1, 0), E(0, 1, 3), E(2, 2, 3)]

MODELS = {
    "h4": (H4_XGX, "assoc"),
    "h4minus": (H4_EF, "lie"),
    "h4plus": (H4_EF, "jordan"),
    "h4minus_xgx": (H4_XGX, "lie"),
    "lm2": (LM2, "lie"),
    "lm3": (LM3, "lie"),
}


def _product(kind):
    if kind == "assoc":
        return lambda a, b: a * b
    if kind == "lie":
        return lambda a, b: a * b - b * a
    return lambda a, b: (a * b + b * a) / 2


@lru_cache(maxsize=None)
def structure_constants(name: str):
    """c[i][j] = coordinate vector of m(b_i, b_j), as sympy Rationals."""
    basis, kind = MODELS[name]
    mul = _product(kind)
    flat = sp.Matrix.hstack(*[b.reshape(len(b), 1) for b in basis])
    out = []
    for a in basis:
        row = []
        for b in basis:
            target = mul(a, b).reshape(len(a), 1)
            sol, params = flat.gauss_jordan_solve(target)
            assert not params.free_symbols
            row.append(tuple(sp.nsimplify(v) for v in sol))
        out.append(tuple(row))
    return tuple(out)


def multiply(name, u, v):
    c = structure_constants(name)
    n = len(c)
    return [
        sp.expand(sum(u[i] * v[j] * c[i][j][k] for i in range(n) for j in range(n)))
        for k in range(n)
    ]


def residuals(name, M, lam):
    """All basis-pair residuals m(Ra,Rb) - R(m(Ra,b) + m(a,Rb) + lam m(a,b)), simplified."""
    n = M.shape[0]
    cols = [list(M[:, j]) for j in range(n)]
    unit = lambda i: [1 if k == i else 0 for k in range(n)]  # noqa: E731
    out = {}
    for i in range(n):
        for j in range(n):
            lhs = multiply(name, cols[i], cols[j])
            inner = [
                a + b + lam * c
                for a, b, c in zip(
                    multiply(name, cols[i], unit(j)),
                    multiply(name, unit(i), cols[j]),
                    multiply(name, unit(i), unit(j)),
                )
            ]
            rhs = list(M * sp.Matrix(inner))
            out[(i, j)] = [sp.simplify(sp.together(a - b)) for a, b in zip(lhs, rhs)]
    return out


def is_rb(name, M, lam) -> bool:
    return all(x == 0 for vec in residuals(name, M, lam).values() for x in vec)


def _sym(text):
    names = {n: sp.Symbol(n) for n in re.findall(r"[A-Za-z_]\w*", text)}
    return sp.parse_expr(text.replace("^", "**"), local_dict=names)


def family_matrix(fam):
    """The exported matrix of a family as sympy, with each Zero atom solved away.

    A Zero atom is solved for its first variable (other than lam) that
    occurs linearly with a constant coefficient.
    """
    data = fam.to_json()
    M = sp.Matrix([[_sym(x) for x in row] for row in data["matrix"]])
    lam = sp.Symbol("lam")
    for atom in data["constraint"]:
        if atom["kind"] != "zero":
            continue
        poly = _sym(atom["poly"])
        for v in sorted(poly.free_symbols - {lam}, key=str):
            coeff = sp.diff(poly, v)
            if coeff.free_symbols or coeff == 0:
                continue
            M = M.subs(v, sp.solve(poly, v)[0])
            break
        else:
            raise ValueError(f"cannot solve zero atom {atom['poly']}")
    return M


# ------------------------------------------------------------------ brute force over F_p


@lru_cache(maxsize=None)
def _int_constants(name, p):
    c = structure_constants(name)
    n = len(c)
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = c[i][j][k]
                if v != 0:
                    out.append((i, j, k, int(v.p * pow(int(v.q), -1, p)) % p))
    return n, tuple(out)


def is_rb_mod_p(name, flat, lam, p) -> bool:
    """Row-major int matrix check over F_p with plain integers."""
    n, sparse = _int_constants(name, p)
    col = [[flat[r * n + c] for r in range(n)] for c in range(n)]

    def mul(u, v):
        w = [0] * n
        for i, j, k, c in sparse:
            w[k] += c * u[i] * v[j]
        return w

    def apply(v):
        return [sum(flat[r * n + c] * v[c] for c in range(n)) for r in range(n)]

    for i in range(n):
        for j in range(n):
            ei = [int(k == i) for k in range(n)]
            ej = [int(k == j) for k in range(n)]
            lhs = mul(col[i], col[j])
            inner = [a + b + lam * c for a, b, c in zip(mul(col[i], ej), mul(ei, col[j]), mul(ei, ej))]
            rhs = apply(inner)
            if any((a - b) % p for a, b in zip(lhs, rhs)):
                return False
    return True


def brute_force(name, p, lam):
    n, _ = _int_constants(name, p)
    return [m for m in itertools.product(range(p), repeat=n * n) if is_rb_mod_p(name, m, lam, p)]
