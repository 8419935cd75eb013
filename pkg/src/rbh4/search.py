"""Exhaustive finite-field search for RB operators, coverage and the Lie/associative comparison.

The scan enumerates every dim x dim matrix over F_p in row-major
lexicographic order. The space is cut into prefix partitions: a task fixes
the leading matrix entries and sweeps a cached grid of all suffixes with
numpy. Basis pairs are tested one at a time and only survivors of a pair are
passed to the next, so most candidates die on the first (nonzero-product)
pair.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import linalg
from .algebra import NAMED_AUTOMORPHISMS, AlgebraSpec, ef_to_xgx_matrix, get_algebra
from .catalog import Family, families_for, instance_index
from .exactalg import GF
from .rbcore import LinearOperator, RBReport, check_rb, conjugate, kernel_basis, pair_order

__all__ = [
    "SearchError",
    "SearchTask",
    "make_tasks",
    "run_task",
    "scan",
    "enumerate_all",
    "CoverageReport",
    "coverage",
    "compare_lie_vs_assoc",
    "key_to_operator",
    "to_ef",
    "to_xgx",
    "ALLOWED_PRIMES",
]

ALLOWED_PRIMES = (3, 5, 7)
MAX_SPACE = 10**8
SUFFIX_LIMIT = 1 << 16


class SearchError(ValueError):
    pass


def check_bounds(dim: int, p: int) -> None:
    if p not in ALLOWED_PRIMES:
        raise SearchError(f"prime {p} not supported; use one of {ALLOWED_PRIMES}")
    if dim == 4 and p != 3:
        raise SearchError("4-dimensional scans are limited to p = 3")
    if p ** (dim * dim) > MAX_SPACE:
        raise SearchError(f"search space {p}^{dim * dim} exceeds the bound {MAX_SPACE}")


@dataclass(frozen=True)
class SearchTask:
    """Prefix partition: matrices whose first ``prefix_len`` entries, read as a
    base-p number, lie in [start, stop)."""

    algebra: str
    p: int
    lam: int
    prefix_len: int
    start: int
    stop: int


def _suffix_len(dim: int, p: int) -> int:
    s = 0
    while s < dim * dim and p ** (s + 1) <= SUFFIX_LIMIT:
        s += 1
    return s


def make_tasks(algebra: str, p: int, lam: int, partitions: int = 1) -> list:
    """Split the full space into at most ``partitions`` contiguous prefix ranges."""
    spec = get_algebra(algebra)
    dim = spec.dim
    check_bounds(dim, p)
    lam %= p
    if lam == 0:
        raise SearchError("weight must be nonzero")
    k = dim * dim - _suffix_len(dim, p)
    total = p**k
    parts = max(1, min(partitions, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [SearchTask(algebra, p, lam, k, a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


@lru_cache(maxsize=8)
def _suffix_grid(p: int, s: int) -> np.ndarray:
    if s == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(p), repeat=s)), dtype=np.int64)


def _digits(n: int, p: int, k: int) -> list:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        n, out[i] = divmod(n, p)
    return out


@lru_cache(maxsize=16)
def _structure(algebra: str, p: int):
    spec = get_algebra(algebra)
    F = GF(p)
    sparse = tuple((i, j, k, int(c)) for i, j, k, c in spec._converted(F))
    return spec.dim, sparse, tuple(pair_order(spec))


def _mult(sparse, u, v, n):
    """Batched product of (B, n) coordinate arrays."""
    out = np.zeros((u.shape[0], n), dtype=np.int64)
    for a, b, k, c in sparse:
        out[:, k] += c * u[:, a] * v[:, b]
    return out


def _pair_ok(M, sparse, n, lam, p, i, j):
    """Mask of matrices in the (B, n, n) batch satisfying the identity on (i, j)."""
    Ri = M[:, :, i]
    Rj = M[:, :, j]
    lhs = _mult(sparse, Ri, Rj, n)
    inner = np.zeros_like(lhs)
    for a, b, k, c in sparse:
        if b == j:
            inner[:, k] += c * Ri[:, a]
        if a == i:
            inner[:, k] += c * Rj[:, b]
        if a == i and b == j:
            inner[:, k] += c * lam
    rhs = np.einsum("brc,bc->br", M, inner % p)
    return ((lhs - rhs) % p == 0).all(axis=1)


def filter_rb(M: np.ndarray, algebra: str, p: int, lam: int) -> np.ndarray:
    """Rows of the (B, n, n) batch that are RB operators, in input order."""
    n, sparse, pairs = _structure(algebra, p)
    for i, j in pairs:
        if M.shape[0] == 0:
            break
        M = M[_pair_ok(M, sparse, n, lam, p, i, j)]
    return M


def run_task(task: SearchTask) -> list:
    """Row-major int tuples of every RB operator in the partition, lexicographically."""
    n, _, _ = _structure(task.algebra, task.p)
    s = n * n - task.prefix_len
    grid = _suffix_grid(task.p, s)
    found = []
    for prefix in range(task.start, task.stop):
        head = np.array(_digits(prefix, task.p, task.prefix_len), dtype=np.int64)
        flat = np.empty((grid.shape[0], n * n), dtype=np.int64)
        flat[:, : task.prefix_len] = head
        flat[:, task.prefix_len:] = grid
        hits = filter_rb(flat.reshape(-1, n, n), task.algebra, task.p, task.lam)
        found.extend(tuple(int(x) for x in row.ravel()) for row in hits)
    return found


def scan(algebra: str, p: int, lam: int, jobs: int = 1, partitions: int | None = None) -> list:
    """All RB operators on ``algebra`` over F_p as sorted row-major int tuples."""
    tasks = make_tasks(algebra, p, lam, partitions or max(1, jobs) * 8)
    if jobs <= 1:
        chunks = map(run_task, tasks)
        return [key for chunk in chunks for key in chunk]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [key for chunk in pool.map(run_task, tasks) for key in chunk]


def key_to_operator(key: Sequence[int], p: int) -> LinearOperator:
    n = int(round(len(key) ** 0.5))
    F = GF(p)
    return LinearOperator(
        tuple(tuple(F.convert(key[r * n + c]) for c in range(n)) for r in range(n)), F
    )


def enumerate_all(spec: AlgebraSpec | str, p: int, lam, jobs: int = 1) -> Iterator[LinearOperator]:
    name = spec if isinstance(spec, str) else spec.name
    for key in scan(name, p, int(lam) % p, jobs):
        yield key_to_operator(key, p)


# ---------------------------------------------------------------- coverage


@dataclass
class Match:
    key: tuple
    family: str | None
    assignment: dict | None = None
    via: str | None = None


@dataclass
class CoverageReport:
    algebra: str
    p: int
    lam: int
    total: int
    per_family: dict = dc_field(default_factory=dict)
    per_family_via: dict = dc_field(default_factory=dict)
    unmatched: list = dc_field(default_factory=list)
    matches: list = dc_field(default_factory=list)

    @property
    def matched(self) -> int:
        return sum(self.per_family.values()) + sum(self.per_family_via.values())

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "p": self.p,
            "weight": self.lam,
            "total": self.total,
            "matched": self.matched,
            "per_family": self.per_family,
            "per_family_via_automorphism": self.per_family_via,
            "unmatched_count": len(self.unmatched),
            "unmatched": [_key_rows(k, self.p) for k in self.unmatched],
        }


def _key_rows(key, p):
    n = int(round(len(key) ** 0.5))
    return [[str(key[r * n + c]) for c in range(n)] for r in range(n)]


def coverage(
    ops: Iterable,
    algebra: str,
    p: int,
    lam: int,
    families: Sequence[Family] | None = None,
    automorphism: bool = True,
    supplementary: bool = False,
) -> CoverageReport:
    """Match every operator against the catalog, first match in catalog order.

    Operators with no direct match are retried after conjugation by the
    algebra's named automorphism (when ``automorphism`` is set), recording
    the automorphism under ``via``. ``supplementary`` appends the scan-derived
    families after the transcribed ones.
    """
    lam %= p
    if families is None:
        families = families_for(algebra, supplementary=supplementary)
    families = list(families)
    indexes = [(f, instance_index(f, p, lam)) for f in families]
    sigma = NAMED_AUTOMORPHISMS.get(algebra) if automorphism else None
    sigma = sigma() if sigma else None
    report = CoverageReport(algebra, p, lam, 0)
    report.per_family = {f.id: 0 for f in families}
    for op in ops:
        key = op.key() if isinstance(op, LinearOperator) else tuple(op)
        report.total += 1
        m = _lookup(key, indexes)
        if m is None and sigma is not None:
            conj = conjugate(key_to_operator(key, p), sigma).key()
            m = _lookup(conj, indexes)
            if m is not None:
                m.via = sigma.name
        if m is None:
            report.unmatched.append(key)
            report.matches.append(Match(key, None))
            continue
        m.key = key
        report.matches.append(m)
        bucket = report.per_family_via if m.via else report.per_family
        bucket[m.family] = bucket.get(m.family, 0) + 1
    return report


def _lookup(key, indexes):
    for fam, index in indexes:
        a = index.get(key)
        if a is not None:
            return Match(key, fam.id, a)
    return None


# ---------------------------------------------------------------- Lie versus associative


@dataclass
class Comparison:
    lie_operator: LinearOperator  # basis (1, g, e, f)
    assoc_operator: LinearOperator  # basis (1, g, x, gx)
    lie_report: RBReport
    assoc_report: RBReport


def to_xgx(R: LinearOperator) -> LinearOperator:
    """Operator on (1, g, e, f)-coordinates rewritten in (1, g, x, gx)-coordinates."""
    F = R.field
    S = ef_to_xgx_matrix(F)
    return LinearOperator(linalg.mat_mul(linalg.mat_mul(S, R.rows, F), linalg.inverse(S, F), F), F)


def to_ef(R: LinearOperator) -> LinearOperator:
    F = R.field
    S = ef_to_xgx_matrix(F)
    return LinearOperator(linalg.mat_mul(linalg.mat_mul(linalg.inverse(S, F), R.rows, F), S, F), F)


def compare_lie_vs_assoc(p: int, lam: int, jobs: int = 1, lie_keys: Sequence | None = None) -> list:
    """Operators passing the Lie check on H4(-) but failing the associative check on H4."""
    if p != 3:
        raise SearchError("the comparison runs the full 4-dimensional scan, available for p = 3")
    lam %= p
    keys = scan("h4minus", p, lam, jobs) if lie_keys is None else lie_keys
    h4 = get_algebra("h4")
    h4m = get_algebra("h4minus")
    out = []
    for key in keys:
        R = key_to_operator(key, p)
        A = to_xgx(R)
        assoc = check_rb(h4, A, lam, first_failure=True)
        if not assoc.passed:
            out.append(Comparison(R, A, check_rb(h4m, R, lam), assoc))
    return out


def kernel_dim(R: LinearOperator) -> int:
    return kernel_basis(R).dim
