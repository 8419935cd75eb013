import itertools
import random
from collections import Counter

import pytest

import oracle
from rbh4.algebra import get_algebra, phi
from rbh4.catalog import families_for
from rbh4.exactalg import GF
from rbh4.rbcore import check_rb, conjugate, kernel_basis
from rbh4.search import (
    SearchError,
    SearchTask,
    coverage,
    enumerate_all,
    key_to_operator,
    make_tasks,
    run_task,
    scan,
)

# [DERIVED] brute-force counts from the matrix-model oracle, frozen
N3_LM2 = 342
N3_LM3 = 864
N3_H4MINUS = 16686
N3_H4 = 672
N3_H4PLUS = 1608


@pytest.mark.parametrize("name,count", [("lm2", N3_LM2), ("lm3", N3_LM3)])
def test_three_dim_scan_equals_brute_force(name, count):
    keys = scan(name, 3, 1)
    assert len(keys) == count
    assert keys == oracle.brute_force(name, 3, 1)


def test_lm2_over_f5_matches_brute_force_on_a_slice():
    # full F_5 scan against the oracle restricted to the matrices with R(h) = 0
    keys = scan("lm2", 5, 2)
    slice_ = {k for k in keys if k[0] == k[3] == k[6] == 0}
    expected = {
        m for m in itertools.product(range(5), repeat=9)
        if m[0] == m[3] == m[6] == 0 and oracle.is_rb_mod_p("lm2", m, 2, 5)
    }
    assert slice_ == expected


@pytest.mark.parametrize("name", ["lm2", "lm3"])
def test_partition_count_does_not_change_output(name):
    base = scan(name, 3, 2, partitions=1)
    for parts in (3, 7, 50, 10_000):
        assert scan(name, 3, 2, partitions=parts) == base


def test_worker_count_does_not_change_output():
    assert scan("lm3", 3, 1, jobs=2) == scan("lm3", 3, 1, jobs=1)


def test_tasks_cover_the_space_disjointly():
    tasks = make_tasks("h4minus", 3, 1, 100)
    assert tasks[0].start == 0 and tasks[-1].stop == 3 ** tasks[0].prefix_len
    assert all(a.stop == b.start for a, b in zip(tasks, tasks[1:]))


def test_bounds():
    with pytest.raises(SearchError):
        make_tasks("h4minus", 5, 1)
    with pytest.raises(SearchError):
        make_tasks("lm2", 11, 1)
    with pytest.raises(SearchError):
        make_tasks("lm2", 3, 3)  # weight 0 mod 3


def test_scan_contains_trivial_operators():
    for name in ("lm2", "lm3", "h4plus"):
        dim = get_algebra(name).dim
        keys = set(scan(name, 3, 1))
        assert (0,) * (dim * dim) in keys
        minus_id = tuple(2 if r == c else 0 for r in range(dim) for c in range(dim))
        assert minus_id in keys


def test_enumerate_all_yields_operators():
    ops = list(enumerate_all("lm2", 3, 1))
    assert len(ops) == N3_LM2
    assert all(check_rb(get_algebra("lm2"), R, 1).passed for R in ops)


def test_h4minus_count(h4minus_f3):
    assert len(h4minus_f3) == N3_H4MINUS


def test_h4_and_h4plus_counts(h4_f3):
    assert len(h4_f3) == N3_H4
    assert len(scan("h4plus", 3, 1)) == N3_H4PLUS


def test_h4minus_operators_reverify_outside_fast_path(h4minus_f3):
    spec = get_algebra("h4minus")
    one = GF(3).convert(1)
    assert all(check_rb(spec, key_to_operator(k, 3), one, first_failure=True).passed for k in h4minus_f3)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_h4minus_prefix_partitions_match_brute_force(seed):
    rng = random.Random(seed)
    task = make_tasks("h4minus", 3, 1, 1)[0]
    prefix = rng.randrange(3 ** task.prefix_len)
    found = run_task(SearchTask("h4minus", 3, 1, task.prefix_len, prefix, prefix + 1))
    head = tuple(int(d) for d in format_base(prefix, 3, task.prefix_len))
    expected = [
        head + tail
        for tail in itertools.product(range(3), repeat=16 - task.prefix_len)
        if oracle.is_rb_mod_p("h4minus", head + tail, 1, 3)
    ]
    assert found == expected


def format_base(n, p, width):
    digits = []
    for _ in range(width):
        n, d = divmod(n, p)
        digits.append(d)
    return digits[::-1]


def test_h4minus_scan_closed_under_phi(h4minus_f3):
    keys = set(h4minus_f3)
    sigma = phi()
    assert all(conjugate(key_to_operator(k, 3), sigma).key() in keys for k in h4minus_f3)


def test_kernel_dimensions_account_for_everything(h4minus_f3):
    dims = Counter(kernel_basis(key_to_operator(k, 3)).dim for k in h4minus_f3)
    assert sum(dims.values()) == len(h4minus_f3)
    assert dims[4] == 1  # only R = 0


def test_lm2_coverage():
    report = coverage(scan("lm2", 3, 1), "lm2", 3, 1)
    assert report.total == N3_LM2 and report.unmatched == []
    assert report.matched == report.total
    first = report.matches[0]
    assert first.key == (0,) * 9 and first.family == "lm2.1.3"
    assert all(int(v) == 0 for v in first.assignment.values())


def test_lm2_coverage_needs_psi():
    report = coverage(scan("lm2", 3, 1), "lm2", 3, 1, automorphism=False)
    assert len(report.unmatched) == 135


def test_lm3_coverage_counts():
    report = coverage(scan("lm3", 3, 1), "lm3", 3, 1)
    assert report.unmatched == []
    counts = {k: v for k, v in report.per_family.items() if v}
    assert counts == {
        "lm3.2.1": 81, "lm3.2.2": 81, "lm3.2.3": 54, "lm3.2.4": 54, "lm3.2.5": 54,
        "lm3.2.6": 108, "lm3.2.7": 135, "lm3.2.8": 135, "lm3.2.9": 162,
    }


def test_coverage_report_json():
    report = coverage(scan("lm2", 3, 1), "lm2", 3, 1)
    data = report.to_json()
    assert data["total"] == data["matched"] + data["unmatched_count"]
    assert set(data["per_family"]) == {f.id for f in families_for("lm2")}
