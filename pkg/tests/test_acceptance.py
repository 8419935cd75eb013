"""Acceptance criteria 1-7, each recorded as one PASS/FAIL line in the terminal summary.

A criterion is asserted strictly. When the transcribed catalog cannot meet it,
the test fails and the recorded detail names the offending families.
"""

import dataclasses
import json
import time
from pathlib import Path

import test_properties as props
from conftest import to_ef_matrix
from rbh4.algebra import get_algebra
from rbh4.catalog import (
    DiscrepancyRecord,
    all_families,
    families_for,
    get_family,
    symbolic_report,
    verify_symbolic,
)
from rbh4.rbcore import check_rb
from rbh4.search import compare_lie_vs_assoc, coverage, key_to_operator, scan, to_ef

FIXTURES = Path(__file__).parent / "fixtures"

ASSOC = [f"assoc.{c}" for c in "abcdefgh"]
THREE_DIM_CASES = [f"lm2.1.{k}" for k in range(2, 11)]
SOLVABLE_CASES = [f"lm3.2.{k}" for k in range(1, 10)]
H4MINUS_F3 = 16686  # [DERIVED] matrix-model brute force, frozen
LM2_F3 = 342  # [DERIVED]


def _verdict(fam_id):
    start = time.perf_counter()
    ok = not isinstance(verify_symbolic(get_family(fam_id)), DiscrepancyRecord)
    return ok, time.perf_counter() - start


def test_criterion_1_proof_backed_families(acceptance):
    start = time.perf_counter()
    failing, slow = [], []
    for fam_id in ASSOC + THREE_DIM_CASES + SOLVABLE_CASES:
        ok, secs = _verdict(fam_id)
        if not ok:
            failing.append(fam_id)
        if secs > 5:
            slow.append(fam_id)
    printed, _ = _verdict("lm2.1.1")
    derived, _ = _verdict("lm2.1.1.fixed")
    sign_ok = printed != derived
    total = time.perf_counter() - start
    passed = not failing and not slow and sign_ok and total < 180
    detail = (
        f"27 families, {total:.1f}s; 1.1 sign rule {'holds' if sign_ok else 'broken'}; "
        f"nonzero residual: {', '.join(failing) or 'none'}"
    )
    acceptance(1, passed, detail)
    assert passed, detail


def test_criterion_2_full_sweep(acceptance):
    families = all_families()
    ids = {f.id for f in families}
    records, unfixed, broken_fix = [], [], []
    for fam in families:
        result = verify_symbolic(fam)
        if isinstance(result, DiscrepancyRecord):
            assert result.residual_numerator not in ("", "0")
            records.append(result)
            fixes = [i for i in ids if i.startswith(fam.id + ".fixed")]
            if not fixes:
                unfixed.append(fam.id)
            broken_fix += [i for i in fixes if isinstance(verify_symbolic(get_family(i)), DiscrepancyRecord)]
    fixture = [json.loads(line) for line in (FIXTURES / "discrepancies.jsonl").read_text().splitlines()]
    passed = not broken_fix and [r.to_json() for r in records] == fixture
    detail = (
        f"{len(families)} verdicts, {len(records)} discrepancy records; "
        f"no fix available for {len(unfixed)}; failing fixes: {', '.join(broken_fix) or 'none'}"
    )
    acceptance(2, passed, detail)
    assert passed, detail


def test_criterion_3_associative_families_on_lie_and_jordan(acceptance):
    start = time.perf_counter()
    failing = []
    for fam_id in ASSOC:
        fam = get_family(fam_id)
        for name in ("h4minus", "h4plus"):
            moved = dataclasses.replace(fam, algebra=name, matrix=to_ef_matrix(fam.matrix))
            if not symbolic_report(moved).passed:
                failing.append(f"{fam_id} on {name}")
    fixed_ok = all(
        symbolic_report(dataclasses.replace(f, algebra=n, matrix=to_ef_matrix(f.matrix))).passed
        for f in families_for("h4") if f.id.endswith(".fixed") for n in ("h4minus", "h4plus")
    )
    secs = time.perf_counter() - start
    passed = not failing and secs < 60
    detail = (
        f"{secs:.1f}s; fixed variants {'pass' if fixed_ok else 'FAIL'}; "
        f"failing: {', '.join(failing) or 'none'}"
    )
    acceptance(3, passed, detail)
    assert passed, detail


def test_criterion_4_dim3_completeness(acceptance):
    start = time.perf_counter()
    keys = scan("lm2", 3, 1)
    report = coverage(keys, "lm2", 3, 1)
    secs = time.perf_counter() - start
    passed = len(keys) == LM2_F3 and not report.unmatched and secs < 10
    detail = f"{len(keys)} operators, {report.matched} matched, {len(report.unmatched)} unmatched, {secs:.1f}s"
    acceptance(4, passed, detail)
    assert passed, detail


def test_criterion_5_dim4_completeness(acceptance, h4minus_f3):
    start = time.perf_counter()
    parallel = scan("h4minus", 3, 1, jobs=4)
    report = coverage(h4minus_f3, "h4minus", 3, 1)
    secs = time.perf_counter() - start
    fixture = [json.loads(line) for line in (FIXTURES / "h4minus_F3_w1_unmatched.jsonl").read_text().splitlines()]
    unmatched = [key_to_operator(k, 3).to_strings() for k in report.unmatched]
    documented = unmatched == [d["matrix"] for d in fixture] and all(d["explained_by"] for d in fixture)
    explained = coverage(h4minus_f3, "h4minus", 3, 1, supplementary=True).unmatched == []
    deterministic = parallel == h4minus_f3
    passed = len(h4minus_f3) == H4MINUS_F3 and documented and explained and deterministic and secs < 900
    detail = (
        f"{len(h4minus_f3)} operators, {report.matched} matched, {len(unmatched)} unmatched "
        f"({'all in fixture' if documented else 'NOT documented'}); "
        f"jobs 1 vs 4 {'identical' if deterministic else 'DIFFER'}"
    )
    acceptance(5, passed, detail)
    assert passed, detail


def test_criterion_6_lie_but_not_associative(acceptance, h4minus_f3, h4_f3):
    lie, assoc = get_algebra("h4minus"), get_algebra("h4")
    found = compare_lie_vs_assoc(3, 1, lie_keys=h4minus_f3)
    reverified = all(
        check_rb(lie, c.lie_operator, 1).passed and not check_rb(assoc, c.assoc_operator, 1).passed
        for c in found
    )
    assoc_in_ef = {to_ef(key_to_operator(k, 3)).key() for k in h4_f3}
    found_keys = {c.lie_operator.key() for c in found}
    disjoint = not (found_keys & assoc_in_ef)
    inclusion = assoc_in_ef <= set(h4minus_f3)
    passed = bool(found) and reverified and disjoint and inclusion
    detail = (
        f"{len(found)} Lie-only operators; re-verified {reverified}; disjoint from the "
        f"{len(assoc_in_ef)} associative ones {disjoint}; associative subset of Lie {inclusion}"
    )
    acceptance(6, passed, detail)
    assert passed, detail


def test_criterion_7_property_suites(acceptance, h4minus_f3):
    checks = {
        "bilinearity": props.test_bilinearity_reduction,
        "kernel/image subalgebras": props.test_kernel_and_image_are_subalgebras,
        "kernel conditions": props.test_kernel_conditions_on_h4minus,
        "conjugation": props.test_conjugation_preserves_the_verdict,
        "product scaling": props.test_product_scaling_preserves_the_verdict,
        "operator scaling": props.test_operator_scaling_changes_the_weight,
        "weight bijection lm2": lambda: props.test_weight_scaling_bijection_small("lm2"),
        "weight bijection lm3": lambda: props.test_weight_scaling_bijection_small("lm3"),
        "weight bijection h4minus": lambda: props.test_weight_scaling_bijection_h4minus(h4minus_f3),
    }
    failed = []
    for name, check in checks.items():
        try:
            check()
        except AssertionError:
            failed.append(name)
    passed = not failed
    detail = f"{len(checks) - len(failed)}/{len(checks)} suites hold; failing: {', '.join(failed) or 'none'}"
    acceptance(7, passed, detail)
    assert passed, detail
