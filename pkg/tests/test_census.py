import json

import numpy as np
import pytest

from dpcount.census import (BudgetExceeded, CensusReport, CheckpointMismatch, Kernel,
                            LocusFilter, SearchSpace, _write_checkpoint, counts_array,
                            filter_slots, locus_tuples, merge_reports, phase1_survivors,
                            point_set, random_sample_census, run_census, scan_range,
                            two_phase_census)
from dpcount.families import (CUBIC_P3, DP1_CHAR2, DP1_CHAR3, DP1_CLASSIC, DP2_CHAR2,
                              DP2_CLASSIC, FamilySpec, Surface, count_points, evaluate,
                              reduced_family, restrict)
from dpcount.gf import GF
from dpcount.wps import all_tuples, equivalent


def brute_count(s, mode):
    f, ws = s.field, s.family.ambient
    zeros = [tuple(int(c) for c in t) for t in all_tuples(len(ws), f)
             if evaluate(s, tuple(int(c) for c in t)) == 0]
    if mode == "affine":
        return len(zeros)
    classes = []
    for u in zeros:
        if not any(equivalent(u, v, ws, f) for v in classes):
            classes.append(u)
    return len(classes)


def dp1_f2():
    f = GF(2)
    return SearchSpace(reduced_family(DP1_CHAR2, f), f)


def test_index_bijection():
    f = GF(3)
    space = SearchSpace(DP2_CLASSIC, f, {0: 2, 5: 1})
    assert space.size == 3 ** 13
    rng = np.random.default_rng(0)
    for i in rng.integers(0, space.size, 200):
        c = space.coefficients(int(i))
        assert c[0] == 2 and c[5] == 1
        assert space.index_of(c) == i
    # little-endian: index 1 bumps the first unpinned slot
    assert space.coefficients(1)[1] == 1
    with pytest.raises(ValueError):
        SearchSpace(DP2_CLASSIC, f, {99: 0})
    with pytest.raises(IndexError):
        space.coefficients(space.size)


@pytest.mark.parametrize("fam,q,mode", [(DP1_CHAR2, 2, "affine"), (DP1_CHAR3, 3, "projective"),
                                        (DP2_CLASSIC, 3, "projective"), (CUBIC_P3, 2, "projective"),
                                        (DP2_CHAR2, 4, "projective"), (DP1_CLASSIC, 5, "affine"),
                                        (DP2_CLASSIC, 5, "projective")])
@pytest.mark.parametrize("reduce", [False, True])
def test_kernel_matches_naive_counting(fam, q, mode, reduce):
    f = GF(q)
    family = reduced_family(fam, f) if reduce else fam
    space = SearchSpace(family, f)
    kernel = Kernel(space, *point_set(family, f, mode))
    rng = np.random.default_rng(q)
    idx = rng.integers(0, space.size, 40)
    got = kernel.counts_for(np.array([space.coefficients(int(i)) for i in idx]))
    for i, g in zip(idx, got):
        s = space.surface(int(i))
        assert g == count_points(s, mode)
    # and the mixed-radix block path
    start = int(rng.integers(0, max(1, space.size - 300)))
    block = kernel.counts_range(start, start + 300)
    for j in range(0, 300, 37):
        assert block[j] == count_points(space.surface(start + j), mode)


@pytest.mark.parametrize("fam,q", [(DP1_CHAR3, 3), (CUBIC_P3, 2), (DP2_CLASSIC, 3)])
def test_count_points_matches_brute_force(fam, q):
    f = GF(q)
    rng = np.random.default_rng(1)
    for _ in range(8):
        s = Surface(fam, f, tuple(int(c) for c in rng.integers(0, q, fam.n_slots)))
        for mode in ("affine", "projective"):
            assert count_points(s, mode) == brute_count(s, mode)


def test_class_partition_mode_for_inhomogeneous_families():
    f = GF(3)
    fam = reduced_family(DP2_CLASSIC, f)
    loose = FamilySpec("loose", fam.ambient, None, fam.fixed, fam.free, fam.variables, False)
    space = SearchSpace(loose, f)
    tuples, starts = point_set(loose, f, "projective")
    assert starts is not None
    kernel = Kernel(space, tuples, starts)
    rng = np.random.default_rng(2)
    idx = rng.integers(0, space.size, 30)
    got = kernel.counts_for(np.array([space.coefficients(int(i)) for i in idx]))
    for i, g in zip(idx, got):
        assert g == brute_count(space.surface(int(i)), "projective")


def test_run_census_basic_invariants():
    r = run_census(dp1_f2(), "affine")
    assert sum(r.histogram.values()) == r.scanned == 2 ** 11
    assert r.min_count == min(k for k, v in r.histogram.items() if v)
    for c in r.extremals:
        assert count_points(Surface(dp1_f2().family, GF(2), c), "affine") == r.min_count
    assert r.extremals == sorted(r.extremals)


def test_extremal_cap_keeps_lex_smallest():
    space = dp1_f2()
    full = run_census(space, "affine", extremal_cap=None)
    capped = run_census(space, "affine", extremal_cap=3)
    assert capped.extremals == full.extremals[:3]


def test_empty_space_all_pinned():
    f = GF(2)
    fam = reduced_family(DP1_CHAR2, f)
    space = SearchSpace(fam, f, {i: 1 for i in range(fam.n_slots)})
    r = run_census(space, "affine")
    assert r.scanned == 1
    assert r.histogram == {count_points(space.surface(0), "affine"): 1}


@pytest.mark.parametrize("bound", [0, 1, 3, 5, 20])
def test_early_exit_soundness(bound):
    space = dp1_f2()
    full = run_census(space, "affine")
    cut = run_census(space, "affine", early_exit=bound)
    for k, v in full.histogram.items():
        if k <= bound:
            assert cut.histogram.get(k, 0) == v
    over = sum(v for k, v in full.histogram.items() if k > bound)
    assert cut.histogram.get(bound + 1, 0) == over
    if full.min_count <= bound:
        assert cut.min_count == full.min_count
    assert cut.payload()["overflow_bucket"] == bound + 1


def test_merge_split_equals_unsplit():
    space = dp1_f2()
    full = run_census(space, "affine")
    for cut in (0, 1, 700, 2047, 2048):
        a = scan_range(space, 0, cut, "affine")
        b = scan_range(space, cut, space.size, "affine")
        merged = merge_reports(a, b)
        assert merged.histogram == full.histogram
        assert merged.extremals == full.extremals
        assert merge_reports(b, a).histogram == merged.histogram
    empty = scan_range(space, 0, 0, "affine")
    assert merge_reports(full, empty).same_result(full)


def test_merge_rejects_mismatch():
    a = scan_range(dp1_f2(), 0, 10, "affine")
    b = scan_range(dp1_f2(), 0, 10, "projective")
    with pytest.raises(ValueError):
        merge_reports(a, b)


def test_determinism_across_workers():
    f = GF(2)
    space = SearchSpace(DP2_CHAR2, f, {i: 0 for i in range(6)})
    ref = run_census(space, "projective")
    for w in (2, 8):
        assert run_census(space, "projective", workers=w).same_result(ref)


def test_checkpoint_resume(tmp_path):
    space = dp1_f2()
    ref = run_census(space, "affine")
    path = tmp_path / "ck.json"
    # a run with checkpoint rounds leaves a completed checkpoint behind
    r = run_census(space, "affine", checkpoint=str(path), chunk=100)
    assert r.same_result(ref)
    assert json.loads(path.read_text())["next_index"] == space.size
    for cut in (0, 1, 999, 2047):
        path.unlink(missing_ok=True)
        part = scan_range(space, 0, cut, "affine")
        _write_checkpoint(str(path), space, "affine", None, ref.extremal_cap, cut, part)
        resumed = run_census(space, "affine", checkpoint=str(path), chunk=256, workers=2)
        assert resumed.same_result(ref)


def test_checkpoint_mismatch(tmp_path):
    space = dp1_f2()
    path = tmp_path / "ck.json"
    run_census(space, "affine", checkpoint=str(path), chunk=512)
    with pytest.raises(CheckpointMismatch):
        run_census(space, "projective", checkpoint=str(path))
    other = SearchSpace(space.family, space.field, {0: 1})
    with pytest.raises(CheckpointMismatch):
        run_census(other, "affine", checkpoint=str(path))
    path.write_text("{not json")
    with pytest.raises(Exception):
        run_census(space, "affine", checkpoint=str(path))
    path.write_text(json.dumps({"version": 1}))
    with pytest.raises(CheckpointMismatch):
        run_census(space, "affine", checkpoint=str(path))


def test_budget():
    with pytest.raises(BudgetExceeded):
        run_census(dp1_f2(), "affine", budget=100)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("DPC_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        run_census(dp1_f2(), "affine")


def test_report_payload_roundtrip():
    r = run_census(dp1_f2(), "affine")
    again = CensusReport.from_payload(json.loads(json.dumps(r.payload())))
    assert again.same_result(r)


# -- phase 1 ---------------------------------------------------------------------------

def brute_survivors(space, flt):
    """Oracle: try every assignment of the locus slots by direct substitution."""
    f = space.field
    slots = filter_slots(space, flt)
    tuples = [tuple(int(c) for c in t) for t in locus_tuples(space.family, f, flt)]
    out = []
    for idx in range(f.q ** len(slots)):
        assign, rem = {}, idx
        for s in slots:
            rem, assign[s] = divmod(rem, f.q)
        coeffs = [0] * space.family.n_slots
        for s, v in list(space.pins) + list(assign.items()):
            coeffs[s] = v
        surf = Surface(space.family, f, tuple(coeffs))
        if all(evaluate(surf, t) != 0 for t in tuples):
            out.append(assign)
    return sorted(out, key=lambda a: [a[s] for s in slots])


def test_phase1_f3():
    f = GF(3)
    space = SearchSpace(reduced_family(DP1_CHAR3, f), f)
    flt = LocusFilter({"x": 0, "y": 1})
    surv = phase1_survivors(space, flt)
    fam = space.family
    assert surv == [{fam.slot((0, 2, 2, 0)): 0, fam.slot((0, 2, 1, 0)): 2, fam.slot((0, 2, 0, 0)): 1}]
    assert surv == brute_survivors(space, flt)


def test_phase1_f4_matches_brute_force():
    f = GF(4)
    space = SearchSpace(reduced_family(DP1_CHAR2, f), f)
    flt = LocusFilter({"x": 0}, {"y": "nonzero"})
    surv = phase1_survivors(space, flt)
    assert surv == brute_survivors(space, flt)
    fam = space.family
    for a in surv:
        assert a[fam.slot((0, 1, 1, 1))] == 0 and a[fam.slot((0, 1, 1, 0))] == 0


def test_phase1_f5_empty():
    f = GF(5)
    space = SearchSpace(DP1_CLASSIC, f)
    flt = LocusFilter({"x": 0}, {"y": "nonzero"})
    assert phase1_survivors(space, flt) == [] == brute_survivors(space, flt)
    assert len(filter_slots(space, flt)) == 2


def test_phase1_non_survivors_have_witnesses():
    f = GF(4)
    space = SearchSpace(reduced_family(DP1_CHAR2, f), f)
    flt = LocusFilter({"x": 0}, {"y": "nonzero"})
    slots = filter_slots(space, flt)
    surv = phase1_survivors(space, flt)
    tuples = [tuple(int(c) for c in t) for t in locus_tuples(space.family, f, flt)]
    rng = np.random.default_rng(8)
    checked = 0
    while checked < 100:
        assign = {s: int(rng.integers(0, 4)) for s in slots}
        if assign in surv:
            continue
        coeffs = [0] * space.family.n_slots
        for s, v in assign.items():
            coeffs[s] = v
        surf = Surface(space.family, f, tuple(coeffs))
        assert any(evaluate(surf, t) == 0 for t in tuples)
        checked += 1


def test_locus_excluded_points():
    f = GF(3)
    flt = LocusFilter({"x": 0, "y": 0}, excluded=[(0, 0, 2, 1)])
    t = locus_tuples(DP1_CHAR3, f, flt)
    assert len(t) == 7 and not (t == [0, 0, 2, 1]).all(axis=1).any()


def test_two_phase_f3_and_empty_survivors():
    f = GF(3)
    space = SearchSpace(reduced_family(DP1_CHAR3, f), f)
    r = two_phase_census(space, LocusFilter({"x": 0, "y": 1}), "affine")
    assert r.scanned == 3 ** 8 and r.min_count >= 2
    assert r.notes["survivors"] and r.notes["non_survivors"] == 26
    e = two_phase_census(SearchSpace(DP1_CLASSIC, GF(5)), LocusFilter({"x": 0}, {"y": "nonzero"}))
    assert e.scanned == 0 and e.histogram == {} and e.min_count is None


def test_two_phase_agrees_with_full_census_on_survivors():
    f = GF(3)
    space = SearchSpace(reduced_family(DP1_CHAR3, f), f)
    flt = LocusFilter({"x": 0, "y": 1})
    two = two_phase_census(space, flt, "affine")
    counts = counts_array(space, "affine")
    [assign] = phase1_survivors(space, flt)
    mask = np.ones(space.size, dtype=bool)
    idx = np.arange(space.size)
    for s, v in assign.items():
        pos = space.unpinned.index(s)
        mask &= (idx // 3 ** pos) % 3 == v
    hist = dict(zip(*np.unique(counts[mask], return_counts=True)))
    assert {int(k): int(v) for k, v in hist.items()} == two.histogram


# -- sampling ----------------------------------------------------------------------------

def test_random_sample_determinism():
    a = random_sample_census(DP2_CLASSIC, GF(5), 50, seed=3, smooth=1)
    b = random_sample_census(DP2_CLASSIC, GF(5), 50, seed=3, smooth=1)
    assert a.same_result(b) and a.scanned == 50
    z = random_sample_census(DP2_CLASSIC, GF(5), 0, seed=3)
    assert z.scanned == 0 and z.histogram == {}


def test_random_sample_counts_are_correct():
    r = random_sample_census(DP2_CLASSIC, GF(3), 20, seed=1, extremal_cap=None)
    for c in r.extremals:
        assert count_points(Surface(DP2_CLASSIC, GF(3), c)) == r.min_count
