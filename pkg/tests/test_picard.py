import io
from collections import Counter
from itertools import combinations, product

import numpy as np
import pytest

from dpcount.census import SearchSpace
from dpcount.families import (CUBIC_P3, DP1_CHAR2, DP1_CHAR3, DP1_CLASSIC, Surface,
                              count_points, evaluate)
from dpcount.gf import GF
from dpcount.picard import (EXCEPTIONAL_COUNTS, F_EXCLUDED, PicClass, TableError,
                            UrabeRow, base_locus_count, base_points, candidate_fields,
                            exceptional_classes, exceptional_divisor, fiber_count, fibers,
                            filter_rows, hasse_ok, is_prime_power, line_class,
                            min_fiber_points, min_trace_on_pic, pair, parse_orbits,
                            parse_table, urabe_f, urabe_f_preimages, weil_count)
from dpcount.smooth import SmoothnessChecker


def test_pair_examples():
    r = 8
    for i in range(r):
        e = exceptional_divisor(i, r)
        assert pair(e, e) == -1
        assert pair(line_class(r), e) == 0
    line2 = PicClass(1, (1, 1) + (0,) * 6)
    assert pair(line2, line2) == -1
    with pytest.raises(ValueError):
        pair(PicClass(1, (0,)), PicClass(1, (0, 0)))


def test_pair_symmetric_bilinear():
    rng = np.random.default_rng(0)
    for _ in range(100):
        a, b, c = (PicClass(int(rng.integers(-5, 6)), rng.integers(-3, 4, 5)) for _ in range(3))
        assert pair(a, b) == pair(b, a)
        s = PicClass(a.d + b.d, [x + y for x, y in zip(a.m, b.m)])
        assert pair(s, c) == pair(a, c) + pair(b, c)


def test_exceptional_counts():
    assert tuple(len(exceptional_classes(r)) for r in range(9)) == EXCEPTIONAL_COUNTS
    with pytest.raises(ValueError):
        exceptional_classes(9)


@pytest.mark.parametrize("r", range(0, 6))
def test_exceptional_classes_complete_by_box_search(r):
    # independent search over the whole box d in [0,7], m_i in [-1, 7]
    found = set()
    for d in range(8):
        for m in product(range(-1, d + 1), repeat=r):
            c = PicClass(d, m)
            if c.self_intersection() == -1 and c.anticanonical_degree() == 1:
                found.add(c)
    assert found == set(exceptional_classes(r))


def test_exceptional_invariants_r8():
    classes = exceptional_classes(8)
    assert classes == sorted(classes)
    for c in classes:
        assert pair(c, c) == -1 and c.anticanonical_degree() == 1
    by_d = Counter(c.d for c in classes)
    assert by_d == {0: 8, 1: 28, 2: 56, 3: 56, 4: 56, 5: 28, 6: 8}
    assert PicClass(6, (2,) * 7 + (3,)) in classes


def test_27_lines_incidence():
    classes = exceptional_classes(6)
    assert all(pair(a, b) in (0, 1, 2) for a, b in combinations(classes, 2))
    # every line meets exactly 10 others
    for a in classes:
        assert sum(pair(a, b) == 1 for b in classes if b != a) == 10


def test_weil_count():
    assert weil_count(2, -2) == 1
    assert weil_count(3, 0) == 10
    assert weil_count(2, 7) == 19
    for q in (2, 3, 4, 5, 7, 8, 9):
        for t in range(-8, 10):
            assert (weil_count(q, t) - 1) % q == 0


def test_smooth_cubics_satisfy_weil_form():
    # every smooth cubic over F_2 has 1 + 2T + 4 points with T in [-2, 7]
    f = GF(2)
    checker = SmoothnessChecker(CUBIC_P3, f, 2)
    rng = np.random.default_rng(5)
    seen = set()
    while len(seen) < 200:
        coeffs = tuple(int(c) for c in rng.integers(0, 2, 20))
        if coeffs in seen or not checker.is_smooth(coeffs):
            continue
        seen.add(coeffs)
        n = count_points(Surface(CUBIC_P3, f, coeffs))
        assert any(weil_count(2, t) == n for t in range(min_trace_on_pic(3), 8))


def test_min_trace():
    assert [min_trace_on_pic(d) for d in (1, 2, 3)] == [-7, -6, -2]
    with pytest.raises(ValueError):
        min_trace_on_pic(4)


def test_candidate_fields():
    assert candidate_fields(3, 1) == [2]
    assert candidate_fields(1, 1) == [2, 3, 4, 5, 7]
    assert candidate_fields(2, 1) == [2, 3, 4, 5]
    # brute force over q and T
    for d in (1, 2, 3):
        for n in (1, 2, 7, 13, 31):
            want = [q for q in range(2, 64) if is_prime_power(q) and any(
                weil_count(q, t) == n for t in range(min_trace_on_pic(d), 10 - d + 1))]
            assert candidate_fields(d, n) == want


def test_prime_powers():
    assert [q for q in range(1, 30) if is_prime_power(q)] == \
        [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


def test_urabe_f_values():
    assert urabe_f(1) == 98
    assert urabe_f(34) == 76 and urabe_f(37) == 109 and urabe_f(46) == 91
    assert urabe_f(2) == 38 and urabe_f(24) == 60 and urabe_f(25) == 66
    assert urabe_f(60) == 111 and urabe_f(57) == 105
    assert urabe_f(40) == urabe_f(50) == 95
    assert urabe_f(41) == urabe_f(55) == 101
    assert urabe_f(44) == urabe_f(59) == 107
    kept = [urabe_f(i) for i in range(1, 61) if i not in F_EXCLUDED]
    assert len(set(kept)) == len(kept)
    assert urabe_f_preimages(95) == [40, 50]
    for bad in (0, 61):
        with pytest.raises(ValueError):
            urabe_f(bad)


SYNTH = """row,carter,trace,index,orbits,h1
1,A1,-2,0,2^1,0
2,2A1,-3,1,2^2,Z2
3,A2,0,0,3^1*1^3,0
"""


def test_parse_and_filter_table():
    rows = parse_table(io.StringIO(SYNTH))
    assert [r.row for r in rows] == [1, 2, 3]
    assert rows[2].orbits == ((3, 1), (1, 3))
    assert filter_rows(rows, 2, 1) == [1]
    assert parse_table(io.StringIO("")) == []
    assert filter_rows([], 2, 1) == []


def test_parse_table_errors_report_line():
    bad = "row,carter,trace,index,orbits,h1\n1,A1,-2,0,2^1,0\n2,A2,x,0,,0\n"
    with pytest.raises(TableError, match="line 3"):
        parse_table(io.StringIO(bad))
    with pytest.raises(TableError, match="line 1"):
        parse_table(io.StringIO("a,b\n"))
    with pytest.raises(TableError, match="line 2"):
        parse_table(io.StringIO("row,carter,trace,index,orbits,h1\n1,2\n"))


def test_orbit_totals():
    assert parse_orbits("2^4*2^8*2^16") == ((2, 4), (2, 8), (2, 16))
    assert parse_orbits("56") == ((56, 1),)
    row = UrabeRow(7, "A1", -5, 0, parse_orbits("2^4*4^12"), "0")
    assert row.orbit_total() == 56


def test_hasse_and_floor():
    assert min_fiber_points(5) == 2 and min_fiber_points(4) == 1 and min_fiber_points(7) == 3
    for q in range(2, 200):
        n = min_fiber_points(q)
        assert hasse_ok(n, q) and not hasse_ok(n - 1, q)


def test_fiber_example():
    f = GF(5)
    s = Surface.from_terms(DP1_CLASSIC, f, {(0, 4, 1, 0): 1, (0, 6, 0, 0): 1})
    rep = fiber_count(s, (0, 1))
    brute = sum(1 for z in range(5) for w in range(5) if (w * w + z ** 3 + z + 1) % 5 == 0)
    assert rep.count == brute == 8
    assert rep.smooth and rep.hasse


@pytest.mark.parametrize("fam,q", [(DP1_CLASSIC, 5), (DP1_CLASSIC, 7), (DP1_CHAR3, 3),
                                   (DP1_CHAR2, 4), (DP1_CHAR2, 2)])
def test_fibers_partition_the_surface(fam, q):
    f = GF(q)
    rng = np.random.default_rng(q)
    for _ in range(10):
        s = Surface(fam, f, tuple(int(c) for c in rng.integers(0, q, fam.n_slots)))
        reps = fibers(s)
        assert [r.base for r in reps] == base_points(f)
        assert sum(r.count for r in reps) + base_locus_count(s) == count_points(s)
        for r in reps:
            if r.smooth:
                assert r.hasse


def test_base_locus_single_point():
    # x = y = 0 leaves w^2 + z^3, a single class
    for q in (2, 3, 4, 5, 7):
        fam = DP1_CHAR2 if q in (2, 4) else DP1_CHAR3 if q == 3 else DP1_CLASSIC
        s = Surface(fam, GF(q), (0,) * fam.n_slots)
        assert base_locus_count(s) == 1
