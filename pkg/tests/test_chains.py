import io
from fractions import Fraction

import pytest

from beattydim import (
    ParamTuple,
    HorizonTooSmall,
    classify_head,
    decompose,
    derived_dij,
    dij_row,
    empirical_densities,
    residual_count,
)
from beattydim.chains import A1, NOT_HEAD, finite_class
from conftest import REGION_TUPLES


def test_classify_head_examples():
    assert classify_head(3, ParamTuple(1, 0, 2, 0), 40).tag == "infinity"
    assert classify_head(7, ParamTuple(2, 0, 3, 0), 40) == A1
    assert classify_head(2, ParamTuple(2, 0, 3, 0), 40) == finite_class(2)
    assert classify_head(6, ParamTuple(2, 0, 3, 0), 40) == NOT_HEAD
    assert classify_head(4, ParamTuple(2, 0, 3, 0), 40) == finite_class(3)  # 4->6->9


def test_classify_head_residual_abort():
    import pytest as _pytest

    from beattydim import NonPositiveImage

    # trajectory 4 -> 2 -> floor(3*1 - 4) = -1 leaves N; the reference
    # classifier propagates, decompose records the elements as residual
    with _pytest.raises(NonPositiveImage):
        classify_head(4, ParamTuple(2, 0, 3, -4), 40)


def test_decompose_doubling():
    dec = decompose(ParamTuple(1, 0, 2, 0), 7)
    got = {(c.head, c.elements) for c in dec.chains}
    assert got == {(1, (1, 2, 4)), (3, (3, 6)), (5, (5,)), (7, (7,))}
    assert dec.residual == ()
    assert all(c.cls.tag == "infinity" for c in dec.chains)


def test_decompose_two_three():
    # S(2,0) = evens, S(3,0) = multiples of 3; head 4 runs 4 -> 6 -> 9
    dec = decompose(ParamTuple(2, 0, 3, 0), 6)
    by_head = {c.head: c for c in dec.chains}
    assert by_head[1].cls == A1 and by_head[5].cls == A1
    assert by_head[2].cls == finite_class(2) and by_head[2].elements == (2, 3)
    assert by_head[4].cls == finite_class(3) and by_head[4].elements == (4, 6)
    assert dec.residual == ()
    assert dec.counts == {(1, 1): 2, (2, 2): 1, (3, 2): 1}


@pytest.mark.parametrize("key", sorted(REGION_TUPLES))
@pytest.mark.parametrize("n", [50, 137, 1000])
def test_partition(key, n):
    dec = decompose(REGION_TUPLES[key], n)
    covered = [x for c in dec.chains for x in c.elements] + list(dec.residual)
    assert sorted(covered) == list(range(1, n + 1))


def test_partition_with_anomalies():
    # negative delta: aborted chains and a self-loop land in the residual
    p = ParamTuple(2, 0, 3, -4)
    dec = decompose(p, 50)
    covered = [x for c in dec.chains for x in c.elements] + list(dec.residual)
    assert sorted(covered) == list(range(1, 51))
    assert set(dec.residual) == {2, 4, 8}
    assert residual_count(p, 50) == 3


@pytest.mark.parametrize("tup", [
    (2, 0, 3, 0), (2, 1, 4, 0), ("3/2", "1/3", "7/2", "-1/2"),
    ("sqrt(2)", 0, "sqrt(3)", 0), (1, 0, 2, 0), (2, 0, 4, 2),
])
def test_scan_matches_reference_classifier(tup):
    # the optimized window scan and the plain exact classifier must agree
    # head by head
    p = ParamTuple(*tup)
    n = 300
    dec = decompose(p, n)
    by_head = {c.head: c.cls for c in dec.chains}
    for x in range(1, n + 1):
        ref = classify_head(x, p, dec.horizon)
        if ref.tag == "not_head":
            assert x not in by_head
        elif ref.tag == "infinity":
            assert by_head[x].tag == "infinity", x
        else:
            assert by_head[x] == ref, x


def test_interval_parameters_scan_like_their_exact_values():
    # an interval secretly holding sqrt(2) must decompose exactly like the
    # surd: every floor resolves by refinement along the way
    from fractions import Fraction
    from math import isqrt

    from beattydim.numerics import Interval

    def enc(d):
        def fn(bits):
            r = isqrt(d << (2 * bits))
            return (Fraction(r, 1 << bits), Fraction(r + 1, 1 << bits))
        return fn

    p_iv = ParamTuple(Interval(enc(2)), 0, Interval(enc(3)), 0)
    p_ex = ParamTuple("sqrt(2)", 0, "sqrt(3)", 0)
    d_iv = empirical_densities(p_iv, [(1, 800)])
    d_ex = empirical_densities(p_ex, [(1, 800)])
    assert d_iv.finite == d_ex.finite and d_iv.d_inf == d_ex.d_inf
    dec_iv = decompose(p_iv, 60)
    dec_ex = decompose(p_ex, 60)
    assert [(c.head, c.elements) for c in dec_iv.chains] == [
        (c.head, c.elements) for c in dec_ex.chains
    ]


def test_bitset_matches_beatty_values():
    from beattydim import beatty_values
    from beattydim.chains import _mark_bitset
    from beattydim.numerics import rational, surd

    cases = [
        (rational(2), rational(0)),
        (rational(3, 2), rational(1, 3)),
        (rational(1), rational(-2)),
        (surd(0, 1, 2), rational(0)),
        (surd(1, 1, 5), surd(0, 1, 5)),
    ]
    for tau, eta in cases:
        bits = _mark_bitset(tau, eta, 700)
        marked = {x for x in range(1, 701) if bits[x]}
        assert marked == set(beatty_values(tau, eta, 700))


def test_residual_sparsity():
    for key in ("R7", "R8", "R10", "R2"):
        assert residual_count(REGION_TUPLES[key], 10**5) == 0


def test_derived_dij_telescopes():
    p = ParamTuple(2, 0, 3, 0)
    # formula check with the hypothetical d_2 = 1/2 from the derivation
    row = dij_row(p, 2, Fraction(1, 2))
    assert row == [Fraction(1, 6), Fraction(1, 3)]
    assert dij_row(p, 1, Fraction(1, 4)) == [Fraction(1, 4)]
    for i in range(2, 12):
        row = dij_row(p, i, Fraction(1, 3))
        assert sum(row) == Fraction(1, 3)


def test_derived_dij_counting_oracle():
    # anchored A_{i,j} counts for (2,0,3,0): d_2 = 1/6 splits 1/18 + 1/9
    from beattydim import measured_dij

    p = ParamTuple(2, 0, 3, 0)
    n = 10**6
    counts = measured_dij(p, n)
    d2 = Fraction(1, 6)
    row = dij_row(p, 2, d2)
    assert row == [Fraction(1, 18), Fraction(1, 9)]
    for j in (1, 2):
        assert abs(counts.get((2, j), 0) / n - float(row[j - 1])) < 5e-3
    row3 = dij_row(p, 3, Fraction(1, 12))
    for j in (1, 2, 3):
        assert abs(counts.get((3, j), 0) / n - float(row3[j - 1])) < 5e-3
    # decompose tallies the same counts on a smaller window
    dec = decompose(p, 50_000)
    small = measured_dij(p, 50_000)
    assert dec.counts == small


def test_derived_dij_attaches_table():
    from beattydim import classify_region, closed_form_d

    p = ParamTuple(2, 0, 3, 0)
    d = closed_form_d(p, classify_region(p))
    dd = derived_dij(d, p)
    assert dd.dij[(1, 1)] == d.finite[0]
    assert sum(dd.dij[(3, j)] for j in (1, 2, 3)) == d.finite[2]


def test_empirical_matches_closed_small():
    from beattydim import classify_region, closed_form_d

    for key in ("R8", "R10"):
        p = REGION_TUPLES[key]
        closed = closed_form_d(p, classify_region(p))
        emp = empirical_densities(p, [(1, 100_000)])
        for i in (1, 2, 3):
            assert abs(emp.entry_float(i) - float(closed.entry(i))) < 5e-3
        assert abs(emp.d_inf_float() - float(closed.d_inf)) < 5e-3


def test_anchored_vs_sliding_windows():
    p = REGION_TUPLES["R10"]
    n = 100_000
    d = empirical_densities(p, [(1, n), (n, 2 * n)])
    assert d.diagnostic is not None
    assert d.diagnostic < 5e-3


def test_horizon_too_small():
    # horizon 2 mistakes classes i in (3, 4] for infinity candidates;
    # doubling to 4 moves ~d_3 + d_4 ~ 1/8 of the mass
    with pytest.raises(HorizonTooSmall):
        empirical_densities(ParamTuple(2, 0, 3, 0), [(1, 20_000)], horizon=2)


def test_empirical_beyond_k_separated():
    d = empirical_densities(ParamTuple(2, 0, 3, 0), [(1, 50_000)], K=3)
    assert d.beyond, "classes beyond K should be tracked separately"
    assert all(i > 3 for i in d.beyond)
    assert d.d_inf_float() < 1e-3  # no infinite chains in R10


def test_suffix_and_entry_extension():
    from beattydim import classify_region, closed_form_d

    p = REGION_TUPLES["R10"]
    d = closed_form_d(p, classify_region(p), K=10)
    # entries continue geometrically past K: d_i = (g1-1)(a1-1)/(g1*A*a1^(i-1))
    assert d.entry(11) == Fraction(2, 3 * 2 * 2**10)
    tail = d.suffix_float(10)
    exact = sum(float(Fraction(2, 6 * 2 ** (i - 1))) for i in range(11, 200))
    assert abs(tail - exact) < 1e-12


def test_csv_dump():
    dec = decompose(ParamTuple(2, 0, 3, 0), 6)
    buf = io.StringIO()
    dec.to_csv(buf)
    lines = buf.getvalue().strip().splitlines()
    assert lines[0] == "x,class,chain_id,position_in_chain"
    rows = {tuple(l.split(",")[:2]) for l in lines[1:]}
    assert ("4", "finite(3)") in rows
    assert ("6", "finite(3)") in rows
    assert ("1", "A1") in rows
    assert len(lines) == 7  # header + one row per element of [1, 6]
