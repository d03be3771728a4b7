import random

import pytest

from hermicode.code import CodeLabelError, build_code
from hermicode.curve import Divisor, enumerate_points, points_on_vertical_line
from hermicode.field import field_for_q
from hermicode.groebner import staircase, vanishing_ideal
from hermicode.minwords import (
    BoundCaseKind,
    ConstructionError,
    TheoremViolation,
    Verdict,
    bound_monomial,
    classify_support,
    construct_line_union_support,
    construct_phase1_supports,
    construct_type_ii_support,
    curve_zeros,
    distance,
    lower_bound,
    sample_type_i_support,
    sample_type_ii_support,
    support_patterns,
    type_ii_label,
)
from hermicode.groebner import Polynomial
from hermicode.semigroup import Monomial as M, code_label_info, code_labels

from naive import NaiveHermitian, min_distance

# Brute-force distances (exhaustive column-subset search), frozen.
DISTANCES = {
    2: {1: 2, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 8: 8},
    3: {2: 2, 3: 2, 5: 3, 6: 3, 7: 3, 8: 4, 9: 6, 10: 6},
    4: {3: 2, 4: 2, 7: 3, 8: 3, 9: 3, 11: 4, 12: 4, 13: 4, 14: 4, 15: 5,
        16: 8, 17: 8, 18: 8, 19: 9, 20: 10, 21: 12, 22: 12},
}


@pytest.mark.parametrize("q", [2, 3, 4])
def test_distance_table(q):
    for m, d in DISTANCES[q].items():
        assert distance(q, m) == d


def test_worked_distances():
    assert distance(4, 11) == 4
    assert distance(4, 16) == 8
    assert distance(4, 21) == 12


def test_naive_distance_q2():
    ref = NaiveHermitian(2, 1)
    for m, d in DISTANCES[2].items():
        assert min_distance(ref, m, d) == d


def test_naive_distance_q3_small():
    ref = NaiveHermitian(3, 1)
    for m in (2, 3, 5):
        assert min_distance(ref, m, 3) == DISTANCES[3][m]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_distance_monotone(q):
    ds = [distance(q, m) for m in code_labels(q)]
    assert ds == sorted(ds)


def test_distance_rejects_non_label():
    with pytest.raises(CodeLabelError):
        distance(4, 10)


def test_lower_bound_cases():
    b = lower_bound(4, 18, 0)
    assert (b.case, b.bound) == (BoundCaseKind.C, 8)
    b = lower_bound(4, 15, 1)
    assert (b.case, b.bound) == (BoundCaseKind.A, 8)
    assert b.as_dict()["lambda"] == 1
    assert bound_monomial(4, 18, 0) == M(1, 3)
    with pytest.raises(ValueError):
        lower_bound(4, 16, 0)


def test_phase1_vertical_fibre():
    ctx = field_for_q(4)
    d = construct_phase1_supports(ctx, 14, "vertical", x0=0)
    assert d == points_on_vertical_line(ctx, 0)
    gb, _ = vanishing_ideal(ctx, d)
    assert set(gb.leading_monomials()) == {M(1, 0), M(0, 4)}


def test_phase1_nonvertical_needs_hq_minus_1():
    with pytest.raises(ConstructionError):
        construct_phase1_supports(4, 12, "nonvertical")
    d = construct_phase1_supports(4, 11, "nonvertical")
    assert len(d) == 4


@pytest.mark.parametrize("m,size", [(18, 8), (15, 5)])
def test_line_union(m, size):
    ctx = field_for_q(4)
    d, f = construct_line_union_support(ctx, m)
    assert len(d) == size
    info = code_label_info(4, m)
    _, foot = vanishing_ideal(ctx, d)
    assert foot == staircase([M(5, 0), M(info.mu, info.lam), M(0, info.lam + 4)])
    assert set(curve_zeros(ctx, f)) == set(d)


def test_line_union_rejects_crossing_lines():
    ctx = field_for_q(4)
    beta = next(b for b in range(16) if ctx.trace(b) == 1)
    alpha = next(a for a in range(16) if ctx.norm(a) == 1)
    with pytest.raises(ConstructionError):
        construct_line_union_support(ctx, 19, alphas=[alpha], betas=[beta])


def test_conic_scan_q3_m8():
    """F = y - (ax+b) over all 81 pairs: 54 cut 4 rational points."""
    ctx = field_for_q(3)
    ok = 0
    for a in range(9):
        for b in range(9):
            f = Polynomial(ctx, {M(0, 1): 1, M(1, 0): ctx.neg(a), M(0, 0): ctx.neg(b)})
            ok += len(curve_zeros(ctx, f)) == 4
    assert ok == 54


def test_sampler_is_seeded():
    a = sample_type_i_support(4, 18, seed=11)
    b = sample_type_i_support(4, 18, seed=11)
    assert a is not None and a[0] == b[0] and a[1] == b[1]
    assert a[1].leading_monomial() == M(2, 0)
    assert sample_type_i_support(4, 18, seed=11, attempts=0) is None


def test_type_ii_grids():
    d, f1, f2 = construct_type_ii_support(3, 2)
    assert len(d) == 6 and type_ii_label(3, 2) == 9
    d, f1, f2 = construct_type_ii_support(4, 2)
    assert len(d) == 8
    assert f1.leading_monomial() == M(4, 0) and f2.leading_monomial() == M(0, 2)
    d, _, _ = construct_type_ii_support(4, 1)
    assert len(d) == 4 and len({y for _, y in d}) == 1
    with pytest.raises(ConstructionError):
        construct_type_ii_support(4, 2, c=0)
    with pytest.raises(ConstructionError):
        construct_type_ii_support(4, 4)


def test_general_type_ii_sampler(codes):
    found = sample_type_ii_support(3, 2, seed=4)
    assert found is not None
    d, f1, f2 = found
    cert = classify_support(codes(3, 9), d)
    assert cert.verdict is Verdict.TYPE_II


def test_classify_conic(codes):
    d, _ = sample_type_i_support(4, 18, seed=0)
    cert = classify_support(codes(4, 18), d)
    assert cert.verdict is Verdict.TYPE_I
    assert set(cert.footprint) == {M(0, 0), M(0, 1), M(0, 2), M(0, 3), M(1, 0), M(1, 1), M(1, 2), M(1, 3)}
    assert cert.codeword.weight == 8 and cert.codeword.is_valid()
    assert cert.witness[0].leading_monomial() == M(2, 0)


def test_classify_grid(codes):
    d, _, _ = construct_type_ii_support(4, 2)
    assert classify_support(codes(4, 16), d).verdict is Verdict.TYPE_II
    assert classify_support(codes(4, 18), d).verdict is Verdict.NOT_MINIMUM


def test_corner_overlap_policy(codes):
    ctx = field_for_q(4)
    fibre = construct_phase1_supports(ctx, 14, "vertical")
    for m in (11, 12, 13, 14):
        cert = classify_support(codes(4, m), fibre)
        assert cert.verdict is Verdict.TYPE_I
        assert cert.cross_check == ("MinWeightPhaseILine:vertical",)
    secant = construct_phase1_supports(ctx, 11, "nonvertical")
    cert = classify_support(codes(4, 11), secant)
    assert cert.verdict is Verdict.TYPE_II
    assert cert.cross_check == ("MinWeightPhaseILine:nonvertical",)
    for m in (12, 13, 14):
        assert classify_support(codes(4, m), secant).verdict is Verdict.NOT_MINIMUM


def test_early_phase_one_lines(codes):
    ctx = field_for_q(4)
    d = construct_phase1_supports(ctx, 8, "vertical", seed=3)
    cert = classify_support(codes(4, 8), d)
    assert (cert.verdict, cert.pattern) == (Verdict.PHASE_I_LINE, "vertical")
    d = construct_phase1_supports(ctx, 7, "nonvertical", seed=3)
    cert = classify_support(codes(4, 7), d)
    assert (cert.verdict, cert.pattern) == (Verdict.PHASE_I_LINE, "nonvertical")


def test_wrong_size_is_not_minimum(codes):
    ctx = field_for_q(3)
    d = Divisor(ctx, enumerate_points(ctx)[:5])
    assert classify_support(codes(3, 9), d).verdict is Verdict.NOT_MINIMUM


def test_unclassifiable_minimum_raises(codes, monkeypatch):
    import hermicode.minwords as mw

    d, _ = sample_type_i_support(4, 18, seed=0)
    monkeypatch.setattr(mw, "support_patterns", lambda q, m: [])
    with pytest.raises(TheoremViolation):
        classify_support(codes(4, 18), d)


def test_certificate_json(codes):
    d, _ = sample_type_i_support(4, 18, seed=1)
    out = classify_support(codes(4, 18), d).as_json()
    assert out["verdict"] == "MinWeightTypeI"
    assert out["divisor"] == d.indices()
    assert len(out["codeword"]) == 64 and all(isinstance(c, str) for c in out["codeword"])


def test_patterns_listed_in_preference_order():
    pats = support_patterns(4, 11)
    assert [p.label for p in pats] == ["curve", "grid", "vertical", "nonvertical"]
