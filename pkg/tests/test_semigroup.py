import pytest

from hermicode.semigroup import (
    Monomial,
    Phase,
    basis_B,
    basis_Bm,
    code_label_info,
    gaps,
    genus,
    in_lambda,
    is_code_label,
    lambda_membership,
    max_label,
    monomial_of_weight,
    w_weight,
)

from naive import in_semigroup, staircase_B, w


def test_membership_examples():
    rep = lambda_membership(4, 8)
    assert (rep.a, rep.b) == (2, 0)
    assert lambda_membership(4, 11) is None


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_membership_matches_scan(q):
    for n in range(3 * q * q):
        assert in_lambda(q, n) == in_semigroup(q, n)


def test_gap_sets():
    assert gaps(4) == (1, 2, 3, 6, 7, 11)
    assert gaps(2) == (1,)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_gap_count_is_genus(q):
    assert len(gaps(q)) == q * (q - 1) // 2 == genus(q)


def test_basis_q2():
    got = basis_B(2)
    assert sorted(got) == sorted(Monomial(*t) for t in [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1)])
    assert sorted(w_weight(2, t) for t in got) == [0, 2, 3, 4, 5, 6, 7, 9]


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_basis_is_staircase_with_distinct_weights(q):
    got = basis_B(q)
    assert sorted(got) == sorted(Monomial(*t) for t in staircase_B(q))
    weights = [w_weight(q, t) for t in got]
    assert len(set(weights)) == len(weights) == q ** 3
    assert weights == sorted(weights)


def test_truncated_basis_q4_m18():
    got = basis_Bm(4, 18)
    assert [w_weight(4, t) for t in got] == [0, 4, 5, 8, 9, 10, 12, 13, 14, 15, 16, 17, 18]
    assert monomial_of_weight(4, 19) == Monomial(1, 3)


@pytest.mark.parametrize(
    "m,mt,dt,phase",
    [(16, 18, 8, Phase.II), (14, 14, 4, Phase.I), (22, 22, 12, Phase.III)],
)
def test_label_info_q4(m, mt, dt, phase):
    info = code_label_info(4, m)
    assert (info.m_tilde, info.delta_tilde, info.phase) == (mt, dt, phase)


def test_code_labels():
    assert not is_code_label(4, 10)
    assert is_code_label(4, 18)
    for q in (2, 3, 4):
        top = max(w(q, t) for t in staircase_B(q)) - 1
        assert max_label(q) == top
        assert is_code_label(q, top)
        assert not is_code_label(q, top + 1)


def test_phase_boundaries_q4():
    assert code_label_info(4, 14).phase is Phase.I
    assert code_label_info(4, 15).phase is Phase.II
    assert code_label_info(4, 21).phase is Phase.II
    assert code_label_info(4, 62).phase is Phase.III
    assert code_label_info(4, 63).phase is Phase.IV


def test_monomial_text_roundtrip():
    for mono in [Monomial(0, 0), Monomial(1, 0), Monomial(0, 3), Monomial(2, 5)]:
        assert Monomial.parse(str(mono)) == mono
    with pytest.raises(ValueError):
        Monomial.parse("z^2")


def test_out_of_range_label():
    with pytest.raises(ValueError):
        code_label_info(4, max_label(4) + 1)
