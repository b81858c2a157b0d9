import pytest

from blockwitness.blocks import irr_p_prime_principal
from blockwitness.oracle import (
    _p_prime_set,
    check_conjB,
    check_conjC,
    cross_validate,
    prime_pairs,
    witness_sets,
)
from blockwitness.partitions import Partition


def P(*parts):
    return Partition(tuple(parts))


def test_witness_sets_examples():
    side_p, side_q = witness_sets(9, 3, 2, "sn")
    assert P(2, 1, 1, 1, 1, 1, 1, 1) in side_p
    side_p_an, _ = witness_sets(9, 3, 2, "an")
    assert P(2, 1, 1, 1, 1, 1, 1, 1) in side_p_an
    # n < 9 computes without any existence claim
    small_p, small_q = witness_sets(4, 3, 2, "sn")
    assert isinstance(small_p, frozenset) and isinstance(small_q, frozenset)


def test_witness_sets_an_excludes_self_conjugate():
    side_p, side_q = witness_sets(9, 3, 2, "sn")
    side_p_an, side_q_an = witness_sets(9, 3, 2, "an")
    assert side_p_an <= side_p and side_q_an <= side_q
    for lam in (side_p - side_p_an) | (side_q - side_q_an):
        assert lam.is_self_conjugate()


def test_witness_set_members_verify():
    side_p, side_q = witness_sets(12, 3, 2, "sn")
    from blockwitness.blocks import principal_block_contains
    from blockwitness.degrees import degree_valuation

    for lam in side_p:
        assert principal_block_contains(lam, 3)
        assert degree_valuation(lam, 3) == 0
        assert degree_valuation(lam, 2) >= 1
    for lam in side_q:
        assert principal_block_contains(lam, 2)
        assert degree_valuation(lam, 2) == 0
        assert degree_valuation(lam, 3) >= 1


def test_group_kind_validation():
    with pytest.raises(ValueError):
        witness_sets(9, 3, 2, "gl")
    with pytest.raises(ValueError):
        witness_sets(9, 3, 3, "sn")


def test_check_conjC_examples():
    assert check_conjC(9, 3, 2, "sn").condition_holds
    assert check_conjC(9, 3, 2, "an").condition_holds
    assert check_conjC(30, 7, 5, "sn").condition_holds


def test_check_conjB_examples():
    report = check_conjB(9, 3, 2)
    assert not report.sets_equal
    assert not report.violates_equality_check
    assert not check_conjB(12, 3, 2).sets_equal
    with pytest.raises(ValueError):
        check_conjB(9, 3, 3)
    with pytest.raises(ValueError):
        check_conjB(9, 11, 2)


def test_report_set_consistency():
    report = check_conjC(10, 5, 2, "sn")
    assert report.witnesses_p_block <= report.set_B_p
    assert report.witnesses_q_block <= report.set_B_q
    assert report.sets_equal == (report.set_B_p == report.set_B_q)


def test_oracle_and_blocks_agree_on_sets():
    # two routes to the same prime-to-p principal sets
    for n in (4, 9, 13):
        for p in (2, 3):
            assert _p_prime_set(n, p, "sn") == irr_p_prime_principal(n, p)


def test_cross_validate_examples():
    cv = cross_validate(9, 3, 2)
    assert cv.oracle_agrees and cv.case_id == "I.a"
    cv10 = cross_validate(10, 5, 2)
    assert cv10.oracle_agrees and cv10.case_id == "II.a"
    deferred = cross_validate(11, 7, 5)
    assert deferred.witness is None
    assert deferred.deferral == "abelian-sylow"
    assert deferred.oracle_condition_holds is True
    small = cross_validate(8, 3, 2)
    assert small.deferral == "small-n"


def test_prime_pairs():
    assert prime_pairs(5) == [(3, 2), (5, 2), (5, 3)]
    assert prime_pairs(2) == []
    assert all(q < p for p, q in prime_pairs(30))


def test_conjB_no_violation_through_28():
    # extends the acceptance range (n <= 24) to the oracle's scan ceiling
    for n in range(25, 29):
        for p, q in prime_pairs(n):
            assert not check_conjB(n, p, q).violates_equality_check
