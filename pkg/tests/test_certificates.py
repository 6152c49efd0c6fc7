"""Tests for sparse index sets and pairwise certificates."""

from itertools import combinations

import pytest

import core
from core.certificates import (
    CERTIFIED,
    NOT_CERTIFIED,
    certify_distinct,
    certify_index_set,
    family_inequality_witness,
    paper_inequality_witness,
    sparse_index_set,
)
from core.exact_algebra import PositiveRational

TAU_4 = 783226


def test_sparse_index_set_values():
    assert sparse_index_set(1) == [1]
    assert sparse_index_set(3) == [1, 10, 442]
    taus = sparse_index_set(5)
    assert taus[3] == TAU_4
    assert taus[4] == (2 * TAU_4 + 1) ** 2 + 1


@pytest.mark.parametrize("k", [0, -2])
def test_sparse_index_set_bad_k(k):
    with pytest.raises(ValueError):
        sparse_index_set(k)


def test_sparse_members_pairwise_certified():
    taus = sparse_index_set(5)
    for m, n in combinations(taus, 2):
        assert (2 * m + 1) ** 2 < 2 * n + 1
        cert = certify_distinct(n, m)
        assert cert.verdict == CERTIFIED
        assert cert.lhs == (2 * m + 1) ** 2
        assert cert.rhs == 2 * n + 1
        assert cert.witness


def test_certificate_trace():
    cert = certify_distinct(10, 1)
    assert cert.certified
    assert cert.summary() == "CERTIFIED: (2·1+1)² = 9 < 21 = 2·10+1"
    assert cert.w == PositiveRational(441, 1)
    assert cert.epsilon == PositiveRational(3, 1)


def test_argument_order_is_normalized():
    assert certify_distinct(1, 10) == certify_distinct(10, 1)


@pytest.mark.parametrize("n,m,trace", [
    (2, 1, "NOT-CERTIFIED: (2·1+1)² = 9 ≥ 5 = 2·2+1"),
    (3, 3, "NOT-CERTIFIED: (2·3+1)² = 49 ≥ 7 = 2·3+1"),
])
def test_not_certified(n, m, trace):
    cert = certify_distinct(n, m)
    assert cert.verdict == NOT_CERTIFIED
    assert cert.summary() == trace
    assert not cert.witness


@pytest.mark.parametrize("n,m", [(0, 1), (1, 0), (-1, 5)])
def test_certify_rejects_bad_indices(n, m):
    with pytest.raises(ValueError):
        certify_distinct(n, m)


def test_witness_matches_verdict():
    for n in range(1, 60):
        for m in range(1, 60):
            cert = certify_distinct(n, m)
            assert cert.witness == cert.certified


def test_inequality_witness():
    three = PositiveRational(3, 1)
    assert family_inequality_witness(PositiveRational(82, 1), three, 2)
    assert not family_inequality_witness(PositiveRational(81, 1), three, 2)
    assert family_inequality_witness(PositiveRational(3, 2), PositiveRational.one(), 5)
    with pytest.raises(ValueError):
        family_inequality_witness(three, PositiveRational(1, 2), 2)
    with pytest.raises(ValueError):
        family_inequality_witness(three, three, -1)


def test_inequality_witness_alias():
    assert paper_inequality_witness is family_inequality_witness
    assert core.paper_inequality_witness is family_inequality_witness
    assert paper_inequality_witness(PositiveRational(10, 1), PositiveRational(3, 1), 1)
    assert not paper_inequality_witness(PositiveRational(9, 1), PositiveRational(3, 1), 1)


def test_certify_index_set_and_record():
    certs = certify_index_set(sparse_index_set(4) + [1])
    assert len(certs) == 6
    assert all(c.certified for c in certs)
    record = certs[-1].to_record()
    assert record["n"] == str(TAU_4)
    assert record["verdict"] == "certified"
    assert record["rhs"] == str(2 * TAU_4 + 1)
    assert isinstance(record["witness"], bool)
