"""
Certificates Module

Sparse index sets for the surface family and the exact integer criterion
under which two family members (N, S_n) and (N, S_m) are certified not
quasi-isometric as pairs.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Sequence

from .exact_algebra import PositiveRational

logger = logging.getLogger(__name__)

# tau(1); the recurrence works from any positive seed
SPARSE_SEED = 1

CERTIFIED = 'certified'
NOT_CERTIFIED = 'not-certified'


@dataclass(frozen=True)
class Certificate:
    """
    Outcome of comparing two family members.

    `n` is the larger index and `m` the smaller one. `lhs` = (2m+1)^2 and
    `rhs` = 2n+1 are the two sides of the criterion; `witness` records the
    equivalent comparison w(gamma_n) > epsilon_m^4.
    """
    n: int
    m: int
    w: PositiveRational
    epsilon: PositiveRational
    verdict: str
    lhs: int
    rhs: int
    witness: bool

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    @property
    def trace(self) -> str:
        relation = '<' if self.lhs < self.rhs else '≥'
        return f"(2·{self.m}+1)² = {self.lhs} {relation} {self.rhs} = 2·{self.n}+1"

    def summary(self) -> str:
        return f"{'CERTIFIED' if self.certified else 'NOT-CERTIFIED'}: {self.trace}"

    def to_record(self) -> Dict[str, Any]:
        """Machine-readable form; big integers are kept as decimal strings."""
        return {
            'n': str(self.n),
            'm': str(self.m),
            'verdict': self.verdict,
            'w': str(self.w),
            'epsilon': str(self.epsilon),
            'lhs': str(self.lhs),
            'rhs': str(self.rhs),
            'witness': self.witness,
            'trace': self.trace
        }


def sparse_index_set(k: int) -> List[int]:
    """
    [tau(1), ..., tau(k)] with tau(1) = 1 and tau(j+1) = (2 tau(j) + 1)^2 + 1.

    Any two members m < n satisfy (2m+1)^2 < 2n+1.

    Example:
        >>> sparse_index_set(3)
        [1, 10, 442]
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    taus = [SPARSE_SEED]
    while len(taus) < k:
        taus.append((2 * taus[-1] + 1) ** 2 + 1)
    return taus


def family_inequality_witness(w: PositiveRational, epsilon: PositiveRational, c: int) -> bool:
    """
    True iff w > epsilon^(2c), compared exactly.

    With c = 2 (the crossing number of gamma_n) this is w(gamma_n) > epsilon^4.
    Experimental: the block-counting constants behind the exponent are not
    modelled, so this is only the arithmetic.

    Raises:
        ValueError: if epsilon < 1 or c < 0
    """
    if epsilon < PositiveRational.one():
        raise ValueError(f"epsilon must be at least 1, got {epsilon}")
    if c < 0:
        raise ValueError(f"crossing number must be non-negative, got {c}")
    return w > epsilon ** (2 * c)


# Alias kept for existing callers
paper_inequality_witness = family_inequality_witness


def certify_distinct(n: int, m: int) -> Certificate:
    """
    Certify (N, S_n) and (N, S_m) as non-quasi-isometric pairs.

    With N the larger and M the smaller index, the verdict is `certified`
    iff N != M and (2M+1)^2 < 2N+1. `not-certified` only means the
    criterion does not apply; it never claims a quasi-isometry.

    Raises:
        ValueError: if either index is below 1
    """
    if n < 1 or m < 1:
        raise ValueError(f"indices must be at least 1, got n={n}, m={m}")
    big, small = max(n, m), min(n, m)
    lhs = (2 * small + 1) ** 2
    rhs = 2 * big + 1
    verdict = CERTIFIED if big != small and lhs < rhs else NOT_CERTIFIED
    w = PositiveRational(rhs ** 2, 1)
    epsilon = PositiveRational(2 * small + 1, 1)
    cert = Certificate(
        n=big,
        m=small,
        w=w,
        epsilon=epsilon,
        verdict=verdict,
        lhs=lhs,
        rhs=rhs,
        witness=family_inequality_witness(w, epsilon, 2)
    )
    logger.debug(f"certify_distinct({n}, {m}) -> {verdict}")
    return cert


def certify_index_set(indices: Sequence[int]) -> List[Certificate]:
    """Certificates for every unordered pair of distinct indices, in input order."""
    unique = list(dict.fromkeys(indices))
    return [certify_distinct(a, b) for a, b in combinations(unique, 2)]
