"""Membership predicates for the weight sets on both sides of the story,
plus the monomial matrix labelling each orbit.

Three sets of conditions appear, all built from two ingredients: chain
conditions on lambda and on the full theta tuple (non-increasing or
non-decreasing, depending on the unipotent-group convention), and the
vanishing condition that whenever two adjacent chain entries are equal the
diagonal sum lambda_i + theta_i must be congruent to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Modulus, SuperRank, Weight, congruent_zero, split_theta


class GroupConvention(Enum):
    """Which unipotent subgroup the orbit picture uses.  The two choices are
    transposes of each other; switching flips every chain inequality."""

    UMINUS = "uminus"  # chains run non-decreasing
    UPLUS = "uplus"  # chains run non-increasing


def _non_increasing(seq) -> bool:
    return all(seq[k] >= seq[k + 1] for k in range(len(seq) - 1))


def _non_decreasing(seq) -> bool:
    return all(seq[k] <= seq[k + 1] for k in range(len(seq) - 1))


def is_standard_dominant(w: Weight, rank: SuperRank) -> bool:
    """Dominant for the standard Borel: both chains non-increasing."""
    w.require_rank(rank)
    return _non_increasing(w.lam) and _non_increasing(w.theta)


def _vanishing_on_equalities(lam, theta, M: int, p: Modulus) -> bool:
    # theta_i = theta_{i+1} forces lambda_i + theta_i ~ 0, for i = 1..M;
    # lambda_{i-1} = lambda_i forces the same sum, for i = 2..M.
    for i in range(M):
        if theta[i] == theta[i + 1] and not congruent_zero(theta[i] + lam[i], p):
            return False
    for i in range(1, M):
        if lam[i - 1] == lam[i] and not congruent_zero(theta[i] + lam[i], p):
            return False
    return True


def is_mixed_highest_weight(w: Weight, rank: SuperRank, p: Modulus) -> bool:
    """Highest weight for the mixed Borel: dominant chains plus the
    vanishing condition on adjacent equal entries."""
    w.require_rank(rank)
    return is_standard_dominant(w, rank) and _vanishing_on_equalities(w.lam, w.theta, rank.M, p)


def is_relevant_orbit(
    w: Weight, rank: SuperRank, p: Modulus, convention: GroupConvention
) -> bool:
    """Whether the orbit labelled by this weight supports an equivariant
    irreducible object.

    The chain condition runs over lambda and over all of theta (through the
    head/tail split boundary), non-decreasing for UMINUS and non-increasing
    for UPLUS; the vanishing condition is identical for both conventions.
    With p = 0 the sums must vanish exactly.
    """
    w.require_rank(rank)
    chain = _non_decreasing if convention is GroupConvention.UMINUS else _non_increasing
    if not (chain(w.lam) and chain(w.theta)):
        return False
    return _vanishing_on_equalities(w.lam, w.theta, rank.M, p)


@dataclass(frozen=True)
class OrbitMatrix:
    """N x N monomial matrix stored as (row, col, exponent) triples, sorted
    row-major.  Exponent 0 is still a structural entry (the cell holds 1);
    cells absent from `entries` are zero."""

    size: int
    entries: tuple[tuple[int, int, int], ...]

    def exponent(self, row: int, col: int) -> int | None:
        """Exponent at a structural cell, or None if the cell is zero."""
        for r, c, e in self.entries:
            if (r, c) == (row, col):
                return e
        return None

    def to_json_dict(self) -> dict:
        return {"size": self.size, "entries": [list(e) for e in self.entries]}


def orbit_representative(w: Weight, rank: SuperRank) -> OrbitMatrix:
    """The monomial coset representative attached to (lambda, (theta, theta')).

    Diagonal cells 1..M carry -(lambda_i + theta_i); row M+1 carries
    -theta_1..-theta_M in columns 1..M and -theta_{M+1} on the diagonal;
    the trailing diagonal carries -theta' entrywise.
    """
    w.require_rank(rank)
    s = split_theta(w, rank)
    M = rank.M
    ent: dict[tuple[int, int], int] = {}
    for i in range(1, M + 1):
        ent[(i, i)] = -(w.lam[i - 1] + w.theta[i - 1])
    for c in range(1, M + 1):
        ent[(M + 1, c)] = -w.theta[c - 1]
    ent[(M + 1, M + 1)] = -s.head[M]
    for r, tp in enumerate(s.tail, start=1):
        ent[(M + 1 + r, M + 1 + r)] = -tp
    entries = tuple(sorted((r, c, e) for (r, c), e in ent.items()))
    return OrbitMatrix(rank.N, entries)
