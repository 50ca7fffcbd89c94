"""Core data for GL(M|N) weight combinatorics.

A weight is a pair of integer tuples (lambda, theta) sized against a
SuperRank (M even basis directions, N odd ones, with M < N).  Modulus
packages the congruence test shared by the transform algorithm and the
classification predicates: p = 0 means exact vanishing (the generic,
non-root-of-unity regime), a prime p >= 2 means vanishing mod p.
"""

from __future__ import annotations

from dataclasses import dataclass


class ValidationError(ValueError):
    """Invalid rank, modulus, weight, Borel word, or step order."""


class DimensionMismatch(ValidationError):
    """Weight shape does not match the ambient rank."""


class CapacityError(RuntimeError):
    """An enumeration exceeded its configured cap or limit."""


class InternalConsistencyError(RuntimeError):
    """A structural identity the library relies on failed to hold."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class SuperRank:
    """Ambient rank: M even basis vectors followed by N odd ones, M < N."""

    M: int
    N: int

    def __post_init__(self):
        if not isinstance(self.M, int) or not isinstance(self.N, int):
            raise ValidationError(f"rank entries must be integers, got ({self.M!r}, {self.N!r})")
        if self.M < 0:
            raise ValidationError(f"M must be nonnegative, got {self.M}")
        if self.M >= self.N:
            raise ValidationError(f"rank requires M < N, got M={self.M}, N={self.N}")

    @property
    def total(self) -> int:
        return self.M + self.N


@dataclass(frozen=True)
class Weight:
    """Integer weight (lambda, theta) in Z^M x Z^N."""

    lam: tuple[int, ...]
    theta: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "theta", tuple(self.theta))
        for v in self.lam + self.theta:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"weight entries must be integers, got {v!r}")

    def matches(self, rank: SuperRank) -> bool:
        return len(self.lam) == rank.M and len(self.theta) == rank.N

    def require_rank(self, rank: SuperRank) -> None:
        if not self.matches(rank):
            raise DimensionMismatch(
                f"weight of shape ({len(self.lam)}|{len(self.theta)}) "
                f"does not match rank ({rank.M}|{rank.N})"
            )

    def to_json_dict(self) -> dict:
        return {"lambda": list(self.lam), "theta": list(self.theta)}

    @classmethod
    def from_json_dict(cls, obj, rank: SuperRank | None = None) -> "Weight":
        if not isinstance(obj, dict) or set(obj) != {"lambda", "theta"}:
            raise ValidationError(
                'weight JSON must be an object with exactly the keys "lambda" and "theta"'
            )
        lam, theta = obj["lambda"], obj["theta"]
        if not isinstance(lam, list) or not isinstance(theta, list):
            raise ValidationError('"lambda" and "theta" must be arrays of integers')
        w = cls(tuple(lam), tuple(theta))
        if rank is not None:
            w.require_rank(rank)
        return w


@dataclass(frozen=True)
class Modulus:
    """Congruence modulus: 0 tests exact vanishing, a prime p tests mod p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise ValidationError(f"modulus must be an integer, got {self.p!r}")
        if self.p < 0:
            raise ValidationError(f"modulus must be nonnegative, got {self.p}")
        if self.p != 0 and not _is_prime(self.p):
            raise ValidationError(f"modulus must be 0 or a prime, got {self.p}")


def congruent_zero(a: int, p: Modulus) -> bool:
    """True iff a vanishes exactly (p = 0) or modulo the prime p.

    Negative a uses the mathematical remainder, so e.g. -4 is congruent to
    zero mod 2.
    """
    if p.p == 0:
        return a == 0
    return a % p.p == 0


@dataclass(frozen=True)
class ThetaSplit:
    """theta cut after position M+1: the head (theta_1..theta_{M+1}) and the
    tail (theta'_1..theta'_{N-M-1}) of trailing entries."""

    head: tuple[int, ...]
    tail: tuple[int, ...]


def split_theta(w: Weight, rank: SuperRank) -> ThetaSplit:
    """Split theta into its first M+1 entries and the remaining N-M-1."""
    w.require_rank(rank)
    cut = rank.M + 1
    return ThetaSplit(w.theta[:cut], w.theta[cut:])


def join_theta(s: ThetaSplit) -> tuple[int, ...]:
    """Undo split_theta: concatenate head and tail."""
    return s.head + s.tail
