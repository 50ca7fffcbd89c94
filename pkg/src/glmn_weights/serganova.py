"""Serganova's algorithm for GL(M|N) weights, with step orders and traces.

The forward transform takes a weight that is dominant for the standard
Borel subgroup and produces the highest weight of the same irreducible
with respect to the mixed Borel subgroup.  It visits each excess pair
(i, j) once, following any linear extension of the pair order: at a pair
it tests lambda_i + theta_j against the modulus, does nothing when the
sum vanishes, and otherwise moves one unit from lambda_i to theta_j.
The inverse transform walks the same pairs in reverse and moves units
back; because each step preserves lambda_i + theta_j mod p, the step
taken is recoverable and the two transforms are mutually inverse on all
integer weights.

Only theta entries 1..M can ever move (j <= i <= M), so theta_{M+1} and
any trailing entries ride along unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import CapacityError, Modulus, SuperRank, ValidationError, Weight, congruent_zero
from .roots import PairIndex, all_pairs, pair_leq


class Action(Enum):
    NOOP = "noop"
    MOVE = "move"


class Direction(Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(frozen=True)
class StepOrder:
    """A linear extension of the excess-pair order for a given M."""

    M: int
    steps: tuple[PairIndex, ...]

    def __post_init__(self):
        try:
            steps = tuple(PairIndex(int(i), int(j)) for (i, j) in self.steps)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"steps must be (i, j) pairs: {exc}") from exc
        object.__setattr__(self, "steps", steps)
        expected = set(all_pairs(self.M))
        if set(steps) != expected or len(steps) != len(expected):
            raise ValidationError(
                f"steps must visit each excess pair for M={self.M} exactly once, got {steps}"
            )
        for a in range(len(steps)):
            for b in range(a + 1, len(steps)):
                if steps[a] != steps[b] and pair_leq(steps[b], steps[a]):
                    raise ValidationError(
                        f"steps are not a linear extension: {tuple(steps[b])} "
                        f"must come before {tuple(steps[a])}"
                    )


@dataclass(frozen=True)
class StepRecord:
    """What happened on one step: the pair visited, the action taken, the
    diagonal sum seen before acting, and the full state afterwards."""

    k: int
    pair: PairIndex
    action: Action
    sum_before: int
    state_after: Weight


@dataclass(frozen=True)
class Trace:
    direction: Direction
    order_used: StepOrder
    records: tuple[StepRecord, ...]


def order_v1(M: int) -> StepOrder:
    """Column sweep: j = 1..M, and within each j, i runs from M down to j."""
    return StepOrder(M, tuple(PairIndex(i, j) for j in range(1, M + 1) for i in range(M, j - 1, -1)))


def order_v2(M: int) -> StepOrder:
    """Row sweep: i runs from M down to 1, and within each i, j = 1..i."""
    return StepOrder(M, tuple(PairIndex(i, j) for i in range(M, 0, -1) for j in range(1, i + 1)))


def all_linear_extensions(M: int, cap: int = 10_000) -> list[StepOrder]:
    """Enumerate every linear extension of the excess-pair order.

    Backtracks over the poset, trying candidates in lexicographic pair order,
    so the output list is lexicographically sorted and deterministic.  Raises
    CapacityError as soon as more than `cap` extensions exist.
    """
    if cap <= 0:
        raise ValidationError(f"cap must be positive, got {cap}")
    pairs = list(all_pairs(M))
    preds = {y: {x for x in pairs if x != y and pair_leq(x, y)} for y in pairs}
    found: list[StepOrder] = []
    chosen: list[PairIndex] = []
    placed: set[PairIndex] = set()

    def extend():
        if len(chosen) == len(pairs):
            if len(found) >= cap:
                raise CapacityError(f"more than cap={cap} linear extensions for M={M}")
            found.append(StepOrder(M, tuple(chosen)))
            return
        for cand in pairs:
            if cand in placed or not preds[cand] <= placed:
                continue
            chosen.append(cand)
            placed.add(cand)
            extend()
            chosen.pop()
            placed.remove(cand)

    extend()
    return found


def _require(w: Weight, order: StepOrder, rank: SuperRank) -> None:
    w.require_rank(rank)
    if order.M != rank.M:
        raise ValidationError(f"step order is for M={order.M}, rank has M={rank.M}")


def forward(w: Weight, p: Modulus, order: StepOrder, rank: SuperRank) -> tuple[Weight, Trace]:
    """Run the transform toward the mixed Borel; returns result and trace."""
    _require(w, order, rank)
    return _run(w, p, order, Direction.FORWARD)


def inverse(w: Weight, p: Modulus, order: StepOrder, rank: SuperRank) -> tuple[Weight, Trace]:
    """Run the inverse transform (reverse traversal, unit moves undone)."""
    _require(w, order, rank)
    return _run(w, p, order, Direction.INVERSE)


def _run(w: Weight, p: Modulus, order: StepOrder, direction: Direction) -> tuple[Weight, Trace]:
    lam = list(w.lam)
    theta = list(w.theta)
    fwd = direction is Direction.FORWARD
    steps = order.steps if fwd else tuple(reversed(order.steps))
    records = []
    for k, pair in enumerate(steps, start=1):
        li = pair.i - 1
        tj = pair.j - 1
        s = lam[li] + theta[tj]
        if congruent_zero(s, p):
            action = Action.NOOP
        else:
            action = Action.MOVE
            d = -1 if fwd else 1
            lam[li] += d
            theta[tj] -= d
        records.append(StepRecord(k, pair, action, s, Weight(tuple(lam), tuple(theta))))
    return Weight(tuple(lam), tuple(theta)), Trace(direction, order, tuple(records))
