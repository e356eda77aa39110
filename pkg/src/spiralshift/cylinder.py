"""Point configurations on a discrete cylinder and the spiral shifting operators.

A tuple x = (n_1, ..., n_d) of nonnegative integers is drawn as d points on
the cylinder [1..d] x N, one per seat: seat i carries a point at level n_i.
Points are compared by height, level + seat/d, which for every width d is
exactly the lexicographic order on (level, seat); no fractional arithmetic
is ever needed.  Walking the cylinder upward in height order traces a
spiral through all of [1..d] x N.

The operator of rank j keeps the j-1 lowest points of a configuration fixed
and moves each remaining point up the spiral to the next seat occupied by
the moving group; the point on the group's highest seat wraps around to the
group's lowest seat one level up.  These d operators commute and give a
free, transitive action of the semigroup N^d on configurations, inverted at
the all-zero configuration by `decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator


class InternalInvariantError(RuntimeError):
    """A bound that only an implementation bug can violate was exceeded."""


@total_ordering
@dataclass(frozen=True)
class Slot:
    """A cylinder point: a seat (at least 1) at a nonnegative level.

    Ordered by (level, seat), which realizes the height order.
    """

    seat: int
    level: int

    def __post_init__(self) -> None:
        if self.seat < 1:
            raise ValueError(f"seat must be at least 1, got {self.seat}")
        if self.level < 0:
            raise ValueError(f"level must be nonnegative, got {self.level}")

    def __lt__(self, other: "Slot") -> bool:
        return (self.level, self.seat) < (other.level, other.seat)


def slot_index(slot: Slot, d: int) -> int:
    """0-based position of `slot` along the spiral of width d.

    Strictly order preserving.  This and `slot_from_index` are the only
    places where seats/levels and linear positions are interconverted.
    """
    if d < 1:
        raise ValueError("width d must be positive")
    if slot.seat > d:
        raise ValueError(f"seat {slot.seat} exceeds width {d}")
    return slot.level * d + slot.seat - 1


def slot_from_index(index: int, d: int) -> Slot:
    if d < 1:
        raise ValueError("width d must be positive")
    if index < 0:
        raise ValueError("index must be nonnegative")
    level, offset = divmod(index, d)
    return Slot(offset + 1, level)


def shift_slot(slot: Slot, steps: int, d: int) -> Slot:
    """Move `steps` positions up the spiral; seat d wraps to seat 1, one level up."""
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    return slot_from_index(slot_index(slot, d) + steps, d)


@dataclass(frozen=True)
class Config:
    """A point of N^d: seat i holds a cylinder point at level `levels[i-1]`."""

    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(self.levels))
        if not self.levels:
            raise ValueError("a configuration needs at least one seat")
        if any(n < 0 for n in self.levels):
            raise ValueError(f"levels must be nonnegative, got {self.levels}")

    @property
    def d(self) -> int:
        return len(self.levels)

    @classmethod
    def origin(cls, d: int) -> "Config":
        if d < 1:
            raise ValueError("width d must be positive")
        return cls((0,) * d)

    def slots(self) -> tuple[Slot, ...]:
        return tuple(Slot(i, n) for i, n in enumerate(self.levels, start=1))


def sorted_slots(x: Config) -> tuple[Slot, ...]:
    """The points of x from lowest to highest; strict because seats differ."""
    return tuple(sorted(x.slots()))


@dataclass(frozen=True)
class MultiIndex:
    """Operator exponents (a_1, ..., a_d): apply the rank-j operator a_j times."""

    steps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise ValueError("a multi-index needs at least one component")
        if any(s < 0 for s in self.steps):
            raise ValueError(f"steps must be nonnegative, got {self.steps}")

    @property
    def d(self) -> int:
        return len(self.steps)

    @property
    def total(self) -> int:
        return sum(self.steps)

    @classmethod
    def zero(cls, d: int) -> "MultiIndex":
        return cls((0,) * d)

    @classmethod
    def unit(cls, j: int, d: int) -> "MultiIndex":
        if not 1 <= j <= d:
            raise ValueError(f"component must lie in [1, {d}], got {j}")
        return cls(tuple(1 if k == j else 0 for k in range(1, d + 1)))

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        return MultiIndex(tuple(a + b for a, b in zip(self.steps, other.steps)))


def shift_all(x: Config) -> Config:
    """Move every point one spiral step up; closed form (n_d + 1, n_1, ..., n_{d-1})."""
    return Config((x.levels[-1] + 1,) + x.levels[:-1])


def shift_from(x: Config, j: int) -> Config:
    """The rank-j spiral shifting operator.

    The j-1 lowest points stay put; every other point moves up the spiral to
    the next seat occupied by the moving group.  Exactly one mover (the one
    on the group's highest seat) gains a level, so the total level rises by
    one.  Rank 1 moves everything and coincides with `shift_all`.
    """
    d = x.d
    if not 1 <= j <= d:
        raise ValueError(f"operator rank must lie in [1, {d}], got {j}")
    moving = sorted_slots(x)[j - 1 :]
    seats = frozenset(s.seat for s in moving)
    levels = list(x.levels)
    for s in moving:
        target = shift_slot(s, 1, d)
        while target.seat not in seats:
            target = shift_slot(target, 1, d)
        levels[target.seat - 1] = target.level
    return Config(tuple(levels))


def act(a: MultiIndex, x: Config) -> Config:
    """Apply the rank-j operator a_j times, for every j.

    The operators commute, so the application order is immaterial; ranks are
    applied from d down to 1.
    """
    if a.d != x.d:
        raise ValueError(f"dimension mismatch: index has {a.d} components, configuration {x.d}")
    out = x
    for j in range(x.d, 0, -1):
        for _ in range(a.steps[j - 1]):
            out = shift_from(out, j)
    return out


def decompose(x: Config) -> MultiIndex:
    """The unique exponents a with act(a, origin) == x.

    Recovered rank by rank: only the rank-1 operator moves the lowest point,
    which forces a_1; once a_1..a_{r-1} are applied, only the rank-r
    operator moves the r-th lowest point, so a_r is the number of
    applications that land it on the r-th lowest point of x.  Each inner
    search is bounded by the spiral position of its target; exceeding the
    bound is an implementation defect, not bad input.
    """
    d = x.d
    target = sorted_slots(x)
    cur = Config.origin(d)
    steps = []
    for r in range(1, d + 1):
        goal = target[r - 1]
        bound = slot_index(goal, d)
        count = 0
        while sorted_slots(cur)[r - 1] != goal:
            cur = shift_from(cur, r)
            count += 1
            if count > bound:
                raise InternalInvariantError(
                    f"matching the rank-{r} point of {x.levels} took more than {bound} steps"
                )
        steps.append(count)
    return MultiIndex(tuple(steps))


def is_tight(x: Config, r: int) -> bool:
    """Whether the rank-r point sits as low as the seats above it allow.

    True iff, among cylinder points whose seat belongs to the top d-r+1
    points of x, the rank-r point of x is the least one strictly higher than
    the rank-(r-1) point.  Preserved by every operator of rank below r.
    """
    if not 2 <= r <= x.d:
        raise ValueError(f"rank must lie in [2, {x.d}], got {r}")
    ranked = sorted_slots(x)
    below = ranked[r - 2]
    lowest_above = min(
        Slot(s.seat, below.level if s.seat > below.seat else below.level + 1)
        for s in ranked[r - 1 :]
    )
    return lowest_above == ranked[r - 1]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts < 1:
        raise ValueError("parts must be positive")
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head,) + rest


def configs_with_size(d: int, n: int) -> Iterator[Config]:
    """Every width-d configuration whose levels sum to n."""
    for levels in compositions(n, d):
        yield Config(levels)
