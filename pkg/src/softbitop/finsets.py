"""Bitmask-backed finite sets, finite topologies, and pairwise separation checks.

Everything here is classical (point-set) machinery on small enumerated
carriers.  A topology may live on a proper subset of the ambient universe
(its *carrier*), which is what component topologies of soft topologies
require; the plain case is carrier == full universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, InputError, NotACoverError

# Labeled-topology enumeration is capped here (355 topologies on 4 points).
ENUMERATION_MAX_POINTS = 4


def _full(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class FinSet:
    """A subset of {0, ..., universe_size-1} stored as a bitmask."""

    universe_size: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.universe_size < 1:
            raise InputError("universe_size must be positive")
        if self.mask < 0 or self.mask > _full(self.universe_size):
            raise InputError("bitmask has bits outside the universe")

    @classmethod
    def of(cls, members: Iterable[int], universe_size: int) -> "FinSet":
        mask = 0
        for x in members:
            if not 0 <= x < universe_size:
                raise InputError(
                    f"element {x} outside universe of size {universe_size}"
                )
            mask |= 1 << x
        return cls(universe_size, mask)

    @classmethod
    def empty(cls, universe_size: int) -> "FinSet":
        return cls(universe_size, 0)

    @classmethod
    def full(cls, universe_size: int) -> "FinSet":
        return cls(universe_size, _full(universe_size))

    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.universe_size) if self.mask >> i & 1)

    def issubset(self, other: "FinSet") -> bool:
        self._check_same_universe(other)
        return self.mask & ~other.mask == 0

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.universe_size and bool(self.mask >> x & 1)

    def __or__(self, other: "FinSet") -> "FinSet":
        self._check_same_universe(other)
        return FinSet(self.universe_size, self.mask | other.mask)

    def __and__(self, other: "FinSet") -> "FinSet":
        self._check_same_universe(other)
        return FinSet(self.universe_size, self.mask & other.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    def _check_same_universe(self, other: "FinSet") -> None:
        if self.universe_size != other.universe_size:
            raise InputError("mismatched universe sizes")


def _collect_masks(opens: Iterable[FinSet], n: int) -> list[int]:
    masks = []
    for s in opens:
        if s.universe_size != n:
            raise InputError("mismatched universe sizes in family")
        masks.append(s.mask)
    return masks


def is_topology(
    opens: Iterable[FinSet], n: int, carrier: Optional[FinSet] = None
) -> bool:
    """Check the (finite) topology axioms: empty and carrier present, closed
    under binary union and binary intersection.

    Binary closure is exact for finite families since arbitrary unions
    reduce to iterated binary ones.
    """
    if carrier is None:
        carrier = FinSet.full(n)
    elif carrier.universe_size != n:
        raise InputError("carrier universe size mismatch")
    masks = set(_collect_masks(opens, n))
    if any(m & ~carrier.mask for m in masks):
        return False
    if 0 not in masks or carrier.mask not in masks:
        return False
    for a in masks:
        for b in masks:
            if (a | b) not in masks or (a & b) not in masks:
                return False
    return True


@dataclass(frozen=True)
class ClassicalTopology:
    """A finite topology on a carrier set, opens deduplicated and sorted."""

    universe_size: int
    carrier: FinSet
    opens: tuple[FinSet, ...]

    def __post_init__(self) -> None:
        if self.carrier.universe_size != self.universe_size:
            raise InputError("carrier universe size mismatch")

    @classmethod
    def build(
        cls,
        opens: Iterable[FinSet],
        n: int,
        carrier: Optional[FinSet] = None,
    ) -> "ClassicalTopology":
        """Validate the axioms and canonicalize the family."""
        if carrier is None:
            carrier = FinSet.full(n)
        opens = list(opens)
        if not is_topology(opens, n, carrier):
            raise InputError("family is not a topology on the carrier")
        return cls(n, carrier, _canonical_opens(opens, n))

    def contains(self, s: FinSet) -> bool:
        if s.universe_size != self.universe_size:
            raise InputError("mismatched universe sizes")
        return any(o.mask == s.mask for o in self.opens)

    @property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(o.mask for o in self.opens)


def _canonical_opens(opens: Iterable[FinSet], n: int) -> tuple[FinSet, ...]:
    masks = sorted(set(_collect_masks(opens, n)))
    return tuple(FinSet(n, m) for m in masks)


def generate_topology(
    subbase: Iterable[FinSet], n: int, carrier: Optional[FinSet] = None
) -> ClassicalTopology:
    """Smallest topology on the carrier containing the subbase.

    The empty intersection contributes the carrier itself; closure under
    binary unions and intersections is then iterated to a fixed point.
    """
    if carrier is None:
        carrier = FinSet.full(n)
    masks = set(_collect_masks(subbase, n))
    if any(m & ~carrier.mask for m in masks):
        raise InputError("subbase member not contained in the carrier")
    masks |= {0, carrier.mask}
    while True:
        new = set()
        for a in masks:
            for b in masks:
                u, i = a | b, a & b
                if u not in masks:
                    new.add(u)
                if i not in masks:
                    new.add(i)
        if not new:
            break
        masks |= new
    return ClassicalTopology(n, carrier, tuple(FinSet(n, m) for m in sorted(masks)))


def enumerate_topologies(
    n: int, carrier: Optional[FinSet] = None
) -> list[ClassicalTopology]:
    """All labeled topologies on the carrier, in a fixed deterministic order.

    Brute force: every family of proper nonempty subsets is filtered
    through the closure axioms.  Guarded at 4 carrier points.
    """
    if carrier is None:
        carrier = FinSet.full(n)
    elif carrier.universe_size != n:
        raise InputError("carrier universe size mismatch")
    k = len(carrier)
    if k > ENUMERATION_MAX_POINTS:
        raise CapacityError(
            f"topology enumeration capped at {ENUMERATION_MAX_POINTS} points"
        )
    # Proper nonempty subsets of the carrier, ascending by mask.
    middles = [
        m
        for m in range(1, carrier.mask + 1)
        if m & ~carrier.mask == 0 and m != carrier.mask
    ]
    found = []
    for choice in range(1 << len(middles)):
        masks = {0, carrier.mask}
        masks.update(m for i, m in enumerate(middles) if choice >> i & 1)
        if _closed_masks(masks):
            found.append(
                ClassicalTopology(n, carrier, tuple(FinSet(n, m) for m in sorted(masks)))
            )
    return found


def _closed_masks(masks: set[int]) -> bool:
    for a in masks:
        for b in masks:
            if (a | b) not in masks or (a & b) not in masks:
                return False
    return True


@dataclass(frozen=True)
class BitopPair:
    """An ordered pair of topologies on one shared carrier."""

    first: ClassicalTopology
    second: ClassicalTopology

    def __post_init__(self) -> None:
        if self.first.universe_size != self.second.universe_size:
            raise InputError("topologies of a pair must share a universe")
        if self.first.carrier != self.second.carrier:
            raise InputError("topologies of a pair must share a carrier")

    @property
    def universe_size(self) -> int:
        return self.first.universe_size

    @property
    def carrier(self) -> FinSet:
        return self.first.carrier


Witness = Optional[tuple[int, int]]


def pairwise_t0(pair: BitopPair) -> tuple[bool, Witness]:
    """Distinct points are told apart by some open of either topology.

    On failure the least unseparated pair (x, y), x < y, is returned.
    """
    pts = pair.carrier.members()
    masks = sorted(set(pair.first.open_masks) | set(pair.second.open_masks))
    for i, x in enumerate(pts):
        for y in pts[i + 1 :]:
            if not any((m >> x & 1) != (m >> y & 1) for m in masks):
                return False, (x, y)
    return True, None


def pairwise_t1(pair: BitopPair) -> tuple[bool, Witness]:
    """For every ordered (x, y): some first-open keeps x and drops y, and
    some second-open keeps y and drops x."""
    pts = pair.carrier.members()
    fm, sm = pair.first.open_masks, pair.second.open_masks
    for x in pts:
        for y in pts:
            if x == y:
                continue
            ok1 = any(m >> x & 1 and not m >> y & 1 for m in fm)
            ok2 = any(m >> y & 1 and not m >> x & 1 for m in sm)
            if not (ok1 and ok2):
                return False, (x, y)
    return True, None


def pairwise_t2(pair: BitopPair) -> tuple[bool, Witness]:
    """For every ordered (x, y): disjoint opens H in the first and K in the
    second topology with x in H, y in K."""
    pts = pair.carrier.members()
    fm, sm = pair.first.open_masks, pair.second.open_masks
    for x in pts:
        for y in pts:
            if x == y:
                continue
            if not any(
                h >> x & 1 and k >> y & 1 and h & k == 0 for h in fm for k in sm
            ):
                return False, (x, y)
    return True, None


def minimal_subcover_indices(
    cover: Sequence[FinSet], target: FinSet
) -> tuple[int, ...]:
    """Indices of a minimum-cardinality subfamily whose union covers target;
    ties go to the lexicographically least index set."""
    union = 0
    for s in cover:
        if s.universe_size != target.universe_size:
            raise InputError("mismatched universe sizes in cover")
        union |= s.mask
    if target.mask & ~union:
        raise NotACoverError("cover does not cover the target")
    for k in range(len(cover) + 1):
        for combo in combinations(range(len(cover)), k):
            if target.mask & ~_union_of(cover, combo) == 0:
                return combo
    raise AssertionError("unreachable: full cover always works")


def _union_of(cover: Sequence[FinSet], indices: Iterable[int]) -> int:
    u = 0
    for i in indices:
        u |= cover[i].mask
    return u


def minimal_subcover(cover: Sequence[FinSet], target: FinSet) -> tuple[FinSet, ...]:
    """Same as minimal_subcover_indices, returning the sets themselves."""
    return tuple(cover[i] for i in minimal_subcover_indices(cover, target))
