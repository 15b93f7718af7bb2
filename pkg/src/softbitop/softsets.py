"""Soft sets over a finite parameter range and their soft-element view.

A soft set is a finite tuple of sections (one FinSet per parameter) over
one shared universe.  Its soft elements are the selections picking one
member from every section; they are materialized eagerly in lexicographic
order so subsets of them can be handled as bitmasks over stable indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, InputError, NoSoftElementsError
from .finsets import FinSet

# Eager materialization guard for the soft-element list.
SE_MATERIALIZATION_LIMIT = 1 << 20

SoftElement = tuple[int, ...]


@dataclass(frozen=True)
class SoftSet:
    """A parameter-indexed family of sections over a common universe."""

    sections: tuple[FinSet, ...]

    def __post_init__(self) -> None:
        if not self.sections:
            raise InputError("a soft set needs at least one parameter")
        n = self.sections[0].universe_size
        if any(s.universe_size != n for s in self.sections):
            raise InputError("sections must share a universe size")

    @classmethod
    def of(
        cls, section_members: Sequence[Iterable[int]], universe_size: int
    ) -> "SoftSet":
        return cls(tuple(FinSet.of(ms, universe_size) for ms in section_members))

    @classmethod
    def null(cls, param_count: int, universe_size: int) -> "SoftSet":
        return cls(tuple(FinSet.empty(universe_size) for _ in range(param_count)))

    @property
    def param_count(self) -> int:
        return len(self.sections)

    @property
    def universe_size(self) -> int:
        return self.sections[0].universe_size

    def section(self, t: int) -> FinSet:
        if not 0 <= t < self.param_count:
            raise InputError(f"parameter index {t} out of range")
        return self.sections[t]

    @property
    def key(self) -> tuple[int, ...]:
        """Canonical sort/equality key: the tuple of section masks."""
        return tuple(s.mask for s in self.sections)

    @property
    def is_null(self) -> bool:
        return all(s.is_empty for s in self.sections)


def _check_shapes(a: SoftSet, b: SoftSet) -> None:
    if a.param_count != b.param_count or a.universe_size != b.universe_size:
        raise InputError("soft sets must share parameter count and universe size")


def soft_subset(h: SoftSet, f: SoftSet) -> bool:
    _check_shapes(h, f)
    return all(hs.mask & ~fs.mask == 0 for hs, fs in zip(h.sections, f.sections))


def soft_union(f: SoftSet, h: SoftSet) -> SoftSet:
    _check_shapes(f, h)
    return SoftSet(tuple(a | b for a, b in zip(f.sections, h.sections)))


def soft_intersection(f: SoftSet, h: SoftSet) -> SoftSet:
    _check_shapes(f, h)
    return SoftSet(tuple(a & b for a, b in zip(f.sections, h.sections)))


def soft_equal(f: SoftSet, h: SoftSet) -> bool:
    _check_shapes(f, h)
    return f.key == h.key


class ElementSpace:
    """The enumerated soft elements of a soft set with nonempty sections.

    Elements are ordered lexicographically, parameter index major.  All
    subset work downstream indexes into this fixed order.
    """

    def __init__(self, soft_set: SoftSet):
        factor_members = [s.members() for s in soft_set.sections]
        if any(not ms for ms in factor_members):
            raise NoSoftElementsError(
                "a soft set with an empty section has no soft elements"
            )
        count = prod(len(ms) for ms in factor_members)
        if count > SE_MATERIALIZATION_LIMIT:
            raise CapacityError(
                f"soft-element count {count} exceeds {SE_MATERIALIZATION_LIMIT}"
            )
        self.soft_set = soft_set
        self.elements: tuple[SoftElement, ...] = tuple(product(*factor_members))
        self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def size(self) -> int:
        return len(self.elements)

    def index_of(self, elem: SoftElement) -> int:
        try:
            return self._index[tuple(elem)]
        except KeyError:
            raise InputError(f"{elem!r} is not a soft element of this space") from None

    def subset_of(self, elems: Iterable[SoftElement]) -> "SESubset":
        mask = 0
        for e in elems:
            mask |= 1 << self.index_of(e)
        return SESubset(self, mask)

    def full_subset(self) -> "SESubset":
        return SESubset(self, (1 << self.size) - 1)

    def empty_subset(self) -> "SESubset":
        return SESubset(self, 0)


def enumerate_soft_elements(f: SoftSet) -> tuple[SoftElement, ...]:
    """The soft elements of f in lexicographic order."""
    return ElementSpace(f).elements


@dataclass(frozen=True, eq=False)
class SESubset:
    """A subset of an enumerated soft-element list, as a bitmask."""

    space: ElementSpace
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.space.size:
            raise InputError("bitmask has bits beyond the soft-element list")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SESubset)
            and self.space.soft_set == other.space.soft_set
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.space.soft_set, self.mask))

    def members(self) -> tuple[SoftElement, ...]:
        return tuple(
            e for i, e in enumerate(self.space.elements) if self.mask >> i & 1
        )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, elem: SoftElement) -> bool:
        return bool(self.mask >> self.space.index_of(elem) & 1)

    def __or__(self, other: "SESubset") -> "SESubset":
        self._check_same_space(other)
        return SESubset(self.space, self.mask | other.mask)

    def __and__(self, other: "SESubset") -> "SESubset":
        self._check_same_space(other)
        return SESubset(self.space, self.mask & other.mask)

    def section(self, t: int) -> FinSet:
        """The set of t-th coordinates of the members."""
        if not 0 <= t < self.space.soft_set.param_count:
            raise InputError(f"parameter index {t} out of range")
        m = 0
        for i, e in enumerate(self.space.elements):
            if self.mask >> i & 1:
                m |= 1 << e[t]
        return FinSet(self.space.soft_set.universe_size, m)

    def sections(self) -> SoftSet:
        return SoftSet(
            tuple(self.section(t) for t in range(self.space.soft_set.param_count))
        )

    def _check_same_space(self, other: "SESubset") -> None:
        if self.space.soft_set != other.space.soft_set:
            raise InputError("subsets live over different soft sets")


def se_of_softset(space: ElementSpace, h: SoftSet) -> SESubset:
    """All soft elements of the ambient whose every coordinate lies in h.

    Empty whenever some section of h is empty.
    """
    if not soft_subset(h, space.soft_set):
        raise InputError("h must be a soft subset of the ambient soft set")
    mask = 0
    for i, e in enumerate(space.elements):
        if all(x in s for x, s in zip(e, h.sections)):
            mask |= 1 << i
    return SESubset(space, mask)


def is_se_representable(k: SESubset) -> tuple[bool, Optional[SoftElement]]:
    """Is k the full soft-element set of some soft subset of the ambient?

    The sectionwise hull H(t) := k(t) is the only candidate; k is
    representable iff its hull adds no new selections.  On failure the
    lexicographically least extra selection is the witness.
    """
    if k.mask == 0:
        raise InputError(
            "the empty subset is not representable by nonempty sections"
        )
    hull = k.sections()
    blown_up = se_of_softset(k.space, hull)
    extra = blown_up.mask & ~k.mask
    if extra == 0:
        return True, None
    least = (extra & -extra).bit_length() - 1
    return False, k.space.elements[least]
