"""Soft topologies, their component and canonical forms, and the topology
they induce on the enumerated soft elements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterable, Optional, Sequence

from .errors import CapacityError, InputError
from .finsets import ClassicalTopology, FinSet, generate_topology, is_topology
from .softsets import (
    ElementSpace,
    SESubset,
    SoftSet,
    soft_intersection,
    soft_subset,
    soft_union,
)

# Sectionwise product guard for canonical topologies.
CANONICAL_PRODUCT_LIMIT = 1 << 20
# The induced topology filters all 2^|SE(F)| subsets.
SE_FILTRATION_LIMIT = 20


def is_soft_topology(opens: Iterable[SoftSet], ambient: SoftSet) -> bool:
    """Null and ambient present, closed under binary soft union and
    intersection (exact for finite families)."""
    opens = list(opens)
    for h in opens:
        if not soft_subset(h, ambient):
            raise InputError("every member must be a soft subset of the ambient")
    keys = {h.key for h in opens}
    null_key = SoftSet.null(ambient.param_count, ambient.universe_size).key
    if null_key not in keys or ambient.key not in keys:
        return False
    for a in opens:
        for b in opens:
            if soft_union(a, b).key not in keys:
                return False
            if soft_intersection(a, b).key not in keys:
                return False
    return True


@dataclass(frozen=True)
class SoftTopology:
    """A validated soft topology; opens deduplicated and sorted by key."""

    ambient: SoftSet
    opens: tuple[SoftSet, ...]

    @classmethod
    def build(cls, opens: Iterable[SoftSet], ambient: SoftSet) -> "SoftTopology":
        opens = list(opens)
        if not is_soft_topology(opens, ambient):
            raise InputError("family is not a soft topology on the ambient")
        return cls(ambient, _canonical_family(opens))

    @cached_property
    def _keys(self) -> frozenset[tuple[int, ...]]:
        return frozenset(h.key for h in self.opens)

    def contains(self, h: SoftSet) -> bool:
        return h.key in self._keys

    def __len__(self) -> int:
        return len(self.opens)


def _canonical_family(opens: Iterable[SoftSet]) -> tuple[SoftSet, ...]:
    by_key = {h.key: h for h in opens}
    return tuple(by_key[k] for k in sorted(by_key))


def component_topology(tau: SoftTopology, t: int) -> ClassicalTopology:
    """The family of t-sections of the soft opens: a topology on F(t)."""
    carrier = tau.ambient.section(t)
    n = tau.ambient.universe_size
    sections = {h.section(t).mask for h in tau.opens}
    topo = ClassicalTopology(n, carrier, tuple(FinSet(n, m) for m in sorted(sections)))
    # Sectioning a soft topology always yields a topology; anything else
    # is a bug upstream.
    assert is_topology(topo.opens, n, carrier)
    return topo


def canonical_topology(
    ambient: SoftSet, sigmas: Sequence[ClassicalTopology]
) -> SoftTopology:
    """All soft subsets whose t-section is open in sigmas[t], for every t."""
    if len(sigmas) != ambient.param_count:
        raise InputError("need one topology per parameter")
    for t, sigma in enumerate(sigmas):
        if sigma.universe_size != ambient.universe_size:
            raise InputError("component topology universe mismatch")
        if sigma.carrier != ambient.section(t):
            raise InputError(f"component topology at {t} must live on the section")
    count = prod(len(s.opens) for s in sigmas)
    if count > CANONICAL_PRODUCT_LIMIT:
        raise CapacityError(
            f"canonical topology would have {count} opens; guard is "
            f"{CANONICAL_PRODUCT_LIMIT}"
        )
    opens = [SoftSet(choice) for choice in product(*(s.opens for s in sigmas))]
    return SoftTopology(ambient, _canonical_family(opens))


def canonical_enlargement(tau: SoftTopology) -> SoftTopology:
    """The canonical topology built from tau's own component topologies."""
    sigmas = [component_topology(tau, t) for t in range(tau.ambient.param_count)]
    return canonical_topology(tau.ambient, sigmas)


def is_canonical(tau: SoftTopology) -> bool:
    return tau.opens == canonical_enlargement(tau).opens


@dataclass(eq=False)
class SEFamily:
    """A finite family of soft-element subsets, masks sorted ascending."""

    space: ElementSpace
    masks: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SEFamily)
            and self.space.soft_set == other.space.soft_set
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.space.soft_set, self.masks))

    def subsets(self) -> tuple[SESubset, ...]:
        return tuple(SESubset(self.space, m) for m in self.masks)

    def contains_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    @cached_property
    def _mask_set(self) -> frozenset[int]:
        return frozenset(self.masks)

    def as_classical(self) -> ClassicalTopology:
        """View over soft-element indices as a plain finite topology."""
        n = self.space.size
        return ClassicalTopology(
            n, FinSet.full(n), tuple(FinSet(n, m) for m in self.masks)
        )

    def __len__(self) -> int:
        return len(self.masks)


def induced_topology(
    tau: SoftTopology, space: Optional[ElementSpace] = None
) -> SEFamily:
    """The family of soft-element subsets whose every section is open in
    the matching component topology.

    Computed by exhaustive filtration of all subsets, which is exact: the
    family is defined by a sectionwise membership predicate, not by a
    generating family.  It contains the empty and full subsets and is
    closed under unions, but it is NOT closed under intersections in
    general: sections of an intersection can be strictly smaller than the
    intersections of sections.
    """
    if space is None:
        space = ElementSpace(tau.ambient)
    elif space.soft_set != tau.ambient:
        raise InputError("element space does not match the topology's ambient")
    n = space.size
    if n > SE_FILTRATION_LIMIT:
        raise CapacityError(
            f"soft-element count {n} exceeds filtration guard {SE_FILTRATION_LIMIT}"
        )
    p = space.soft_set.param_count
    comp = [set(component_topology(tau, t).open_masks) for t in range(p)]
    # coordinate bit contributed by element i at parameter t
    coord = [[1 << e[t] for e in space.elements] for t in range(p)]
    masks = []
    for m in range(1 << n):
        ok = True
        for t in range(p):
            sec = 0
            mm = m
            ct = coord[t]
            while mm:
                i = (mm & -mm).bit_length() - 1
                sec |= ct[i]
                mm &= mm - 1
            if sec not in comp[t]:
                ok = False
                break
        if ok:
            masks.append(m)
    return SEFamily(space, tuple(masks))


def check_finest_open_projections(tau: SoftTopology, candidate: SEFamily) -> bool:
    """True iff every member of the candidate family has all its sections
    component-open, i.e. every coordinate projection maps it to an open set.

    Any such family is contained in the induced one, which is therefore
    the finest family with open projections.  The candidate is not
    required to satisfy the topology axioms: the induced family itself is
    not intersection-closed in general (sections of an intersection can
    be strictly smaller than intersections of sections), so demanding
    them would reject the most important candidate.
    """
    p = tau.ambient.param_count
    comp = [set(component_topology(tau, t).open_masks) for t in range(p)]
    for sub in candidate.subsets():
        for t in range(p):
            if sub.section(t).mask not in comp[t]:
                return False
    return True


@dataclass(frozen=True)
class Reconstruction:
    """Outcome of rebuilding a canonical soft topology from a topology on
    the soft elements."""

    sigmas: tuple[ClassicalTopology, ...]
    soft_topology: SoftTopology
    contained: bool


def reconstruct(u: SEFamily) -> Reconstruction:
    """Generate per-parameter topologies from the sections of u, build the
    canonical soft topology on top, and certify that u is contained in the
    family it induces back on the soft elements.

    The containment argument only needs u's sections, so u may be any
    family of subsets, topology or not.
    """
    space = u.space
    if space.size == 0:
        raise InputError("the soft-element list must be nonempty")
    ambient = space.soft_set
    n = ambient.universe_size
    sigmas = []
    for t in range(ambient.param_count):
        subbase = [sub.section(t) for sub in u.subsets()]
        sigmas.append(generate_topology(subbase, n, carrier=ambient.section(t)))
    tau_hat = canonical_topology(ambient, sigmas)
    induced = induced_topology(tau_hat, space)
    contained = all(induced.contains_mask(m) for m in u.masks)
    assert contained, "reconstruction must contain its input family"
    return Reconstruction(tuple(sigmas), tau_hat, contained)
