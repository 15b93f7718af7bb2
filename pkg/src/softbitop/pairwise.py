"""Soft bitopological spaces: pairwise separation deciders, covers and
finite subcovers, cylinder transport, a theorem-verification harness, and
an exhaustive counterexample search on small carriers."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from typing import Optional, Sequence

from .errors import CapacityError, InputError, NotACoverError
from .finsets import (
    BitopPair,
    FinSet,
    enumerate_topologies,
    pairwise_t0,
    pairwise_t1,
    pairwise_t2,
)
from .softsets import ElementSpace, SoftElement, SoftSet, soft_subset, soft_union
from .softtop import (
    SEFamily,
    SoftTopology,
    canonical_enlargement,
    canonical_topology,
    check_finest_open_projections,
    component_topology,
    induced_topology,
    is_canonical,
)

SEARCH_MAX_UNIVERSE = 3
SEARCH_MAX_PARAMS = 2

PROVENANCES = ("tau1", "tau2", "both")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision, with a witness when the universal claim
    fails (or, for existential ones, when it succeeds)."""

    holds: bool
    witness: object = None
    detail: str = ""


@dataclass(frozen=True)
class SoftBitopSpace:
    """A soft set carrying an ordered pair of soft topologies."""

    soft_set: SoftSet
    tau1: SoftTopology
    tau2: SoftTopology

    def __post_init__(self) -> None:
        if self.tau1.ambient != self.soft_set or self.tau2.ambient != self.soft_set:
            raise InputError("both topologies must live on the given soft set")
        if any(s.is_empty for s in self.soft_set.sections):
            raise InputError("all sections of the carrier must be nonempty")

    @cached_property
    def space(self) -> ElementSpace:
        return ElementSpace(self.soft_set)

    @cached_property
    def union_opens(self) -> tuple[SoftSet, ...]:
        by_key = {h.key: h for h in self.tau1.opens + self.tau2.opens}
        return tuple(by_key[k] for k in sorted(by_key))


def elem_in_soft(a: SoftElement, h: SoftSet) -> bool:
    """Sectionwise membership: a(t) in h(t) for every t."""
    return all(x in s for x, s in zip(a, h.sections))


def pairwise_soft_t0(space: SoftBitopSpace) -> Verdict:
    """Some open of either topology contains exactly one of any two
    distinct soft elements."""
    elems = space.space.elements
    opens = space.union_opens
    for i, a in enumerate(elems):
        for b in elems[i + 1 :]:
            if not any(elem_in_soft(a, h) != elem_in_soft(b, h) for h in opens):
                return Verdict(False, (a, b), "least unseparated pair")
    return Verdict(True)


def pairwise_soft_t1(space: SoftBitopSpace, ordered: bool = True) -> Verdict:
    """Each ordered pair (a, b) is split by an open of the first topology
    around a and one of the second around b.

    ordered=False weakens the quantifier to "some order of the pair
    works" (an experimental variant, not used by the theorem harness).
    """
    elems = space.space.elements

    def split(a: SoftElement, b: SoftElement) -> bool:
        ok1 = any(
            elem_in_soft(a, h) and not elem_in_soft(b, h) for h in space.tau1.opens
        )
        ok2 = any(
            elem_in_soft(b, k) and not elem_in_soft(a, k) for k in space.tau2.opens
        )
        return ok1 and ok2

    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i == j or (not ordered and j < i):
                continue
            if not (split(a, b) or (not ordered and split(b, a))):
                return Verdict(False, (a, b), "least unseparated ordered pair")
    return Verdict(True)


def pairwise_soft_t2(space: SoftBitopSpace, ordered: bool = True) -> Verdict:
    """Each ordered pair (a, b) sits inside soft-disjoint opens drawn from
    the two topologies in their fixed roles.

    Soft disjointness means every section of the intersection is empty.
    """
    elems = space.space.elements

    def separate(a: SoftElement, b: SoftElement) -> bool:
        for h in space.tau1.opens:
            if not elem_in_soft(a, h):
                continue
            for k in space.tau2.opens:
                if not elem_in_soft(b, k):
                    continue
                if all((hs & ks).is_empty for hs, ks in zip(h.sections, k.sections)):
                    return True
        return False

    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i == j or (not ordered and j < i):
                continue
            if not (separate(a, b) or (not ordered and separate(b, a))):
                return Verdict(False, (a, b), "least unseparated ordered pair")
    return Verdict(True)


def component_bitop(space: SoftBitopSpace, t: int) -> BitopPair:
    return BitopPair(
        component_topology(space.tau1, t), component_topology(space.tau2, t)
    )


def induced_bitop(space: SoftBitopSpace) -> BitopPair:
    """The pair of induced topologies, viewed over soft-element indices."""
    first = induced_topology(space.tau1, space.space).as_classical()
    second = induced_topology(space.tau2, space.space).as_classical()
    return BitopPair(first, second)


@dataclass(frozen=True)
class SoftCover:
    """A tagged family of soft opens meant to cover a target soft subset."""

    space: SoftBitopSpace
    target: SoftSet
    members: tuple[tuple[SoftSet, str], ...]

    def __post_init__(self) -> None:
        if not soft_subset(self.target, self.space.soft_set):
            raise InputError("target must be a soft subset of the carrier")
        for _, prov in self.members:
            if prov not in PROVENANCES:
                raise InputError(f"unknown provenance tag {prov!r}")


def _member_is_open(space: SoftBitopSpace, member: SoftSet, prov: str) -> bool:
    in1 = space.tau1.contains(member)
    in2 = space.tau2.contains(member)
    if prov == "tau1":
        return in1
    if prov == "tau2":
        return in2
    return in1 and in2


def is_pairwise_soft_cover(cover: SoftCover) -> Verdict:
    """Members are open where tagged and their sectionwise union contains
    the target sectionwise."""
    for idx, (member, prov) in enumerate(cover.members):
        if not _member_is_open(cover.space, member, prov):
            return Verdict(False, idx, f"member {idx} is not open in {prov}")
    f = cover.space.soft_set
    for t in range(f.param_count):
        union = 0
        for member, _ in cover.members:
            union |= member.section(t).mask
        missing = cover.target.section(t).mask & ~union
        if missing:
            point = (missing & -missing).bit_length() - 1
            return Verdict(False, (t, point), "uncovered point at parameter")
    return Verdict(True)


def find_finite_subcover(cover: SoftCover) -> tuple[tuple[SoftSet, str], ...]:
    """A minimum-cardinality subfamily still covering the target,
    lexicographically least index set on ties.

    Always succeeds on a finite parameter set: per-parameter finite
    subcovers exist and their union bounds the search.
    """
    verdict = is_pairwise_soft_cover(cover)
    if not verdict.holds:
        raise NotACoverError(f"not a pairwise soft cover: {verdict.detail}")
    members = cover.members
    target = cover.target
    p = target.param_count
    section_masks = [[m.section(t).mask for m, _ in members] for t in range(p)]
    target_masks = [target.section(t).mask for t in range(p)]

    def covers(indices: Sequence[int]) -> bool:
        for t in range(p):
            u = 0
            for i in indices:
                u |= section_masks[t][i]
            if target_masks[t] & ~u:
                return False
        return True

    for k in range(len(members) + 1):
        for combo in combinations(range(len(members)), k):
            if covers(combo):
                return tuple(members[i] for i in combo)
    raise AssertionError("unreachable: the full family covers")


@dataclass(frozen=True)
class Cylinder:
    """A cylinder soft set plus whether it is open in the tagged topology."""

    soft_set: SoftSet
    open_in_tagged: bool


def cylinder(
    space: SoftBitopSpace, t0: int, v: FinSet, provenance: str
) -> Cylinder:
    """The soft set equal to v at t0 and to the full section elsewhere.

    v must be open in the tagged side's component topology at t0.  When
    the tagged topology is canonical the cylinder is guaranteed (and
    asserted) to be one of its opens; otherwise membership is reported.
    """
    if provenance not in ("tau1", "tau2"):
        raise InputError("provenance must be 'tau1' or 'tau2'")
    tau = space.tau1 if provenance == "tau1" else space.tau2
    comp = component_topology(tau, t0)
    if not comp.contains(v):
        raise InputError("cylinder base is not open in the component topology")
    sections = list(space.soft_set.sections)
    sections[t0] = v
    cyl = SoftSet(tuple(sections))
    member = tau.contains(cyl)
    if is_canonical(tau):
        assert member, "cylinders over a canonical topology are open"
    return Cylinder(cyl, member)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    applicable: bool
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class TheoremReport:
    checks: tuple[TheoremCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks if c.applicable)


def verify_theorems(space: SoftBitopSpace) -> TheoremReport:
    """Evaluate every implication of the theory on one finite space.

    A FAIL entry always indicates an implementation bug; statements whose
    hypotheses (canonicality) do not hold are reported as not applicable.
    """
    checks: list[TheoremCheck] = []
    p = space.soft_set.param_count

    soft = {
        0: pairwise_soft_t0(space),
        1: pairwise_soft_t1(space),
        2: pairwise_soft_t2(space),
    }
    comp_pairs = [component_bitop(space, t) for t in range(p)]
    comp = {
        j: all(dec(bp)[0] for bp in comp_pairs)
        for j, dec in ((0, pairwise_t0), (1, pairwise_t1), (2, pairwise_t2))
    }
    ind_pair = induced_bitop(space)
    ind = {
        0: pairwise_t0(ind_pair)[0],
        1: pairwise_t1(ind_pair)[0],
        2: pairwise_t2(ind_pair)[0],
    }
    canonical = is_canonical(space.tau1) and is_canonical(space.tau2)

    def implication(name: str, ante: bool, cons: bool, applicable: bool = True):
        checks.append(
            TheoremCheck(
                name,
                applicable,
                (not applicable) or (not ante) or cons,
                f"antecedent={ante} consequent={cons}" if applicable else "",
            )
        )

    implication("soft-t2-implies-soft-t1", soft[2].holds, soft[1].holds)
    implication("soft-t1-implies-soft-t0", soft[1].holds, soft[0].holds)
    for j in (0, 1, 2):
        implication(f"soft-t{j}-implies-component-t{j}", soft[j].holds, comp[j])
        implication(
            f"component-t{j}-implies-soft-t{j}-on-canonical",
            comp[j],
            soft[j].holds,
            applicable=canonical,
        )
        checks.append(
            TheoremCheck(
                f"canonical-componentwise-equivalence-t{j}",
                canonical,
                (not canonical) or (comp[j] == soft[j].holds),
                f"component={comp[j]} soft={soft[j].holds}" if canonical else "",
            )
        )
        implication(f"soft-t{j}-implies-induced-t{j}", soft[j].holds, ind[j])

    ind1 = induced_topology(space.tau1, space.space)
    ind2 = induced_topology(space.tau2, space.space)

    def union_closed(fam) -> bool:
        masks = set(fam.masks)
        full = (1 << space.space.size) - 1
        if 0 not in masks or full not in masks:
            return False
        return all(a | b in masks for a in masks for b in masks)

    # Only union closure is a theorem here: the induced family need not
    # be intersection-closed.
    checks.append(
        TheoremCheck(
            "induced-families-union-closed",
            True,
            union_closed(ind1) and union_closed(ind2),
        )
    )
    checks.append(
        TheoremCheck(
            "induced-is-finest-with-open-projections",
            True,
            check_finest_open_projections(space.tau1, ind1)
            and check_finest_open_projections(space.tau2, ind2),
        )
    )

    enlargement_ok = True
    for tau, ind_fam in ((space.tau1, ind1), (space.tau2, ind2)):
        can = canonical_enlargement(tau)
        if not all(can.contains(h) for h in tau.opens):
            enlargement_ok = False
        for t in range(p):
            if component_topology(can, t).opens != component_topology(tau, t).opens:
                enlargement_ok = False
        if induced_topology(can, space.space) != ind_fam:
            enlargement_ok = False
    checks.append(
        TheoremCheck(
            "canonical-enlargement-contains-and-preserves",
            True,
            enlargement_ok,
            "contains original, same components, same induced topology",
        )
    )

    from .softtop import reconstruct

    checks.append(
        TheoremCheck(
            "reconstruction-contains-input",
            True,
            reconstruct(ind1).contained and reconstruct(ind2).contained,
        )
    )

    # Finite parameter set: every pairwise soft open cover has a finite
    # (here minimal) subcover.  The full family of opens is such a cover.
    all_opens = tuple((h, "tau1") for h in space.tau1.opens) + tuple(
        (h, "tau2") for h in space.tau2.opens
    )
    cover = SoftCover(space, space.soft_set, all_opens)
    sub = find_finite_subcover(cover)
    sub_union = SoftSet.null(p, space.soft_set.universe_size)
    for member, _ in sub:
        sub_union = soft_union(sub_union, member)
    checks.append(
        TheoremCheck(
            "finite-params-subcover-exists",
            True,
            soft_subset(space.soft_set, sub_union),
            f"subcover size {len(sub)}",
        )
    )

    # Canonical spaces: component covers transport to soft covers through
    # cylinders, and sections of a soft subcover cover the component.
    transport_ok = True
    if canonical:
        for t in range(p):
            for prov, tau in (("tau1", space.tau1), ("tau2", space.tau2)):
                comp_topo = component_topology(tau, t)
                cyls = tuple(
                    (cylinder(space, t, v, prov).soft_set, prov)
                    for v in comp_topo.opens
                )
                ccover = SoftCover(space, space.soft_set, cyls)
                if not is_pairwise_soft_cover(ccover).holds:
                    transport_ok = False
                    continue
                csub = find_finite_subcover(ccover)
                sec_union = 0
                for member, _ in csub:
                    sec_union |= member.section(t).mask
                if space.soft_set.section(t).mask & ~sec_union:
                    transport_ok = False
    checks.append(
        TheoremCheck(
            "cylinder-cover-transport",
            canonical,
            (not canonical) or transport_ok,
        )
    )

    note = ""
    if not soft[0].holds and ind[2]:
        note = (
            "induced pair is pairwise t2 while the space is not pairwise "
            "soft t0: converse fails on this space, as expected"
        )
    checks.append(
        TheoremCheck("induced-separation-may-exceed-soft", True, True, note)
    )
    return TheoremReport(tuple(checks))


def _diagonal_lift(
    ambient: SoftSet, sigma_opens: Sequence[FinSet]
) -> SoftTopology:
    """Soft topology whose opens repeat one classical open at every
    parameter; only defined for constant-section carriers."""
    p = ambient.param_count
    opens = [SoftSet(tuple(v for _ in range(p))) for v in sigma_opens]
    return SoftTopology.build(opens, ambient)


def candidate_soft_topologies(n: int, p: int) -> list[SoftTopology]:
    """Deterministic pool of soft topologies on the full constant carrier:
    diagonal lifts of every labeled topology, then every canonical
    product, deduplicated in first-seen order."""
    ambient = SoftSet.of([range(n)] * p, n)
    topos = enumerate_topologies(n)
    pool: list[SoftTopology] = []
    seen = set()

    def add(tau: SoftTopology) -> None:
        key = tuple(h.key for h in tau.opens)
        if key not in seen:
            seen.add(key)
            pool.append(tau)

    for sigma in topos:
        add(_diagonal_lift(ambient, sigma.opens))
    for sigmas in product(topos, repeat=p):
        add(canonical_topology(ambient, list(sigmas)))
    return pool


@dataclass(frozen=True)
class SearchResult:
    """Census of two counterexample classes over small enumerated spaces."""

    # (n, p, index of tau1 in pool, index of tau2 in pool, opens of each)
    not_t0_but_induced_t2: tuple[dict, ...]
    strict_enlargements: tuple[dict, ...]


def _topology_descriptor(tau: SoftTopology) -> list[list[list[int]]]:
    return [[list(s.members()) for s in h.sections] for h in tau.opens]


def search_counterexamples(max_universe: int, max_params: int) -> SearchResult:
    """Enumerate small soft bitopological spaces and collect (i) spaces
    that are not pairwise soft t0 yet induce a pairwise t2 pair, and
    (ii) soft topologies strictly below their canonical enlargement."""
    if max_universe > SEARCH_MAX_UNIVERSE or max_params > SEARCH_MAX_PARAMS:
        raise CapacityError(
            f"search capped at universe {SEARCH_MAX_UNIVERSE}, "
            f"params {SEARCH_MAX_PARAMS}"
        )
    if max_universe < 1 or max_params < 1:
        raise InputError("bounds must be positive")
    class_i: list[dict] = []
    class_ii: list[dict] = []
    for n in range(1, max_universe + 1):
        for p in range(1, max_params + 1):
            ambient = SoftSet.of([range(n)] * p, n)
            pool = candidate_soft_topologies(n, p)
            for idx, tau in enumerate(pool):
                enlarged = canonical_enlargement(tau)
                if len(enlarged) > len(tau):
                    class_ii.append(
                        {
                            "universe_size": n,
                            "param_count": p,
                            "index": idx,
                            "opens": _topology_descriptor(tau),
                            "enlarged_opens": len(enlarged),
                        }
                    )
            induced_cache: dict[int, SEFamily] = {}

            def induced_of(idx: int) -> SEFamily:
                if idx not in induced_cache:
                    induced_cache[idx] = induced_topology(pool[idx])
                return induced_cache[idx]

            for i, tau1 in enumerate(pool):
                for j, tau2 in enumerate(pool):
                    sp = SoftBitopSpace(ambient, tau1, tau2)
                    if pairwise_soft_t0(sp).holds:
                        continue
                    pair = BitopPair(
                        induced_of(i).as_classical(), induced_of(j).as_classical()
                    )
                    if pairwise_t2(pair)[0]:
                        class_i.append(
                            {
                                "universe_size": n,
                                "param_count": p,
                                "tau1_index": i,
                                "tau2_index": j,
                                "tau1_opens": _topology_descriptor(tau1),
                                "tau2_opens": _topology_descriptor(tau2),
                            }
                        )
    return SearchResult(tuple(class_i), tuple(class_ii))
