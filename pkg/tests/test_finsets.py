import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softbitop import (
    BitopPair,
    CapacityError,
    ClassicalTopology,
    FinSet,
    InputError,
    NotACoverError,
    enumerate_topologies,
    generate_topology,
    is_topology,
    minimal_subcover,
    minimal_subcover_indices,
    pairwise_t0,
    pairwise_t1,
    pairwise_t2,
)

# ---------------------------------------------------------------- oracles


def brute_topologies(n, carrier=None):
    """Independent enumeration using frozensets instead of bitmasks."""
    pts = frozenset(range(n)) if carrier is None else frozenset(carrier.members())
    proper = []
    for k in range(1, len(pts)):
        proper.extend(frozenset(c) for c in itertools.combinations(sorted(pts), k))
    out = []
    for choice in range(1 << len(proper)):
        fam = {frozenset(), pts}
        for i, s in enumerate(proper):
            if choice >> i & 1:
                fam.add(s)
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(fam)
    return out


def classical_t0(top):
    pts = top.carrier.members()
    for x, y in itertools.combinations(pts, 2):
        if not any((x in u) != (y in u) for u in top.opens):
            return False
    return True


def classical_t1(top):
    pts = top.carrier.members()
    for x, y in itertools.permutations(pts, 2):
        if not any(x in u and y not in u for u in top.opens):
            return False
    return True


def classical_t2(top):
    pts = top.carrier.members()
    for x, y in itertools.combinations(pts, 2):
        ok = False
        for u in top.opens:
            for v in top.opens:
                if x in u and y in v and (u & v).is_empty:
                    ok = True
        if not ok:
            return False
    return True


# ---------------------------------------------------------------- FinSet


def test_finset_basics():
    s = FinSet.of([0, 2], 3)
    assert s.members() == (0, 2)
    assert 0 in s and 1 not in s and 2 in s
    assert len(s) == 2
    assert (s | FinSet.of([1], 3)) == FinSet.full(3)
    assert (s & FinSet.of([2], 3)) == FinSet.of([2], 3)
    assert FinSet.empty(3).is_empty
    assert s.issubset(FinSet.full(3))
    assert not FinSet.full(3).issubset(s)


def test_finset_rejects_out_of_range():
    with pytest.raises(InputError):
        FinSet.of([3], 3)
    with pytest.raises(InputError):
        FinSet(2, 0b100)


# ---------------------------------------------------------------- is_topology


def test_is_topology_examples():
    n = 3
    full = FinSet.full(n)
    empty = FinSet.empty(n)
    assert is_topology([empty, full], n)
    discrete = [FinSet(n, m) for m in range(1 << n)]
    assert is_topology(discrete, n)
    # {0} and {1} present but their union missing
    assert not is_topology(
        [empty, full, FinSet.of([0], n), FinSet.of([1], n)], n
    )
    # empty set missing
    assert not is_topology([full], n)


def test_is_topology_on_carrier():
    carrier = FinSet.of([1, 2], 4)
    assert is_topology([FinSet.empty(4), carrier], 4, carrier=carrier)
    # member escapes the carrier
    assert not is_topology(
        [FinSet.empty(4), carrier, FinSet.of([0], 4)], 4, carrier=carrier
    )


def test_classical_topology_build_validates():
    with pytest.raises(InputError):
        ClassicalTopology.build([FinSet.full(2)], 2)


# ---------------------------------------------------------------- generation


def test_generate_topology_empty_subbase():
    top = generate_topology([], 3)
    assert set(top.open_masks) == {0, 0b111}


def test_generate_topology_example():
    top = generate_topology([FinSet.of([0, 1], 3), FinSet.of([1, 2], 3)], 3)
    assert set(top.open_masks) == {0, 0b011, 0b110, 0b010, 0b111}


def test_generate_topology_is_smallest():
    # oracle: intersection of all topologies containing the subbase
    subbase = [FinSet.of([0], 3), FinSet.of([1, 2], 3)]
    want = frozenset(range(1 << 3))
    sub_masks = {s.mask for s in subbase}
    for top in enumerate_topologies(3):
        masks = frozenset(top.open_masks)
        if sub_masks <= masks:
            want &= masks
    got = frozenset(generate_topology(subbase, 3).open_masks)
    assert got == want


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=7), max_size=4))
def test_generate_topology_idempotent(masks):
    subbase = [FinSet(3, m) for m in masks]
    top = generate_topology(subbase, 3)
    again = generate_topology(list(top.opens), 3)
    assert set(again.open_masks) == set(top.open_masks)
    assert is_topology(top.opens, 3)


# ---------------------------------------------------------------- enumeration


def test_enumerate_topologies_counts():
    assert len(enumerate_topologies(1)) == 1
    assert len(enumerate_topologies(2)) == 4
    assert len(enumerate_topologies(3)) == 29
    assert len(enumerate_topologies(4)) == 355


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_topologies_matches_oracle(n):
    got = {frozenset(t.open_masks) for t in enumerate_topologies(n)}
    want = set()
    for fam in brute_topologies(n):
        want.add(frozenset(sum(1 << x for x in s) for s in fam))
    assert got == want


def test_enumerate_topologies_on_carrier():
    carrier = FinSet.of([0, 2], 3)
    tops = enumerate_topologies(3, carrier=carrier)
    assert len(tops) == 4  # two-point carrier
    for t in tops:
        assert all(u.issubset(carrier) for u in t.opens)


def test_enumerate_topologies_capacity():
    with pytest.raises(CapacityError):
        enumerate_topologies(5)


def test_enumerate_topologies_deterministic():
    a = [t.open_masks for t in enumerate_topologies(3)]
    b = [t.open_masks for t in enumerate_topologies(3)]
    assert a == b


# ---------------------------------------------------------------- pairwise axioms


def indiscrete(n):
    return ClassicalTopology.build([FinSet.empty(n), FinSet.full(n)], n)


def discrete(n):
    return ClassicalTopology.build([FinSet(n, m) for m in range(1 << n)], n)


def test_pairwise_t0_indiscrete_pair():
    pair = BitopPair(indiscrete(2), indiscrete(2))
    holds, witness = pairwise_t0(pair)
    assert not holds
    assert witness == (0, 1)


def test_pairwise_mixed_pair():
    pair = BitopPair(discrete(2), indiscrete(2))
    assert pairwise_t0(pair)[0]
    assert not pairwise_t1(pair)[0]
    assert not pairwise_t2(pair)[0]


def test_pairwise_discrete_pair_is_t2():
    pair = BitopPair(discrete(3), discrete(3))
    assert pairwise_t2(pair)[0]


def test_pairwise_mismatched_universes():
    with pytest.raises(InputError):
        BitopPair(discrete(2), discrete(3))


@pytest.mark.parametrize("n", [2, 3])
def test_pairwise_implication_chain(n):
    for t1 in enumerate_topologies(n):
        for t2 in enumerate_topologies(n):
            pair = BitopPair(t1, t2)
            h2 = pairwise_t2(pair)[0]
            h1 = pairwise_t1(pair)[0]
            h0 = pairwise_t0(pair)[0]
            if h2:
                assert h1
            if h1:
                assert h0


@pytest.mark.parametrize("n", [2, 3])
def test_pairwise_reduces_to_classical_on_equal_pair(n):
    for top in enumerate_topologies(n):
        pair = BitopPair(top, top)
        assert pairwise_t0(pair)[0] == classical_t0(top)
        assert pairwise_t1(pair)[0] == classical_t1(top)
        assert pairwise_t2(pair)[0] == classical_t2(top)


# ---------------------------------------------------------------- subcovers


def test_minimal_subcover_trivial():
    target = FinSet.full(3)
    family = [FinSet.full(3), FinSet.of([0], 3)]
    assert minimal_subcover_indices(family, target) == (0,)


def test_minimal_subcover_tie_break():
    target = FinSet.full(2)
    family = [
        FinSet.of([0], 2),
        FinSet.of([1], 2),
        FinSet.of([0], 2),
        FinSet.full(2),
    ]
    # size 1 found first, at the least index
    assert minimal_subcover_indices(family, target) == (3,)
    family = family[:3]
    # two size-2 subcovers cover; (0, 1) is lexicographically least
    assert minimal_subcover_indices(family, target) == (0, 1)
    assert [s.mask for s in minimal_subcover(family, target)] == [0b01, 0b10]


def test_minimal_subcover_not_a_cover():
    with pytest.raises(NotACoverError):
        minimal_subcover_indices([FinSet.of([0], 2)], FinSet.full(2))
