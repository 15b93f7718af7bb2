"""Shared helpers: seeded random instance generators."""

from __future__ import annotations

import random

from softbitop import (
    ClassicalTopology,
    FinSet,
    SoftSet,
    SoftTopology,
    generate_topology,
    soft_intersection,
    soft_union,
)

DEFAULT_SEED = 20240817


def rng_for(name: str, seed: int = DEFAULT_SEED) -> random.Random:
    return random.Random(f"{seed}:{name}")


def random_nonempty_mask(rng: random.Random, n: int) -> int:
    return rng.randint(1, (1 << n) - 1)


def random_soft_set(rng: random.Random, ambient: SoftSet) -> SoftSet:
    sections = []
    for s in ambient.sections:
        sub = s.mask & rng.randint(0, (1 << ambient.universe_size) - 1)
        sections.append(FinSet(ambient.universe_size, sub))
    return SoftSet(tuple(sections))


def random_carrier(rng: random.Random) -> SoftSet:
    n = rng.randint(1, 3)
    p = rng.randint(1, 2)
    return SoftSet(
        tuple(FinSet(n, random_nonempty_mask(rng, n)) for _ in range(p))
    )


def random_soft_topology(rng: random.Random, ambient: SoftSet) -> SoftTopology:
    """Close a few random soft subsets under union/intersection."""
    family = {SoftSet.null(ambient.param_count, ambient.universe_size).key: None}
    members = [
        SoftSet.null(ambient.param_count, ambient.universe_size),
        ambient,
    ]
    family[ambient.key] = None
    for _ in range(rng.randint(0, 3)):
        h = random_soft_set(rng, ambient)
        if h.key not in family:
            family[h.key] = None
            members.append(h)
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                for c in (soft_union(a, b), soft_intersection(a, b)):
                    if c.key not in family:
                        family[c.key] = None
                        members.append(c)
                        changed = True
    return SoftTopology.build(members, ambient)


def random_sigma_family(
    rng: random.Random, ambient: SoftSet
) -> list[ClassicalTopology]:
    n = ambient.universe_size
    sigmas = []
    for t in range(ambient.param_count):
        carrier = ambient.section(t)
        subbase = []
        for _ in range(rng.randint(0, 3)):
            subbase.append(FinSet(n, carrier.mask & rng.randint(0, (1 << n) - 1)))
        sigmas.append(generate_topology(subbase, n, carrier=carrier))
    return sigmas
