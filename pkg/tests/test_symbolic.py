import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from softbitop import (
    CofiniteSoftSet,
    FinSet,
    InputError,
    NotACoverError,
    SoftSet,
    TemplateFamily,
    cf_is_cover,
    cf_section,
    decide_finite_subcover,
    truncate_family,
    truncate_soft_set,
)

N = 2
ONE = FinSet.of([1], N)
ZERO = FinSet.of([0], N)
FULL = FinSet.full(N)
EMPTY = FinSet.empty(N)

# The template member indexed by t equals {1} at t and {0} elsewhere;
# the target is constantly {0,1}.
SPIKES = TemplateFamily(N, (ONE, ZERO))
TARGET = CofiniteSoftSet(N, FULL)


# ---------------------------------------------------------------- sections


def test_cf_section_examples():
    h5 = CofiniteSoftSet.make(N, ZERO, {5: ONE})
    assert cf_section(h5, 5) == ONE
    assert cf_section(h5, 0) == ZERO
    assert cf_section(h5, 10 ** 9) == ZERO
    assert h5.exception_labels == (5,)


def test_cofinite_normalization():
    h = CofiniteSoftSet.make(N, ZERO, {3: ZERO, 7: FULL})
    assert h.exceptions == ((7, FULL),)
    with pytest.raises(InputError):
        CofiniteSoftSet(N, ZERO, ((3, ZERO),))
    with pytest.raises(InputError):
        CofiniteSoftSet(N, ZERO, ((4, ONE), (2, ONE)))
    with pytest.raises(InputError):
        CofiniteSoftSet.make(N, ZERO, {-1: ONE})


def test_template_family_validation():
    with pytest.raises(InputError):
        TemplateFamily(N, None, ())
    with pytest.raises(InputError):
        TemplateFamily(N, (FinSet.full(3), ZERO))
    with pytest.raises(InputError):
        TemplateFamily(N, None).template_member(0)


def test_template_member_shape():
    m = SPIKES.template_member(4)
    assert cf_section(m, 4) == ONE
    assert cf_section(m, 3) == ZERO
    assert cf_section(m, 5) == ZERO


# ---------------------------------------------------------------- covers


def test_spike_family_covers_full_target():
    # at label t the member indexed by t supplies 1, all others supply 0
    assert cf_is_cover(SPIKES, TARGET).holds


def test_explicit_full_member_covers():
    fam = TemplateFamily(N, None, (CofiniteSoftSet(N, FULL),))
    assert cf_is_cover(fam, TARGET).holds


def test_template_with_empty_default_fails_generically():
    fam = TemplateFamily(N, (ONE, EMPTY))
    verdict = cf_is_cover(fam, TARGET)
    assert not verdict.holds
    where, union = verdict.witness
    assert where == "generic"
    assert union == ONE


def test_cover_failure_at_exceptional_label():
    weak = CofiniteSoftSet.make(N, FULL, {2: EMPTY})
    fam = TemplateFamily(N, None, (weak,))
    verdict = cf_is_cover(fam, TARGET)
    assert not verdict.holds
    assert verdict.witness[0] == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=50))
def test_cover_invariant_under_redundant_exceptions(label):
    """Adding an exception equal to the default never changes anything."""
    base = CofiniteSoftSet.make(N, FULL)
    padded = CofiniteSoftSet.make(N, FULL, {label: FULL})
    assert base == padded
    fam = TemplateFamily(N, None, (padded,))
    assert cf_is_cover(fam, TARGET).holds


def test_cover_size_mismatch():
    with pytest.raises(InputError):
        cf_is_cover(SPIKES, CofiniteSoftSet(3, FinSet.full(3)))


# ---------------------------------------------------------------- decision


def test_spike_family_has_no_finite_subcover():
    decision = decide_finite_subcover(SPIKES, TARGET)
    assert not decision.holds
    assert decision.witness is None
    assert decision.generic_union == ZERO


def test_full_member_gives_singleton_subcover():
    fam = TemplateFamily(N, (ONE, ZERO), (CofiniteSoftSet(N, FULL),))
    decision = decide_finite_subcover(fam, TARGET)
    assert decision.holds
    assert decision.witness == (CofiniteSoftSet(N, FULL),)


def test_subcover_needs_exceptional_and_generic_members():
    # the explicit member covers everything except labels 2 and 4, where
    # two template members must step in
    gap = CofiniteSoftSet.make(N, FULL, {2: ZERO, 4: ZERO})
    fam = TemplateFamily(N, (ONE, ZERO), (gap,))
    decision = decide_finite_subcover(fam, TARGET)
    assert decision.holds
    assert len(decision.witness) == 3
    assert gap in decision.witness
    spike_indices = sorted(
        m.exception_labels[0] for m in decision.witness if m != gap
    )
    assert spike_indices == [2, 4]


def test_decision_requires_a_cover():
    fam = TemplateFamily(N, (ONE, EMPTY))
    with pytest.raises(NotACoverError):
        decide_finite_subcover(fam, TARGET)


def test_decision_without_template():
    a = CofiniteSoftSet.make(N, ZERO, {0: FULL})
    b = CofiniteSoftSet.make(N, ONE)
    fam = TemplateFamily(N, None, (a, b))
    decision = decide_finite_subcover(fam, TARGET)
    assert decision.holds
    assert decision.witness == (a, b)
    assert decision.generic_union == FULL


# ---------------------------------------------------------------- truncation


def test_truncate_soft_set():
    h = CofiniteSoftSet.make(N, ZERO, {1: ONE})
    assert truncate_soft_set(h, 3) == SoftSet((ZERO, ONE, ZERO))
    with pytest.raises(InputError):
        truncate_soft_set(h, 1)


def test_truncate_family_expands_template():
    members = truncate_family(SPIKES, 2)
    assert members == (
        SoftSet((ONE, ZERO)),
        SoftSet((ZERO, ONE)),
    )


def brute_min_subcover_size(members, target):
    p = target.param_count
    for k in range(len(members) + 1):
        for combo in itertools.combinations(members, k):
            if all(
                target.section(t).mask
                & ~sum_union(combo, t) == 0
                for t in range(p)
            ):
                return k
    return None


def sum_union(members, t):
    u = 0
    for m in members:
        u |= m.section(t).mask
    return u


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_truncation_consistency_no_case(m):
    """The undecidable-looking NO answer is consistent with truncations:
    every finite truncation needs all m template members, so minimal
    subcover sizes grow without bound."""
    members = truncate_family(SPIKES, m)
    target = truncate_soft_set(TARGET, m)
    assert brute_min_subcover_size(members, target) == m


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_truncation_consistency_yes_case(m):
    fam = TemplateFamily(N, (ONE, ZERO), (CofiniteSoftSet(N, FULL),))
    members = truncate_family(fam, m)
    target = truncate_soft_set(TARGET, m)
    assert brute_min_subcover_size(members, target) == 1
