import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frvkit import (
    AlphabetMismatch,
    MediatorFunction,
    Triple,
    bijection,
    canonical_pair,
    canonical_product,
    chain_rule_residual,
    constant_variable,
    find_mediator,
    generate_markov_triangle,
    is_markov_triangle,
    mediator_candidates,
    relabel,
    space,
    variable,
    verify_mediator,
    weak_functoriality_residual,
)
from frvkit.generators import random_pair, random_triple
from frvkit.markov import compose_function
from oracles import brute_force_has_mediator

half = Fraction(1, 2)


def independent_z_triple():
    """X and Y independent fair coins, Z a copy of X: never a triangle."""
    q = Fraction(1, 4)
    sp = space({"o1": q, "o2": q, "o3": q, "o4": q})
    x = variable(sp, {"o1": "0", "o2": "0", "o3": "1", "o4": "1"})
    y = variable(sp, {"o1": "0", "o2": "1", "o3": "0", "o4": "1"})
    return Triple(x, y, x)


def full_support_pair():
    return canonical_pair({
        ("a1", "b1"): Fraction(1, 3),
        ("a1", "b2"): Fraction(1, 6),
        ("a2", "b1"): Fraction(1, 6),
        ("a2", "b2"): Fraction(1, 3),
    })


def test_pairing_triangle_admits_swap_mediator():
    x, y = full_support_pair()
    t = Triple(x, canonical_product(x, y), y)
    h = MediatorFunction({
        (z, a): (a, z) for z in y.alphabet for a in x.alphabet
    })
    assert verify_mediator(t, h)


def test_relabeled_first_leg_mediator():
    x, y = full_support_pair()
    f = bijection({"a1": "u1", "a2": "u2"})
    t = Triple(x, relabel(x, f), y)
    h = MediatorFunction({
        (z, a): f(a) for z in y.alphabet for a in x.alphabet
    })
    assert verify_mediator(t, h)


def test_relabeled_last_leg_mediator():
    x, y = full_support_pair()
    g = bijection({"b1": "v1", "b2": "v2"})
    t = Triple(x, y, relabel(y, g))
    g_inv = g.inverse()
    h = MediatorFunction({
        (z, a): g_inv(z) for z in relabel(y, g).alphabet for a in x.alphabet
    })
    assert verify_mediator(t, h)
    assert find_mediator(t) is not None


def test_independent_copy_is_not_a_triangle():
    t = independent_z_triple()
    assert find_mediator(t) is None
    # exhaust all 16 candidate functions explicitly
    assert not brute_force_has_mediator(t)
    for choice in itertools.product(t.y.alphabet, repeat=4):
        cells = [(z, x) for z in t.z.alphabet for x in t.x.alphabet]
        h = MediatorFunction(dict(zip(cells, choice)))
        assert not verify_mediator(t, h)


def test_verify_mediator_rejects_partial_or_foreign_tables():
    x, y = full_support_pair()
    t = Triple(x, canonical_product(x, y), y)
    with pytest.raises(AlphabetMismatch):
        verify_mediator(t, MediatorFunction({("b1", "a1"): ("a1", "b1")}))
    bad_value = {
        (z, a): "nowhere" for z in y.alphabet for a in x.alphabet
    }
    with pytest.raises(AlphabetMismatch):
        verify_mediator(t, MediatorFunction(bad_value))


def test_deterministic_chain_has_mediator(rng):
    x, _ = random_pair(rng, max_alphabet=4)
    mid = compose_function(x, {lab: f"p{i % 2}" for i, lab in enumerate(x.alphabet)})
    last = compose_function(mid, {lab: "q0" for lab in mid.alphabet})
    t = Triple(x, mid, last)
    mediator = find_mediator(t)
    assert mediator is not None
    assert verify_mediator(t, mediator)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_find_mediator_sound_on_arbitrary_triples(seed):
    rng = random.Random(seed)
    sizes = (rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3))
    t = Triple(*random_triple(rng, sizes))
    mediator = find_mediator(t)
    if mediator is not None:
        assert verify_mediator(t, mediator)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_find_mediator_matches_brute_force(seed):
    rng = random.Random(seed)
    sizes = (rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3))
    t = Triple(*random_triple(rng, sizes))
    assert (find_mediator(t) is not None) == brute_force_has_mediator(t)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_any_candidate_selection_is_a_mediator(seed):
    # cell independence: picking any candidate per cell yields a mediator
    rng = random.Random(seed)
    t = generate_markov_triangle(rng.randrange(2**32), max_alphabet=3, max_outcomes=5)
    candidates = mediator_candidates(t)
    assert all(candidates.values())
    table = {cell: rng.choice(options) for cell, options in candidates.items()}
    assert verify_mediator(t, MediatorFunction(table))


def test_zero_mass_conditioning_label_accepts_every_candidate():
    sp = space({"w1": Fraction(1), "w2": Fraction(0)})
    x = variable(sp, {"w1": "x1", "w2": "x2"})  # p(x2) = 0
    y = variable(sp, {"w1": "y1", "w2": "y2"})
    z = variable(sp, {"w1": "z1", "w2": "z2"})
    candidates = mediator_candidates(Triple(x, y, z))
    for z_lab in ("z1", "z2"):
        assert candidates[(z_lab, "x2")] == ["y1", "y2"]


def test_residuals_on_pairing_triangle():
    x, y = full_support_pair()
    t = Triple(x, canonical_product(x, y), y)
    assert abs(weak_functoriality_residual(t)) <= 1e-9
    assert abs(chain_rule_residual(t)) <= 1e-9


def test_residuals_on_degenerate_and_broken_triples(coin_space, coin):
    c = constant_variable(coin_space, "k")
    broken = Triple(coin, c, coin)
    assert weak_functoriality_residual(broken) == pytest.approx(1.0, abs=1e-12)
    degenerate = Triple(c, c, c)
    assert weak_functoriality_residual(degenerate) == 0.0
    assert chain_rule_residual(degenerate) == 0.0


def test_chain_rule_residual_on_independent_copy():
    t = independent_z_triple()
    assert chain_rule_residual(t) == pytest.approx(-2.0, abs=1e-12)


@pytest.mark.parametrize("family", ["a", "b", "c", "d"])
def test_generated_families_verify(family):
    for seed in range(20):
        t = generate_markov_triangle(seed, family=family)
        mediator = find_mediator(t)
        assert mediator is not None
        assert verify_mediator(t, mediator)
        assert abs(weak_functoriality_residual(t)) <= 1e-9
        assert abs(chain_rule_residual(t)) <= 1e-9


def test_generation_is_deterministic_per_seed():
    a = generate_markov_triangle(99)
    b = generate_markov_triangle(99)
    assert a.x.assignment == b.x.assignment
    assert a.y.assignment == b.y.assignment
    assert a.z.assignment == b.z.assignment
    assert a.x.space == b.x.space


def test_rejection_mode_finds_accidental_triangles():
    t = generate_markov_triangle(5, rejection=True)
    assert is_markov_triangle(t)


def test_generator_rejects_unknown_family():
    with pytest.raises(ValueError):
        generate_markov_triangle(0, family="x")
