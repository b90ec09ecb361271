import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frvkit import (
    AlphabetMismatch,
    DomainMismatch,
    NotAPmf,
    canonical_product,
    canonical_variable,
    constant_variable,
    identity_map,
    joint_table,
    pmf,
    product_space,
    projection_map,
    pull_back,
    space,
    variable,
)
from frvkit.core import MeasurePreservingMap
from frvkit.generators import random_pair, random_pullback, random_refinement


def test_pmf_fair_coin_identity(coin):
    assert coin.pmf == {"h": Fraction(1, 2), "t": Fraction(1, 2)}


def test_pmf_constant_is_point_mass(three_point):
    sp, _, _ = three_point
    c = constant_variable(sp, "only")
    assert c.pmf == {"only": Fraction(1)}


def test_pmf_sums_preimage_weights(three_point):
    # derived by hand: p(a) = 1/6 + 1/3, p(b) = 1/2
    _, x, _ = three_point
    assert pmf(x) == {"a": Fraction(1, 2), "b": Fraction(1, 2)}


def test_joint_table_diagonal_for_duplicated_variable(coin):
    jt = joint_table(coin, coin)
    assert jt.cell("h", "h") == Fraction(1, 2)
    assert jt.cell("t", "t") == Fraction(1, 2)
    assert jt.cell("h", "t") == 0
    assert jt.cell("t", "h") == 0


def test_joint_table_independent_coins(four_uniform):
    _, x, y = four_uniform
    jt = joint_table(x, y)
    assert all(value == Fraction(1, 4) for value in jt.cells.values())


def test_joint_table_three_point_enumeration(three_point):
    _, x, y = three_point
    jt = joint_table(x, y)
    assert jt.cell("a", "u") == Fraction(1, 6)
    assert jt.cell("a", "v") == Fraction(1, 3)
    assert jt.cell("b", "v") == Fraction(1, 2)
    assert jt.cell("b", "u") == 0


def test_joint_table_requires_shared_space(coin):
    other = space({"w1": Fraction(1, 2), "w2": Fraction(1, 4), "w3": Fraction(1, 4)})
    y = variable(other, {"w1": "u", "w2": "v", "w3": "v"})
    with pytest.raises(DomainMismatch):
        joint_table(coin, y)


def test_joint_marginals_match_pmfs(rng):
    for _ in range(50):
        x, y = random_pair(rng)
        jt = joint_table(x, y)
        assert jt.row_marginal() == x.pmf
        assert jt.col_marginal() == y.pmf
        assert sum(jt.cells.values()) == 1


def test_canonical_product_duplicated_coin(coin):
    p = canonical_product(coin, coin)
    assert p.alphabet == (("h", "h"), ("t", "t"))
    assert p.pmf == {("h", "h"): Fraction(1, 2), ("t", "t"): Fraction(1, 2)}


def test_canonical_product_independent_coins(four_uniform):
    _, x, y = four_uniform
    p = canonical_product(x, y)
    assert len(p.alphabet) == 4
    assert all(mass == Fraction(1, 4) for mass in p.pmf.values())


def test_canonical_product_drops_only_zero_cells(three_point):
    _, x, y = three_point
    p = canonical_product(x, y)
    assert p.alphabet == (("a", "u"), ("a", "v"), ("b", "v"))
    jt = joint_table(x, y)
    assert p.pmf == {pair: jt.cell(*pair) for pair in p.alphabet}
    assert all(jt.cell(a, b) == 0
               for a in x.alphabet for b in y.alphabet
               if (a, b) not in p.pmf)


def test_product_space_uniform():
    sp = product_space(space({"a": Fraction(1, 2), "b": Fraction(1, 2)}),
                       space({"c": Fraction(1, 2), "d": Fraction(1, 2)}))
    assert len(sp.outcomes) == 4
    assert all(w == Fraction(1, 4) for w in sp.weights.values())


def test_product_space_with_point_space_keeps_weights():
    left = space({"a": Fraction(1, 3), "b": Fraction(2, 3)})
    sp = product_space(left, space({"only": Fraction(1)}))
    assert sp.weights == {("a", "only"): Fraction(1, 3), ("b", "only"): Fraction(2, 3)}


def test_product_space_multiplies_rationals():
    sp = product_space(space({"a": Fraction(1, 3), "b": Fraction(2, 3)}),
                       space({"c": Fraction(1, 4), "d": Fraction(3, 4)}))
    assert sp.weights == {
        ("a", "c"): Fraction(1, 12),
        ("a", "d"): Fraction(1, 4),
        ("b", "c"): Fraction(1, 6),
        ("b", "d"): Fraction(1, 2),
    }


def test_projection_maps_are_measure_preserving():
    left = space({"a": Fraction(1, 3), "b": Fraction(2, 3)})
    right = space({"c": Fraction(1, 4), "d": Fraction(3, 4)})
    # construction validates the preimage sums exactly; also spot-check one
    proj = projection_map(left, right, "left")
    share = sum(proj.source.weights[w] for w in proj.source.outcomes if proj(w) == "a")
    assert share == Fraction(1, 3)
    projection_map(left, right, "right")


def test_pull_back_identity_is_noop(coin):
    pulled = pull_back(coin, identity_map(coin.space))
    assert pulled.assignment == coin.assignment
    assert pulled.pmf == coin.pmf


def test_pull_back_along_projection_preserves_pmf(three_point):
    _, x, y = three_point
    aux = space({"z1": Fraction(1, 4), "z2": Fraction(3, 4)})
    proj = projection_map(x.space, aux, "left")
    assert pull_back(x, proj).pmf == x.pmf
    assert pull_back(y, proj).pmf == y.pmf


def test_pull_back_along_refinement_preserves_pmf(rng, three_point):
    _, x, _ = three_point
    proj = random_refinement(rng, x.space)
    assert pull_back(x, proj).pmf == x.pmf


def test_pull_back_rejects_wrong_target(coin, three_point):
    sp, x, _ = three_point
    with pytest.raises(DomainMismatch):
        pull_back(coin, identity_map(sp))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_pull_back_preserves_joint_tables_exactly(seed):
    # random_pullback alternates between projections and refinements
    rng = random.Random(seed)
    x, y, proj = random_pullback(rng, max_alphabet=4, max_outcomes=6)
    before = joint_table(x, y)
    after = joint_table(pull_back(x, proj), pull_back(y, proj))
    assert before.cells == after.cells


def test_space_rejects_bad_weight_sums():
    with pytest.raises(NotAPmf):
        space({"a": Fraction(1, 2), "b": Fraction(1, 3)})
    with pytest.raises(NotAPmf):
        space({"a": Fraction(3, 2), "b": Fraction(-1, 2)})


def test_space_allows_zero_weight_outcomes():
    sp = space({"a": Fraction(1), "b": Fraction(0)})
    x = variable(sp, {"a": "u", "b": "v"})
    assert x.pmf == {"u": Fraction(1), "v": Fraction(0)}
    assert x.alphabet == ("u", "v")


def test_variable_requires_total_assignment(coin_space):
    with pytest.raises(AlphabetMismatch):
        variable(coin_space, {"w1": "h"})


def test_measure_preserving_map_validation(coin_space):
    bad_source = space({"s1": Fraction(1, 4), "s2": Fraction(3, 4)})
    with pytest.raises(DomainMismatch):
        MeasurePreservingMap(bad_source, coin_space, {"s1": "w1", "s2": "w2"})


def test_structural_space_equality_counts_as_shared():
    a1 = space({"w": Fraction(1)})
    a2 = space({"w": Fraction(1)})
    x = variable(a1, {"w": "u"})
    y = variable(a2, {"w": "v"})
    assert joint_table(x, y).cell("u", "v") == 1


def test_canonical_variable_round_trip():
    dist = {"a": Fraction(2, 5), "b": Fraction(3, 5)}
    x = canonical_variable(dist)
    assert x.pmf == dist
    assert x.alphabet == ("a", "b")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_generated_spaces_and_variables_are_exact(seed):
    rng = random.Random(seed)
    x, y = random_pair(rng)
    assert sum(x.space.weights.values()) == 1
    assert sum(x.pmf.values()) == 1
    assert sum(y.pmf.values()) == 1
    assert set(x.assignment.values()) == set(x.alphabet)
