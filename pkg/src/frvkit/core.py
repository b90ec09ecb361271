"""Finite probability spaces, random variables, joint tables, and
measure-preserving maps.

Everything here is exact: probabilities are :class:`fractions.Fraction`
values, sums are required to equal 1 with zero residual, and all derived
quantities (pmfs, joint cells, marginals) stay rational.  Floating point
enters only in the entropy layer (:mod:`frvkit.measures`).

All values are immutable after construction and safe to share across
threads.  Equality is structural, so two independently built copies of the
same space count as "the same space" for joint constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from .errors import AlphabetMismatch, DomainMismatch, NotAPmf
from .labels import Label, Outcome, label_text, sort_labels

ZERO = Fraction(0)
ONE = Fraction(1)


def _check_weights(weights: Mapping, what: str) -> None:
    total = ZERO
    for key, value in weights.items():
        if not isinstance(value, Fraction):
            raise NotAPmf(f"{what} {label_text(key)}: expected Fraction, got {type(value).__name__}")
        if value < 0 or value > 1:
            raise NotAPmf(f"{what} {label_text(key)}: {value} outside [0, 1]")
        total += value
    if total != ONE:
        raise NotAPmf(f"{what}s sum to {total}, expected exactly 1")


@dataclass(frozen=True)
class SampleSpace:
    """A finite outcome set with an exact probability weight per outcome.

    The sigma-algebra is implicitly the full power set, so a weight map is
    the entire measure.  Weights must sum to exactly 1; zero-weight outcomes
    are permitted.
    """

    outcomes: Tuple[Outcome, ...]
    weights: Dict[Outcome, Fraction]

    def __post_init__(self):
        if len(set(self.outcomes)) != len(self.outcomes):
            raise NotAPmf("duplicate outcomes in sample space")
        if set(self.weights) != set(self.outcomes):
            raise NotAPmf("weight map does not cover exactly the outcome set")
        _check_weights(self.weights, "outcome weight")

    def weight(self, outcome: Outcome) -> Fraction:
        return self.weights[outcome]

    def sorted_outcomes(self) -> list:
        return sort_labels(self.outcomes)

    def __repr__(self):
        parts = ", ".join(f"{label_text(w)}={self.weights[w]}" for w in self.outcomes)
        return f"SampleSpace({parts})"


def space(weights: Mapping[Outcome, "Fraction | int | str"]) -> SampleSpace:
    """Convenience constructor; coerces weight values through ``Fraction``."""
    converted = {key: Fraction(value) for key, value in weights.items()}
    return SampleSpace(tuple(converted), converted)


@dataclass(frozen=True)
class FiniteRandomVariable:
    """A labelled total assignment on a sample space.

    The alphabet is derived from the assignment image, which makes every
    constructed variable surjective by definition; passing an explicit
    alphabet elsewhere and failing surjectivity is therefore impossible.
    Zero-weight outcomes still count as "hitting" their label.
    """

    space: SampleSpace
    assignment: Dict[Outcome, Label]

    def __post_init__(self):
        if set(self.assignment) != set(self.space.outcomes):
            raise AlphabetMismatch("assignment is not total on the outcome set")

    @cached_property
    def alphabet(self) -> Tuple[Label, ...]:
        return tuple(sort_labels(set(self.assignment.values())))

    @cached_property
    def pmf(self) -> Mapping[Label, Fraction]:
        """Exact probability mass function: label -> total preimage weight.

        Returned read-only; take ``dict(x.pmf)`` for a mutable copy.
        """
        masses: Dict[Label, Fraction] = {x: ZERO for x in self.alphabet}
        for outcome in self.space.outcomes:
            masses[self.assignment[outcome]] += self.space.weights[outcome]
        return MappingProxyType(masses)

    def __call__(self, outcome: Outcome) -> Label:
        return self.assignment[outcome]

    def is_constant(self) -> bool:
        return len(self.alphabet) == 1

    def __repr__(self):
        return f"FiniteRandomVariable(alphabet={[label_text(x) for x in self.alphabet]})"


def variable(sp: SampleSpace, assignment: Mapping[Outcome, Label]) -> FiniteRandomVariable:
    return FiniteRandomVariable(sp, dict(assignment))


def constant_variable(sp: SampleSpace, label: Label = "const") -> FiniteRandomVariable:
    return FiniteRandomVariable(sp, {outcome: label for outcome in sp.outcomes})


def pmf(x: FiniteRandomVariable) -> Dict[Label, Fraction]:
    """The pmf of ``x`` (validity is enforced at construction time)."""
    return dict(x.pmf)


@dataclass(frozen=True)
class JointTable:
    """Exact joint distribution of an ordered pair of variables.

    Cells are stored for the full alphabet product, explicit zeros included,
    and always sum to exactly 1.
    """

    row_alphabet: Tuple[Label, ...]
    col_alphabet: Tuple[Label, ...]
    cells: Dict[Tuple[Label, Label], Fraction]

    def __post_init__(self):
        expected = {(x, y) for x in self.row_alphabet for y in self.col_alphabet}
        if set(self.cells) != expected:
            raise AlphabetMismatch("joint cells do not cover the alphabet product")
        _check_weights(self.cells, "joint cell")

    def cell(self, x: Label, y: Label) -> Fraction:
        return self.cells[(x, y)]

    def row_marginal(self) -> Dict[Label, Fraction]:
        out = {x: ZERO for x in self.row_alphabet}
        for (x, _), value in self.cells.items():
            out[x] += value
        return out

    def col_marginal(self) -> Dict[Label, Fraction]:
        out = {y: ZERO for y in self.col_alphabet}
        for (_, y), value in self.cells.items():
            out[y] += value
        return out

    def as_pmf(self) -> Dict[Tuple[Label, Label], Fraction]:
        return dict(self.cells)


def joint_table(x: FiniteRandomVariable, y: FiniteRandomVariable) -> JointTable:
    """Joint distribution: cell (a, b) = total weight of the outcomes mapped
    to a by ``x`` and to b by ``y``.  Requires a shared sample space."""
    if x.space != y.space:
        raise DomainMismatch("joint table requires variables on the same space")
    cells: Dict[Tuple[Label, Label], Fraction] = {
        (a, b): ZERO for a in x.alphabet for b in y.alphabet
    }
    for outcome in x.space.outcomes:
        cells[(x.assignment[outcome], y.assignment[outcome])] += x.space.weights[outcome]
    return JointTable(x.alphabet, y.alphabet, cells)


def canonical_product(x: FiniteRandomVariable, y: FiniteRandomVariable) -> FiniteRandomVariable:
    """The outcome-wise pairing: omega -> (x(omega), y(omega)).

    The alphabet is the set of pairs actually hit, not the full alphabet
    product, which keeps the result surjective when some joint cells are
    exactly zero.  Its pmf equals the joint table restricted to hit pairs.
    """
    if x.space != y.space:
        raise DomainMismatch("canonical product requires variables on the same space")
    assignment = {
        outcome: (x.assignment[outcome], y.assignment[outcome])
        for outcome in x.space.outcomes
    }
    return FiniteRandomVariable(x.space, assignment)


@dataclass(frozen=True)
class MeasurePreservingMap:
    """A map of sample spaces whose preimages conserve weight exactly."""

    source: SampleSpace
    target: SampleSpace
    mapping: Dict[Outcome, Outcome]

    def __post_init__(self):
        if set(self.mapping) != set(self.source.outcomes):
            raise DomainMismatch("map is not total on the source outcomes")
        pushed: Dict[Outcome, Fraction] = {w: ZERO for w in self.target.outcomes}
        for src, dst in self.mapping.items():
            if dst not in pushed:
                raise DomainMismatch(f"map sends {label_text(src)} outside the target space")
            pushed[dst] += self.source.weights[src]
        for outcome, mass in pushed.items():
            if mass != self.target.weights[outcome]:
                raise DomainMismatch(
                    f"preimage of {label_text(outcome)} carries {mass}, "
                    f"target weight is {self.target.weights[outcome]}"
                )

    def __call__(self, outcome: Outcome) -> Outcome:
        return self.mapping[outcome]


def identity_map(sp: SampleSpace) -> MeasurePreservingMap:
    return MeasurePreservingMap(sp, sp, {w: w for w in sp.outcomes})


def pull_back(x: FiniteRandomVariable, proj: MeasurePreservingMap) -> FiniteRandomVariable:
    """Compose ``x`` with a measure-preserving map into its space.

    The result lives on the map's source space and has exactly the same pmf.
    """
    if proj.target != x.space:
        raise DomainMismatch("map target differs from the variable's space")
    assignment = {src: x.assignment[proj.mapping[src]] for src in proj.source.outcomes}
    return FiniteRandomVariable(proj.source, assignment)


def product_space(a: SampleSpace, b: SampleSpace) -> SampleSpace:
    """Independent product: outcomes are pairs, weights multiply."""
    outcomes = tuple((wa, wb) for wa in a.outcomes for wb in b.outcomes)
    weights = {(wa, wb): a.weights[wa] * b.weights[wb] for wa, wb in outcomes}
    return SampleSpace(outcomes, weights)


def projection_map(a: SampleSpace, b: SampleSpace, which: str = "left") -> MeasurePreservingMap:
    """Natural projection out of ``product_space(a, b)``.

    ``which`` selects the ``"left"`` (onto ``a``) or ``"right"`` (onto ``b``)
    coordinate.  Both are measure-preserving, which the constructor verifies
    exactly.
    """
    if which not in ("left", "right"):
        raise ValueError("which must be 'left' or 'right'")
    prod = product_space(a, b)
    index = 0 if which == "left" else 1
    target = a if which == "left" else b
    return MeasurePreservingMap(prod, target, {w: w[index] for w in prod.outcomes})


def canonical_variable(distribution: Mapping[Label, Fraction]) -> FiniteRandomVariable:
    """Realize a bare distribution as the identity variable on the weighted
    set of its labels.  Labels with exactly zero mass stay in the alphabet."""
    weights = dict(distribution)
    _check_weights(weights, "probability")
    sp = SampleSpace(tuple(weights), weights)
    return FiniteRandomVariable(sp, {w: w for w in sp.outcomes})


def canonical_pair(
    joint: Mapping[Tuple[Label, Label], Fraction],
) -> Tuple[FiniteRandomVariable, FiniteRandomVariable]:
    """Realize a joint distribution over pair labels as coordinate variables
    on the weighted set of its cells (the channel view of a pair)."""
    weights = dict(joint)
    _check_weights(weights, "joint cell")
    for key in weights:
        if not (isinstance(key, tuple) and len(key) == 2):
            raise AlphabetMismatch(f"joint key {label_text(key)} is not a pair")
    sp = SampleSpace(tuple(weights), weights)
    first = FiniteRandomVariable(sp, {w: w[0] for w in sp.outcomes})
    second = FiniteRandomVariable(sp, {w: w[1] for w in sp.outcomes})
    return first, second


def fair_coin() -> FiniteRandomVariable:
    """The reference coin: two equally weighted outcomes, identity labels."""
    return canonical_variable({"0": Fraction(1, 2), "1": Fraction(1, 2)})
