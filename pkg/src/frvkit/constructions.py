"""Convex structure on variables and pairs, relabelings, and weak-convergence
probing.

A weighted convex sum of variables lives on the mixture space (tag, omega)
and takes values in a tagged disjoint union of the component alphabets.  The
tag is applied distributively: tagging an atomic label ``y`` with ``x`` gives
the pair ``(x, y)``, while tagging a tuple label tags each part.  With this
realization the convex sum of pairwise products and the product of convex
sums are *the same function*, label for label, not merely isomorphic, which
the test suite checks with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Tuple

from .core import FiniteRandomVariable, SampleSpace, canonical_pair, _check_weights
from .errors import AlphabetMismatch, DomainMismatch
from .labels import Label, label_text, sort_labels
from .measures import DEFAULT_BASE, entropy, mutual_information


@dataclass(frozen=True)
class Relabeling:
    """A validated bijection between two alphabets."""

    source_alphabet: Tuple[Label, ...]
    target_alphabet: Tuple[Label, ...]
    mapping: Dict[Label, Label]

    def __post_init__(self):
        if set(self.mapping) != set(self.source_alphabet):
            raise AlphabetMismatch("relabeling is not total on its source alphabet")
        image = set(self.mapping.values())
        if len(image) != len(self.mapping) or image != set(self.target_alphabet):
            raise AlphabetMismatch("relabeling is not a bijection onto its target alphabet")

    def __call__(self, label: Label) -> Label:
        return self.mapping[label]

    def inverse(self) -> "Relabeling":
        return Relabeling(
            self.target_alphabet,
            self.source_alphabet,
            {v: k for k, v in self.mapping.items()},
        )


def bijection(mapping: Mapping[Label, Label]) -> Relabeling:
    """Build a relabeling from a plain mapping, inferring both alphabets."""
    m = dict(mapping)
    return Relabeling(tuple(sort_labels(m)), tuple(sort_labels(set(m.values()))), m)


def relabel(x: FiniteRandomVariable, f: Relabeling) -> FiniteRandomVariable:
    """Compose a variable with a bijective relabeling of its alphabet."""
    if set(f.source_alphabet) != set(x.alphabet):
        raise AlphabetMismatch("relabeling source alphabet differs from the variable's")
    return FiniteRandomVariable(
        x.space, {w: f.mapping[lab] for w, lab in x.assignment.items()}
    )


def tag_label(tag: Label, label: Label) -> Label:
    """Tag a label with its mixture component, distributing over tuples.

    Atomic labels become ``(tag, label)``; tuple labels are tagged part by
    part, so a pair ``(a, b)`` becomes ``((tag, a), (tag, b))``.  Distributing
    keeps "pair up, then mix" and "mix, then pair up" literally equal.
    """
    if isinstance(label, tuple):
        return tuple(tag_label(tag, part) for part in label)
    return (tag, label)


def mixture_space(
    weights: Mapping[Label, Fraction], base_space: SampleSpace
) -> SampleSpace:
    """The space (tag, omega) with weight(tag, omega) = w(tag) * mu(omega)."""
    _check_weights(dict(weights), "mixture weight")
    outcomes = tuple(
        (tag, omega)
        for tag in sort_labels(weights)
        for omega in base_space.outcomes
    )
    return SampleSpace(
        outcomes,
        {(tag, omega): weights[tag] * base_space.weights[omega] for tag, omega in outcomes},
    )


def _common_space(variables) -> SampleSpace:
    spaces = list({id(v.space): v.space for v in variables}.values())
    first = spaces[0]
    for other in spaces[1:]:
        if other != first:
            raise DomainMismatch(
                "convex sum components must share one sample space; "
                "pull them back to a common space first"
            )
    return first


def convex_sum(
    weights: Mapping[Label, Fraction],
    family: Mapping[Label, FiniteRandomVariable],
) -> FiniteRandomVariable:
    """Weighted convex sum of a family of variables on a common space.

    The result lives on the mixture space and maps (tag, omega) to the
    tagged value of the tag-th component at omega.  Its pmf is exactly
    ``weights[tag] * component_pmf[value]`` on the tagged disjoint union.
    """
    if set(weights) != set(family):
        raise AlphabetMismatch("mixture weights and family are indexed by different sets")
    if not family:
        raise AlphabetMismatch("empty mixture")
    base_space = _common_space(family.values())
    mixed = mixture_space(weights, base_space)

    seen: Dict[Label, Label] = {}
    for tag in sort_labels(family):
        for lab in family[tag].alphabet:
            tagged = tag_label(tag, lab)
            if tagged in seen:
                raise AlphabetMismatch(
                    f"tagged label collision: {label_text(tagged)} arises from "
                    f"components {label_text(seen[tagged])} and {label_text(tag)}"
                )
            seen[tagged] = tag

    assignment = {
        (tag, omega): tag_label(tag, family[tag].assignment[omega])
        for tag, omega in mixed.outcomes
    }
    return FiniteRandomVariable(mixed, assignment)


def convex_sum_pairs(
    weights: Mapping[Label, Fraction],
    family: Mapping[Label, Tuple[FiniteRandomVariable, FiniteRandomVariable]],
) -> Tuple[FiniteRandomVariable, FiniteRandomVariable]:
    """Componentwise convex sum of an indexed family of pairs.

    Both components of every pair must live on the same common space; the
    two results then live on the same mixture space.
    """
    firsts = {tag: pair[0] for tag, pair in family.items()}
    seconds = {tag: pair[1] for tag, pair in family.items()}
    _common_space(list(firsts.values()) + list(seconds.values()))
    return convex_sum(weights, firsts), convex_sum(weights, seconds)


def mixture_distribution(
    weights: Mapping[Label, Fraction],
    parts: Mapping[Label, Mapping[Label, Fraction]],
) -> Dict[Label, Fraction]:
    """Distribution-level convex sum: the grouping of ``parts`` under
    ``weights`` on the tagged disjoint union of their supports."""
    if set(weights) != set(parts):
        raise AlphabetMismatch("mixture weights and parts are indexed by different sets")
    out: Dict[Label, Fraction] = {}
    for tag in sort_labels(parts):
        part = dict(parts[tag])
        _check_weights(part, "mixture part probability")
        for lab, mass in part.items():
            tagged = tag_label(tag, lab)
            if tagged in out:
                raise AlphabetMismatch(f"tagged label collision at {label_text(tagged)}")
            out[tagged] = weights[tag] * mass
    _check_weights(out, "mixture probability")
    return out


@dataclass(frozen=True)
class PmfSequence:
    """A sequence of distributions with an eventually constant alphabet.

    ``generator(n)`` must be pure (same n, same distribution) and must
    return a distribution on exactly ``limit_alphabet`` for every
    ``n >= stabilization_index``.  Pair sequences use pair labels; their
    joint structure is recovered through the canonical coordinate variables.
    """

    limit_alphabet: Tuple[Label, ...]
    generator: Callable[[int], Mapping[Label, Fraction]]
    stabilization_index: int = 1

    def term(self, n: int) -> Dict[Label, Fraction]:
        if n < self.stabilization_index:
            raise ValueError(f"term index {n} below stabilization index {self.stabilization_index}")
        got = dict(self.generator(n))
        if set(got) != set(self.limit_alphabet):
            raise AlphabetMismatch(
                f"term {n} is supported on a different alphabet than the limit"
            )
        _check_weights(got, "sequence probability")
        return got


def _is_pair_alphabet(alphabet) -> bool:
    return all(isinstance(lab, tuple) and len(lab) == 2 for lab in alphabet) and len(alphabet) > 0


def _mi_of_joint(joint: Mapping[Label, Fraction], base: float) -> float:
    first, second = canonical_pair(joint)
    return mutual_information(first, second, base)


@dataclass(frozen=True)
class ConvergenceReport:
    """Finite-probe evidence for (or against) weak convergence.

    A finite tool cannot verify a limit; this records the pointwise
    deviation at the requested probe and at two geometric follow-ups, plus
    the induced entropy gaps (and mutual-information gaps for pair
    sequences).  ``passed`` means the deviation at the first probe is within
    tolerance and the deviations do not grow along the schedule.
    """

    probes: Tuple[int, ...]
    max_deviations: Tuple[float, ...]
    entropy_gaps: Tuple[float, ...]
    mi_gaps: Optional[Tuple[float, ...]]
    tolerance: float
    within_tolerance: bool
    monotone: bool

    @property
    def passed(self) -> bool:
        return self.within_tolerance and self.monotone


def check_weak_convergence(
    sequence: PmfSequence,
    limit: Mapping[Label, Fraction],
    tol: float,
    n_probe: int,
    base: float = DEFAULT_BASE,
) -> ConvergenceReport:
    """Probe a sequence against its claimed limit at n_probe, 2 n_probe and
    4 n_probe."""
    if n_probe < sequence.stabilization_index:
        raise ValueError("probe index below the sequence's stabilization index")
    limit = dict(limit)
    if set(limit) != set(sequence.limit_alphabet):
        raise AlphabetMismatch("limit distribution alphabet differs from the sequence's")
    _check_weights(limit, "limit probability")

    pairs = _is_pair_alphabet(sequence.limit_alphabet)
    limit_entropy = entropy(limit, base)
    limit_mi = _mi_of_joint(limit, base) if pairs else None

    probes = (n_probe, 2 * n_probe, 4 * n_probe)
    deviations, entropy_gaps, mi_gaps = [], [], []
    for n in probes:
        term = sequence.term(n)
        deviations.append(float(max(abs(term[lab] - limit[lab]) for lab in limit)))
        entropy_gaps.append(abs(entropy(term, base) - limit_entropy))
        if pairs:
            mi_gaps.append(abs(_mi_of_joint(term, base) - limit_mi))

    monotone = all(deviations[i + 1] <= deviations[i] for i in range(len(probes) - 1))
    return ConvergenceReport(
        probes=probes,
        max_deviations=tuple(deviations),
        entropy_gaps=tuple(entropy_gaps),
        mi_gaps=tuple(mi_gaps) if pairs else None,
        tolerance=tol,
        within_tolerance=deviations[0] <= tol,
        monotone=monotone,
    )
