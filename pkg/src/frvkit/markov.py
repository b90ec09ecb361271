"""Markov triangles: mediator verification and search, residual diagnostics,
and guaranteed triangle generation.

A triple (X, Y, Z) on a shared space is a Markov triangle when some
mediator function h: Z-alphabet x X-alphabet -> Y-alphabet satisfies

    P(z | x) = P(z | h(z, x)) * P(h(z, x) | x)

at every cell, in exact arithmetic.  The right-hand side constrains each
cell independently of the others, so search reduces to per-cell candidate
sets: a mediator exists iff every cell's candidate set is nonempty, and the
lexicographically least candidate per cell gives a canonical witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

from .core import FiniteRandomVariable, canonical_product
from .constructions import relabel
from .errors import AlphabetMismatch, DomainMismatch
from .generators import random_bijection, random_function, random_pair, random_triple
from .labels import Label, label_key, label_text
from .measures import (
    DEFAULT_BASE,
    ConditionalKernel,
    conditional_entropy,
    conditional_kernel,
    mutual_information,
)

FAMILIES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class Triple:
    """Three variables on one shared space, with cached conditional kernels."""

    x: FiniteRandomVariable
    y: FiniteRandomVariable
    z: FiniteRandomVariable

    def __post_init__(self):
        if self.x.space != self.y.space or self.y.space != self.z.space:
            raise DomainMismatch("triple components must share one sample space")

    @cached_property
    def y_given_x(self) -> ConditionalKernel:
        return conditional_kernel(self.x, self.y)

    @cached_property
    def z_given_y(self) -> ConditionalKernel:
        return conditional_kernel(self.y, self.z)

    @cached_property
    def z_given_x(self) -> ConditionalKernel:
        return conditional_kernel(self.x, self.z)


@dataclass(frozen=True)
class MediatorFunction:
    """A table (z, x) -> y certifying the triangle equation cell by cell."""

    table: Dict[Tuple[Label, Label], Label]

    def __call__(self, z: Label, x: Label) -> Label:
        return self.table[(z, x)]


def _check_mediator_shape(t: Triple, h: MediatorFunction) -> None:
    cells = {(z, x) for z in t.z.alphabet for x in t.x.alphabet}
    if set(h.table) != cells:
        raise AlphabetMismatch("mediator table is not total on Z-alphabet x X-alphabet")
    y_labels = set(t.y.alphabet)
    for (z, x), y in h.table.items():
        if y not in y_labels:
            raise AlphabetMismatch(
                f"mediator value {label_text(y)} at ({label_text(z)}, {label_text(x)}) "
                "is not a label of the middle variable"
            )


def verify_mediator(t: Triple, h: MediatorFunction) -> bool:
    """True iff the defining equation holds at every cell, exactly."""
    _check_mediator_shape(t, h)
    for (z, x), y in h.table.items():
        if t.z_given_x.prob(z, x) != t.z_given_y.prob(z, y) * t.y_given_x.prob(y, x):
            return False
    return True


def mediator_candidates(t: Triple) -> Dict[Tuple[Label, Label], List[Label]]:
    """Per-cell candidate sets C(z, x) = {y : P(z|y) P(y|x) = P(z|x)}.

    For any x of zero mass both sides vanish for every y, so the whole
    Y-alphabet is a candidate set there.
    """
    ys = sorted(t.y.alphabet, key=label_key)
    out: Dict[Tuple[Label, Label], List[Label]] = {}
    for z in sorted(t.z.alphabet, key=label_key):
        for x in sorted(t.x.alphabet, key=label_key):
            want = t.z_given_x.prob(z, x)
            out[(z, x)] = [
                y for y in ys
                if t.z_given_y.prob(z, y) * t.y_given_x.prob(y, x) == want
            ]
    return out


def find_mediator(t: Triple) -> Optional[MediatorFunction]:
    """A canonical mediator if one exists, else ``None``.

    Cost is one exact product per (z, x, y) cell combination.  The returned
    table takes the least admissible y in every cell, so repeated runs agree
    bit for bit.
    """
    table: Dict[Tuple[Label, Label], Label] = {}
    for cell, candidates in mediator_candidates(t).items():
        if not candidates:
            return None
        table[cell] = candidates[0]
    return MediatorFunction(table)


def is_markov_triangle(t: Triple) -> bool:
    return find_mediator(t) is not None


def weak_functoriality_residual(t: Triple, base: float = DEFAULT_BASE) -> float:
    """I(X,Z) - I(X,Y) - I(Y,Z) + I(Y,Y); within 1e-9 of zero on Markov
    triangles, and a useful diagnostic signal on arbitrary triples."""
    return (
        mutual_information(t.x, t.z, base)
        - mutual_information(t.x, t.y, base)
        - mutual_information(t.y, t.z, base)
        + mutual_information(t.y, t.y, base)
    )


def chain_rule_residual(t: Triple, base: float = DEFAULT_BASE) -> float:
    """H(Z|X) - H(Z|Y) - H(Y|X); conditional entropy composes additively
    over Markov triangles, so this vanishes there."""
    return (
        conditional_entropy(t.x, t.z, base)
        - conditional_entropy(t.y, t.z, base)
        - conditional_entropy(t.x, t.y, base)
    )


def compose_function(x: FiniteRandomVariable, mapping: Dict[Label, Label]) -> FiniteRandomVariable:
    """The variable omega -> mapping(x(omega)); its alphabet is the image."""
    return FiniteRandomVariable(
        x.space, {w: mapping[lab] for w, lab in x.assignment.items()}
    )


def generate_markov_triangle(
    seed: int,
    max_alphabet: int = 4,
    max_outcomes: int = 8,
    max_denominator: int = 24,
    family: Optional[str] = None,
    rejection: bool = False,
) -> Triple:
    """A seeded triple guaranteed to be a Markov triangle.

    Triangles come from four constructive recipes over a random base pair
    (X, Y):

    - ``a``: (X, pairing of X and Y, Y)
    - ``b``: (X, f o X, Y) for a random bijective relabeling f
    - ``c``: (X, Y, g o Y) for a random bijective relabeling g
    - ``d``: a deterministic chain X -> phi o X -> psi o phi o X for random
      functions phi, psi

    With ``rejection=True`` the constructive recipes are bypassed and random
    triples (alphabets capped at three for tractable hit rates) are drawn
    until one happens to admit a mediator; that mode is slower and biased
    toward small alphabets, and is intended only for exploring the landscape
    of accidental triangles.  Every result is re-validated by
    :func:`find_mediator` before return.
    """
    rng = random.Random(seed)
    if rejection:
        for _ in range(10_000):
            sizes = (rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3))
            t = Triple(*random_triple(rng, sizes, max_outcomes, max_denominator))
            if find_mediator(t) is not None:
                return t
        raise RuntimeError("rejection sampling did not find a Markov triangle")

    kind = family if family is not None else rng.choice(FAMILIES)
    if kind not in FAMILIES:
        raise ValueError(f"unknown triangle family {kind!r}")
    x, y = random_pair(rng, max_alphabet, max_outcomes, max_denominator)
    if kind == "a":
        t = Triple(x, canonical_product(x, y), y)
    elif kind == "b":
        t = Triple(x, relabel(x, random_bijection(rng, x.alphabet, prefix="fx")), y)
    elif kind == "c":
        t = Triple(x, y, relabel(y, random_bijection(rng, y.alphabet, prefix="gy")))
    else:
        mid = compose_function(x, random_function(rng, x.alphabet, rng.randint(1, max_alphabet), prefix="p"))
        last = compose_function(mid, random_function(rng, mid.alphabet, rng.randint(1, max_alphabet), prefix="q"))
        t = Triple(x, mid, last)
    if find_mediator(t) is None:
        raise RuntimeError(f"generated family-{kind} triple failed mediator validation")
    return t
