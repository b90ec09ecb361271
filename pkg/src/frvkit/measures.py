"""Entropy-family measures: Shannon, joint, conditional entropy, and mutual
information.

Probabilities stay exact rationals right up to the logarithm; each term is
converted to a float once and the terms are accumulated in a normalized
order (ascending probability, then label) so that results are bit-identical
across runs, under relabelings, and under transposition of a joint table.
The ``0 * log 0 = 0`` convention is applied by skipping exact-zero entries
before any logarithm is taken, so no NaN can arise.

The logarithm base defaults to 2 (bits) and is a parameter everywhere; the
measures are only meaningful up to this common scale factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Tuple

from .core import FiniteRandomVariable, joint_table
from .errors import DomainMismatch, InvalidBase, NotAPmf
from .labels import Label, label_key

DEFAULT_BASE = 2.0


def _log_for_base(base: float) -> Callable[[float], float]:
    if not base > 1.0:
        raise InvalidBase(f"log base must be > 1, got {base!r}")
    if base == 2.0:
        return math.log2
    if base == 10.0:
        return math.log10
    if base == math.e:
        return math.log
    scale = math.log(base)
    return lambda value: math.log(value) / scale


def entropy(distribution: Mapping[Label, Fraction], base: float = DEFAULT_BASE) -> float:
    """Shannon entropy -sum p log(p) of an exact distribution, in units of
    log ``base``.  Always >= 0; exactly 0.0 for a point mass."""
    log = _log_for_base(base)
    total = Fraction(0)
    terms = []
    for label, mass in distribution.items():
        if mass < 0:
            raise NotAPmf(f"negative probability {mass}")
        total += mass
        if mass:
            terms.append((mass, label))
    if total != 1:
        raise NotAPmf(f"probabilities sum to {total}, expected exactly 1")
    terms.sort(key=lambda item: (item[0], label_key(item[1])))
    acc = 0.0
    for mass, _ in terms:
        value = float(mass)
        acc += value * log(value)
    return 0.0 - acc


def joint_entropy(
    x: FiniteRandomVariable, y: FiniteRandomVariable, base: float = DEFAULT_BASE
) -> float:
    """Entropy of the joint distribution of ``(x, y)``."""
    return entropy(joint_table(x, y).as_pmf(), base)


@dataclass(frozen=True)
class ConditionalKernel:
    """Row-stochastic table of conditional distributions.

    ``rows[x][y]`` is the exact probability of ``y`` given ``x``.  Rows sum
    to 1 where the conditioning label has positive mass, and are identically
    zero where it has zero mass (the zero-row convention).
    """

    given_alphabet: Tuple[Label, ...]
    out_alphabet: Tuple[Label, ...]
    rows: Dict[Label, Dict[Label, Fraction]]

    def __post_init__(self):
        if set(self.rows) != set(self.given_alphabet):
            raise NotAPmf("kernel rows do not cover the conditioning alphabet")
        for given, row in self.rows.items():
            if set(row) != set(self.out_alphabet):
                raise NotAPmf("kernel row does not cover the output alphabet")
            row_sum = sum(row.values())
            if row_sum not in (0, 1):
                raise NotAPmf(f"row for {given!r} sums to {row_sum}, expected 0 or 1")

    def prob(self, out: Label, given: Label) -> Fraction:
        return self.rows[given][out]

    def row(self, given: Label) -> Dict[Label, Fraction]:
        return dict(self.rows[given])


def conditional_kernel(
    given: FiniteRandomVariable, target: FiniteRandomVariable
) -> ConditionalKernel:
    """Conditional distribution of ``target`` given each value of ``given``:
    joint cell divided by the conditioning mass, zero row at zero mass."""
    table = joint_table(given, target)
    masses = given.pmf
    rows: Dict[Label, Dict[Label, Fraction]] = {}
    for x in given.alphabet:
        mass = masses[x]
        if mass:
            rows[x] = {y: table.cell(x, y) / mass for y in target.alphabet}
        else:
            rows[x] = {y: Fraction(0) for y in target.alphabet}
    return ConditionalKernel(given.alphabet, target.alphabet, rows)


def conditional_entropy(
    given: FiniteRandomVariable, target: FiniteRandomVariable, base: float = DEFAULT_BASE
) -> float:
    """H(target | given): mass-weighted entropy of the kernel rows."""
    if given.space != target.space:
        raise DomainMismatch("conditional entropy requires a shared space")
    kernel = conditional_kernel(given, target)
    masses = given.pmf
    acc = 0.0
    for x in sorted(given.alphabet, key=label_key):
        mass = masses[x]
        if mass:
            acc += float(mass) * entropy(kernel.rows[x], base)
    return acc + 0.0


def mutual_information(
    x: FiniteRandomVariable, y: FiniteRandomVariable, base: float = DEFAULT_BASE
) -> float:
    """H(x) + H(y) - H(x, y), evaluated in exactly that order.

    Keeping the evaluation order fixed makes results reproducible to the
    last bit; the normalized summation inside :func:`entropy` then makes the
    value symmetric in its arguments to the last bit as well.
    """
    return (entropy(x.pmf, base) + entropy(y.pmf, base)) - joint_entropy(x, y, base)
