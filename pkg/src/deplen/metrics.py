"""Dependency length measurement and aggregate cost.

Lengths come in two units.  Words: absolute difference of positions,
so adjacent words are at distance 1.  Characters: distance between
word centers, where a word of length lam has its center (lam+1)/2
characters into the word and adjacent words are separated by a single
space character.  Character values are half-integers; they are carried
as doubled integers ("half-units") so all arithmetic stays exact.

The aggregate cost of an arrangement is

    D = (n-1) * sum over d of p(d) * g(d)

with p(d) the proportion of dependencies at distance d, which equals
the plain edge-wise sum of g; both are computed and compared exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .costs import IDENTITY
from .errors import EmptyCorpusError, UnknownEdgeError
from .tree import DepTree, Linearization, Unit


def frac_str(value) -> str:
    """Render a rational as 'p/q' (or a plain integer string)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def frac_dec(value) -> str:
    """Decimal convenience rendering of a rational (shortest float repr)."""
    value = Fraction(value)
    return repr(value.numerator / value.denominator)


def word_centers(tree: DepTree, lin: Linearization) -> dict[int, int]:
    """Center of every word in half-character units.

    The word at linear position k starts at character
    1 + sum(lam_j + 1 for the words j before it) and its center sits
    (lam+1)/2 - 1 characters further right.  Returned values are the
    centers doubled, so they are always integers.
    """
    centers = {}
    start = 1
    for t in lin.seq:
        lam = tree.token(t).char_length
        centers[t] = 2 * start + lam - 1
        start += lam + 1
    return centers


def _edge_halves(tree, lin, unit):
    """Per-edge lengths in half-units, ordered like tree.edges."""
    if unit is Unit.WORDS:
        pos = lin.positions()
        return [2 * abs(pos[h] - pos[d]) for h, d in tree.edges]
    centers = word_centers(tree, lin)
    return [abs(centers[h] - centers[d]) for h, d in tree.edges]


@dataclass(frozen=True)
class EdgeLength:
    """One measured dependency: (head, dep) and its length."""

    head: int
    dep: int
    unit: Unit
    halves: int  # doubled length, exact

    @property
    def length(self) -> Fraction:
        return Fraction(self.halves, 2)


def edge_length(tree, lin, edge, unit: Unit = Unit.WORDS) -> EdgeLength:
    """Length of a single edge of the tree under the given order."""
    h, d = edge
    if (h, d) not in tree.edge_set:
        raise UnknownEdgeError("(%s, %s) is not an edge of the tree" % (h, d))
    if unit is Unit.WORDS:
        halves = 2 * abs(lin.position(h) - lin.position(d))
    else:
        centers = word_centers(tree, lin)
        halves = abs(centers[h] - centers[d])
    return EdgeLength(h, d, unit, halves)


def sum_lengths(tree, lin, unit: Unit = Unit.WORDS) -> Fraction:
    """Total dependency length of the arrangement."""
    return Fraction(sum(_edge_halves(tree, lin, unit)), 2)


@dataclass(frozen=True)
class LengthHistogram:
    """Counts of dependencies by words-unit distance."""

    counts: dict[int, int]
    total_edges: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.total_edges:
            raise ValueError("histogram counts do not sum to total_edges")

    def proportions(self) -> dict[int, Fraction]:
        """p(d): exact proportion of dependencies at each distance."""
        return {
            d: Fraction(c, self.total_edges)
            for d, c in sorted(self.counts.items())
        }

    def to_csv(self) -> str:
        lines = ["d,count,p"]
        for d, c in sorted(self.counts.items()):
            lines.append(
                "%d,%d,%s" % (d, c, frac_dec(Fraction(c, self.total_edges)))
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self):
        return {
            "counts": {str(d): c for d, c in sorted(self.counts.items())},
            "total_edges": self.total_edges,
        }


def length_histogram(items, unit: Unit = Unit.WORDS) -> LengthHistogram:
    """Histogram of words-unit distances over (tree, linearization) pairs."""
    if unit is not Unit.WORDS:
        raise ValueError("length histograms are defined for the words unit")
    counts = Counter()
    for tree, lin in items:
        pos = lin.positions()
        for h, d in tree.edges:
            counts[abs(pos[h] - pos[d])] += 1
    total = sum(counts.values())
    if total == 0:
        raise EmptyCorpusError("no dependencies to count")
    return LengthHistogram(dict(counts), total)


@dataclass(frozen=True)
class CostReport:
    """Cost of one arrangement: total length and aggregate cost D."""

    n: int
    unit: Unit
    sum_lengths: Fraction
    D: Fraction
    histogram: LengthHistogram | None

    def to_json_dict(self):
        return {
            "n": self.n,
            "unit": self.unit.value,
            "sum_lengths": frac_str(self.sum_lengths),
            "sum_lengths_dec": frac_dec(self.sum_lengths),
            "D": frac_str(self.D),
            "D_dec": frac_dec(self.D),
            "histogram": (
                self.histogram.to_json_dict() if self.histogram else None
            ),
        }


def cost_D(tree, lin, g=None, unit: Unit = Unit.WORDS) -> CostReport:
    """Aggregate cost of an arrangement under a per-distance cost g.

    Computes D = (n-1) * sum_d p(d) g(d) from the distance proportions
    and checks it against the direct edge-wise sum; with exact
    arithmetic the two must agree.
    """
    if g is None:
        g = IDENTITY
    halves = _edge_halves(tree, lin, unit)
    m = len(halves)
    if m == 0:
        empty = LengthHistogram({}, 0) if unit is Unit.WORDS else None
        return CostReport(tree.n, unit, Fraction(0), Fraction(0), empty)

    distances = [Fraction(h, 2) for h in halves]
    direct = sum((g(d) for d in distances), Fraction(0))
    grouped = Counter(distances)
    D = Fraction(m) * sum(
        (Fraction(c, m) * g(d) for d, c in grouped.items()), Fraction(0)
    )
    if D != direct:
        raise AssertionError(
            "grouped cost %s differs from edge-wise sum %s" % (D, direct)
        )
    histogram = None
    if unit is Unit.WORDS:
        histogram = LengthHistogram(
            {int(d): c for d, c in grouped.items()}, m
        )
    total = Fraction(sum(halves), 2)
    return CostReport(tree.n, unit, total, D, histogram)


def generalized_cost(tree, lin, g3, unit: Unit = Unit.WORDS) -> Fraction:
    """Sum of g3(head_token, dep_token, distance) over the edges."""
    halves = _edge_halves(tree, lin, unit)
    total = Fraction(0)
    for (h, d), hv in zip(tree.edges, halves):
        total += g3(tree.token(h), tree.token(d), Fraction(hv, 2))
    return total
