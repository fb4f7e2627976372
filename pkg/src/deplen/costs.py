"""Cost functions over dependency distances, and optimal pairing.

All evaluation is exact: every g(d) is a Fraction.  The logarithmic
kind snaps log(1+d) to the nearest IEEE double once and embeds that
value exactly into the rationals, so downstream sums and comparisons
stay exact and reproducible.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations

from .errors import (
    DomainError,
    NonMonotoneError,
    SizeMismatchError,
    TooLargeError,
)

KINDS = ("identity", "power", "log", "table")


def _exact(value) -> Fraction:
    """Coerce to Fraction; floats are refused to keep arithmetic exact."""
    if isinstance(value, bool):
        raise TypeError("cannot use a bool as a number")
    if isinstance(value, float):
        raise TypeError(
            "floats are not exact; pass int, Fraction or a numeric string"
        )
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError("cannot convert %r to an exact rational" % (value,))


@dataclass(frozen=True)
class CostFunction:
    """A per-dependency cost g(d), strictly increasing in d.

    kind is one of 'identity', 'power', 'log', 'table'.  Tables are
    defined on integer d in 1..domain_max only; the analytic kinds are
    total on d > 0.  domain_max on an analytic kind only bounds the
    range over which monotonicity was checked at construction.
    """

    kind: str
    exponent: Fraction | None = None
    table: tuple[tuple[int, Fraction], ...] | None = None
    domain_max: int | None = None

    @cached_property
    def _table_map(self) -> dict[int, Fraction] | None:
        return dict(self.table) if self.table is not None else None

    def __call__(self, d) -> Fraction:
        d = Fraction(d)
        if d <= 0:
            raise DomainError("distance must be positive, got %s" % d)
        if self.kind == "identity":
            return d
        if self.kind == "power":
            if self.exponent.denominator == 1:
                return d ** int(self.exponent)
            return Fraction(float(d) ** float(self.exponent))
        if self.kind == "log":
            return Fraction(math.log1p(float(d)))
        # table
        if d.denominator != 1:
            raise DomainError("table costs are defined on integers only")
        value = self._table_map.get(int(d))
        if value is None:
            raise DomainError(
                "table has no cost for d=%d (domain 1..%d)"
                % (int(d), self.domain_max)
            )
        return value

    def spec(self) -> str:
        """Canonical spec string for reports."""
        if self.kind == "power":
            return "power:%s" % self.exponent
        if self.kind == "table":
            return "table[1..%d]" % self.domain_max
        return self.kind


def make_cost_function(
    kind: str,
    exponent=None,
    table=None,
    domain_max: int | None = None,
    allow_nonmonotone: bool = False,
) -> CostFunction:
    """Build and validate a cost function.

    Tables must cover integer distances 1..K consecutively and be
    strictly increasing unless allow_nonmonotone is set.
    """
    if kind not in KINDS:
        raise ValueError("unknown cost kind %r; expected one of %s" % (kind, ", ".join(KINDS)))
    if kind == "power":
        if exponent is None:
            raise ValueError("power cost needs an exponent")
        exponent = Fraction(exponent)
        if exponent <= 0:
            raise ValueError("power exponent must be > 0")
    elif exponent is not None:
        raise ValueError("%s cost takes no exponent" % kind)

    if kind == "table":
        if not table:
            raise ValueError("table cost needs at least one entry")
        entries = sorted((int(k), _exact(v)) for k, v in dict(table).items())
        keys = [k for k, _ in entries]
        if keys != list(range(1, len(keys) + 1)):
            raise ValueError("table keys must be exactly 1..%d" % len(keys))
        table = tuple(entries)
        domain_max = len(keys)
        if not allow_nonmonotone:
            for (d1, v1), (d2, v2) in zip(entries, entries[1:]):
                if v2 <= v1:
                    raise NonMonotoneError(
                        "table not strictly increasing at d=%d (%s -> %s)"
                        % (d2, v1, v2)
                    )
    elif table is not None:
        raise ValueError("%s cost takes no table" % kind)

    fn = CostFunction(kind, exponent, table, domain_max)
    if kind != "table" and domain_max is not None:
        if domain_max < 1:
            raise ValueError("domain_max must be >= 1")
        if not allow_nonmonotone:
            for d in range(1, domain_max):
                if fn(d + 1) <= fn(d):
                    raise NonMonotoneError(
                        "cost not strictly increasing at d=%d" % (d + 1)
                    )
    return fn


IDENTITY = make_cost_function("identity")


def cost_function_from_spec(text: str, allow_nonmonotone: bool = False) -> CostFunction:
    """Parse a command-line cost spec.

    Accepted forms: 'identity', 'log', 'power:A' with A a positive
    number like 2, 1.5 or 3/2, and 'table:PATH' naming a CSV file with
    columns d,cost.
    """
    text = text.strip()
    if text == "identity":
        return make_cost_function("identity")
    if text == "log":
        return make_cost_function("log")
    if text.startswith("power:"):
        raw = text[len("power:"):]
        try:
            exponent = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise ValueError("bad power exponent %r" % raw) from None
        return make_cost_function("power", exponent=exponent)
    if text.startswith("table:"):
        path = text[len("table:"):]
        table = _read_table_csv(path)
        return make_cost_function(
            "table", table=table, allow_nonmonotone=allow_nonmonotone
        )
    raise ValueError(
        "unknown cost spec %r; expected identity, power:A, log or table:PATH"
        % text
    )


def _read_table_csv(path: str) -> dict[int, Fraction]:
    table = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for row_no, row in enumerate(csv.reader(fh), start=1):
            if not row or not "".join(row).strip():
                continue
            if row_no == 1 and not row[0].strip().lstrip("-").isdigit():
                continue  # header
            if len(row) < 2:
                raise ValueError(
                    "%s row %d: expected columns d,cost" % (path, row_no)
                )
            table[int(row[0])] = Fraction(row[1].strip())
    if not table:
        raise ValueError("%s: empty cost table" % path)
    return table


@dataclass(frozen=True)
class PairingResult:
    """Outcome of pairing proportions with costs.

    assignment maps the 1-based rank in the given p sequence to the
    cost value paired with it; total is sum(p * paired cost).
    """

    assignment: dict[int, Fraction]
    total: Fraction


def optimal_pairing(p_values, g_values) -> PairingResult:
    """Pair proportions with costs to minimize sum(p * g).

    Sorts p descending and g ascending and pairs rank by rank, so the
    largest proportion takes the smallest cost.  Ties keep input order;
    any tie-break gives the same total.
    """
    p = [_exact(v) for v in p_values]
    g = [_exact(v) for v in g_values]
    if not p or len(p) != len(g):
        raise SizeMismatchError(
            "need two equally sized non-empty multisets, got %d and %d"
            % (len(p), len(g))
        )
    by_p_desc = sorted(range(len(p)), key=lambda i: p[i], reverse=True)
    g_asc = sorted(g)
    assignment = {}
    for i, value in zip(by_p_desc, g_asc):
        assignment[i + 1] = value
    total = sum((p[i - 1] * v for i, v in assignment.items()), Fraction(0))
    return PairingResult(assignment, total)


def verify_pairing_optimal(p_values, g_values) -> bool:
    """Check the rank pairing against every one of the m! assignments."""
    p = [_exact(v) for v in p_values]
    g = [_exact(v) for v in g_values]
    if not p or len(p) != len(g):
        raise SizeMismatchError(
            "need two equally sized non-empty multisets, got %d and %d"
            % (len(p), len(g))
        )
    if len(p) > 8:
        raise TooLargeError("exhaustive check is limited to m <= 8")
    best = min(
        sum((pi * gi for pi, gi in zip(p, perm)), Fraction(0))
        for perm in permutations(g)
    )
    return optimal_pairing(p, g).total == best
