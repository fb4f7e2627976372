"""Dependency trees and linear arrangements of their tokens.

A sentence is a rooted tree over tokens 1..n.  The head map sends every
token index to the index of its head, with 0 standing for the root.  A
Linearization assigns the tokens to positions 1..n; the order the tokens
came in (index order) is the observed one.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import CycleError, DisconnectedError, MultiRootError

ROOT = 0  # head value marking the root token


class Unit(Enum):
    """Length unit for dependency distances."""

    WORDS = "words"
    CHARACTERS = "chars"


def char_count(form: str) -> int:
    """Number of characters of a form after NFC normalization."""
    return len(unicodedata.normalize("NFC", form))


@dataclass(frozen=True)
class Token:
    """A word: 1-based index in the given order, surface form, length.

    char_length defaults to the NFC character count of the form.
    Synthetic tokens may use an empty form with an explicit char_length.
    """

    index: int
    form: str
    char_length: int | None = None

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("token index must be >= 1, got %d" % self.index)
        if self.char_length is None:
            if not self.form:
                raise ValueError("empty form requires an explicit char_length")
            object.__setattr__(self, "char_length", char_count(self.form))
        else:
            if self.char_length < 1:
                raise ValueError("char_length must be >= 1")
            if self.form and self.char_length != char_count(self.form):
                raise ValueError(
                    "char_length %d disagrees with form %r"
                    % (self.char_length, self.form)
                )


class DepTree:
    """Immutable rooted dependency tree over tokens 1..n."""

    def __init__(self, tokens, heads):
        tokens = tuple(sorted(tokens, key=lambda t: t.index))
        if not tokens:
            raise ValueError("a tree needs at least one token")
        n = len(tokens)
        if [t.index for t in tokens] != list(range(1, n + 1)):
            raise ValueError("token indices must be exactly 1..n")
        try:
            heads = {i: int(heads[i]) for i in range(1, n + 1)}
        except KeyError as e:
            raise ValueError("no head given for token %s" % e) from e

        roots = [i for i, h in heads.items() if h == ROOT]
        if len(roots) != 1:
            raise MultiRootError(
                "expected exactly one root, found %d" % len(roots)
            )
        for i, h in heads.items():
            if h == i:
                raise CycleError("token %d is its own head" % i)
            if h != ROOT and not 1 <= h <= n:
                raise DisconnectedError(
                    "token %d names head %d, outside 1..%d" % (i, h, n)
                )

        # Every token must reach the root by following heads.  With one
        # root and all head targets in range, the only failure mode left
        # is a cycle.
        state = {}  # 1 = on current path, 2 = known good
        for start in range(1, n + 1):
            path = []
            v = start
            while v != ROOT and state.get(v) != 2:
                if state.get(v) == 1:
                    raise CycleError("cycle through token %d" % v)
                state[v] = 1
                path.append(v)
                v = heads[v]
            for u in path:
                state[u] = 2

        self._tokens = tokens
        self._heads = heads
        self.root = roots[0]

    @property
    def tokens(self) -> tuple[Token, ...]:
        return self._tokens

    @property
    def heads(self) -> dict[int, int]:
        return dict(self._heads)

    @property
    def n(self) -> int:
        return len(self._tokens)

    def token(self, index: int) -> Token:
        return self._tokens[index - 1]

    def head_of(self, index: int) -> int:
        return self._heads[index]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """(head, dependent) pairs, ordered by dependent index."""
        return tuple(
            (self._heads[d], d) for d in range(1, self.n + 1) if d != self.root
        )

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def _children(self) -> dict[int, tuple[int, ...]]:
        out = {i: [] for i in range(1, self.n + 1)}
        for h, d in self.edges:
            out[h].append(d)
        return {i: tuple(v) for i, v in out.items()}

    def children(self, index: int) -> tuple[int, ...]:
        return self._children[index]

    @cached_property
    def _descendants(self) -> dict[int, frozenset[int]]:
        out = {}

        def walk(v):
            acc = set()
            for c in self._children[v]:
                acc.add(c)
                acc |= walk(c)
            out[v] = frozenset(acc)
            return out[v]

        walk(self.root)
        return out

    def descendants(self, index: int) -> frozenset[int]:
        """Proper descendants of a token (the token itself excluded)."""
        return self._descendants[index]

    def subtree_size(self, index: int) -> int:
        return len(self._descendants[index]) + 1

    def identity_linearization(self) -> "Linearization":
        return Linearization(tuple(range(1, self.n + 1)))


def build_tree(tokens, heads) -> DepTree:
    """Validate tokens plus a head map and return the tree."""
    return DepTree(tokens, heads)


@dataclass(frozen=True)
class Linearization:
    """A linear order: seq[p-1] is the token index at position p."""

    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.seq)
        object.__setattr__(self, "seq", seq)
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise ValueError("sequence is not a permutation of 1..n")

    @classmethod
    def identity(cls, n: int) -> "Linearization":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_positions(cls, positions: dict[int, int]) -> "Linearization":
        seq = tuple(t for t, _ in sorted(positions.items(), key=lambda kv: kv[1]))
        return cls(seq)

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {t: p for p, t in enumerate(self.seq, start=1)}

    @property
    def n(self) -> int:
        return len(self.seq)

    def position(self, token: int) -> int:
        return self._pos[token]

    def positions(self) -> dict[int, int]:
        return dict(self._pos)

    def reverse(self) -> "Linearization":
        return Linearization(tuple(reversed(self.seq)))


def is_projective(tree: DepTree, lin: Linearization) -> bool:
    """True iff every edge spans only descendants of its head.

    For each edge (h, d), any token strictly between h and d in the
    linear order must lie in h's subtree.
    """
    pos = lin.positions()
    for h, d in tree.edges:
        lo, hi = sorted((pos[h], pos[d]))
        inside = tree.descendants(h)
        for p in range(lo + 1, hi):
            t = lin.seq[p - 1]
            if t != h and t not in inside:
                return False
    return True


def random_tree(n: int, rng, char_length: int = 1) -> DepTree:
    """Uniform random rooted tree on n labeled tokens.

    Draws a random root and a random parent array, rejecting draws that
    contain cycles, so every rooted labeled tree is equally likely.
    Tokens are synthetic, all with the given char_length.
    """
    tokens = [Token(i, "", char_length) for i in range(1, n + 1)]
    if n == 1:
        return build_tree(tokens, {1: ROOT})
    while True:
        root = rng.randrange(1, n + 1)
        heads = {root: ROOT}
        for i in range(1, n + 1):
            if i == root:
                continue
            h = rng.randrange(1, n)
            heads[i] = h if h < i else h + 1
        try:
            return build_tree(tokens, heads)
        except CycleError:
            continue
