"""Minimum linear arrangement searches over dependency trees.

brute_force_mla enumerates every permutation (n <= 10), optionally
filtered by precedence/contiguity constraints.  enumerate_projective
yields exactly the projective arrangements (n <= 12).  projective_mla
constructs an optimal projective arrangement directly for the words
unit with identity cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, permutations, product

from .costs import IDENTITY
from .errors import InfeasibleConstraintsError, TooLargeError
from .metrics import frac_dec, frac_str, sum_lengths, word_centers
from .tree import DepTree, Linearization, Unit

BRUTE_FORCE_MAX = 10
PROJECTIVE_ENUM_MAX = 12


@dataclass(frozen=True)
class PrecedenceConstraint:
    """Restrictions on admissible linear orders.

    pairs: (a, b) entries force token a before token b.
    blocks: groups of tokens; each group must occupy consecutive
    positions, and the groups appear in the given relative order.
    Tokens in no group are free to land anywhere that keeps the listed
    groups contiguous.
    """

    pairs: frozenset = frozenset()
    blocks: tuple = None

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", frozenset((int(a), int(b)) for a, b in self.pairs)
        )
        if self.blocks is not None:
            blocks = tuple(tuple(int(t) for t in b) for b in self.blocks)
            object.__setattr__(self, "blocks", blocks)
            seen = set()
            for b in blocks:
                if not b:
                    raise ValueError("empty block")
                for t in b:
                    if t in seen:
                        raise ValueError("token %d appears in two blocks" % t)
                    seen.add(t)

    def ordering_digraph(self) -> dict[int, set[int]]:
        """Token-level precedence edges implied by pairs and block order."""
        succ = {}
        for a, b in self.pairs:
            succ.setdefault(a, set()).add(b)
        if self.blocks:
            for i, bi in enumerate(self.blocks):
                for bj in self.blocks[i + 1:]:
                    for a in bi:
                        for b in bj:
                            succ.setdefault(a, set()).add(b)
        return succ

    def satisfied_by(self, pos: dict[int, int]) -> bool:
        for a, b in self.pairs:
            if pos[a] >= pos[b]:
                return False
        if self.blocks:
            prev_max = None
            for block in self.blocks:
                ps = [pos[t] for t in block]
                lo, hi = min(ps), max(ps)
                if hi - lo + 1 != len(block):
                    return False
                if prev_max is not None and lo < prev_max:
                    return False
                prev_max = hi
        return True


def _check_acyclic(constraint: PrecedenceConstraint):
    succ = constraint.ordering_digraph()
    state = {}

    def visit(v):
        state[v] = 1
        for w in succ.get(v, ()):
            s = state.get(w)
            if s == 1:
                raise InfeasibleConstraintsError(
                    "precedence constraints contain a cycle through token %d"
                    % w
                )
            if s is None:
                visit(w)
        state[v] = 2

    for v in list(succ):
        if state.get(v) is None:
            visit(v)


@dataclass(frozen=True)
class MlaResult:
    """Outcome of an arrangement search."""

    min_cost: Fraction
    optimal_orders: tuple
    searched: int

    @property
    def representative(self) -> Linearization:
        """Lexicographically smallest optimal order."""
        return self.optimal_orders[0]

    def to_json_dict(self):
        return {
            "min_cost": frac_str(self.min_cost),
            "min_cost_dec": frac_dec(self.min_cost),
            "optimal_count": len(self.optimal_orders),
            "representative": list(self.representative.seq),
            "searched": self.searched,
        }


def _words_cost_table(g, n):
    """g(d) for d = 1..n-1 scaled to integers by the common denominator."""
    values = [g(d) for d in range(1, n)]
    scale = math.lcm(*(v.denominator for v in values)) if values else 1
    table = [0] + [int(v * scale) for v in values]
    return table, scale


def brute_force_mla(tree, unit=Unit.WORDS, g=None, constraint=None) -> MlaResult:
    """Exact minimum over all (admissible) permutations.

    Guarded at n <= 10.  Returns the full set of optima, sorted so the
    lexicographically smallest order comes first.
    """
    n = tree.n
    if n > BRUTE_FORCE_MAX:
        raise TooLargeError(
            "brute force is limited to n <= %d, got n = %d"
            % (BRUTE_FORCE_MAX, n)
        )
    if g is None:
        g = IDENTITY
    if constraint is not None:
        _check_acyclic(constraint)

    edges = tree.edges
    lambdas = [0] + [t.char_length for t in tree.tokens]

    words = unit is Unit.WORDS
    if words:
        gtable, scale = _words_cost_table(g, n)
    elif g.kind == "identity":
        gcache = None
        scale = 2
    else:
        gcache = {}
        scale = 1

    best = None
    best_seqs = []
    searched = 0
    pos = [0] * (n + 1)  # token -> position, reused across permutations

    for seq in permutations(range(1, n + 1)):
        for p, t in enumerate(seq, start=1):
            pos[t] = p
        if constraint is not None:
            pdict = {t: pos[t] for t in range(1, n + 1)}
            if not constraint.satisfied_by(pdict):
                continue
        searched += 1
        if words:
            cost = 0
            for h, d in edges:
                cost += gtable[abs(pos[h] - pos[d])]
        else:
            # character unit: centers in half-units from the permuted lambdas
            centers = [0] * (n + 1)
            start = 1
            for t in seq:
                lam = lambdas[t]
                centers[t] = 2 * start + lam - 1
                start += lam + 1
            if gcache is None:  # identity: cost in half-units
                cost = 0
                for h, d in edges:
                    cost += abs(centers[h] - centers[d])
            else:
                cost = Fraction(0)
                for h, d in edges:
                    hv = abs(centers[h] - centers[d])
                    c = gcache.get(hv)
                    if c is None:
                        c = gcache[hv] = g(Fraction(hv, 2))
                    cost += c
        if best is None or cost < best:
            best = cost
            best_seqs = [seq]
        elif cost == best:
            best_seqs.append(seq)

    if searched == 0:
        raise InfeasibleConstraintsError(
            "no linear order satisfies the constraints"
        )
    if words or gcache is None:
        min_cost = Fraction(best, scale)
    else:
        min_cost = best
    orders = tuple(Linearization(s) for s in sorted(best_seqs))
    return MlaResult(min_cost, orders, searched)


def constrained_mla(tree, constraint, unit=Unit.WORDS, g=None) -> MlaResult:
    """Brute-force minimum restricted to constraint-satisfying orders."""
    if constraint is None:
        raise ValueError("constrained_mla needs a constraint")
    return brute_force_mla(tree, unit=unit, g=g, constraint=constraint)


def _subtree_seqs(tree, v):
    kids = tree.children(v)
    if not kids:
        return [(v,)]
    kid_seqs = {c: _subtree_seqs(tree, c) for c in kids}
    units = (v,) + kids
    out = []
    for perm in permutations(units):
        parts = [[(v,)] if u == v else kid_seqs[u] for u in perm]
        for combo in product(*parts):
            out.append(tuple(chain.from_iterable(combo)))
    return out


def enumerate_projective(tree):
    """Yield every projective arrangement of the tree exactly once.

    Every subtree occupies a contiguous span; at each node the head and
    its dependents' spans are interleaved in all possible orders.  The
    count is the product over nodes of (children + 1)!.  Guarded at
    n <= 12; note that degenerate trees can still make that count huge.
    """
    if tree.n > PROJECTIVE_ENUM_MAX:
        raise TooLargeError(
            "projective enumeration is limited to n <= %d, got n = %d"
            % (PROJECTIVE_ENUM_MAX, tree.n)
        )
    for seq in _subtree_seqs(tree, tree.root):
        yield Linearization(seq)


def _arrange(tree, v, parent_side):
    """Optimal block for v's subtree, head offset minimized toward the parent.

    Dependents' blocks go to alternating sides of the head in decreasing
    subtree-size order, the smallest nearest the head, and the side
    facing the parent receives the smaller total, which both minimizes
    the internal total length and keeps the head as close as possible
    to the block edge the parent connects through.
    """
    kids = sorted(
        tree.children(v), key=lambda c: (-tree.subtree_size(c), c)
    )
    odd = kids[0::2]   # larger half: 1st, 3rd, ... largest first
    even = kids[1::2]  # smaller half: 2nd, 4th, ...
    if parent_side == "left":
        left, right = even, odd
    else:  # parent to the right, or root
        left, right = odd, even
    # On each side the outermost block is the largest: left side keeps
    # decreasing order, the right side is mirrored.
    seq = []
    for c in left:
        seq.extend(_arrange(tree, c, "right"))
    seq.append(v)
    for c in reversed(right):
        seq.extend(_arrange(tree, c, "left"))
    return seq


def projective_mla(tree) -> MlaResult:
    """Optimal projective arrangement, words unit, identity cost.

    Constructive: no search.  The cost of the built arrangement is
    measured, not predicted, so the result is consistent with the
    metrics module by construction.
    """
    lin = Linearization(tuple(_arrange(tree, tree.root, None)))
    cost = sum_lengths(tree, lin, Unit.WORDS)
    return MlaResult(cost, (lin,), 1)
