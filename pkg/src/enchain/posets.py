"""Finite posets on the label set {1, ..., n} and order-theoretic enumeration.

A poset is stored as its full strict order relation, transitively closed;
cover relations are derived on demand because membership tests dominate.
Instances are immutable and hashable, safe to share between threads.

A poset is *naturally labeled* when i < j as integers whenever i precedes j
in the order.  Operations on enriched partitions require natural labeling;
everything else accepts any labeling.  Every poset offers a companion
relabeling (its lexicographically smallest linear extension) so callers can
canonicalize, which is harmless for the quantities computed here since they
depend only on the comparability graph.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import CycleDetected, LabelOutOfRange, NotAnIdeal, SizeLimit

LINEAR_EXTENSION_GUARD = 10


class Poset:
    __slots__ = ("n", "pairs", "_below", "_above", "_covers")

    def __init__(self, n, pairs):
        """Trusted constructor: `pairs` must already be a strict partial
        order (irreflexive, antisymmetric, transitively closed).  Use
        poset_from_covers() for unvalidated input."""
        self.n = n
        self.pairs = frozenset(pairs)
        below = [0] * (n + 1)
        above = [0] * (n + 1)
        for a, b in self.pairs:
            below[b] |= 1 << a
            above[a] |= 1 << b
        self._below = tuple(below)
        self._above = tuple(above)
        self._covers = None

    def less(self, a, b):
        return (a, b) in self.pairs

    def comparable(self, a, b):
        return (a, b) in self.pairs or (b, a) in self.pairs

    @property
    def naturally_labeled(self):
        return all(a < b for a, b in self.pairs)

    def elements(self):
        return range(1, self.n + 1)

    def below_mask(self, b):
        return self._below[b]

    def covers(self):
        """Cover pairs (a, b): a precedes b with nothing in between."""
        if self._covers is None:
            covs = []
            for a, b in self.pairs:
                if not (self._above[a] & self._below[b]):
                    covs.append((a, b))
            self._covers = tuple(sorted(covs))
        return self._covers

    def lower_covers(self, b):
        return [a for a, b2 in self.covers() if b2 == b]

    def minimal_elements(self):
        return [i for i in self.elements() if not self._below[i]]

    def topological_order(self):
        """Lexicographically smallest linear extension, computed greedily."""
        if self.naturally_labeled:
            return tuple(self.elements())
        placed = 0
        order = []
        remaining = set(self.elements())
        while remaining:
            e = min(i for i in remaining if self._below[i] & ~placed == 0)
            order.append(e)
            placed |= 1 << e
            remaining.remove(e)
        return tuple(order)

    @property
    def natural_relabeling(self):
        """A linear extension to relabel by; identity iff already natural."""
        return self.topological_order()

    def relabeled(self, pi):
        """Relabel so the element pi[k-1] receives the new label k."""
        if sorted(pi) != list(self.elements()):
            raise ValueError(f"not a permutation of 1..{self.n}: {pi}")
        pos = {old: new + 1 for new, old in enumerate(pi)}
        return Poset(self.n, {(pos[a], pos[b]) for a, b in self.pairs})

    def canonicalized(self):
        """Naturally labeled copy via the companion relabeling."""
        if self.naturally_labeled:
            return self
        return self.relabeled(self.natural_relabeling)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash((self.n, self.pairs))

    def __repr__(self):
        return f"Poset({self.n}, {sorted(self.pairs)})"


def poset_from_covers(n, covers):
    """Build a poset from cover (or any acyclic relation) pairs.

    Labels are validated against 1..n, the transitive closure is computed,
    and acyclicity is verified.  The result carries a naturally_labeled
    flag and a companion relabeling (a linear extension) for callers that
    need to canonicalize.
    """
    if n < 1:
        raise LabelOutOfRange(f"poset must have at least one element, got n={n}")
    above = [0] * (n + 1)
    for a, b in covers:
        if not (1 <= a <= n and 1 <= b <= n):
            raise LabelOutOfRange(f"label outside 1..{n} in cover ({a}, {b})")
        if a == b:
            raise CycleDetected(f"relation {a} < {a} is a cycle")
        above[a] |= 1 << b
    # Warshall closure on the above-masks.
    for k in range(1, n + 1):
        bit = 1 << k
        for i in range(1, n + 1):
            if above[i] & bit:
                above[i] |= above[k]
    for i in range(1, n + 1):
        if above[i] & (1 << i):
            raise CycleDetected(f"element {i} precedes itself after closure")
    pairs = {
        (a, b) for a in range(1, n + 1) for b in range(1, n + 1) if above[a] >> b & 1
    }
    return Poset(n, pairs)


def antichains(poset):
    """Every antichain of the poset, the empty one included, sorted by
    size then lexicographically.  Antichains are exactly the independent
    sets of the comparability graph."""
    n = poset.n
    comp = [0] * (n + 1)
    for a, b in poset.pairs:
        comp[a] |= 1 << b
        comp[b] |= 1 << a
    out = []

    def extend(prefix, start, excluded):
        out.append(tuple(prefix))
        for j in range(start, n + 1):
            if not excluded >> j & 1:
                prefix.append(j)
                extend(prefix, j + 1, excluded | comp[j])
                prefix.pop()

    extend([], 1, 0)
    out.sort(key=lambda a: (len(a), a))
    return out


def maximal_chains(poset):
    """Every maximal chain, each listed bottom to top, exactly once."""
    uppers = {i: [] for i in poset.elements()}
    for a, b in poset.covers():
        uppers[a].append(b)
    for ups in uppers.values():
        ups.sort()
    chains = []

    def walk(chain):
        top = chain[-1]
        if not uppers[top]:
            chains.append(tuple(chain))
            return
        for nxt in uppers[top]:
            chain.append(nxt)
            walk(chain)
            chain.pop()

    for start in sorted(poset.minimal_elements()):
        walk([start])
    return chains


def linear_extensions(poset, max_n=LINEAR_EXTENSION_GUARD):
    """All linear extensions as permutations of 1..n, lexicographically."""
    n = poset.n
    if n > max_n:
        raise SizeLimit(f"linear extension enumeration guarded at n <= {max_n}")
    below = poset._below
    out = []
    perm = []

    def backtrack(placed, remaining):
        if not remaining:
            out.append(tuple(perm))
            return
        for e in sorted(remaining):
            if below[e] & ~placed == 0:
                perm.append(e)
                backtrack(placed | 1 << e, remaining - {e})
                perm.pop()

    backtrack(0, set(poset.elements()))
    return out


@dataclass(frozen=True)
class PosetIdeal:
    """A down-closed subset together with its antichain of maxima."""

    elements: frozenset
    max_elements: tuple

    def __le__(self, other):
        return self.elements <= other.elements


def _down_closure(poset, subset):
    mask = 0
    for e in subset:
        mask |= 1 << e
        mask |= poset.below_mask(e)
    return frozenset(i for i in poset.elements() if mask >> i & 1)


def _max_of(poset, subset):
    return tuple(sorted(e for e in subset if not any(poset.less(e, f) for f in subset)))


def make_ideal(poset, elements):
    elements = frozenset(elements)
    for e in elements:
        for i in poset.elements():
            if poset.less(i, e) and i not in elements:
                raise NotAnIdeal(f"{sorted(elements)} is not down-closed ({i} < {e})")
    return PosetIdeal(elements, _max_of(poset, elements))


def ideal_lattice(poset):
    """All poset ideals (one per antichain of maxima), with union and
    intersection closure verified."""
    ideals = []
    for a in antichains(poset):
        ideals.append(PosetIdeal(_down_closure(poset, a), a))
    seen = {i.elements for i in ideals}
    for i, j in combinations(ideals, 2):
        if i.elements | j.elements not in seen or i.elements & j.elements not in seen:
            raise NotAnIdeal("ideal family not closed under union/intersection")
    ideals.sort(key=lambda i: (len(i.elements), tuple(sorted(i.elements))))
    return ideals


def star(poset, ideal_i, ideal_j):
    """The ideal generated by max(I cap J) restricted to max(I) cup max(J)."""
    if not isinstance(ideal_i, PosetIdeal):
        ideal_i = make_ideal(poset, ideal_i)
    if not isinstance(ideal_j, PosetIdeal):
        ideal_j = make_ideal(poset, ideal_j)
    meet = ideal_i.elements & ideal_j.elements
    generators = set(_max_of(poset, meet)) & (
        set(ideal_i.max_elements) | set(ideal_j.max_elements)
    )
    elements = _down_closure(poset, generators)
    return PosetIdeal(elements, _max_of(poset, elements))


@dataclass(frozen=True)
class PosetPredicates:
    comparability_edges: tuple
    width: int
    narrow: bool


def poset_predicates(poset):
    """Comparability graph, exact width (maximum antichain size), and the
    narrow flag (width <= 2, i.e. coverable by two chains)."""
    edges = tuple(sorted({(min(a, b), max(a, b)) for a, b in poset.pairs}))
    width = max(len(a) for a in antichains(poset))
    return PosetPredicates(edges, width, width <= 2)


@lru_cache(maxsize=None)
def all_natural_posets(n):
    """Every naturally labeled poset on 1..n (every strict order relation
    contained in the natural total order), deterministically ordered.

    Enumerates bitmasks over the C(n,2) increasing pairs and keeps the
    transitively closed ones; feasible through n = 6 (32768 masks)."""
    pair_list = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    posets = []
    for mask in range(1 << len(pair_list)):
        above = [0] * (n + 1)
        chosen = []
        for bit, (i, j) in enumerate(pair_list):
            if mask >> bit & 1:
                above[i] |= 1 << j
                chosen.append((i, j))
        if all(above[j] & ~above[i] == 0 for i, j in chosen):
            posets.append(Poset(n, chosen))
    return tuple(posets)


def comparability_orientations(poset):
    """All posets on the same label set whose comparability graph equals
    this poset's, obtained by reorienting its edges and keeping the
    orientations that are already transitively closed."""
    edges = [e for e in poset_predicates(poset).comparability_edges]
    results = []
    for mask in range(1 << len(edges)):
        rel = set()
        for bit, (a, b) in enumerate(edges):
            rel.add((a, b) if not mask >> bit & 1 else (b, a))
        closed = all(
            (a, d) in rel for a, b in rel for c, d in rel if b == c
        )
        if closed:
            results.append(Poset(poset.n, rel))
    return results
