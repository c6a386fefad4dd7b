"""Decorated permutations and the flag complex realizing the gamma vector.

A decorated permutation is a permutation with a bar after every left peak
position, each bar colored 0..3, so a permutation with k left peaks has
4^k decorations.  Within each block between bars the word decomposes as a
strictly decreasing part (the grave) followed by a strictly increasing
part (the acute); the split used everywhere is the shortest nonempty
decreasing prefix with increasing remainder, the one convention stable
under the merges below (see grave_acute).  A word that admits no such
split raises MalformedResult.

Removing bar i reorders the two adjacent blocks w_i w_{i+1} as
grave(w_i) + sort(acute(w_i) + w_{i+1}), uniformly for every block
including the first.  When the result's remaining bars no longer sit at
its left peaks (which happens whenever the first block's head is not the
minimum of the merged letters), the reduction raises MalformedResult
rather than silently re-barring, and sweeps report how often that
happens.

Vertices of the complex are the one-bar decorated linear extensions; two
vertices are adjacent exactly when splicing them yields a valid two-bar
decorated permutation mapping back to the pair under the face map; faces
are the cliques.  The face map phi sends a decorated permutation with k
bars to a k-set of vertices, one per bar.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import IdentityViolation, MalformedResult, SizeLimit
from .partitions import left_peak_positions, peak_polynomials
from .polynomials import IntPolynomial, kruskal_katona_check
from .posets import linear_extensions

COMPLEX_GUARD_N = 6
COLORS = range(4)


def grave_acute(block):
    """Split a block into its decreasing part and increasing part.

    The split is the shortest nonempty strictly decreasing prefix whose
    remainder is strictly increasing (the complement of the longest
    increasing suffix, with the first letter claimed when the whole block
    ascends).  Minimality matters: it is the unique convention stable
    under the bar-removal merge, because the merged-in letters always
    start below the decreasing part's last letter, so recomputing the
    split returns the same decreasing part."""
    if not block:
        return (), ()
    j = len(block) - 1
    while j > 0 and block[j - 1] < block[j]:
        j -= 1
    if j == 0:
        j = 1
    grave, acute = block[:j], block[j:]
    if any(a <= b for a, b in zip(grave, grave[1:])):
        raise MalformedResult(f"block {block} is not decreasing-then-increasing")
    return grave, acute


@dataclass(frozen=True)
class DecoratedPermutation:
    word: tuple
    bars: tuple  # ((position, color), ...), position = letters before the bar

    def __post_init__(self):
        positions = [p for p, _ in self.bars]
        if positions != left_peak_positions(self.word):
            raise MalformedResult(
                f"bars {positions} are not the left peaks of {self.word}"
            )
        if any(c not in COLORS for _, c in self.bars):
            raise MalformedResult(f"bar colors must lie in 0..3: {self.bars}")

    def blocks(self):
        cuts = [0] + [p for p, _ in self.bars] + [len(self.word)]
        return [self.word[a:b] for a, b in zip(cuts, cuts[1:])]

    def bar_count(self):
        return len(self.bars)

    def text(self):
        parts = []
        for block, bar in zip(self.blocks(), list(self.bars) + [None]):
            parts.append("".join(str(x) for x in block))
            if bar is not None:
                parts.append(f"|^{bar[1]} ")
        return "".join(parts).rstrip()

    def __lt__(self, other):
        return (self.word, self.bars) < (other.word, other.bars)


def decorate(word):
    """All 4^(left peak count) decorations of a permutation."""
    positions = left_peak_positions(word)
    return [
        DecoratedPermutation(tuple(word), tuple(zip(positions, colors)))
        for colors in product(COLORS, repeat=len(positions))
    ]


def cover_reduce(decorated, bar_index):
    """Remove the bar_index-th bar (1-based) and reorder the two blocks it
    separated; MalformedResult if the remaining bars miss a left peak of
    the new word."""
    if not 1 <= bar_index <= decorated.bar_count():
        raise ValueError(f"bar index {bar_index} out of range")
    blocks = decorated.blocks()
    i = bar_index - 1
    grave, acute = grave_acute(blocks[i])
    merged = grave + tuple(sorted(acute + blocks[i + 1]))
    word = sum(blocks[:i], ()) + merged + sum(blocks[i + 2 :], ())
    bars = decorated.bars[:i] + decorated.bars[i + 1 :]
    return DecoratedPermutation(word, bars)


def s_p(poset):
    """All decorated linear extensions."""
    out = []
    for w in linear_extensions(poset):
        out.extend(decorate(w))
    return out


def vertex_adjacent(u, v):
    """Adjacency of two one-bar decorated permutations: ordering them by
    increasing-prefix length (strictly; equal lengths are never adjacent),
    splice the first's prefix and decreasing run with the letters shared
    by its increasing rest and the second's prefix, then the second's
    tail.  The pair is adjacent when the composite is a valid two-bar
    decorated permutation whose face map returns exactly this pair, so an
    edge is precisely the image of a two-bar element."""
    if u.bar_count() != 1 or v.bar_count() != 1:
        raise ValueError("vertex adjacency is defined for one-bar elements")
    pu, cu = u.bars[0]
    pv, cv = v.bars[0]
    if pu == pv:
        return False
    if pu > pv:
        u, v, pu, cu, pv, cv = v, u, pv, cv, pu, cu
    u_grave, u_acute = grave_acute(u.word[pu:])
    v_grave, v_acute = grave_acute(v.word[pv:])
    bridge = tuple(sorted(set(u_acute) & set(v.word[:pv])))
    word = u.word[:pu] + u_grave + bridge + v_grave + v_acute
    if sorted(word) != list(range(1, len(u.word) + 1)):
        return False
    bars = ((pu, cu), (pu + len(u_grave) + len(bridge), cv))
    try:
        composite = DecoratedPermutation(word, bars)
    except MalformedResult:
        return False
    return phi_face_map(composite) == [u, v]


def _clique_counts(adj, vertex_count, max_size):
    """Number of cliques of each size up to max_size (size 0 counts the
    empty clique)."""
    counts = [0] * (max_size + 1)
    counts[0] = 1

    def extend(size, candidates, start):
        if size == max_size:
            return
        v = start
        while v < vertex_count:
            if candidates >> v & 1:
                counts[size + 1] += 1
                extend(size + 1, candidates & adj[v], v + 1)
            v += 1

    full = (1 << vertex_count) - 1
    extend(0, full, 0)
    return counts


@dataclass(frozen=True)
class GammaComplex:
    vertices: tuple  # one-bar DecoratedPermutation, sorted
    edges: tuple  # index pairs into vertices
    f_vector: tuple  # (1, f_0, f_1, ...) by face size
    f_polynomial: IntPolynomial
    kruskal_katona: bool


def build_complex(poset, max_n=COMPLEX_GUARD_N):
    """The flag complex on one-bar decorated linear extensions, with its
    f-polynomial checked against the left peak polynomial evaluated at 4x
    (vertices differing only in bar color are distinct, which accounts for
    the factor 4^size on each face)."""
    n = poset.n
    if n > max_n:
        raise SizeLimit(f"complex construction guarded at n <= {max_n}")
    extensions = linear_extensions(poset)
    underlying = []
    for w in extensions:
        peaks = left_peak_positions(w)
        if len(peaks) == 1:
            underlying.append(DecoratedPermutation(w, ((peaks[0], 0),)))
    underlying.sort()

    m = len(underlying)
    adj = [0] * m
    for a, b in combinations(range(m), 2):
        if vertex_adjacent(underlying[a], underlying[b]):
            adj[a] |= 1 << b
            adj[b] |= 1 << a

    gamma_length = n // 2 + 1  # face sizes run 0 .. n//2
    plain = _clique_counts(adj, m, gamma_length)
    overflow = plain[gamma_length]
    f_vector = tuple(plain[k] * 4**k for k in range(gamma_length))
    f_polynomial = IntPolynomial(f_vector)

    expected = peak_polynomials(poset).left_peak.scale_powers(4)
    if overflow or f_polynomial != expected:
        raise IdentityViolation(
            f"f-polynomial {f_polynomial!r} != scaled left peak polynomial "
            f"{expected!r} (faces beyond gamma length: {overflow})"
        )

    vertices = []
    for base in underlying:
        p, _ = base.bars[0]
        for c in COLORS:
            vertices.append(DecoratedPermutation(base.word, ((p, c),)))
    edges = []
    for a, b in combinations(range(m), 2):
        if adj[a] >> b & 1:
            for ca in COLORS:
                for cb in COLORS:
                    edges.append((a * 4 + ca, b * 4 + cb))
    return GammaComplex(
        vertices=tuple(vertices),
        edges=tuple(edges),
        f_vector=f_vector,
        f_polynomial=f_polynomial,
        kruskal_katona=kruskal_katona_check(list(f_vector)),
    )


def phi_face_map(decorated):
    """The face attached to a decorated permutation: one one-bar vertex
    per bar, built from the sorted letters left of that bar's following
    grave part, the grave part itself, and the sorted letters right of it."""
    blocks = decorated.blocks()
    word = decorated.word
    vertices = []
    for i, (pos, color) in enumerate(decorated.bars, start=1):
        grave, _ = grave_acute(blocks[i])
        left = tuple(sorted(word[:pos]))
        right = tuple(sorted(word[pos + len(grave) :]))
        vertices.append(DecoratedPermutation(left + grave + right, ((pos, color),)))
    return vertices


@dataclass(frozen=True)
class IsoReport:
    element_count: int
    face_count: int
    bijective: bool
    grade_preserving: bool
    covers_consistent: bool
    malformed_covers: int
    total_covers: int


def iso_check(poset, max_n=5):
    """Exhaustively verify that phi is a grade-preserving bijection from
    the decorated linear extensions onto the faces of the complex, and
    that removing a bar matches deleting the corresponding vertex from the
    face whenever the removal is well formed (malformed removals are
    counted, not hidden)."""
    if poset.n > max_n:
        raise SizeLimit(f"iso check guarded at n <= {max_n}")
    elements = s_p(poset)
    complex_ = build_complex(poset)
    faces = {frozenset()}
    for v in complex_.vertices:
        faces.add(frozenset([v]))
    for a, b in complex_.edges:
        faces.add(frozenset([complex_.vertices[a], complex_.vertices[b]]))

    images = {}
    grade_ok = True
    for d in elements:
        img = phi_face_map(d)
        images[d] = img
        if len(img) != d.bar_count():
            grade_ok = False
    image_sets = [frozenset(img) for img in images.values()]
    bijective = (
        len(set(image_sets)) == len(elements) and set(image_sets) == faces
    )

    malformed = 0
    total = 0
    covers_ok = True
    element_set = set(elements)
    for d in elements:
        for i in range(1, d.bar_count() + 1):
            total += 1
            try:
                reduced = cover_reduce(d, i)
            except MalformedResult:
                malformed += 1
                continue
            if reduced not in element_set:
                covers_ok = False
                continue
            expected = set(images[d])
            expected.discard(images[d][i - 1])
            if set(images[reduced]) != expected:
                covers_ok = False
    return IsoReport(
        element_count=len(elements),
        face_count=len(faces),
        bijective=bijective,
        grade_preserving=grade_ok,
        covers_consistent=covers_ok,
        malformed_covers=malformed,
        total_covers=total,
    )
