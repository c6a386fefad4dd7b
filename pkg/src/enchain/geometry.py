"""The enriched chain polytope of a poset as an implicit point set.

For a poset P on 1..n the enriched chain polytope is the convex hull of
all signed indicator vectors of antichains; it is n-dimensional, centrally
symmetric, and its lattice points are exactly those vectors together with
the origin.  A point x lies in the m-th dilation iff (|x_1|, ..., |x_n|)
lies in m times the chain polytope, i.e. iff the |x_i| sum to at most m
along every maximal chain.  Dilation counts therefore enumerate the
nonnegative points of the dilated chain polytope and weight each by
2^(number of nonzero coordinates), one sign choice per coordinate.

Everything is exact; counts are arbitrary-precision integers and the
Ehrhart polynomial has exact rational coefficients.  Counting is
deterministic regardless of how the enumeration space is partitioned.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linprog
from .errors import GammaNegative, IdentityViolation, SizeLimit
from .polynomials import (
    IntPolynomial,
    RatPolynomial,
    gamma_expansion,
    hstar_from_counts,
    interpolate,
)
from .posets import antichains, linear_extensions, maximal_chains

MAX_N_DEFAULT = 8
GUARD_POINTS_DEFAULT = 10**8


def lattice_points_ep(poset):
    """All lattice points of the enriched chain polytope: every signed
    antichain indicator vector plus the origin, sorted."""
    n = poset.n
    points = []
    for chain in antichains(poset):
        for signs in product((1, -1), repeat=len(chain)):
            coords = [0] * n
            for e, s in zip(chain, signs):
                coords[e - 1] = s
            points.append(tuple(coords))
    return sorted(points)


def _cover_lists(poset):
    lowers = {e: [] for e in poset.elements()}
    for a, b in poset.covers():
        lowers[b].append(a)
    return lowers


def _dp_layers(poset):
    """Processing order and, per step, the sorted list of already-placed
    elements whose running chain sum is still needed by a later element."""
    order = poset.topological_order()
    pos = {e: t for t, e in enumerate(order)}
    lowers = _cover_lists(poset)
    active = []
    for t in range(len(order)):
        needed = {
            c
            for u in order[t + 1 :]
            for c in lowers[u]
            if pos[c] <= t
        }
        active.append(tuple(sorted(needed)))
    return order, lowers, active


def count_dilation(poset, m, guard_points=GUARD_POINTS_DEFAULT, max_n=MAX_N_DEFAULT):
    """|m E_P  cap  Z^n|, exactly.

    Walks the nonnegative points of the dilated chain polytope along a
    linear extension, tracking for each element the largest chain sum
    ending there; merging partial walks that agree on the still-needed
    sums makes the walk polynomial-sized without changing the total.
    Each point contributes 2^(#nonzero coordinates).
    """
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    n = poset.n
    if n > max_n:
        raise SizeLimit(f"count_dilation guarded at n <= {max_n}")
    if (m + 1) ** n > guard_points:
        raise SizeLimit(f"(m+1)^n = {(m + 1) ** n} exceeds guard {guard_points}")
    if m == 0:
        return 1
    order, lowers, active = _dp_layers(poset)
    states = {(): 1}
    prev_active = ()
    for t, e in enumerate(order):
        cur_active = active[t]
        new_states = {}
        for state, ways in states.items():
            sums = dict(zip(prev_active, state))
            base = max((sums[c] for c in lowers[e]), default=0)
            for g in range(base, m + 1):
                weight = ways if g == base else 2 * ways
                sums[e] = g
                key = tuple(sums[a] for a in cur_active)
                new_states[key] = new_states.get(key, 0) + weight
        states = new_states
        prev_active = cur_active
    return sum(states.values())


def in_chain_polytope(poset, point, m=1):
    """Membership of a nonnegative rational point in m * (chain polytope),
    by the maximal-chain inequalities: sums along every maximal chain are
    at most m."""
    if any(c < 0 for c in point):
        return False
    return all(sum(point[e - 1] for e in chain) <= m for chain in maximal_chains(poset))


def in_enriched_polytope(poset, point, m=1):
    """Membership of an integer (or rational) point in the m-th dilation of
    the enriched chain polytope, via its absolute values."""
    return in_chain_polytope(poset, [abs(c) for c in point], m)


def membership_oracle(poset, point, max_antichains=4096):
    """Independent membership test for the chain polytope: decide whether
    the nonnegative rational point is a convex combination of antichain
    indicator vectors, by exact LP feasibility.  Used to validate the
    maximal-chain inequality description on small instances."""
    n = poset.n
    point = [Fraction(c) for c in point]
    if any(c < 0 for c in point):
        raise ValueError("membership oracle expects a nonnegative point")
    chains = antichains(poset)
    if len(chains) > max_antichains:
        raise SizeLimit(f"membership oracle guarded at {max_antichains} antichains")
    rows = []
    for i in range(n):
        rows.append([Fraction(1) if (i + 1) in a else Fraction(0) for a in chains])
    rows.append([Fraction(1)] * len(chains))
    rhs = point + [Fraction(1)]
    return linprog.feasible_point_eq(rows, rhs) is not None


def dilation_counts(poset, max_m, **kwargs):
    return [count_dilation(poset, m, **kwargs) for m in range(max_m + 1)]


def ehrhart_polynomial(poset, **kwargs):
    """Lattice point enumerator of the enriched chain polytope, interpolated
    from the counts at dilations 0..n; degree exactly n, constant term 1."""
    n = poset.n
    poly = interpolate(dilation_counts(poset, n, **kwargs))
    if poly.degree != n or poly.leading <= 0:
        raise IdentityViolation(f"Ehrhart polynomial degenerate: {poly!r}")
    if poly(0) != 1:
        raise IdentityViolation("Ehrhart polynomial has constant term != 1")
    return poly


@dataclass(frozen=True)
class EhrhartData:
    ehrhart: RatPolynomial
    hstar: IntPolynomial
    gamma: tuple
    volume: int


def hstar_and_gamma(poset, **kwargs):
    """Ehrhart data with the gamma vector of h*.

    Asserts gamma_i >= 0 and the coefficientwise identity
    gamma_i = 4^i * [x^i] W_left with the left peak polynomial, raising
    GammaNegative / IdentityViolation on failure (both would contradict
    facts that hold for every poset, so they are alarms, not data).
    """
    from .partitions import peak_polynomials

    n = poset.n
    counts = dilation_counts(poset, n, **kwargs)
    hstar = hstar_from_counts(counts, n)
    if not hstar.is_palindromic(n):
        raise IdentityViolation(f"h* not palindromic at degree {n}: {hstar!r}")
    gamma = gamma_expansion(hstar, n)
    if any(g < 0 for g in gamma):
        raise GammaNegative(f"negative gamma coefficient in {gamma}")
    w_left = peak_polynomials(poset.canonicalized()).left_peak
    expected = tuple(4**i * w_left.coefficient(i) for i in range(n // 2 + 1))
    if gamma != expected:
        raise IdentityViolation(
            f"gamma {gamma} != scaled left peak coefficients {expected}"
        )
    return EhrhartData(
        ehrhart=interpolate(counts),
        hstar=hstar,
        gamma=gamma,
        volume=hstar(1),
    )


@dataclass(frozen=True)
class VolumeReflexivity:
    volume: int
    reflexive: bool


def volume_and_reflexivity(poset, **kwargs):
    """Normalized volume h*(1), checked against 2^n times the number of
    linear extensions, and reflexivity via palindromicity of h*."""
    n = poset.n
    hstar = hstar_from_counts(dilation_counts(poset, n, **kwargs), n)
    volume = hstar(1)
    extensions = len(linear_extensions(poset))
    if volume != 2**n * extensions:
        raise IdentityViolation(
            f"volume {volume} != 2^{n} * {extensions} linear extensions"
        )
    return VolumeReflexivity(volume=volume, reflexive=hstar.is_palindromic(n))
