"""Exact rational linear feasibility via a Phase-I simplex.

Small dense tableaus over fractions.Fraction, Bland's rule for pivot
selection (no cycling, guaranteed termination).  Two entry points:

* feasible_point_eq:  find x >= 0 with A x = b, or None.
* feasible_point_ge:  find x >= 0 with A x >= b, or None.

Problem sizes here are tiny (tens of rows and columns), so clarity beats
cleverness; no scaling, no revised simplex.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def feasible_point_eq(rows, rhs):
    """Solve {x >= 0 : A x = b} for any feasible x, or return None.

    `rows` is a list of coefficient lists, `rhs` the right-hand sides.
    Phase I: minimize the sum of one artificial variable per row.
    """
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    a = [[Fraction(c) for c in row] for row in rows]
    b = [Fraction(v) for v in rhs]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-c for c in a[i]]
            b[i] = -b[i]

    # Tableau columns: n structural + m artificial, then the rhs.
    tab = [a[i] + [ONE if j == i else ZERO for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    total = n + m

    # Reduced costs for minimizing the sum of artificials: c_j minus the
    # basic-cost combination; artificial columns carry unit cost.
    obj = [ZERO] * (total + 1)
    for i in range(m):
        for j in range(total + 1):
            obj[j] -= tab[i][j]
    for j in range(n, total):
        obj[j] += ONE

    while True:
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][total] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            # Unbounded Phase-I objective cannot happen (bounded below by 0).
            raise ArithmeticError("phase-I simplex unbounded")
        _pivot(tab, obj, basis, leave, enter, total)

    if -obj[total] != 0:
        return None
    x = [ZERO] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][total]
    return x


def _pivot(tab, obj, basis, row, col, total):
    piv = tab[row][col]
    tab[row] = [c / piv for c in tab[row]]
    for i in range(len(tab)):
        if i != row and tab[i][col] != 0:
            f = tab[i][col]
            tab[i] = [c - f * d for c, d in zip(tab[i], tab[row])]
    if obj[col] != 0:
        f = obj[col]
        for j in range(total + 1):
            obj[j] -= f * tab[row][j]
    basis[row] = col


def feasible_point_ge(rows, rhs):
    """Solve {x >= 0 : A x >= b} by adding surplus variables."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    eq_rows = [list(row) + [-ONE if j == i else ZERO for j in range(m)] for i, row in enumerate(rows)]
    point = feasible_point_eq(eq_rows, rhs)
    if point is None:
        return None
    return point[:n]
