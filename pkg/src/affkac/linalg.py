"""Exact linear algebra over rationals.

Matrices are lists of row lists of :class:`~fractions.Fraction` (integer
entries are accepted and coerced).  Every system in this package is tiny
(at most rank + 2 unknowns for the solves, a few dozen columns for the
feasibility tests), so plain Gaussian elimination and a dense tableau
simplex are entirely adequate.  No floating point is ever used.
"""

from fractions import Fraction


def _as_fraction_rows(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` for square nonsingular ``matrix``.

    Returns a list of Fractions.  Raises ValueError on a singular matrix.
    """
    n = len(matrix)
    aug = _as_fraction_rows(matrix)
    for i, row in enumerate(aug):
        if len(row) != n:
            raise ValueError("solve() needs a square matrix")
        row.append(Fraction(rhs[i]))
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def invert(matrix):
    """Exact inverse of a square nonsingular matrix, as Fraction rows."""
    n = len(matrix)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(solve(matrix, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def determinant(matrix):
    """Exact determinant via fraction Gaussian elimination."""
    a = _as_fraction_rows(matrix)
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                factor = a[r][col] * inv
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def feasible(eq_matrix, eq_rhs):
    """Exact feasibility of ``{x >= 0 : eq_matrix @ x = eq_rhs}``.

    Phase-1 simplex with Bland's rule over Fractions: introduce one
    artificial variable per equation and minimise their sum; the system is
    feasible iff the optimum is zero.  Bland's rule guarantees termination.
    """
    m = len(eq_matrix)
    if m == 0:
        return True
    n = len(eq_matrix[0])
    rows = _as_fraction_rows(eq_matrix)
    rhs = [Fraction(b) for b in eq_rhs]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]

    # Tableau columns: n structural + m artificial, artificials basic.
    tableau = [rows[i] + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
               + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m

    # Reduced-cost row for minimising the artificial sum; the artificial
    # columns start basic, so their reduced cost is 1 - 1 = 0.
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(width + 1):
            cost[j] -= tableau[i][j]
    for k in range(m):
        cost[n + k] += 1

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][width] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            # Unbounded phase-1 objective cannot happen (bounded below by 0).
            raise ArithmeticError("phase-1 simplex became unbounded")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [x / pivot for x in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering] != 0:
                f = tableau[i][entering]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leaving])]
        if cost[entering] != 0:
            f = cost[entering]
            cost = [a - f * b for a, b in zip(cost, tableau[leaving])]
        basis[leaving] = entering

    # Optimum of the phase-1 objective is -cost[-1].
    return cost[width] == 0
