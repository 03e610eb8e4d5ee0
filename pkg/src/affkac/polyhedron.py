"""The dominant weight polyhedron: vertices, membership tests, and
delta-maximal dominant weight enumeration.

Two independent membership tests are provided and kept independent on
purpose: one through the defining inequalities (root coordinates of the
difference), one through the vertex decomposition (exact rational
feasibility over the vertex generators plus the ray).  Their agreement is
a theorem and is exercised as such by the test suite, so neither may be
implemented in terms of the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import NotRegular, PositiveLevelRequired, PreconditionFailed
from .weights import (Weight, dominance_leq, null_root, to_root_coords)
from .weyl import to_dominant, validate_subset, vertex_candidate


def _all_proper_subsets(n):
    nodes = range(n)
    for size in range(n):
        yield from itertools.combinations(nodes, size)


@dataclass(frozen=True)
class DominantPolyhedron:
    """Vertex data of one dominant weight polyhedron.

    ``vertices`` maps each proper node subset J to its vertex; the
    characteristic cone is the fixed ray spanned by minus the basic
    imaginary root.  ``delta_shift`` records the silent normalisation
    applied to the input (original d-pairing).
    """

    lam: Weight
    vertices: dict[tuple[int, ...], Weight] = field(repr=False)
    delta_shift: Fraction = Fraction(0)

    @property
    def ray(self) -> Weight:
        return -null_root(self.lam.data)


def _vertex_map(lam: Weight) -> dict[tuple[int, ...], Weight]:
    return {J: vertex_candidate(J, lam)
            for J in _all_proper_subsets(lam.data.l + 1)}


def build_polyhedron(lam: Weight) -> DominantPolyhedron:
    """Vertices of the polyhedron of a regular dominant integral weight."""
    if not lam.is_regular_dominant:
        raise NotRegular(f"{lam} is not regular dominant; "
                         "see build_polyhedron_conjectural for the general case")
    shift = lam.d_pairing
    lam0 = lam.delta_normalized()
    vertices = _vertex_map(lam0)
    n = lam.data.l + 1
    if len(vertices) != 2 ** n - 1 or len(set(vertices.values())) != 2 ** n - 1:
        raise AssertionError("vertex candidates are not distinct for regular input")
    return DominantPolyhedron(lam=lam0, vertices=vertices, delta_shift=shift)


def build_polyhedron_conjectural(lam: Weight) -> DominantPolyhedron:
    """Vertex candidates for arbitrary dominant integral input.

    The candidate set may contain repeated elements; whether it equals the
    true vertex set in the non-regular case is an open conjecture, so no
    distinctness is asserted here and callers must not rely on it.
    """
    if not lam.is_dominant:
        raise PreconditionFailed(f"{lam} is not dominant integral")
    shift = lam.d_pairing
    lam0 = lam.delta_normalized()
    return DominantPolyhedron(lam=lam0, vertices=_vertex_map(lam0), delta_shift=shift)


def contains_root_test(lam: Weight, mu: Weight) -> bool:
    """Membership of mu in the polyhedron of lam via the defining
    inequalities: mu rational-dominant, equal level, and lam - mu a
    nonnegative rational combination of simple roots."""
    lam = lam.delta_normalized()
    if not mu.is_rational_dominant:
        return False
    if mu.level() != lam.level():
        return False
    return all(c >= 0 for c in to_root_coords(lam - mu))


def contains_decomposition_test(poly: DominantPolyhedron, mu: Weight) -> bool:
    """Membership via the vertex decomposition: mu = sum u_J b_J - t*delta
    with u_J >= 0, sum u_J = 1, t >= 0, decided by exact feasibility."""
    verts = list(poly.vertices.values())
    n = poly.lam.data.l + 1
    rows = []
    rhs = []
    for i in range(n):
        rows.append([v.coords[i] for v in verts] + [Fraction(0)])
        rhs.append(mu.coords[i])
    rows.append([v.delta for v in verts] + [Fraction(-1)])
    rhs.append(mu.delta)
    rows.append([Fraction(1)] * len(verts) + [Fraction(0)])
    rhs.append(Fraction(1))
    return linalg.feasible(rows, rhs)


def weight_membership(lam: Weight, mu: Weight) -> bool:
    """Exact membership of mu in the weight set of the module with highest
    weight lam: the dominant representative of mu must lie below lam."""
    mu._check(lam)
    if mu.level() != lam.level():
        return False
    if not mu.is_integral:
        return False
    dom = mu if mu.is_dominant else to_dominant(mu)[0]
    return dominance_leq(dom, lam)


def dominant_slice(lam: Weight, i_star: int, value: int) -> list[tuple[tuple[int, ...], Weight]]:
    """All dominant integral mu <= lam whose root-coordinate at i_star is
    exactly ``value``, with their root coordinates.

    The box is rigorous for every dominant integral lam: dominance of mu at
    the remaining nodes reads C_J c' <= r with C_J the finite-type Cartan
    block on J = I minus {i_star}, whose inverse is entrywise nonnegative,
    so c' <= C_J^{-1} r componentwise.
    """
    data = lam.data
    n = data.l + 1
    J = [j for j in range(n) if j != i_star]
    if value < 0:
        return []
    if J:
        sub = [[Fraction(data.cartan[i][j]) for j in J] for i in J]
        inv = linalg.invert(sub)
        r = [lam.coords[j] - value * data.cartan[j][i_star] for j in J]
        bounds = [sum(inv[a][b] * r[b] for b in range(len(J))) for a in range(len(J))]
        ranges = [range(int(b) + 1) if b >= 0 else range(0) for b in bounds]
    else:
        ranges = []
    out = []
    for combo in itertools.product(*ranges):
        c = [0] * n
        c[i_star] = value
        for j, v in zip(J, combo):
            c[j] = v
        coords = [lam.coords[i] - sum(data.cartan[i][j] * c[j] for j in range(n))
                  for i in range(n)]
        if all(x >= 0 for x in coords):
            mu = Weight(data, tuple(coords), lam.delta - c[0])
            out.append((tuple(c), mu))
    return out


def delta_maximal_dominant(lam: Weight) -> list[Weight]:
    """The delta-maximal dominant weights below lam.

    These are exactly the dominant mu <= lam for which some root coordinate
    of lam - mu is smaller than the corresponding mark, so the enumeration
    scans, for each node, the slices where that coordinate is pinned below
    its mark.  Exhaustive by the box bound of :func:`dominant_slice`.
    """
    if not lam.is_dominant:
        raise PreconditionFailed(f"{lam} is not dominant integral")
    if lam.level() <= 0:
        raise PositiveLevelRequired(f"{lam} has nonpositive level")
    found: dict[tuple[int, ...], Weight] = {}
    for i_star in lam.data.index_set:
        for value in range(lam.data.marks[i_star]):
            for key, mu in dominant_slice(lam, i_star, value):
                found.setdefault(key, mu)
    return [found[k] for k in sorted(found, key=lambda c: (sum(c), c))]
