"""Affine Weyl group action, dominant representatives, and parabolic
vertex candidates.

Group elements are never materialised: every operation acts directly on
weights.  Parabolic subgroups are given by proper subsets J of the node
set; ``J = I`` is rejected wherever finiteness is required.

J-subsets are serialised as sorted comma lists, e.g. ``"0,2"`` (empty
string for the empty set).
"""

from __future__ import annotations

from fractions import Fraction

from . import cartan, linalg
from .cartan import AffineCartanData
from .errors import InfiniteGroup, PositiveLevelRequired, PreconditionFailed
from .weights import Weight, from_root_coords, rho, simple_root


def validate_subset(data: AffineCartanData, J) -> tuple[int, ...]:
    """Normalise a node subset to a sorted tuple; reject J = I."""
    J = sorted(set(J))
    if any(j not in data.index_set for j in J):
        raise ValueError(f"node indices {J} out of range for {data.label}")
    if len(J) == data.l + 1:
        raise InfiniteGroup(f"J = I gives the full (infinite) Weyl group of {data.label}")
    return tuple(J)


def parse_subset(data: AffineCartanData, text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return validate_subset(data, [int(tok) for tok in text.split(",")])


def format_subset(J) -> str:
    return ",".join(str(j) for j in sorted(J))


def reflect(i: int, w: Weight) -> Weight:
    """Simple reflection s_i(w) = w - <w, alpha_i^vee> alpha_i."""
    m = w.coords[i]
    if m == 0:
        return w
    return w - m * simple_root(w.data, i)


def apply_word(word, w: Weight) -> Weight:
    """Compose simple reflections: the last index is applied first, so
    ``apply_word([i, j], w) = s_i(s_j(w))``."""
    for i in reversed(word):
        w = reflect(i, w)
    return w


def to_dominant(w: Weight) -> tuple[Weight, list[int]]:
    """The dominant representative of the orbit of w, plus a word.

    Uses the smallest-ascending-node strategy, so the word is deterministic
    but not claimed reduced.  ``apply_word(word, dominant)`` reproduces w.
    Termination requires positive level for non-dominant input.
    """
    word: list[int] = []
    cur = w
    while True:
        i = next((i for i in cur.data.index_set if cur.coords[i] < 0), None)
        if i is None:
            return cur, word
        if cur.level() <= 0:
            raise PositiveLevelRequired(
                f"cannot dominantise level-{cur.level()} weight {cur}")
        cur = reflect(i, cur)
        word.append(i)


def parabolic_orbit(J, w: Weight) -> set[Weight]:
    """Orbit of w under the finite parabolic subgroup W_J, by closure."""
    J = validate_subset(w.data, J)
    seen = {w}
    frontier = [w]
    while frontier:
        new = []
        for v in frontier:
            for j in J:
                r = reflect(j, v)
                if r not in seen:
                    seen.add(r)
                    new.append(r)
        frontier = new
    return seen


def vertex_candidate(J, lam: Weight) -> Weight:
    """Average of lam over W_J, the candidate vertex attached to J.

    lam is silently normalised to d-pairing zero first.  For regular
    dominant lam the result pairs to zero against alpha_j^vee exactly for
    j in J and strictly positively otherwise; for non-regular lam the
    strictness degrades (duplicates across J become possible).
    """
    lam = lam.delta_normalized()
    J = validate_subset(lam.data, J)
    orbit = parabolic_orbit(J, lam)
    total = None
    for v in orbit:
        total = v if total is None else total + v
    return Fraction(1, len(orbit)) * total


def vertex_candidate_by_solve(J, lam: Weight) -> Weight:
    """The same vertex as a restricted linear solve.

    Solves sum_{k in J} n_k <alpha_k, alpha_i^vee> = <lam, alpha_i^vee>
    for i in J over the (invertible, finite-type) restricted Cartan block
    and returns lam - sum n_k alpha_k.  A negative solved coefficient is
    reported: it signals non-regular or otherwise inconsistent input.
    """
    lam = lam.delta_normalized()
    data = lam.data
    J = validate_subset(data, J)
    if not J:
        return lam
    matrix = [[Fraction(data.cartan[i][k]) for k in J] for i in J]
    rhs = [lam.coords[i] for i in J]
    n = linalg.solve(matrix, rhs)
    bad = [(k, val) for k, val in zip(J, n) if val < 0]
    if bad:
        raise PreconditionFailed(
            f"restricted solve produced negative coefficients {bad}; "
            "input is not regular dominant")
    coords = [Fraction(0)] * (data.l + 1)
    for k, val in zip(J, n):
        coords[k] = val
    return lam - from_root_coords(data, coords)


def rho_plus_longest(J, data: AffineCartanData) -> Weight:
    """rho + w_0^J(rho), with w_0^J the longest element of W_J.

    w_0^J(rho) is computed by descending within J (smallest node first)
    until no positive pairing remains; equals vertex_candidate(J, 2*rho).
    """
    J = validate_subset(data, J)
    r = rho(data)
    v = r
    while True:
        j = next((j for j in J if v.coords[j] > 0), None)
        if j is None:
            return r + v
        v = reflect(j, v)


def parabolic_positive_root_sum(J, data: AffineCartanData) -> Weight:
    """Sum of the positive roots of the finite sub-system on J."""
    J = validate_subset(data, J)
    total = None
    for coords in cartan.subdiagram_positive_roots(data, J):
        w = from_root_coords(data, coords)
        total = w if total is None else total + w
    if total is None:
        return from_root_coords(data, [0] * (data.l + 1))
    return total
