"""Root data for the untwisted affine types.

Admissible families and finite ranks:

    A: l >= 1,  B: l >= 3,  C: l >= 2,  D: l >= 4,  E: l in {6,7,8},
    F: l = 4,   G: l = 2.

``B2`` is rejected with a hint to use ``C2`` so that each isomorphism class
has a single representative.  Node 0 is always the affine node (attached
along the negated highest root); nodes 1..l follow the Bourbaki numbering
of the underlying finite diagram.

Everything downstream of the finite Cartan matrix and the highest-root
coefficients is *derived* here (symmetrizers, comarks, the affine Cartan
matrix, the Gram matrix of the finite fundamental weights), normalised so
that the highest root has squared length 2.  That keeps the tables free of
transcription errors: the construction is cross-checked by the null-vector
identity at build time.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ConstructionError

_FAMILIES = "ABCDEFG"

_LABEL_RE = re.compile(r"^([A-Ga-g])\s*(\d+)\s*~$")


@dataclass(frozen=True)
class AffineType:
    """An untwisted affine type, written ``<family><finite rank>~``."""

    family: str
    finite_rank: int

    def __post_init__(self):
        fam, l = self.family, self.finite_rank
        if fam not in _FAMILIES:
            raise ConstructionError(f"unknown family {fam!r}; expected one of {_FAMILIES}")
        ok = {
            "A": l >= 1,
            "B": l >= 3,
            "C": l >= 2,
            "D": l >= 4,
            "E": l in (6, 7, 8),
            "F": l == 4,
            "G": l == 2,
        }[fam]
        if not ok:
            if fam == "B" and l == 2:
                raise ConstructionError("B2~ is isomorphic to C2~; use C2~")
            raise ConstructionError(f"inadmissible rank {l} for family {fam}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.finite_rank}~"

    @classmethod
    def parse(cls, text: str) -> "AffineType":
        m = _LABEL_RE.match(text.strip())
        if not m:
            raise ConstructionError(
                f"cannot parse affine type {text!r}; expected a label like \"C2~\"")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return self.label


def _finite_cartan(family: str, l: int) -> list[list[int]]:
    """Bourbaki Cartan matrix of the finite type, A[i][j] = <alpha_j, alpha_i^vee>."""
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def chain(i, j):
        a[i][j] = a[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(l - 1):
            chain(i, i + 1)
        if family == "B" and l >= 2:     # alpha_l short
            a[l - 1][l - 2] = -2
        if family == "C":                # alpha_l long
            a[l - 2][l - 1] = -2
    elif family == "D":
        for i in range(l - 2):
            chain(i, i + 1)
        chain(l - 3, l - 1)
    elif family == "E":
        # Bourbaki: chain 1-3-4-5-...-l, node 2 attached to node 4.
        chain(0, 2)
        for i in range(2, l - 1):
            chain(i, i + 1)
        chain(1, 3)
    elif family == "F":
        chain(0, 1)
        chain(1, 2)
        chain(2, 3)
        a[2][1] = -2                     # alpha_3, alpha_4 short
    elif family == "G":
        a[0][1] = -3                     # alpha_1 short
        a[1][0] = -1
    return a


def _theta_coefficients(family: str, l: int) -> list[int]:
    """Coefficients of the highest root on the finite simple roots."""
    if family == "A":
        return [1] * l
    if family == "B":
        return [1] + [2] * (l - 1)
    if family == "C":
        return [2] * (l - 1) + [1]
    if family == "D":
        return [1] + [2] * (l - 3) + [1, 1]
    if family == "E":
        return {6: [1, 2, 2, 3, 2, 1],
                7: [2, 2, 3, 4, 3, 2, 1],
                8: [2, 3, 4, 6, 5, 4, 3, 2]}[l]
    if family == "F":
        return [2, 3, 4, 2]
    return [3, 2]                        # G2


def positive_roots(cartan) -> list[tuple[int, ...]]:
    """All positive roots of a finite-type Cartan matrix.

    Returned as integer coordinate tuples on the simple roots, ordered by
    height and then lexicographically.  Standard root-string closure: for a
    known root beta, beta + alpha_i is a root iff the down-string length p
    exceeds <beta, alpha_i^vee>.
    """
    n = len(cartan)
    if n == 0:
        return []
    known = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
    frontier = list(known)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(n):
                pairing = sum(beta[j] * cartan[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in known:
                        break
                    p += 1
                if p - pairing >= 1:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in known:
                        known.add(t)
                        new.append(t)
        frontier = new
    return sorted(known, key=lambda c: (sum(c), c))


@dataclass(frozen=True, eq=False)
class AffineCartanData:
    """Immutable root datum of one untwisted affine type.

    Instances are memoised per type (see :func:`build`), so identity
    comparison is the intended equality; weights hold a reference to their
    datum and refuse to mix types.
    """

    type: AffineType
    l: int
    cartan: tuple[tuple[int, ...], ...]          # (l+1) x (l+1), A[i][j] = <alpha_j, alpha_i^vee>
    marks: tuple[int, ...]                        # delta = sum a_i alpha_i
    comarks: tuple[int, ...]                      # K = sum a_i^vee alpha_i^vee
    symmetrizers: tuple[Fraction, ...]            # (alpha_i | alpha_j) = d_i A[i][j]
    dual_coxeter: int
    dim_finite: int
    finite_gram: tuple[tuple[Fraction, ...], ...]  # (Lambda-bar_i | Lambda-bar_j), l x l
    finite_cartan_inv: tuple[tuple[Fraction, ...], ...]
    finite_positive_roots: tuple[tuple[int, ...], ...]  # coords on alpha_1..alpha_l
    label: str

    @property
    def index_set(self) -> range:
        return range(self.l + 1)

    def root_bilinear(self, i: int, j: int) -> Fraction:
        """(alpha_i | alpha_j)."""
        return self.symmetrizers[i] * self.cartan[i][j]


@functools.lru_cache(maxsize=None)
def build(type: AffineType) -> AffineCartanData:
    """Construct the root datum tables for one untwisted affine type."""
    fam, l = type.family, type.finite_rank
    fin = _finite_cartan(fam, l)
    theta = _theta_coefficients(fam, l)

    # Symmetrizers of the finite matrix by propagation along edges, then
    # normalised so that (theta | theta) = 2.
    d = [None] * l
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(l):
            if j != i and fin[i][j] != 0 and d[j] is None:
                d[j] = d[i] * fin[i][j] / fin[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise ConstructionError(f"finite diagram of {type} is not connected")
    theta_norm = sum(theta[i] * theta[j] * d[i] * fin[i][j]
                     for i in range(l) for j in range(l))
    scale = Fraction(2) / theta_norm
    d = [x * scale for x in d]

    fin_comarks = [theta[i] * d[i] for i in range(l)]
    if any(x.denominator != 1 for x in fin_comarks):
        raise ConstructionError(f"non-integral comarks for {type}: {fin_comarks}")
    fin_comarks = [int(x) for x in fin_comarks]

    # Affine Cartan matrix: border the finite one with the -theta node.
    n = l + 1
    cartan = [[0] * n for _ in range(n)]
    cartan[0][0] = 2
    for i in range(l):
        for j in range(l):
            cartan[i + 1][j + 1] = fin[i][j]
    for j in range(l):
        cartan[0][j + 1] = -sum(fin_comarks[i] * fin[i][j] for i in range(l))
        cartan[j + 1][0] = -sum(theta[i] * fin[j][i] for i in range(l))

    marks = (1, *theta)
    comarks = (1, *fin_comarks)
    for i in range(n):
        if sum(marks[j] * cartan[i][j] for j in range(n)) != 0:
            raise ConstructionError(f"null-vector identity failed at row {i} for {type}")
        if sum(comarks[j] * cartan[j][i] for j in range(n)) != 0:
            raise ConstructionError(f"central-element identity failed at column {i} for {type}")

    # d_0 from symmetry against any finite neighbour of node 0; always 1.
    j0 = next(j for j in range(1, n) if cartan[0][j] != 0)
    d0 = d[j0 - 1] * cartan[j0][0] / cartan[0][j0]
    if d0 != 1:
        raise ConstructionError(f"affine symmetrizer d_0 = {d0} != 1 for {type}")
    symmetrizers = (Fraction(1), *d)

    pos = positive_roots(fin)
    dim_finite = l + 2 * len(pos)

    fin_inv = linalg.invert(fin)
    # Lambda-bar_i on the alpha basis is column i of the inverse transpose;
    # the Gram matrix is assembled through (alpha_p | alpha_q) = d_p fin[p][q].
    weights_on_roots = [[fin_inv[j][i] for j in range(l)] for i in range(l)]
    gram = [[sum(weights_on_roots[i][p] * weights_on_roots[j][q] * d[p] * fin[p][q]
                 for p in range(l) for q in range(l))
             for j in range(l)] for i in range(l)]

    return AffineCartanData(
        type=type,
        l=l,
        cartan=tuple(tuple(row) for row in cartan),
        marks=marks,
        comarks=comarks,
        symmetrizers=symmetrizers,
        dual_coxeter=sum(comarks),
        dim_finite=dim_finite,
        finite_gram=tuple(tuple(row) for row in gram),
        finite_cartan_inv=tuple(tuple(row) for row in fin_inv),
        finite_positive_roots=tuple(pos),
        label=type.label,
    )


def from_label(text: str) -> AffineCartanData:
    """Build root datum from a label like ``"A1~"`` (B2~ canonicalises to C2~)."""
    m = _LABEL_RE.match(text.strip())
    if not m:
        raise ConstructionError(
            f"cannot parse affine type {text!r}; expected a label like \"C2~\"")
    fam, l = m.group(1).upper(), int(m.group(2))
    if fam == "B" and l == 2:
        fam = "C"
    return build(AffineType(fam, l))


def dual_coxeter(data: AffineCartanData) -> int:
    """Dual Coxeter number, the sum of the comarks."""
    return data.dual_coxeter


def subdiagram_cartan(data: AffineCartanData, nodes) -> list[list[int]]:
    """Cartan matrix of the sub-diagram on the given affine node indices."""
    nodes = list(nodes)
    return [[data.cartan[i][j] for j in nodes] for i in nodes]


def subdiagram_positive_roots(data: AffineCartanData, nodes) -> list[tuple[int, ...]]:
    """Positive roots of a proper sub-diagram, as coordinates on all l+1 nodes."""
    nodes = sorted(nodes)
    sub = positive_roots(subdiagram_cartan(data, nodes))
    full = []
    for coords in sub:
        vec = [0] * (data.l + 1)
        for pos, node in enumerate(nodes):
            vec[node] = coords[pos]
        full.append(tuple(vec))
    return full
