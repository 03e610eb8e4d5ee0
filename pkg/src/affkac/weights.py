"""Exact weights of an untwisted affine algebra.

A weight is stored by its coordinates on the fundamental weights
``Lambda_0 .. Lambda_l`` plus a delta coordinate, all exact rationals:

    w  =  sum_i coords[i] * Lambda_i  +  delta * (basic imaginary root).

With this storage the coroot pairings and the d-pairing are O(1) reads:
``<w, alpha_i^vee> = coords[i]`` and ``<w, d> = delta``.  The finite
projection needed by the invariant bilinear form is derived on demand from
the Gram matrix of the finite fundamental weights.

Weights of distinct affine types never mix: each weight carries a reference
to its root datum and every binary operation insists on the same instance.

Textual format (CLI and caches): ``"m0,m1,...,ml;cdelta"`` with rationals
written ``p/q``, e.g. ``"1,1;0"`` for rho of a rank-1 type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import AffineCartanData
from .errors import CrossTypeError, NotInRootSpan


class RootCoords(tuple):
    """Coefficients (c_0, ..., c_l) of a level-zero vector on the simple roots."""

    __slots__ = ()

    @property
    def height(self):
        return sum(self)

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in map(Fraction, self))


@dataclass(frozen=True, eq=False)
class Weight:
    data: AffineCartanData
    coords: tuple[Fraction, ...]
    delta: Fraction

    def __post_init__(self):
        if len(self.coords) != self.data.l + 1:
            raise ValueError(f"expected {self.data.l + 1} coordinates, got {len(self.coords)}")

    # -- equality / hashing -------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return (self.data is other.data and self.coords == other.coords
                and self.delta == other.delta)

    def __hash__(self):
        return hash((self.data.label, self.coords, self.delta))

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "Weight"):
        if self.data is not other.data:
            raise CrossTypeError(
                f"cannot combine weights of {self.data.label} and {other.data.label}")

    def __add__(self, other):
        self._check(other)
        return Weight(self.data,
                      tuple(a + b for a, b in zip(self.coords, other.coords)),
                      self.delta + other.delta)

    def __sub__(self, other):
        self._check(other)
        return Weight(self.data,
                      tuple(a - b for a, b in zip(self.coords, other.coords)),
                      self.delta - other.delta)

    def __neg__(self):
        return Weight(self.data, tuple(-a for a in self.coords), -self.delta)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return Weight(self.data, tuple(scalar * a for a in self.coords),
                      scalar * self.delta)

    __rmul__ = __mul__

    # -- pairings ------------------------------------------------------------
    def coroot_pairing(self, i: int) -> Fraction:
        """<w, alpha_i^vee>."""
        return self.coords[i]

    @property
    def d_pairing(self) -> Fraction:
        """<w, d>."""
        return self.delta

    def level(self) -> Fraction:
        """<w, K> = sum of comark-weighted coordinates."""
        return sum(c * m for c, m in zip(self.data.comarks, self.coords))

    def bilinear(self, other: "Weight") -> Fraction:
        """Normalized invariant form (w1 | w2)."""
        self._check(other)
        gram = self.data.finite_gram
        finite = sum(self.coords[i + 1] * other.coords[j + 1] * gram[i][j]
                     for i in range(self.data.l) for j in range(self.data.l)
                     if self.coords[i + 1] and other.coords[j + 1])
        return finite + self.level() * other.delta + other.level() * self.delta

    def norm(self) -> Fraction:
        return self.bilinear(self)

    # -- predicates ----------------------------------------------------------
    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    @property
    def is_dominant(self) -> bool:
        """Member of P^+: integral with all coroot pairings >= 0."""
        return self.is_integral and all(c >= 0 for c in self.coords)

    @property
    def is_regular_dominant(self) -> bool:
        return self.is_integral and all(c > 0 for c in self.coords)

    @property
    def is_rational_dominant(self) -> bool:
        """Rational dominant chamber membership (no integrality)."""
        return all(c >= 0 for c in self.coords)

    def delta_normalized(self) -> "Weight":
        """w - <w, d> * delta, the d-pairing-zero representative."""
        if self.delta == 0:
            return self
        return Weight(self.data, self.coords, Fraction(0))

    def __str__(self):
        return format_weight(self)

    def __repr__(self):
        return f"Weight({self.data.label}, {format_weight(self)!r})"


# -- constructors -------------------------------------------------------------

def weight(data: AffineCartanData, coords, delta=0) -> Weight:
    return Weight(data, tuple(Fraction(c) for c in coords), Fraction(delta))


def zero(data: AffineCartanData) -> Weight:
    return weight(data, [0] * (data.l + 1))


def fundamental(data: AffineCartanData, i: int) -> Weight:
    return weight(data, [1 if j == i else 0 for j in range(data.l + 1)])


def rho(data: AffineCartanData) -> Weight:
    """Sum of all fundamental weights; <rho, d> = 0 and level(rho) = h^vee."""
    return weight(data, [1] * (data.l + 1))


def null_root(data: AffineCartanData) -> Weight:
    """The basic imaginary root as a weight: zero coordinates, delta = 1."""
    return weight(data, [0] * (data.l + 1), 1)


def simple_root(data: AffineCartanData, j: int) -> Weight:
    """alpha_j in the weight basis: column j of the Cartan matrix, plus
    delta exactly for the affine node."""
    return weight(data, [data.cartan[i][j] for i in range(data.l + 1)],
                  1 if j == 0 else 0)


def from_root_coords(data: AffineCartanData, coords) -> Weight:
    """The level-zero weight sum_j coords[j] * alpha_j."""
    coords = [Fraction(c) for c in coords]
    lam = [sum(Fraction(data.cartan[i][j]) * coords[j] for j in range(data.l + 1))
           for i in range(data.l + 1)]
    return Weight(data, tuple(lam), coords[0])


# -- root-coordinate solve and dominance --------------------------------------

def to_root_coords(diff: Weight) -> RootCoords:
    """Express a level-zero weight on the simple roots, exactly.

    The delta coordinate pins c_0 (only alpha_0 carries delta); the finite
    block is inverted with the cached exact inverse of the finite Cartan
    matrix; the remaining row is the level-zero consistency condition.
    """
    if diff.level() != 0:
        raise NotInRootSpan(f"weight {diff} has level {diff.level()} != 0")
    data = diff.data
    l = data.l
    c0 = diff.delta
    rhs = [diff.coords[i + 1] - c0 * data.cartan[i + 1][0] for i in range(l)]
    inv = data.finite_cartan_inv
    cfin = [sum(inv[i][j] * rhs[j] for j in range(l)) for i in range(l)]
    return RootCoords((c0, *cfin))


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    """mu <= lam in dominance order: lam - mu is a Z_+-combination of
    simple roots.  Unequal levels are incomparable, not an error."""
    mu._check(lam)
    if mu.level() != lam.level():
        return False
    diff = lam - mu
    coords = to_root_coords(diff)
    return all(c.denominator == 1 and c >= 0 for c in coords)


# -- textual format ------------------------------------------------------------

def format_weight(w: Weight) -> str:
    return ",".join(str(c) for c in w.coords) + ";" + str(w.delta)


def parse_weight(data: AffineCartanData, text: str) -> Weight:
    """Parse ``"m0,...,ml;cdelta"`` (``;cdelta`` may be omitted for 0)."""
    text = text.strip()
    if ";" in text:
        head, _, tail = text.partition(";")
    else:
        head, tail = text, "0"
    try:
        coords = [Fraction(tok.strip()) for tok in head.split(",")]
        delta = Fraction(tail.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed weight string {text!r}: {exc}") from None
    if len(coords) != data.l + 1:
        raise ValueError(
            f"weight string {text!r} has {len(coords)} coordinates; "
            f"{data.label} needs {data.l + 1}")
    return Weight(data, tuple(coords), delta)
