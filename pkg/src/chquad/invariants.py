"""Cartan's angular invariant, complex cross-ratios, and the dictionary
between the moduli coordinates (X1, X2, A) and the Gram normal form.

For an ordered triple of distinct boundary points, the Cartan invariant

    A(p1, p2, p3) = arg(-<P1,P2><P2,P3><P3,P1>)

is lift-independent, lies in [-pi/2, pi/2], and classifies the triple
up to holomorphic isometry.  For quadruples, the Koranyi-Reimann
complex cross-ratio

    X(p1, p2, p3, p4) = <P3,P1><P4,P2> / (<P4,P1><P3,P2>)

is likewise lift-independent and isometry-invariant.  Against the Gram
normal form (g13, g14, g24) the dictionary reads

    X1 = conj(g13) conj(g24) / conj(g14),   X2 = 1 / conj(g14),
    X3 = 1 / (g13 conj(g24)),               A  = arg(-conj(g13)),

with inverse g13 = -e^{-iA}, g14 = 1/conj(X2),
g24 = -(conj(X1)/conj(X2)) e^{iA}.  Only the squares of g13 and g24
are determined by (X1, X2, X3) alone, which is why the angle A is part
of the moduli data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import CartanOutOfRange, CoincidentPoints, ZeroCrossRatio
from .gram import NormalizedGram
from .hermitian import HermitianVector, herm_product, infer_dimension, standard_lift
from .numeric import NumericConfig, resolve

HALF_PI = math.pi / 2.0


def _checked_product(P: HermitianVector, Q: HermitianVector,
                     cfg: NumericConfig) -> complex:
    g = herm_product(P, Q)
    if abs(g) <= cfg.tol(P.scale() * Q.scale()):
        raise CoincidentPoints("distinct boundary points never pair to zero")
    return g


def _clamp_cartan(angle: float, cfg: NumericConfig) -> float:
    """Snap values a rounding error past +-pi/2 back onto the interval."""
    if abs(angle) <= HALF_PI:
        return angle
    if abs(angle) <= HALF_PI + cfg.tol(1.0):
        return math.copysign(HALF_PI, angle)
    raise CartanOutOfRange(f"angle {angle} lies outside [-pi/2, pi/2]")


def cartan_from_lifts(P1: HermitianVector, P2: HermitianVector, P3: HermitianVector,
                      cfg: NumericConfig | None = None) -> float:
    c = resolve(cfg)
    triple = (_checked_product(P1, P2, c)
              * _checked_product(P2, P3, c)
              * _checked_product(P3, P1, c))
    return _clamp_cartan(cmath.phase(-triple), c)


def cartan(p1, p2, p3, cfg: NumericConfig | None = None) -> float:
    """Cartan angular invariant of an ordered triple of boundary points."""
    n = infer_dimension((p1, p2, p3))
    return cartan_from_lifts(*(standard_lift(p, n) for p in (p1, p2, p3)), cfg=cfg)


def cross_ratio_from_lifts(P1, P2, P3, P4, cfg: NumericConfig | None = None) -> complex:
    c = resolve(cfg)
    lifts = (P1, P2, P3, P4)
    for i in range(4):
        for j in range(i + 1, 4):
            _checked_product(lifts[i], lifts[j], c)
    return (herm_product(P3, P1) * herm_product(P4, P2)) / \
           (herm_product(P4, P1) * herm_product(P3, P2))


def cross_ratio(p1, p2, p3, p4, cfg: NumericConfig | None = None) -> complex:
    """Koranyi-Reimann complex cross-ratio of an ordered quadruple."""
    n = infer_dimension((p1, p2, p3, p4))
    return cross_ratio_from_lifts(*(standard_lift(p, n) for p in (p1, p2, p3, p4)), cfg=cfg)


@dataclass(frozen=True)
class ModuliPoint:
    """Moduli coordinates (X1, X2, A) of a quadruple class.

    ``cartan`` is the Cartan invariant of the first face (p1, p2, p3),
    in radians.
    """

    x1: complex
    x2: complex
    cartan: float

    def __post_init__(self):
        cfg = resolve(None)
        object.__setattr__(self, "x1", complex(self.x1))
        object.__setattr__(self, "x2", complex(self.x2))
        object.__setattr__(self, "cartan", float(self.cartan))
        if abs(self.x1) <= cfg.abs_tol or abs(self.x2) <= cfg.abs_tol:
            raise ZeroCrossRatio("moduli coordinates require nonzero X1 and X2")

    def isclose(self, other: "ModuliPoint", cfg: NumericConfig | None = None) -> bool:
        c = resolve(cfg)
        scale = max(1.0, abs(self.x1), abs(other.x1), abs(self.x2), abs(other.x2))
        return (abs(self.x1 - other.x1) <= c.tol(scale)
                and abs(self.x2 - other.x2) <= c.tol(scale)
                and abs(self.cartan - other.cartan) <= c.tol(1.0))

    def to_json(self) -> dict:
        return {"x1": [self.x1.real, self.x1.imag],
                "x2": [self.x2.real, self.x2.imag],
                "a": self.cartan}

    @classmethod
    def from_json(cls, obj: dict) -> "ModuliPoint":
        return cls(complex(*obj["x1"]), complex(*obj["x2"]), float(obj["a"]))


@dataclass(frozen=True)
class CrossRatioTriple:
    """The Parker-Platis cross-ratio coordinates (X1, X2, X3) of a quadruple."""

    x1: complex
    x2: complex
    x3: complex

    def isclose(self, other: "CrossRatioTriple", cfg: NumericConfig | None = None) -> bool:
        c = resolve(cfg)
        scale = max([1.0] + [abs(v) for v in
                             (self.x1, self.x2, self.x3, other.x1, other.x2, other.x3)])
        return (abs(self.x1 - other.x1) <= c.tol(scale)
                and abs(self.x2 - other.x2) <= c.tol(scale)
                and abs(self.x3 - other.x3) <= c.tol(scale))

    def to_json(self) -> dict:
        return {"x1": [self.x1.real, self.x1.imag],
                "x2": [self.x2.real, self.x2.imag],
                "x3": [self.x3.real, self.x3.imag]}

    @classmethod
    def from_json(cls, obj: dict) -> "CrossRatioTriple":
        return cls(complex(*obj["x1"]), complex(*obj["x2"]), complex(*obj["x3"]))


def cross_ratio_triple(points, cfg: NumericConfig | None = None) -> CrossRatioTriple:
    """The three cross-ratios (X1, X2, X3) of an ordered quadruple.

    X3 is computed from Hermitian products directly, never through the
    identity X3 = (X2/X1) e^{2iA}, so that identity stays testable.
    """
    p1, p2, p3, p4 = points
    return CrossRatioTriple(
        cross_ratio(p1, p2, p3, p4, cfg),
        cross_ratio(p1, p3, p2, p4, cfg),
        cross_ratio(p2, p3, p1, p4, cfg),
    )


def moduli_from_gram(G: NormalizedGram, cfg: NumericConfig | None = None) -> ModuliPoint:
    """Read (X1, X2, A) off a Gram normal form."""
    c = resolve(cfg)
    x1 = G.g13.conjugate() * G.g24.conjugate() / G.g14.conjugate()
    x2 = 1.0 / G.g14.conjugate()
    a = _clamp_cartan(cmath.phase(-G.g13.conjugate()), c)
    return ModuliPoint(x1, x2, a)


def gram_from_moduli(m: ModuliPoint) -> NormalizedGram:
    """Rebuild the Gram normal form from (X1, X2, A)."""
    g13 = -cmath.exp(-1j * m.cartan)
    g14 = 1.0 / m.x2.conjugate()
    g24 = -(m.x1.conjugate() / m.x2.conjugate()) * cmath.exp(1j * m.cartan)
    return NormalizedGram(g13, g14, g24)


def det_from_moduli(m: ModuliPoint) -> float:
    """Determinant of the Gram normal form, in moduli coordinates."""
    bracket = (-2.0 * (m.x1 + m.x2).real
               - 2.0 * (m.x1 * m.x2.conjugate() * cmath.exp(-2j * m.cartan)).real
               + abs(m.x1) ** 2 + abs(m.x2) ** 2 + 1.0)
    return bracket / abs(m.x2) ** 2


def face_dets_from_moduli(m: ModuliPoint):
    """The four face determinants in moduli coordinates.

    Order matches ``gram.FACES``: (1,2,3), (1,2,4), (1,3,4), (2,3,4).
    """
    ea = cmath.exp(1j * m.cartan)
    s = abs(m.x2) ** 2
    return (
        -2.0 * ea.real,
        -2.0 * (m.x1.conjugate() / s * ea).real,
        -2.0 * (m.x2.conjugate() / s / ea).real,
        -2.0 * (m.x1 * m.x2.conjugate() / s / ea).real,
    )
