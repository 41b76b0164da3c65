"""Gram matrices of null lifts: normal form, determinants, congruence.

A quadruple of boundary points determines, through any choice of null
lifts P_i, the Hermitian matrix G = (<P_i, P_j>).  Rescaling lifts by
nonzero lambda_i replaces G by the equivalent matrix with entries
lambda_i conj(lambda_j) g_ij, and each equivalence class contains a
unique normal form with zero diagonal, g12 = g23 = g34 = 1 and
|g13| = 1.  Two quadruples are congruent under a holomorphic isometry
precisely when their normal forms coincide, and congruent under an
anti-holomorphic isometry precisely when the normal forms are complex
conjugate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CoincidentPoints,
    DegenerateEntry,
    DimensionMismatch,
    InvalidFace,
    InvalidParameter,
    NotNormalForm,
    NotNull,
)
from .hermitian import herm_product, infer_dimension, standard_lift
from .numeric import NumericConfig, resolve

FACES = ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Hermitian m x m matrix of pairwise products of null lifts (m = 3 or 4)."""

    m: int
    entries: np.ndarray

    def __post_init__(self):
        if self.m not in (3, 4):
            raise InvalidParameter(f"only 3x3 and 4x4 Gram matrices are supported, got m={self.m}")
        entries = np.array(self.entries, dtype=complex)
        if entries.shape != (self.m, self.m):
            raise DimensionMismatch(f"expected shape {(self.m, self.m)}, got {entries.shape}")
        cfg = resolve(None)
        scale = float(np.max(np.abs(entries)))
        if np.max(np.abs(entries - entries.conj().T)) > cfg.tol(scale):
            raise InvalidParameter("Gram matrix must be Hermitian")
        if np.max(np.abs(np.diag(entries))) > cfg.tol(scale):
            raise NotNull("Gram diagonal must vanish (lifts must be isotropic)")
        for i in range(self.m):
            for j in range(i + 1, self.m):
                if abs(entries[i, j]) <= cfg.tol(scale):
                    raise CoincidentPoints(f"off-diagonal entry ({i + 1},{j + 1}) vanishes")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def to_json(self) -> list:
        return [[[v.real, v.imag] for v in row] for row in self.entries]

    @classmethod
    def from_json(cls, rows: list) -> "GramMatrix":
        entries = np.array([[complex(re, im) for re, im in row] for row in rows])
        return cls(len(rows), entries)


@dataclass(frozen=True)
class NormalizedGram:
    """The normal form: only g13, g14, g24 are free; |g13| = 1."""

    g13: complex
    g14: complex
    g24: complex

    def __post_init__(self):
        cfg = resolve(None)
        object.__setattr__(self, "g13", complex(self.g13))
        object.__setattr__(self, "g14", complex(self.g14))
        object.__setattr__(self, "g24", complex(self.g24))
        if abs(abs(self.g13) - 1.0) > cfg.tol(1.0):
            raise NotNormalForm(f"|g13| must be 1, got {abs(self.g13)}")
        if abs(self.g14) <= cfg.abs_tol or abs(self.g24) <= cfg.abs_tol:
            raise DegenerateEntry("g14 and g24 must be nonzero in a normal form")

    def matrix(self) -> np.ndarray:
        """The full 4x4 matrix this normal form stands for."""
        g13, g14, g24 = self.g13, self.g14, self.g24
        return np.array([
            [0, 1, g13, g14],
            [1, 0, 1, g24],
            [g13.conjugate(), 1, 0, 1],
            [g14.conjugate(), g24.conjugate(), 1, 0],
        ], dtype=complex)

    def conjugate(self) -> "NormalizedGram":
        return NormalizedGram(self.g13.conjugate(), self.g14.conjugate(), self.g24.conjugate())

    def isclose(self, other: "NormalizedGram", cfg: NumericConfig | None = None) -> bool:
        c = resolve(cfg)
        scale = max(1.0, abs(self.g14), abs(other.g14), abs(self.g24), abs(other.g24))
        return (abs(self.g13 - other.g13) <= c.tol(scale)
                and abs(self.g14 - other.g14) <= c.tol(scale)
                and abs(self.g24 - other.g24) <= c.tol(scale))

    def to_json(self) -> dict:
        return {"g13": [self.g13.real, self.g13.imag],
                "g14": [self.g14.real, self.g14.imag],
                "g24": [self.g24.real, self.g24.imag]}

    @classmethod
    def from_json(cls, obj: dict) -> "NormalizedGram":
        return cls(complex(*obj["g13"]), complex(*obj["g14"]), complex(*obj["g24"]))


def gram_of(lifts, cfg: NumericConfig | None = None) -> GramMatrix:
    """Gram matrix of four null lifts."""
    c = resolve(cfg)
    if len(lifts) != 4:
        raise InvalidParameter(f"expected 4 lifts, got {len(lifts)}")
    n = lifts[0].n
    for P in lifts:
        if P.n != n:
            raise DimensionMismatch("lifts live in different dimensions")
        if not P.is_null(c):
            raise NotNull(f"lift is not isotropic: <P,P> = {herm_product(P, P)}")
    entries = np.zeros((4, 4), dtype=complex)
    for i in range(4):
        for j in range(i + 1, 4):
            g = herm_product(lifts[i], lifts[j])
            if abs(g) <= c.tol(lifts[i].scale() * lifts[j].scale()):
                raise CoincidentPoints(f"points {i + 1} and {j + 1} coincide")
            entries[i, j] = g
            entries[j, i] = g.conjugate()
    return GramMatrix(4, entries)


def normalize(G: GramMatrix, cfg: NumericConfig | None = None) -> NormalizedGram:
    """Unique normal form of the equivalence class of G.

    Rescales entry-wise, never touching lifts: first force g12 = 1,
    then g23 = 1, then g34 = 1, each by scaling one index; finally the
    real rescaling (a, 1/a, a, 1/a) with a = 1/sqrt(|g13|) makes
    |g13| = 1 without disturbing the unit entries.
    """
    c = resolve(cfg)
    if G.m != 4:
        raise InvalidParameter("normalization is defined for quadruples (m=4)")
    e = G.entries
    scale = float(np.max(np.abs(e)))
    lam = np.ones(4, dtype=complex)
    for (i, j) in ((0, 1), (1, 2), (2, 3)):
        cur = lam[i] * e[i, j]
        if abs(cur) <= c.tol(scale * abs(lam[i])):
            raise DegenerateEntry(f"entry ({i + 1},{j + 1}) too small to normalize")
        lam[j] = (1.0 / cur).conjugate()
    g13 = lam[0] * lam[2].conjugate() * e[0, 2]
    if abs(g13) <= c.tol(scale * abs(lam[0] * lam[2])):
        raise DegenerateEntry("entry (1,3) too small to normalize")
    a = 1.0 / math.sqrt(abs(g13))
    lam *= np.array([a, 1.0 / a, a, 1.0 / a])
    scaled = lam[:, None] * lam.conjugate()[None, :] * e
    return NormalizedGram(scaled[0, 2], scaled[0, 3], scaled[1, 3])


def normalized_gram_of_points(points, cfg: NumericConfig | None = None) -> NormalizedGram:
    """Normal form of a quadruple of boundary points via standard lifts."""
    n = infer_dimension(points)
    lifts = [standard_lift(p, n) for p in points]
    return normalize(gram_of(lifts, cfg), cfg)


def det_gram(G: NormalizedGram) -> float:
    """Determinant of the normal form, by the closed formula."""
    g13, g14, g24 = G.g13, G.g14, G.g24
    return (-2.0 * g14.real
            - 2.0 * (g13 * g24.conjugate()).real
            - 2.0 * (g13 * g14.conjugate() * g24).real
            + abs(g14) ** 2 + abs(g24) ** 2 + 1.0)


def det_face(G: NormalizedGram, face) -> float:
    """Determinant of the 3x3 principal minor picked out by a face.

    Faces are the 1-based triples (1,2,3), (1,2,4), (1,3,4), (2,3,4);
    for actual configurations all four values are <= 0 and vanish
    exactly when the face lies on a chain.
    """
    face = tuple(face)
    if face == (1, 2, 3):
        return 2.0 * G.g13.conjugate().real
    if face == (1, 2, 4):
        return 2.0 * (G.g24 * G.g14.conjugate()).real
    if face == (1, 3, 4):
        return 2.0 * (G.g13 * G.g14.conjugate()).real
    if face == (2, 3, 4):
        return 2.0 * G.g24.conjugate().real
    raise InvalidFace(f"face must be one of {FACES}, got {face}")


def congruent_holomorphic(p, q, cfg: NumericConfig | None = None) -> bool:
    """Are two quadruples congruent under a holomorphic isometry?"""
    return normalized_gram_of_points(p, cfg).isclose(normalized_gram_of_points(q, cfg), cfg)


def congruent_antiholomorphic(p, q, cfg: NumericConfig | None = None) -> bool:
    """Are two quadruples congruent under an anti-holomorphic isometry?"""
    gp = normalized_gram_of_points(p, cfg)
    gq = normalized_gram_of_points(q, cfg)
    return gp.isclose(gq.conjugate(), cfg)
