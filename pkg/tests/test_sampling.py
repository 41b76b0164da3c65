import math

import numpy as np
import pytest

from chquad import (
    InvalidParameter,
    apply_isometry,
    form_matrix,
    gram_of,
    herm_product,
    in_moduli_space,
    moduli_residual,
    standard_lift,
)
from chquad.sampling import (
    DISTINCTNESS,
    random_boundary_point,
    random_chain_moduli,
    random_isometry,
    random_moduli_point,
    random_quadruple,
)
from chquad.hermitian import chordal_distance


def test_boundary_point_determinism():
    a = [random_boundary_point(2, np.random.default_rng(99)) for _ in range(20)]
    b = [random_boundary_point(2, np.random.default_rng(99)) for _ in range(20)]
    assert a == b


def test_boundary_point_golden_value():
    p = random_boundary_point(2, np.random.default_rng(123))
    assert not p.at_infinity
    assert abs(p.z[0] - (-0.3677866514678832 + 1.2879252612892487j)) < 1e-15
    assert abs(p.t - 0.1939744191326132) < 1e-15


def test_boundary_point_dimension_one():
    rng = np.random.default_rng(0)
    for _ in range(20):
        p = random_boundary_point(1, rng)
        if not p.at_infinity:
            assert p.z == ()


def test_boundary_point_lift_null():
    rng = np.random.default_rng(1)
    for _ in range(200):
        n = int(rng.integers(1, 5))
        P = standard_lift(random_boundary_point(n, rng), n)
        assert abs(herm_product(P, P)) <= 1e-10 * (1.0 + P.scale() ** 2)


def test_quadruple_determinism():
    a = random_quadruple(3, "generic", np.random.default_rng(5))
    b = random_quadruple(3, "generic", np.random.default_rng(5))
    assert a == b


def test_quadruple_distinctness():
    rng = np.random.default_rng(2)
    for kind in ("generic", "c_plane", "r_plane", "subspace2"):
        for _ in range(20):
            p = random_quadruple(3, kind, rng)
            lifts = [standard_lift(x, 3) for x in p]
            for i in range(4):
                for j in range(i + 1, 4):
                    assert chordal_distance(lifts[i], lifts[j]) > DISTINCTNESS


def test_quadruple_gram_valid():
    rng = np.random.default_rng(3)
    for kind in ("generic", "c_plane", "r_plane", "subspace2"):
        for _ in range(10):
            lifts = [standard_lift(x, 2 if kind != "subspace2" else 3)
                     for x in random_quadruple(2 if kind != "subspace2" else 3, kind, rng)]
            G = gram_of(lifts).entries
            assert np.max(np.abs(np.diag(G))) < 1e-9
            assert np.max(np.abs(G - G.conj().T)) < 1e-12


def test_quadruple_kind_validation():
    rng = np.random.default_rng(4)
    with pytest.raises(InvalidParameter):
        random_quadruple(2, "nonsense", rng)
    with pytest.raises(InvalidParameter):
        random_quadruple(1, "generic", rng)
    # a chain quadruple exists even on the circle at n = 1
    p = random_quadruple(1, "c_plane", rng)
    assert len(p) == 4


def test_random_isometry_preserves_form():
    rng = np.random.default_rng(6)
    for n in (1, 2, 3, 5):
        g = random_isometry(n, rng)
        J = form_matrix(n)
        assert np.max(np.abs(g.matrix.conj().T @ J @ g.matrix - J)) < 1e-9


def test_random_isometry_composition_and_action():
    rng = np.random.default_rng(7)
    g = random_isometry(2, rng)
    h = random_isometry(2, rng)
    gh = g @ h
    J = form_matrix(2)
    assert np.max(np.abs(gh.matrix.conj().T @ J @ gh.matrix - J)) < 1e-8
    P = standard_lift(random_boundary_point(2, rng), 2)
    assert apply_isometry(gh, P).is_null()


def test_random_isometry_determinism():
    a = random_isometry(3, np.random.default_rng(8)).matrix
    b = random_isometry(3, np.random.default_rng(8)).matrix
    assert np.array_equal(a, b)


def test_random_moduli_point_on_variety():
    rng = np.random.default_rng(9)
    for _ in range(100):
        m = random_moduli_point(rng)
        assert abs(moduli_residual(m)) <= 1e-9 * (1 + abs(m.x1) ** 2 + abs(m.x2) ** 2)
        assert abs(m.cartan) < math.pi / 2 - 1e-3 + 1e-12
        assert in_moduli_space(m, 2)


def test_random_chain_moduli():
    rng = np.random.default_rng(10)
    for sign in (1.0, -1.0):
        m = random_chain_moduli(rng, sign=sign)
        assert m.cartan == math.copysign(math.pi / 2, sign)
        assert abs(m.x1.real + m.x2.real - 1.0) < 1e-12
        assert m.x1.imag == 0.0 and m.x2.imag == 0.0
        assert abs(moduli_residual(m)) < 1e-12
