"""Pauli algebra: spec examples plus dense-matrix oracle agreement."""

import numpy as np
import pytest

from conftest import all_paulis, omega, random_pauli

from floqudit import pauli as pl


def test_prime_validation():
    pl.check_prime(2)
    pl.check_prime(3)
    pl.check_prime(65521)
    for bad in (0, 1, 4, 6, 9, 1 << 16):
        with pytest.raises(ValueError):
            pl.check_prime(bad)


@pytest.mark.parametrize("dim", [2, 3, 5])
def test_commutation_z_x(dim):
    # ZX = w XZ for every D
    z = pl.single(dim, 0, 1)
    x = pl.single(dim, 1, 0)
    assert pl.commutation(z, x) == 1
    assert pl.commutation(x, x) == 0


def test_commutation_xz_pair_d3():
    # c(XZ, XZ^{-1}) = 2 at D=3, confirmed against 3x3 matrices below
    p = pl.single(3, 1, 1)
    q = pl.single(3, 1, 2)
    c = pl.commutation(p, q)
    assert c == 2
    dp, dq = pl.dense_matrix(p), pl.dense_matrix(q)
    assert np.allclose(dp @ dq, omega(3) ** c * (dq @ dp))


def test_commutation_ignores_phases(rng):
    for _ in range(50):
        p = random_pauli(rng, 5, 3)
        q = random_pauli(rng, 5, 3)
        assert pl.commutation(p, q) == pl.commutation(
            p.with_phase(0), q.with_phase(0)
        )


def test_multiply_z_times_x():
    # ZX = w XZ: product phase rule l_P + l_Q + z_P.x_Q
    dim = 3
    z = pl.single(dim, 0, 1)
    x = pl.single(dim, 1, 0)
    prod = z * x
    assert (prod.phase, int(prod.x[0]), int(prod.z[0])) == (1, 1, 1)
    prod_xz = x * z
    assert (prod_xz.phase, int(prod_xz.x[0]), int(prod_xz.z[0])) == (0, 1, 1)


def test_multiply_xz_by_xz_inverse_d3():
    # (XZ)(XZ^{-1}) = w X^2 at D=3, checked against the dense product
    p = pl.single(3, 1, 1)
    q = pl.single(3, 1, 2)
    prod = p * q
    assert (prod.phase, int(prod.x[0]), int(prod.z[0])) == (1, 2, 0)
    assert np.allclose(
        pl.dense_matrix(prod), pl.dense_matrix(p) @ pl.dense_matrix(q)
    )


def test_mismatch_errors():
    with pytest.raises(ValueError):
        pl.commutation(pl.single(3, 1, 0), pl.single(5, 1, 0))
    with pytest.raises(ValueError):
        pl.identity(3, 2) * pl.identity(3, 3)


@pytest.mark.parametrize("dim", [2, 3, 5])
def test_power_and_inverse(dim):
    x = pl.single(dim, 1, 0)
    assert (x**dim).is_identity()
    z = pl.single(dim, 0, 1)
    zinv = z.inverse()
    assert zinv.phase == 0 and int(zinv.z[0]) == dim - 1
    assert (z * zinv).is_identity()


def test_power_xz_squared_d3():
    # (XZ)^2 = w X^2 Z^2 at D=3, dense-verified
    p = pl.single(3, 1, 1)
    sq = p**2
    assert (sq.phase, int(sq.x[0]), int(sq.z[0])) == (1, 2, 2)
    d = pl.dense_matrix(p)
    assert np.allclose(pl.dense_matrix(sq), d @ d)


def test_power_matches_repeated_multiplication(rng):
    for dim in (2, 3, 5):
        for _ in range(20):
            p = random_pauli(rng, dim, 2)
            acc = pl.identity(dim, 2)
            for e in range(2 * dim):
                assert p**e == acc
                acc = acc * p
            assert p**-1 == p.inverse()


def test_weight():
    assert pl.identity(3, 4).weight == 0
    assert pl.embed(3, 5, 2, 1, 0).weight == 1
    for p_exp in range(1, 3):
        for a in range(3):
            for b in range(3):
                if (a, b) == (0, 0):
                    continue
                p = pl.single(3, a, b)
                assert (p**p_exp).weight == p.weight == 1


def test_embed():
    ident = pl.embed(3, 2, 0, 0, 0)
    assert ident.is_identity()
    z0 = pl.embed(3, 2, 0, 0, 1)
    assert z0.weight == 1 and int(z0.z[0]) == 1 and int(z0.z[1]) == 0
    xz3 = pl.embed(5, 4, 3, 1, 1)
    assert xz3.weight == 1 and int(xz3.x[3]) == 1 and int(xz3.z[3]) == 1
    with pytest.raises(ValueError):
        pl.embed(3, 2, 2, 1, 0)


def test_dense_matrix_basics():
    x2 = pl.dense_matrix(pl.single(2, 1, 0))
    assert np.allclose(x2, [[0, 1], [1, 0]])
    z3 = pl.dense_matrix(pl.single(3, 0, 1))
    w = omega(3)
    assert np.allclose(z3, np.diag([1, w, w**2]))
    scaled_ident = pl.dense_matrix(pl.identity(3, 1).with_phase(1))
    assert np.allclose(scaled_ident, w * np.eye(3))


def test_dense_matrix_bound(monkeypatch):
    big = pl.identity(3, 4)  # 3^4 = 81 > default bound 27
    with pytest.raises(ValueError):
        pl.dense_matrix(big)
    monkeypatch.setenv("FLOQUDIT_ORACLE_BOUND", "100")
    assert pl.oracle_bound() == 100
    assert pl.dense_matrix(big).shape == (81, 81)
    with pytest.raises(ValueError):
        pl.dense_matrix(pl.identity(3, 5))  # 243 > 100 still refused


def test_antisymmetry_and_bilinearity(rng):
    for dim in (2, 3, 5):
        for _ in range(30):
            p, q, r = (random_pauli(rng, dim, 3) for _ in range(3))
            assert (pl.commutation(p, q) + pl.commutation(q, p)) % dim == 0
            assert pl.commutation(p, q * r) == (
                pl.commutation(p, q) + pl.commutation(p, r)
            ) % dim


@pytest.mark.parametrize("dim,n", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_dense_oracle_agreement_exhaustive(dim, n):
    """multiply and commutation agree with dense matrices on all phaseless pairs."""
    w = omega(dim)
    ops = list(all_paulis(dim, n, phases=False))
    mats = {op: pl.dense_matrix(op) for op in ops}
    for p in ops:
        for q in ops:
            prod = p * q
            dense_prod = mats[p] @ mats[q]
            assert np.allclose(pl.dense_matrix(prod), dense_prod, atol=1e-9)
            c = pl.commutation(p, q)
            assert np.allclose(dense_prod, w**c * (mats[q] @ mats[p]), atol=1e-9)


def test_dense_oracle_agreement_random_n3(rng):
    for dim in (2, 3):
        for _ in range(25):
            p = random_pauli(rng, dim, 3)
            q = random_pauli(rng, dim, 3)
            bound = dim**3
            dp = pl.dense_matrix(p, bound)
            dq = pl.dense_matrix(q, bound)
            assert np.allclose(pl.dense_matrix(p * q, bound), dp @ dq, atol=1e-9)
            c = pl.commutation(p, q)
            assert np.allclose(dp @ dq, omega(dim) ** c * (dq @ dp), atol=1e-9)


def test_group_laws(rng):
    for dim in (2, 3, 5):
        for _ in range(30):
            p, q, r = (random_pauli(rng, dim, 4) for _ in range(3))
            assert (p * q) * r == p * (q * r)
            assert (p * p.inverse()).is_identity()


def test_literal_round_trip(rng):
    assert pl.to_literal(pl.identity(3, 2)) == "w^0"
    p = pl.from_literal("w^1 X^2 Z^0 @ 3", 5, 6)
    assert p.phase == 1 and int(p.x[3]) == 2 and int(p.z[3]) == 0
    for dim in (2, 3, 5):
        for _ in range(40):
            p = random_pauli(rng, dim, 5)
            assert pl.from_literal(pl.to_literal(p), dim, 5) == p


def test_literal_products_multiply_as_group_elements():
    # Z then X at the same qudit picks up the reordering phase
    p = pl.from_literal("Z^1 @ 0 * X^1 @ 0", 3, 1)
    assert p == pl.single(3, 1, 1, phase=1)
    with pytest.raises(ValueError):
        pl.from_literal("X^1 Z^1", 3, 1)
    with pytest.raises(ValueError):
        pl.from_literal("bogus", 3, 1)


def test_negative_exponents_in_literals():
    p = pl.from_literal("X^-2 @ 0", 5, 1)
    assert int(p.x[0]) == 3
