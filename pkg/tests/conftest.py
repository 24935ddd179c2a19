import numpy as np
import pytest

from floqudit import pauli as pl
from floqudit.stabilizer import GeneratorSet


def dense_mul(*mats):
    out = mats[0]
    for m in mats[1:]:
        out = out @ m
    return out


def omega(dim: int) -> complex:
    return np.exp(2j * np.pi / dim)


def random_pauli(rng: np.random.Generator, dim: int, n: int) -> pl.Pauli:
    return pl.Pauli(
        dim, int(rng.integers(dim)), rng.integers(dim, size=n), rng.integers(dim, size=n)
    )


def all_paulis(dim: int, n: int, phases: bool = True):
    """Every n-qudit Pauli (optionally with every phase), exhaustively."""
    from itertools import product

    phase_range = range(dim) if phases else (0,)
    for phase in phase_range:
        for xs in product(range(dim), repeat=n):
            for zs in product(range(dim), repeat=n):
                yield pl.Pauli(dim, phase, list(xs), list(zs))


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)


def gen_set(dim, n, *gens):
    return GeneratorSet(dim, n, tuple(gens))
