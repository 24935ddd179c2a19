"""Exact generalized Pauli arithmetic for prime-dimension qudits.

An n-qudit Pauli is stored as a phase exponent ``l`` together with X- and
Z-exponent vectors ``x``, ``z`` over Z_D, representing

    w^l * prod_i X_i^{x[i]} Z_i^{z[i]},    w = exp(2j*pi/D),

with the X factor written to the left of the Z factor on every qudit
(normal form).  Since ZX = w XZ, multiplication picks up the reordering
phase

    (w^a X^p Z^q) (w^b X^r Z^s) = w^{a+b+q.r} X^{p+r} Z^{q+s}

and any two Paulis obey P Q = w^{c(P,Q)} Q P with the commutation
function c(P,Q) = sum_i (z_P[i] x_Q[i] - x_P[i] z_Q[i]).

All phases are powers of w only; no operation in this module can produce
any other complex scalar.  Values are immutable and safe to share.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_DIM = 1 << 16
DEFAULT_ORACLE_BOUND = 27

_TERM_RE = re.compile(
    r"^\s*(?:w\^(?P<w>-?\d+))?\s*(?:X\^(?P<x>-?\d+))?\s*(?:Z\^(?P<z>-?\d+))?"
    r"\s*(?:@\s*(?P<v>\d+))?\s*$"
)


@lru_cache(maxsize=None)
def check_prime(dim: int) -> int:
    """Validate a qudit dimension: prime and 2 <= dim < 2**16."""
    if not isinstance(dim, (int, np.integer)):
        raise ValueError(f"dimension must be an integer, got {dim!r}")
    dim = int(dim)
    if dim < 2 or dim >= MAX_DIM:
        raise ValueError(f"dimension must satisfy 2 <= D < 2^16, got {dim}")
    k = 2
    while k * k <= dim:
        if dim % k == 0:
            raise ValueError(f"dimension must be prime, got {dim} = {k}*{dim // k}")
        k += 1
    return dim


def oracle_bound() -> int:
    """Dense-matrix size cap D^n; override with FLOQUDIT_ORACLE_BOUND."""
    raw = os.environ.get("FLOQUDIT_ORACLE_BOUND")
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    return int(raw)


def _as_residues(values, dim: int, n: int | None = None) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64) % dim
    if arr.ndim != 1:
        raise ValueError("exponent vectors must be one-dimensional")
    if n is not None and arr.shape[0] != n:
        raise ValueError(f"expected {n} exponents, got {arr.shape[0]}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class Pauli:
    """n-qudit generalized Pauli w^phase * prod_i X^{x[i]} Z^{z[i]}."""

    dim: int
    phase: int
    x: np.ndarray
    z: np.ndarray

    def __post_init__(self):
        check_prime(self.dim)
        object.__setattr__(self, "phase", int(self.phase) % self.dim)
        object.__setattr__(self, "x", _as_residues(self.x, self.dim))
        object.__setattr__(self, "z", _as_residues(self.z, self.dim, self.x.shape[0]))

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @property
    def weight(self) -> int:
        """Number of qudits carrying a non-identity factor."""
        return int(np.count_nonzero((self.x != 0) | (self.z != 0)))

    def is_identity(self, up_to_phase: bool = False) -> bool:
        bare = not np.any(self.x) and not np.any(self.z)
        return bare if up_to_phase else bare and self.phase == 0

    def _check_compatible(self, other: "Pauli") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.n != other.n:
            raise ValueError(f"qudit-count mismatch: {self.n} vs {other.n}")

    def __mul__(self, other: "Pauli") -> "Pauli":
        self._check_compatible(other)
        phase = self.phase + other.phase + int(self.z @ other.x)
        return Pauli(self.dim, phase, self.x + other.x, self.z + other.z)

    def __pow__(self, e: int) -> "Pauli":
        if e < 0:
            return self.inverse() ** (-e)
        # w^l X^x Z^z raised to e: phase e*l + C(e,2) * (z.x) from e-1 swaps.
        phase = e * self.phase + (e * (e - 1) // 2) * int(self.z @ self.x)
        return Pauli(self.dim, phase, e * self.x, e * self.z)

    def inverse(self) -> "Pauli":
        """True group inverse: multiply(P, inverse(P)) is the phase-0 identity."""
        phase = -self.phase + int(self.z @ self.x)
        return Pauli(self.dim, phase, -self.x, -self.z)

    def with_phase(self, phase: int) -> "Pauli":
        return Pauli(self.dim, phase, self.x, self.z)

    def mul_phase(self, shift: int) -> "Pauli":
        """Multiply by the scalar w^shift."""
        return Pauli(self.dim, self.phase + shift, self.x, self.z)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pauli):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.phase, self.x.tobytes(), self.z.tobytes()))

    def __repr__(self) -> str:
        return f"Pauli({self.dim}, {to_literal(self)!r})"

    def symplectic(self) -> np.ndarray:
        """Coordinates (x | z) over GF(D), without the phase."""
        return np.concatenate([self.x, self.z])

    def packed(self) -> np.ndarray:
        """Coordinates (x | z | phase), the tableau row encoding."""
        return np.concatenate([self.x, self.z, [self.phase]])


def identity(dim: int, n: int) -> Pauli:
    return Pauli(dim, 0, np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))


def single(dim: int, a: int, b: int, phase: int = 0) -> Pauli:
    """One-qudit Pauli w^phase X^a Z^b."""
    return Pauli(dim, phase, [a], [b])


def embed(dim: int, n: int, v: int, a: int, b: int, phase: int = 0) -> Pauli:
    """n-qudit Pauli that is w^phase X^a Z^b at qudit v and identity elsewhere."""
    if not 0 <= v < n:
        raise ValueError(f"qudit index {v} out of range for n={n}")
    x = np.zeros(n, dtype=np.int64)
    z = np.zeros(n, dtype=np.int64)
    x[v] = a
    z[v] = b
    return Pauli(dim, phase, x, z)


def from_packed(dim: int, row: np.ndarray) -> Pauli:
    n = (len(row) - 1) // 2
    return Pauli(dim, int(row[2 * n]), row[:n], row[n : 2 * n])


def commutation(p: Pauli, q: Pauli) -> int:
    """Exponent c with P Q = w^c Q P; zero iff the operators commute.

    For single-qudit P_{a,b}, P_{a',b'} this is -a b' + b a'.  Phases of
    either operand never contribute.
    """
    p._check_compatible(q)
    return int(p.z @ q.x - p.x @ q.z) % p.dim


def multiply(p: Pauli, q: Pauli) -> Pauli:
    return p * q


def power(p: Pauli, e: int) -> Pauli:
    return p**e


def weight(p: Pauli) -> int:
    return p.weight


def dense_matrix(p: Pauli, bound: int | None = None) -> np.ndarray:
    """Exact D^n x D^n complex matrix of the operator; test oracle only.

    X = sum_j |j+1><j| and Z = sum_j w^j |j><j| on each qudit, tensored in
    qudit order, times w^phase.  Refuses sizes above the configured bound.
    """
    if bound is None:
        bound = oracle_bound()
    size = p.dim**p.n
    if size > bound:
        raise ValueError(
            f"dense oracle size D^n = {size} exceeds bound {bound}; "
            "raise FLOQUDIT_ORACLE_BOUND to override"
        )
    d = p.dim
    omega = np.exp(2j * np.pi / d)
    shift = np.zeros((d, d), dtype=complex)
    shift[(np.arange(d) + 1) % d, np.arange(d)] = 1.0
    clock = np.diag(omega ** np.arange(d))
    out = np.array([[omega**p.phase]])
    for a, b in zip(p.x, p.z):
        factor = np.linalg.matrix_power(shift, int(a)) @ np.linalg.matrix_power(
            clock, int(b)
        )
        out = np.kron(out, factor)
    return out


def to_literal(p: Pauli) -> str:
    """Canonical text form: `w^l X^a Z^b @ v` terms joined by `*`.

    The phase rides on the first term; the bare identity prints as `w^0`.
    """
    support = np.flatnonzero((p.x != 0) | (p.z != 0))
    if support.size == 0:
        return f"w^{p.phase}"
    terms = [f"X^{p.x[v]} Z^{p.z[v]} @ {v}" for v in support]
    if p.phase != 0:
        terms[0] = f"w^{p.phase} " + terms[0]
    return " * ".join(terms)


def from_literal(text: str, dim: int, n: int) -> Pauli:
    """Parse a Pauli literal; inverse of to_literal.

    Terms are multiplied left to right as group elements, so literals such
    as `Z^1 @ 0 * X^1 @ 0` resolve to w X Z with the reordering phase.
    """
    result = identity(dim, n)
    for raw in text.split("*"):
        m = _TERM_RE.match(raw)
        if m is None or (raw.strip() and not any(m.group(k) for k in ("w", "x", "z", "v"))):
            raise ValueError(f"malformed Pauli term {raw!r}")
        w = int(m.group("w")) if m.group("w") else 0
        a = int(m.group("x")) if m.group("x") else 0
        b = int(m.group("z")) if m.group("z") else 0
        if m.group("v") is not None:
            term = embed(dim, n, int(m.group("v")), a, b, w)
        else:
            if a or b:
                raise ValueError(f"term {raw!r} has exponents but no `@ v` qudit")
            term = identity(dim, n).with_phase(w)
        result = result * term
    return result
