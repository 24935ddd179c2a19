"""Qudit stabilizer groups with exact phase tracking.

A :class:`GeneratorSet` holds an ordered list of mutually commuting Paulis
generating an instantaneous stabilizer group.  Canonicalisation reduces
the packed (x | z | phase) rows to a unique reduced-echelon tableau using
genuine group multiplications, so two generator lists describe the same
group (including phases) exactly when their tableaux coincide.

Measurement follows the three qudit update rules:

1. the observable is already in the group up to phase: the group is
   unchanged and the outcome is the recorded phase, deterministically;
2. it commutes with everything but is not a member: append w^{-o} P;
3. it fails to commute with some generators: the lowest-indexed
   non-commuting generator g* absorbs the others (g_i <- g_i * g*^{t_i}
   with t_i = -c(P,g_i)/c(P,g*), which makes them commute with P) and is
   then itself replaced by w^{-o} P.

Outcomes for rules 2 and 3 are forced, all-zero, or drawn uniformly from
[D]; uniformity for rule 2 assumes the undetermined degrees of freedom
are maximally mixed, which holds for schedules started from the trivial
group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from floqudit import pauli as pl
from floqudit._kernels import pauli_rref
from floqudit.pauli import Pauli


class MeasurementError(ValueError):
    """Forced outcome contradicts a deterministic measurement."""


class InvalidGroupError(ValueError):
    """Generators do not define a stabilizer group."""


@dataclass(frozen=True)
class MeasurementOutcome:
    value: int
    deterministic: bool


@dataclass(frozen=True)
class CanonicalTableau:
    """Unique reduced-echelon presentation of a stabilizer group."""

    dim: int
    n: int
    rows: tuple[Pauli, ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def packed(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, 2 * self.n + 1), dtype=np.int64)
        return np.stack([r.packed() for r in self.rows])

    def symplectic_equal(self, other: "CanonicalTableau") -> bool:
        """Equality of the phaseless row spaces (pivots and x/z entries)."""
        return (
            self.dim == other.dim
            and self.n == other.n
            and self.pivots == other.pivots
            and all(
                np.array_equal(a.x, b.x) and np.array_equal(a.z, b.z)
                for a, b in zip(self.rows, other.rows)
            )
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalTableau):
            return NotImplemented
        return (
            self.symplectic_equal(other)
            and all(a.phase == b.phase for a, b in zip(self.rows, other.rows))
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.n, self.pivots, self.rows))


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered, possibly dependent, mutually commuting Pauli generators."""

    dim: int
    n: int
    gens: tuple[Pauli, ...]

    def __post_init__(self):
        pl.check_prime(self.dim)
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.dim != self.dim or g.n != self.n:
                raise ValueError(
                    f"generator {g!r} incompatible with D={self.dim}, n={self.n}"
                )
        if self.gens:
            x = np.stack([g.x for g in self.gens])
            z = np.stack([g.z for g in self.gens])
            comm = (z @ x.T - x @ z.T) % self.dim
            if np.any(comm):
                i, j = np.argwhere(comm)[0]
                raise InvalidGroupError(
                    f"generators {i} and {j} do not commute "
                    f"(c = {int(comm[i, j])})"
                )

    @classmethod
    def from_paulis(cls, gens, dim: int | None = None, n: int | None = None):
        gens = tuple(gens)
        if not gens and (dim is None or n is None):
            raise ValueError("empty generator set needs explicit dim and n")
        if dim is None:
            dim = gens[0].dim
        if n is None:
            n = gens[0].n
        return cls(dim, n, gens)

    def __len__(self) -> int:
        return len(self.gens)

    @cached_property
    def canonical(self) -> CanonicalTableau:
        if not self.gens:
            return CanonicalTableau(self.dim, self.n, (), ())
        packed = np.stack([g.packed() for g in self.gens])
        reduced, pivots, bad = pauli_rref(packed, self.dim)
        if bad:
            raise InvalidGroupError(
                "generators produce w^l * identity with l != 0; "
                "not a valid stabilizer group"
            )
        rows = tuple(pl.from_packed(self.dim, row) for row in reduced)
        return CanonicalTableau(self.dim, self.n, rows, tuple(int(c) for c in pivots))

    @property
    def rank(self) -> int:
        return self.canonical.rank

    def contains_up_to_phase(self, p: Pauli) -> int | None:
        """Outcome o with w^{-o} P in the group, or None if no phase of P is.

        Solves P's symplectic coordinates against the canonical rows, then
        rebuilds the matching group element by group multiplication and
        reads off the phase gap, so the result is the deterministic
        measurement outcome of P on the stabilized states.
        """
        if p.dim != self.dim or p.n != self.n:
            raise ValueError("operator incompatible with this generator set")
        tab = self.canonical
        vec = p.symplectic()
        if tab.rank == 0:
            if np.any(vec):
                return None
            return (p.phase - 0) % self.dim
        rows = tab.packed()
        pivots = np.array(tab.pivots, dtype=np.int64)
        coeffs = vec[pivots]
        residual = (vec - coeffs @ rows[:, : 2 * self.n]) % self.dim
        if np.any(residual):
            return None
        elem = pl.identity(self.dim, self.n)
        for c, row in zip(coeffs, tab.rows):
            if c:
                elem = elem * row**int(c)
        return (p.phase - elem.phase) % self.dim

    def __contains__(self, p: Pauli) -> bool:
        """Exact membership, phase included."""
        return self.contains_up_to_phase(p) == 0

    def commutes_with_all(self, p: Pauli) -> bool:
        return all(pl.commutation(p, g) == 0 for g in self.gens)


def measure(
    s: GeneratorSet,
    p: Pauli,
    *,
    forced: int | None = None,
    rng: np.random.Generator | None = None,
) -> tuple[GeneratorSet, MeasurementOutcome]:
    """Measure Pauli observable P on a stabilizer group.

    Outcome mode: ``forced`` pins the outcome, ``rng`` samples uniformly
    from [D], and neither means all-zero (rule-1 measurements still report
    their deterministic value).  Returns the updated group and the outcome.
    """
    if p.dim != s.dim or p.n != s.n:
        raise ValueError("observable incompatible with generator set")
    if forced is not None and not 0 <= forced < s.dim:
        raise ValueError(f"forced outcome {forced} not a residue mod {s.dim}")
    cvals = [pl.commutation(p, g) for g in s.gens]
    noncomm = [i for i, c in enumerate(cvals) if c != 0]
    if not noncomm:
        det = s.contains_up_to_phase(p)
        if det is not None:
            if forced is not None and forced != det:
                raise MeasurementError(
                    f"outcome {forced} forced on deterministic measurement "
                    f"with value {det}"
                )
            return s, MeasurementOutcome(det, True)
        o = _draw(s.dim, forced, rng)
        new = s.gens + (p.mul_phase(-o),)
        return GeneratorSet(s.dim, s.n, new), MeasurementOutcome(o, False)
    o = _draw(s.dim, forced, rng)
    star = noncomm[0]
    c_star = cvals[star]
    inv_star = pow(int(c_star), s.dim - 2, s.dim)
    gens = list(s.gens)
    g_star = gens[star]
    for i in noncomm[1:]:
        t = (-cvals[i] * inv_star) % s.dim
        gens[i] = gens[i] * g_star**t
    gens[star] = p.mul_phase(-o)
    return GeneratorSet(s.dim, s.n, tuple(gens)), MeasurementOutcome(o, False)


def _draw(dim: int, forced: int | None, rng: np.random.Generator | None) -> int:
    if forced is not None:
        return forced
    if rng is not None:
        return int(rng.integers(dim))
    return 0


def groups_equal(a: GeneratorSet, b: GeneratorSet) -> bool:
    return a.canonical == b.canonical


def rank(s: GeneratorSet) -> int:
    return s.rank


def codespace_dimension_oracle(s: GeneratorSet, bound: int | None = None) -> int:
    """Dense-matrix dimension of the joint +1 eigenspace; equals D^{n - rank}.

    Computes trace of prod_g (1/D sum_j g^j); test oracle only, subject to
    the dense size bound.
    """
    proj = codespace_projector(s, bound)
    return int(round(proj.trace().real))


def codespace_projector(s: GeneratorSet, bound: int | None = None) -> np.ndarray:
    dim_total = s.dim**s.n
    if bound is None:
        bound = pl.oracle_bound()
    if dim_total > bound:
        raise ValueError(f"dense oracle size {dim_total} exceeds bound {bound}")
    proj = np.eye(dim_total, dtype=complex)
    for g in s.gens:
        mat = pl.dense_matrix(g, bound)
        term = np.zeros_like(proj)
        acc = np.eye(dim_total, dtype=complex)
        for _ in range(s.dim):
            term += acc
            acc = acc @ mat
        proj = proj @ (term / s.dim)
    return proj


def save_generator_set(s: GeneratorSet) -> str:
    """Fixture format: header `D=<d> n=<n>`, one Pauli literal per line."""
    lines = [f"D={s.dim} n={s.n}"]
    lines.extend(pl.to_literal(g) for g in s.gens)
    return "\n".join(lines) + "\n"


def load_generator_set(text: str) -> GeneratorSet:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty generator-set fixture")
    header = lines[0].split()
    try:
        fields = dict(item.split("=") for item in header)
        dim = int(fields["D"])
        n = int(fields["n"])
    except (ValueError, KeyError) as exc:
        raise ValueError(f"malformed fixture header {lines[0]!r}") from exc
    gens = tuple(pl.from_literal(ln, dim, n) for ln in lines[1:])
    return GeneratorSet(dim, n, gens)
