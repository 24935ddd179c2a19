"""Hot numeric kernels: GF(D) tableau reduction and distance enumeration.

Tableau rows pack a Pauli as 2n+1 int64 entries (x | z | phase).  Row
operations are genuine Pauli-group multiplications, so the phase column
stays exact: multiplying row i by row p raised to t adds

    t*l_p + C(t,2)*(z_p.x_p) + z_i.(t*x_p)

to the phase of row i.

Two interchangeable backends implement the same algorithms: numba
``@njit`` kernels (default when numba imports) and pure numpy.  Set
FLOQUDIT_NO_NUMBA=1 to force the numpy path; ``benchmarks/bench_kernels.py``
compares the two.
"""

from __future__ import annotations

import os
from itertools import combinations, product

import numpy as np


def _py_modinv(a: int, dim: int) -> int:
    return pow(int(a), dim - 2, dim)


def _numpy_pauli_rref(rows: np.ndarray, dim: int):
    """Reduced echelon form of packed Pauli rows over GF(dim).

    Pivot columns scan x0..x_{n-1} then z0..z_{n-1}; pivots are normalised
    to 1 by group powers and cleared above and below.  Returns
    (reduced_rows, pivot_columns, bad_phase) where bad_phase is True when
    a dependent combination reduced to w^l * I with l != 0.
    """
    rows = np.array(rows, dtype=np.int64) % dim
    m = rows.shape[0]
    width = rows.shape[1]
    n = (width - 1) // 2
    r = 0
    pivots = []
    for col in range(2 * n):
        piv = -1
        for i in range(r, m):
            if rows[i, col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        rows[[r, piv]] = rows[[piv, r]]
        k = _py_modinv(rows[r, col], dim)
        zx = int(rows[r, n : 2 * n] @ rows[r, :n])
        rows[r, width - 1] = (k * rows[r, width - 1] + (k * (k - 1) // 2) * zx) % dim
        rows[r, : width - 1] = (k * rows[r, : width - 1]) % dim
        for i in range(m):
            if i != r and rows[i, col] != 0:
                t = dim - rows[i, col]
                lp = rows[r, width - 1]
                zx_p = int(rows[r, n : 2 * n] @ rows[r, :n])
                phase = (t * lp + (t * (t - 1) // 2) * zx_p) % dim
                cross = int(rows[i, n : 2 * n] @ ((t * rows[r, :n]) % dim)) % dim
                rows[i, width - 1] = (rows[i, width - 1] + phase + cross) % dim
                rows[i, : width - 1] = (rows[i, : width - 1] + t * rows[r, : width - 1]) % dim
        pivots.append(col)
        r += 1
    bad = bool(np.any(rows[r:, width - 1] != 0))
    return rows[:r].copy(), np.array(pivots, dtype=np.int64), bad


def _single_qudit_types(dim: int) -> np.ndarray:
    """All (a, b) != (0, 0) in lexicographic order, shape (dim*dim-1, 2)."""
    types = [(a, b) for a in range(dim) for b in range(dim) if (a, b) != (0, 0)]
    return np.array(types, dtype=np.int64)


def _numpy_distance_search(tab: np.ndarray, pivots: np.ndarray, dim: int, n: int, w: int):
    """First weight-w Pauli commuting with every tableau row but outside its span.

    Enumerates qudit subsets lexicographically and per-qudit (a, b) types in
    lexicographic order; returns (found, xz_vector).
    """
    types = _single_qudit_types(dim)
    k = types.shape[0]
    tx = tab[:, :n]
    tz = tab[:, n : 2 * n]
    assigns = np.array(list(product(range(k), repeat=w)), dtype=np.int64)
    a_vals = types[assigns, 0]  # (k^w, w)
    b_vals = types[assigns, 1]
    for combo in combinations(range(n), w):
        cols = np.array(combo, dtype=np.int64)
        # c(row, cand) = z_row.a - x_row.b per row; candidate commutes iff all 0
        comm = (tz[:, cols] @ a_vals.T - tx[:, cols] @ b_vals.T) % dim  # (m, k^w)
        ok = ~np.any(comm, axis=0)
        if not np.any(ok):
            continue
        for idx in np.flatnonzero(ok):
            vec = np.zeros(2 * n, dtype=np.int64)
            vec[cols] = a_vals[idx]
            vec[cols + n] = b_vals[idx]
            coeffs = vec[pivots]
            residual = (vec - coeffs @ tab[:, : 2 * n]) % dim
            if np.any(residual):
                return True, vec
        # every commuting candidate on this support was a stabilizer; move on
    return False, np.zeros(2 * n, dtype=np.int64)


USING_NUMBA = False

if not os.environ.get("FLOQUDIT_NO_NUMBA"):
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        njit = None
    if njit is not None:
        USING_NUMBA = True

        @njit(cache=True)
        def _nb_modinv(a, dim):
            result = 1
            base = a % dim
            e = dim - 2
            while e > 0:
                if e & 1:
                    result = (result * base) % dim
                base = (base * base) % dim
                e >>= 1
            return result

        @njit(cache=True)
        def _nb_pauli_rref(rows_in, dim):
            rows = rows_in.copy() % dim
            m, width = rows.shape
            n = (width - 1) // 2
            pivots = np.empty(2 * n, dtype=np.int64)
            r = 0
            for col in range(2 * n):
                piv = -1
                for i in range(r, m):
                    if rows[i, col] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for c in range(width):
                        tmp = rows[r, c]
                        rows[r, c] = rows[piv, c]
                        rows[piv, c] = tmp
                k = _nb_modinv(rows[r, col], dim)
                zx = 0
                for c in range(n):
                    zx += rows[r, n + c] * rows[r, c]
                rows[r, width - 1] = (
                    k * rows[r, width - 1] + (k * (k - 1) // 2) * zx
                ) % dim
                for c in range(width - 1):
                    rows[r, c] = (k * rows[r, c]) % dim
                for i in range(m):
                    if i != r and rows[i, col] != 0:
                        t = dim - rows[i, col]
                        zx_p = 0
                        for c in range(n):
                            zx_p += rows[r, n + c] * rows[r, c]
                        phase = (
                            t * rows[r, width - 1] + (t * (t - 1) // 2) * zx_p
                        ) % dim
                        cross = 0
                        for c in range(n):
                            cross += rows[i, n + c] * ((t * rows[r, c]) % dim)
                        rows[i, width - 1] = (
                            rows[i, width - 1] + phase + cross
                        ) % dim
                        for c in range(width - 1):
                            rows[i, c] = (rows[i, c] + t * rows[r, c]) % dim
                pivots[r] = col
                r += 1
            bad = False
            for i in range(r, m):
                if rows[i, width - 1] != 0:
                    bad = True
            return rows[:r].copy(), pivots[:r].copy(), bad

        @njit(cache=True)
        def _nb_distance_search(tab, pivots, dim, n, w, types):
            m = tab.shape[0]
            npiv = pivots.shape[0]
            k = types.shape[0]
            combo = np.empty(w, dtype=np.int64)
            for i in range(w):
                combo[i] = i
            assign = np.empty(w, dtype=np.int64)
            vec = np.empty(2 * n, dtype=np.int64)
            while True:
                for i in range(w):
                    assign[i] = 0
                while True:
                    commutes = True
                    for row in range(m):
                        c = 0
                        for i in range(w):
                            q = combo[i]
                            a = types[assign[i], 0]
                            b = types[assign[i], 1]
                            c += tab[row, n + q] * a - tab[row, q] * b
                        if c % dim != 0:
                            commutes = False
                            break
                    if commutes:
                        for c in range(2 * n):
                            vec[c] = 0
                        for i in range(w):
                            q = combo[i]
                            vec[q] = types[assign[i], 0]
                            vec[q + n] = types[assign[i], 1]
                        member = True
                        for c in range(2 * n):
                            acc = vec[c]
                            for r in range(npiv):
                                acc -= vec[pivots[r]] * tab[r, c]
                            if acc % dim != 0:
                                member = False
                                break
                        if not member:
                            return True, vec
                    pos = w - 1
                    while pos >= 0 and assign[pos] == k - 1:
                        assign[pos] = 0
                        pos -= 1
                    if pos < 0:
                        break
                    assign[pos] += 1
                pos = w - 1
                while pos >= 0 and combo[pos] == n - w + pos:
                    pos -= 1
                if pos < 0:
                    break
                combo[pos] += 1
                for i in range(pos + 1, w):
                    combo[i] = combo[i - 1] + 1
            return False, np.zeros(2 * n, dtype=np.int64)


def pauli_rref(rows: np.ndarray, dim: int):
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.shape[0] == 0:
        return rows.copy(), np.empty(0, dtype=np.int64), False
    if USING_NUMBA:
        reduced, pivots, bad = _nb_pauli_rref(rows, dim)
        return reduced, pivots, bool(bad)
    return _numpy_pauli_rref(rows, dim)


def distance_search(tab: np.ndarray, pivots: np.ndarray, dim: int, n: int, w: int):
    tab = np.ascontiguousarray(tab, dtype=np.int64)
    pivots = np.ascontiguousarray(pivots, dtype=np.int64)
    if w < 1 or w > n:
        return False, np.zeros(2 * n, dtype=np.int64)
    if USING_NUMBA:
        found, vec = _nb_distance_search(
            tab, pivots, dim, n, w, _single_qudit_types(dim)
        )
        return bool(found), vec
    return _numpy_distance_search(tab, pivots, dim, n, w)
