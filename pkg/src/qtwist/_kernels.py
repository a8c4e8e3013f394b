"""Numba-compiled inner loops shared by the linear algebra and distance
estimation code paths.

All kernels work on int64 arrays holding canonical residues mod q and
take the field's inverse table as an array argument.  They are pure
functions of their inputs, which keeps results bit-reproducible.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MASK64 = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True)
def rref_inplace(a, q, inv_table, pivot_cols):
    """Reduce ``a`` to reduced row echelon form in place.

    Pivoting is deterministic: columns are scanned left to right and the
    first nonzero entry at or below the current pivot row is used.
    ``pivot_cols`` must have length >= min(rows, cols); the number of
    pivots (the rank) is returned.
    """
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        sel = -1
        for r in range(rank, rows):
            if a[r, col] != 0:
                sel = r
                break
        if sel < 0:
            continue
        if sel != rank:
            for c in range(cols):
                tmp = a[sel, c]
                a[sel, c] = a[rank, c]
                a[rank, c] = tmp
        piv = a[rank, col]
        if piv != 1:
            s = inv_table[piv]
            for c in range(cols):
                a[rank, c] = (a[rank, c] * s) % q
        for r in range(rows):
            if r != rank and a[r, col] != 0:
                factor = q - a[r, col]
                for c in range(cols):
                    a[r, c] = (a[r, c] + factor * a[rank, c]) % q
        pivot_cols[rank] = col
        rank += 1
    return rank


@njit(cache=True)
def reduce_against_rref(v, r, pivot_cols, rank, q):
    """Subtract rowspace(r) components from ``v`` in place.

    ``r`` must be in reduced row echelon form with the given pivots.
    Afterwards ``v`` is zero iff it lay in the row space.
    """
    cols = r.shape[1]
    for i in range(rank):
        p = pivot_cols[i]
        coeff = v[p]
        if coeff != 0:
            factor = q - coeff
            for c in range(cols):
                v[c] = (v[c] + factor * r[i, c]) % q


@njit(cache=True)
def is_zero_vec(v):
    for c in range(v.shape[0]):
        if v[c] != 0:
            return False
    return True


@njit(cache=True, inline="always")
def splitmix64(state):
    """One step of the splitmix64 stream; returns (new_state, output)."""
    state = (state + np.uint64(0x9E3779B97F4A7C15)) & MASK64
    z = state
    z = ((z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)) & MASK64
    z = ((z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)) & MASK64
    z = z ^ (z >> np.uint64(31))
    return state, z


@njit(cache=True, inline="always")
def mix_key(seed, stream, counter):
    """Derive an independent 64-bit RNG state from (seed, stream, counter).

    Keying by counter makes draws order-independent: trial i sees the
    same stream no matter how trials are scheduled across threads.
    """
    s = np.uint64(seed) ^ (np.uint64(stream) * np.uint64(0xA0761D6478BD642F))
    s = (s + np.uint64(counter) * np.uint64(0xE7037ED1A0B428DB)) & MASK64
    s, _ = splitmix64(s)
    s, _ = splitmix64(s)
    return s


@njit(cache=True)
def fill_permutation(perm, state):
    """Fisher-Yates shuffle of identity into ``perm`` using splitmix64."""
    n = perm.shape[0]
    for i in range(n):
        perm[i] = i
    for i in range(n - 1, 0, -1):
        state, z = splitmix64(state)
        j = int(z % np.uint64(i + 1))
        tmp = perm[i]
        perm[i] = perm[j]
        perm[j] = tmp
    return state
