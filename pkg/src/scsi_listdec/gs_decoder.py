"""Guruswami-Sudan list decoding for Reed-Solomon codes.

Decoding runs in two phases.  Interpolation finds a nonzero ``Q(x, y)`` of
least ``(1, k-1)``-weighted degree with a zero of multiplicity ``m`` at every
``(alpha_i, r_i)``.  Root finding (Roth-Ruckenstein) then extracts every
polynomial ``u`` of degree < k with ``y - u(x)`` dividing ``Q``.  When the
agreement ``t = n - tau`` satisfies ``t*m > D`` for an interpolation degree
budget ``D`` whose monomial count exceeds the number of linear constraints,
every codeword within ``tau`` of the received word is among the roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator

import numpy as np

from . import _kernels
from .errors import InterpolationFailure, RadiusTooLarge, TooLargeToEnumerate
from .rs_code import RsCode

ENUMERATION_LIMIT = 1 << 24


@dataclass(frozen=True)
class DecodeList:
    """Codewords within ``radius_used`` of a received word.

    ``candidates`` is sorted lexicographically so two lists with the same
    members compare equal.
    """

    candidates: tuple
    radius_used: int
    multiplicity: int | None = None

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.candidates)

    def as_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(s) for s in c) for c in self.candidates}

    def __contains__(self, word) -> bool:
        return tuple(int(s) for s in word) in self.as_set()


def _make_list(words, radius, multiplicity) -> DecodeList:
    uniq = sorted({tuple(int(s) for s in w) for w in words})
    cands = tuple(np.array(w, dtype=np.int64) for w in uniq)
    return DecodeList(cands, radius, multiplicity)


# -- parameter selection -----------------------------------------------------


def gs_radius(n: int, k: int) -> int:
    """Largest radius the decoder can certify: ``n - (isqrt((k-1) n) + 1)``."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return n - (isqrt((k - 1) * n) + 1)


def _monomial_count(D: int, v: int) -> int:
    """Number of monomials ``x^i y^j`` with ``i + v j <= D`` (v >= 1)."""
    if D < 0:
        return 0
    J = D // v
    return (J + 1) * (D + 1) - v * J * (J + 1) // 2


def _constraints(n: int, m: int) -> int:
    return n * m * (m + 1) // 2


def certifies(n: int, k: int, tau: int, m: int) -> bool:
    """Whether multiplicity ``m`` guarantees every codeword within ``tau`` is found."""
    t = n - tau
    if t < 1 or m < 1:
        return False
    v = k - 1
    if v == 0:
        return True
    return _monomial_count(t * m - 1, v) > _constraints(n, m)


def min_multiplicity_for(n: int, k: int, tau: int) -> int:
    """Smallest interpolation multiplicity that certifies radius ``tau``."""
    if tau < 0:
        raise ValueError("radius must be nonnegative")
    if tau > gs_radius(n, k):
        raise RadiusTooLarge(f"radius {tau} exceeds gs_radius({n}, {k}) = {gs_radius(n, k)}")
    m = 1
    while not certifies(n, k, tau, m):
        m += 1
    return m


def certified_radius(n: int, k: int, m: int) -> int:
    """Largest radius multiplicity ``m`` certifies (monotone in ``m``)."""
    tau = -1
    while tau + 1 < n and certifies(n, k, tau + 1, m):
        tau += 1
    return tau


def interpolation_shape(n: int, k: int, m: int) -> tuple[int, int]:
    """``(D, L)``: weighted-degree budget and y-degree bound for multiplicity ``m``."""
    C = _constraints(n, m)
    v = k - 1
    if v == 0:
        return 0, C
    D = 0
    while _monomial_count(D, v) <= C:
        D += 1
    return D, D // v


# -- decoding ------------------------------------------------------------------


def interpolate(code: RsCode, received, multiplicity: int) -> np.ndarray:
    """The interpolation polynomial as an array ``Q[l, i]`` (coefficient of y^l x^i)."""
    gf = code.field
    D, L = interpolation_shape(code.n, code.k, multiplicity)
    Q, wdeg = _kernels.interpolate(
        np.ascontiguousarray(code.eval_points, dtype=np.int64),
        np.ascontiguousarray(received, dtype=np.int64),
        multiplicity,
        code.k - 1,
        D,
        L + 1,
        gf.exp,
        gf.log,
    )
    if wdeg < 0:
        raise InterpolationFailure(
            f"no interpolation polynomial of weighted degree <= {D} for m={multiplicity}"
        )
    return _trim(Q)


def _trim(Q: np.ndarray) -> np.ndarray:
    rows = np.flatnonzero(Q.any(axis=1))
    cols = np.flatnonzero(Q.any(axis=0))
    if rows.size == 0:
        return np.zeros((1, 1), dtype=np.int64)
    return Q[: rows[-1] + 1, cols[0] : cols[-1] + 1].copy()


def find_roots(code: RsCode, Q: np.ndarray) -> list[np.ndarray]:
    """Roth-Ruckenstein search for every ``u`` (deg < k) with ``Q(x, u(x)) = 0``.

    Returns coefficient vectors of length k, lowest degree first.  Spurious
    roots are possible; callers check them against the received word.
    """
    gf = code.field
    out = []
    stack = [(_trim(Q), [])]
    while stack:
        P, prefix = stack.pop()
        if len(prefix) == code.k:
            out.append(np.array(prefix, dtype=np.int64))
            continue
        roots = _kernels.univariate_roots(np.ascontiguousarray(P[:, 0]), gf.q, gf.exp, gf.log)
        for gamma in roots:
            nxt = _kernels.shift_substitute(P, int(gamma), gf.exp, gf.log)
            stack.append((_trim(nxt) if nxt.any() else nxt, prefix + [int(gamma)]))
    return out


def gs_list_decode(code: RsCode, received, tau: int, multiplicity: int | None = None) -> DecodeList:
    """Every codeword within Hamming distance ``tau`` of ``received``.

    Parameters
    ----------
    code : RsCode
    received : array_like
        Length-n word over the code's field.
    tau : int
        Decoding radius.
    multiplicity : int, optional
        Interpolation multiplicity; defaults to :func:`min_multiplicity_for`.

    Raises
    ------
    RadiusTooLarge
        If ``tau`` is beyond what ``multiplicity`` can certify.
    """
    received = code._check_len(received, "received word")
    n, k = code.n, code.k
    if multiplicity is None:
        multiplicity = min_multiplicity_for(n, k, tau)
    elif not certifies(n, k, tau, multiplicity):
        raise RadiusTooLarge(f"multiplicity {multiplicity} cannot certify radius {tau} for RS({n},{k})")

    Q = interpolate(code, received, multiplicity)
    found = []
    points = code.eval_points
    gf = code.field
    for u in find_roots(code, Q):
        cw = gf.poly_eval_vec(u, points)
        if np.count_nonzero(cw != received) <= tau:
            found.append(cw)
    return _make_list(found, tau, multiplicity)


def brute_force_list_decode(code: RsCode, received, tau: int, chunk: int = 1 << 14) -> DecodeList:
    """Exhaustive search over all ``q^k`` messages."""
    received = code._check_len(received, "received word")
    q, k = code.field.q, code.k
    total = q**k
    if total > ENUMERATION_LIMIT:
        raise TooLargeToEnumerate(f"q^k = {total} exceeds {ENUMERATION_LIMIT}")
    gf = code.field
    G = code.generator
    found = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cw = np.zeros((idx.size, code.n), dtype=np.int64)
        rem = idx
        for row in range(k):
            digit = rem % q
            rem = rem // q
            cw ^= gf.mul_vec(digit[:, None], G[row][None, :])
        dist = np.count_nonzero(cw != received[None, :], axis=1)
        found.extend(cw[dist <= tau])
    return _make_list(found, tau, None)

