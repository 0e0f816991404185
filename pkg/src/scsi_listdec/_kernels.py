"""Compiled inner loops for the list decoder.

Bivariate polynomials are dense int64 arrays ``P[l, i]`` holding the
coefficient of ``y^l x^i``.  Field multiplication goes through the doubled
exp table and the log table of :class:`~scsi_listdec.finite_field.GaloisField`.
"""

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _mul(a, b, exp, log):
    if a == 0 or b == 0:
        return 0
    return exp[log[a] + log[b]]


@njit(cache=True)
def interpolate(xs, ys, mult, v, dmax, nrows, exp, log):
    """Koetter's iterative interpolation.

    Finds the polynomial of least ``(1, v)``-weighted degree (ties broken by
    y-degree) having a zero of multiplicity ``mult`` at every ``(xs[p], ys[p])``.
    Candidates are ``nrows`` polynomials seeded with ``y^j``; any whose weighted
    degree exceeds ``dmax`` is retired since it can no longer be the minimum.

    At each point the Hasse derivatives ``D_{r,s}`` of every candidate are
    computed once and then carried through the updates: a linear combination
    of candidates combines their derivative tables, and multiplying by
    ``(x - a)`` shifts the table by one in ``r``.

    Returns ``(poly, wdeg)``; ``wdeg == -1`` when every candidate was retired.
    """
    width = dmax + 1
    order = exp.shape[0] // 2
    G = np.zeros((nrows, nrows, width), dtype=np.int64)
    wdeg = np.empty(nrows, dtype=np.int64)
    alive = np.zeros(nrows, dtype=np.bool_)
    for j in range(nrows):
        G[j, j, 0] = 1
        wdeg[j] = v * j
        alive[j] = wdeg[j] <= dmax
    H = np.zeros((nrows, mult, mult), dtype=np.int64)
    T = np.zeros((nrows, mult), dtype=np.int64)
    loga = np.empty(width, dtype=np.int64)
    bpow = np.empty(nrows, dtype=np.int64)
    tmp = np.empty(width, dtype=np.int64)

    for p in range(xs.shape[0]):
        a = xs[p]
        b = ys[p]
        la = log[a]
        for e in range(width):
            loga[e] = (la * e) % order
        bpow[0] = 1
        for e in range(1, nrows):
            bpow[e] = _mul(bpow[e - 1], b, exp, log)

        for j in range(nrows):
            if not alive[j]:
                continue
            # x-Taylor coefficients of each row at a, then combine rows at b
            for l in range(nrows):
                hi = wdeg[j] - v * l
                for r in range(mult):
                    T[l, r] = 0
                if hi < 0:
                    continue
                for r in range(mult):
                    if r > hi:
                        break
                    acc = 0
                    i = r
                    while i <= hi:
                        c = G[j, l, i]
                        if c != 0:
                            acc ^= exp[log[c] + loga[i - r]]
                        i = (i + 1) | r
                    T[l, r] = acc
            for s in range(mult):
                for r in range(mult - s):
                    acc = 0
                    l = s
                    while l < nrows:
                        c = T[l, r]
                        if c != 0:
                            acc ^= _mul(c, bpow[l - s], exp, log)
                        l = (l + 1) | s
                    H[j, r, s] = acc

        for s in range(mult):
            for r in range(mult - s):
                jstar = -1
                for j in range(nrows):
                    if alive[j] and H[j, r, s] != 0:
                        if jstar < 0 or wdeg[j] < wdeg[jstar]:
                            jstar = j
                if jstar < 0:
                    continue
                linv = order - log[H[jstar, r, s]]

                for j in range(nrows):
                    if j == jstar or not alive[j]:
                        continue
                    dj = H[j, r, s]
                    if dj == 0:
                        continue
                    # G[j] += (dj / dstar) G[jstar]; G[jstar] has smaller weighted degree
                    lf = log[dj] + linv
                    if lf >= order:
                        lf -= order
                    for l in range(nrows):
                        hi = wdeg[jstar] - v * l
                        if hi < 0:
                            break
                        for i in range(hi + 1):
                            c = G[jstar, l, i]
                            if c != 0:
                                G[j, l, i] ^= exp[log[c] + lf]
                    for s2 in range(mult):
                        for r2 in range(mult - s2):
                            c = H[jstar, r2, s2]
                            if c != 0:
                                H[j, r2, s2] ^= exp[log[c] + lf]

                # G[jstar] *= (x - a)
                wdeg[jstar] += 1
                if wdeg[jstar] > dmax:
                    alive[jstar] = False
                    continue
                for l in range(nrows):
                    hi = wdeg[jstar] - v * l
                    if hi < 0:
                        break
                    tmp[0] = 0
                    for i in range(1, hi + 1):
                        tmp[i] = G[jstar, l, i - 1]
                    for i in range(hi):
                        c = G[jstar, l, i]
                        if c != 0:
                            tmp[i] ^= exp[log[c] + la]
                    for i in range(hi + 1):
                        G[jstar, l, i] = tmp[i]
                for s2 in range(mult):
                    for r2 in range(mult - s2 - 1, 0, -1):
                        H[jstar, r2, s2] = H[jstar, r2 - 1, s2]
                    H[jstar, 0, s2] = 0

    best = -1
    for j in range(nrows):
        if alive[j] and (best < 0 or wdeg[j] < wdeg[best]):
            best = j
    if best < 0:
        return np.zeros((1, 1), dtype=np.int64), -1
    return G[best].copy(), wdeg[best]


@njit(cache=True)
def univariate_roots(coeffs, q, exp, log):
    """All roots in GF(q) of ``sum(coeffs[l] y^l)`` by exhaustive evaluation."""
    out = np.empty(q, dtype=np.int64)
    count = 0
    top = coeffs.shape[0] - 1
    for y in range(q):
        acc = 0
        for l in range(top, -1, -1):
            acc = _mul(acc, y, exp, log) ^ coeffs[l]
        if acc == 0:
            out[count] = y
            count += 1
    return out[:count]


@njit(cache=True)
def shift_substitute(Q, gamma, exp, log):
    """``Q(x, x*y + gamma)`` divided by the largest power of x dividing it."""
    nrows, width = Q.shape
    # T(x, y) = Q(x, y + gamma): T[l] = sum_{l' >= l} C(l', l) gamma^(l'-l) Q[l']
    gpow = np.empty(nrows, dtype=np.int64)
    gpow[0] = 1
    for e in range(1, nrows):
        gpow[e] = _mul(gpow[e - 1], gamma, exp, log)
    out = np.zeros((nrows, width + nrows), dtype=np.int64)
    for l in range(nrows):
        for lp in range(l, nrows):
            if (lp & l) != l:
                continue
            g = gpow[lp - l]
            if g == 0:
                continue
            for i in range(width):
                c = Q[lp, i]
                if c != 0:
                    out[l, i + l] ^= _mul(c, g, exp, log)
    h = out.shape[1]
    for l in range(nrows):
        for i in range(out.shape[1]):
            if out[l, i] != 0:
                if i < h:
                    h = i
                break
    last = -1
    for l in range(nrows):
        for i in range(out.shape[1] - 1, -1, -1):
            if out[l, i] != 0:
                if i > last:
                    last = i
                break
    if last < 0:
        return np.zeros((nrows, 1), dtype=np.int64)
    return out[:, h : last + 1].copy()
