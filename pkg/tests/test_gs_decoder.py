import math

import numpy as np
import pytest

from scsi_listdec.errors import RadiusTooLarge, TooLargeToEnumerate
from scsi_listdec.finite_field import field_new
from scsi_listdec.gs_decoder import (
    brute_force_list_decode,
    certified_radius,
    certifies,
    gs_list_decode,
    gs_radius,
    interpolate,
    interpolation_shape,
    min_multiplicity_for,
)
from scsi_listdec.rs_code import encode_message, rs_new


def count_monomials(D, v):
    """Monomials x^i y^j with i + v*j <= D, counted one by one."""
    if v == 0:
        return math.inf
    return sum(1 for j in range(D // v + 1) for i in range(D - v * j + 1))


def oracle_certifies(n, k, tau, m):
    D = m * (n - tau) - 1
    return D >= 0 and count_monomials(D, k - 1) > n * m * (m + 1) // 2


def oracle_radius(n, k):
    """Largest tau strictly below n - sqrt((k-1) n), in exact integer form."""
    tau = n
    while tau >= 0 and (n - tau) ** 2 <= (k - 1) * n:
        tau -= 1
    return tau


@pytest.mark.parametrize("n,k", [(7, 2), (15, 2), (15, 3), (15, 11), (255, 88), (255, 45), (31, 1), (63, 63)])
def test_gs_radius_matches_exact_oracle(n, k):
    assert gs_radius(n, k) == oracle_radius(n, k)


def test_radius_exceeds_half_distance():
    for n, k in [(15, 2), (15, 3), (255, 88), (31, 5)]:
        assert gs_radius(n, k) >= (n - k) // 2
    assert gs_radius(15, 2) == 11 > (15 - 2) // 2


def test_radius_monotone_in_k():
    radii = [gs_radius(255, k) for k in range(1, 256)]
    assert all(a >= b for a, b in zip(radii, radii[1:]))


@pytest.mark.parametrize("n,k,tau", [(15, 2, 11), (15, 3, 9), (7, 2, 4), (31, 8, 15), (255, 88, 100)])
def test_certification_matches_monomial_count(n, k, tau):
    for m in range(1, 14):
        assert certifies(n, k, tau, m) == oracle_certifies(n, k, tau, m)


def test_min_multiplicity_golden():
    assert min_multiplicity_for(255, 88, 105) == 30
    assert oracle_certifies(255, 88, 105, 30) and not oracle_certifies(255, 88, 105, 29)
    assert min_multiplicity_for(15, 2, 11) == 12
    assert min_multiplicity_for(15, 3, 9) == 4
    assert min_multiplicity_for(7, 2, 4) == 3
    with pytest.raises(RadiusTooLarge):
        min_multiplicity_for(255, 88, 107)


def test_certified_radius_golden():
    table = {1: 83, 2: 94, 5: 100, 10: 103, 30: 105}
    for m, r in table.items():
        assert certified_radius(255, 88, m) == r


def test_interpolation_shape():
    D, L = interpolation_shape(15, 3, 4)
    assert count_monomials(D, 2) > 15 * 10 >= count_monomials(D - 1, 2)
    assert L == D // 2


def _vanishing_order(gf, Q, a, b):
    """Smallest total degree present in Q(x + a, y + b), by direct expansion."""
    best = math.inf
    # Q[l, i] is the coefficient of x^i y^l
    for r in range(Q.shape[1]):
        for s in range(Q.shape[0]):
            if r + s >= best:
                continue
            acc = 0
            for l in range(s, Q.shape[0]):
                for i in range(r, Q.shape[1]):
                    c = int(Q[l, i])
                    if c and math.comb(i, r) % 2 and math.comb(l, s) % 2:
                        acc ^= gf.mul(c, gf.mul(gf.pow(a, i - r), gf.pow(b, l - s)))
            if acc:
                best = r + s
    return best


def test_interpolant_has_required_multiplicity(rng):
    code = rs_new(field_new(3), 7, 2)
    y = rng.integers(0, 8, 7)
    Q = interpolate(code, y, 3)
    assert Q.any()
    for a, b in zip(code.eval_points, y):
        assert _vanishing_order(code.field, Q, int(a), int(b)) >= 3


@pytest.mark.parametrize("m,n,k", [(3, 7, 2), (4, 15, 2), (4, 15, 3)])
def test_list_equals_brute_force(m, n, k, rng):
    code = rs_new(field_new(m), n, k)
    tau = gs_radius(n, k)
    for _ in range(15):
        u = rng.integers(0, code.field.q, k)
        c = encode_message(code, u)
        e = np.zeros(n, dtype=np.int64)
        w = rng.integers(0, tau + 3)
        pos = rng.choice(n, size=min(w, n), replace=False)
        e[pos] = rng.integers(1, code.field.q, pos.size)
        y = c ^ e
        got = gs_list_decode(code, y, tau)
        assert got.as_set() == brute_force_list_decode(code, y, tau).as_set()
        if w <= tau:
            assert c in got


def test_list_monotone_in_radius(rng):
    code = rs_new(field_new(4), 15, 2)
    y = rng.integers(0, 16, 15)
    sets = [gs_list_decode(code, y, t).as_set() for t in range(6, 12)]
    assert all(a <= b for a, b in zip(sets, sets[1:]))


def test_beyond_half_distance(rng):
    code = rs_new(field_new(4), 15, 2)
    for w in range(7, 12):
        u = rng.integers(0, 16, 2)
        c = encode_message(code, u)
        y = c.copy()
        pos = rng.choice(15, w, replace=False)
        y[pos] ^= rng.integers(1, 16, w)
        assert c in gs_list_decode(code, y, 11)


def test_explicit_multiplicity_must_certify():
    code = rs_new(field_new(4), 15, 2)
    with pytest.raises(RadiusTooLarge):
        gs_list_decode(code, np.zeros(15, dtype=int), 11, multiplicity=2)


def test_zero_radius_returns_only_the_codeword():
    code = rs_new(field_new(4), 15, 5)
    c = encode_message(code, [1, 2, 3, 4, 5])
    got = gs_list_decode(code, c, 0)
    assert len(got) == 1 and c in got


def test_large_rs_decodes_at_moderate_multiplicity(rng):
    code = rs_new(field_new(8), 255, 88)
    c = encode_message(code, rng.integers(0, 256, 88))
    y = c.copy()
    pos = rng.choice(255, 95, replace=False)
    y[pos] ^= rng.integers(1, 256, 95)
    got = gs_list_decode(code, y, 97, multiplicity=3)
    assert c in got


def test_brute_force_guard():
    code = rs_new(field_new(8), 255, 4)
    with pytest.raises(TooLargeToEnumerate):
        brute_force_list_decode(code, np.zeros(255, dtype=int), 10)
