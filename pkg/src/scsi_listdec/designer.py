"""Turning ``(n, p, eps, q)`` into concrete code choices.

The reliability target fixes a distance threshold ``T_eps`` from the binomial
law of ``d(x, y)``; the code is then the highest-rate member of a family whose
list-decoding radius exceeds it.  RS codes are backed by the decoder in this
package.  BCH and RM rows are planning-only and use the published radius
formulas.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from .errors import DomainError, NoFeasibleCode
from .gs_decoder import gs_radius
from .scsi_codec import payload_rate


@dataclass(frozen=True)
class CorrelationModel:
    """``Pr(X_i != Y_i) = p``; a disagreeing symbol is uniform over the other q-1."""

    q: int
    p: float

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if not 0 <= self.p <= 1:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")

    @property
    def in_list_decoding_regime(self) -> bool:
        return 0 < self.p < 1 - 1 / self.q

    @property
    def symbol_bits(self) -> int:
        return int(math.log2(self.q))


# -- distance statistics ----------------------------------------------------------


def _log_pmf(n: int, p: float) -> np.ndarray:
    j = np.arange(n + 1)
    with np.errstate(divide="ignore"):
        logc = gammaln(n + 1) - gammaln(j + 1) - gammaln(n - j + 1)
        return logc + j * np.log(p) + (n - j) * np.log1p(-p)


def log_tail_at_least(n: int, p: float) -> np.ndarray:
    """``out[t] = log Pr(d >= t)`` for ``t = 0 .. n+1``, d ~ Binomial(n, p)."""
    if p <= 0 or p >= 1:
        point = 0 if p <= 0 else n
        out = np.full(n + 2, -np.inf)
        out[: point + 1] = 0.0
        return out
    lp = _log_pmf(n, p)
    out = np.empty(n + 2)
    out[n + 1] = -np.inf
    # accumulate from the top so small tails keep full relative precision
    out[: n + 1] = np.logaddexp.accumulate(lp[::-1])[::-1]
    return out


def binomial_tail(n: int, p: float, t: int) -> float:
    """``Pr(d > t)``."""
    if t >= n:
        return 0.0
    if t < 0:
        return 1.0
    return float(np.exp(log_tail_at_least(n, p)[t + 1]))


def binomial_tail_threshold(n: int, p: float, eps: float) -> int:
    """Smallest ``T`` with ``Pr(d >= T) < eps`` for ``d ~ Binomial(n, p)``.

    ``T - 1`` is then the smallest radius whose miss probability
    ``Pr(d > T - 1)`` is below ``eps``; a decoder reaching beyond ``T``
    clears the target with margin.  Returns 0 for ``eps > 1``.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    logs = log_tail_at_least(n, p)
    below = np.flatnonzero(logs < math.log(eps))
    return int(below[0])


def binomial_stddev(n: int, p: float) -> float:
    return math.sqrt(n * p * (1 - p))


# -- entropies ----------------------------------------------------------------------


def _xlogx(x: float) -> float:
    return 0.0 if x <= 0 else x * math.log(x)


def entropy_binary(p: float) -> float:
    """Binary entropy in bits."""
    return -(_xlogx(p) + _xlogx(1 - p)) / math.log(2)


def entropy_q(p: float, q: int) -> float:
    """q-ary entropy in q-ary units: ``p log_q(q-1) - p log_q p - (1-p) log_q(1-p)``."""
    lq = math.log(q)
    return (p * math.log(q - 1) - _xlogx(p) - _xlogx(1 - p)) / lq


def expected_log_list_size(n: int, k: int, p: float, q: int) -> float:
    """``log_q`` of the expected number of coset words near the side information.

    Positive values mean the coset list is exponentially large: the rate
    ``k/n`` exceeds ``1 - H_q(p)``.
    """
    return n * entropy_q(p, q) - (n - k)


# -- RS selection ---------------------------------------------------------------------


def select_rs_code(n: int, t_eps: int, strict: bool = True) -> int:
    """Largest k whose GS radius covers ``t_eps``.

    With ``strict`` (default) the radius must exceed ``t_eps``, which is how
    the worked designs pick their codes; otherwise ``>=`` suffices.
    """
    def covers(k):
        r = gs_radius(n, k)
        return r > t_eps if strict else r >= t_eps

    if t_eps >= n or not covers(1):
        raise NoFeasibleCode(f"no RS code of length {n} has list radius covering {t_eps}")
    # gs_radius is nonincreasing in k
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if covers(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def unique_decoding_k(n: int, t_eps: int) -> int:
    """Dimension of the MDS code with ``d_min = 2 t_eps + 1``."""
    d = 2 * t_eps + 1
    if d > n:
        raise NoFeasibleCode(f"unique decoding of {t_eps} errors needs d_min = {d} > n = {n}")
    return n - d + 1


# -- BCH and RM planning ----------------------------------------------------------------


def bch_list_radius(n: int, D: float) -> int:
    """``floor((n/2)(1 - sqrt(1 - 2D)))`` for designed relative distance ``D``."""
    if not 0 <= D <= 0.5:
        raise DomainError(f"BCH radius formula needs 0 <= D <= 1/2, got {D}")
    return math.floor(n / 2 * (1 - math.sqrt(1 - 2 * D)) + 1e-9)


def rm_list_radius(n: int, D: float) -> int:
    """``floor((n/2)(1 - sqrt(1 - 4D)))`` for relative distance ``D``."""
    if not 0 <= D <= 0.25:
        raise DomainError(f"RM radius formula needs 0 <= D <= 1/4, got {D}")
    return math.floor(n / 2 * (1 - math.sqrt(1 - 4 * D)) + 1e-9)


def bch_required_distance(n: int, t_eps: int) -> float:
    """Distance at which the BCH radius formula equals ``t_eps``."""
    return n * (1 - (1 - 2 * t_eps / n) ** 2) / 2


def rm_required_distance(n: int, t_eps: int) -> float:
    """Distance at which the RM radius formula equals ``t_eps``."""
    return n * (1 - (1 - 2 * t_eps / n) ** 2) / 4


def rm_dimension(r: int, m: int) -> int:
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    return sum(math.comb(m, i) for i in range(r + 1))


def rm_min_distance(r: int, m: int) -> int:
    return 2 ** (m - r)


@lru_cache(maxsize=None)
def bch_table(m: int) -> tuple[tuple[int, int], ...]:
    """``(k, d)`` for narrow-sense primitive binary BCH codes of length ``2^m - 1``.

    ``d`` is the Bose distance: the largest ``delta`` with ``1 .. delta-1`` all
    zeros of the generator.  One row per dimension, highest rate first.
    """
    n = (1 << m) - 1
    zeros: set[int] = set()
    rows: dict[int, int] = {}
    for start in range(1, n):
        if start in zeros:
            continue
        x = start
        while x not in zeros:
            zeros.add(x)
            x = (2 * x) % n
        d = 1
        while d in zeros:
            d += 1
        k = n - len(zeros)
        rows[k] = max(rows.get(k, 0), d)
    return tuple(sorted(rows.items(), reverse=True))


# -- composite design -------------------------------------------------------------------


@dataclass(frozen=True)
class DesignResult:
    family: str
    n: int
    k: int
    tau: int
    t_eps: int
    rho: int
    symbol_bits: int
    d_min: int
    rate_no_crc: Fraction
    rate_with_crc: Fraction
    expected_log_list: float
    unique_k: int
    unique_d_min: int
    unique_rate: Fraction
    notes: tuple[str, ...] = field(default=())

    def to_record(self) -> dict:
        rec = asdict(self)
        for key in ("rate_no_crc", "rate_with_crc", "unique_rate"):
            frac = rec[key]
            rec[key] = {"num": frac.numerator, "den": frac.denominator, "value": float(frac)}
        rec["notes"] = list(self.notes)
        return rec


def _rates(n, k, bits, rho):
    return payload_rate(n, k, bits, 0), payload_rate(n, k, bits, rho)


def _design_rs(n, model, t_eps, rho):
    bits = model.symbol_bits
    if n >= model.q or (model.q - 1) % n:
        raise NoFeasibleCode(f"no RS code of length {n} over GF({model.q})")
    k = select_rs_code(n, t_eps)
    try:
        uk = unique_decoding_k(n, t_eps)
    except NoFeasibleCode:
        uk = 0
    return "RS", k, gs_radius(n, k), n - k + 1, uk, (n - uk + 1 if uk else 0), bits


def _design_bch(n, t_eps):
    m = (n + 1).bit_length() - 1
    rows = bch_table(m)
    pick = next(((k, d) for k, d in rows if d <= n // 2 and bch_list_radius(n, d / n) > t_eps), None)
    if pick is None:
        raise NoFeasibleCode(f"no BCH code of length {n} has list radius above {t_eps}")
    uk, ud = next(((k, d) for k, d in rows if d >= 2 * t_eps + 1), (0, 0))
    k, d = pick
    return "BCH", k, bch_list_radius(n, d / n), d, uk, ud, 1


def _design_rm(n, t_eps):
    m = n.bit_length() - 1

    def radius(r):
        D = rm_min_distance(r, m) / n
        # the formula stops at D = 1/4; lower orders are at least as strong
        return rm_list_radius(n, min(D, 0.25))

    pick = next((r for r in range(m, -1, -1) if radius(r) > t_eps), None)
    if pick is None:
        raise NoFeasibleCode(f"no RM code of length {n} has list radius above {t_eps}")
    ur = next((r for r in range(m, -1, -1) if rm_min_distance(r, m) >= 2 * t_eps + 1), None)
    uk = rm_dimension(ur, m) if ur is not None else 0
    ud = rm_min_distance(ur, m) if ur is not None else 0
    return "RM", rm_dimension(pick, m), radius(pick), rm_min_distance(pick, m), uk, ud, 1


def design(n: int, model: CorrelationModel, eps: float, rho: int = 12) -> DesignResult:
    """Pick the code, radius and CRC width for a correlated source.

    Non-binary alphabets get an RS code over GF(q); binary sources get a BCH
    plan for ``n = 2^m - 1`` or an RM plan for ``n = 2^m``.
    """
    q = model.q
    notes = []
    if eps >= 1:
        bits = model.symbol_bits
        r0, r1 = _rates(n, n, bits, rho)
        return DesignResult("trivial", n, n, 0, 0, rho, bits, 1, r0, r1,
                            expected_log_list_size(n, n, model.p, q), n, 1, r0,
                            ("no reliability demand: every source word is its own coset",))
    t_eps = binomial_tail_threshold(n, model.p, eps)
    if q > 2:
        family, k, tau, d, uk, ud, bits = _design_rs(n, model, t_eps, rho)
    elif (n + 1) & n == 0:
        family, k, tau, d, uk, ud, bits = _design_bch(n, t_eps)
    elif n & (n - 1) == 0:
        family, k, tau, d, uk, ud, bits = _design_rm(n, t_eps)
    else:
        raise NoFeasibleCode(f"no binary family supported at length {n} (need 2^m or 2^m - 1)")
    r0, r1 = _rates(n, k, bits, rho)
    ur = payload_rate(n, uk, bits, 0) if uk else Fraction(1)
    logl = expected_log_list_size(n, k, model.p, q)
    if logl > 0:
        notes.append("rate exceeds 1 - H_q(p): coset lists are exponentially large")
    if not model.in_list_decoding_regime:
        notes.append("p outside (0, 1 - 1/q)")
    if family != "RS":
        notes.append("planning row: no binary list decoder ships with this package")
    return DesignResult(family, n, k, tau, t_eps, rho, bits, d, r0, r1, logl, uk, ud, ur, tuple(notes))
