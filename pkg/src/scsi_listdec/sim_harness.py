"""Monte Carlo evaluation of the codec on the q-ary symmetric correlation model.

Every trial draws from its own Philox stream keyed by ``(seed, trial_index)``,
so reports are reproducible and trials can run in any order or in parallel.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .crc import CrcSpec
from .designer import CorrelationModel, binomial_tail
from .rs_code import RsCode
from .scsi_codec import Status, scsi_decode, scsi_decode_progressive, scsi_encode


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def sample_pair(n: int, model: CorrelationModel, rng: np.random.Generator):
    """Draw ``x`` uniform over GF(q)^n and side information ``y``.

    Each ``y_i`` equals ``x_i`` with probability ``1 - p`` and is otherwise
    uniform over the other ``q - 1`` symbols (``y = x ^ e`` with ``e`` uniform
    nonzero); for ``q = 2`` this is ``y = x XOR Bernoulli(p)``.
    """
    q = model.q
    x = rng.integers(0, q, n, dtype=np.int64)
    flip = rng.random(n) < model.p
    noise = rng.integers(1, q, n, dtype=np.int64)
    y = np.where(flip, x ^ noise, x)
    return x, y


@dataclass(frozen=True)
class TrialReport:
    trials: int
    recovered: int
    no_candidate: int
    no_crc_match: int
    ambiguous: int
    wrong_recovery: int
    out_of_radius: int
    in_radius_failures: int
    unexplained_failures: int
    crc_collisions: int
    expected_collisions: float
    mean_list_size: float
    max_list_size: int
    empirical_tail: float
    exact_tail: float
    tau: int
    seed: int

    @property
    def failures(self) -> int:
        """Trials that did not return the true source word."""
        return self.trials - (self.recovered - self.wrong_recovery)

    @property
    def failure_fraction(self) -> float:
        return self.failures / self.trials

    def to_text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in asdict(self).items())

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"


@dataclass(frozen=True)
class _TrialResult:
    status: Status
    correct: bool
    distance: int
    list_size: int
    true_in_list: bool
    wrong_matches: int


def _run_one(args) -> _TrialResult:
    code, crc_spec, model, tau, multiplicity, seed, index, progressive, max_mult = args
    rng = trial_rng(seed, index)
    x, y = sample_pair(code.n, model, rng)
    msg = scsi_encode(code, crc_spec, x)
    if progressive:
        out = scsi_decode_progressive(code, crc_spec, msg, y, tau, max_mult)
    else:
        out = scsi_decode(code, crc_spec, msg, y, tau, multiplicity)
    in_list = any(np.array_equal(c, x) for c in out.candidates)
    if out.status is Status.RECOVERED:
        matches = [out.recovered]
    else:
        matches = list(out.ambiguous_set)
    wrong = sum(not np.array_equal(c, x) for c in matches)
    correct = out.status is Status.RECOVERED and np.array_equal(out.recovered, x)
    return _TrialResult(out.status, correct, int(np.count_nonzero(x != y)), out.list_size, in_list, wrong)


def run_trials(
    code: RsCode,
    crc_spec: CrcSpec,
    model: CorrelationModel,
    tau: int,
    multiplicity: int | None = None,
    trials: int = 1000,
    seed: int = 0,
    progressive: bool = False,
    max_multiplicity: int | None = None,
    workers: int = 1,
) -> TrialReport:
    """Encode and decode ``trials`` independent pairs and tally the outcomes.

    ``progressive`` switches to :func:`scsi_decode_progressive`; list sizes
    are then those of the last list searched.
    """
    if model.q != code.field.q:
        raise ValueError(f"model alphabet {model.q} does not match GF({code.field.q})")
    jobs = [
        (code, crc_spec, model, tau, multiplicity, seed, i, progressive, max_multiplicity)
        for i in range(trials)
    ]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=max(1, trials // (8 * workers))))
    else:
        results = [_run_one(j) for j in jobs]
    return summarize(results, code, crc_spec, model, tau, seed)


def summarize(results, code, crc_spec, model, tau, seed) -> TrialReport:
    counts = {s: 0 for s in Status}
    for r in results:
        counts[r.status] += 1
    trials = len(results)
    sizes = [r.list_size for r in results]
    out_of_radius = sum(r.distance > tau for r in results)
    in_radius_fail = sum(r.distance <= tau and not r.correct for r in results)
    # in-radius misses with no wrong CRC match to blame are decoder bugs
    unexplained = sum(r.distance <= tau and not r.correct and not r.wrong_matches for r in results)
    wrong_recovery = sum(r.status is Status.RECOVERED and not r.correct for r in results)
    # wrong candidates that could have matched the tag, each with chance 2^-rho
    exposure = sum(r.list_size - int(r.true_in_list) for r in results)
    return TrialReport(
        trials=trials,
        recovered=counts[Status.RECOVERED],
        no_candidate=counts[Status.NO_CANDIDATE],
        no_crc_match=counts[Status.NO_CRC_MATCH],
        ambiguous=counts[Status.AMBIGUOUS],
        wrong_recovery=wrong_recovery,
        out_of_radius=out_of_radius,
        in_radius_failures=in_radius_fail,
        unexplained_failures=unexplained,
        crc_collisions=sum(r.wrong_matches for r in results),
        expected_collisions=exposure * math.ldexp(1.0, -crc_spec.rho),
        mean_list_size=float(np.mean(sizes)) if sizes else 0.0,
        max_list_size=max(sizes, default=0),
        empirical_tail=out_of_radius / trials if trials else 0.0,
        exact_tail=binomial_tail(code.n, model.p, tau),
        tau=tau,
        seed=seed,
    )
