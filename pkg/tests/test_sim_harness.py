import numpy as np
import pytest

from scsi_listdec.crc import CrcSpec
from scsi_listdec.designer import CorrelationModel, binomial_tail
from scsi_listdec.finite_field import field_new
from scsi_listdec.rs_code import rs_new
from scsi_listdec.sim_harness import run_trials, sample_pair, trial_rng

CODE = rs_new(field_new(4), 15, 3)
MODEL = CorrelationModel(16, 0.3)


def test_trial_streams_are_independent_of_order():
    a = trial_rng(7, 3).integers(0, 1 << 30, 5)
    trial_rng(7, 2).integers(0, 1 << 30, 5)
    assert np.array_equal(a, trial_rng(7, 3).integers(0, 1 << 30, 5))
    assert not np.array_equal(a, trial_rng(7, 4).integers(0, 1 << 30, 5))


def test_sample_pair_statistics():
    rng = trial_rng(1, 0)
    n = 200_000
    x, y = sample_pair(n, CorrelationModel(16, 0.25), rng)
    diff = x != y
    assert abs(diff.mean() - 0.25) < 0.005
    noise = (x ^ y)[diff]
    counts = np.bincount(noise, minlength=16)
    assert counts[0] == 0
    assert counts[1:].min() > 0.9 * counts[1:].mean()


def test_reports_are_reproducible():
    r1 = run_trials(CODE, CrcSpec(), MODEL, 9, trials=40, seed=11)
    r2 = run_trials(CODE, CrcSpec(), MODEL, 9, trials=40, seed=11)
    assert r1.to_text() == r2.to_text() and r1.to_json() == r2.to_json()
    r3 = run_trials(CODE, CrcSpec(), MODEL, 9, trials=40, seed=12)
    assert r3.to_text() != r1.to_text()


def test_parallel_matches_serial():
    r1 = run_trials(CODE, CrcSpec(), MODEL, 9, trials=24, seed=3)
    r2 = run_trials(CODE, CrcSpec(), MODEL, 9, trials=24, seed=3, workers=2)
    assert r1 == r2


def test_report_accounting():
    rep = run_trials(CODE, CrcSpec(), MODEL, 9, trials=200, seed=5)
    assert rep.recovered + rep.no_candidate + rep.no_crc_match + rep.ambiguous == rep.trials
    assert rep.in_radius_failures == 0
    assert rep.failures <= rep.out_of_radius + rep.ambiguous
    assert rep.exact_tail == binomial_tail(15, 0.3, 9)
    assert rep.empirical_tail == rep.out_of_radius / 200
    assert rep.max_list_size >= rep.mean_list_size >= 0
    assert "trials: 200\n" in rep.to_text()


def test_empirical_tail_tracks_binomial():
    model = CorrelationModel(16, 0.4)
    rep = run_trials(CODE, CrcSpec(), model, 6, trials=400, seed=2, progressive=True)
    se = np.sqrt(rep.exact_tail * (1 - rep.exact_tail) / rep.trials)
    assert abs(rep.empirical_tail - rep.exact_tail) < 4 * se


def test_alphabet_mismatch():
    with pytest.raises(ValueError):
        run_trials(CODE, CrcSpec(), CorrelationModel(8, 0.1), 9, trials=1)
