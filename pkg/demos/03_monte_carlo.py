# %% [markdown]
# # How often does it fail?
#
# A seeded Monte Carlo run on RS(15, 2) over GF(16) with about four
# disagreements per block.  Failures should track the binomial tail beyond
# the decoding radius.  Wrong answers come only from CRC collisions.

# %%
from scsi_listdec.crc import CrcSpec
from scsi_listdec.designer import CorrelationModel
from scsi_listdec.finite_field import field_new
from scsi_listdec.gs_decoder import gs_radius
from scsi_listdec.rs_code import rs_new
from scsi_listdec.sim_harness import run_trials

code = rs_new(field_new(4), 15, 2)
model = CorrelationModel(16, 4 / 15)
report = run_trials(code, CrcSpec(), model, gs_radius(15, 2), trials=2000, seed=0)
print(report.to_text())
print(f"failure fraction {report.failure_fraction:.2e}, exact tail {report.exact_tail:.2e}")
print(f"CRC collisions {report.crc_collisions}, expected {report.expected_collisions:.3f}")

# %% The same seed always reproduces the same report.
again = run_trials(code, CrcSpec(), model, gs_radius(15, 2), trials=2000, seed=0)
assert again.to_text() == report.to_text()
