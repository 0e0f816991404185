# %% [markdown]
# # Compressing a block when the decoder already holds a noisy copy
#
# The source x is 255 bytes.  The decoder has y, which differs from x in about
# 30% of positions.  The encoder sends only the syndrome of x under RS(255, 88)
# plus a 12-bit CRC, which is about two thirds of the raw size.

# %%
import numpy as np

from scsi_listdec.crc import CrcSpec
from scsi_listdec.designer import CorrelationModel, design
from scsi_listdec.finite_field import field_new
from scsi_listdec.rs_code import rs_new
from scsi_listdec.scsi_codec import encode_wire, measured_rate, scsi_decode_progressive, scsi_encode
from scsi_listdec.sim_harness import sample_pair, trial_rng

model = CorrelationModel(q=256, p=0.3)
plan = design(255, model, eps=1e-4, rho=12)
print(f"T_eps = {plan.t_eps}; chosen RS({plan.n},{plan.k}) with list radius {plan.tau}")
print(f"rate {float(plan.rate_no_crc):.4f} without CRC, {float(plan.rate_with_crc):.4f} with it")
print(f"unique decoding would need RS({plan.n},{plan.unique_k}), rate {float(plan.unique_rate):.4f}")

# %% Encode one block.
code = rs_new(field_new(8), plan.n, plan.k)
crc = CrcSpec()
x, y = sample_pair(code.n, model, trial_rng(seed=2, index=0))
msg = scsi_encode(code, crc, x)
wire = encode_wire(code, crc, msg)
print(f"{code.n} source bytes -> {len(wire)} bytes on the wire, measured rate {measured_rate(code, crc)}")
print(f"side information disagrees in {int(np.count_nonzero(x != y))} positions")

# %% Decode.  The progressive decoder starts at multiplicity 1 and only
# widens the radius when the CRC has not singled out a word yet.
out = scsi_decode_progressive(code, crc, msg, y, plan.tau - 1)
print(out.status.value, f"at radius {out.radius}, multiplicity {out.multiplicity}, list size {out.list_size}")
assert out.ok and np.array_equal(out.recovered, x)
