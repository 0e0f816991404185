# %% [markdown]
# # Decoding past half the minimum distance
#
# RS(15, 2) over GF(16) has minimum distance 14, so a bounded-distance
# decoder stops at 6 errors.  The Guruswami-Sudan decoder lists every
# codeword within 11.

# %%
import numpy as np

from scsi_listdec.finite_field import field_new
from scsi_listdec.gs_decoder import brute_force_list_decode, gs_list_decode, gs_radius, min_multiplicity_for
from scsi_listdec.rs_code import encode_message, rs_new

gf = field_new(4)
code = rs_new(gf, 15, 2)
tau = gs_radius(code.n, code.k)
print(f"d_min = {code.d_min}, half-distance radius = {(code.d_min - 1) // 2}, GS radius = {tau}")
print(f"multiplicity needed for radius {tau}: {min_multiplicity_for(15, 2, tau)}")

# %% Corrupt a codeword in 10 positions and decode.
rng = np.random.default_rng(1)
c = encode_message(code, [5, 9])
y = c.copy()
pos = rng.choice(15, 10, replace=False)
y[pos] ^= rng.integers(1, 16, 10)

found = gs_list_decode(code, y, tau)
print(f"list size {len(found)}, true codeword present: {c in found}")
for w in found:
    print("  ", w, "distance", int(np.count_nonzero(w != y)))

# %% The exhaustive search over all 256 codewords gives the same list.
assert found.as_set() == brute_force_list_decode(code, y, tau).as_set()
print("matches brute force")
