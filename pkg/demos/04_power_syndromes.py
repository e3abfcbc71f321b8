"""
Power syndromes decoding
========================

The syndrome variant needs nonzero evaluation points.  Its status agrees with
Power Gao on every received word; here we count agreements over a mix of
error weights on a code with random column multipliers.
"""

import numpy as np

from powerdecoding.decode_gao import power_gao_decode
from powerdecoding.decode_syn import compute_syndromes, power_syndrome_decode, syndromes_via_lagrangians
from powerdecoding.ff import Field
from powerdecoding.grs import GrsCode, apply_error, sample_error

F = Field(23)
rng = np.random.default_rng(3)
code = GrsCode(F, 20, 4, range(1, 21), rng.integers(1, 23, 20))

# the syndromes can be computed from power sums or from the power Lagrangians
r = code.normalize(rng.integers(0, 23, 20))
print("routes agree:", compute_syndromes(code, r, 3) == syndromes_via_lagrangians(code, r, 3))

agree = fail = 0
for i in range(300):
    f = code.random_message(rng)
    word = apply_error(code, code.encode(f), sample_error(code, int(rng.integers(0, 12)), rng))
    a, b = power_gao_decode(code, word, 3), power_syndrome_decode(code, word, 3)
    agree += a.success == b.success and (not a.success or a.message == b.message)
    fail += not a.success
print(f"agreement {agree}/300, failures {fail}")
