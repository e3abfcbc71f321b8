"""
Power Gao decoding of a GRS code
================================

Encode a message of a [16,4] code over GF(17), add errors and decode with
powering degree 1, 2 and 3.  Half the minimum distance is 6.5; with ell = 2
the decoder reaches 7 errors most of the time.
"""

import numpy as np

from powerdecoding.bounds import tau
from powerdecoding.decode_gao import power_gao_decode
from powerdecoding.ff import Field
from powerdecoding.grs import GrsCode, apply_error, sample_error

F = Field(17)
code = GrsCode(F, 16, 4, range(1, 17))
print(code, " tau(1..3) =", [str(tau(16, 4, l)) for l in (1, 2, 3)])

rng = np.random.default_rng(1)
f = code.random_message(rng)
c = code.encode(f)
print("message", f.tolist())

for eps in (6, 7, 8):
    err = sample_error(code, eps, rng)
    r = apply_error(code, c, err)
    for ell in (1, 2, 3):
        out = power_gao_decode(code, r, ell)
        ok = out.success and out.message == f
        print(f"eps={eps} ell={ell}: {out.status:7s} {'recovered' if ok else out.reason}")

# at eps = tau(2) = 7 a single draw may fail; count over many
ok = sum(power_gao_decode(code, apply_error(code, c, sample_error(code, 7, rng)), 2).success for _ in range(200))
print(f"eps=7 ell=2: {ok}/200 decoded")

# decoding locates the errors: the locator's roots are the alphas at the error positions
err = sample_error(code, 5, rng)
out = power_gao_decode(code, apply_error(code, c, err), 2)
roots = np.flatnonzero(out.locator(code.alphas) == 0)
print("error positions", list(err.support), "located", roots.tolist())
