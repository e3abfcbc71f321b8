"""
Shifted weak Popov form
=======================

The decoder's key step is a row reduction of a polynomial matrix.  Here we
reduce the module behind one decoding instance and watch the sum of shifted
row degrees drop.
"""

import numpy as np

from powerdecoding.decode_gao import build_gao_module
from powerdecoding.ff import Field
from powerdecoding.grs import GrsCode, apply_error, sample_error
from powerdecoding.polymat import pivots, weak_popov

F = Field(17)
code = GrsCode(F, 16, 4, range(1, 17))
rng = np.random.default_rng(2)
f = code.random_message(rng)
err = sample_error(code, 6, rng)
r = apply_error(code, code.encode(f), err)

inst = build_gao_module(code, code.normalize(r), ell=2)
print("shifts", inst.shifts)
print("entry degrees before\n", inst.basis.degrees().clip(-1))

trace = []
reduced = weak_popov(inst.basis, inst.shifts, on_step=lambda rd, piv: trace.append(int(rd.sum())))
print("sum of shifted row degrees per step:", trace)

rd, piv = pivots(reduced, inst.shifts)
print("pivots", piv.tolist(), "shifted degrees", rd.tolist())

# the pivot-0 row starts with the error locator (up to a scalar)
i0 = int(np.flatnonzero(piv == 0)[0])
lam = reduced[i0, 0].monic()
print("lambda == error locator:", lam == err.locator(code))
