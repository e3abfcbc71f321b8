"""
Brute-force references
======================

Tiny parameters allow exhaustive checks: nearest codeword by enumerating all
messages, minimal key-equation solution by enumerating monic candidates, and
the triple count behind the ell = 3 bound.
"""

import numpy as np

from powerdecoding.bounds import lemma_triple_bound
from powerdecoding.decode_gao import build_gao_module, minimal_solution, power_gao_decode
from powerdecoding.ff import Field
from powerdecoding.grs import GrsCode, apply_error, sample_error
from powerdecoding.oracle import count_triples_bruteforce, minimal_solution_bruteforce, nearest_codeword_bruteforce
from powerdecoding.poly import Poly

code = GrsCode(Field(11), 8, 2, range(1, 9))
rng = np.random.default_rng(7)
for eps in range(1, 7):
    c = code.encode(code.random_message(rng))
    r = apply_error(code, c, sample_error(code, eps, rng))
    _, dist, unique = nearest_codeword_bruteforce(code, r)
    out = power_gao_decode(code, r, 2)
    row = minimal_solution(build_gao_module(code, code.normalize(r), 2))
    print(f"eps={eps}: nearest at {dist} (unique={unique}); decoder {out.status}; "
          f"minimal deg {int(row[0].degree)} vs brute force {minimal_solution_bruteforce(code, r, 2)}")

F2 = Field(2)
U = Poly(F2, [1, 1, 1]) ** 2
print("count", count_triples_bruteforce(F2, U, 1, 2, 3), "<= bound", lemma_triple_bound(2, 4, 1, 2, 3))
