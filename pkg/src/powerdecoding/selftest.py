"""Oracle-backed property checks small enough to run in a few seconds."""

from __future__ import annotations

import numpy as np

from .decode_gao import build_gao_module, minimal_solution, power_gao_decode
from .decode_syn import power_syndrome_decode
from .ff import Field
from .grs import GrsCode, apply_error, sample_error
from .oracle import minimal_solution_bruteforce, nearest_codeword_bruteforce


def run_selftest(seed: int = 0, trials: int = 60):
    """Yield ``(name, passed)`` pairs."""
    rng = np.random.default_rng(seed)
    code = GrsCode(Field(11), 8, 2, range(1, 9))

    closest = unique_ok = minimal_ok = equiv_ok = True
    for _ in range(trials):
        r = rng.integers(0, 11, code.n)
        ell = int(rng.integers(1, 3))
        out = power_gao_decode(code, r, ell)
        _, dist, unique = nearest_codeword_bruteforce(code, r)
        if out.success and code.distance(code.encode(out.message), r) != dist:
            closest = False
        if unique and 2 * dist < code.d and not out.success:
            unique_ok = False
        row = minimal_solution(build_gao_module(code, code.normalize(r), ell))
        if row[0].degree != minimal_solution_bruteforce(code, r, ell):
            minimal_ok = False
        if power_syndrome_decode(code, r, ell).success != out.success:
            equiv_ok = False
    yield "closest-codeword guarantee", closest
    yield "unique decoding below d/2", unique_ok
    yield "minimal solution matches brute force", minimal_ok
    yield "Gao/syndrome status equivalence", equiv_ok

    big = GrsCode(Field(17), 16, 4, range(1, 17))
    ok = True
    for _ in range(trials):
        f = big.random_message(rng)
        r = apply_error(big, big.encode(f), sample_error(big, int(rng.integers(0, 7)), rng))
        out = power_gao_decode(big, r, 2)
        ok &= out.success and out.message == f
    yield "[16,4] corrects up to 6 errors", ok
