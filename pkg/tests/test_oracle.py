"""Brute-force references.

For the triple count, f1 and f3 range over all polynomials below their degree
bound, the zero polynomial included, while f2 is monic.
"""

import itertools

import numpy as np
import pytest

from powerdecoding.ff import Field
from powerdecoding.grs import GrsCode, apply_error, sample_error
from powerdecoding.decode_gao import power_gao_decode
from powerdecoding.oracle import (
    BudgetExceeded,
    all_monic,
    count_triples_bruteforce,
    matrix_rank,
    minimal_solution_bruteforce,
    nearest_codeword_bruteforce,
    solution_space_dimension,
)
from powerdecoding.poly import Poly

F11 = Field(11)


@pytest.fixture(scope="module")
def code8():
    return GrsCode(F11, 8, 2, range(1, 9))


def naive_triples(F, U, K1, K2, K3):
    polys = lambda K: [Poly(F, c) for c in itertools.product(range(F.q), repeat=K)]
    monic = [p for d in range(K2) for p in all_monic(F, d)]
    return sum(((a * c - b * b) % U).is_zero for a in polys(K1) for b in monic for c in polys(K3))


def test_nearest_codeword(code8):
    rng = np.random.default_rng(0)
    f = code8.random_message(rng)
    c = code8.encode(f)
    word, dist, unique = nearest_codeword_bruteforce(code8, c)
    assert dist == 0 and unique and np.array_equal(word, c)
    r = apply_error(code8, c, sample_error(code8, 3, rng))
    word, dist, unique = nearest_codeword_bruteforce(code8, r)
    assert dist == 3 and unique and np.array_equal(word, c)


def test_nearest_equidistant(code8):
    rng = np.random.default_rng(1)
    A = code8.encode(code8.random_message(rng))
    B = F11.add(A, code8.encode(Poly(F11, [3])))  # differs everywhere
    r = A.copy()
    r[4:] = B[4:]
    _, dist, unique = nearest_codeword_bruteforce(code8, r)
    assert dist == 4 and not unique


def test_nearest_budget(code8):
    with pytest.raises(BudgetExceeded):
        nearest_codeword_bruteforce(code8, np.zeros(8, dtype=np.int64), budget=100)


def test_minimal_solution_small_cases(code8):
    rng = np.random.default_rng(2)
    c = code8.encode(code8.random_message(rng))
    assert minimal_solution_bruteforce(code8, c, 2) == 0
    r = apply_error(code8, c, sample_error(code8, 1, rng))
    assert minimal_solution_bruteforce(code8, r, 1) == 1
    assert minimal_solution_bruteforce(code8, r, 2) == 1


def test_minimal_solution_budget(code8):
    r = np.random.default_rng(3).integers(0, 11, 8)
    with pytest.raises(BudgetExceeded):
        minimal_solution_bruteforce(code8, r, 1, budget=50)


@pytest.mark.parametrize("q, U, K", [
    (2, [1, 0, 1], (1, 2, 3)),
    (2, [1, 1, 1, 0, 1], (1, 2, 3)),
    (3, [1, 1, 0, 1], (1, 2, 3)),
    (3, [0, 0, 1], (0, 1, 2)),
    (2, [0, 1], (1, 2, 3)),
])
def test_triple_count_matches_naive(q, U, K):
    F = Field(q)
    Up = Poly(F, U)
    assert count_triples_bruteforce(F, Up, *K) == naive_triples(F, Up, *K)


def test_triple_count_example():
    F = Field(2)
    U = Poly(F, [1, 1, 1]) ** 2
    assert count_triples_bruteforce(F, U, 1, 2, 3) <= 12


def test_triple_budget():
    with pytest.raises(BudgetExceeded):
        count_triples_bruteforce(Field(3), Poly(Field(3), [1, 0, 1]), 4, 5, 6, budget=1000)


def test_matrix_rank():
    F = Field(2, 3)
    assert matrix_rank(F, [[1, 2], [2, 4]]) == 1
    assert matrix_rank(F, [[1, 0], [0, 1], [1, 1]]) == 2
    assert matrix_rank(Field(5), np.zeros((2, 3), dtype=np.int64)) == 0


def test_uniqueness_matches_solution_space():
    # at eps = tau(2) = 7 the decoder succeeds exactly when the degree-7
    # solution space is one-dimensional
    code = GrsCode(Field(17), 16, 4, range(1, 17))
    rng = np.random.default_rng(8)
    seen = set()
    for _ in range(150):
        f = code.random_message(rng)
        r = apply_error(code, code.encode(f), sample_error(code, 7, rng))
        ok = power_gao_decode(code, r, 2).success
        assert solution_space_dimension(code, r, 2, 6) == 0
        dim = solution_space_dimension(code, r, 2, 7)
        assert ok == (dim == 1)
        seen.add(ok)
    assert seen == {True, False}
