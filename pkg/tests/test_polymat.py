import numpy as np
import pytest

from powerdecoding.ff import Field
from powerdecoding.poly import Poly
from powerdecoding.polymat import (
    DegenerateInputError,
    PolyMatrix,
    is_weak_popov,
    minimal_row,
    pivots,
    shifted_row_stats,
    weak_popov,
)

F5, F17 = Field(5), Field(17)


def det_mod_p(A, p):
    A = [list(map(int, r)) for r in A]
    n, det = len(A), 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] % p), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c] % p
        inv = pow(A[c][c], p - 2, p)
        for r in range(c + 1, n):
            f = A[r][c] * inv % p
            A[r] = [(x - f * y) % p for x, y in zip(A[r], A[c])]
    return det % p


def random_matrix(F, n, maxdeg, rng):
    return PolyMatrix.from_rows([[Poly(F, rng.integers(0, F.q, rng.integers(0, maxdeg + 2))) for _ in range(n)]
                                 for _ in range(n)])


def test_row_stats_examples():
    one, x = Poly.one(F5), Poly.x(F5)
    zero = Poly.zero(F5)
    assert shifted_row_stats([one, x], [2, 0]) == (2, 0)
    assert shifted_row_stats([one, x * x], [2, 0]) == (2, 1)
    assert shifted_row_stats([Poly(F5, [3]), zero, zero], [4, 1, 7]) == (4, 0)
    with pytest.raises(ValueError):
        shifted_row_stats([zero, zero], [0, 0])
    with pytest.raises(ValueError):
        shifted_row_stats([one], [0, 0])


def test_identity_unchanged():
    one, zero = Poly.one(F5), Poly.zero(F5)
    I = PolyMatrix.from_rows([[one, zero, zero], [zero, one, zero], [zero, zero, one]])
    for s in ([0, 0, 0], [3, 1, 2]):
        assert weak_popov(I, s) == I
    I2 = PolyMatrix.from_rows([[one, zero], [zero, one]])
    assert minimal_row(weak_popov(I2, [1, 0]), [1, 0], 0) == [one, zero]


def test_two_by_two_example():
    x, zero = Poly.x(F5), Poly.zero(F5)
    M = PolyMatrix.from_rows([[x, x], [x, zero]])
    R = weak_popov(M, [0, 0])
    assert is_weak_popov(R, [0, 0])
    # same module as the rows (0, x), (x, 0): x*I = N*R with N having polynomial entries
    a, b = R.row(0), R.row(1)
    for target in ([zero, x], [x, zero]):
        # 2x2 solve via Cramer over F5[x]: numerators must be divisible by det
        det = a[0] * b[1] - a[1] * b[0]
        u = target[0] * b[1] - target[1] * b[0]
        v = a[0] * target[1] - a[1] * target[0]
        assert (u % det).is_zero and (v % det).is_zero


def test_rank_deficient_raises():
    x = Poly.x(F5)
    M = PolyMatrix.from_rows([[x, x], [x, x]])
    with pytest.raises(DegenerateInputError):
        weak_popov(M, [0, 0])
    with pytest.raises(DegenerateInputError):
        weak_popov(PolyMatrix.from_rows([[x, x], [Poly.zero(F5)] * 2]), [0, 0])


@pytest.mark.parametrize("seed", range(30))
def test_random_reduction_properties(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    while True:
        M = random_matrix(F17, n, 4, rng)
        dets = [det_mod_p(M.evaluate(x0), 17) for x0 in range(17)]
        if any(dets):
            break
    s = rng.integers(0, 4, n).tolist()
    sums = []
    R = weak_popov(M, s, on_step=lambda rd, piv: sums.append(int(rd.sum())))
    # pivots form a permutation of the columns
    _, piv = pivots(R, s)
    assert sorted(piv.tolist()) == list(range(n))
    # sum of shifted row degrees never increases
    rd0, _ = pivots(M, s)
    seq = [int(rd0.sum())] + sums
    assert all(b <= a for a, b in zip(seq, seq[1:]))
    # unimodular transformation: det changes by a nonzero constant factor
    after = [det_mod_p(R.evaluate(x0), 17) for x0 in range(17)]
    ratios = {a * pow(b, 15, 17) % 17 for a, b in zip(after, dets) if b}
    assert len(ratios) == 1 and 0 not in ratios
    assert all((a == 0) == (b == 0) for a, b in zip(after, dets))
    # reducing again changes nothing
    assert weak_popov(R, s) == R


def test_unimodular_times_diagonal():
    rng = np.random.default_rng(11)
    x = Poly.x(F17)
    one, zero = Poly.one(F17), Poly.zero(F17)
    # upper and lower triangular with unit diagonal, times diag(x^2, x, 1)
    U = [[one, Poly(F17, rng.integers(0, 17, 3)), Poly(F17, rng.integers(0, 17, 3))],
         [zero, one, Poly(F17, rng.integers(0, 17, 3))],
         [zero, zero, one]]
    L = [[one, zero, zero], [Poly(F17, rng.integers(0, 17, 2)), one, zero],
         [Poly(F17, rng.integers(0, 17, 2)), Poly(F17, rng.integers(0, 17, 2)), one]]
    D = [x * x, x, one]
    UL = [[sum((U[i][m] * L[m][j] for m in range(3)), zero) for j in range(3)] for i in range(3)]
    M = PolyMatrix.from_rows([[UL[i][j] * D[j] for j in range(3)] for i in range(3)])
    sums = []
    R = weak_popov(M, [0, 0, 0], on_step=lambda rd, piv: sums.append(int(rd.sum())))
    assert sums and all(b <= a for a, b in zip(sums, sums[1:]))
    # the reduced form of this module is the diagonal up to row order
    rd, _ = pivots(R, [0, 0, 0])
    assert sorted(rd.tolist()) == [0, 1, 2]
