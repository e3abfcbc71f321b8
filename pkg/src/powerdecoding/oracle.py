"""Exhaustive reference computations for tiny parameters.

Everything here is deliberately independent of the polynomial-matrix engine:
solutions are found by enumerating candidates, and the polynomial-triple count by
enumerating triples.  Budgets are hard limits.
"""

from __future__ import annotations

import itertools

import numpy as np

from .ff import Field
from .grs import GrsCode
from .poly import Poly


class BudgetExceeded(RuntimeError):
    pass


def _all_vectors(q: int, length: int) -> np.ndarray:
    """All q**length integer vectors, first coordinate varying fastest."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    idx = np.arange(q**length, dtype=np.int64)
    return np.stack([(idx // q**j) % q for j in range(length)], axis=1)


def nearest_codeword_bruteforce(code: GrsCode, received, budget: int = 10**6):
    """Return ``(codeword, distance, is_unique)`` by enumerating all q^k messages."""
    q, k = code.field.q, code.k
    if q**k > budget:
        raise BudgetExceeded(f"q^k = {q**k} exceeds budget {budget}")
    received = np.asarray(received, dtype=np.int64)
    best_d, count, best = code.n + 1, 0, None
    chunk = max(1, 2**16 // max(code.n, 1))
    for start in range(0, q**k, chunk):
        idx = np.arange(start, min(start + chunk, q**k), dtype=np.int64)
        msgs = np.stack([(idx // q**j) % q for j in range(k)], axis=1)
        words = code.encode_many(msgs)
        dists = np.count_nonzero(words != received, axis=1)
        m = int(dists.min())
        if m < best_d:
            best_d, count, best = m, int(np.count_nonzero(dists == m)), words[int(np.argmin(dists))]
        elif m == best_d:
            count += int(np.count_nonzero(dists == m))
    return best, best_d, count == 1


def _reduction_matrix(field: Field, modulus: Poly, rows: int) -> np.ndarray:
    """Row j = coefficients of x^j mod modulus, padded to deg(modulus)."""
    N = int(modulus.degree)
    out = np.zeros((rows, max(N, 0)), dtype=np.int64)
    cur = Poly.one(field) % modulus
    x = Poly.x(field)
    for j in range(rows):
        out[j, : len(cur.coeffs)] = cur.coeffs
        cur = (cur * x) % modulus
    return out


def _row_degrees(A: np.ndarray) -> np.ndarray:
    nz = A != 0
    last = A.shape[1] - 1 - np.argmax(nz[:, ::-1], axis=1)
    return np.where(nz.any(axis=1), last, -1)


def minimal_solution_bruteforce(code: GrsCode, received, ell: int, max_degree: int | None = None,
                                budget: int = 2 * 10**6) -> int:
    """Smallest deg(lambda) over monic lambda with deg(lambda R<t> mod G) <= deg(lambda) + t(k-1).

    R<t> is computed here by direct per-point interpolation so this oracle
    shares nothing with the decoder but basic field arithmetic.
    """
    F = code.field
    q = F.q
    r = code.normalize(received)
    cap = code.n - code.k if max_degree is None else max_degree
    Rs = [Poly.interpolate(F, code.alphas, F.power(r, t)) for t in range(1, ell + 1)]
    # lambda -> lambda * R<t> mod G is linear in the coefficients of lambda
    maps = []
    for R in Rs:
        M = np.zeros((cap + 1, code.n), dtype=np.int64)
        cur = R % code.G
        for j in range(cap + 1):
            M[j, : len(cur.coeffs)] = cur.coeffs
            cur = cur.shift(1) % code.G
        maps.append(M)
    for D in range(cap + 1):
        if q**D > budget:
            raise BudgetExceeded(f"{q**D} monic candidates of degree {D} exceed budget {budget}")
        for start in range(0, q**D, 2**14):
            idx = np.arange(start, min(start + 2**14, q**D), dtype=np.int64)
            lams = np.ones((len(idx), D + 1), dtype=np.int64)
            for j in range(D):
                lams[:, j] = (idx // q**j) % q
            ok = np.ones(len(idx), dtype=bool)
            for t, M in enumerate(maps, start=1):
                psi = F.matmul(lams, M[: D + 1])
                ok &= _row_degrees(psi) <= D + t * (code.k - 1)
            if ok.any():
                return D
    raise BudgetExceeded(f"no solution of degree <= {cap}")


def matrix_rank(field: Field, A) -> int:
    """Rank of a matrix over the field by plain Gaussian elimination."""
    A = np.array(A, dtype=np.int64, copy=True)
    if A.size == 0:
        return 0
    rank = 0
    for c in range(A.shape[1]):
        rows = np.flatnonzero(A[rank:, c]) + rank
        if len(rows) == 0:
            continue
        A[[rank, rows[0]]] = A[[rows[0], rank]]
        A[rank] = field.mul(A[rank], field.inv(A[rank, c]))
        others = np.flatnonzero(A[:, c])
        others = others[others != rank]
        A[others] = field.sub(A[others], field.mul(A[others, c, None], A[rank]))
        rank += 1
        if rank == A.shape[0]:
            break
    return rank


def solution_space_dimension(code: GrsCode, received, ell: int, D: int) -> int:
    """dim of {lambda : deg lambda <= D, deg(lambda R<t> mod G) <= D + t(k-1) for all t}.

    When no nonzero lambda of degree < D qualifies, a value of 1 means the
    degree-D solution is unique up to a scalar and a value >= 2 means several
    non-proportional minimal solutions exist.
    """
    F = code.field
    r = code.normalize(received)
    cons = []
    for t in range(1, ell + 1):
        R = Poly.interpolate(F, code.alphas, F.power(r, t))
        # row i: image of lambda = x^i, that is x^i R mod G
        img = np.zeros((D + 1, code.n), dtype=np.int64)
        for i in range(D + 1):
            c = (R.shift(i) % code.G).coeffs
            img[i, : len(c)] = c
        top = D + t * (code.k - 1) + 1
        if top < code.n:
            cons.append(img[:, top:].T)
    if not cons:
        return D + 1
    return D + 1 - matrix_rank(F, np.vstack(cons))


def count_triples_bruteforce(field: Field, U: Poly, K1: int, K2: int, K3: int,
                             budget: int = 10**7) -> int:
    """|{(f1, f2, f3): f1 f3 = f2^2 mod U, f2 monic, deg f_t < K_t}|.

    f1 and f3 range over all polynomials of the stated degree bound, zero
    included; f2 over monic ones, so it is never zero.
    """
    q = field.q
    K1, K2, K3 = max(K1, 0), max(K2, 0), max(K3, 0)
    if q ** (K1 + K2 + K3) > budget:
        raise BudgetExceeded(f"q^(K1+K2+K3) = {q ** (K1 + K2 + K3)} exceeds budget {budget}")
    N = int(U.degree)
    if N < 1:
        return 0
    f1s, f3s = _all_vectors(q, K1), _all_vectors(q, K3)
    monic = []
    for deg in range(K2):
        low = _all_vectors(q, deg)
        monic.append(np.hstack([low, np.ones((len(low), 1), dtype=np.int64),
                                np.zeros((len(low), K2 - deg - 1), dtype=np.int64)]))
    if not monic or K1 == 0 or K3 == 0:
        # f1 f3 is identically zero
        if not monic:
            return 0
        f2s = np.vstack(monic)
        red = _reduction_matrix(field, U, max(2 * K2 - 1, 1))
        sq = np.stack([field.convolve(v, v) for v in f2s])
        zero_sq = ~(field.matmul(sq, red[: sq.shape[1]]) != 0).any(axis=1)
        return int(np.count_nonzero(zero_sq)) * len(f1s) * len(f3s)
    f2s = np.vstack(monic)
    plen = K1 + K3 - 1
    red = _reduction_matrix(field, U, max(plen, 2 * K2 - 1))
    prod = np.zeros((len(f1s), len(f3s), plen), dtype=np.int64)
    for i in range(K1):
        prod[:, :, i : i + K3] = field.add(prod[:, :, i : i + K3], field.mul(f1s[:, i, None, None], f3s[None, :, :]))
    pm = field.matmul(prod.reshape(-1, plen), red[:plen])
    weights = field.q ** np.arange(N, dtype=np.int64)
    pair_codes = pm @ weights
    sq = np.stack([field.convolve(v, v) for v in f2s])
    sq = np.pad(sq, ((0, 0), (0, max(0, 2 * K2 - 1 - sq.shape[1]))))
    sm = field.matmul(sq, red[: sq.shape[1]])
    sq_codes = sm @ weights
    uniq, counts = np.unique(pair_codes, return_counts=True)
    lookup = dict(zip(uniq.tolist(), counts.tolist()))
    return int(sum(lookup.get(c, 0) for c in sq_codes.tolist()))


def all_monic(field: Field, degree: int):
    """Iterate over every monic polynomial of the given degree."""
    for low in itertools.product(range(field.q), repeat=degree):
        yield Poly(field, list(low) + [1])
