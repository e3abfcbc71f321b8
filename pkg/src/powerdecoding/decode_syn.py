"""Power syndromes decoding, the classical counterpart of Power Gao.

The t-th powered word is a received word of the virtual GRS code of dimension
t(k-1)+1 with the same error positions.  Its syndrome

    S<t> = sum_i r_i^t zeta_i / (1 - x alpha_i)   mod x^{m_t},  m_t = n - t(k-1) - 1

satisfies ``rev(Lambda) * S<t> = omega<t> (mod x^{m_t})`` with
``deg omega<t> < deg Lambda``.  We find the minimal such ``rev(lambda)`` as the
pivot-0 row of the module spanned by ``(1, S<1>, ..., S<ell>)`` and
``x^{m_t} e_t`` under zero shifts (rightmost pivots make pivot 0 equivalent
to ``deg omega<t> < deg rev(lambda)``), then locate the errors by root finding
and recover the message by erasure interpolation.
"""

from __future__ import annotations

import numpy as np

from .decode_gao import AMBIGUOUS, STRUCTURE_FAILED, WEIGHT_MISMATCH, DecodeOutcome, _failure, check_ell
from .grs import GrsCode
from .poly import Poly
from .polymat import PolyMatrix, has_competing_minimal, minimal_row, weak_popov


def check_nonzero_alphas(code: GrsCode) -> None:
    if np.any(code.alphas == 0):
        raise ValueError("Power syndromes decoding requires all evaluation points to be nonzero")


def syndrome_lengths(code: GrsCode, ell: int, offset: int = 0) -> list[int]:
    """m_t = n - t(k-1) - 1 (+ offset, for sensitivity experiments only)."""
    return [max(code.n - t * (code.k - 1) - 1 + offset, 0) for t in range(1, ell + 1)]


def compute_syndromes(code: GrsCode, r_norm, ell: int, offset: int = 0) -> list[Poly]:
    """Power-sum route: coefficient j of S<t> is sum_i r_i^t zeta_i alpha_i^j."""
    check_nonzero_alphas(code)
    F = code.field
    r = np.asarray(r_norm, dtype=np.int64)
    ms = syndrome_lengths(code, ell, offset)
    top = max(ms) if ms else 0
    V = np.ones((code.n, max(top, 1)), dtype=np.int64)
    for j in range(1, top):
        V[:, j] = F.mul(V[:, j - 1], code.alphas)
    out, rt = [], np.ones(code.n, dtype=np.int64)
    for m in ms:
        rt = F.mul(rt, r)
        out.append(Poly._raw(F, F.matmul(F.mul(rt, code.zetas), V[:, :m])))
    return out


def syndromes_via_lagrangians(code: GrsCode, r_norm, ell: int) -> list[Poly]:
    """Second route: S<t> = rev_{n-1}(R<t>) * rev(G)^-1  mod x^{m_t}."""
    check_nonzero_alphas(code)
    ms = syndrome_lengths(code, ell)
    revG = code.G.rev()
    out = []
    for R, m in zip(code.power_lagrangians(r_norm, ell), ms):
        if R.is_zero or m == 0:
            out.append(Poly.zero(code.field))
            continue
        out.append((R.rev(code.n - 1) * revG.series_inv(m)).truncate(m))
    return out


def build_syndrome_module(code: GrsCode, r_norm, ell: int, offset: int = 0) -> tuple[PolyMatrix, list[int]]:
    F = code.field
    S = compute_syndromes(code, r_norm, ell, offset)
    ms = syndrome_lengths(code, ell, offset)
    zero = Poly.zero(F)
    rows = [[Poly.one(F)] + S]
    for t in range(1, ell + 1):
        rows.append([Poly.monomial(F, ms[t - 1]) if j == t else zero for j in range(ell + 1)])
    return PolyMatrix.from_rows(rows), [0] * (ell + 1)


def power_syndrome_decode(code: GrsCode, received, ell: int, offset: int = 0) -> DecodeOutcome:
    """Decode a received (beta-scaled) word; failure is returned, not raised."""
    check_nonzero_alphas(code)
    check_ell(code, ell)
    F = code.field
    received = np.asarray(received, dtype=np.int64)
    r = code.normalize(received)
    basis, shifts = build_syndrome_module(code, r, ell, offset)
    reduced = weak_popov(basis, shifts)
    rev_lam = minimal_row(reduced, shifts, 0)[0]
    if has_competing_minimal(reduced, shifts, 0):
        return _failure(AMBIGUOUS)
    if rev_lam.coeffs[0] == 0:
        # x | rev(lambda) is never a scalar multiple of rev(Lambda)
        return _failure(STRUCTURE_FAILED)
    lam = rev_lam.rev().monic()
    eps = int(lam.degree)
    roots = np.flatnonzero(lam(code.alphas) == 0)
    if len(roots) != eps or code.n - eps < code.k:
        return _failure(WEIGHT_MISMATCH, lam)
    keep = np.setdiff1d(np.arange(code.n), roots)
    f = Poly.interpolate(F, code.alphas[keep], r[keep])
    if f.degree >= code.k:
        return _failure(STRUCTURE_FAILED, lam)
    if code.distance(code.encode(f), received) != eps:
        return _failure(WEIGHT_MISMATCH, lam)
    return DecodeOutcome(True, f, lam)
