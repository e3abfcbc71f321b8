"""Power Gao decoding of GRS codes.

From the received word we form the power Lagrangians R<1>..R<ell> and look for
the solution ``(lambda, psi<1>, ..., psi<ell>)`` of the relaxed key equations

    lambda * R<t> = psi<t>  (mod G),   deg psi<t> <= deg lambda + t(k-1)

with ``deg lambda`` minimal.  Solutions form a module over F[x] spanned by the
rows ``(1, R<1>, ..., R<ell>)`` and ``G * e_t``.  With the column shifts
``(ell(k-1)+1, (ell-1)(k-1), ..., k-1, 0)`` and rightmost pivots, a module
element has pivot 0 exactly when it meets the degree constraints, so the
minimal solution is the pivot-0 row of a shifted weak Popov basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .grs import GrsCode
from .poly import Poly
from .polymat import PolyMatrix, has_competing_minimal, minimal_row, weak_popov

STRUCTURE_FAILED = "structure-check-failed"
WEIGHT_MISMATCH = "weight-mismatch"
AMBIGUOUS = "ambiguous-minimal-solution"


@dataclass(frozen=True)
class DecodeOutcome:
    success: bool
    message: Poly | None = None
    locator: Poly | None = None
    reason: str | None = None

    @property
    def error_count(self) -> int | None:
        return None if self.locator is None or not self.success else int(self.locator.degree)

    @property
    def status(self) -> str:
        return "Success" if self.success else "Failure"


def _failure(reason: str, locator: Poly | None = None) -> DecodeOutcome:
    return DecodeOutcome(False, None, locator, reason)


def check_ell(code: GrsCode, ell: int) -> None:
    if ell < 1 or ell * (code.k - 1) >= code.n:
        raise ValueError(f"need ell >= 1 and ell*(k-1) < n; got ell={ell} for {code!r}")


def gao_shifts(k: int, ell: int) -> list[int]:
    return [ell * (k - 1) + 1] + [(ell - t) * (k - 1) for t in range(1, ell + 1)]


@dataclass
class GaoInstance:
    code: GrsCode
    ell: int
    received: np.ndarray
    lagrangians: list[Poly]
    basis: PolyMatrix
    shifts: list[int] = dc_field(default_factory=list)


def build_gao_module(code: GrsCode, r_norm, ell: int) -> GaoInstance:
    check_ell(code, ell)
    F = code.field
    R = code.power_lagrangians(r_norm, ell)
    zero = Poly.zero(F)
    rows = [[Poly.one(F)] + R]
    for t in range(1, ell + 1):
        rows.append([code.G if j == t else zero for j in range(ell + 1)])
    return GaoInstance(
        code, ell, np.asarray(r_norm, dtype=np.int64), R, PolyMatrix.from_rows(rows), gao_shifts(code.k, ell)
    )


def minimal_solution(inst: GaoInstance, with_uniqueness: bool = False):
    """Pivot-0 row of the reduced basis: ``(lambda, psi<1>, ..., psi<ell>)``.

    With ``with_uniqueness`` also report whether lambda is the only minimal
    one up to a scalar.
    """
    reduced = weak_popov(inst.basis, inst.shifts)
    row = minimal_row(reduced, inst.shifts, 0)
    if with_uniqueness:
        return row, not has_competing_minimal(reduced, inst.shifts, 0)
    return row


def structure_check(row, k: int, modulus: Poly | None = None) -> Poly | None:
    """Return f if ``row == (lam, lam*f, ..., lam*f**ell)`` with deg f < k.

    With ``modulus`` (the code's G) the higher entries are compared modulo G:
    once ``deg lam + t(k-1) >= n`` the key equation fixes psi<t> only up to
    multiples of G.
    """
    lam, psis = row[0], list(row[1:])
    if lam.is_zero:
        return None
    f, rem = divmod(psis[0], lam)
    if not rem.is_zero or f.degree >= k:
        return None
    acc = psis[0]
    for psi in psis[1:]:
        acc = acc * f
        if modulus is None:
            if psi != acc:
                return None
        elif (psi - acc) % modulus != 0:
            return None
    return f


def power_gao_decode(code: GrsCode, received, ell: int) -> DecodeOutcome:
    """Decode a received (beta-scaled) word; failure is returned, not raised."""
    received = np.asarray(received, dtype=np.int64)
    inst = build_gao_module(code, code.normalize(received), ell)
    row, unique = minimal_solution(inst, with_uniqueness=True)
    scale = row[0].lc().inverse()
    row = [p * scale for p in row]
    lam = row[0]
    if not unique:
        return _failure(AMBIGUOUS, lam)
    f = structure_check(row, code.k, code.G)
    if f is None:
        return _failure(STRUCTURE_FAILED, lam)
    if code.distance(code.encode(f), received) != lam.degree:
        return _failure(WEIGHT_MISMATCH, lam)
    return DecodeOutcome(True, f, lam)
