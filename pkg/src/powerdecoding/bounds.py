"""Decoding radii and failure-probability bounds for Power decoding."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


class BoundNotApplicable(ValueError):
    """The bound's hypothesis does not hold for the given parameters."""


def tau(n: int, k: int, ell: int) -> Fraction:
    """Decoding radius ell*n/(ell+1) - ell*(k-1)/2 - ell/(ell+1), exactly.

    >>> tau(16, 4, 2)
    Fraction(7, 1)
    """
    if ell < 1 or ell * (k - 1) >= n:
        raise ValueError(f"need ell >= 1 and ell*(k-1) < n, got ell={ell}, n={n}, k={k}")
    return Fraction(ell * n, ell + 1) - Fraction(ell * (k - 1), 2) - Fraction(ell, ell + 1)


def max_ell(n: int, k: int) -> int | None:
    """Largest admissible powering degree, or None when unbounded (k == 1)."""
    return None if k == 1 else (n - 1) // (k - 1)


def best_ell(n: int, k: int, ell_max: int) -> int:
    """Argmax of tau over the admissible 1..ell_max; ties go to the smallest."""
    top = ell_max if max_ell(n, k) is None else min(ell_max, max_ell(n, k))
    best, best_tau = 1, tau(n, k, 1)
    for ell in range(2, top + 1):
        t = tau(n, k, ell)
        if t > best_tau:
            best, best_tau = ell, t
    return best


def _exp2(log2v: float) -> float:
    try:
        return 2.0**log2v
    except OverflowError:
        return math.inf


def pf_bound_l2(q: int, n: int, k: int, eps: int) -> float:
    """(q/(q-1))^eps * q^(3(eps - tau(2))) / (q-1) for ell = 2."""
    t2 = tau(n, k, 2)
    lg = eps * math.log2(q / (q - 1)) + 3 * float(eps - t2) * math.log2(q) - math.log2(q - 1)
    return _exp2(lg)


def l3_branch(n: int, k: int, eps: int) -> str:
    """'low' when eps < tau(2) - k/3 + 1, else 'high'."""
    return "low" if eps < tau(n, k, 2) - Fraction(k, 3) + 1 else "high"


def pf_bound_l3(q: int, n: int, k: int, eps: int) -> float:
    """Failure-probability bound for ell = 3, valid when eps > d/2."""
    d = n - k + 1
    if 2 * eps <= d:
        raise BoundNotApplicable(f"the ell=3 bound needs eps > d/2 = {Fraction(d, 2)}")
    lq = math.log2(q)
    lg = eps * math.log2(q / (q - 1))
    if l3_branch(n, k, eps) == "low":
        lg += (2 * eps - (n - 2 * k + 1)) * math.log2(3 / q)
        lg += float(3 * (eps - tau(n, k, 2)) + k - 1) * lq
    else:
        lg += 2 * (2 * eps - d) + 2 * (k - 1)
        lg += float(4 * (eps - tau(n, k, 3)) - 2) * lq
    return _exp2(lg)


def lemma_triple_bound(q: int, N: int, K1: int, K2: int, K3: int) -> int:
    """Upper bound on #{(f1, f2, f3): f1 f3 = f2^2 mod U, f2 monic, deg f_t < K_t}
    for deg U = N.
    """
    if not K1 < K2 < K3 < N:
        raise ValueError(f"need K1 < K2 < K3 < N, got {(K1, K2, K3, N)}")
    if K1 + K3 - 2 < N:
        return 3 ** (K2 - 1) * q**K2
    return 2 ** (K1 + K3 - 2) * q ** (K1 + K2 + K3 - N - 2)


@dataclass
class BoundReport:
    q: int
    n: int
    k: int
    ell: int
    taus: dict[int, Fraction] = field(default_factory=dict)
    ell_hat: int = 1
    rows: list[dict] = field(default_factory=list)


def bound_report(q: int, n: int, k: int, ell: int, eps_values) -> BoundReport:
    rep = BoundReport(q, n, k, ell)
    top = ell if max_ell(n, k) is None else min(ell, max_ell(n, k))
    rep.taus = {l: tau(n, k, l) for l in range(1, top + 1)}
    rep.ell_hat = best_ell(n, k, ell)
    for eps in eps_values:
        row = {"epsilon": eps}
        row["pf_l2"] = pf_bound_l2(q, n, k, eps) if 2 in rep.taus else None
        try:
            row["pf_l3"] = pf_bound_l3(q, n, k, eps) if 3 in rep.taus else None
            row["branch"] = l3_branch(n, k, eps) if 3 in rep.taus else None
        except BoundNotApplicable:
            row["pf_l3"], row["branch"] = None, None
        rep.rows.append(row)
    return rep
