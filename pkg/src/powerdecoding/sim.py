"""Monte Carlo campaigns: failure rates, decoder equivalence, offset invariance.

Trial ``i`` at error weight ``eps`` draws from
``numpy.random.default_rng([seed, eps, i])``, so results do not depend on the
order (or process) in which trials run.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from . import bounds
from .decode_gao import AMBIGUOUS, STRUCTURE_FAILED, WEIGHT_MISMATCH, power_gao_decode
from .decode_syn import power_syndrome_decode
from .ff import Field
from .grs import GrsCode, apply_error, sample_error

FAILURE_COLUMNS = ["epsilon", "trials", "failures", "rate", "tau2", "tau3", "pf_l2", "pf_l3", "variant", "seed"]
DETAIL_COLUMNS = ["fail_structure", "fail_weight", "fail_ambiguous"]
EQUIV_COLUMNS = ["epsilon", "trials", "gao_failures", "syndrome_failures", "disagreements", "message_mismatches", "seed"]
OFFSET_COLUMNS = ["epsilon", "trials", "violations", "error_mismatches", "variant", "seed"]


@dataclass(frozen=True)
class CodeSpec:
    """Serializable description of a GRS code.

    ``alphas`` is an explicit list of element codes or one of ``"all-nonzero"``
    / ``"all-elements"`` (the first n such elements in code order).  ``betas``
    is a list, ``"ones"``, or ``"random"`` (drawn from ``seed``).
    """

    field: str
    n: int
    k: int
    alphas: object = "all-nonzero"
    betas: object = "ones"
    seed: int = 0

    def build(self) -> GrsCode:
        F = Field.parse(str(self.field))
        if self.alphas == "all-nonzero":
            alphas = np.arange(1, F.q)[: self.n]
        elif self.alphas == "all-elements":
            alphas = np.arange(F.q)[: self.n]
        elif isinstance(self.alphas, (list, tuple)):
            alphas = list(self.alphas)
        else:
            raise ValueError(f"unknown alphas specification {self.alphas!r}")
        if len(alphas) != self.n:
            raise ValueError(f"alphas specification yields {len(alphas)} points, need n={self.n}")
        if self.betas == "ones":
            betas = None
        elif self.betas == "random":
            betas = np.random.default_rng([self.seed, 0xBE7A]).integers(1, F.q, self.n)
        elif isinstance(self.betas, (list, tuple)):
            betas = list(self.betas)
        else:
            raise ValueError(f"unknown betas specification {self.betas!r}")
        return GrsCode(F, self.n, self.k, alphas, betas)

    @classmethod
    def from_dict(cls, d: dict) -> "CodeSpec":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(d) - known
        if extra:
            raise ValueError(f"unknown code spec keys: {sorted(extra)}")
        return cls(**d)


@dataclass(frozen=True)
class ExperimentConfig:
    code: CodeSpec
    ell: int
    eps: tuple[int, ...]
    trials: int = 100
    seed: int = 0
    variant: str = "gao"
    workers: int = 1
    fix_zero_codeword: bool = False
    detail: bool = False
    syndrome_offset: int = 0

    def validate(self, code: GrsCode) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.variant not in ("gao", "syndrome", "both"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if not self.eps or min(self.eps) < 0 or max(self.eps) > code.n:
            raise ValueError(f"error weights must lie in [0, {code.n}]")
        if self.ell < 1 or self.ell * (code.k - 1) >= code.n:
            raise ValueError("need ell >= 1 and ell*(k-1) < n")
        if self.variant in ("syndrome", "both") and np.any(code.alphas == 0):
            raise ValueError("Power syndromes decoding requires all evaluation points to be nonzero")

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        d = dict(d)
        d["code"] = CodeSpec.from_dict(d["code"])
        d["eps"] = tuple(parse_eps(d["eps"]))
        extra = set(d) - set(cls.__dataclass_fields__)
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**d)

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return asdict(self)


def parse_eps(spec) -> list[int]:
    """``7``, ``[5, 6, 7]``, ``"5:9"`` (half-open) or ``"5,7,9"``."""
    if isinstance(spec, int):
        return [spec]
    if isinstance(spec, (list, tuple)):
        return [int(e) for e in spec]
    s = str(spec).strip()
    if ":" in s:
        a, b = s.split(":")
        return list(range(int(a), int(b)))
    return [int(e) for e in s.split(",") if e.strip()]


@dataclass
class TrialRecord:
    eps: int
    index: int
    status: dict = field(default_factory=dict)
    reasons: dict = field(default_factory=dict)
    agree: bool | None = None
    recovered: dict = field(default_factory=dict)
    elapsed: float = 0.0


def trial_rng(seed: int, eps: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, eps, index])


def _decoders(variant: str, offset: int = 0):
    out = {}
    if variant in ("gao", "both"):
        out["gao"] = power_gao_decode
    if variant in ("syndrome", "both"):
        out["syndrome"] = lambda c, r, l: power_syndrome_decode(c, r, l, offset)
    return out


def _run_trial(code: GrsCode, cfg: ExperimentConfig, eps: int, i: int) -> TrialRecord:
    rng = trial_rng(cfg.seed, eps, i)
    f = code.random_message(rng)
    if cfg.fix_zero_codeword:
        f = f * 0
    r = apply_error(code, code.encode(f), sample_error(code, eps, rng))
    rec = TrialRecord(eps, i)
    t0 = time.perf_counter()
    msgs = {}
    for name, dec in _decoders(cfg.variant, cfg.syndrome_offset).items():
        out = dec(code, r, cfg.ell)
        rec.status[name] = out.success
        rec.reasons[name] = out.reason
        rec.recovered[name] = out.success and out.message == f
        msgs[name] = out.message
    if len(rec.status) == 2:
        rec.agree = rec.status["gao"] == rec.status["syndrome"] and (
            not rec.status["gao"] or msgs["gao"] == msgs["syndrome"]
        )
    rec.elapsed = time.perf_counter() - t0
    return rec


def _batch(args):
    code, cfg, eps, idx = args
    return [_run_trial(code, cfg, eps, i) for i in idx]


def run_trials(cfg: ExperimentConfig, code: GrsCode | None = None, fn=_batch) -> list[TrialRecord]:
    """All trials of a campaign, sorted by (eps, index)."""
    code = cfg.code.build() if code is None else code
    cfg.validate(code)
    jobs = []
    per = max(1, cfg.trials // (4 * max(cfg.workers, 1)))
    for eps in cfg.eps:
        for s in range(0, cfg.trials, per):
            jobs.append((code, cfg, eps, range(s, min(s + per, cfg.trials))))
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as ex:
            batches = list(ex.map(fn, jobs))
    else:
        batches = [fn(j) for j in jobs]
    recs = [r for b in batches for r in b]
    recs.sort(key=lambda r: (r.eps, r.index))
    return recs


def _fmt(v) -> str:
    if v is None:
        return "NA"
    return f"{float(v):.6g}"


def _taus(code: GrsCode) -> dict:
    out = {}
    for ell in (2, 3):
        try:
            out[ell] = bounds.tau(code.n, code.k, ell)
        except ValueError:
            out[ell] = None
    return out


def run_failure_experiment(cfg: ExperimentConfig) -> list[dict]:
    code = cfg.code.build()
    recs = run_trials(cfg, code)
    taus = _taus(code)
    q, n, k = code.field.q, code.n, code.k
    rows = []
    for variant in _decoders(cfg.variant):
        for eps in cfg.eps:
            sel = [r for r in recs if r.eps == eps]
            fails = [r for r in sel if not r.status[variant]]
            pf3 = None
            if taus[3] is not None and 2 * eps > code.d:
                pf3 = bounds.pf_bound_l3(q, n, k, eps)
            row = {
                "epsilon": eps,
                "trials": len(sel),
                "failures": len(fails),
                "rate": len(fails) / len(sel),
                "tau2": taus[2],
                "tau3": taus[3],
                "pf_l2": bounds.pf_bound_l2(q, n, k, eps) if taus[2] is not None else None,
                "pf_l3": pf3,
                "variant": variant,
                "seed": cfg.seed,
            }
            if cfg.detail:
                for col, reason in zip(DETAIL_COLUMNS, (STRUCTURE_FAILED, WEIGHT_MISMATCH, AMBIGUOUS)):
                    row[col] = sum(r.reasons[variant] == reason for r in fails)
            rows.append(row)
    return rows


def run_equivalence_experiment(cfg: ExperimentConfig) -> list[dict]:
    cfg = replace(cfg, variant="both")
    recs = run_trials(cfg)
    rows = []
    for eps in cfg.eps:
        sel = [r for r in recs if r.eps == eps]
        rows.append({
            "epsilon": eps,
            "trials": len(sel),
            "gao_failures": sum(not r.status["gao"] for r in sel),
            "syndrome_failures": sum(not r.status["syndrome"] for r in sel),
            "disagreements": sum(r.status["gao"] != r.status["syndrome"] for r in sel),
            "message_mismatches": sum(r.status["gao"] == r.status["syndrome"] and not r.agree for r in sel),
            "seed": cfg.seed,
        })
    return rows


def _offset_batch(args):
    code, cfg, eps, idx = args
    dec = _decoders(cfg.variant, cfg.syndrome_offset)[cfg.variant]
    out = []
    for i in idx:
        rng = trial_rng(cfg.seed, eps, i)
        e = sample_error(code, eps, rng).vector(code.n)
        e = code.field.mul(code.betas, e)
        words = [e] + [code.field.add(e, code.encode(code.random_message(rng))) for _ in range(2)]
        outs = [dec(code, w, cfg.ell) for w in words]
        status = {o.success for o in outs}
        err = set()
        for w, o in zip(words, outs):
            if o.success:
                err.add(tuple(code.field.sub(w, code.encode(o.message)).tolist()))
        out.append(TrialRecord(eps, i, status={"violation": len(status) > 1},
                               agree=len(err) <= 1))
    return out


def run_offset_invariance_experiment(cfg: ExperimentConfig) -> list[dict]:
    """Decode e, e + c and e + c' for random codewords c, c'; count status changes."""
    if cfg.variant == "both":
        raise ValueError("offset invariance runs one decoder variant at a time")
    recs = run_trials(cfg, fn=_offset_batch)
    rows = []
    for eps in cfg.eps:
        sel = [r for r in recs if r.eps == eps]
        rows.append({
            "epsilon": eps,
            "trials": len(sel),
            "violations": sum(r.status["violation"] for r in sel),
            "error_mismatches": sum(not r.agree for r in sel),
            "variant": cfg.variant,
            "seed": cfg.seed,
        })
    return rows


def to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    """Render rows with fixed formatting (identical inputs give identical bytes)."""
    if columns is None:
        columns = list(rows[0]) if rows else []
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([
            row[c] if isinstance(row[c], (int, str)) and not isinstance(row[c], bool) else _fmt(row[c])
            for c in columns
        ])
    return buf.getvalue()
