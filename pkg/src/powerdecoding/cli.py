"""Command-line interface: ``powerdecode <subcommand> ...``.

Exit status: 0 on success, 1 when ``decode`` reports a decoding failure,
2 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

import numpy as np

from . import bounds, sim
from .decode_gao import power_gao_decode
from .decode_syn import check_nonzero_alphas, power_syndrome_decode
from .grs import apply_error, sample_error
from .poly import Poly


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        v = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"expected an integer list like [1,2,3], got {text!r}") from exc
    if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
        raise UsageError(f"expected an integer list like [1,2,3], got {text!r}")
    return v


def _add_code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("code")
    g.add_argument("--code", metavar="FILE", help="JSON code spec (field, n, k, alphas, betas, seed)")
    g.add_argument("--field", help='field, e.g. "17", "251^1" or "2^4/[1,1,0,0,1]"')
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--alphas", help='"all-nonzero", "all-elements" or an integer list')
    g.add_argument("--betas", help='"ones", "random" or an integer list')


def _code_dict(args, base: dict) -> dict:
    d = dict(base)
    if args.code:
        with open(args.code) as fh:
            d.update(json.load(fh))
    for key in ("field", "n", "k"):
        if getattr(args, key) is not None:
            d[key] = getattr(args, key)
    for key in ("alphas", "betas"):
        v = getattr(args, key)
        if v is not None:
            d[key] = _int_list(v) if v.strip().startswith("[") else v
    return d


def _code_spec(args) -> sim.CodeSpec:
    d = _code_dict(args, {})
    missing = {"field", "n", "k"} - set(d)
    if missing:
        raise UsageError(f"code spec is missing {sorted(missing)} (use --code FILE or flags)")
    return sim.CodeSpec.from_dict(d)


def _print_list(v) -> None:
    print(json.dumps([int(x) for x in v]))


def cmd_encode(args) -> int:
    code = _code_spec(args).build()
    _print_list(code.encode(Poly(code.field, _int_list(args.message))))
    return 0


def cmd_corrupt(args) -> int:
    code = _code_spec(args).build()
    word = np.array(_int_list(args.word), dtype=np.int64)
    err = sample_error(code, args.errors, np.random.default_rng(args.seed))
    print("error positions:", list(err.support), file=sys.stderr)
    _print_list(apply_error(code, word, err))
    return 0


def cmd_decode(args) -> int:
    code = _code_spec(args).build()
    word = np.array(_int_list(args.word), dtype=np.int64)
    if len(word) != code.n:
        raise UsageError(f"received word has length {len(word)}, expected n={code.n}")
    if args.variant == "syndrome":
        check_nonzero_alphas(code)
        out = power_syndrome_decode(code, word, args.ell)
    else:
        out = power_gao_decode(code, word, args.ell)
    print(f"status: {out.status}")
    if out.success:
        print("f:", json.dumps(out.message.tolist() or [0]))
        print("lambda:", json.dumps(out.locator.tolist()))
        print("errors:", out.error_count)
        return 0
    print("reason:", out.reason)
    return 1


def _experiment(args) -> sim.ExperimentConfig:
    if args.config:
        with open(args.config) as fh:
            d = json.load(fh)
    else:
        d = {}
    if any(getattr(args, k) is not None for k in ("code", "field", "n", "k", "alphas", "betas")):
        d["code"] = _code_dict(args, d.get("code", {}))
    for key in ("ell", "eps", "trials", "seed", "variant", "workers"):
        v = getattr(args, key, None)
        if v is not None:
            d[key] = v
    for flag in ("fix_zero_codeword", "detail"):
        if getattr(args, flag, False):
            d[flag] = True
    if getattr(args, "syndrome_offset", None):
        d["syndrome_offset"] = args.syndrome_offset
    for key in ("code", "ell", "eps", "seed"):
        if key not in d:
            raise UsageError(f"experiment needs {key!r} (config file or --{key})")
    return sim.ExperimentConfig.from_dict(d)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_simulate(args) -> int:
    cfg = _experiment(args)
    rows = sim.run_failure_experiment(cfg)
    cols = sim.FAILURE_COLUMNS + (sim.DETAIL_COLUMNS if cfg.detail else [])
    _emit(sim.to_csv(rows, cols), args.out)
    return 0


def cmd_equiv(args) -> int:
    cfg = _experiment(args)
    _emit(sim.to_csv(sim.run_equivalence_experiment(cfg), sim.EQUIV_COLUMNS), args.out)
    return 0


def cmd_offset(args) -> int:
    cfg = _experiment(args)
    if cfg.variant == "both":
        cfg = replace(cfg, variant="gao")
    _emit(sim.to_csv(sim.run_offset_invariance_experiment(cfg), sim.OFFSET_COLUMNS), args.out)
    return 0


def cmd_bounds(args) -> int:
    n, k, q = args.n, args.k, args.q
    eps_values = sim.parse_eps(args.eps) if args.eps else list(range(0, n - k + 1))
    rep = bounds.bound_report(q, n, k, args.ell, eps_values)
    cols = ["epsilon"] + [f"tau{l}" for l in range(1, args.ell + 1)] + ["pf_l2", "pf_l3", "branch"]
    rows = []
    for row in rep.rows:
        row = dict(row)
        for l in range(1, args.ell + 1):
            row[f"tau{l}"] = rep.taus.get(l)
        row["branch"] = row["branch"] or "NA"
        rows.append(row)
    _emit(sim.to_csv(rows, cols), args.out)
    print(f"# best ell: {rep.ell_hat}", file=sys.stderr)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok = True
    for name, passed in run_selftest(seed=args.seed):
        print(f"{'PASS' if passed else 'FAIL'} {name}")
        ok &= passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="powerdecode", description="Power decoding of GRS codes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode message coefficients")
    _add_code_args(p)
    p.add_argument("--message", required=True, help="coefficients, lowest degree first")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="add a random error of given weight")
    _add_code_args(p)
    p.add_argument("--word", required=True)
    p.add_argument("--errors", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="decode a received word")
    _add_code_args(p)
    p.add_argument("--word", required=True)
    p.add_argument("--variant", choices=["gao", "syndrome"], default="gao")
    p.add_argument("--ell", type=int, default=1)
    p.set_defaults(func=cmd_decode)

    for name, func, helptext in (
        ("simulate", cmd_simulate, "failure-rate campaign (CSV)"),
        ("equiv", cmd_equiv, "Gao/syndrome equivalence campaign (CSV)"),
        ("offset", cmd_offset, "codeword-offset invariance campaign (CSV)"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--config", metavar="FILE", help="JSON experiment config")
        _add_code_args(p)
        p.add_argument("--ell", type=int)
        p.add_argument("--eps", help='error weights: "7", "5,6,7" or half-open "5:9"')
        p.add_argument("--trials", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--variant", choices=["gao", "syndrome", "both"])
        p.add_argument("--workers", type=int)
        p.add_argument("--out", metavar="FILE")
        if name == "simulate":
            p.add_argument("--detail", action="store_true", help="split failures by reason")
            p.add_argument("--fix-zero-codeword", action="store_true")
        if name == "equiv":
            p.add_argument("--syndrome-offset", type=int, default=0,
                           help="debug: perturb the syndrome lengths m_t by this amount")
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="radius and failure-probability bound table (CSV)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--eps", help="error weights (default 0..n-k)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("selftest", help="oracle-backed checks at tiny scale")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"powerdecode: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
