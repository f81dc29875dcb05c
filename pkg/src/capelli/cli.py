"""Command-line front end: ``capelli <subcommand> ...``.

Exit status is 0 when every check holds, 1 when a check fails and 2 on a
usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import cases, harmonics
from .context import CaseContext
from .nclinalg import (
    cauchy_binet_check,
    ishikawa_wakayama_check,
    ishikawa_wakayama_general_check,
    symbolic_matrix,
    symmetric_symbolic_matrix,
)
from .partitions import as_partition, lr_coefficient, lr_product, partitions
from .poly import Poly, symbol

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _check(name: str, holds: bool, witness=None) -> dict:
    out = {"name": name, "holds": bool(holds)}
    if witness is not None:
        out["witness"] = witness
    return out


def parse_partition(text: str) -> tuple:
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return ()
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"not a partition: {text!r}") from None
    try:
        return as_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _fmt_partition(p) -> str:
    return ",".join(map(str, p)) if p else "0"


# -- jobs (top-level so that they can run in worker processes) ----------------


def make_context(case: str, k=None, p=None, q=None, n=None) -> CaseContext:
    try:
        if case == "C":
            return CaseContext.complex(p, q, n)
        return CaseContext(case, n, k=k)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad case parameters: {exc}") from None


def job_capelli(params: dict, d: int) -> list:
    ctx = make_context(**params)
    tag = f"{ctx.label()},d={d}"
    rep = cases.verify_identity(ctx, d)
    witness = None
    if not rep["holds"]:
        witness = "first differing term: " + cases.first_term(rep["diff"])
    out = [_check(f"identity[{tag}]", rep["holds"], witness)]
    if d <= ctx.n:
        inv = cases.verify_h_invariance(ctx, d)
        w = None
        if not inv["holds"]:
            w = f"pbw: {inv['pbw_failures'][:3]}, omega: {inv['omega_failures'][:3]}"
        out.append(_check(f"h-invariance[{tag}]", inv["holds"], w))
    return out


def job_brackets(params: dict) -> list:
    ctx = make_context(**params)
    rep = cases.omega_bracket_check(ctx)
    return [_check(f"omega-brackets[{ctx.label()}]", rep["holds"], rep["failures"][:5] or None)]


def _random_entry(rng, family, i, j) -> Poly:
    return symbol(family, i, j) * rng.randint(-3, 3) + rng.randint(-2, 2)


def job_cauchy_binet(seed: int, count: int) -> list:
    rng = random.Random(seed)
    fails = []
    for t in range(count):
        N = rng.randint(1, 4)
        d = rng.randint(1, 3)
        A = [[_random_entry(rng, "a", i, j) for j in range(1, N + 1)] for i in range(1, d + 1)]
        B = [[_random_entry(rng, "b", i, j) for j in range(1, d + 1)] for i in range(1, N + 1)]
        if not cauchy_binet_check(A, B):
            fails.append(f"instance {t} (d={d}, N={N})")
    return [_check(f"cauchy-binet[{count} random, seed={seed}]", not fails, fails or None)]


def job_iw() -> list:
    out = []
    for n in (1, 2):
        for d in range(1, n + 1):
            A, B = symbolic_matrix("a", n, 2 * d), symbolic_matrix("b", n, 2 * d)
            out.append(_check(f"ishikawa-wakayama-identity[n={n},d={d}]", ishikawa_wakayama_check(A, B)))
            X = symmetric_symbolic_matrix("z", n)
            out.append(
                _check(
                    f"ishikawa-wakayama-symmetric[n={n},d={d}]",
                    ishikawa_wakayama_general_check(A, B, X),
                )
            )
    return out


def job_lemma(k: int, n: int, d: int) -> list:
    rep = cases.verify_capelli_lemma(k, n, d, double_star=d <= 2)
    tag = f"k={k},n={n},d={d}"
    out = [_check(f"lemma-star[{tag}]", not rep["star_failures"], rep["star_failures"][:3] or None)]
    if d <= 2:
        f = rep["double_star_failures"]
        out.append(_check(f"lemma-double-star[{tag}]", not f, [str(x) for x in f[:3]] or None))
    return out


def job_harmonics(lam: tuple, n: int, k: int) -> list:
    tag = f"lambda={_fmt_partition(lam)},n={n},k={k}"
    rep = harmonics.intersection_decomposition(lam, n, k)
    w = None
    if not rep["holds"]:
        w = (
            f"computed_dim={rep['computed_dim']} predicted_dim={rep['predicted_dim']} "
            f"hwv={rep['hwv_weights']} predicted={rep['predicted_weights']}"
        )
    out = [
        _check(
            f"decomposition[{tag}]",
            rep["holds"],
            w or f"computed_dim={rep['computed_dim']} predicted_dim={rep['predicted_dim']}",
        )
    ]
    ann = harmonics.verify_annihilation(lam, n, k)
    out.append(
        _check(
            f"annihilation[{tag}]",
            ann["holds"],
            f"basis={ann['basis_size']} degrees={ann['degrees']} failures={ann['failures'][:3]}",
        )
    )
    cal = harmonics.calibration_check(lam, n, k)
    out.append(_check(f"calibration[{tag}]", cal["holds"]))
    return out


def job_ta(mu: tuple, nu: tuple, lam: tuple, n: int, k: int) -> list:
    rep = harmonics.ta_component_dim(mu, nu, lam, n, k)
    tag = f"mu={_fmt_partition(mu)},nu={_fmt_partition(nu)},lambda={_fmt_partition(lam)},n={n},k={k}"
    return [
        _check(f"ta-dim[{tag}]", rep["dim"] == rep["expected"], f"dim={rep['dim']} c={rep['expected']}"),
        _check(
            f"ta-span[{tag}]",
            rep["span_harmonic"] and rep["span_gln_invariant"] and rep["span_weight_ok"],
        ),
        _check(f"ta-xi-hwv[{tag}]", all(rep["xi"].values()), None),
    ]


# -- grids --------------------------------------------------------------------


def capelli_grid(case: str | None) -> list:
    out = []
    if case in (None, "R"):
        out += [{"case": "R", "k": k, "n": n} for k in (1, 2, 3) for n in (1, 2, 3)]
    if case in (None, "C"):
        out += [{"case": "C", "p": p, "q": q, "n": n} for p in (1, 2) for q in (1, 2) for n in (1, 2)]
    if case in (None, "H"):
        out += [{"case": "H", "k": k, "n": n} for k in (2, 3, 4) for n in (1, 2)]
    return out


def harmonics_grid() -> list:
    out = [((l,) if l else (), n, 1) for n in (1, 2, 3, 4) for l in range(5)]
    out += [(lam, n, 2) for n in (2, 3, 4) for lam in ((1,), (1, 1), (2,), (2, 1), (2, 2))]
    return out


def ta_grid() -> list:
    p2 = [p for s in range(5) for p in partitions(s, 2)]
    return [
        (mu, nu, lam, 4, 2)
        for lam in p2
        for mu in p2
        for nu in p2
        if sum(mu) + sum(nu) == sum(lam)
    ]


# -- dispatch -----------------------------------------------------------------


def _capelli_jobs(args) -> tuple:
    if args.grid:
        grid = capelli_grid(args.case)
        params = {"grid": True, "case": args.case}
    else:
        if args.case is None or args.n is None:
            raise UsageError("verify-capelli needs --case and --n (or --grid)")
        grid = [_single_params(args)]
        params = dict(grid[0])
        if args.d is not None:
            params["d"] = args.d
    jobs = []
    for p in grid:
        ctx = make_context(**p)
        if args.d is not None and not args.grid:
            if not 1 <= args.d <= ctx.rank:
                raise UsageError(f"--d must be in 1..{ctx.rank} for {ctx.label()}")
            ds = [args.d]
        else:
            ds = range(1, ctx.rank + 1)
        jobs.append((job_brackets, (p,)))
        jobs += [(job_capelli, (p, d)) for d in ds]
    return params, jobs


def _single_params(args) -> dict:
    if args.case == "C":
        if args.p is None or args.q is None:
            raise UsageError("case C needs --p and --q")
        if args.k is not None:
            raise UsageError("case C takes --p/--q, not --k")
        return {"case": "C", "p": args.p, "q": args.q, "n": args.n}
    if args.k is None:
        raise UsageError(f"case {args.case} needs --k")
    if args.p is not None or args.q is not None:
        raise UsageError(f"case {args.case} takes --k, not --p/--q")
    make_context(args.case, k=args.k, n=args.n)
    return {"case": args.case, "k": args.k, "n": args.n}


def _lemma_jobs(args) -> tuple:
    jobs = [(job_cauchy_binet, (args.seed, args.instances)), (job_iw, ())]
    for k in (1, 2, 3):
        for n in (1, 2, 3):
            for d in range(1, min(k, n) + 1):
                jobs.append((job_lemma, (k, n, d)))
    return {"seed": args.seed, "instances": args.instances}, jobs


def _harmonics_jobs(args) -> tuple:
    if args.grid:
        grid = harmonics_grid()
        params = {"grid": True}
    else:
        if args.lam is None or args.n is None or args.k is None:
            raise UsageError("harmonics needs --lambda, --n and --k (or --grid)")
        lam = parse_partition(args.lam)
        if args.k > args.n:
            raise UsageError("harmonics needs k <= n")
        if len(lam) > args.k:
            raise UsageError("lambda has more than k parts")
        grid = [(lam, args.n, args.k)]
        params = {"lambda": list(lam), "n": args.n, "k": args.k}
    return params, [(job_harmonics, g) for g in grid]


def _ta_jobs(args) -> tuple:
    if args.grid:
        return {"grid": True}, [(job_ta, g) for g in ta_grid()]
    if None in (args.mu, args.nu, args.lam, args.n, args.k):
        raise UsageError("ta needs --mu, --nu, --lambda, --n and --k (or --grid)")
    mu, nu, lam = (parse_partition(t) for t in (args.mu, args.nu, args.lam))
    if 2 * args.k > args.n:
        raise UsageError("ta needs 2k <= n")
    if max(len(mu), len(nu), len(lam)) > args.k:
        raise UsageError("partitions must have at most k parts")
    params = {"mu": list(mu), "nu": list(nu), "lambda": list(lam), "n": args.n, "k": args.k}
    return params, [(job_ta, (mu, nu, lam, args.n, args.k))]


def _lr_checks(args) -> tuple:
    if args.mu is None or args.nu is None:
        raise UsageError("lr needs --mu and --nu")
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    params = {"mu": list(mu), "nu": list(nu)}
    if args.lam is not None:
        lam = parse_partition(args.lam)
        params["lambda"] = list(lam)
        c = lr_coefficient(mu, nu, lam)
        return params, [_check(f"lr[{_fmt_partition(lam)}]", True, c)]
    table = lr_product(mu, nu)
    return params, [_check(f"lr[{_fmt_partition(lam)}]", True, c) for lam, c in table.items()]


def _run_jobs(jobs, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        results = [fn(*a) for fn, a in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, *a) for fn, a in jobs]
            results = [f.result() for f in futures]
    return [c for r in results for c in r]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", help="also write the report to this file")

    parser = argparse.ArgumentParser(prog="capelli", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    vc = sub.add_parser("verify-capelli", parents=[common], help="Capelli identities and h-invariance")
    vc.add_argument("--case", choices=("R", "C", "H"))
    for name in ("k", "p", "q", "n", "d"):
        vc.add_argument(f"--{name}", type=int)
    vc.add_argument("--grid", action="store_true", help="sweep the full grid for --case (or all cases)")

    vl = sub.add_parser("verify-lemmas", parents=[common], help="matrix lemmas behind the identities")
    vl.add_argument("--seed", type=int, default=0)
    vl.add_argument("--instances", type=int, default=50)

    lr = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    lr.add_argument("--mu")
    lr.add_argument("--nu")
    lr.add_argument("--lambda", dest="lam")

    hm = sub.add_parser("harmonics", parents=[common], help="decomposition of U cap V and annihilation")
    hm.add_argument("--lambda", dest="lam")
    hm.add_argument("--n", type=int)
    hm.add_argument("--k", type=int)
    hm.add_argument("--grid", action="store_true")

    ta = sub.add_parser("ta", parents=[common], help="tensor product algebra component dimensions")
    ta.add_argument("--mu")
    ta.add_argument("--nu")
    ta.add_argument("--lambda", dest="lam")
    ta.add_argument("--n", type=int)
    ta.add_argument("--k", type=int)
    ta.add_argument("--grid", action="store_true")
    return parser


def render_text(report: dict) -> str:
    lines = [f"{report['subcommand']} {json.dumps(report['params'], sort_keys=True)}"]
    for c in report["checks"]:
        status = "PASS" if c["holds"] else "FAIL"
        line = f"  {status} {c['name']}"
        if "witness" in c:
            line += f": {c['witness']}"
        lines.append(line)
    passed = sum(c["holds"] for c in report["checks"])
    lines.append(f"{passed}/{len(report['checks'])} checks passed in {report['elapsed']:.2f}s")
    return "\n".join(lines)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        if args.workers < 1:
            raise UsageError("--workers must be >= 1")
        if args.subcommand == "lr":
            params, checks = _lr_checks(args)
        else:
            builder = {
                "verify-capelli": _capelli_jobs,
                "verify-lemmas": _lemma_jobs,
                "harmonics": _harmonics_jobs,
                "ta": _ta_jobs,
            }[args.subcommand]
            params, jobs = builder(args)
            checks = _run_jobs(jobs, args.workers)
    except UsageError as exc:
        print(f"capelli {args.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "subcommand": args.subcommand,
        "params": params,
        "checks": checks,
        "elapsed": round(time.perf_counter() - start, 3),
    }
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True)
    elif args.subcommand == "lr":
        if "lambda" in params:
            text = str(checks[0]["witness"])
        else:
            text = "\n".join(f"{c['name'][3:-1]}: {c['witness']}" for c in checks)
    else:
        text = render_text(report)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK if all(c["holds"] for c in checks) else EXIT_FAIL


def main() -> None:
    sys.exit(run())
