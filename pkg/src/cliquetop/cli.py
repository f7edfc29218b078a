"""Command-line entry point: gen, analyze, certify, sweep, oracle.

Exit codes: 0 success (or certificate issued), 1 error, 2 certificate refused.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from .certificates import CertificateRefused, certify_pi1_nontrivial
from .complex import CellComplex2, euler_characteristic, is_connected, is_normal, is_two_normal, l_functional
from .cx2 import Cx2FormatError, dumps, read_cx2
from .density import THIRD, density_brute, density_flow
from .errors import GuardError, PreconditionError
from .experiments import TOGGLES, ConfigError, ExperimentConfig, dumps_csv, p_of, run_sweep, summarize, summary_table
from .homology import homology_integral
from .random_models import sample_k4np, sample_knp
from .spectral import garland_scan
from .wedge import Inconsistency, wedge_signature

EXIT_OK, EXIT_ERROR, EXIT_REFUSED = 0, 1, 2


def _csv_list(text: str) -> list[str]:
    return [t for t in (s.strip() for s in text.split(",")) if t]


def cmd_gen(args) -> int:
    if (args.p is None) == (args.alpha is None):
        raise ConfigError("give exactly one of --p and --alpha")
    if args.alpha is not None:
        alpha = Fraction(args.alpha)
        if alpha <= 0:
            raise ConfigError("alpha must be > 0")
        p = p_of(args.n, alpha)
    else:
        p = float(args.p)
    sampler = sample_knp if args.model == "knp" else sample_k4np
    text = dumps(sampler(args.n, p, args.seed))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    X = read_cx2(args.file)
    f0, f1, f2 = X.f_vector()
    chi = euler_characteristic(X)
    out = [f"f-vector: ({f0}, {f1}, {f2})", f"chi: {chi}"]
    h = homology_integral(X)
    if isinstance(X, CellComplex2):
        out.append("model: cell complex (3- and 4-cycle cells)")
    else:
        out.append(f"L: {l_functional(X)}")
        rep = density_flow(X, args.roots)
        out.append(f"density e01 (roots {args.roots}): {rep}")
    out.append(f"betti F2: {h.betti_f2}")
    out.append(f"betti Q: {h.betti_q}")
    out.append("torsion H1: {" + ", ".join(map(str, h.torsion_h1)) + "}")
    if isinstance(X, CellComplex2):
        print("\n".join(out))
        return EXIT_OK
    if not is_connected(X):
        out.append("wedge signature: n/a (disconnected)")
    else:
        d0 = density_flow(X)
        if not d0.exceeds(THIRD):
            out.append("wedge signature: n/a (density at most 1/3)")
        else:
            sig = wedge_signature(X, d0)
            if isinstance(sig, Inconsistency):
                out.append(sig.report())
            else:
                out.append(f"wedge signature (a,b,s): ({sig.a}, {sig.b}, {sig.s})")
    out.append(f"normal: {is_normal(X)}; 2-normal: {is_two_normal(X)}")
    sp = garland_scan(X)
    gap = "n/a" if sp.min_gap is None else f"{sp.min_gap:.12g}"
    out.append(f"spectral: min link gap {gap}; all links connected {sp.all_links_connected}; "
               f"garland (gap > {sp.threshold}) {'pass' if sp.passed else 'fail'}")
    print("\n".join(out))
    return EXIT_OK


def cmd_certify(args) -> int:
    X = read_cx2(args.file)
    if isinstance(X, CellComplex2):
        raise ConfigError("certify needs a simplicial complex")
    try:
        cert = certify_pi1_nontrivial(X)
    except CertificateRefused as exc:
        print(f"refused: {exc.reason}")
        return EXIT_REFUSED
    sys.stdout.write(cert.to_text())
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.config:
        cfg = ExperimentConfig.from_json(args.config)
        if args.out:
            cfg.out = args.out
    else:
        alphas = _csv_list(args.alphas) if args.alphas else ([args.alpha] if args.alpha else [])
        ps = [float(x) for x in _csv_list(args.p)] if args.p else []
        cfg = ExperimentConfig(
            n=args.n, alphas=alphas, ps=ps, trials=args.trials, seed=args.seed,
            toggles=set(args.toggle or []), model=args.model,
            eps=args.eps, m=args.m, r=args.r, out=args.out, workers=args.workers)
    records = run_sweep(cfg)
    if cfg.out is None:
        sys.stdout.write(dumps_csv(records))
    if args.summary:
        sys.stderr.write(summary_table(summarize(records)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    X = read_cx2(args.file)
    if isinstance(X, CellComplex2):
        raise ConfigError("oracle needs a simplicial complex")
    bad = 0
    for w in args.w or [0, 3]:
        if w > X.n:
            print(f"w={w}: skipped (only {X.n} vertices)")
            continue
        a, b = density_flow(X, w), density_brute(X, w)
        ok = a.value == b.value
        bad += not ok
        print(f"w={w}: flow {a.value_num}/{a.value_den} brute {b.value_num}/{b.value_den} "
              f"{'agree' if ok else 'MISMATCH'}")
    return EXIT_OK if not bad else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cliquetop", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="sample K(n,p) or K4(n,p) and write cx2")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float)
    g.add_argument("--alpha", help="p = n^(-alpha)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--model", choices=["knp", "k4np"], default="knp")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="report invariants of a cx2 file")
    a.add_argument("file")
    a.add_argument("--roots", type=int, default=0, help="density roots 1..w")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("certify", help="try to certify nontrivial pi_1")
    c.add_argument("file")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("sweep", help="Monte Carlo sweep, CSV output")
    s.add_argument("--config", help="JSON file with ExperimentConfig fields")
    s.add_argument("--n", type=int)
    s.add_argument("--alphas", help="comma-separated exponents")
    s.add_argument("--alpha")
    s.add_argument("--p", help="comma-separated raw p values instead of alphas")
    s.add_argument("--trials", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--model", choices=["knp", "k4np"], default="knp")
    s.add_argument("--toggle", action="append", choices=TOGGLES)
    s.add_argument("--eps", default="7/20")
    s.add_argument("--m", type=int, default=8)
    s.add_argument("--r", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--summary", action="store_true", help="print per-alpha summary to stderr")
    s.set_defaults(func=cmd_sweep)

    o = sub.add_parser("oracle", help="cross-check flow density against brute force")
    o.add_argument("file")
    o.add_argument("--w", type=int, action="append", help="root count (repeatable; default 0 and 3)")
    o.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.command == "sweep" and not args.config and args.n is None:
        print("error: sweep needs --n or --config", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"error: guard '{exc.guard}' exceeded ({exc.got} > {exc.limit})", file=sys.stderr)
    except (Cx2FormatError, ConfigError, PreconditionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR
