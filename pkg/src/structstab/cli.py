"""Command line interface.

    structstab sample    --model a --n 50 --p 0.1 --q 0.5 --seed 1
    structstab check     graph.txt [--digraph]
    structstab thin      graph.txt
    structstab sweep     --model a --n 1000 --c -1,0,1 --mu 0.5 --loop constant --trials 500 --seed 1
    structstab asymptote --model a --regime critical:0 --q constant:0.5
    structstab oracle    graph.txt --restarts 200 --seed 1

Exit status: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

import numpy as np

from .asymptotics import Constant, Linear, Scaled, asymptote_for, parse_regime
from .graphs import Digraph, Graph, pattern_of
from .io import parse_graph_file, serialize_graph, sweep_csv
from .models import ModelAParams, ModelBParams, sample_model_a, sample_model_b
from .montecarlo import sweep
from .oracle import find_hurwitz, is_hurwitz, structural_det_zero
from .stability import check_digraph, check_symmetric_stability, classify_thin


class DomainError(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ",".join(str(v) for v in s) + "}"


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _read_graph(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(str(exc)) from None
    return parse_graph_file(text)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_sample(args) -> None:
    if args.model == "a":
        if args.p is None or args.q is None:
            raise DomainError("model a needs --p and --q")
        g = sample_model_a(ModelAParams(args.n, args.p, args.q, args.seed), args.trial)
    else:
        if args.N is None or args.M is None:
            raise DomainError("model b needs --N and --M")
        g = sample_model_b(ModelBParams(args.n, args.N, args.M, args.seed), args.trial)
    _emit(args, f"# model {args.model} seed {args.seed} trial {args.trial}\n" + serialize_graph(g))


def _cycles(dec) -> str:
    return " ".join("(" + ",".join(map(str, c)) + ")" for c in dec.cycles)


def cmd_check(args) -> None:
    g = _read_graph(args.graph)
    out = [f"n={g.n}"]
    if args.digraph or isinstance(g, Digraph):
        d = g.to_digraph() if isinstance(g, Graph) else g
        v = check_digraph(d)
        out += [f"L={int(v.L_flag)}", f"H={int(v.H_flag)}"]
        cert = v.certificate
        if "chain" in cert:
            out += ["chain=" + " < ".join(_fmt_set(dec.covered) for dec in cert["chain"])]
            out += [f"D{k}={_cycles(dec)}" for k, dec in enumerate(cert["chain"], 1)]
        if "failing_scc" in cert:
            out.append(f"failing_scc={_fmt_set(cert['failing_scc'])}")
        if "missing_k" in cert:
            out.append(f"missing_k={cert['missing_k']}")
    else:
        v = check_symmetric_stability(g)
        out += [f"L={int(v.L_flag)}", f"H={int(v.H_flag)}"]
        cert = v.certificate
        if "decomposition" in cert:
            out.append(f"decomposition={_cycles(cert['decomposition'])}")
        if "loop_witness" in cert:
            out.append("loops=" + " ".join(f"{_fmt_set(c)}:{w}"
                                          for c, w in cert["loop_witness"].items()))
        if "loopless_component" in cert:
            out.append(f"loopless_component={_fmt_set(cert['loopless_component'])}")
        if cert.get("hall") is not None:
            h = cert["hall"]
            out.append(f"hall_I={_fmt_set(h.I)}")
            out.append(f"hall_N={_fmt_set(h.neighbors)}")
    if v.reason:
        out.append(f"reason={v.reason}")
    out.append(v.status.value)
    _emit(args, "\n".join(out) + "\n")


def cmd_thin(args) -> None:
    g = _read_graph(args.graph)
    if isinstance(g, Digraph):
        if not g.is_symmetric():
            raise DomainError("thin classification needs a symmetric graph")
        g = g.to_graph()
    t = classify_thin(g)
    if t.k is None:
        _emit(args, "NOT_THIN\n")
    else:
        _emit(args, f"F_{t.k}, I={_fmt_set(t.witness.I)}, N(I)={_fmt_set(t.witness.neighbors)}\n")


def cmd_sweep(args) -> None:
    if args.model == "a":
        if (args.c is None) == (args.p is None):
            raise DomainError("model a sweep needs exactly one of --c or --p")
        edge_kind, edges = ("c", args.c) if args.c is not None else ("p", args.p)
        if args.mu is not None:
            loop_kind, loops = args.loop or "constant", args.mu
        elif args.q is not None:
            loop_kind, loops = "q", args.q
        else:
            raise DomainError("model a sweep needs --mu or --q")
    else:
        if (args.c is None) == (args.N is None):
            raise DomainError("model b sweep needs exactly one of --c or --N")
        edge_kind, edges = ("c", args.c) if args.c is not None else ("N", args.N)
        if args.mu is not None:
            loop_kind, loops = args.loop or "linear", args.mu
        elif args.M is not None:
            loop_kind, loops = "M", args.M
        else:
            raise DomainError("model b sweep needs --mu or --M")
    rows = sweep(args.model, args.n, args.trials, args.seed, edges, loops,
                 edge_kind=edge_kind, loop_kind=loop_kind, workers=args.threads)
    _emit(args, sweep_csv(rows))


def cmd_asymptote(args) -> None:
    edge = parse_regime(args.regime)
    loop_text = args.q if args.model == "a" else args.M
    if loop_text is None:
        raise DomainError("--q (model a) or --M (model b) regime required")
    loop = parse_regime(loop_text)
    allowed = (Scaled, Constant) if args.model == "a" else (Constant, Linear)
    if not isinstance(loop, allowed):
        raise DomainError(f"loop regime {loop_text!r} not valid for model {args.model}")
    _emit(args, f"{asymptote_for(args.model, edge, loop):.6g}\n")


def cmd_oracle(args) -> None:
    g = _read_graph(args.graph)
    z = pattern_of(g)
    out = [f"n={g.n}", f"det_zero={int(structural_det_zero(z, seed=args.seed))}"]
    a = find_hurwitz(z, restarts=args.restarts, seed=args.seed)
    if a is None:
        out.append("NOT_FOUND")
    else:
        assert is_hurwitz(a)
        for row in a:
            out.append("row=" + " ".join(f"{x:.6g}" for x in row))
        eig = np.linalg.eigvals(a)
        out.append(f"spectral_abscissa={max(eig.real):.6g}")
        out.append("HURWITZ_FOUND")
    _emit(args, "\n".join(out) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="structstab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def model_flags(p, need_seed=True):
        p.add_argument("--model", choices=["a", "b"], required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--seed", type=int, required=need_seed)
        p.add_argument("--out")

    p = sub.add_parser("sample", help="draw one graph from model A or B")
    model_flags(p)
    p.add_argument("--p", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--N", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--trial", type=int, default=0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("check", help="stability verdict with certificate")
    p.add_argument("graph")
    p.add_argument("--digraph", action="store_true", help="use the general digraph conditions")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("thin", help="F_k class and Hall certificate")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_thin)

    p = sub.add_parser("sweep", help="Monte Carlo grid to CSV")
    model_flags(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--c", type=_floats)
    p.add_argument("--p", type=_floats)
    p.add_argument("--N", type=_floats)
    p.add_argument("--mu", type=_floats)
    p.add_argument("--q", type=_floats)
    p.add_argument("--M", type=_floats)
    p.add_argument("--loop", choices=["scaled", "constant", "linear"])
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("asymptote", help="closed-form limit")
    p.add_argument("--model", choices=["a", "b"], required=True)
    p.add_argument("--regime", required=True, help="sparse | dense | critical:<c>")
    p.add_argument("--q", help="model a: scaled:<mu> | constant:<mu>")
    p.add_argument("--M", help="model b: constant:<mu> | linear:<mu>")
    p.add_argument("--out")
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("oracle", help="numerical Hurwitz search on a pattern")
    p.add_argument("graph")
    p.add_argument("--restarts", type=int, default=200)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_oracle)
    return ap


_NEGATIVE_LIST = re.compile(r"-[0-9.][0-9.,eE+-]*")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn '--c -1,0,1' into '--c=-1,0,1'; argparse reads '-1,0,1' as a flag."""
    out: list[str] = []
    for tok in argv:
        if (out and _NEGATIVE_LIST.fullmatch(tok) and out[-1].startswith("--")
                and "=" not in out[-1]):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


run_command = main

if __name__ == "__main__":
    sys.exit(main())
