"""Command-line interface: gen, rho, index, closed-form, verify, classify.

All numeric output serializes floats at 17 significant digits so results
are reproducible across runs; `--json` switches every subcommand to
machine-readable records (schema in schemas/cli-output.schema.json).
Exit codes: 0 success, 1 verification found a violation, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms as cf
from . import generators as gen
from . import verify as ver
from .hypergraph import classify, parse_uhg, format_uhg
from .spectral import SolveOptions, spectral_radius
from .tensor import Weighting, abc_index

WEIGHTINGS = {"abc": Weighting.ABC, "adj": Weighting.ADJACENCY, "randic": Weighting.RANDIC}


def _f(x: float) -> float:
    """Round-trip float through its 17-significant-digit form."""
    return float(format(x, ".17g"))


def _parse_comp(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.replace(",", " ").split())


def build_family(args) -> "gen.UniformHypergraph":
    name = args.family
    if name == "hyperstar":
        return gen.hyperstar(args.m, args.k)
    if name == "hyperpath":
        return gen.hyperpath(args.m, args.k)
    if name == "hypercycle":
        return gen.hypercycle(args.g, args.k)
    if name == "complete":
        return gen.complete(args.n, args.k)
    if name == "double-star":
        return gen.double_star(args.m, args.a[0] if args.a else 1)
    if name == "power":
        base = {
            "star": lambda: gen.hyperstar(args.m, 2),
            "path": lambda: gen.hyperpath(args.m, 2),
            "cycle": lambda: gen.cycle_graph(args.g),
            "double-star": lambda: gen.double_star(args.m, args.a[0] if args.a else 1),
            "unicyclic-graph": lambda: gen.unicyclic_graph(args.m, args.g),
        }
        if args.of not in base:
            raise ValueError(f"power base must be one of {sorted(base)}")
        return gen.power(base[args.of](), args.k)
    if name == "s-comp":
        return gen.s_composition(args.m, args.k, args.a)
    if name == "unicyclic":
        return gen.unicyclic_family(args.m, args.k, args.g, args.a)
    if name == "t-family":
        return gen.t_family(args.m, args.idx)
    if name == "example-h":
        return gen.example_h(args.idx)
    raise ValueError(f"unknown family {name!r}")


def load_graph(args) -> "gen.UniformHypergraph":
    if getattr(args, "family", None):
        return build_family(args)
    if getattr(args, "file", None):
        if args.file == "-":
            return parse_uhg(sys.stdin.read())
        with open(args.file, "r", encoding="utf-8") as fh:
            return parse_uhg(fh.read())
    raise ValueError("provide an input file or --family")


def _add_family_flags(p: argparse.ArgumentParser, with_file: bool = True):
    if with_file:
        p.add_argument("file", nargs="?", help="UHG v1 file ('-' for stdin)")
    p.add_argument("--family", choices=[
        "hyperstar", "hyperpath", "hypercycle", "complete", "double-star",
        "power", "s-comp", "unicyclic", "t-family", "example-h",
    ])
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--idx", type=int)
    p.add_argument("--a", type=_parse_comp, help="composition, e.g. '2,1,1'")
    p.add_argument("--of", help="base family for --family power")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="abctensor", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named family as UHG v1 text")
    _add_family_flags(p, with_file=False)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("rho", help="spectral radius of a weighted tensor")
    _add_family_flags(p)
    p.add_argument("--weighting", choices=sorted(WEIGHTINGS), default="abc")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iters", type=int, default=200_000)
    p.add_argument("--shift", type=float, default=1.0)
    p.add_argument("--seed", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("index", help="abc index of a hypergraph")
    _add_family_flags(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="structural classification")
    _add_family_flags(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("closed-form", help="evaluate a named closed form")
    p.add_argument("name", choices=sorted(cf.CLOSED_FORM_NAMES))
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--idx", type=int)
    p.add_argument("--check", action="store_true",
                   help="also compare against the power-iteration oracle")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the numeric verification suite")
    p.add_argument("target", help="'all' or a check name prefix")
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--json", action="store_true")
    return ap


def _emit(record: dict, as_json: bool):
    if as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        for key, val in record.items():
            print(f"{key}: {val}")


def cmd_gen(args) -> int:
    G = build_family(args)
    if args.json:
        print(json.dumps({"k": G.k, "n": G.n, "m": G.m, "edges": [list(e) for e in G.edges]}))
    else:
        sys.stdout.write(format_uhg(G))
    return 0


def cmd_rho(args) -> int:
    G = load_graph(args)
    opts = SolveOptions(
        tol=args.tol,
        max_iters=args.max_iters,
        shift=args.shift,
        initial="seeded-random" if args.seed is not None else "uniform",
        seed=args.seed,
    )
    est = spectral_radius(G, WEIGHTINGS[args.weighting], opts)
    record = {
        "rho": _f(est.rho),
        "lower": _f(est.lower),
        "upper": _f(est.upper),
        "iters": est.iters,
        "residual": _f(est.residual),
        "weighting": args.weighting,
        "eigenvector": [_f(v) for v in est.eigenvector],
    }
    _emit(record, args.json)
    return 0


def cmd_index(args) -> int:
    G = load_graph(args)
    _emit({"abc_index": _f(abc_index(G))}, args.json)
    return 0


def cmd_classify(args) -> int:
    G = load_graph(args)
    rep = classify(G)
    record = {
        "connected": rep.connected,
        "kind": rep.kind,
        "linear": rep.linear,
        "girth": rep.girth,
        "girth_status": rep.girth_status,
        "power_hypertree": rep.power_hypertree,
        "n": G.n,
        "m": G.m,
        "k": G.k,
    }
    _emit(record, args.json)
    return 0


def cmd_closed_form(args) -> int:
    params = {key: getattr(args, key) for key in ("m", "k", "n", "idx") if getattr(args, key) is not None}
    value = cf.closed_form(args.name, **params)
    record = {"name": args.name, "value": _f(value), **params}
    if args.check:
        G = _closed_form_graph(args.name, params)
        w = Weighting.ADJACENCY if args.name == "double-star-2-adj" else Weighting.ABC
        est = spectral_radius(G, w)
        record["oracle"] = _f(est.rho)
        record["agrees"] = abs(est.rho - value) <= 1e-7 * max(1.0, abs(value))
    _emit(record, args.json)
    return 0


def _closed_form_graph(name: str, params: dict):
    m = params.get("m")
    k = params.get("k")
    builders = {
        "hyperstar": lambda: gen.hyperstar(m, k),
        "double-star-1": lambda: gen.power(gen.double_star(m, 1), k),
        "double-star-2-adj": lambda: gen.power(gen.double_star(m, 2), k),
        "u2": lambda: gen.unicyclic_family(m, k, 2, (m - 2,) + (0,) * (k - 1)),
        "u3": lambda: gen.unicyclic_family(m, k, 3, (m - 3,) + (0,) * (k - 1)),
        "s311": lambda: gen.s_composition(m, k, (m - 3, 1, 1) + (0,) * (k - 3)),
        "t-family": lambda: gen.t_family(m, params["idx"]),
        "s4-1111": lambda: gen.s_composition(m, 4, (m - 4, 1, 1, 1)),
        "hyperpath": lambda: gen.hyperpath(m, k),
        "complete-bound": lambda: gen.complete(params["n"], k),
    }
    return builders[name]()


def cmd_verify(args) -> int:
    results = ver.default_suite(m=args.m, k=args.k, g=args.g)
    if args.target != "all":
        results = [r for r in results if r.name.startswith(args.target)]
        if not results:
            raise ValueError(f"no check matches {args.target!r}")
    violated = [r for r in results if not r.ok]
    if args.json:
        for r in results:
            print(json.dumps({
                "name": r.name, "status": r.status, "lhs": _f(r.lhs),
                "rhs": _f(r.rhs), "margin": _f(r.margin), "detail": r.detail,
            }, sort_keys=True))
    else:
        for r in results:
            print(f"{r.status:18s} {r.name}  lhs={r.lhs:.12g} rhs={r.rhs:.12g}")
        print(f"{len(results)} checks, {len(violated)} violated")
    return 1 if violated else 0


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    handlers = {
        "gen": cmd_gen,
        "rho": cmd_rho,
        "index": cmd_index,
        "classify": cmd_classify,
        "closed-form": cmd_closed_form,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, KeyError, OSError) as exc:
        if getattr(args, "json", False):
            sys.stderr.write(json.dumps({"error": str(exc), "exit": 2}) + "\n")
        else:
            sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
