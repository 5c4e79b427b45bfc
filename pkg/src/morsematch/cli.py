"""Command line front end.

Subcommands: stats, match, validate, gen, bench.  Reports print as
aligned text or, with --json, as stable JSON (sorted keys; the elapsed_s
field is the only run-dependent value and --no-timing drops it).

Exit codes: 0 success, 2 validation failure, 3 parse error, 4 oracle
budget exhausted.  The oracle budget comes from --budget or the
MORSE_ORACLE_BUDGET environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .complexes import (
    SimplicialComplex,
    betti_gf2,
    euler_characteristic,
    is_connected,
)
from .fileio import (
    ParseError,
    parse_matching,
    read_complex,
    serialize_complex,
    serialize_matching,
)
from .frontier import frontier_edges_matching
from .generators import (
    dunce_hat,
    full_simplex,
    random_complex,
    rp2,
    simplex_boundary,
    wedge,
)
from .hasse import hasse, max_cardinality_matching
from .heuristics import coreduction_matching, reduction_matching
from .morse import (
    canonicalize_single_critical_vertex,
    certify,
    critical_profile,
)
from .oracle import optimal_morse_matching

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4

HEURISTICS = {
    "frontier": lambda K: frontier_edges_matching(K).morse,
    "coreduction": coreduction_matching,
    "reduction": reduction_matching,
}


def _oracle_budget(args) -> int | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("MORSE_ORACLE_BUDGET")
    return int(env) if env else None


def _run_algo(K: SimplicialComplex, algo: str, budget: int | None):
    """Returns (matching, oracle_extras or None)."""
    if algo == "oracle":
        res = optimal_morse_matching(K, budget=budget)
        extras = {
            "optimal": res.optimal,
            "nodes": res.nodes,
            "pair_upper_bound": res.pair_upper_bound,
        }
        return res.matching, extras
    return HEURISTICS[algo](K), None


def _ratio(num: int, den: int) -> float:
    return 1.0 if den == 0 else round(num / den, 6)


def _match_report(K: SimplicialComplex, algo: str, mm, extras) -> dict:
    prof = critical_profile(K, mm)
    if prof.total + 2 * len(mm.pairs) != K.n:
        raise RuntimeError("report inconsistent: criticals + matched != n")
    max_m = len(max_cardinality_matching(hasse(K)))
    rep = {
        "algorithm": algo,
        "n": K.n,
        "dim": K.dim,
        "matched_pairs": len(mm.pairs),
        "matched_simplices": 2 * len(mm.pairs),
        "critical_counts": list(prof.counts),
        "critical_total": prof.total,
        "euler": euler_characteristic(K),
        "betti": list(betti_gf2(K)),
        "acyclic": mm.acyclic,
        "max_matching": max_m,
        "ratio_vs_max_matching": _ratio(len(mm.pairs), max_m),
    }
    if extras is not None:
        rep.update(extras)
    return rep


def _emit(payload: dict, args) -> None:
    if not args.no_timing:
        payload["elapsed_s"] = round(time.perf_counter() - args._t0, 6)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, list) and val and isinstance(val[0], dict):
            continue
        if isinstance(val, dict):
            val = json.dumps(val, sort_keys=True)
        print(f"{key}: {val}")


def cmd_stats(args) -> int:
    K = read_complex(args.input)
    payload = {
        "input": args.input,
        "n": K.n,
        "dim": K.dim,
        "counts": [len(level) for level in K.by_dim],
        "maximal": len(K.facets()),
        "euler": euler_characteristic(K),
        "betti": list(betti_gf2(K)),
        "connected": is_connected(K),
    }
    _emit(payload, args)
    return EXIT_OK


def cmd_match(args) -> int:
    K = read_complex(args.input)
    mm, extras = _run_algo(K, args.algo, _oracle_budget(args))
    if args.canonicalize is not None:
        mm = canonicalize_single_critical_vertex(K, mm, args.canonicalize)
    payload = _match_report(K, args.algo, mm, extras)
    payload["input"] = args.input
    payload["config"] = {
        "algo": args.algo,
        "seed": args.seed,
        "canonicalize": args.canonicalize,
        "budget": _oracle_budget(args),
    }
    if args.out == "-":
        sys.stdout.write(serialize_matching(mm.pairs))
    elif args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize_matching(mm.pairs))
        payload["matching_file"] = args.out
    _emit(payload, args)
    if extras is not None and not extras["optimal"]:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_validate(args) -> int:
    K = read_complex(args.input)
    with open(args.matching, encoding="utf-8") as fh:
        pairs = parse_matching(fh.read())
    problems = []
    used = set()
    for i, (s, t) in enumerate(pairs, start=1):
        if s not in K:
            problems.append(f"pair {i}: unknown simplex {' '.join(map(str, s))}")
        if t not in K:
            problems.append(f"pair {i}: unknown simplex {' '.join(map(str, t))}")
        if s in K and t in K and not (len(t) == len(s) + 1 and set(s) < set(t)):
            problems.append(f"pair {i}: not a covering pair")
        for x in (s, t):
            if x in used:
                problems.append(f"pair {i}: simplex {' '.join(map(str, x))} matched twice")
            used.add(x)
    payload = {
        "input": args.input,
        "matching": args.matching,
        "pairs": len(pairs),
        "problems": problems,
    }
    if problems:
        payload.update({"acyclic": None, "valid": False})
        _emit(payload, args)
        return EXIT_INVALID
    mm = certify(K, pairs)
    payload["acyclic"] = mm.acyclic
    payload["valid"] = mm.acyclic
    if not mm.acyclic:
        payload["witness_cycle"] = [list(s) for s in mm.witness]
    else:
        prof = critical_profile(K, mm)
        payload["critical_counts"] = list(prof.counts)
        payload["critical_total"] = prof.total
    _emit(payload, args)
    return EXIT_OK if mm.acyclic else EXIT_INVALID


def _generate(args) -> SimplicialComplex:
    name = args.name
    if name == "boundary":
        return simplex_boundary(args.n)[0]
    if name == "full":
        return full_simplex(args.n)
    if name == "rp2":
        return rp2()
    if name == "dunce":
        return dunce_hat()
    if name == "wedge":
        base = {"dunce": dunce_hat, "rp2": rp2}[args.base]()
        return wedge(base, min(base.vertices), args.copies)
    if name == "random":
        return random_complex(
            seed=args.seed or 0,
            dim=args.dim,
            n_vertices=args.vertices,
            n_facets=args.facets,
            connected=args.connected,
        )
    raise ValueError(f"unknown generator {name}")


def cmd_gen(args) -> int:
    K = _generate(args)
    params = {
        "boundary": f" --n {args.n}",
        "full": f" --n {args.n}",
        "wedge": f" --base {args.base} --copies {args.copies}",
        "random": (
            f" --seed {args.seed or 0} --dim {args.dim}"
            f" --vertices {args.vertices} --facets {args.facets}"
            + (" --connected" if args.connected else "")
        ),
    }.get(args.name, "")
    header = f"# morse gen {args.name}{params}\n"
    text = header + serialize_complex(K)
    if args.out == "-" or not args.out:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in HEURISTICS and a != "oracle":
            raise ValueError(f"unknown algorithm {a}")
    names = sorted(
        f for f in os.listdir(args.corpus)
        if not f.startswith(".") and os.path.isfile(os.path.join(args.corpus, f))
    )
    if not names:
        raise ParseError(f"no complex files in {args.corpus}")
    budget = _oracle_budget(args)
    rows = []
    exhausted = False
    for name in names:
        K = read_complex(os.path.join(args.corpus, name))
        for algo in algos:
            mm, extras = _run_algo(K, algo, budget)
            row = _match_report(K, algo, mm, extras)
            row["complex"] = name
            rows.append(row)
            if extras is not None and not extras["optimal"]:
                exhausted = True
    agg = {}
    for algo in algos:
        rs = [r for r in rows if r["algorithm"] == algo]
        agg[algo] = {
            "mean_matched_pairs": round(sum(r["matched_pairs"] for r in rs) / len(rs), 6),
            "mean_critical_total": round(sum(r["critical_total"] for r in rs) / len(rs), 6),
            "mean_ratio_vs_max_matching": round(
                sum(r["ratio_vs_max_matching"] for r in rs) / len(rs), 6
            ),
        }
    payload = {"corpus": args.corpus, "rows": rows, "aggregates": agg}
    if args.json:
        _emit(payload, args)
    else:
        head = f"{'complex':<24} {'algorithm':<12} {'n':>5} {'|M|':>5} {'crit':>5}  profile"
        print(head)
        print("-" * len(head))
        for r in rows:
            prof = ",".join(str(c) for c in r["critical_counts"])
            print(
                f"{r['complex']:<24} {r['algorithm']:<12} {r['n']:>5} "
                f"{r['matched_pairs']:>5} {r['critical_total']:>5}  {prof}"
            )
        for algo, a in agg.items():
            print(
                f"mean[{algo}]: pairs={a['mean_matched_pairs']} "
                f"criticals={a['mean_critical_total']} "
                f"ratio={a['mean_ratio_vs_max_matching']}"
            )
    return EXIT_BUDGET if exhausted else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="morse",
        description="Discrete Morse matchings on simplicial complexes.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.add_argument(
            "--no-timing", action="store_true",
            help="omit elapsed_s so identical runs are byte-identical",
        )

    sp = sub.add_parser("stats", help="counts, Euler characteristic, Betti numbers")
    sp.add_argument("input")
    common(sp)
    sp.set_defaults(fn=cmd_stats)

    sp = sub.add_parser("match", help="compute a Morse matching")
    sp.add_argument("input")
    sp.add_argument(
        "--algo", default="frontier",
        choices=["frontier", "coreduction", "reduction", "oracle"],
    )
    sp.add_argument("--seed", type=int, default=None, help="echoed into the report")
    sp.add_argument(
        "--canonicalize", type=int, default=None, metavar="P",
        help="rebuild vertex pairs so vertex P is the only critical vertex",
    )
    sp.add_argument("--budget", type=int, default=None, help="oracle node budget")
    sp.add_argument("--out", default=None, help="write the matching here ('-' = stdout)")
    common(sp)
    sp.set_defaults(fn=cmd_match)

    sp = sub.add_parser("validate", help="check a matching file against a complex")
    sp.add_argument("input")
    sp.add_argument("matching")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("gen", help="write a generated complex")
    sp.add_argument(
        "name", choices=["boundary", "full", "rp2", "dunce", "wedge", "random"],
    )
    sp.add_argument("--n", type=int, default=3, help="dimension for boundary/full")
    sp.add_argument("--base", default="dunce", choices=["dunce", "rp2"])
    sp.add_argument("--copies", type=int, default=2, help="copies in a wedge")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--dim", type=int, default=2)
    sp.add_argument("--vertices", type=int, default=10)
    sp.add_argument("--facets", type=int, default=8)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=cmd_gen, json=False, no_timing=True)

    sp = sub.add_parser("bench", help="compare algorithms over a corpus directory")
    sp.add_argument("corpus")
    sp.add_argument("--algos", default="frontier,coreduction,reduction")
    sp.add_argument("--budget", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args._t0 = time.perf_counter()
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
