"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical violation (invalid decomposition,
multicolored triangle, failed inequality, oracle disagreement), 2 usage or
parse errors. Reports are ``key value`` lines; ``--json`` prints the same
content as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import analyzer, certificate, constructions, solver, verifier
from .errors import BudgetExhausted, InvalidCertificate, MctError, PackingNotFound, ParseError

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return " ".join(_text_value(x) for x in v) if v else "none"
    if isinstance(v, dict):
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items()) if v else "none"
    return str(v)


def _json_value(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    return v


def emit(pairs: list, as_json: bool, out=None, multi: tuple = ()):
    """Print report pairs. Keys named in ``multi`` may repeat; in JSON they
    always become lists."""
    out = out or sys.stdout
    if as_json:
        obj: dict = {k: [] for k in multi}
        for k, v in pairs:
            if k in multi:
                obj[k].append(_json_value(v))
            else:
                obj[k] = _json_value(v)
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        for k, v in pairs:
            out.write(f"{k} {_text_value(v)}\n")


def _read_cert(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return certificate.parse(text)


def _fraction(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from exc


def _verify_pairs(rep: verifier.VerifyReport) -> list:
    pairs = [("valid", rep.valid), ("n", rep.n), ("k", rep.k)]
    if rep.error:
        pairs.append(("error", rep.error))
        return pairs
    pairs += [
        ("edges", 5 * rep.k),
        ("multicolored_triangle", list(rep.multicolored_triangle) if rep.multicolored_triangle else None),
        ("lemma22_violations", rep.lemma22_violations),
        ("kn_violations", rep.kn_violations),
        ("double_count_ok", rep.double_count_ok),
        ("clean", rep.clean),
    ]
    return pairs


def cmd_construct(args) -> int:
    kind = args.type
    partition = None
    if kind == "perturbed":
        if args.n is None:
            raise UsageError("--n is required for perturbed")
        det = constructions.perturbed_construction_detail(args.n)
        G = det.graph
        partition = analyzer.BlowupPartition.from_mapping(G.n, det.partition)
    elif kind == "blowup":
        if args.parts:
            a = tuple(int(x) for x in args.parts.split(","))
        elif args.n is not None:
            a = constructions.balanced_parts(args.n)
        else:
            raise UsageError("blowup needs --n or --parts")
        if len(a) != 5 or min(a) < 1:
            raise UsageError("blowup needs five part sizes, each at least 1")
        G = constructions.blowup_packing(a, node_budget=args.budget)
        partition = analyzer.BlowupPartition.from_mapping(G.n, constructions.natural_partition(a))
    else:
        if args.blades is not None:
            m = args.blades
        elif args.n is not None and args.n % 4 == 1 and args.n >= 5:
            m = (args.n - 1) // 4
        else:
            raise UsageError("k5star needs --blades M or --n 4M+1")
        G = constructions.k5_star(m)
    if args.no_partition:
        partition = None
    text = certificate.render_dot(G) if args.dot else certificate.render(G, partition)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        emit([("type", kind), ("n", G.n), ("k", G.k), ("written", args.output)], args.json)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        G, _ = _read_cert(args.file)
    except InvalidCertificate as exc:
        emit([("valid", False), ("error", str(exc))], args.json)
        return EXIT_VIOLATION
    rep = verifier.verify(G)
    emit(_verify_pairs(rep), args.json)
    return EXIT_OK if rep.clean else EXIT_VIOLATION


def cmd_solve(args) -> int:
    if args.oracle and args.n > 7:
        raise UsageError("--oracle supports n <= 7")
    opts = solver.SearchOptions(node_budget=args.budget, parallel_width=args.jobs,
                                symmetry_breaking=not args.no_symmetry)
    t0 = time.perf_counter()
    try:
        res = solver.solve_exact(args.n, opts)
    except BudgetExhausted as exc:
        res = exc.result
    pairs = [
        ("n", res.n),
        ("k_star", res.k_star),
        ("complete", res.complete),
        ("source", "computed"),
        ("lower_bound_t", res.lower_bound_used),
        ("upper_bound_edges", res.upper_bound),
        ("nodes_explored", res.nodes_explored),
        ("blocks", res.blocks),
    ]
    code = EXIT_OK
    if args.oracle:
        ok_k = solver.brute_force_oracle(res.n)
        agree = ok_k == res.k_star
        pairs += [("oracle_k", ok_k), ("oracle_agree", agree)]
        if not agree:
            code = EXIT_VIOLATION
    rep = verifier.verify(res.witness)
    pairs.append(("witness_clean", rep.clean))
    if not rep.clean:
        code = EXIT_VIOLATION
    for cyc in res.witness.classes:
        pairs.append(("cycle", list(cyc)))
    if args.timing:
        pairs.append(("runtime_s", f"{time.perf_counter() - t0:.3f}"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(certificate.render(res.witness, comments=(f"witness for n={res.n}, k={res.k_star}",)))
    emit(pairs, args.json, multi=("cycle",))
    return code


def cmd_analyze(args) -> int:
    try:
        G, partition = _read_cert(args.file)
    except InvalidCertificate as exc:
        emit([("valid", False), ("error", str(exc))], args.json)
        return EXIT_VIOLATION
    cfg = analyzer.AnalyzerConfig(gamma=args.gamma)
    source = "file" if partition is not None else "none"
    if args.find_partition:
        partition = analyzer.best_blowup_partition(G, budget=args.budget, seed=args.seed)
        source = "search"
    if partition is not None:
        rep = analyzer.structure_report(G, partition, cfg)
    else:
        rep = analyzer.analyze_basic(G, cfg)
    pairs = [
        ("n", rep.n), ("k", rep.k), ("edges", 5 * rep.k), ("gamma", cfg.gamma),
        ("s", rep.s), ("sum_s_sq", rep.sum_s_sq),
        ("Vg_size", len(rep.Vg)), ("Vgamma_size", len(rep.Vgamma)),
        ("vertex_split_bound", rep.vertex_split_bound),
        ("triangles", rep.census.triangle_count),
        ("multicolored_triangles", rep.census.multicolored_count),
        ("partition_source", source),
    ]
    if partition is not None:
        pairs += [
            ("part_sizes", list(rep.part_sizes)),
            ("structured_edge_counts", rep.structured_edge_counts),
            ("M_size", rep.M_size),
            ("M_edges", [f"{u}-{v}" for u, v in rep.M]),
            ("L_size", len(rep.L_edges)),
            ("L_is_matching", rep.L_is_matching),
            ("g_ab", {f"{a}-{b}": g for (a, b), g in rep.g_ab.items()}),
        ]
        for c in rep.checks:
            pairs.append((f"check_{c.name}", {"value": c.value, "bound": c.bound, "holds": c.holds}))
        for name, val in rep.implied.items():
            pairs.append((f"implied_{name}", val))
        if args.write_partition:
            with open(args.write_partition, "w", encoding="utf-8") as fh:
                fh.write(certificate.render(G, partition))
    emit(pairs, args.json)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.start < 5 or args.stop < args.start:
        raise UsageError("need 5 <= --from <= --to")
    rows = analyzer.bounds_table(args.start, args.stop, args.delta)
    cols = ["n", "q", "r", "t", "thm11_upper", "thm24_upper", "lower_le_thm11",
            "lower_le_thm24", "quad_lower_ok"]
    pairs: list = [("delta", args.delta), ("columns", cols)]
    ok = True
    for r in rows:
        pairs.append(("row", [r.n, r.q, r.r, r.t, r.thm11, r.thm24, r.lower_le_thm11,
                              r.lower_le_thm24, r.quad_lower_ok]))
        ok = ok and r.lower_le_thm11 and r.quad_lower_ok
    emit(pairs, args.json, multi=("row",))
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcturan", description="Workbench for ex_{C5}(C3, n).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="write a lower-bound construction")
    c.add_argument("--type", required=True, choices=["blowup", "perturbed", "k5star"])
    c.add_argument("--n", type=int)
    c.add_argument("--parts", help="blow-up part sizes a1,a2,a3,a4,a5")
    c.add_argument("--blades", type=int, help="number of K5 blades for k5star")
    c.add_argument("--budget", type=int, default=200_000, help="node budget for packing search")
    c.add_argument("--no-partition", action="store_true", help="omit part lines")
    c.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead")
    c.add_argument("-o", "--output")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a certificate file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact value for small n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="cross-check with brute force (n <= 7)")
    s.add_argument("--budget", type=int, default=10_000_000)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-symmetry", action="store_true")
    s.add_argument("--timing", action="store_true", help="also print wall time")
    s.add_argument("-o", "--output", help="write the witness certificate here")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    a = sub.add_parser("analyze", help="structural quantities of a certificate")
    a.add_argument("file")
    a.add_argument("--gamma", type=_fraction, default=Fraction(1, 16))
    a.add_argument("--find-partition", action="store_true")
    a.add_argument("--budget", type=int, default=5 ** 10)
    a.add_argument("--seed", type=int, default=0)
    a.add_argument("--write-partition", help="write the certificate with its partition here")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", help="table of t(n) and the upper-bound formulas")
    b.add_argument("--from", dest="start", type=int, required=True)
    b.add_argument("--to", dest="stop", type=int, required=True)
    b.add_argument("--delta", type=_fraction, default=Fraction(0))
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PackingNotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except MctError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def cli(argv: Optional[list] = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
