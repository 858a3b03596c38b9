"""Command-line front end.

Exit codes: 0 when everything requested passes, 1 on operational errors
(bad input, bad flags, unmet preconditions), 2 when a checked claim fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from .complement import NotRealizableError, lovasz_transform
from .energy import DEFAULT_ROOT_TOL, QuadratureError, matching_energy
from .enumeration import MAX_ORDER, free_trees, parse_predicate
from .families import Family, FamilyError, family
from .graph import (
    Graph,
    GraphError,
    complement,
    edge_independence_number,
    encode_graph6,
    is_tree,
    pendant_count,
    parse_graph_text,
)
from .matchpoly import MatchingVector, hosoya_index, matching_counts, matching_polynomial
from .transforms import TransformError, TransformSpec
from .verify import (
    VerificationReport,
    check_transform_instance,
    default_jobs,
    population,
    verify_remark_2,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_4,
    verify_transform_theorems,
)

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2
MIN_TOL = 1e-15
FORMATS = ("json", "tsv", "human")


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are operational errors, not claim violations
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _tol(text: str) -> float:
    value = float(text)
    if not value >= MIN_TOL:
        raise argparse.ArgumentTypeError(f"tolerance {text} is below the floor {MIN_TOL:g}")
    return value


# ---------------------------------------------------------------- output


def _emit_json(doc: dict[str, Any], out) -> None:
    json.dump(doc, out, indent=2, sort_keys=False)
    out.write("\n")


def _emit_rows(rows: list[tuple[str, ...]], fmt: str, out) -> None:
    if fmt == "tsv":
        for row in rows:
            out.write("\t".join(row) + "\n")
        return
    width = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(len(r) for r in rows))]
    for row in rows:
        cells = [c.ljust(width[i]) for i, c in enumerate(row)]
        out.write("  ".join(cells).rstrip() + "\n")


def _counts(v: MatchingVector) -> list[str]:
    return [str(c) for c in v.counts]


# ---------------------------------------------------------------- compute


def _invariants(v: MatchingVector, tol: float) -> dict[str, Any]:
    poly = matching_polynomial(v)
    e = matching_energy(v, tol)
    return {
        "n": v.n,
        "counts": _counts(v),
        "polynomial": [str(c) for c in poly.coeffs],
        "polynomial_text": str(poly),
        "hosoya": str(hosoya_index(v)),
        "energy": {"value": e.value, "error_bound": e.error_bound},
    }


def _read_input(args: argparse.Namespace) -> Graph:
    if args.graph6 is not None:
        return parse_graph_text(args.graph6)
    if args.file is not None:
        return parse_graph_text(Path(args.file).read_text())
    if args.stdin:
        return parse_graph_text(sys.stdin.read())
    if args.n is None:
        raise CliError("--family needs --n")
    return family(args.family, args.n, args.p)


def cmd_compute(args: argparse.Namespace, out) -> int:
    g = _read_input(args)
    v = matching_counts(g)
    doc: dict[str, Any] = {"kind": "compute", "graph6": encode_graph6(g), "edges": g.m}
    doc.update(_invariants(v, args.tol))
    if args.complement:
        tree = is_tree(g)
        co = lovasz_transform(v) if tree else matching_counts(complement(g))
        doc["complement"] = {"method": "lovasz" if tree else "explicit", **_invariants(co, args.tol)}
    if args.format == "json":
        _emit_json(doc, out)
        return EXIT_OK
    rows = [
        ("graph6", doc["graph6"]),
        ("n", str(doc["n"])),
        ("edges", str(doc["edges"])),
        ("counts", " ".join(doc["counts"])),
        ("polynomial", doc["polynomial_text"]),
        ("hosoya", doc["hosoya"]),
        ("energy", f"{doc['energy']['value']:.12f}"),
        ("energy_error", f"{doc['energy']['error_bound']:.3g}"),
    ]
    if args.complement:
        c = doc["complement"]
        rows += [
            ("complement_method", c["method"]),
            ("complement_counts", " ".join(c["counts"])),
            ("complement_polynomial", c["polynomial_text"]),
            ("complement_hosoya", c["hosoya"]),
            ("complement_energy", f"{c['energy']['value']:.12f}"),
            ("complement_energy_error", f"{c['energy']['error_bound']:.3g}"),
        ]
    _emit_rows(rows, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------- family / enumerate


def _tree_entry(t: Graph, annotate: bool) -> dict[str, Any]:
    entry: dict[str, Any] = {"graph6": encode_graph6(t)}
    if annotate:
        entry["nu"] = edge_independence_number(t)
        entry["pendants"] = pendant_count(t)
    return entry


def _tree_lines(entries: list[dict[str, Any]], fmt: str, out) -> None:
    if not entries:
        return
    rows = [tuple(str(e[k]) for k in ("graph6", "nu", "pendants") if k in e) for e in entries]
    if fmt == "tsv" or len(rows[0]) == 1:
        _emit_rows(rows, "tsv", out)
    else:
        _emit_rows(rows, "human", out)


def cmd_family(args: argparse.Namespace, out) -> int:
    t = family(args.name, args.n, args.p)
    entry = _tree_entry(t, True)
    if args.format == "json":
        _emit_json({"kind": "family", "family": args.name, "n": args.n, "p": args.p, **entry}, out)
    else:
        _tree_lines([entry], args.format, out)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    pred = parse_predicate(args.filter) if args.filter else None
    entries = []
    for t in free_trees(args.n):
        if pred is None or pred(t):
            entries.append(_tree_entry(t, args.annotate))
    if args.format == "json":
        doc = {"kind": "enumerate", "n": args.n, "filter": args.filter, "count": len(entries), "trees": entries}
        _emit_json(doc, out)
    else:
        _tree_lines(entries, args.format, out)
    return EXIT_OK


# ---------------------------------------------------------------- transform


def cmd_transform(args: argparse.Namespace, out) -> int:
    text = sys.stdin.read() if args.spec == "-" else Path(args.spec).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"spec is not valid JSON: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    spec = TransformSpec.from_json(raw)
    doc = check_transform_instance(spec)
    ok = not doc["problems"]
    if args.format == "json":
        _emit_json({"kind": "transform", **doc}, out)
    else:
        rows = [
            ("kind", spec.kind.value),
            ("before", doc["before"]),
            ("after", doc["after"]),
            ("isomorphic", str(doc["isomorphic"]).lower()),
            ("relation", doc["relation"]),
            ("witnesses", " ".join(map(str, doc["witnesses"])) or "-"),
            ("identity", "holds" if doc["identity_holds"] else "fails"),
            ("verdict", "pass" if ok else "fail"),
        ]
        rows += [("problem", p) for p in doc["problems"]]
        _emit_rows(rows, args.format, out)
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------- verify


def _n_range(args: argparse.Namespace, lo: int, hi: int) -> list[int]:
    if args.n is not None:
        return [args.n]
    start = args.n_min if args.n_min is not None else lo
    stop = args.n_max if args.n_max is not None else hi
    if start > stop:
        raise CliError(f"--n-min {start} exceeds --n-max {stop}")
    return list(range(start, stop + 1))


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise CliError(f"n={n} outside the supported range 1..{MAX_ORDER}")


def _run_verify(args: argparse.Namespace) -> list[VerificationReport]:
    thm, jobs = args.theorem, args.jobs
    if thm == "transforms":
        return [verify_transform_theorems(args.samples, args.seed)]
    if thm == "remark2":
        return [verify_remark_2(n) for n in _n_range(args, 5, 16)]
    reports = []
    if thm == "thm4":
        ns = _n_range(args, 6, 14)
        if args.n is None:
            ns = [n for n in ns if n % 2 == 0]
    else:
        ns = _n_range(args, 5, 14)
    for n in ns:
        _check_order(n)
        if thm == "thm2" and args.p is not None and args.p > n // 2:
            raise CliError(f"p exceeds floor(n/2) = {n // 2} (got p={args.p}, n={n})")
        if thm == "thm4" and (n < 6 or n % 2):
            raise CliError(f"theorem 4 needs an even n >= 6, got n={n}")
        if thm == "thm1" and n < 4:
            raise CliError(f"theorem 1 needs n >= 5 (n = 4 is reported as degenerate), got n={n}")
        recs = population(n, jobs)
        if thm == "thm1":
            reports.append(verify_theorem_1(n, records=recs))
        elif thm == "thm4":
            reports.append(verify_theorem_4(n, records=recs))
        else:
            ps = [args.p] if args.p is not None else range(1, n // 2 + 1)
            reports.extend(verify_theorem_2(n, p, records=recs) for p in ps)
    return reports


def cmd_verify(args: argparse.Namespace, out) -> int:
    reports = _run_verify(args)
    passed = all(r.passed for r in reports)
    doc = {
        "kind": "verify",
        "theorem": args.theorem,
        "seed": args.seed if args.theorem == "transforms" else None,
        "passed": passed,
        "reports": [r.to_json() for r in reports],
    }
    if args.out:
        with open(args.out, "w") as fh:
            _emit_json(doc, fh)
    if args.format == "json":
        _emit_json(doc, out)
    else:
        rows = [("theorem", "n", "p", "population", "status", "certificates", "seconds")]
        for r in reports:
            rows.append(
                (
                    r.theorem,
                    "-" if r.n is None else str(r.n),
                    "-" if r.p is None else str(r.p),
                    str(r.population),
                    r.status,
                    str(len(r.certificates)),
                    f"{r.elapsed_seconds:.2f}",
                )
            )
        _emit_rows(rows, args.format, out)
        for r in reports:
            for c in r.counterexamples:
                out.write(f"counterexample {r.theorem} n={r.n}: {json.dumps(c, sort_keys=True)}\n")
    return EXIT_OK if passed else EXIT_VIOLATION


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="complement-energy", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, default_format: str = "human") -> None:
        p.add_argument("--format", choices=FORMATS, default=default_format)

    c = sub.add_parser("compute", help="matching counts, polynomial, Hosoya index and matching energy")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="inline graph6 string")
    src.add_argument("--file", help="file holding one graph6 line or an edge list")
    src.add_argument("--stdin", action="store_true", help="read graph6 or edge list from stdin")
    src.add_argument("--family", choices=[f.value for f in Family])
    c.add_argument("--n", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--complement", action="store_true", help="also report the complement graph")
    c.add_argument("--tol", type=_tol, default=DEFAULT_ROOT_TOL, help="root bisection tolerance (>= 1e-15)")
    common(c)
    c.set_defaults(func=cmd_compute)

    f = sub.add_parser("family", help="build a named tree")
    f.add_argument("name", choices=[x.value for x in Family])
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--p", type=int)
    common(f)
    f.set_defaults(func=cmd_family)

    e = sub.add_parser("enumerate", help="list every tree of order n as graph6")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", help="nu_at_least:P, nu_equals:P or perfect_matching")
    e.add_argument("--annotate", action="store_true", help="append matching number and pendant count columns")
    common(e)
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("transform", help="apply and check one transformation spec (JSON file or '-')")
    t.add_argument("--spec", required=True)
    common(t)
    t.set_defaults(func=cmd_transform)

    v = sub.add_parser("verify", help="run an exhaustive or randomized verification suite")
    v.add_argument("theorem", choices=["thm1", "thm2", "thm4", "remark2", "transforms"])
    v.add_argument("--n", type=int)
    v.add_argument("--n-min", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--out", help="write the JSON report to this path")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default from COMPLEMENT_ENERGY_JOBS or 1)")
    common(v)
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 0) is None:
        args.jobs = default_jobs()
    handler: Callable[[argparse.Namespace, Any], int] = args.func
    try:
        return handler(args, out)
    except (
        CliError,
        GraphError,
        FamilyError,
        TransformError,
        NotRealizableError,
        QuadratureError,
        ValueError,
        KeyError,
        OSError,
    ) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
