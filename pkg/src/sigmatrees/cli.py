"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import difflib
import io
import json
import sys
from datetime import datetime, timezone
from typing import Sequence

from .certificate import (
    DomainError,
    NotCovered,
    certificate,
    exact_sigma_max,
    format_rational,
    lp_optimum,
    penalty,
    sigma_via_decomposition,
)
from .constructions import canonical_form, tt0_opt, tt0_positions, tt1_opt
from .enumeration import (
    enumerate_free_trees,
    orders_for_k_range,
    reports_to_csv,
    residue_scan,
    search_sigma_max,
)
from .lemmas import verify_all
from .tree import Graph6Error, TreeError, parse_graph6, profile, sigma, write_graph6

FLAGS = [
    "--n",
    "--delta",
    "--k",
    "--position",
    "--max-degree",
    "--exact-delta",
    "--delta-max",
    "--format",
    "--out",
    "--in",
    "--override-size-guard",
    "--timestamps",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        hint = ""
        for token in message.split():
            if token.startswith("--"):
                close = difflib.get_close_matches(token.rstrip(","), FLAGS, n=1)
                if close:
                    hint = f" (did you mean {close[0]}?)"
                    break
        raise UsageError(f"{self.prog}: {message}{hint}")


def _check_flags(argv: list[str]) -> None:
    for token in argv:
        if not token.startswith("--") or token == "--":
            continue
        name = token.split("=", 1)[0]
        if name not in FLAGS and name != "--help":
            close = difflib.get_close_matches(name, FLAGS, n=1)
            hint = f"; did you mean {close[0]}?" if close else ""
            raise UsageError(f"sigmatrees: unknown flag {name}{hint}")


def _int_range(text: str) -> list[int]:
    """``"9"``, ``"9..16"`` or ``"9,10,12"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, range a..b or list, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=None)
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--timestamps", action="store_true", help="add a generated_at field")

    parser = _Parser(prog="sigmatrees", description="sigma irregularity of trees")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("sigma", "profile"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of graph6 trees on stdin")
        p.add_argument("--in", dest="input", metavar="PATH")
        if name == "profile":
            p.add_argument("--delta", type=int, help="report penalty against this certificate")

    p = sub.add_parser("certificate", parents=[common], help="dual variables and slack table")
    p.add_argument("--delta", type=int, required=True)

    p = sub.add_parser("bound", parents=[common], help="LP optimum and closed-form maximum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)

    p = sub.add_parser("construct", parents=[common], help="extremal trees as graph6")
    p.add_argument("family", choices=["tt1", "tt0"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--position", type=int, help="tt0 subdivision position (default: all)")

    p = sub.add_parser("search", parents=[common], help="brute-force sigma maximum")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--delta", type=int, help="maximum degree exactly DELTA")
    g.add_argument("--exact-delta", type=int, help="same as --delta")
    g.add_argument("--max-degree", type=int, help="maximum degree at most MAX_DEGREE")
    p.add_argument("--override-size-guard", action="store_true")

    p = sub.add_parser("scan", parents=[common], help="search over a range of orders")
    p.add_argument("--delta", type=int, required=True)
    rg = p.add_mutually_exclusive_group(required=True)
    rg.add_argument("--n", type=_int_range, help="orders: N, A..B or A,B,C")
    rg.add_argument("--k", type=_int_range, help="k range; scans n = delta*k+1 .. delta*(k+1)")
    p.add_argument("--max-degree", action="store_true", help="at-most filter instead of exact")
    p.add_argument("--override-size-guard", action="store_true")

    p = sub.add_parser("verify-lemmas", parents=[common], help="exact slack sweeps")
    p.add_argument("--delta-max", type=int, required=True)
    p.add_argument("--delta", type=int, default=4, help="lower end of the sweep")

    p = sub.add_parser("enumerate", parents=[common], help="free trees of order n as graph6")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--max-degree", type=int)
    g.add_argument("--exact-delta", type=int)
    p.add_argument("--override-size-guard", action="store_true")
    return parser


def _read_trees(path: str | None, stdin) -> list[tuple[int, str]]:
    stream = open(path, encoding="ascii") if path else stdin
    try:
        return [(i, line.strip()) for i, line in enumerate(stream, 1) if line.strip()]
    finally:
        if path:
            stream.close()


def _profile_dict(text: str, delta: int | None) -> dict:
    t = parse_graph6(text)
    p = profile(t)
    out = {
        "graph6": text,
        "n": t.n,
        "delta": p.delta,
        "sigma": sigma(t),
        "degree_counts": {str(i): c for i, c in p.degree_counts.items()},
        "pair_counts": {f"{i},{j}": c for (i, j), c in p.pair_counts.items()},
        "weighted_edge_sum": format_rational(p.weighted_edge_sum()),
        "identities_hold": not p.identity_violations(),
    }
    if delta is not None:
        cert = certificate(delta)
        out["penalty"] = format_rational(penalty(p, cert))
        out["sigma_via_decomposition"] = format_rational(sigma_via_decomposition(p, cert, t.n))
    return out


def _bound_dict(n: int, delta: int) -> dict:
    opt = lp_optimum(n, delta)
    value = exact_sigma_max(n, delta)
    r = n % delta
    if r == 1:
        status = "tight (n≡1 mod Δ)"
    elif r == 0:
        status = "penalized (n≡0 mod Δ): bound minus F(Δ,Δ)"
    else:
        status = f"strict (n≡{r} mod Δ): not covered"
    return {
        "n": n,
        "delta": delta,
        "m_1_delta": format_rational(opt.m_1_delta),
        "m_2_delta": format_rational(opt.m_2_delta),
        "integral": opt.integral,
        "sigma_bound": format_rational(opt.sigma_bound),
        "sigma_max": None if isinstance(value, NotCovered) else format_rational(value),
        "status": status,
    }


def _certificate_dict(delta: int) -> dict:
    cert = certificate(delta)
    return {
        "delta": delta,
        "lambda": format_rational(cert.lam),
        "mu": format_rational(cert.mu),
        "a_const": format_rational(cert.a_const),
        "b_const": format_rational(cert.b_const),
        "F_delta_delta": format_rational(cert.F(delta, delta)),
        "tight_pairs": [list(k) for k in sorted(cert.tight_pairs())],
        "slack": [[i, j, format_rational(v)] for (i, j), v in sorted(cert.slack.items())],
    }


def _rows_to_csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ("" if row.get(k) is None else row[k]) for k in fields})
    return buf.getvalue()


def _dump(payload, timestamps: bool) -> str:
    if timestamps and isinstance(payload, dict):
        payload = dict(payload, generated_at=datetime.now(timezone.utc).isoformat())
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _dispatch(args, stdin) -> tuple[str, int]:
    fmt = args.format or "json"
    cmd = args.command

    if cmd in ("sigma", "profile"):
        rows = []
        for lineno, text in _read_trees(args.input, stdin):
            try:
                if cmd == "sigma":
                    t = parse_graph6(text)
                    rows.append({"graph6": text, "n": t.n, "sigma": sigma(t)})
                else:
                    rows.append(_profile_dict(text, args.delta))
            except (Graph6Error, TreeError) as exc:
                raise DomainError(f"input line {lineno}: {exc}") from exc
        if fmt == "csv":
            fields = ["graph6", "n", "sigma"] if cmd == "sigma" else [
                "graph6", "n", "delta", "sigma", "weighted_edge_sum", "identities_hold",
                "penalty", "sigma_via_decomposition",
            ]
            return _rows_to_csv(rows, fields), 0
        return _dump({"trees": rows}, args.timestamps), 0

    if cmd == "certificate":
        data = _certificate_dict(args.delta)
        if fmt == "csv":
            rows = [{"i": i, "j": j, "F": v} for i, j, v in data["slack"]]
            return _rows_to_csv(rows, ["i", "j", "F"]), 0
        return _dump(data, args.timestamps), 0

    if cmd == "bound":
        data = _bound_dict(args.n, args.delta)
        if fmt == "csv":
            return _rows_to_csv([data], list(data)), 0
        return _dump(data, args.timestamps), 0

    if cmd == "construct":
        if args.family == "tt1":
            if args.position is not None:
                raise UsageError("--position only applies to tt0")
            trees = [tt1_opt(args.k, args.delta)]
        elif args.position is not None:
            trees = [tt0_opt(args.k, args.delta, args.position)]
        else:
            trees = [tt0_opt(args.k, args.delta, pos) for pos in tt0_positions(args.k)]
            if not trees:
                tt0_opt(args.k, args.delta, 3)  # raises the domain error for k=1
        if args.format == "json":
            rows = [
                {"graph6": write_graph6(t), "n": t.n, "sigma": sigma(t), "canonical": str(canonical_form(t))}
                for t in trees
            ]
            return _dump({"trees": rows}, args.timestamps), 0
        return "".join(write_graph6(t) + "\n" for t in trees), 0

    if cmd == "search":
        if args.max_degree is not None:
            delta, filt = args.max_degree, "at-most"
        else:
            delta, filt = (args.delta if args.delta is not None else args.exact_delta), "exact"
        report = search_sigma_max(args.n, delta, filt, args.override_size_guard)
        if fmt == "csv":
            return reports_to_csv([report]), 0
        return _dump(report.to_dict(), args.timestamps), 0

    if cmd == "scan":
        orders = args.n if args.n is not None else orders_for_k_range(args.delta, min(args.k), max(args.k))
        filt = "at-most" if args.max_degree else "exact"
        reports = residue_scan(args.delta, orders, filt, args.override_size_guard)
        if fmt == "csv":
            return reports_to_csv(reports), 0
        return _dump({"reports": [r.to_dict() for r in reports]}, args.timestamps), 0

    if cmd == "verify-lemmas":
        if args.delta < 4 or args.delta_max < args.delta:
            raise DomainError("need 4 <= --delta <= --delta-max")
        reports = verify_all(range(args.delta, args.delta_max + 1))
        code = 0 if all(r.passed for r in reports) else 3
        if fmt == "csv":
            rows = [
                {"lemma_id": r.lemma_id, "delta_lo": r.delta_range[0], "delta_hi": r.delta_range[1],
                 "status": r.status, "witness_count": len(r.witnesses)}
                for r in reports
            ]
            return _rows_to_csv(rows, ["lemma_id", "delta_lo", "delta_hi", "status", "witness_count"]), code
        return _dump({"reports": [r.to_dict() for r in reports]}, args.timestamps), code

    if cmd == "enumerate":
        if args.n > 24 and not args.override_size_guard:
            raise DomainError(f"n={args.n} exceeds the enumeration guard n<=24; pass --override-size-guard")
        cap = args.max_degree if args.max_degree is not None else args.exact_delta
        trees = enumerate_free_trees(args.n, cap)
        if args.exact_delta is not None:
            trees = (t for t in trees if t.max_degree() == args.exact_delta)
        lines = [write_graph6(t) for t in trees]
        if fmt == "csv" and args.format:
            return _rows_to_csv([{"graph6": s} for s in lines], ["graph6"]), 0
        if args.format == "json":
            return _dump({"n": args.n, "count": len(lines), "trees": lines}, args.timestamps), 0
        return "".join(s + "\n" for s in lines), 0

    raise UsageError(f"unknown command {cmd}")


def run(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        _check_flags(argv)
        args = build_parser().parse_args(argv)
        text, code = _dispatch(args, stdin)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 2
    except (DomainError, Graph6Error, TreeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
