"""Command-line front end: ``irreg analyze | verify | hunt | generate``.

Exit codes: 0 ok, 2 discovery (a hunt disagreed with its expectation or a
verify run found an unexpected violation), 64 usage error, 65 data error.
Output is JSON lines unless ``--format`` says otherwise, and is
byte-identical across runs unless ``--timestamp`` is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from fractions import Fraction

from . import extremal, measures, spectral
from .errors import GraphParseError, IrregError, UnsupportedSizeError
from .families import ARITY, FamilySpec, generate
from .graph import Graph, encode_graph6, format_edge_list, parse_edge_list, read_graph6_lines, radius
from .invariants import GraphInvariants
from .registry import get_check
from .verifier import (EQUALITY, VIOLATED, _workers, hunt, render_number, unexpected_violations,
                       verify_all)

EXIT_OK = 0
EXIT_DISCOVERY = 2
EXIT_USAGE = 64
EXIT_DATA = 65

NA = "not_applicable"
SKIPPED = "skipped:cap"

CAP_NAMES = {
    "eigen": (spectral, "DENSE_CAP"),
    "clique": (extremal, "CLIQUE_CAP"),
    "color": (extremal, "COLORING_CAP"),
    "count": (extremal, "COUNT_CAP"),
}

FAMILY_HELP = """family specs use name:p1,p2 syntax:
  star:n  complete:n  complete_bipartite:a,b  complete_multipartite:a,b,...
  turan:n,r  path:n  cycle:n  wheel:k (hub plus C_k)  dutch_windmill:k,c
  petersen  k33  k45  figure1  figure2"""


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# inputs -------------------------------------------------------------------

def _family(text: str) -> tuple[str, Graph]:
    try:
        spec = FamilySpec.parse(text)
        return str(spec), generate(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_file(path: str, fmt: str):
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"{path}: cannot read: {exc}") from None
    if fmt == "auto":
        fmt = "g6" if path.endswith((".g6", ".graph6")) else "edgelist"
    try:
        if fmt == "g6":
            return [(f"{path}:{lineno}", g) for lineno, g in read_graph6_lines(text.splitlines())]
        return [(path, parse_edge_list(text))]
    except GraphParseError as exc:
        where = f":{exc.line}" if exc.line is not None else ""
        col = f" (byte {exc.offset})" if exc.offset is not None else ""
        raise DataError(f"{path}{where}: {exc.reason}{col}") from None
    except IrregError as exc:
        raise DataError(f"{path}: {exc}") from None


def _collect(args) -> list[tuple[str, Graph]]:
    graphs = []
    for path in args.inputs:
        graphs.extend(_read_file(path, args.input_format))
    for spec in args.family or ():
        graphs.append(_family(spec))
    if not graphs and not getattr(args, "degrees", None):
        raise UsageError("no input graphs: give files or --family")
    return graphs


def parse_caps(text: str | None) -> dict[str, int]:
    caps = {}
    if not text:
        return caps
    for item in text.split(","):
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or key not in CAP_NAMES:
            raise UsageError(f"bad cap {item!r}; expected name=value with name in {sorted(CAP_NAMES)}")
        try:
            caps[key] = int(val)
        except ValueError:
            raise UsageError(f"cap {key} needs an integer, got {val!r}") from None
    return caps


def apply_caps(caps: dict[str, int]) -> None:
    for key, value in caps.items():
        module, attr = CAP_NAMES[key]
        setattr(module, attr, value)


def parse_alphas(text: str) -> tuple[float, ...]:
    try:
        alphas = tuple(float(a) for a in text.split(",") if a.strip())
    except ValueError:
        raise UsageError(f"bad --alphas {text!r}") from None
    if not alphas or not all(math.isfinite(a) for a in alphas):
        raise UsageError("--alphas needs finite numbers")
    return alphas


# analyze --------------------------------------------------------------------

def _put(rec: dict, key: str, value) -> None:
    """Store a value; Fractions also get a ``<key>_decimal`` companion."""
    if isinstance(value, Fraction):
        rec[key] = render_number(value)
        rec[key + "_decimal"] = render_number(float(value))
    else:
        rec[key] = render_number(value) if isinstance(value, (int, float)) else value


def _mark(rec: dict, keys, marker: str) -> None:
    for k in keys:
        rec[k] = marker


MEASURE_KEYS = ["nu", "nu_decimal", "eps", "eps2", "beta", "beta2", "gamma", "cv", "ce",
                "collatz_sinogowitz", "variance", "variance_decimal", "nikiforov_s",
                "nikiforov_s_decimal", "albertson", "alpha_ylt", "alpha_ylt_decimal"]
HET_KEYS = ["rho_n", "nu_n", "nu_n_decimal", "eps_n", "beta_n"]


def _alpha_key(a: float) -> str:
    return f"randic_{a:g}"


def analyze_graph(gid: str, g: Graph, alphas=measures.DEFAULT_ALPHAS) -> dict:
    rec: dict = {"graph": gid, "n": g.n, "m": g.m, "degrees": list(g.degrees)}
    mu = q = None
    try:
        mu = spectral.adjacency_spectral_radius(g).value
        q = spectral.signless_laplacian_spectral_radius(g).value
        rec["mu"], rec["q"] = render_number(mu), render_number(q)
    except UnsupportedSizeError:
        _mark(rec, ["mu", "q"], SKIPPED)

    ms = None
    if g.m == 0:
        _mark(rec, MEASURE_KEYS, NA)
    elif mu is None:
        _mark(rec, MEASURE_KEYS, SKIPPED)
    else:
        ms = measures.multiplicative_measures(g, mu, q)
        _put(rec, "nu", ms.nu)
        _put(rec, "eps", ms.epsilon)
        _put(rec, "eps2", ms.epsilon ** 2)
        _put(rec, "beta", ms.beta)
        _put(rec, "beta2", ms.beta ** 2)
        _put(rec, "gamma", ms.gamma)
        _put(rec, "cv", ms.cv)
        _put(rec, "ce", ms.ce)
        _put(rec, "collatz_sinogowitz", ms.collatz_sinogowitz)
        _put(rec, "variance", ms.variance)
        _put(rec, "nikiforov_s", ms.nikiforov_s)
        _put(rec, "albertson", ms.albertson)
        _put(rec, "alpha_ylt", ms.alpha_ylt)

    index_keys = ["randic", "harmonic", "harmonic_decimal"] + [_alpha_key(a) for a in alphas] + ["zagreb1"]
    idx = None
    if g.m == 0 or g.isolated_vertices():
        _mark(rec, index_keys, NA)
    else:
        idx = measures.topological_indices(g, alphas)
        _put(rec, "randic", idx.randic)
        _put(rec, "harmonic", idx.harmonic)
        for a in alphas:
            _put(rec, _alpha_key(a), idx.generalized_randic[a])
        _put(rec, "zagreb1", idx.zagreb1)

    if ms is None and g.m >= 1:
        _mark(rec, HET_KEYS, SKIPPED)
    elif ms is None or idx is None or g.n <= 2:
        _mark(rec, HET_KEYS, NA)
    else:
        h = measures.heterogeneity_indices(g, ms, idx)
        _put(rec, "rho_n", h.rho_n)
        _put(rec, "nu_n", h.nu_n)
        _put(rec, "eps_n", h.eps_n)
        _put(rec, "beta_n", h.beta_n)

    for key, fn in (("omega", extremal.clique_number), ("chi", extremal.chromatic_number),
                    ("triangles", extremal.triangle_count)):
        try:
            rec[key] = fn(g)
        except UnsupportedSizeError:
            rec[key] = SKIPPED
    res = extremal.phi(g.degrees)
    rec["phi"] = res.phi
    rec["radius"] = radius(g)[0] if g.is_connected() else NA
    return rec


def analyze_degrees(text: str) -> dict:
    try:
        degrees = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad degree sequence {text!r}") from None
    try:
        res = extremal.phi(degrees)
        chain = extremal.phi_lower_chain(degrees, len(degrees))
    except IrregError as exc:
        raise DataError(f"degree sequence {text!r}: {exc}") from None
    return {"graph": "degrees:" + ",".join(map(str, degrees)), "n": len(degrees),
            "degrees": degrees, "phi": res.phi,
            "partition": [list(p) for p in res.partition],
            "lower_chain": [render_number(x) for x in chain]}


def _analyze_job(job):
    gid, g, alphas = job
    return analyze_graph(gid, g, alphas)


def _map(fn, jobs):
    workers = _workers()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(fn, jobs))  # map keeps input order
    return [fn(j) for j in jobs]


def _cell(v):
    if isinstance(v, list):
        return json.dumps(v)
    return v


def write_records(records: list[dict], fmt: str, out) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
        return
    columns: list[str] = []
    for rec in records:
        for k in rec:
            if k not in columns:
                columns.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for rec in records:
        w.writerow([_cell(rec.get(k, "")) for k in columns])
    out.write(buf.getvalue())


def _stamp(rec: dict, args) -> dict:
    if args.timestamp:
        rec["timestamp"] = datetime.now(timezone.utc).isoformat()
    return rec


def cmd_analyze(args, out) -> int:
    alphas = parse_alphas(args.alphas)
    apply_caps(parse_caps(args.caps))
    graphs = _collect(args)
    records = _map(_analyze_job, [(gid, g, alphas) for gid, g in graphs])
    for text in args.degrees or ():
        records.append(analyze_degrees(text))
    write_records([_stamp(r, args) for r in records], args.format, out)
    return EXIT_OK


# verify -----------------------------------------------------------------------

def _verify_job(job):
    gid, g = job
    results = verify_all(GraphInvariants(g))
    bad = {r.check_id for r in unexpected_violations(results)}
    return {
        "graph": gid, "n": g.n, "m": g.m,
        "unexpected_violations": sorted(bad),
        "expected_violations": [r.check_id for r in results
                                if r.status == VIOLATED and r.check_id not in bad],
        "equalities": [r.check_id for r in results if r.status == EQUALITY],
        "checks": [r.to_json() for r in results],
    }


def cmd_verify(args, out) -> int:
    apply_caps(parse_caps(args.caps))
    graphs = _collect(args)
    records = _map(_verify_job, graphs)
    summary: dict[str, dict[str, int]] = {}
    failures = 0
    for rec in records:
        failures += len(rec["unexpected_violations"])
        for c in rec["checks"]:
            summary.setdefault(c["check_id"], {"holds": 0, "equality": 0, "violated": 0,
                                               "not_applicable": 0})[c["status"]] += 1
        out.write(json.dumps(_stamp(rec, args), ensure_ascii=False) + "\n")
    tail = {"summary": {"graphs": len(records), "unexpected_violations": failures,
                        "per_check": summary}}
    out.write(json.dumps(_stamp(tail, args), ensure_ascii=False) + "\n")
    return EXIT_OK if failures == 0 else EXIT_DISCOVERY


# hunt -------------------------------------------------------------------------

def cmd_hunt(args, out) -> int:
    try:
        check = get_check(args.check_id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if not 1 <= args.n_min <= args.n_max <= 8:
        raise UsageError("hunts need 1 <= --n-min <= --n-max <= 8")
    limit = None if args.max_violations < 0 else args.max_violations
    report = hunt(check.id, args.n_max, connected=args.connected, n_min=args.n_min,
                  max_violations=limit)
    out.write(json.dumps(_stamp(report.to_json(), args), ensure_ascii=False) + "\n")
    return EXIT_OK if report.as_expected else EXIT_DISCOVERY


# generate ---------------------------------------------------------------------

def cmd_generate(args, out) -> int:
    _, g = _family(args.spec)
    if args.format == "g6":
        out.write(encode_graph6(g) + "\n")
    else:
        out.write(format_edge_list(g))
    return EXIT_OK


# entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="irreg", description="Graph irregularity measures, bounds and counterexample hunts.",
                epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_inputs(sp):
        sp.add_argument("inputs", nargs="*", help="graph6 files (.g6) or edge-list files")
        sp.add_argument("--family", action="append", metavar="SPEC", help="family spec, repeatable")
        sp.add_argument("--input-format", choices=["auto", "g6", "edgelist"], default="auto")
        sp.add_argument("--caps", metavar="NAME=N,...",
                        help="size caps: eigen, clique, color, count")
        sp.add_argument("--timestamp", action="store_true", help="add a timestamp to every record")

    a = sub.add_parser("analyze", help="measures and parameters per graph",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    graph_inputs(a)
    a.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    a.add_argument("--alphas", default="0.5,1", help="generalised Randic exponents")
    a.add_argument("--degrees", action="append", metavar="D1,D2,...",
                   help="raw degree sequence: report phi and its lower chain")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="evaluate every registry inequality per graph",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    graph_inputs(v)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("hunt", help="exhaustive counterexample search over labeled graphs")
    h.add_argument("check_id")
    h.add_argument("--n-max", type=int, required=True)
    h.add_argument("--n-min", type=int, default=1)
    h.add_argument("--connected", action="store_true")
    h.add_argument("--max-violations", type=int, default=100,
                   help="violations kept in the report (-1 keeps all)")
    h.add_argument("--timestamp", action="store_true")
    h.set_defaults(func=cmd_hunt)

    g = sub.add_parser("generate", help="emit a named family graph",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    g.add_argument("spec", help=f"one of: {', '.join(sorted(ARITY))}")
    g.add_argument("--format", choices=["g6", "edgelist"], default="g6")
    g.set_defaults(func=cmd_generate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"irreg: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"irreg: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
