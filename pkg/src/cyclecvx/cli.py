"""Command-line interface.

Exit codes: 0 when a value was computed or a claim holds, 1 for a negative
decision, 2 for bad input (including an exceeded oracle cap).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import oracles
from .convexity import hull, is_convex, is_convexly_independent, is_hull_set, time_mask
from .convexity_number import convexity_number
from .decomposition import generate_random_ext_p4_laden
from .graph import GraphError, check_vertices, format_edge_list, parse_edge_list, to_mask
from .percolation import is_cactus, pn_cactus, pn_decide, random_cactus
from .reductions import (
    CnfError,
    assignment_to_witness,
    build_percolation_instance,
    build_thick_spider_instance,
    parse_dimacs_cnf,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    return parse_edge_list(_read_text(path))


def _parse_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in re.split(r"[,\s]+", text) if tok]
    except ValueError:
        raise InputError(f"vertex set must be integers separated by commas: {text!r}") from None


def _emit(args, doc: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=False))
    else:
        print(plain)


def _doc(problem: str, value, witness, algorithm: str, start: float, layers=None) -> dict:
    doc = {
        "problem": problem,
        "value": value,
        "witness": sorted(witness) if witness is not None else None,
    }
    if layers is not None:
        doc["layers"] = [sorted(layer) for layer in layers]
    doc["algorithm"] = algorithm
    doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return doc


# -- subcommands -------------------------------------------------------------

def cmd_hull(args) -> int:
    start = time.perf_counter()
    G = _load_graph(args.graph)
    S = check_vertices(G, _parse_set(args.set))
    trace = hull(G, S)
    doc = _doc("hull", trace.converged_at, S, "interval-iteration", start, trace.layers)
    doc["hull"] = sorted(trace.hull)
    doc["is_hull_set"] = len(trace.hull) == G.n
    plain = "\n".join(" ".join(map(str, layer)) for layer in trace.as_lists())
    _emit(args, doc, plain)
    return EXIT_OK


def cmd_con(args) -> int:
    start = time.perf_counter()
    G = _load_graph(args.graph)
    if not args.oracle:
        try:
            res = convexity_number(G)
        except ValueError:
            res = None
        if res is not None:
            _emit(args, _doc("con", res.value, res.witness, "ext-p4-laden-decomposition", start), str(res.value))
            return EXIT_OK
    witness = oracles.oracle_largest_convex_set(G)
    _emit(args, _doc("con", len(witness), witness, "oracle", start), str(len(witness)))
    return EXIT_OK


def cmd_pn(args) -> int:
    start = time.perf_counter()
    G = _load_graph(args.graph)
    if not args.oracle and is_cactus(G):
        res, algorithm = pn_cactus(G), "cactus"
    else:
        res, algorithm = oracles.oracle_percolation_time(G), "oracle"
    layers = hull(G, res.witness).layers
    _emit(args, _doc("pn", res.value, res.witness, algorithm, start, layers), str(res.value))
    return EXIT_OK


def cmd_pn_decide(args) -> int:
    start = time.perf_counter()
    G = _load_graph(args.graph)
    dec = pn_decide(G, args.k)
    doc = _doc("pn-decide", dec.holds, dec.witness, f"decision-k{args.k}", start, dec.layers or None)
    doc["k"] = args.k
    if dec.holds:
        _emit(args, doc, " ".join(map(str, sorted(dec.witness))))
        return EXIT_OK
    negative = "no hull set with I(S) ≠ V" if args.k == 2 else "no hull set with S ≠ V"
    _emit(args, doc, negative)
    return EXIT_NEGATIVE


def _write_instance(args, inst) -> None:
    text = format_edge_list(inst.graph)
    if args.out:
        Path(args.out).write_text(text)
    if args.labels:
        Path(args.labels).write_text(json.dumps({str(v): lab for v, lab in enumerate(inst.labels)}, indent=1))
    if not args.out and not args.json:
        sys.stdout.write(text)


def cmd_reduce_is(args) -> int:
    start = time.perf_counter()
    H = _load_graph(args.graph)
    inst = build_thick_spider_instance(H)
    _write_instance(args, inst)
    if args.json:
        doc = _doc("reduce-is", inst.graph.n, None, "thick-spider", start)
        doc["edges"] = [list(e) for e in inst.graph.edges]
        print(json.dumps(doc))
    return EXIT_OK


def _parse_assignment(text: str, num_vars: int) -> dict[int, bool]:
    values: dict[int, bool] = {}
    for lit in _parse_set(text.replace("+", "")):
        if lit == 0 or abs(lit) > num_vars:
            raise InputError(f"assignment literal {lit} out of range")
        values[abs(lit)] = lit > 0
    for var in range(1, num_vars + 1):
        values.setdefault(var, False)
    return values


def cmd_reduce_sat(args) -> int:
    start = time.perf_counter()
    phi = parse_dimacs_cnf(_read_text(args.cnf))
    try:
        inst = build_percolation_instance(phi, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _write_instance(args, inst)
    witness = layers = None
    if args.assignment is not None:
        try:
            witness = assignment_to_witness(inst, _parse_assignment(args.assignment, phi.num_vars))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        layers = hull(inst.graph, witness).layers
    if args.json:
        doc = _doc("reduce-sat", args.k, witness, "sat-gadgets", start, layers)
        doc["n"] = inst.graph.n
        doc["m"] = inst.graph.m
        print(json.dumps(doc))
    elif witness is not None and args.out:
        print(" ".join(map(str, sorted(witness))))
    return EXIT_OK


def _check_claim(G, S, claim: str) -> bool:
    mask = to_mask(S)
    if claim == "convex":
        return is_convex(G, S)
    if claim == "hull":
        return is_hull_set(G, S)
    if claim == "independent":
        return is_convexly_independent(G, S)
    m = re.fullmatch(r"time(=|>=)(\d+)", claim)
    if m is None:
        raise InputError(f"unknown claim {claim!r}; use convex, hull, independent, time=T or time>=T")
    t = time_mask(G, mask)
    target = int(m.group(2))
    if t is None:
        return False
    return t == target if m.group(1) == "=" else t >= target


def cmd_verify_witness(args) -> int:
    start = time.perf_counter()
    G = _load_graph(args.graph)
    S = check_vertices(G, _parse_set(args.set))
    ok = _check_claim(G, S, args.claim)
    doc = _doc("verify-witness", ok, S, "direct-check", start, hull(G, S).layers)
    doc["claim"] = args.claim
    _emit(args, doc, "ok" if ok else "claim fails")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    if args.size < 1:
        raise InputError("--size must be at least 1")
    if args.family == "cactus":
        G = random_cactus(args.seed, args.size)
    else:
        G, _ = generate_random_ext_p4_laden(args.seed, args.size)
    sys.stdout.write(format_edge_list(G, comment=f"family={args.family} seed={args.seed}"))
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclecvx", description="Cycle convexity on finite simple graphs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="vertex cap for brute-force oracles")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if graph:
            p.add_argument("graph", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(func=func)
        return p

    p = add("hull", cmd_hull, "interval layers of a set up to its hull")
    p.add_argument("--set", required=True, help="comma separated vertex ids")

    p = add("con", cmd_con, "convexity number")
    p.add_argument("--oracle", action="store_true", help="force brute force")

    p = add("pn", cmd_pn, "percolation time")
    p.add_argument("--oracle", action="store_true", help="force brute force")

    p = add("pn-decide", cmd_pn_decide, "decide pn >= k for k <= 2")
    p.add_argument("--k", type=int, choices=(0, 1, 2), required=True)

    p = add("reduce-is", cmd_reduce_is, "thick spider instance from a graph")
    p.add_argument("--out", help="write the edge list here instead of stdout")
    p.add_argument("--labels", help="write the vertex label map (JSON) here")

    p = sub.add_parser("reduce-sat", help="percolation instance from a 3-CNF", parents=[common])
    p.add_argument("cnf", help="DIMACS CNF file, or - for stdin")
    p.add_argument("--k", type=int, default=9)
    p.add_argument("--assignment", help="true literals, e.g. '1,-2,3'; unlisted variables are false")
    p.add_argument("--out", help="write the edge list here instead of stdout")
    p.add_argument("--labels", help="write the vertex label map (JSON) here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce_sat)

    p = add("verify-witness", cmd_verify_witness, "check a claim about a vertex set")
    p.add_argument("--set", required=True)
    p.add_argument("--claim", required=True, help="convex | hull | independent | time=T | time>=T")

    p = add("gen", cmd_gen, "random instance generator", graph=False)
    p.add_argument("--family", choices=("cactus", "extp4laden"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved_cap = oracles.get_default_cap()
    if args.cap is not None:
        oracles.set_default_cap(args.cap)
    try:
        return args.func(args)
    except oracles.OracleCapExceeded as exc:
        print(f"error: {exc}; no polynomial algorithm applies to this input", file=sys.stderr)
    except (GraphError, CnfError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    finally:
        oracles.set_default_cap(saved_cap)
    return EXIT_INPUT


def main() -> None:
    sys.exit(run())
