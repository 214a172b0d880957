"""Command-line front end.

Every subcommand produces a run report that echoes its parameters; ``--json``
prints it as JSON (stable key order), otherwise a short human summary is
shown.  Exit codes: 0 success, 2 input error, 3 resource limit, 4 freeness
precondition violated, 1 cross-oracle inconsistency.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from math import comb

from .complexes import (
    DEFAULT_FACE_LIMIT,
    complex_from_json_obj,
    complex_to_json_obj,
    neighborhood_complex,
    pair_poset,
)
from .errors import ConsistencyError, FreenessError, ResourceLimitError
from .graphs import hom_search, load_graph, make_cycle, make_kneser, odd_girth, validate_hom
from .homology import homology
from .morse import collapse_cycle_tower, cycle_matching, verify_matching
from .z2 import obstruction_check

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_FREENESS = 4


def _girth_str(value):
    return "infinite" if value == math.inf else value


def _cmd_girth(args):
    g = load_graph(args.graph)
    val = _girth_str(odd_girth(g))
    params = {"graph": args.graph}
    result = {"odd_girth": val}
    return params, result, [f"odd girth: {val}"]


def _cmd_complex(args):
    g = load_graph(args.graph)
    K = neighborhood_complex(g, args.r)
    K.faces(args.limit_faces)  # enforce the guard before reporting
    obj = complex_to_json_obj(K)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")
    params = {"graph": args.graph, "r": args.r, "out": args.out}
    result = {"facet_count": len(K.facets), "dim": K.dim}
    if not args.out:
        result["complex"] = obj
    lines = [f"facets: {len(K.facets)}", f"dimension: {K.dim}"]
    if args.out:
        lines.append(f"wrote {args.out}")
    return params, result, lines


def _load_complex_or_graph(path, r):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "facets" in obj:
            return complex_from_json_obj(obj)
    if r is None:
        raise ValueError("graph input needs -r to pick the neighborhood radius")
    g = load_graph(path)
    return neighborhood_complex(g, r)


def _cmd_homology(args):
    K = _load_complex_or_graph(args.file, args.r)
    h = homology(K, args.limit_faces)
    params = {"file": args.file, "r": args.r}
    result = {"homology": h.to_json_obj()}
    lines = []
    for row in h.to_json_obj():
        tors = "".join(f" + Z/{t}" for t in row["torsion"])
        lines.append(f"H_{row['dim']}: Z^{row['betti']}{tors}")
    return params, result, lines


def _cmd_bposet(args):
    g = load_graph(args.graph)
    P = pair_poset(g, args.r, size_guard=args.guard)
    obj = P.to_json_obj()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")
    params = {"graph": args.graph, "r": args.r, "guard": args.guard, "out": args.out}
    result = {"element_count": P.n_elements, "cover_count": len(P.covers)}
    if not args.out:
        result["poset"] = obj
    lines = [f"elements: {P.n_elements}", f"covers: {len(P.covers)}"]
    if args.out:
        lines.append(f"wrote {args.out}")
    return params, result, lines


def _cmd_obstruct(args):
    g = load_graph(args.source)
    h = load_graph(args.target)
    rep = obstruction_check(
        g,
        h,
        args.r,
        exact=args.exact,
        budget=args.budget,
        limit=args.limit_faces,
        size_guard=args.guard,
    )
    search = hom_search(g, h, args.budget)
    if rep.verdict == "NO-MAP" and search.found:
        raise ConsistencyError(
            "obstruction says NO-MAP but the exhaustive search found a map"
        )
    params = {
        "source": args.source,
        "target": args.target,
        "r": args.r,
        "exact": args.exact,
        "budget": args.budget,
    }
    result = {
        "obstruction": rep.to_json_obj(),
        "search": {"status": search.status, "expansions": search.expansions},
    }
    lines = [
        f"verdict: {rep.verdict} (lhs {rep.lhs['bound']} via {rep.lhs['rule']}, "
        f"rhs {rep.rhs['bound']} via {rep.rhs['rule']})",
        f"exhaustive search: {search.status}",
    ]
    return params, result, lines


def _cmd_morse(args):
    matching = cycle_matching(args.m, args.r)
    start = neighborhood_complex(make_cycle(args.m), args.r)
    report = verify_matching(start.all_faces_label_set(args.limit_faces), matching)
    final, stages = collapse_cycle_tower(args.m, args.r, args.limit_faces)
    h = homology(final, args.limit_faces)
    params = {"m": args.m, "r": args.r}
    result = {
        "matching": matching.to_json_obj(),
        "verification": report.to_json_obj(),
        "stages": stages,
        "final_facets": [list(final.face_labels(f)) for f in final.facets],
        "homology": h.to_json_obj(),
    }
    lines = [f"top matching: {len(matching.pairs)} pairs, perfect={report.perfect}"]
    lines += [f"stage r={s['radius']}: {s['pairs']} pairs, acyclic" for s in stages]
    lines.append(f"final complex: {len(final.facets)} facets, betti {h.betti_vector}")
    return params, result, lines


def _cmd_kneser_table(args):
    rows = []
    cells = 0
    for n in range(args.n_min, args.n_max + 1):
        for k in range(args.k_min, args.k_max + 1):
            if k > n:
                continue
            cells += comb(n, k)
            if cells > args.limit_cells:
                raise ResourceLimitError(
                    f"table spans more than {args.limit_cells} vertices",
                    count=cells, limit=args.limit_cells)
            g = make_kneser(n, k)
            bfs = odd_girth(g)
            formula = 2 * math.ceil(k / (n - 2 * k)) + 1 if n > 2 * k else math.inf
            if formula != bfs:
                raise ConsistencyError(
                    f"odd girth mismatch for ({n},{k}): formula {formula}, search {bfs}"
                )
            r = (k - 1) // (n - 2 * k) if n > 2 * k and (k - 1) % (n - 2 * k) == 0 else None
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "vertices": comb(n, k),
                    "odd_girth": _girth_str(bfs),
                    "odd_girth_formula": _girth_str(formula),
                    "r": r,
                    "certificate": bool(r is not None and r >= 1),
                }
            )
    params = {
        "n_min": args.n_min, "n_max": args.n_max,
        "k_min": args.k_min, "k_max": args.k_max,
        "limit_cells": args.limit_cells,
    }
    lines = ["   n  k  |V|  girth  r  certificate"]
    for row in rows:
        lines.append(
            f"  {row['n']:>2} {row['k']:>2} {row['vertices']:>4}  "
            f"{str(row['odd_girth']):>5}  {str(row['r'] if row['r'] is not None else '-'):>1}  "
            f"{'active' if row['certificate'] else '-'}"
        )
    return params, {"rows": rows}, lines


def _cmd_hom_search(args):
    g = load_graph(args.source)
    h = load_graph(args.target)
    out = hom_search(g, h, args.budget)
    mapping = None
    if out.found:
        assert validate_hom(out.mapping, g, h)
        mapping = [
            [g.vertices[i], h.vertices[t]] for i, t in enumerate(out.mapping)
        ]
    params = {"source": args.source, "target": args.target, "budget": args.budget}
    result = {"status": out.status, "expansions": out.expansions, "map": mapping}
    lines = [f"search: {out.status} ({out.expansions} expansions)"]
    if mapping:
        lines.extend(f"  {u} -> {v}" for u, v in mapping)
    return params, result, lines


def _build_parser(face_default):
    parser = argparse.ArgumentParser(
        prog="nbhd",
        description="Walk-neighborhood complexes of finite graphs and their "
        "homomorphism obstructions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="emit the run report as JSON")
        sp.add_argument("--limit-faces", type=int, default=face_default,
                        help="face-count guard for enumeration")
        sp.add_argument("--budget", type=int, default=10_000_000,
                        help="node-expansion limit for exhaustive searches")
        sp.add_argument("--out", default=None, help="write the artifact to this file")
        return sp

    sp = add("girth", _cmd_girth, "odd girth of a graph file")
    sp.add_argument("graph")

    sp = add("complex", _cmd_complex, "walk-neighborhood complex of a graph")
    sp.add_argument("graph")
    sp.add_argument("r", type=int)

    sp = add("homology", _cmd_homology, "integral homology of a complex or graph+radius")
    sp.add_argument("file")
    sp.add_argument("-r", type=int, default=None, help="radius when the input is a graph")

    sp = add("bposet", _cmd_bposet, "linked-pair poset of a graph")
    sp.add_argument("graph")
    sp.add_argument("r", type=int)
    sp.add_argument("--guard", type=int, default=200_000, help="element-count guard")

    sp = add("obstruct", _cmd_obstruct, "homomorphism obstruction verdict")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("r", type=int)
    sp.add_argument("--exact", action="store_true",
                    help="fall back to exact cup-power heights")
    sp.add_argument("--guard", type=int, default=200_000, help="pair-poset guard")

    sp = add("morse", _cmd_morse, "matching + collapse tower for a cycle complex")
    sp.add_argument("m", type=int)
    sp.add_argument("r", type=int)

    sp = add("kneser-table", _cmd_kneser_table, "survey table over Kneser parameters")
    sp.add_argument("n_min", type=int)
    sp.add_argument("n_max", type=int)
    sp.add_argument("k_min", type=int)
    sp.add_argument("k_max", type=int)
    sp.add_argument("--limit-cells", type=int, default=20_000,
                    help="total vertex-count guard for the table")

    sp = add("hom-search", _cmd_hom_search, "exhaustive homomorphism search")
    sp.add_argument("source")
    sp.add_argument("target")

    return parser


def main(argv=None):
    face_default = int(os.environ.get("NBHD_LIMIT_FACES", DEFAULT_FACE_LIMIT))
    parser = _build_parser(face_default)
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        params, result, lines = args.func(args)
    except FreenessError as exc:
        print(f"freeness violation: {exc}", file=sys.stderr)
        return EXIT_FREENESS
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"fatal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    wall = time.perf_counter() - t0
    report = {
        "command": args.command,
        "parameters": params,
        "result": result,
        "limits": {
            "face_limit": args.limit_faces,
            "budget": args.budget,
        },
        "wall_time_s": round(wall, 6),
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)
        print(f"[{wall:.3f}s]")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
