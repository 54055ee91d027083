"""Command-line front end: tables, classify, construct, snp, admissible, search."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .classify import (
    SearchConfig,
    enumerate_cases,
    search_maps,
    table1,
    table2,
    verify_sporadic_tables,
)
from .errors import InternalInvariantError, RegmapsError
from .families import (
    build_m1,
    build_m2,
    build_m3,
    build_pgl2,
    family_from_spec,
    find_lift_base,
    lift_map,
)
from .fields import is_admissible, s_set
from .maps import AlgebraicMap, orbit_invariants, validate


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        _emit_text(payload)


def _emit_text(payload, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent)
                print()
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{payload}")


def _map_report(m: AlgebraicMap, verify: bool) -> dict:
    out = {
        "group": {"family": m.group.family, "params": m.group.params, "order": m.group.order},
        "type": [m.x, m.y],
        "chi": m.chi,
        "orientable": m.orientable,
        "genus": m.genus,
        "triple": [g.serialize() for g in m.triple()],
    }
    if verify:
        inv = orbit_invariants(m)
        out["verify"] = {
            "chi_formula": m.chi,
            "chi_orbits": inv.chi,
            "vertices": inv.vertices,
            "edges": inv.edges,
            "faces": inv.faces,
            "chi_agrees": inv.chi == m.chi,
        }
    return out


def _config_from(args) -> SearchConfig:
    cfg = SearchConfig()
    if getattr(args, "max_order", None):
        cfg.max_order = args.max_order
    if getattr(args, "workers", None):
        cfg.workers = args.workers
    if getattr(args, "no_klein", False):
        cfg.klein_reduction = False
    if getattr(args, "no_dickson", False):
        cfg.dickson_cap = False
    if getattr(args, "search_limit", None) is not None:
        cfg.search_order_limit = args.search_limit
    return cfg


def _cmd_tables(args) -> int:
    cfg = _config_from(args)
    payload = {
        "table1": [{"type": list(t), "k": k} for t, k in table1()],
        "table2": table2(args.p, args.q),
        **verify_sporadic_tables(cfg, search_limit=args.search_existence),
    }
    _emit(payload, args.format)
    return 0


def _cmd_classify(args) -> int:
    cfg = _config_from(args)
    report = enumerate_cases(args.p, args.q, cfg)
    _emit(report.to_dict(), args.format)
    return 0


def _cmd_construct(args) -> int:
    family = args.family
    params = args.params
    if family == "m1":
        if len(params) != 2:
            raise ValueError("construct m1 needs: j k")
        m = build_m1(params[0], params[1])
    elif family == "m2":
        if len(params) != 3:
            raise ValueError("construct m2 needs: x n p")
        m = build_m2(params[0], params[1], params[2])
    elif family == "m3":
        if len(params) != 1:
            raise ValueError("construct m3 needs: u")
        m = build_m3(params[0])
    elif family == "lift":
        if len(params) != 4:
            raise ValueError("construct lift needs: d f m n")
        d, f, mm, nn = params
        base = find_lift_base(f, mm, nn)
        if base is None:
            raise ValueError(
                f"no liftable base triple of type ({mm},{nn}) exists in pgl:f={f}"
            )
        base_map = validate(build_pgl2(f), *base)
        m = lift_map(d, base_map, alpha_power=args.alpha_power)
    else:
        raise ValueError(f"unknown construct family {family!r}")
    _emit(_map_report(m, args.verify), args.format)
    return 0


def _cmd_snp(args) -> int:
    result = s_set(args.n, args.p)
    if args.format == "json":
        _emit({"n": result.n, "p": result.p, "members": list(result.members)}, "json")
    else:
        print(" ".join(str(x) for x in result.members))
    return 0


def _cmd_admissible(args) -> int:
    ok = is_admissible(args.m, args.n, args.p)
    if args.format == "json":
        _emit({"m": args.m, "n": args.n, "p": args.p, "admissible": ok}, "json")
    else:
        print("true" if ok else "false")
    return 0


def _parse_type(text: Optional[str]) -> Optional[set]:
    if text is None:
        return None
    try:
        parts = [int(v) for v in text.split(",")]
    except ValueError:
        raise ValueError(f"--type expects X,Y with integers, got {text!r}")
    if len(parts) != 2:
        raise ValueError(f"--type expects exactly two entries, got {text!r}")
    return set(parts)


def _cmd_search(args) -> int:
    cfg = _config_from(args)
    group = family_from_spec(args.group)
    hits = search_maps(group, target_chi=args.chi, target_type=_parse_type(args.type), config=cfg)
    payload = {
        "group": {"spec": args.group, "order": group.order},
        "hits": [_map_report(h.map, verify=False) for h in hits],
        "count": len(hits),
    }
    _emit(payload, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regmaps",
        description="Regular maps on closed surfaces with Euler characteristic -pq: "
        "construction, validation, classification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, search_opts=True):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        if search_opts:
            sp.add_argument("--max-order", type=int, default=None)
            sp.add_argument("--workers", type=int, default=None)
            sp.add_argument("--no-klein", action="store_true", help="disable Klein-orbit reduction")
            sp.add_argument("--no-dickson", action="store_true", help="disable projective generation caps")

    sp = sub.add_parser("tables", help="emit the four classification tables with verification flags")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument(
        "--search-existence",
        type=int,
        default=0,
        metavar="MAX_ORDER",
        help="run existence searches for sporadic rows with group order up to this",
    )
    add_common(sp)
    sp.set_defaults(func=_cmd_tables)

    sp = sub.add_parser("classify", help="enumerate and verify all candidate maps for (p, q)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--search-limit", type=int, default=None,
                    help="largest group order searched; bigger cases stay conditional")
    add_common(sp)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("construct", help="build one map: m1 j k | m2 x n p | m3 u | lift d f m n")
    sp.add_argument("family", choices=("m1", "m2", "m3", "lift"))
    sp.add_argument("params", type=int, nargs="*")
    sp.add_argument("--alpha-power", type=int, default=1)
    sp.add_argument("--verify", action="store_true", help="cross-check invariants by orbit counts")
    add_common(sp, search_opts=False)
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("snp", help="members of the matrix-order set for (n, p)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    add_common(sp, search_opts=False)
    sp.set_defaults(func=_cmd_snp)

    sp = sub.add_parser("admissible", help="test the square-expression predicate for {m, n} at p")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    add_common(sp, search_opts=False)
    sp.set_defaults(func=_cmd_admissible)

    sp = sub.add_parser("search", help="exhaustive map search over one group")
    sp.add_argument("--group", required=True, help="family spec, e.g. psl:f=11 or g2:x=1,n=6,p=5")
    sp.add_argument("--chi", type=int, default=None)
    sp.add_argument("--type", default=None, help="unordered type filter X,Y")
    add_common(sp)
    sp.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except InternalInvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (RegmapsError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
