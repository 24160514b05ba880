"""Command-line front end: load JSON problem files, run checks, emit certificates.

Exit codes: 0 on success or a true answer, 1 on a false or refuted answer,
2 on any input or validation error.  Reports are deterministic for a fixed
input; pass --json for machine-readable output and --cert to write the
certificate of the run.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize as io
from .errors import EngineError
from .extension import ext_sdp_witness, extend_tower
from .gamma_maps import map_apply
from .graded_matricial import graded_iso, homog_dim, k0_of_matricial
from .hom_realization import realize_simplicial, realize_tower, verify_hom_spec
from .limits import colimit_eq
from .ordered_simplicial import group_stabilizer, is_order_unit
from .sdp_engine import (
    sdp_witness,
    search_unperforation_witness_m1,
    unperforation_witness,
    verify_sdp_witness,
    verify_unperforation_witness,
)
from .shen import shen_step
from .serialize import dump_json


def _write_cert(path: str | None, data) -> None:
    if path:
        Path(path).write_text(dump_json(data), encoding="utf-8")


def _emit(args, report_lines: list[str], payload: dict) -> None:
    if args.json:
        sys.stdout.write(dump_json(payload))
    else:
        for line in report_lines:
            sys.stdout.write(line + "\n")


def _cmd_check_simplicial(args) -> int:
    payload = io.load_problem(args.path, "simplicial")
    group = io.simplicial_from_json(payload)
    space = group.space
    stab = group_stabilizer(group)
    lines = [
        f"rank: {group.rank}",
        f"group order: {space.parent.order}",
        f"stabilizer subgroup: {[space.parent.name_of(g) for g in space.sub.members]}",
        f"normal: {space.is_normal}",
        f"cosets: {space.num_cosets}",
        f"module stabilizer: {[space.parent.name_of(g) for g in stab.members]}",
    ]
    data = {
        "rank": group.rank,
        "order": space.parent.order,
        "delta": list(space.sub.members),
        "normal": space.is_normal,
        "cosets": space.num_cosets,
        "module_stabilizer": list(stab.members),
    }
    if "unit" in payload:
        unit = io.vector_from_json(group, payload["unit"], context="unit")
        ok = group.cone_contains(unit) and is_order_unit(group, unit)
        lines.append(f"unit is order-unit: {ok}")
        data["unit_is_order_unit"] = ok
    _emit(args, lines, data)
    _write_cert(args.cert, data)
    return 0


def _cmd_sdp_witness(args) -> int:
    payload = io.load_problem(args.path, "relation")
    group, a, x = io.relation_from_json(payload)
    w = sdp_witness(group, a, x)
    check = verify_sdp_witness(group, a, x, w)
    if not check:
        sys.stderr.write(f"witness failed verification: {check.reason}\n")
        return 2
    data = io.sdp_witness_to_json(w)
    _emit(args, [f"decomposition witness with m={w.m}; verified"], data)
    _write_cert(args.cert, data)
    return 0


def _cmd_unperf_witness(args) -> int:
    payload = io.load_problem(args.path, "relation")
    group, a, x = io.unperf_from_json(payload)
    if args.m1:
        found = search_unperforation_witness_m1(group, a, x)
        if found is None:
            _emit(
                args,
                ["no single-term witness inside the coefficient box"],
                {"m1_witness": None},
            )
            return 1
        data = io.unperf_witness_to_json(found)
        _emit(args, ["single-term witness found"], {"m1_witness": data})
        _write_cert(args.cert, data)
        return 0
    w = unperforation_witness(group, a, x)
    check = verify_unperforation_witness(group, a, x, w)
    if not check:
        sys.stderr.write(f"witness failed verification: {check.reason}\n")
        return 2
    data = io.unperf_witness_to_json(w)
    _emit(args, [f"unperforation witness with m={w.m}; verified"], data)
    _write_cert(args.cert, data)
    return 0


def _cmd_shen(args) -> int:
    payload = io.load_problem(args.path, "hom")
    g1 = io.hom_from_json(payload)
    fact = shen_step(g1)
    data = io.shen_to_json(fact)
    _emit(
        args,
        [
            f"factored through rank {fact.middle.rank}",
            "postconditions verified: composition and kernel lattice",
        ],
        data,
    )
    _write_cert(args.cert, data)
    return 0


def _cmd_realize(args) -> int:
    payload = io.load_problem(args.path, "simplicial")
    group = io.simplicial_from_json(payload)
    if args.unit is not None:
        unit_data = json.loads(args.unit)
        unit = io.vector_from_json(group, unit_data, context="--unit")
    elif "unit" in payload:
        unit = io.vector_from_json(group, payload["unit"], context="unit")
    else:
        raise io.SchemaError("realize: provide a unit in the payload or via --unit")
    realized = realize_simplicial(group, unit)
    data = io.ring_to_json(realized.ring)
    lines = [
        f"ring: {realized.ring.describe()}",
        f"components: {realized.ring.num_components}",
        "unit class reproduced exactly",
    ]
    _emit(args, lines, data)
    _write_cert(args.cert, data)
    return 0


def _cmd_realize_tower(args) -> int:
    payload = io.load_problem(args.path, "tower")
    tower = io.tower_from_json(payload)
    realized = realize_tower(tower)
    for spec in realized.specs:
        if not verify_hom_spec(spec):
            sys.stderr.write("spec failed certificate verification\n")
            return 2
    data = {
        "rings": [io.ring_to_json(r) for r in realized.rings],
        "specs": [io.hom_spec_to_json(s) for s in realized.specs],
    }
    lines = [f"level {n}: {r.describe()}" for n, r in enumerate(realized.rings)]
    lines.append(f"{len(realized.specs)} connecting specs; certificates verified")
    _emit(args, lines, data)
    _write_cert(args.cert, data)
    return 0


def _cmd_k0(args) -> int:
    payload = io.load_problem(args.path, "ring")
    ring = io.ring_from_json(payload)
    k0 = k0_of_matricial(ring)
    space = ring.space
    data = {
        "rank": k0.group.rank,
        "delta": list(space.sub.members),
        "unit_class": io.vector_to_json(k0.unit_class),
        "homog_dim_identity": homog_dim(ring, space.parent.identity),
    }
    lines = [
        f"rank: {k0.group.rank}",
        f"stabilizer subgroup: {[space.parent.name_of(g) for g in space.sub.members]}",
        f"unit class: {io.vector_to_json(k0.unit_class)}",
    ]
    _emit(args, lines, data)
    _write_cert(args.cert, data)
    return 0


def _cmd_graded_iso(args) -> int:
    first = io.ring_from_json(io.load_problem(args.path, "ring"))
    second = io.ring_from_json(io.load_problem(args.other, "ring"))
    same = graded_iso(first, second)
    data = {"isomorphic": same}
    _emit(args, [f"graded isomorphic: {same}"], data)
    _write_cert(args.cert, data)
    return 0 if same else 1


def _cmd_extend(args) -> int:
    payload = io.load_problem(args.path, "tower")
    tower = io.tower_from_json(payload)
    ext = extend_tower(tower)
    data = {
        "levels": len(ext.levels),
        "unit": io.ext_elt_to_json(ext.levels[0].order_unit()),
        "squares_verified": True,
    }
    _emit(
        args,
        [f"extended {len(ext.levels)} levels; commuting squares verified"],
        data,
    )
    _write_cert(args.cert, data)
    return 0


def _cmd_ext_sdp(args) -> int:
    payload = io.load_problem(args.path, "extension")
    ext = io.extension_from_json(payload)
    coeffs = payload.get("coeffs")
    pairs = payload.get("pairs")
    if coeffs is None or pairs is None:
        raise io.SchemaError("extension: relation needs 'coeffs' and 'pairs'")
    a = [io.ring_elt_from_json(ext.base.space.parent, c) for c in coeffs]
    elts = [io.ext_elt_from_json(ext, p) for p in pairs]
    w = ext_sdp_witness(ext, a, elts)
    check = verify_sdp_witness(ext, a, elts, w)
    if not check:
        sys.stderr.write(f"witness failed verification: {check.reason}\n")
        return 2
    data = io.sdp_witness_to_json(w)
    _emit(args, [f"extension decomposition witness with m={w.m}; verified"], data)
    _write_cert(args.cert, data)
    return 0


def _cmd_colimit_eq(args) -> int:
    payload = io.load_problem(args.path, "tower")
    tower = io.tower_from_json(payload)
    if "p" not in payload or "q" not in payload:
        raise io.SchemaError("tower: colimit-eq needs elements 'p' and 'q'")
    p = io.colimit_elt_from_json(tower, payload["p"], context="p")
    q = io.colimit_elt_from_json(tower, payload["q"], context="q")
    answer = colimit_eq(tower, p, q, args.horizon)
    data = {"kind": answer.kind, "level": answer.level, "reason": answer.reason}
    _emit(args, [f"colimit equality: {answer.kind} (level {answer.level})"], data)
    _write_cert(args.cert, data)
    if answer.kind == "equal":
        return 0
    if answer.kind == "not_equal_up_to":
        return 1
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamma-k0",
        description="Exact checks and constructions for ordered modules over "
        "finite group rings and graded matricial rings.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--cert", metavar="PATH", help="write the certificate JSON here")
    parser.add_argument(
        "--horizon", type=int, default=8, help="level bound for colimit queries"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-simplicial", help="validate a simplicial descriptor")
    p.add_argument("path")
    p.set_defaults(func=_cmd_check_simplicial)

    p = sub.add_parser("sdp-witness", help="decompose a zero relation")
    p.add_argument("path")
    p.set_defaults(func=_cmd_sdp_witness)

    p = sub.add_parser("unperf-witness", help="unperforation witness for a*x >= 0")
    p.add_argument("path")
    p.add_argument("--m1", action="store_true", help="bounded single-term search instead")
    p.set_defaults(func=_cmd_unperf_witness)

    p = sub.add_parser("shen", help="factor a positive map with controlled kernel")
    p.add_argument("path")
    p.set_defaults(func=_cmd_shen)

    p = sub.add_parser("realize", help="matricial descriptor for a unit-ed group")
    p.add_argument("path")
    p.add_argument("--unit", help="order-unit as a JSON vector")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("realize-tower", help="levelwise ring tower for a group tower")
    p.add_argument("path")
    p.set_defaults(func=_cmd_realize_tower)

    p = sub.add_parser("k0", help="class data of a matricial descriptor")
    p.add_argument("path")
    p.set_defaults(func=_cmd_k0)

    p = sub.add_parser("graded-iso", help="decide graded isomorphism of two descriptors")
    p.add_argument("path")
    p.add_argument("other")
    p.set_defaults(func=_cmd_graded_iso)

    p = sub.add_parser("extend", help="extend an interval-mode tower")
    p.add_argument("path")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("ext-sdp-witness", help="decomposition witness in an extension")
    p.add_argument("path")
    p.set_defaults(func=_cmd_ext_sdp)

    p = sub.add_parser("colimit-eq", help="horizon-bounded colimit equality")
    p.add_argument("path")
    p.set_defaults(func=_cmd_colimit_eq)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except json.JSONDecodeError as exc:
        sys.stderr.write(f"error: invalid JSON ({exc})\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
