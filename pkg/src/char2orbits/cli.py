"""Command line interface: orbit tables, classification, verification.

Subcommands

  orbits       one row per nilpotent orbit of the chosen group
  classify     label a functional given as a matrix file
  normal-form  build the standard witness of a label
  centralizer  dimension and component data of a label's stabilizer
  verify       run the acceptance suites

Exit codes: 0 success, 1 verification failure, 2 invalid request,
3 size bounds exceeded, 4 classify input not nilpotent.

The env var ORBITS_THREADS caps the worker processes the verify
subcommand uses to warm its orbit censuses.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import centralizers as cz
from . import classical as cl
from . import combinatorics as cb
from . import form_modules as fm
from . import odd_split as od
from . import oracle as orc
from . import verify as vf
from .classical import space_for
from .finite_field import field_for

LIST_CAP = 12


class SizeBound(Exception):
    pass


class BadRequest(Exception):
    pass


# ----------------------------------------------------------------------
# table plumbing


def _emit(rows: list[dict], columns: list[str], fmt: str, meta: dict) -> None:
    if fmt == "json":
        print(json.dumps({**meta, "rows": rows}, indent=2))
        return
    flat = [{c: str(r[c]) for c in columns} for r in rows]
    if fmt == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(columns)
        for r in flat:
            w.writerow([r[c] for c in columns])
        return
    widths = {c: max([len(c)] + [len(r[c]) for r in flat]) for c in columns}
    print("  ".join(c.ljust(widths[c]) for c in columns))
    print("  ".join("-" * widths[c] for c in columns))
    for r in flat:
        print("  ".join(r[c].ljust(widths[c]) for c in columns))


# ----------------------------------------------------------------------
# orbits


def _closed_rows(kind: str, n: int) -> list[dict]:
    rows = []
    if kind == "sp":
        for pair in cb.symp_pairs(n):
            blocks = cb.symp_pair_to_symbol(pair)
            rep = cz.symp_report(blocks)
            rows.append({
                "label": cb.format_symp_symbol(blocks),
                "pair": cb.format_pair(pair),
                "dim_orbit": cz.algebra_dim(n) - rep.dim_z,
                "component_group": rep.component_group(),
                "fq_classes": 2 ** rep.comp_rank,
            })
    else:
        for pair in cb.oodd_pairs(n):
            lab = od.pair_to_label(pair)
            closed = od.OddLabel(lab.m, tuple(fm.BlockLabel(b.m, b.l)
                                              for b in lab.blocks))
            rep = cz.oodd_report(pair)
            rows.append({
                "label": od.format_label(closed),
                "pair": cb.format_pair(pair, odd=True),
                "dim_orbit": cz.algebra_dim(n) - rep.dim_z,
                "component_group": rep.component_group(),
                "fq_classes": 2 ** rep.comp_rank,
            })
    return rows


def _rational_rows(kind: str, n: int, q: int) -> list[dict]:
    rows = []
    if kind == "sp":
        for sym in fm.rational_symbols(n):
            rep = cz.symp_report(sym)
            rows.append({
                "label": fm.format_blocks(sym),
                "eps": "".join(b.eps for b in sym),
                "pair": cb.format_pair(cb.symp_symbol_to_pair(
                    [(b.m, b.l) for b in sym])),
                "dim_orbit": cz.algebra_dim(n) - rep.dim_z,
                "component_group": rep.component_group(),
                "stabilizer_leading": rep.point_count_leading(q),
                "label_json": fm.blocks_to_json(sym),
            })
    else:
        for lab in od.rational_labels(n):
            rep = cz.oodd_report(lab.pair())
            rows.append({
                "label": od.format_label(lab),
                "eps": "".join(lab.eps()),
                "pair": cb.format_pair(lab.pair(), odd=True),
                "dim_orbit": cz.algebra_dim(n) - rep.dim_z,
                "component_group": rep.component_group(),
                "stabilizer_leading": rep.point_count_leading(q),
                "label_json": od.label_to_json(lab),
            })
    return rows


def _even_rows(n: int, e: int) -> list[dict]:
    space = space_for("so-even", n, e)
    try:
        group = orc.enumerate_group(space)
    except ValueError:
        raise SizeBound(
            f"so-even over GF({space.field.q}) is answered by exhaustive "
            f"scan, which stops at n = 2; n = {n} is out of reach")
    rows = []
    for r in orc.all_nilpotent_orbits(space, group, classify=False):
        rows.append({
            "orbit_size": r.orbit_size,
            "stabilizer_order": r.stabilizer_order,
            "representative": cl.dual_to_json(space, r.representative)["X"],
        })
    return rows


def _cmd_orbits(args) -> int:
    if args.n > LIST_CAP:
        raise SizeBound(f"orbit listings stop at n = {LIST_CAP}")
    meta = {"kind": args.type, "n": args.n, "q": args.q}
    if args.type == "so-even":
        if args.q == "closed":
            raise BadRequest(
                "no closed-field labels for the even orthogonal family; "
                "use --q 2 or --q 4 for an exhaustive table")
        rows = _even_rows(args.n, 1 if args.q == "2" else 2)
        _emit(rows, ["orbit_size", "stabilizer_order", "representative"],
              args.format, meta)
        return 0
    if args.q == "closed":
        rows = _closed_rows(args.type, args.n)
        cols = ["label", "pair", "dim_orbit", "component_group", "fq_classes"]
    else:
        rows = _rational_rows(args.type, args.n, int(args.q))
        cols = ["label", "eps", "pair", "dim_orbit", "component_group",
                "stabilizer_leading"]
    _emit(rows, cols, args.format, meta)
    return 0


# ----------------------------------------------------------------------
# classify


def _read_matrix(path: str, type_flag: str | None, e: int):
    text = open(path).read()
    if text.lstrip().startswith("{"):
        space, X = cl.dual_from_json(json.loads(text))
        return space, X
    if type_flag is None:
        raise BadRequest("plain matrix files need --type")
    field = field_for(e)
    rows = [line.split() for line in text.splitlines() if line.split()]
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise BadRequest(f"matrix must be square, got {d} lines")
    want_odd = type_flag == "so-odd"
    if d % 2 != want_odd:
        raise BadRequest(f"{type_flag} needs a {'odd' if want_odd else 'even'}"
                         f"-dimensional matrix, got {d}")
    n = d // 2
    if n < 1:
        raise BadRequest("matrix is too small")
    space = space_for(type_flag, n, e)
    X = np.array([[field.parse_element(t) for t in r] for r in rows],
                 dtype=np.uint8)
    return space, X


def _cmd_classify(args) -> int:
    e = 1 if args.q == "2" else 2
    space, X = _read_matrix(args.matrix, args.type, e)
    report: dict = {"kind": space.kind, "n": space.n, "q": space.field.q,
                    "nilpotent": cl.is_nilpotent_functional(space, X)}
    if not report["nilpotent"]:
        print(json.dumps(report, indent=2))
        return 4
    if space.kind == "sp":
        label = fm.classify_fq(fm.build_module(space, X))
        rep = cz.symp_report(label)
        report.update({
            "label": fm.format_blocks(label),
            "label_json": fm.blocks_to_json(label),
            "closed_label": cb.format_symp_symbol([(b.m, b.l) for b in label]),
        })
    elif space.kind == "so-odd":
        label = od.rational_odd_label(od.split_odd_functional(space, X))
        rep = cz.oodd_report(label.pair())
        stripped = od.OddLabel(label.m, tuple(fm.BlockLabel(b.m, b.l)
                                              for b in label.blocks))
        report.update({
            "label": od.format_label(label),
            "label_json": od.label_to_json(label),
            "closed_label": od.format_label(stripped),
        })
    else:
        report.update({
            "label": None,
            "note": "the even orthogonal family carries no label theory "
                    "here; nilpotence was decided by matrix transport"})
        print(json.dumps(report, indent=2))
        return 0
    report["centralizer"] = {
        "dim_z": rep.dim_z,
        "comp_rank": rep.comp_rank,
        "component_group": rep.component_group(),
        "dim_orbit": cz.algebra_dim(space.n) - rep.dim_z,
    }
    print(json.dumps(report, indent=2))
    return 0


# ----------------------------------------------------------------------
# normal-form and centralizer


def _parse_label(kind: str, text: str):
    try:
        if kind == "sp":
            blocks = fm.parse_blocks(text)
            if not fm.validate_blocks(blocks, kind="sp"):
                raise ValueError(f"invalid symplectic label {text!r}")
            return blocks
        label = od.parse_label(text)
        if not cb.oodd_pair_valid(*label.pair()):
            raise ValueError(f"invalid odd label {text!r}")
        return label
    except ValueError as exc:
        raise BadRequest(str(exc))


def _matrix_tokens(field, M) -> list[list[str]]:
    return [[field.format_element(int(x)) for x in row] for row in M]


def _cmd_normal_form(args) -> int:
    e = 1 if args.q == "2" else 2
    field = field_for(e)
    label = _parse_label(args.type, args.label)
    if args.type == "sp":
        mod, X = fm.build_normal_form(label, field)
        out = {"kind": "sp", "q": field.q, "label": fm.format_blocks(label),
               "dim": mod.dim,
               "gram": _matrix_tokens(field, mod.gram),
               "op": _matrix_tokens(field, mod.op),
               "quad": [field.format_element(int(x)) for x in mod.quad],
               "functional": _matrix_tokens(field, X)}
    else:
        space, X = od.odd_witness(label, field)
        out = {"kind": "so-odd", "q": field.q,
               "label": od.format_label(label), "dim": space.d,
               "functional": _matrix_tokens(field, X)}
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for key, val in out.items():
            if isinstance(val, list) and val and isinstance(val[0], list):
                print(f"{key}:")
                for row in val:
                    print("  " + " ".join(row))
            elif isinstance(val, list):
                print(f"{key}: " + " ".join(val))
            else:
                print(f"{key}: {val}")
    return 0


def _cmd_centralizer(args) -> int:
    label = _parse_label(args.type, args.label)
    if args.type == "sp":
        rep = cz.symp_report(label)
        n = sum(b.m for b in label)
        text = fm.format_blocks(label)
    else:
        rep = cz.oodd_report(label.pair())
        n = label.m + sum(b.m for b in label.blocks)
        text = od.format_label(label)
    out = {"kind": args.type, "label": text,
           "dim_z": rep.dim_z, "comp_rank": rep.comp_rank,
           "component_group": rep.component_group(),
           "dim_orbit": cz.algebra_dim(n) - rep.dim_z,
           "points_leading_q2": rep.point_count_leading(2),
           "points_leading_q4": rep.point_count_leading(4)}
    if args.format == "json":
        print(json.dumps(out, indent=2))
    else:
        for key, val in out.items():
            print(f"{key}: {val}")
    return 0


# ----------------------------------------------------------------------
# verify


def _workers() -> int:
    raw = os.environ.get("ORBITS_THREADS", "")
    try:
        w = int(raw)
    except ValueError:
        w = 0
    if w > 0:
        return w
    return min(4, os.cpu_count() or 1)


def _cmd_verify(args) -> int:
    suites = vf.SUITE_NAMES if args.suite == "all" else (args.suite,)
    results = vf.run(suites, max_n=args.max_n, workers=_workers())
    if args.format == "json":
        print(json.dumps({
            "max_n": args.max_n,
            "passed": all(r.passed for r in results),
            "checks": [{"suite": r.suite, "name": r.name, "passed": r.passed,
                        "seconds": round(r.seconds, 3), "detail": r.detail}
                       for r in results]}, indent=2))
    else:
        for r in results:
            print(r.line())
        good = sum(r.passed for r in results)
        print(f"{good}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


# ----------------------------------------------------------------------
# argument wiring


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="char2orbits",
        description="Nilpotent coadjoint orbits of classical groups in "
                    "characteristic two")
    sub = p.add_subparsers(dest="command", required=True)

    po = sub.add_parser("orbits", help="table of nilpotent orbits")
    po.add_argument("--type", required=True,
                    choices=["sp", "so-odd", "so-even"])
    po.add_argument("--n", type=int, required=True, help="group rank, >= 1")
    po.add_argument("--q", default="closed", choices=["closed", "2", "4"],
                    help="closed for geometric classes, 2 or 4 for "
                         "rational orbit classes")
    po.add_argument("--format", default="table",
                    choices=["table", "json", "csv"])
    po.set_defaults(fn=_cmd_orbits)

    pc = sub.add_parser("classify", help="label a functional from a file")
    pc.add_argument("--matrix", required=True,
                    help="matrix file: whitespace grid of field elements, "
                         "or the JSON form written by this package")
    pc.add_argument("--type", choices=["sp", "so-odd", "so-even"])
    pc.add_argument("--q", default="2", choices=["2", "4"])
    pc.set_defaults(fn=_cmd_classify)

    pn = sub.add_parser("normal-form", help="standard witness of a label")
    pn.add_argument("--type", required=True, choices=["sp", "so-odd"])
    pn.add_argument("--label", required=True,
                    help="sp: block text like \"(2)^2_1:d (1)^2_1:0\"; "
                         "so-odd: \"m=1; (1)^2_1:0\" (- for no blocks)")
    pn.add_argument("--q", default="2", choices=["2", "4"])
    pn.add_argument("--format", default="json", choices=["json", "table"])
    pn.set_defaults(fn=_cmd_normal_form)

    pz = sub.add_parser("centralizer", help="stabilizer data of a label")
    pz.add_argument("--type", required=True, choices=["sp", "so-odd"])
    pz.add_argument("--label", required=True)
    pz.add_argument("--format", default="json", choices=["json", "table"])
    pz.set_defaults(fn=_cmd_centralizer)

    pv = sub.add_parser("verify", help="run the acceptance suites")
    pv.add_argument("--suite", default="all",
                    choices=["all"] + list(vf.SUITE_NAMES))
    pv.add_argument("--max-n", type=int, default=None,
                    help="cap the check ranges; default runs each check's "
                         "full documented range")
    pv.add_argument("--format", default="text", choices=["text", "json"])
    pv.set_defaults(fn=_cmd_verify)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if getattr(args, "n", 1) < 1 or (getattr(args, "max_n", None) or 1) < 1:
        print("ranks must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except BadRequest as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except SizeBound as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
