"""Command-line front end: ``facemagic <command> ...``.

Reports are printed to stdout as JSON; documents go to stdout or ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from facemagic import document as docfmt
from facemagic.construct import FactorizationSequence, Orientation, build, tau
from facemagic.formulas import beta, count_value_mid, lower_bound_total, lower_bound_value_plus
from facemagic.grid import Dims, Symmetry
from facemagic.labeling import (
    LabelingError, apply_symmetry_labeling, complement, is_bicentrally_balanced, is_standard, verify,
)
from facemagic.search import SearchConfig, conjecture_check, default_workers, enumerate_all
from facemagic.transform import (
    permute_column_pairs, permute_row_pairs, standardize, swap_columns, swap_rows,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_PARSE = 4
EXIT_BUDGET = 5


class ValidationFailure(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _write_doc(doc: docfmt.LabelingDocument, args) -> None:
    text = docfmt.dumps(doc, args.file_order)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _magic_flags(L) -> dict:
    rep = verify(L)
    out = {
        "is_magic": rep.is_magic,
        "S": rep.S,
        "D1": rep.D1,
        "D2": rep.D2,
        "value_class": rep.value_class.value,
    }
    if L.dims.odd:
        bb = rep.is_magic and is_bicentrally_balanced(L)
        out["bicentrally_balanced"] = bb
        out["standard"] = bb and is_standard(L)
    if not rep.is_magic:
        out["face_sums"] = {str(s): c for s, c in rep.face_sums}
    return out


def cmd_construct(args) -> int:
    orientation = Orientation(args.orientation)
    try:
        F = FactorizationSequence(orientation, tuple(args.sequence))
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from None
    d = F.dims
    if (args.m is not None and args.m != d.m) or (args.n is not None and args.n != d.n):
        raise ValidationFailure(f"sequence {F} builds a {d.m}x{d.n} grid, not {args.m}x{args.n}")
    if not d.odd:
        raise ValidationFailure("constructions need odd dimensions")
    L = build(F)
    rep = verify(L)
    if not rep.is_magic:
        raise ValidationFailure("constructed labeling is not magic")
    gen = ("hbbl" if orientation is Orientation.HORIZONTAL else "vbbl") + f":{F}"
    _write_doc(docfmt.LabelingDocument(L, {"S": str(rep.S), "generator": gen}), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = docfmt.load(args.path, args.file_order)
    _emit({"command": "verify", "path": str(args.path), "m": doc.dims.m, "n": doc.dims.n,
           **_magic_flags(doc.labeling)})
    return EXIT_OK


def cmd_transform(args) -> int:
    doc = docfmt.load(args.path, args.file_order)
    L = doc.labeling
    before = verify(L)
    try:
        if args.standardize:
            out, what = standardize(L), "standardize"
        elif args.complement:
            out, what = complement(L), "complement"
        elif args.swap_cols is not None:
            out, what = swap_columns(L, args.swap_cols), f"swap-cols:{args.swap_cols}"
        elif args.swap_rows is not None:
            out, what = swap_rows(L, args.swap_rows), f"swap-rows:{args.swap_rows}"
        elif args.perm_cols is not None:
            out, what = permute_column_pairs(L, args.perm_cols), f"perm-cols:{args.perm_cols}"
        elif args.perm_rows is not None:
            out, what = permute_row_pairs(L, args.perm_rows), f"perm-rows:{args.perm_rows}"
        else:
            out, what = apply_symmetry_labeling(Symmetry.parse(args.symmetry), L), f"symmetry:{args.symmetry}"
    except ValueError as exc:
        raise ValidationFailure(str(exc)) from None
    after = verify(out)
    if before.is_magic != after.is_magic:
        raise ValidationFailure(f"{what} changed the magic property")
    meta = {"generator": f"{doc.metadata.get('generator', args.path)}|{what}"}
    if after.is_magic:
        meta["S"] = str(after.S)
    _write_doc(docfmt.LabelingDocument(out, meta), args)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    dims = Dims(args.m, args.n)
    value = None if args.value == "all" else int(args.value)
    workers = args.workers if args.workers is not None else default_workers()
    cfg = SearchConfig(dims, value_filter=value, up_to_symmetry=args.up_to_symmetry,
                       pruning=args.pruning, worker_count=workers, max_nodes=args.max_nodes)
    report = enumerate_all(cfg)
    summary = report.summary()
    summary["total"] = report.total_up_to_symmetry if args.up_to_symmetry else report.total_raw
    if args.emit_dir:
        out = Path(args.emit_dir)
        out.mkdir(parents=True, exist_ok=True)
        source = report.representatives if args.up_to_symmetry else report.labelings
        for S, labs in sorted(source.items()):
            for k, lab in enumerate(labs):
                L = docfmt.Labeling(dims, lab)
                doc = docfmt.LabelingDocument(L, {"S": str(S), "generator": f"enumerate:{k}"})
                docfmt.dump(doc, out / f"P{dims.m}x{dims.n}_S{S}_{k:04d}.txt", args.file_order)
    _emit({"command": "enumerate",
           "config": {"m": dims.m, "n": dims.n, "value": args.value, "up_to_symmetry": args.up_to_symmetry,
                      "pruning": args.pruning, "workers": workers, "max_nodes": args.max_nodes},
           **summary,
           "nodes": report.nodes,
           "wall_time_s": round(report.wall_time, 3)})
    return EXIT_OK if report.complete else EXIT_BUDGET


def cmd_count(args) -> int:
    m, n = args.m, args.n
    if m < 3 or n < 3 or m % 2 == 0 or n % 2 == 0:
        raise ValidationFailure(f"count needs odd m, n >= 3, got {m}x{n}")
    _emit({"command": "count", "m": m, "n": n,
           "tau_mn": tau(m, n), "tau_nm": tau(n, m),
           "beta_m": beta(m), "beta_n": beta(n),
           "count_value_mid": count_value_mid(m, n),
           "lower_bound_value_plus": lower_bound_value_plus(m, n),
           "lower_bound_total": lower_bound_total(m, n)})
    return EXIT_OK


def cmd_render(args) -> int:
    doc = docfmt.load(args.path, args.file_order)
    if args.format == "csv":
        sys.stdout.write(docfmt.to_csv(doc.labeling, args.csv_order))
    else:
        sys.stdout.write(docfmt.render_ascii(doc.labeling, table=args.table_order))
    return EXIT_OK


def cmd_conjecture(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    rep = conjecture_check(args.m, args.n, max_nodes=args.max_nodes, pruning=args.pruning, workers=workers)
    _emit({"command": "conjecture", **rep.summary()})
    return EXIT_BUDGET if rep.verdict == "inconclusive" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facemagic", description="C4-face-magic projective grid labelings")
    sub = p.add_subparsers(dest="command", required=True)

    def with_order(sp):
        sp.add_argument("--file-order", choices=("ascending", "descending"), default="ascending",
                        help="row order of document files: ascending lists j=1 first")
        return sp

    c = with_order(sub.add_parser("construct", help="build an HBBL/VBBL labeling"))
    c.add_argument("--orientation", choices=("horizontal", "vertical"), required=True)
    c.add_argument("--sequence", type=_ints, required=True, help="comma-separated factors, e.g. 3,3,3,3")
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = with_order(sub.add_parser("verify", help="check a labeling document"))
    v.add_argument("path")
    v.set_defaults(func=cmd_verify)

    t = with_order(sub.add_parser("transform", help="apply one labeling operation"))
    t.add_argument("path")
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--standardize", action="store_true")
    g.add_argument("--complement", action="store_true")
    g.add_argument("--swap-cols", type=_ints, metavar="MASK")
    g.add_argument("--swap-rows", type=_ints, metavar="MASK")
    g.add_argument("--perm-cols", type=_ints, metavar="PERM")
    g.add_argument("--perm-rows", type=_ints, metavar="PERM")
    g.add_argument("--symmetry", choices=[s.value for s in Symmetry])
    t.add_argument("--out")
    t.set_defaults(func=cmd_transform)

    e = with_order(sub.add_parser("enumerate", help="exhaustive search"))
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--value", default="all")
    e.add_argument("--up-to-symmetry", action="store_true")
    e.add_argument("--pruning", choices=("pure", "lemma"), default="lemma")
    e.add_argument("--workers", type=int)
    e.add_argument("--max-nodes", type=int, default=0, help="node budget, 0 for unlimited")
    e.add_argument("--emit-dir")
    e.set_defaults(func=cmd_enumerate)

    k = sub.add_parser("count", help="evaluate the counting formulas")
    k.add_argument("--m", type=int, required=True)
    k.add_argument("--n", type=int, required=True)
    k.set_defaults(func=cmd_count)

    r = with_order(sub.add_parser("render", help="print a labeling"))
    r.add_argument("path")
    r.add_argument("--format", choices=("ascii", "csv"), default="ascii")
    r.add_argument("--table-order", action="store_true", help="boxed checkerboard, j=n at the top")
    r.add_argument("--csv-order", choices=("ascending", "descending"), default="ascending")
    r.set_defaults(func=cmd_render)

    q = sub.add_parser("conjecture", help="compare enumerated standard labelings with the constructions")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--pruning", choices=("pure", "lemma"), default="lemma")
    q.add_argument("--workers", type=int)
    q.add_argument("--max-nodes", type=int, default=0)
    q.set_defaults(func=cmd_conjecture)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except docfmt.DocumentError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LabelingError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValidationFailure, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
