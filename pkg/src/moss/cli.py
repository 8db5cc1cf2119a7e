"""Command line front end.

Subcommands: field (parameters and element table), alpha (residue search
and census), family (emit and verify a complete family), generate (one
square from a generator matrix), verify (check documents), render (text
grid).  Exit codes: 0 success, 1 verification failure, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .family import alpha_census, build_family, derive_lambda, find_alpha, verify_family
from .gf import GF, Field, NotOddPrime, OrderTooLarge
from .planes import parse_mat2
from .serialize import SchemaViolation, SquareDocument
from .sudoku import NotAGenerator, render_grid, verify_orthogonal_bruteforce, verify_sudoku


def _fail(message, code: int = 2) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _field_for(q: int) -> Field:
    return GF(q)


def _cmd_field(args) -> int:
    try:
        field = _field_for(args.q)
    except (NotOddPrime, OrderTooLarge) as exc:
        return _fail(exc)
    print(f"q: {field.q}")
    print(f"p: {field.p}")
    print(f"k: {field.k}")
    print("modulus: " + ",".join(str(c) for c in field.modulus))
    print("index\tcoeffs")
    for e in field.elements():
        print(f"{e.index}\t" + ",".join(str(c) for c in e.coeffs))
    return 0


def _cmd_alpha(args) -> int:
    try:
        field = _field_for(args.q)
    except (NotOddPrime, OrderTooLarge) as exc:
        return _fail(exc)
    alpha = find_alpha(field)
    print(f"alpha: {alpha.index}")
    print(f"lambda: {derive_lambda(field, alpha).index}")
    if args.all:
        census = alpha_census(field)
        print("census: " + ",".join(str(a.index) for a in census))
        print(f"count: {len(census)} (about (q-1)/4 = {(field.q - 1) / 4:g})")
    return 0


def _cmd_generate(args) -> int:
    try:
        field = _field_for(args.q)
    except (NotOddPrime, OrderTooLarge) as exc:
        return _fail(exc)
    try:
        matrix = parse_mat2(field, args.c)
    except ValueError as exc:
        return _fail(exc)
    try:
        doc = SquareDocument.from_matrix(matrix)
    except NotAGenerator as exc:
        return _fail(exc)
    text = doc.to_json()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _load_document(path: Path) -> SquareDocument:
    """Read and validate one document; raises for unreadable or invalid files."""
    return SquareDocument.from_json(path.read_text())


def _cmd_render(args) -> int:
    path = Path(args.file)
    try:
        doc = _load_document(path)
    except OSError as exc:
        return _fail(exc)
    except json.JSONDecodeError as exc:
        return _fail(f"{path}: not valid JSON ({exc})")
    except SchemaViolation as exc:
        return _fail(f"{path}: {exc}")
    print(render_grid(doc.to_grid(), "text"))
    return 0


def _cmd_verify(args) -> int:
    loaded: list[tuple[Path, SquareDocument]] = []
    failures = 0
    for name in args.files:
        path = Path(name)
        try:
            doc = _load_document(path)
        except OSError as exc:
            return _fail(exc)
        except json.JSONDecodeError as exc:
            return _fail(f"{path}: not valid JSON ({exc})")
        except SchemaViolation as exc:
            print(f"FAIL {path}: {exc}")
            failures += 1
            continue
        report = verify_sudoku(doc.to_grid())
        if report.ok:
            print(f"OK {path}")
            loaded.append((path, doc))
        else:
            print(f"FAIL {path}: {report!r}")
            failures += 1
    orders = {doc.q for _, doc in loaded}
    if len(orders) > 1:
        return _fail("files mix different orders: " + ", ".join(str(q) for q in sorted(orders)))
    grids = [(path, doc.to_grid()) for path, doc in loaded]
    pairs = 0
    for i in range(len(grids)):
        for j in range(i + 1, len(grids)):
            pairs += 1
            if not verify_orthogonal_bruteforce(grids[i][1], grids[j][1]):
                print(f"FAIL {grids[i][0]} vs {grids[j][0]}: not orthogonal")
                failures += 1
    print(f"{len(grids)} squares ok, {pairs} pairs checked, {failures} failures")
    return 1 if failures else 0


def _cmd_family(args) -> int:
    try:
        field = _field_for(args.q)
    except (NotOddPrime, OrderTooLarge) as exc:
        return _fail(exc)
    fam = build_family(field)
    docs = [SquareDocument.from_matrix(m) for m in fam]
    if args.format == "json":
        contents = [doc.to_json() for doc in docs]
        ext = "json"
    else:
        style = "text" if args.format == "grid" else "csv"
        contents = [render_grid(doc.to_grid(), style) + "\n" for doc in docs]
        ext = "txt" if args.format == "grid" else "csv"
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        width = max(2, len(str(fam.size - 1)))
        for i, content in enumerate(contents):
            (outdir / f"square_{i:0{width}d}.{ext}").write_text(content)
        print(f"wrote {fam.size} squares to {outdir}")
    else:
        for i, content in enumerate(contents):
            if i and args.format != "json":
                print()
            sys.stdout.write(content)
    if args.verify:
        try:
            report = verify_family(fam, args.verify)
        except ValueError as exc:
            return _fail(exc)
        if not report.ok:
            for kind, members in report.violations:
                print(f"violation: {kind} {','.join(str(m) for m in members)}")
            return 1
        print(f"{report.size} squares, {report.pairs} orthogonal pairs")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moss",
        description="Construct and verify complete families of mutually "
                    "orthogonal sudoku squares of order q^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print field parameters and the element table")
    p.add_argument("--q", type=int, required=True, help="field order, an odd prime power")
    p.set_defaults(func=_cmd_field)

    p = sub.add_parser("alpha", help="print the residue parameters alpha and lambda")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--all", action="store_true", help="also print the full census")
    p.set_defaults(func=_cmd_alpha)

    p = sub.add_parser("family", help="emit the complete family of q(q-1) squares")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=("grid", "json", "csv"), default="json")
    p.add_argument("--out", help="directory to write one file per square")
    p.add_argument("--verify", choices=("fast", "bruteforce"),
                   help="verify the family and print a report")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("generate", help="emit one square document from a generator matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--c", required=True, metavar="a,b;c,d",
                   help="row-major generator matrix of element indices")
    p.add_argument("--out", help="file to write instead of stdout")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="verify square documents and their orthogonality")
    p.add_argument("--files", nargs="+", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="print a document's grid as text")
    p.add_argument("--file", required=True)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    return args.func(args)


def entry() -> None:
    sys.exit(main())
