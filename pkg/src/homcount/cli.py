"""Command-line front end: ``homcount {count,enumerate,classify,verify}``.

Groups are written as comma-separated moduli ("4,6"); a bare integer is a
cyclic group.  Exit codes: 0 success, 1 verification disagreement, 2 usage
or precondition error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import prod

from . import cyclic, divisibility, products
from .products import BudgetExceeded, ProductGroup

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2

MAX_WORK_CAP = 10**8
COUNT_FIELDS = ("kind", "args", "count", "oracle", "status")


class UsageError(Exception):
    pass


def parse_group(text: str) -> ProductGroup:
    try:
        moduli = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed group descriptor {text!r}") from None
    if any(m < 1 for m in moduli):
        raise UsageError(f"moduli must be positive in {text!r}")
    return ProductGroup(moduli)


def parse_positive(text: str, what: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise UsageError(f"{what} must be positive, got {value}")
    return value


def _expect_args(args: list[str], count: int, usage: str) -> None:
    if len(args) != count:
        raise UsageError(f"expected {usage}")


def _pair(args: list[str], kind: str) -> tuple[ProductGroup, ProductGroup]:
    _expect_args(args, 2, f"{kind} SOURCE TARGET")
    G, H = parse_group(args[0]), parse_group(args[1])
    if G.k != H.k:
        raise UsageError(f"source has {G.k} factors but target has {H.k}")
    return G, H


def _ring_count(G: ProductGroup, H: ProductGroup) -> int:
    # closed form where proven (n | m), enumeration elsewhere
    total = 1
    for m, n in zip(G.moduli, H.moduli):
        if m % n == 0:
            total *= cyclic.count_ring_homs_closed_form(m, n)
        else:
            total *= len(cyclic.enumerate_ring_homs(m, n))
    return total


def _count(kind: str, args: list[str], budget: int) -> tuple[int, callable, int]:
    """Return (count, oracle thunk, oracle work estimate)."""
    if kind == "surj-group":
        G, H = _pair(args, kind)
        if G.k == 1:
            value = cyclic.count_surjective_group_homs(G.moduli[0], H.moduli[0])
        else:
            value = products.count_componentwise_surjective_homs(G, H)
        oracle = lambda: prod(  # noqa: E731
            len(cyclic.surjective_homs_oracle(m, n)) for m, n in zip(G.moduli, H.moduli)
        )
        return value, oracle, sum(H.moduli)
    if kind == "ring":
        G, H = _pair(args, kind)
        oracle = lambda: prod(  # noqa: E731
            len(cyclic.enumerate_ring_homs(m, n)) for m, n in zip(G.moduli, H.moduli)
        )
        return _ring_count(G, H), oracle, sum(H.moduli)
    if kind == "idempotents":
        _expect_args(args, 1, "idempotents GROUP")
        R = parse_group(args[0])
        return (
            products.count_product_idempotents(R),
            lambda: len(products.idempotents_by_scan(R, budget)),
            R.order,
        )
    if kind == "order-d":
        _expect_args(args, 2, "order-d GROUP D")
        R, d = parse_group(args[0]), parse_positive(args[1], "d")
        return (
            products.count_elements_of_order(R, d),
            lambda: products.order_distribution_by_scan(R, budget).get(d, 0),
            R.order,
        )
    if kind == "max-order":
        _expect_args(args, 1, "max-order GROUP")
        R = parse_group(args[0])
        e = products.group_exponent(R)
        return (
            products.count_maximal_order_elements(R),
            lambda: products.order_distribution_by_scan(R, budget).get(e, 0),
            R.order,
        )
    raise UsageError(f"unknown count kind {kind!r}")


def _emit_table(rows: list[dict], fields, fmt: str, out) -> None:
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps({f: row[f] for f in fields}, separators=(", ", ": ")) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow(divisibility._csv_cell(row[f]) for f in fields)
        out.write(buf.getvalue())
    else:
        for row in rows:
            out.write(" ".join(f"{f}={row[f]}" for f in fields) + "\n")


def cmd_count(ns, out) -> int:
    value, oracle, work = _count(ns.kind, ns.args, ns.max_work)
    oracle_value = None
    status = "not-run"
    if ns.oracle:
        if work > ns.max_work:
            status = "unverified"
        else:
            try:
                oracle_value = oracle()
            except BudgetExceeded:
                status = "unverified"
            else:
                status = "agree" if oracle_value == value else "disagree"

    if ns.format == "plain":
        line = str(value)
        if status == "unverified":
            line += " (unverified: oracle budget exceeded)"
        elif status != "not-run":
            line += f" (oracle {oracle_value}: {status})"
        out.write(line + "\n")
    else:
        row = {"kind": ns.kind, "args": " ".join(ns.args), "count": value,
               "oracle": oracle_value, "status": status}
        _emit_table([row], COUNT_FIELDS, ns.format, out)
    return EXIT_DISAGREE if status == "disagree" else EXIT_OK


def _format_residues(x) -> str:
    return ",".join(map(str, x)) if isinstance(x, tuple) else str(x)


def cmd_enumerate(ns, out) -> int:
    kind, args = ns.kind, ns.args
    if kind in ("homs", "ring-homs"):
        _expect_args(args, 2, f"{kind} M N")
        m, n = parse_positive(args[0], "m"), parse_positive(args[1], "n")
        if n > ns.max_work:
            raise BudgetExceeded(f"scanning Z_{n} exceeds budget {ns.max_work}")
        fn = cyclic.enumerate_group_homs if kind == "homs" else cyclic.enumerate_ring_homs
        items = [w.generator_image for w in fn(m, n)]
    elif kind == "idempotents":
        _expect_args(args, 1, "idempotents GROUP")
        R = parse_group(args[0])
        if R.k == 1:
            if R.order > ns.max_work:
                raise BudgetExceeded(f"scanning Z_{R.order} exceeds budget {ns.max_work}")
            items = cyclic.enumerate_idempotents(R.order)
        else:
            items = products.enumerate_product_idempotents(R, ns.max_work)
    else:
        raise UsageError(f"unknown enumerate kind {kind!r}")

    if ns.format == "plain":
        for x in items:
            out.write(_format_residues(x) + "\n")
    else:
        rows = [{"kind": kind, "args": " ".join(args), "index": i, "value": _format_residues(x)}
                for i, x in enumerate(items)]
        _emit_table(rows, ("kind", "args", "index", "value"), ns.format, out)
    return EXIT_OK


def cmd_classify(ns, out) -> int:
    n = parse_positive(ns.n, "n")
    rec = divisibility.check_main_theorem(n)
    row = rec.as_row()
    if ns.format == "plain":
        verdict = "exceptional" if rec.exceptional_flag else "regular"
        relation = "|" if rec.divides else "does not divide"
        out.write(f"n={n}: {verdict}, {rec.ring_hom_count} {relation} {rec.phi}\n")
        for key, value in row.items():
            out.write(f"  {key}: {value}\n")
    else:
        _emit_table([row], divisibility.CYCLIC_FIELDS, ns.format, out)
    return EXIT_OK if rec.agrees else EXIT_DISAGREE


def cmd_verify(ns, out) -> int:
    fmt = "jsonl" if ns.format == "plain" else ns.format
    if ns.scope == "cyclic":
        if ns.max is None or ns.max < 2:
            raise UsageError("verify cyclic needs --max >= 2")
        try:
            report = divisibility.sweep_cyclic(ns.max)
        except divisibility.VerificationError as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            return EXIT_DISAGREE
    else:
        try:
            report = divisibility.sweep_products(ns.max_k, ns.max_mod, ns.max_work)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    text = report.to_jsonl() if fmt == "jsonl" else report.to_csv()
    if ns.output:
        try:
            with open(ns.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {ns.output}: {exc}") from None
    else:
        out.write(text)
    summary = " ".join(f"{k}={v}" for k, v in report.summary.items())
    print(f"{report.scope}: {summary}", file=sys.stderr)
    return EXIT_OK


def _global_flags(defaults: bool) -> argparse.ArgumentParser:
    # subcommands repeat the flags with suppressed defaults, so they work on either side
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "jsonl", "csv"), default=d("plain"))
    common.add_argument("--output", metavar="PATH", default=d(None), help="write verify reports here")
    common.add_argument("--oracle", action="store_true", default=d(False),
                        help="cross-check counts by brute force")
    common.add_argument("--max-work", type=int, default=d(products.DEFAULT_BUDGET),
                        help=f"enumeration budget (capped at {MAX_WORK_CAP})")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcount",
        description="Count and cross-check homomorphisms between finite cyclic groups and rings.",
        parents=[_global_flags(True)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub_common = _global_flags(False)
    add = lambda name, **kw: sub.add_parser(name, parents=[sub_common], **kw)  # noqa: E731

    p = add("count", help="print a count")
    p.add_argument("kind", choices=("surj-group", "ring", "idempotents", "order-d", "max-order"))
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_count)

    p = add("enumerate", help="list witnesses one per line")
    p.add_argument("kind", choices=("homs", "ring-homs", "idempotents"))
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_enumerate)

    p = add("classify", help="classify one modulus")
    p.add_argument("n")
    p.set_defaults(func=cmd_classify)

    p = add("verify", help="run a verification sweep")
    p.add_argument("scope", choices=("cyclic", "products"))
    p.add_argument("--max", type=int, help="largest n for the cyclic sweep")
    p.add_argument("--max-k", type=int, default=divisibility.MAX_PRODUCT_K)
    p.add_argument("--max-mod", type=int, default=divisibility.MAX_PRODUCT_MODULUS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if ns.max_work < 1:
        print("error: --max-work must be positive", file=sys.stderr)
        return EXIT_USAGE
    ns.max_work = min(ns.max_work, MAX_WORK_CAP)
    try:
        return ns.func(ns, out)
    except (UsageError, BudgetExceeded, cyclic.PreconditionError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
