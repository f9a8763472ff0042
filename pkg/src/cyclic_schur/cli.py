"""Command-line surface: enumerate, count, verify, classify, table, formula, oracle.

Exit codes: 0 success/match, 2 reference mismatch, 3 resource budget
exceeded, 4 parse error, 5 formula side-condition violation.  Flags may
also be set through environment variables with the SCHUR_ prefix
(SCHUR_JOBS, SCHUR_BUDGET_N, SCHUR_BUDGET_RINGS, SCHUR_ORACLE_CEILING).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import enumerator as en
from . import formulas as fm
from .enumerator import BudgetError, Enumerator, brute_force_enumerate, classify
from .formulas import OmegaRecord, SideConditionError
from .reference import reference_omega
from .rings import Partition, SchurRing, canonicalize, structure_constants, verify

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_BUDGET = 3
EXIT_PARSE = 4
EXIT_SIDE_CONDITION = 5


def _env_int(name: str, default: int) -> int:
    val = os.environ.get(name)
    return int(val) if val else default


def ring_to_doc(ring: SchurRing, with_classification=False, with_constants=False) -> dict:
    doc = {"n": ring.n, "classes": [list(b) for b in ring.blocks]}
    if with_classification:
        c = classify(ring)
        doc["classification"] = {
            "is_trivial": c.is_trivial,
            "is_automorphic": c.is_automorphic,
            "is_direct_decomposable": c.is_direct_decomposable,
            "is_wedge_decomposable": c.is_wedge_decomposable,
            "core_order": c.core_order,
            "families": list(c.families),
        }
    if with_constants:
        sc = structure_constants(ring)
        doc["structure_constants"] = [[list(row) for row in plane] for plane in sc.table]
    return doc


def doc_to_partition(doc) -> Partition:
    """Parse a ring document; raises ValueError on any malformation."""
    if not isinstance(doc, dict):
        raise ValueError(f"document must be an object, got {type(doc).__name__}")
    if "n" not in doc or "classes" not in doc:
        raise ValueError("document must contain 'n' and 'classes'")
    n = doc["n"]
    classes = doc["classes"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(classes, list) or not classes:
        raise ValueError("'classes' must be a non-empty list of residue arrays")
    return canonicalize(n, classes)


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _make_enumerator(args) -> Enumerator:
    return Enumerator(max_n=args.budget_n, max_rings=args.budget_rings)


def cmd_count(args) -> int:
    enum = _make_enumerator(args)
    try:
        omega = enum.omega(args.n)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.reference:
        ref = reference_omega(args.n)
        if ref is None:
            print(f"{args.n} {omega}")
            return EXIT_OK
        verdict = "MATCH" if omega == ref else "MISMATCH"
        print(f"{args.n} {omega} {ref} {verdict}")
        return EXIT_OK if omega == ref else EXIT_MISMATCH
    print(f"{args.n} {omega}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    enum = _make_enumerator(args)
    try:
        rings = enum.rings(args.n)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    docs = [
        ring_to_doc(r, with_classification=args.classify, with_constants=args.constants)
        for r in rings
    ]
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        if args.format == "jsonl":
            for doc in docs:
                print(_dump(doc), file=out)
        else:
            print(json.dumps(docs, sort_keys=True, separators=(",", ":")), file=out)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = open(args.path).read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        docs = _parse_documents(text)
        partitions = [doc_to_partition(doc) for doc in docs]
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    all_ok = True
    for p in partitions:
        report = verify(p)
        if report:
            print(f"n={p.n} accepted")
        else:
            all_ok = False
            print(f"n={p.n} axiom-{report.axiom} violation: {report.witness}")
    return EXIT_OK if all_ok else 1


def _parse_documents(text: str) -> list:
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty input")
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError:
        # fall back to JSON lines
        docs = []
        for i, line in enumerate(stripped.splitlines(), 1):
            if not line.strip():
                continue
            try:
                docs.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {i}: {exc}") from exc
        return docs
    return data if isinstance(data, list) else [data]


def _table_row(enum: Enumerator, n: int) -> OmegaRecord:
    ref = reference_omega(n)
    try:
        omega = enum.omega(n)
    except BudgetError:
        return OmegaRecord(n, -1, "skipped", None)
    match = None if ref is None else omega == ref
    return OmegaRecord(n, omega, "enumerated", match)


def cmd_table(args) -> int:
    enum = _make_enumerator(args)
    ns = list(range(args.start, args.end + 1))
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(lambda n: _table_row(enum, n), ns))
    else:
        records = [_table_row(enum, n) for n in ns]
    rows = []
    mismatches = 0
    for rec in records:
        ref = reference_omega(rec.n)
        ref_s = "" if ref is None else str(ref)
        if rec.method == "skipped":
            rows.append((rec.n, "", "skipped", ref_s, "SKIPPED"))
            continue
        if rec.reference_match is None:
            verdict = ""
        elif rec.reference_match:
            verdict = "MATCH"
        else:
            verdict = "MISMATCH"
            mismatches += 1
        rows.append((rec.n, str(rec.omega), rec.method, ref_s, verdict))
    if args.format == "json":
        payload = [
            {"n": n, "omega": om, "method": me, "reference": re_, "match": ma}
            for n, om, me, re_, ma in rows
        ]
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print("n,omega,method,reference,match")
        for n, om, me, re_, ma in rows:
            print(f"{n},{om},{me},{re_},{ma}")
    print(f"mismatches: {mismatches}", file=sys.stderr)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _formula_value(args) -> tuple[int, int]:
    """(n, formula value) for the requested family."""
    family = args.family
    p, q, k = args.p, args.q, args.k
    if family == "p":
        _require(p is not None, "p is required")
        return p, fm.omega_prime(p)
    if family == "p^k":
        _require(p is not None and k is not None, "p and k are required")
        return p**k, fm.omega_prime_power(p, k)
    if family == "2^k":
        _require(k is not None, "k is required")
        return 2**k, fm.omega_two_power(k)
    if family == "pq":
        _require(p is not None and q is not None, "p and q are required")
        return p * q, fm.omega_pq(p, q)
    _require(p is not None, "p is required")
    base = {"2p": 2, "3p": 3, "5p": 5, "4p": 4, "2p^2": 2 * p, "2p^3": 2 * p * p}
    return base[family] * p, fm.omega_special(family, p)


def _require(cond: bool, message: str):
    if not cond:
        raise SideConditionError(message)


def cmd_formula(args) -> int:
    try:
        n, value = _formula_value(args)
    except SideConditionError as exc:
        print(f"side condition violated: {exc}", file=sys.stderr)
        return EXIT_SIDE_CONDITION
    print(value)
    if args.check:
        enum = _make_enumerator(args)
        try:
            omega = enum.omega(n)
        except BudgetError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        verdict = "MATCH" if omega == value else "MISMATCH"
        print(f"enumerated {omega} {verdict}")
        return EXIT_OK if omega == value else EXIT_MISMATCH
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        brute = brute_force_enumerate(args.n, ceiling=args.oracle_ceiling)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    recursive = en.enumerate_all(args.n, _make_enumerator(args))
    brute_set = {r.blocks for r in brute}
    rec_set = {r.blocks for r in recursive}
    if brute_set == rec_set:
        print(f"{len(brute)} {len(recursive)} EQUAL")
        return EXIT_OK
    diff = sorted(brute_set ^ rec_set)[0]
    side = "oracle-only" if diff in brute_set else "recursive-only"
    print(f"{len(brute)} {len(recursive)} DIFFER first={list(diff)} ({side})")
    return 1


def _add_budget_flags(p: argparse.ArgumentParser):
    p.add_argument(
        "--budget-n",
        type=int,
        default=_env_int("SCHUR_BUDGET_N", en.DEFAULT_MAX_N),
        help="largest order the enumerator may recurse into",
    )
    p.add_argument(
        "--budget-rings",
        type=int,
        default=_env_int("SCHUR_BUDGET_RINGS", en.DEFAULT_MAX_RINGS),
        help="largest ring count per order",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur", description="Exact enumeration of Schur rings over Z_n"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the number of Schur rings over Z_n")
    p.add_argument("n", type=int)
    p.add_argument("--reference", action="store_true", help="compare to the reference table")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="emit all Schur rings over Z_n as documents")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "jsonl"), default="json")
    p.add_argument("--classify", action="store_true", help="add family flags per ring")
    p.add_argument("--constants", action="store_true", help="add structure constants per ring")
    p.add_argument("--out", help="write to a file instead of stdout")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="axiom-check ring documents from a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate counts against the reference table")
    p.add_argument("start", type=int)
    p.add_argument("end", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--reference", action="store_true", help="accepted for symmetry; the table always carries reference columns")
    p.add_argument("--jobs", type=int, default=_env_int("SCHUR_JOBS", 1))
    _add_budget_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("formula", help="evaluate a closed-form count")
    p.add_argument("family", choices=("p", "p^k", "2^k", "pq") + fm.SPECIAL_FAMILIES)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--check", action="store_true", help="compare against the enumerator")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("oracle", help="compare brute force against the recursive enumerator")
    p.add_argument("n", type=int)
    p.add_argument(
        "--oracle-ceiling",
        type=int,
        default=_env_int("SCHUR_ORACLE_CEILING", en.DEFAULT_ORACLE_CEILING),
    )
    _add_budget_flags(p)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
