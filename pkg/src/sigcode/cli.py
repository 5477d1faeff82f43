"""Command-line interface.

One subcommand per module: verify, construct, decode, bounds, search,
simulate, examples, reproduce.  Every command prints a single JSON
document on stdout.  Exit codes: 0 pass/success, 1 property failure or
decode diagnostic, 2 usage error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import bound_report
from .channel import AttackSpec, attack, noisy_attack, resolve_weights
from .construct import (
    BUILTIN_EXAMPLES,
    EXAMPLE_NOTES,
    ConcatenationRecipe,
    ProductRecipe,
    builtin_example,
    concatenate,
    example_recipe,
    identity_superimposed,
    kronecker,
    polarity_code,
)
from .core import (
    BinaryCode,
    CodeError,
    GroupedCode,
    QaryCode,
    dumps_code,
    format_rational,
    format_rational_vector,
    loads_exact,
    parse_code,
    parse_rational,
    parse_rational_vector,
)
from .decode import (
    MultipleCoalitionsError,
    NoCoalitionError,
    decode_concatenated,
    decode_generic,
    decode_product,
)
from .search import SearchConfig, max_code, max_weight2_via_graph
from .verify import (
    check_bipartite_girth,
    check_bt,
    check_complete_traceability,
    check_fpc,
    check_frameproof_signature,
    check_signature,
    check_superimposed,
    check_two_level,
    check_weakly_union_free,
    check_weight2_graph,
    check_weight3_links,
    family_of,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(doc: dict, quiet: bool) -> None:
    if quiet:
        doc = {"verdict": doc.get("verdict", doc.get("status", "ok"))}
    json.dump(doc, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _read_code(path: str, columns: bool = False):
    text = Path(path).read_text()
    return parse_code(text, columns=columns)


def _read_recipe(path: str):
    base = Path(path).parent
    doc = loads_exact(Path(path).read_text())
    kind = doc.get("type")
    if kind == "concatenation":
        outer = _read_code(base / doc["outer"])
        inner = _read_code(base / doc["inner"])
        if not isinstance(outer, QaryCode):
            outer = QaryCode(outer.n, 2, outer.codewords)
        if isinstance(inner, GroupedCode):
            inner = inner.code
        return ConcatenationRecipe(outer, inner, tuple(doc["bijection"]),
                                   claimed_t=doc.get("t"))
    if kind == "product":
        sup = _read_code(base / doc["superimposed"])
        sig = _read_code(base / doc["signature"])
        if isinstance(sup, GroupedCode):
            sup = sup.code
        if isinstance(sig, GroupedCode):
            sig = sig.code
        return ProductRecipe(sup, sig, claimed_t=doc.get("t"))
    raise CodeError(f"unknown recipe type {kind!r}")


def _default_threads(value):
    if value is not None:
        return value
    env = os.environ.get("SIGCODE_THREADS")
    return int(env) if env else 1


# ---------------------------------------------------------------------------
# subcommands


def _cmd_verify(args) -> int:
    code = _read_code(args.code, columns=args.columns)
    binary = code.code if isinstance(code, GroupedCode) else code
    prop = args.property
    if prop == "signature":
        rep = check_signature(binary, args.t, fast_paths=not args.no_fast_paths,
                              exhaustive=args.exhaustive)
    elif prop == "bt":
        rep = check_bt(binary, args.t, exhaustive=args.exhaustive)
    elif prop == "fpc":
        rep = check_fpc(code if isinstance(code, QaryCode) else binary, args.t)
    elif prop == "superimposed":
        rep = check_superimposed(binary, args.t)
    elif prop == "wuf":
        rep = check_weakly_union_free(family_of(binary))
    elif prop == "weight2":
        rep = check_weight2_graph(binary)
    elif prop == "weight3":
        rep = check_weight3_links(binary)
    elif prop == "two-level":
        if not isinstance(code, GroupedCode):
            raise CodeError("two-level check requires a grouped code file")
        if args.t2 is None:
            raise CodeError("two-level check requires --t2")
        rep = check_two_level(code, args.t, args.t2)
    elif prop == "frameproof":
        if args.delta is None:
            raise CodeError("frameproof check requires --delta")
        rep = check_frameproof_signature(binary, args.t,
                                         parse_rational(args.delta), args.tol)
    elif prop == "complete-traceability":
        if args.delta is None:
            raise CodeError("complete traceability check requires --delta")
        rep = check_complete_traceability(binary, args.t,
                                          parse_rational(args.delta), args.tol)
    elif prop == "girth":
        split = _parse_split(args.split, binary.n)
        rep = check_bipartite_girth(binary, args.t, split)
    else:
        raise CodeError(f"unknown property {prop!r}")
    _emit(rep.to_json_dict(), args.quiet)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _parse_split(spec: str | None, n: int):
    if spec is None:
        return (n - n // 2, n // 2)
    parts = [int(x) for x in spec.split(",") if x.strip()]
    if len(parts) == 2 and parts[0] + parts[1] == n:
        return (parts[0], parts[1])
    return parts


def _cmd_construct(args) -> int:
    if args.kind == "polarity":
        code = polarity_code(args.m)
    elif args.kind == "identity":
        code = identity_superimposed(args.m)
    elif args.kind in ("concat", "kron"):
        recipe = _read_recipe(args.recipe)
        if args.kind == "concat":
            if not isinstance(recipe, ConcatenationRecipe):
                raise CodeError("concat requires a concatenation recipe")
            if args.verify_ingredients:
                t = recipe.claimed_t or 2
                if not check_fpc(recipe.outer, t).passed:
                    raise CodeError("outer ingredient failed the frameproof check")
                if not check_signature(recipe.inner, t).passed:
                    raise CodeError("inner ingredient failed the signature check")
            code = concatenate(recipe)
        else:
            if not isinstance(recipe, ProductRecipe):
                raise CodeError("kron requires a product recipe")
            if args.verify_ingredients:
                t = recipe.claimed_t or 2
                if not check_superimposed(recipe.superimposed, t).passed:
                    raise CodeError("superimposed ingredient failed its check")
                if not check_signature(recipe.signature, t).passed:
                    raise CodeError("signature ingredient failed its check")
            code = kronecker(recipe)
    elif args.kind == "example":
        code = builtin_example(args.name)
    else:
        raise CodeError(f"unknown construction {args.kind!r}")
    out = dumps_code(code, indent=2)
    if args.out:
        Path(args.out).write_text(out + "\n")
        _emit({"status": "written", "path": args.out,
               "n": code.n, "size": code.size}, args.quiet)
    else:
        sys.stdout.write(out + "\n")
    return EXIT_OK


def _cmd_decode(args) -> int:
    doc = loads_exact(Path(args.result).read_text())
    if isinstance(doc, dict):
        doc = doc["r"]
    r = parse_rational_vector(doc)
    method = args.method
    try:
        if method == "generic":
            if not args.code:
                raise CodeError("generic decode requires --code")
            code = _read_code(args.code, columns=args.columns)
            binary = code.code if isinstance(code, GroupedCode) else code
            result = decode_generic(binary, args.t, r, diagnose=args.diagnose)
        elif method in ("concat", "product"):
            if not args.recipe:
                raise CodeError(f"{method} decode requires --recipe")
            recipe = _read_recipe(args.recipe)
            if method == "concat":
                result = decode_concatenated(recipe, args.t, r)
            else:
                result = decode_product(recipe, args.t, r)
        else:
            raise CodeError(f"unknown decode method {method!r}")
    except MultipleCoalitionsError as e:
        _emit({"verdict": "diagnostic", "error": "multiple-coalitions",
               "matches": [c.to_json_dict() for c in e.matches]}, args.quiet)
        return EXIT_FAIL
    except NoCoalitionError as e:
        _emit({"verdict": "diagnostic", "error": "no-coalition",
               "message": str(e)}, args.quiet)
        return EXIT_FAIL
    doc = result.to_json_dict()
    doc["verdict"] = "decoded"
    _emit(doc, args.quiet)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    rep = bound_report(args.n, args.t, args.w)
    _emit(rep.to_json_dict(), args.quiet)
    return EXIT_OK


def _cmd_search(args) -> int:
    threads = _default_threads(args.threads)
    if args.w == 2 and args.t == 2 and not args.force_generic:
        res = max_weight2_via_graph(args.n, budget=args.budget)
    else:
        config = SearchConfig(args.n, args.t, args.w,
                              perm_canonical=not args.no_perm,
                              complement=args.complement,
                              girth_filter=args.girth_filter,
                              budget=args.budget, threads=threads)
        res = max_code(config)
    doc = res.to_json_dict()
    doc["status"] = "completed" if res.completed else "budget-exceeded"
    _emit(doc, args.quiet)
    return EXIT_OK if res.completed else EXIT_BUDGET


def _cmd_simulate(args) -> int:
    code = _read_code(args.code, columns=args.columns)
    binary = code.code if isinstance(code, GroupedCode) else code
    coalition = tuple(int(x) for x in args.coalition.split(","))
    weights = None
    if args.weights:
        weights = tuple(parse_rational(w) for w in args.weights.split(","))
    spec = AttackSpec(coalition, weights, seed=args.seed, delta=args.delta)
    cert = resolve_weights(spec)
    doc = {
        "coalition": list(cert.indices),
        "weights": [format_rational(w) for w in cert.weights],
        "r": format_rational_vector(attack(binary, spec)),
    }
    if args.delta:
        doc["r_noisy"] = list(noisy_attack(binary, spec))
        doc["delta"] = args.delta
    _emit(doc, args.quiet)
    return EXIT_OK


def _cmd_examples(args) -> int:
    if args.name is None:
        _emit({"examples": {name: EXAMPLE_NOTES.get(name, "")
                            for name in sorted(BUILTIN_EXAMPLES)}}, args.quiet)
        return EXIT_OK
    code = builtin_example(args.name)
    out = dumps_code(code, indent=2)
    if args.out:
        Path(args.out).write_text(out + "\n")
        _emit({"status": "written", "path": args.out}, args.quiet)
    else:
        sys.stdout.write(out + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# reproduction harness


def _repro_corollary2():
    rows = []
    for n, expected in [(2, 3), (3, 5), (4, 7)]:
        got = max_code(SearchConfig(n=n, t=2)).max_size
        rows.append({"case": f"max size n={n} t=2", "expected": expected, "got": got})
    return rows


def _repro_table1_small():
    expected = {2: 1, 3: 3, 4: 4, 5: 6, 6: 7, 7: 9, 8: 11}
    rows = []
    for n, exp in expected.items():
        got = max_weight2_via_graph(n).max_size
        rows.append({"case": f"weight-2 max size n={n}", "expected": exp, "got": got})
    return rows


def _repro_examples_verify():
    rows = []
    for name in ("ex2-3cube", "ex3-weight2", "ex4-weight3",
                 "ex5-concatenated", "ex7-product"):
        code = builtin_example(name)
        binary = code.code if isinstance(code, GroupedCode) else code
        got = check_signature(binary, 2).verdict
        rows.append({"case": f"{name} signature t=2", "expected": "pass", "got": got})
    return rows


def _repro_example6():
    recipe = example_recipe("ex5-concatenated")
    r = parse_rational_vector(["1", "7/10", "3/10", "7/10", "1", "0"])
    res = decode_concatenated(recipe, 2, r)
    return [{
        "case": "concatenated decode of blockwise (1,0.7),(0.3,0.7),(1,0)",
        "expected": [[1, 9], ["3/10", "7/10"]],
        "got": [list(res.coalition.indices),
                [str(format_rational(w)) for w in res.coalition.weights]],
    }]


def _repro_example8():
    recipe = example_recipe("ex7-product")
    cases = [
        (["3/5", "1", "2/5", 0, 0, 0, 0, 0, 0], [[2, 4], ["2/5", "3/5"]]),
        ([0, "1/2", "1/2", "1/2", 0, "1/2", 0, 0, 0], [[2, 7], ["1/2", "1/2"]]),
    ]
    rows = []
    for raw, expected in cases:
        res = decode_product(recipe, 2, parse_rational_vector(raw))
        rows.append({
            "case": f"product decode case {len(rows) + 1}",
            "expected": expected,
            "got": [list(res.coalition.indices),
                    [str(format_rational(w)) for w in res.coalition.weights]],
        })
    return rows


def _repro_polarity():
    rows = []
    for m, (n_exp, size_exp) in [(2, (7, 9)), (3, (13, 24))]:
        code = polarity_code(m)
        ok = check_weight2_graph(code).passed
        rows.append({"case": f"polarity m={m} (n, size, c4free)",
                     "expected": [n_exp, size_exp, True],
                     "got": [code.n, code.size, bool(ok)]})
    return rows


def _repro_bounds_spot():
    from .bounds import (rate_upper_bound, size_lower_bound, size_upper_bound,
                         size_upper_bound_t2)
    rows = [
        {"case": "t2 upper n=2", "expected": 3, "got": size_upper_bound_t2(2)},
        {"case": "t2 upper n=3", "expected": 5, "got": size_upper_bound_t2(3)},
        {"case": "t2 upper n=4", "expected": 9, "got": size_upper_bound_t2(4)},
        {"case": "general upper n=3 t=2", "expected": 10, "got": size_upper_bound(3, 2)},
        {"case": "lower n=4 t=2", "expected": 4, "got": size_lower_bound(4, 2)},
        {"case": "rate t=2", "expected": 0.5753, "got": rate_upper_bound(2)["value"]},
        {"case": "rate t=4", "expected": 0.4451, "got": rate_upper_bound(4)["value"]},
    ]
    return rows


def _repro_frameproof():
    code = builtin_example("frameproof-half")
    rows = [
        {"case": "frameproof delta=1/2", "expected": "pass",
         "got": check_frameproof_signature(code, 2, Fraction(1, 2), 1e-7).verdict},
        {"case": "frameproof delta=0.51", "expected": "fail",
         "got": check_frameproof_signature(code, 2, Fraction(51, 100), 1e-7).verdict},
    ]
    return rows


_REPRO_TARGETS = {
    "corollary2": _repro_corollary2,
    "table1-small": _repro_table1_small,
    "examples-verify": _repro_examples_verify,
    "example6-decode": _repro_example6,
    "example8-decode": _repro_example8,
    "polarity": _repro_polarity,
    "bounds-spot": _repro_bounds_spot,
    "frameproof-threshold": _repro_frameproof,
}


def _cmd_reproduce(args) -> int:
    if args.target == "all":
        targets = list(_REPRO_TARGETS)
    elif args.target in _REPRO_TARGETS:
        targets = [args.target]
    else:
        raise CodeError(f"unknown target {args.target!r}; known: "
                        + ", ".join(sorted(_REPRO_TARGETS)) + ", all")
    rows = []
    for t in targets:
        for row in _REPRO_TARGETS[t]():
            row["target"] = t
            row["ok"] = row["expected"] == row["got"]
            rows.append(row)
    ok = all(r["ok"] for r in rows)
    _emit({"verdict": "pass" if ok else "fail", "rows": rows}, args.quiet)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sigcode",
                                description="signature-code toolkit")
    p.add_argument("--quiet", action="store_true",
                   help="print only the verdict")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check a property of a code file")
    v.add_argument("--code", required=True)
    v.add_argument("--property", required=True,
                   choices=["signature", "bt", "fpc", "superimposed", "wuf",
                            "weight2", "weight3", "two-level", "frameproof",
                            "complete-traceability", "girth"])
    v.add_argument("--t", type=int, default=2)
    v.add_argument("--t2", type=int)
    v.add_argument("--delta")
    v.add_argument("--tol", type=float, default=1e-9)
    v.add_argument("--split", help="girth split: 'n1,n2' or coordinate list")
    v.add_argument("--exhaustive", action="store_true")
    v.add_argument("--no-fast-paths", action="store_true")
    v.add_argument("--columns", action="store_true",
                   help="treat input rows as matrix rows (codewords = columns)")
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("construct", help="build a code")
    c.add_argument("kind", choices=["concat", "kron", "polarity", "identity",
                                    "example"])
    c.add_argument("--recipe")
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--name")
    c.add_argument("--out")
    c.add_argument("--verify-ingredients", action="store_true")
    c.set_defaults(func=_cmd_construct)

    d = sub.add_parser("decode", help="trace a coalition from a channel result")
    d.add_argument("--code")
    d.add_argument("--recipe")
    d.add_argument("--method", default="generic",
                   choices=["generic", "concat", "product"])
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--result", required=True,
                   help="JSON file holding the rational result vector")
    d.add_argument("--diagnose", action="store_true")
    d.add_argument("--columns", action="store_true")
    d.set_defaults(func=_cmd_decode)

    b = sub.add_parser("bounds", help="size and rate bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--t", type=int, required=True)
    b.add_argument("--w", type=int)
    b.set_defaults(func=_cmd_bounds)

    s = sub.add_parser("search", help="exhaustive maximum-code search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, default=2)
    s.add_argument("--w", type=int)
    s.add_argument("--budget", type=float)
    s.add_argument("--threads", type=int)
    s.add_argument("--no-perm", action="store_true",
                   help="disable first-codeword permutation canonicalization")
    s.add_argument("--complement", action="store_true",
                   help="enable complement symmetry pruning")
    s.add_argument("--girth-filter", action="store_true")
    s.add_argument("--force-generic", action="store_true",
                   help="use the generic search even for weight-2 t=2")
    s.set_defaults(func=_cmd_search)

    m = sub.add_parser("simulate", help="generate a channel result")
    m.add_argument("--code", required=True)
    m.add_argument("--coalition", required=True, help="1-based indices, comma separated")
    m.add_argument("--weights", help="exact rationals, comma separated")
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--delta", type=float)
    m.add_argument("--columns", action="store_true")
    m.set_defaults(func=_cmd_simulate)

    e = sub.add_parser("examples", help="list or dump bundled example codes")
    e.add_argument("--name")
    e.add_argument("--out")
    e.set_defaults(func=_cmd_examples)

    r = sub.add_parser("reproduce", help="re-run a scripted result table")
    r.add_argument("--target", default="all")
    r.set_defaults(func=_cmd_reproduce)
    return p


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (CodeError, OSError, KeyError, json.JSONDecodeError) as e:
        json.dump({"verdict": "error", "message": str(e)}, sys.stdout)
        sys.stdout.write("\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
