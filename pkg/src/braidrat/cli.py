"""Command line front end with deterministic text and JSON reporters.

Subcommands cover basis listings, top-class coproduct supports, the
component comparison sweep, the odd/even multiplication-by-g check, pairwise
coalgebra isomorphism, dual-Steenrod matrices, and the braid/configuration
correspondence.  JSON output is schema-stable and byte-identical for a fixed
invocation; timing goes to stderr.

Exit codes: 0 success (verification passed or a definitive verdict was
reached), 1 falsification or inconclusive verdict, 2 usage or internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

from . import gf2
from .ambient import GeneratorLimitError
from .coalgebra import (
    DEFAULT_ISO_BUDGET,
    IsoVerdict,
    SpanError,
    check_braid_conf,
    check_lemma_braid,
    coalgebras_isomorphic,
    extract_coalgebra,
    s_set,
    steenrod_matrix,
    theorem_main,
)
from .families import DEFAULT_K_BOUND, Family, basis, embed, top_class
from .operations import DEFAULT_MAX_GEN

SCHEMA_VERSION = 1


@dataclass
class RunConfig:
    max_gen: int = DEFAULT_MAX_GEN
    k_bound: int = DEFAULT_K_BOUND
    iso_budget: int = DEFAULT_ISO_BUDGET
    fmt: str = "text"


def _matrix_json(rows: tuple[int, ...], ncols: int) -> list[list[int]]:
    return [[(row >> j) & 1 for j in range(ncols)] for row in rows]


def _verdict_json(v: IsoVerdict) -> dict:
    out: dict = {
        "kind": v.kind,
        "search_space": v.search_space,
        "tried": v.tried,
    }
    if v.reason is not None:
        out["reason"] = v.reason
    if v.invariant is not None:
        out["invariant"] = v.invariant
        out["left"] = _plain(v.left)
        out["right"] = _plain(v.right)
    if v.witness is not None:
        out["witness"] = [
            _matrix_json(mat, v.dims[d]) for d, mat in enumerate(v.witness)
        ]
    return out


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def _parse_spec(spec: str) -> tuple[Family, int]:
    try:
        name, _, num = spec.partition(":")
        return Family(name), int(num)
    except (ValueError, KeyError):
        raise ValueError(f"bad component spec {spec!r}; expected e.g. braid:6 or rat:3")


def _emit(payload: dict, lines: list[str], config: RunConfig) -> None:
    if config.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_basis(args, config: RunConfig) -> int:
    family = Family(args.family)
    rows = []
    lines = [f"basis {family.value} k={args.k}"]
    for fm in basis(family, args.k, k_bound=config.k_bound):
        emb = embed(fm, max_gen=config.max_gen)
        rows.append(
            {
                "label": fm.label(),
                "weight": fm.weight,
                "dim": fm.dim,
                "monomial": fm.to_json(),
                "embedding": emb.to_json(),
            }
        )
        lines.append(f"  dim {fm.dim}  weight {fm.weight}  {fm.label()}  =  {emb}")
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "basis",
        "inputs": {"family": family.value, "k": args.k},
        "classes": rows,
    }
    _emit(payload, lines, config)
    return 0


def _cmd_s_set(args, config: RunConfig) -> int:
    family = Family(args.family)
    fm = top_class(family, args.k)
    support = sorted(s_set(fm, max_gen=config.max_gen))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "s-set",
        "inputs": {"family": family.value, "k": args.k},
        "top_class": fm.label(),
        "dim": fm.dim,
        "support": support,
    }
    lines = [f"s-set {family.value} k={args.k}: top class {fm.label()} (dim {fm.dim})",
             f"  S = {{{', '.join(str(s) for s in support)}}}"]
    _emit(payload, lines, config)
    return 0


def _cmd_theorem_main(args, config: RunConfig) -> int:
    if not 1 <= args.from_k <= args.to_k:
        raise ValueError("need 1 <= --from <= --to")
    reports = []
    lines = []
    all_conform = True
    for k in range(args.from_k, args.to_k + 1):
        rep = theorem_main(
            k, iso_budget=config.iso_budget, max_gen=config.max_gen, k_bound=config.k_bound
        )
        all_conform = all_conform and rep.conforms
        entry = {
            "k": k,
            "branch": rep.branch,
            "support_x": list(rep.support_x),
            "support_y": list(rep.support_y),
            "distinct": rep.distinct,
            "checks": {name: _plain(v) for name, v in sorted(rep.checks.items())},
            "conforms": rep.conforms,
        }
        if rep.iso is not None:
            entry["iso"] = _verdict_json(rep.iso)
        reports.append(entry)
        status = "ok" if rep.conforms else "FALSIFIED"
        extra = ""
        if rep.branch == "generic":
            w = rep.checks["witness_dim"]
            extra = (
                f"  witness dim {w}: in S(x)={rep.checks['witness_in_support_x']},"
                f" in S(y)={not rep.checks['witness_not_in_support_y']}"
            )
        elif k > 3:
            extra = (
                f"  5 in S(x)={rep.checks['five_in_support_x']},"
                f" in S(y)={not rep.checks['five_not_in_support_y']};"
                f" 2 in neither={rep.checks['two_not_in_support_x'] and rep.checks['two_not_in_support_y']}"
            )
        if rep.iso is not None:
            extra += f"  isomorphic={rep.iso.kind}"
        lines.append(
            f"k={k}  branch={rep.branch}  |S(x)|={len(rep.support_x)}  "
            f"|S(y)|={len(rep.support_y)}  distinct={rep.distinct}{extra}  [{status}]"
        )
    lines.append("RESULT: " + ("pass" if all_conform else "FAIL"))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "theorem-main",
        "inputs": {"from": args.from_k, "to": args.to_k},
        "reports": reports,
        "all_conform": all_conform,
    }
    _emit(payload, lines, config)
    return 0 if all_conform else 1


def _cmd_lemma_braid(args, config: RunConfig) -> int:
    reports = []
    lines = []
    ok = True
    for k in range(1, args.max_k + 1):
        rep = check_lemma_braid(k, max_gen=config.max_gen, k_bound=config.k_bound)
        ok = ok and rep.verified
        reports.append(
            {
                "k": k,
                "bijection_ok": rep.bijection_ok,
                "coproduct_ok": rep.coproduct_ok,
                "classes_checked": rep.classes_checked,
                "verified": rep.verified,
            }
        )
        lines.append(
            f"k={k}  classes={rep.classes_checked}  bijection={rep.bijection_ok}  "
            f"coproduct={rep.coproduct_ok}  [{'ok' if rep.verified else 'FALSIFIED'}]"
        )
    lines.append("RESULT: " + ("pass" if ok else "FAIL"))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "lemma-braid",
        "inputs": {"max_k": args.max_k},
        "reports": reports,
        "all_verified": ok,
    }
    _emit(payload, lines, config)
    return 0 if ok else 1


def _cmd_iso(args, config: RunConfig) -> int:
    fam_a, k_a = _parse_spec(args.a)
    fam_b, k_b = _parse_spec(args.b)
    ca = extract_coalgebra(fam_a, k_a, max_gen=config.max_gen, k_bound=config.k_bound)
    cb = extract_coalgebra(fam_b, k_b, max_gen=config.max_gen, k_bound=config.k_bound)
    space = math.prod(gf2.gl_order(n) for n in ca.dims)
    print(f"search space: up to {space} candidate maps", file=sys.stderr)
    steenrod = None
    if args.steenrod:
        steenrod = (
            steenrod_matrix(fam_a, k_a, max_gen=config.max_gen, k_bound=config.k_bound),
            steenrod_matrix(fam_b, k_b, max_gen=config.max_gen, k_bound=config.k_bound),
        )
    verdict = coalgebras_isomorphic(ca, cb, config.iso_budget, steenrod=steenrod)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "iso",
        "inputs": {
            "a": {"family": fam_a.value, "k": k_a},
            "b": {"family": fam_b.value, "k": k_b},
            "steenrod_constrained": bool(args.steenrod),
        },
        "dims": list(ca.dims),
        "verdict": _verdict_json(verdict),
    }
    lines = [
        f"iso {args.a} vs {args.b}  (search space {verdict.search_space})",
        f"  verdict: {verdict.kind}"
        + (f"  [{verdict.invariant} differs]" if verdict.invariant else "")
        + (f"  ({verdict.reason})" if verdict.reason else ""),
    ]
    if verdict.witness is not None:
        for d, mat in enumerate(verdict.witness):
            lines.append(f"  degree {d}: {_matrix_json(mat, verdict.dims[d])}")
    _emit(payload, lines, config)
    return 0 if verdict.kind in ("yes", "no") else 1


def _cmd_steenrod(args, config: RunConfig) -> int:
    if args.j >= 2 and not args.extended:
        raise ValueError("dual operations with j >= 2 require --extended")
    family = Family(args.family)
    mats = steenrod_matrix(
        family, args.k, j=args.j, max_gen=config.max_gen, k_bound=config.k_bound
    )
    by_dim_sizes = {}
    for fm in basis(family, args.k, k_bound=config.k_bound):
        by_dim_sizes[fm.dim] = by_dim_sizes.get(fm.dim, 0) + 1
    matrices = {
        str(d): _matrix_json(mat, by_dim_sizes.get(d, 0)) for d, mat in sorted(mats.items())
    }
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "steenrod",
        "inputs": {"family": family.value, "k": args.k, "j": args.j},
        "matrices": matrices,
    }
    lines = [f"steenrod {family.value} k={args.k} j={args.j}"]
    for d, mat in sorted(matrices.items(), key=lambda kv: int(kv[0])):
        lines.append(f"  degree {d} -> {int(d) - args.j}: {mat}")
    _emit(payload, lines, config)
    return 0


def _cmd_braid_conf(args, config: RunConfig) -> int:
    reports = []
    lines = []
    ok = True
    for k in range(1, args.max_k + 1):
        rep = check_braid_conf(
            k, budget=config.iso_budget, max_gen=config.max_gen, k_bound=config.k_bound
        )
        ok = ok and rep.isomorphic
        reports.append(
            {"k": k, "route": rep.route, "verdict": _verdict_json(rep.verdict)}
        )
        lines.append(
            f"k={k}  route={rep.route}  isomorphic={rep.isomorphic}"
            f"  [{'ok' if rep.isomorphic else 'FALSIFIED'}]"
        )
    lines.append("RESULT: " + ("pass" if ok else "FAIL"))
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "braid-conf",
        "inputs": {"max_k": args.max_k},
        "reports": reports,
        "all_isomorphic": ok,
    }
    _emit(payload, lines, config)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidrat",
        description="Weight-graded mod-2 homology coalgebra calculator and verifier.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-gen", type=int, default=DEFAULT_MAX_GEN,
                        help="largest allowed generator index")
    parser.add_argument("--k-bound", type=int, default=DEFAULT_K_BOUND,
                        help="largest allowed weight for basis enumeration")
    parser.add_argument("--iso-budget", type=int, default=DEFAULT_ISO_BUDGET,
                        help="maximum number of candidate maps for isomorphism search")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="list a weight-graded basis with embeddings")
    p.add_argument("--family", choices=("braid", "rat", "conf"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser("s-set", help="coproduct support of the top class")
    p.add_argument("--family", choices=("braid", "rat"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_s_set)

    p = sub.add_parser("theorem-main", help="compare top-class supports over a range of k")
    p.add_argument("--from", dest="from_k", type=int, required=True)
    p.add_argument("--to", dest="to_k", type=int, required=True)
    p.set_defaults(handler=_cmd_theorem_main)

    p = sub.add_parser("lemma-braid", help="verify multiplication by g on odd components")
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(handler=_cmd_lemma_braid)

    p = sub.add_parser("iso", help="decide coalgebra isomorphism of two components")
    p.add_argument("--a", required=True, help="component spec, e.g. braid:6")
    p.add_argument("--b", required=True, help="component spec, e.g. rat:3")
    p.add_argument("--steenrod", action="store_true",
                   help="require the witness to intertwine the dual Steenrod action")
    p.set_defaults(handler=_cmd_iso)

    p = sub.add_parser("steenrod", help="dual Steenrod matrices in the family basis")
    p.add_argument("--family", choices=("braid", "rat", "conf"), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--extended", action="store_true",
                   help="enable dual operations with j >= 2")
    p.set_defaults(handler=_cmd_steenrod)

    p = sub.add_parser("braid-conf", help="verify the braid/configuration correspondence")
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(handler=_cmd_braid_conf)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        max_gen=args.max_gen,
        k_bound=args.k_bound,
        iso_budget=args.iso_budget,
        fmt=args.format,
    )
    start = time.perf_counter()
    try:
        code = args.handler(args, config)
    except (ValueError, GeneratorLimitError, SpanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
