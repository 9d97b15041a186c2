"""Command line front end: exploration queries and batch verification.

Exit codes: 0 verified / computed, 1 counterexample found, 2 usage or range
error.  All output is deterministic; sweep workloads can be spread over
worker processes without changing the emitted text.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import checks, decomposition, matching
from .report import Report
from .subsets import Subset, check_ground, lattice_path, parse_subset


def _subset(n: int, text: str) -> Subset:
    return parse_subset(n, text)


def render_path(G: Subset) -> list[str]:
    """ASCII drawing of the lattice path, one row per height unit, with the
    first and last peak positions marked beneath the axis."""
    path = lattice_path(G)
    h = path.heights
    n = G.n
    rows = []
    for level in range(max(h), min(h), -1):
        chars = [" "]  # origin column
        for g in range(1, n + 1):
            if h[g] > h[g - 1] and h[g] == level:
                chars.append("/")
            elif h[g] < h[g - 1] and h[g - 1] == level:
                chars.append("\\")
            else:
                chars.append(" ")
        rows.append("".join(chars).rstrip())
    rows.append("-" * (n + 1))
    for glyph, pos in (("ν", path.nu), ("μ", path.mu)):
        marker = [" "] * (n + 1)
        marker[pos] = glyph
        rows.append("".join(marker).rstrip())
    return rows


def _match_str(result) -> str:
    return str(result.value) if result.defined else "undefined"


def cmd_path(args) -> int:
    G = _subset(args.n, args.set)
    path = lattice_path(G)
    down = matching.psi(G)
    up = matching.phi(G)
    if args.format == "json":
        print(json.dumps({
            "n": G.n,
            "G": list(G),
            "heights": list(path.heights),
            "alpha": path.alpha,
            "peaks": list(path.peaks),
            "nu": path.nu,
            "mu": path.mu,
            "psi": list(down.value) if down.defined else None,
            "phi": list(up.value) if up.defined else None,
            "render": render_path(G),
        }))
        return 0
    print(f"G = {G}   n = {G.n}")
    for row in render_path(G):
        print(row)
    print("heights: " + " ".join(str(x) for x in path.heights))
    peaks = "{" + ",".join(str(p) for p in path.peaks) + "}"
    print(f"alpha = {path.alpha}   N = {peaks}   nu = {path.nu}   mu = {path.mu}")
    print(f"psi(G) = {_match_str(down)}" + (f"   (removes {down.pivot})" if down.defined else ""))
    print(f"phi(G) = {_match_str(up)}" + (f"   (adds {up.pivot})" if up.defined else ""))
    return 0


def cmd_psi(args) -> int:
    result = matching.psi(_subset(args.n, args.set))
    if args.format == "json":
        print(json.dumps({
            "defined": result.defined,
            "value": list(result.value) if result.defined else None,
            "pivot": result.pivot,
        }))
    else:
        print(_match_str(result))
    return 0


def cmd_phi(args) -> int:
    result = matching.phi(_subset(args.n, args.set))
    if args.format == "json":
        print(json.dumps({
            "defined": result.defined,
            "value": list(result.value) if result.defined else None,
            "pivot": result.pivot,
        }))
    else:
        print(_match_str(result))
    return 0


def cmd_index(args) -> int:
    M = _subset(args.n, args.M)
    G = _subset(args.n, args.G)
    value = matching.index(G, M)
    if args.format == "json":
        print(json.dumps({"index": value}))
    else:
        print(value)
    return 0


def cmd_family(args) -> int:
    M = _subset(args.n, args.M)
    family = decomposition.contribution_family(args.n, args.k, M)
    matrix = decomposition.sign_matrix(family) if args.matrix else None
    if args.format == "json":
        payload = {
            "n": args.n,
            "k": args.k,
            "M": list(M),
            "members": [
                {
                    "G": list(mem.G),
                    "index": mem.index,
                    "distinguished": list(decomposition.distinguished_subset(mem.G)),
                }
                for mem in family.members
            ],
        }
        if matrix is not None:
            payload["sign_matrix"] = matrix
        print(json.dumps(payload))
        return 0
    print(f"family for M = {M}, n = {args.n}, k = {args.k}: {len(family.members)} members")
    for mem in family.members:
        t = decomposition.distinguished_subset(mem.G)
        print(f"{mem.G}  index {mem.index}  distinguished {t}")
    if matrix is not None:
        print("sign matrix (columns: (k-1)-subsets of M in squashed order):")
        for row in matrix:
            print(" ".join(f"{e:+d}" if e else " 0" for e in row))
    return 0


def cmd_decompose(args) -> int:
    decomp = decomposition.build_decomposition(args.n, args.k)
    if args.format == "json":
        print(json.dumps(decomposition.decomposition_to_dict(decomp)))
        return 0
    print(f"stanley decomposition of M({args.n},{args.k}): {len(decomp.summands)} summands")
    for sm in decomp.summands:
        removed = "-" if sm.removed is None else str(sm.removed)
        print(f"S={sm.S} Z={sm.Z} removed={removed} G={sm.G} m={sm.m.text()}")
    return 0


def _verify_one(task) -> dict:
    n, k, box, rank = task
    rep = decomposition.verify_stanley(n, k, check_rank=rank)
    out = rep.to_json()
    out["lines"] = list(rep.lines)
    if box is not None:
        box_rep = decomposition.verify_hilbert(
            decomposition.build_decomposition(n, k), "box", box
        )
        out["passed"] = out["passed"] and box_rep.passed
        out["lines"].extend(box_rep.lines)
        out["failures"].extend(box_rep.failures)
        out["counts"].update({f"box_{key}": v for key, v in box_rep.counts.items()})
    return out


def cmd_verify(args) -> int:
    rank = {"auto": None, "always": True, "never": False}[args.rank]
    if args.all_n is not None:
        check_ground(args.all_n)
        tasks = [
            (n, k, args.box, rank)
            for n in range(2, args.all_n + 1)
            for k in range(max(n // 2, 1), n)
        ]
    else:
        if args.n is None or args.k is None:
            print("error: provide n and k, or --all-n N", file=sys.stderr)
            return 2
        decomposition.require_upper_half(args.n, args.k)
        tasks = [(args.n, args.k, args.box, rank)]

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, tasks))
    else:
        results = [_verify_one(t) for t in tasks]

    all_passed = all(r["passed"] for r in results)
    if args.format == "json":
        print(json.dumps({"passed": all_passed, "reports": results}))
    else:
        for r in results:
            for line in r["lines"]:
                print(line)
            for f in r["failures"][:20]:
                print(f"counterexample: {f}")
            print(("PASS " if r["passed"] else "FAIL ") + r["name"])
    return 0 if all_passed else 1


_CHECKS = {
    "inverse": checks.check_inverse_law,
    "index-eq": checks.check_index_equivalence,
    "greedy": checks.check_greedy_agreement,
    "lemma-ind": decomposition.index_step_sweep,
}


def _run_checks(n: int, which: list[str], fmt: str) -> int:
    check_ground(n)
    reports: list[Report] = [_CHECKS[name](n) for name in which]
    ok = all(r.passed for r in reports)
    if fmt == "json":
        print(json.dumps({"passed": ok, "reports": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            print(r.text())
    return 0 if ok else 1


def cmd_check(args) -> int:
    return _run_checks(args.n, [args.which], args.format)


def cmd_check_matching(args) -> int:
    which = args.which or ["inverse", "index-eq", "greedy"]
    for name in which:
        if name not in ("inverse", "index-eq", "greedy"):
            raise ValueError(f"unknown matching check {name!r}")
    return _run_checks(args.n, which, args.format)


def cmd_check_lemma(args) -> int:
    return _run_checks(args.n, ["lemma-ind"], args.format)


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="koszuldepth",
        description="Explore and verify the depth-(n-1) decomposition of the "
        "upper Koszul syzygy modules.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("path", help="draw the lattice path of a subset")
    sp.add_argument("n", type=int)
    sp.add_argument("set", help="subset, e.g. {1,4,7} or 147 for n <= 9")
    _add_format(sp)
    sp.set_defaults(func=cmd_path)

    for name, func, help_text in (
        ("psi", cmd_psi, "apply the downward matching"),
        ("phi", cmd_phi, "apply the upward matching"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("n", type=int)
        sp.add_argument("set")
        _add_format(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("index", help="index of G inside M")
    sp.add_argument("n", type=int)
    sp.add_argument("M")
    sp.add_argument("G")
    _add_format(sp)
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("family", help="contributing generators for a support")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("M")
    sp.add_argument("--matrix", action="store_true", help="also print the sign matrix")
    _add_format(sp)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("decompose", help="emit the full decomposition")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    _add_format(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", help="verify the decomposition for (n, k) or a sweep")
    sp.add_argument("n", type=int, nargs="?")
    sp.add_argument("k", type=int, nargs="?")
    sp.add_argument("--all-n", type=int, default=None, metavar="N",
                    help="verify every valid (n, k) with n <= N")
    sp.add_argument("--box", type=int, default=None, metavar="D",
                    help="also run the boxed dimension check with entries up to D")
    sp.add_argument("--rank", choices=("auto", "always", "never"), default="auto",
                    help="exact rank checking (auto: on for n <= 9)")
    sp.add_argument("--jobs", type=int, default=1, metavar="W",
                    help="worker processes for sweeps")
    _add_format(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("check", help="run one exhaustive property suite")
    sp.add_argument("n", type=int, help="recommended maxima: inverse 14, index-eq 10, "
                    "lemma-ind 9, greedy 12")
    sp.add_argument("which", choices=sorted(_CHECKS))
    _add_format(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("check-matching", help="matching law suites (inverse, index-eq, greedy)")
    sp.add_argument("n", type=int)
    sp.add_argument("which", nargs="*", metavar="which",
                    help="any of: inverse, index-eq, greedy (default: all three)")
    _add_format(sp)
    sp.set_defaults(func=cmd_check_matching)

    sp = sub.add_parser("check-lemma", help="exhaustive index increment check")
    sp.add_argument("n", type=int)
    _add_format(sp)
    sp.set_defaults(func=cmd_check_lemma)

    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
