"""Command line: ``chernring {universal-poly,pnr-table,bundle,verify}``.

Exit codes: 0 success, 1 verification failure or inconsistent bundle description,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import bundlering, universal
from .chern import VirtualBundle, chern_character, star, todd
from .render import render_series
from .report import Report
from .series import Series, VarTable

MAX_N = 4
MAX_R = 4
MAX_TRUNCATE = 10

SUITES = ("all", "prop8.1", "lemma8.2", "prop8.4", "cor7.7", "rrwd", "grr")


class UsageError(Exception):
    """Bad arguments or a malformed input file (exit code 2)."""


class SpecInvariantError(Exception):
    """Well-formed bundle description that violates an invariant (exit code 1)."""


# -- bundle description files ---------------------------------------------


@dataclass
class BundleSpec:
    name: str
    rank: int
    roots: list[tuple[str, int]] | None = None
    chern: list[str] | None = None


def parse_bundle_file(text: str) -> tuple[list[BundleSpec], int | None]:
    """Parse a JSON bundle description.

    ::

        {"truncate": 3,
         "bundles": [{"name": "L", "rank": 1, "roots": [["x", 1]]},
                     {"name": "V", "rank": 2, "chern": ["c1", "c2"]}]}

    ``roots`` pairs a degree-1 variable with a signed multiplicity;
    ``chern`` names the generic classes ``c_1, c_2, ...`` in order.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bundle file is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or not isinstance(data.get("bundles"), list) or not data["bundles"]:
        raise UsageError("bundle file needs a non-empty 'bundles' list")
    trunc = data.get("truncate")
    if trunc is not None and (not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 0):
        raise UsageError("'truncate' must be a non-negative integer")
    specs = []
    for i, b in enumerate(data["bundles"]):
        if not isinstance(b, dict):
            raise UsageError(f"bundle #{i} is not an object")
        name = b.get("name", f"bundle{i + 1}")
        rank = b.get("rank")
        if not isinstance(rank, int) or isinstance(rank, bool):
            raise UsageError(f"bundle {name}: 'rank' must be an integer")
        has_roots, has_chern = "roots" in b, "chern" in b
        if has_roots == has_chern:
            raise UsageError(f"bundle {name}: give exactly one of 'roots' or 'chern'")
        if has_roots:
            roots = []
            for item in b["roots"]:
                if (not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], str)
                        or not isinstance(item[1], int) or isinstance(item[1], bool)):
                    raise UsageError(f"bundle {name}: roots are [name, multiplicity] pairs")
                roots.append((item[0], item[1]))
            if sum(m for _, m in roots) != rank:
                raise SpecInvariantError(
                    f"bundle {name}: rank {rank} but signed root count {sum(m for _, m in roots)}")
            specs.append(BundleSpec(name, rank, roots=roots))
        else:
            chern = b["chern"]
            if not isinstance(chern, list) or not all(isinstance(c, str) for c in chern):
                raise UsageError(f"bundle {name}: 'chern' must be a list of names")
            specs.append(BundleSpec(name, rank, chern=list(chern)))
    return specs, trunc


def build_bundles(specs: Sequence[BundleSpec], trunc: int) -> list[tuple[str, VirtualBundle]]:
    pairs: list[tuple[str, int]] = []
    seen: dict[str, int] = {}

    def declare(name, weight):
        if name in seen:
            if seen[name] != weight:
                raise SpecInvariantError(f"variable {name} used with weights {seen[name]} and {weight}")
            return
        seen[name] = weight
        pairs.append((name, weight))

    for s in specs:
        for name, _ in s.roots or ():
            declare(name, 1)
        for k, name in enumerate(s.chern or (), start=1):
            declare(name, k)
    vars = VarTable.of(pairs)
    out = []
    for s in specs:
        if s.roots is not None:
            roots = []
            for name, m in s.roots:
                x = Series.variable(vars, trunc, name)
                roots.extend([(x, 1 if m > 0 else -1)] * abs(m))
            out.append((s.name, VirtualBundle.from_roots(roots, vars, trunc)))
        else:
            c = Series.one(vars, trunc)
            for name in s.chern:
                c = c + Series.variable(vars, trunc, name)
            out.append((s.name, VirtualBundle(s.rank, c)))
    return out


# -- commands ---------------------------------------------------------------


def _emit(text: str, out: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render_poly(n: int, r: int, fmt: str):
    P = universal.universal_rr_polynomial(n, r)
    if fmt == "json":
        return {"n": n, "r": r, "polynomial": render_series(P, "json")}
    return render_series(P, fmt)


def cmd_universal_poly(args) -> int:
    if args.n < 0 or args.r < 1:
        raise UsageError("need n >= 0 and r >= 1")
    res = _render_poly(args.n, args.r, args.format)
    _emit(json.dumps(res, indent=2, sort_keys=True) if args.format == "json" else res, args.out)
    return 0


def cmd_pnr_table(args) -> int:
    if args.bound < 1:
        raise UsageError("bound must be at least 1")
    rows = []
    for total in range(1, args.bound + 1):
        for r in range(1, total + 1):
            n = total - r
            rows.append((n, r, _render_poly(n, r, args.format)))
    if args.format == "json":
        text = json.dumps([{"n": n, "r": r, **res} for n, r, res in rows], indent=2, sort_keys=True)
    elif args.format == "latex":
        text = "\n".join(f"P_{{{n},{r}}} &= {res} \\\\" for n, r, res in rows)
    else:
        text = "\n".join(f"P[{n},{r}] = {res}" for n, r, res in rows)
    _emit(text, args.out)
    return 0


def cmd_bundle(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    specs, file_trunc = parse_bundle_file(text)
    trunc = args.truncate if args.truncate is not None else file_trunc
    if trunc is None:
        trunc = 4
    if not 0 <= trunc <= MAX_TRUNCATE:
        raise UsageError(f"truncate must lie in 0..{MAX_TRUNCATE}")
    bundles = build_bundles(specs, trunc)

    if args.op == "star":
        name, acc = bundles[0]
        for other_name, b in bundles[1:]:
            acc = star(acc, b)
            name = f"{name}*{other_name}"
        results = [(name, acc.rank, acc.chern)]
    else:
        fn = {"chern": lambda b: b.chern, "ch": chern_character, "todd": todd}[args.op]
        results = [(name, b.rank, fn(b)) for name, b in bundles]

    if args.format == "json":
        payload = {
            "op": args.op,
            "truncate": trunc,
            "results": [{"name": n, "rank": rk, "series": render_series(s, "json")} for n, rk, s in results],
        }
        text = json.dumps(payload, indent=2, sort_keys=True)
    elif len(results) == 1:
        text = render_series(results[0][2], args.format)
    else:
        text = "\n".join(f"{n}: {render_series(s, args.format)}" for n, _, s in results)
    _emit(text, args.out)
    return 0


def run_suite(suite: str, n: int, r: int, N: int) -> Report:
    if suite == "prop8.1":
        rep = universal.check_koszul_formula(r, N)
    elif suite == "lemma8.2":
        rep = universal.check_twist_divisibility(n, r, N)
        rep.extend(universal.check_star_twist(n, r, N))
    elif suite == "prop8.4":
        rep = universal.verify_generating_identity(r, N)
    elif suite == "cor7.7":
        rep = bundlering.verify_zero_section_suite(r, N)
    elif suite == "rrwd":
        rep = bundlering.verify_rr_without_denominators(n, r, N)
    elif suite == "grr":
        rep = bundlering.verify_grr_zero_section(n, r, N)
    elif suite == "all":
        rep = Report("all")
        for s in SUITES[1:]:
            rep.extend(run_suite(s, n, r, N), prefix=s)
        return rep
    else:
        raise UsageError(f"unknown suite {suite!r}")
    rep.suite = suite
    return rep


def cmd_verify(args) -> int:
    n, r, N = args.n, args.r, args.truncate
    if not 0 <= n <= MAX_N:
        raise UsageError(f"n must lie in 0..{MAX_N}")
    if not 1 <= r <= MAX_R:
        raise UsageError(f"r must lie in 1..{MAX_R}")
    if not r <= N <= MAX_TRUNCATE:
        raise UsageError(f"truncate must lie in r..{MAX_TRUNCATE}")
    rep = run_suite(args.suite, n, r, N)
    fmt = "json" if args.json else args.format
    if fmt == "json":
        text = json.dumps(rep.to_dict(), indent=2, sort_keys=True)
    else:
        text = rep.to_text()
    _emit(text, args.out)
    return 0 if rep.passed else 1


# -- argument parsing -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chernring", description="Universal Riemann-Roch polynomials and checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("text", "json", "latex")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("universal-poly", help="render one universal polynomial P_{n,r}")
    p.add_argument("--n", "-n", type=int, required=True)
    p.add_argument("--r", "-r", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_universal_poly)

    p = sub.add_parser("pnr-table", help="all P_{n,r} with n + r <= bound")
    p.add_argument("--bound", type=int, default=4)
    common(p)
    p.set_defaults(func=cmd_pnr_table)

    p = sub.add_parser("bundle", help="Chern class, character, Todd class or tensor product")
    p.add_argument("op", choices=("chern", "ch", "todd", "star"))
    p.add_argument("file", help="JSON bundle description")
    p.add_argument("--truncate", type=int)
    common(p)
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--n", "-n", type=int, default=1)
    p.add_argument("--r", "-r", type=int, default=1)
    p.add_argument("--truncate", type=int, default=6)
    p.add_argument("--json", action="store_true", help="same as --format json")
    common(p, formats=("text", "json"))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"chernring: error: {exc}\n")
        return 2
    except SpecInvariantError as exc:
        sys.stderr.write(f"chernring: invariant violation: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
