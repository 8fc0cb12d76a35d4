"""Command-line front end: ``domlab gen | solve | verify | hunt``.

Graphs travel as graph6 lines; results are written as one JSON object per
line.  Exit codes: 0 success, 1 usage/input error or failed verification,
2 conjecture finding.  ``DOMLAB_SEED`` and ``DOMLAB_JOBS`` supply defaults
for ``--seed`` and ``--jobs``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import IO, Callable, Iterable, Iterator

from . import families as fam
from . import verifier as ver
from .graph import GraphError
from .graph6 import Graph6Error, emit_graph6, parse_graph6, read_graph6
from .solvers import Kind, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FINDING = 2

KIND_KEYS = {Kind.DOM: "gamma", Kind.TOTAL: "gamma_t", Kind.ONETWO: "gamma_12", Kind.TOTAL12: "gamma_t12"}


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _jobs(args: argparse.Namespace) -> int:
    jobs = args.jobs if args.jobs is not None else _env_int("DOMLAB_JOBS", 1)
    if jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {jobs}")
    return jobs


def _seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else _env_int("DOMLAB_SEED", 0)


@contextmanager
def _pool_map(jobs: int) -> Iterator[Callable]:
    # Executor.map keeps input order, so output is identical for any job count.
    if jobs == 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield lambda fn, items: pool.map(fn, items, chunksize=8)


def _open_in(path: str | None) -> IO[str]:
    if path is None or path == "-":
        return sys.stdin
    try:
        return open(path, encoding="ascii")
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}") from None


def _emit(out: IO[str], obj: dict) -> None:
    out.write(json.dumps(obj))
    out.write("\n")


# -- gen -------------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace, out: IO[str]) -> int:
    params = {name: getattr(args, name) for name in ("n", "k", "a", "b", "p") if getattr(args, name) is not None}
    base = None
    if args.base is not None:
        try:
            base = parse_graph6(args.base)
        except Graph6Error as exc:
            raise UsageError(f"--base: {exc}") from None
    seed = _seed(args)
    for i in range(args.count):
        spec = fam.FamilySpec(args.family, params, seed=seed + i, base=base)
        out.write(emit_graph6(fam.build(spec)) + "\n")
    return EXIT_OK


# -- solve -----------------------------------------------------------------------


def _solve_line(job: tuple[int, str, tuple[Kind, ...]]) -> dict:
    lineno, line, kinds = job
    g = parse_graph6(line)
    row: dict = {"n": g.n}
    try:
        witness = None
        for kind in kinds:
            res = solve(g, kind)
            row[KIND_KEYS[kind]] = ver.format_value(res.value)
            if kind is Kind.TOTAL12 or witness is None:
                witness = res.witness.sorted() if res.witness is not None else None
        row["witness"] = witness
    except GraphError as exc:
        return {"line": lineno, "n": g.n, "error": str(exc)}
    return row


def _parse_kinds(text: str) -> tuple[Kind, ...]:
    kinds = []
    for part in text.split(","):
        try:
            kinds.append(Kind.parse(part.strip()))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return tuple(dict.fromkeys(kinds))


def _numbered_lines(stream: IO[str]) -> Iterator[tuple[int, str]]:
    # Validate eagerly so a bad line is reported with its number.
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text or text == ">>graph6<<":
            continue
        try:
            parse_graph6(text)
        except Graph6Error as exc:
            raise Graph6Error(exc.message, exc.offset, lineno) from None
        yield lineno, text


def cmd_solve(args: argparse.Namespace, out: IO[str]) -> int:
    kinds = _parse_kinds(args.kinds)
    stream = _open_in(args.input)
    jobs = (
        (lineno, text, kinds) for lineno, text in _numbered_lines(stream)
    )
    with _pool_map(_jobs(args)) as mapper:
        for row in mapper(_solve_line, jobs):
            _emit(out, row)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def _claims() -> dict[str, Callable[[argparse.Namespace], ver.Report]]:
    def nmax(args: argparse.Namespace, default: int) -> int:
        return default if args.nmax is None else args.nmax

    props = lambda a: ver.verify_props_2_4_6_7(nmax(a, 16))  # noqa: E731
    p4 = lambda a: ver.verify_p4_free(n_max=nmax(a, 8))  # noqa: E731
    return {
        "L2.1": lambda a: ver.verify_lemma_2_1(nmax(a, 16)),
        "T2.3-bound": lambda a: ver.verify_bound_4n5(n_max=nmax(a, 8)),
        "T2.3-claims": lambda a: ver.verify_claims("4n5", nmax(a, 7)),
        "T2.3-extremal": lambda a: ver.verify_extremal_4n5(nmax(a, 8)),
        "T2.5-bound": lambda a: ver.verify_bound_2n3(n_max=nmax(a, 8)),
        "T2.5-claims": lambda a: ver.verify_claims("2n3", nmax(a, 7)),
        "props": props,
        "P2.4": props,
        "P2.6": props,
        "P2.7": props,
        "T3.1": lambda a: ver.verify_thm_3_1(tree_max=a.tree_max, graph_max=nmax(a, 8)),
        "T4.1": lambda a: ver.verify_thm_4_1(h_max=nmax(a, 6)),
        "T4.2": lambda a: ver.verify_thm_4_2(n_max=nmax(a, 8)),
        "T4.4-4.5": p4,
        "P4-free": p4,
        "M5.1": lambda a: ver.explore_middle_levels(),
    }


CLAIM_IDS = tuple(_claims())


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    claims = _claims()
    if args.claim not in claims:
        raise UsageError(f"unknown claim id {args.claim!r}; choose from {', '.join(claims)}")
    report = claims[args.claim](args)
    _emit(out, report.to_json())
    return EXIT_OK if report.verdict == "PASS" else EXIT_ERROR


# -- hunt ------------------------------------------------------------------------

HUNT_DEGREE = {"C1": 3, "C2": 4, "C3": 5}
HUNT_DEFAULT_ORDERS = {"C1": [10, 12, 14, 16], "C2": [8, 10, 12, 14], "C3": [8, 10, 12, 14]}


def cmd_hunt(args: argparse.Namespace, out: IO[str]) -> int:
    which = args.conjecture.upper()
    if which not in HUNT_DEGREE:
        raise UsageError(f"unknown conjecture {args.conjecture!r}; choose C1, C2 or C3")
    if (args.file is None) == (not args.random):
        raise UsageError("give exactly one of --file or --random")
    if args.file is not None:
        stream = _open_in(args.file)
        corpus: Iterable = [g for _, g in read_graph6(stream)]
    else:
        orders = args.n or HUNT_DEFAULT_ORDERS[which]
        corpus = ver.random_regular_corpus(orders, HUNT_DEGREE[which], args.samples, _seed(args))
    with _pool_map(_jobs(args)) as mapper:
        report = ver.hunt_conjectures(int(which[1]), corpus, mapper)
    _emit(out, report.to_json())
    if report.failures:
        return EXIT_ERROR
    return EXIT_FINDING if report.findings else EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="domlab", description="Exact total [1,2]-domination laboratory.")
    ap.add_argument("-o", "--output", help="write results here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit family members as graph6")
    gen.add_argument("--family", required=True, help=", ".join(fam.FAMILY_KINDS))
    for name in ("n", "k", "a", "b", "p"):
        gen.add_argument(f"--{name}", type=int)
    gen.add_argument("--base", help="graph6 of H for the corona families")
    gen.add_argument("--seed", type=int, help="random-regular seed (default $DOMLAB_SEED or 0)")
    gen.add_argument("--count", type=int, default=1, help="number of graphs (seeds seed, seed+1, ...)")

    sol = sub.add_parser("solve", help="domination parameters of graph6 input")
    sol.add_argument("input", nargs="?", help="graph6 file (default stdin)")
    sol.add_argument("--kinds", default="gamma,gamma_t,gamma_12,gamma_t12")
    sol.add_argument("--jobs", type=int)

    vrf = sub.add_parser("verify", help="re-check one claim")
    vrf.add_argument("claim", help=", ".join(CLAIM_IDS))
    vrf.add_argument("--nmax", type=int, help="largest order swept (claim-specific default)")
    vrf.add_argument("--tree-max", type=int, default=10, help="largest tree order for T3.1")

    hunt = sub.add_parser("hunt", help="counterexample search for C1, C2, C3")
    hunt.add_argument("conjecture")
    hunt.add_argument("--file", help="graph6 corpus")
    hunt.add_argument("--random", action="store_true", help="sample random regular graphs")
    hunt.add_argument("--n", type=int, action="append", help="order to sample (repeatable)")
    hunt.add_argument("--samples", type=int, default=100)
    hunt.add_argument("--seed", type=int)
    hunt.add_argument("--jobs", type=int)
    return ap


COMMANDS = {"gen": cmd_gen, "solve": cmd_solve, "verify": cmd_verify, "hunt": cmd_hunt}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.output:
            out = open(args.output, "w", encoding="ascii")
        return COMMANDS[args.command](args, out)
    except (UsageError, Graph6Error, GraphError, OSError) as exc:
        print(f"domlab {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
