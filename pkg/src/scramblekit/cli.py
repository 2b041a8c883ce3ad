"""Command-line front end.

Exit codes: 0 success, 2 bad parameters or malformed input, 3 a cap was
exceeded, 4 the sandwich ``tw <= sn <= gon`` failed.  Lines starting with
``::`` are machine-readable ``key=value`` records and never contain timings.
"""

from __future__ import annotations

import argparse
import itertools
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import divisors, scrambles
from .errors import CapExceeded, ScrambleKitError, TooLarge
from .families import FAMILIES, FamilySpec, generate
from .formats import dump_divisor, dump_dot, dump_graph, load_divisor, load_graph, load_scramble
from .report import _fmt_set, certificate_lines, certificate_text, compute_invariants
from .treewidth import treewidth, width_of_order

EXIT_OK, EXIT_BAD, EXIT_CAP, EXIT_SANDWICH = 0, 2, 3, 4


class _Fail(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Fail(EXIT_BAD, f"cannot read {path}: {exc.strerror}") from None


def _graph(path: str, need_edges: bool = True):
    g = load_graph(_read(path))
    if need_edges and g.n < 2:
        raise _Fail(EXIT_BAD, "invariants need a graph with at least two vertices")
    return g


def _num(tok: str):
    try:
        return int(tok)
    except ValueError:
        try:
            return float(tok)
        except ValueError:
            raise _Fail(EXIT_BAD, f"not a number: {tok!r}") from None


def _emit(*lines: str) -> None:
    for line in lines:
        print(line)


def _machine(*pairs: str) -> None:
    _emit(*(":: " + p for p in pairs))


def threads() -> int:
    raw = os.environ.get("SCRAMBLEKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------- commands


def cmd_gen(args) -> int:
    g = generate(FamilySpec(args.family, tuple(_num(p) for p in args.params), args.seed))
    text = dump_dot(g) if args.dot else dump_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    sys.stdout.write(dump_dot(_graph(args.graph, need_edges=False), args.name))
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = _graph(args.graph)
    chosen = args.tw or args.gon or args.sn_lower or args.sn_exact
    rep = compute_invariants(
        g,
        tw=args.tw or not chosen,
        gon=args.gon or not chosen,
        sn_lower=args.sn_lower or not chosen,
        sn_exact=args.sn_exact,
        sn_cap=args.cap,
        tw_cap=args.tw_cap,
        seed=args.seed,
    )
    _emit(f"graph {rep.graph_id}: {rep.n} vertices, {rep.edges} edges")
    if rep.tw:
        _emit(f"treewidth {rep.tw.width}")
    for name, res in (("sn lower bound", rep.sn_lower), ("sn exact", rep.sn_exact)):
        if res:
            _emit(f"{name} {res.value} ({res.strategy})", *certificate_text(res.certificate))
    if rep.gonality:
        _emit(f"gonality {rep.gonality.gonality}, witness {list(rep.gonality.witness)}")
    for stage, secs in rep.timings.items():
        _emit(f"time {stage}: {secs:.3f}s")
    _emit(*rep.machine_lines())
    if not rep.sandwich_ok:
        print("SANDWICH VIOLATED: " + rep.summary(), file=sys.stderr)
        return EXIT_SANDWICH
    return EXIT_OK


def cmd_order(args) -> int:
    g = _graph(args.graph, need_edges=False)
    s = load_scramble(_read(args.scramble), g)
    cert = scrambles.scramble_order(s)
    cert.verify(s)
    _emit(*certificate_text(cert))
    _machine(*certificate_lines(cert))
    return EXIT_OK


def cmd_tw(args) -> int:
    g = _graph(args.graph, need_edges=False)
    res = treewidth(g, args.cap)
    assert width_of_order(g, res.elimination_order) == res.width
    order = " ".join(map(str, res.elimination_order))
    _emit(f"treewidth {res.width}", f"elimination order: {order}")
    _machine(f"tw={res.width}", f"tw.order={order}")
    return EXIT_OK


def cmd_gonality(args) -> int:
    g = _graph(args.graph)
    res = divisors.gonality(g, max_degree=args.max_degree)
    assert divisors.has_positive_rank(g, res.witness)
    _emit(f"gonality {res.gonality}", "witness:", dump_divisor(res.witness).rstrip())
    _machine(f"gon={res.gonality}", "gon.witness=" + " ".join(map(str, res.witness)))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _graph(args.graph, need_edges=False)
    d = load_divisor(_read(args.divisor), g.n)
    red, script = divisors.reduce(g, d, args.vertex)
    assert divisors.replay(g, d, script) == red
    _emit(f"{args.vertex}-reduced divisor:", dump_divisor(red).rstrip(), f"firing script ({len(script)} sets):")
    _emit(*("fire " + _fmt_set(a) for a in script))
    _machine("reduced=" + " ".join(map(str, red)), f"script.length={len(script)}")
    _machine(*(f"script.{i}={_fmt_set(a)}" for i, a in enumerate(script)))
    return EXIT_OK


def cmd_rank(args) -> int:
    g = _graph(args.graph)
    d = load_divisor(_read(args.divisor), g.n)
    ok = divisors.has_positive_rank(g, d)
    _emit(f"degree {sum(d)}, " + ("positive rank" if ok else "rank 0 or less"))
    _machine(f"degree={sum(d)}", f"positive_rank={'true' if ok else 'false'}")
    return EXIT_OK


def _sn_output(key: str, res) -> None:
    res.certificate.verify(res.best_scramble)
    _emit(f"{key} {res.value} ({res.strategy})", *certificate_text(res.certificate), "eggs:")
    _emit(*("  egg " + _fmt_set(e) for e in res.best_scramble.eggs))
    _machine(f"{key}={res.value}", f"{key}.strategy={res.strategy}")
    _machine(*(f"{key}.{line}" for line in certificate_lines(res.certificate)))
    _machine(f"{key}.eggs=" + ";".join(_fmt_set(e) for e in res.best_scramble.eggs))


def cmd_sn_lower(args) -> int:
    g = _graph(args.graph)
    _sn_output("sn_lower", scrambles.sn_lower_bound(g, seed=args.seed))
    return EXIT_OK


def cmd_sn_exact(args) -> int:
    g = _graph(args.graph)
    _sn_output("sn_exact", scrambles.sn_exact(g, args.cap))
    return EXIT_OK


# ---------------------------------------------------------------- sweep


def _expand(tok: str) -> list:
    if ":" in tok:
        lo, hi = (_num(x) for x in tok.split(":", 1))
        if not (isinstance(lo, int) and isinstance(hi, int)) or lo > hi:
            raise _Fail(EXIT_BAD, f"bad range {tok!r}")
        return list(range(lo, hi + 1))
    return [_num(tok)]


def _sweep_one(job):
    family, params, seed, flags = job
    try:
        g = generate(FamilySpec(family, params, seed))
        if g.n < 2:
            return "skip", "single vertex"
        rep = compute_invariants(g, **flags)
        return "ok", rep
    except (TooLarge, CapExceeded) as exc:
        return "cap", str(exc)
    except ScrambleKitError as exc:
        return "bad", str(exc)


def cmd_sweep(args) -> int:
    if args.family not in FAMILIES:
        raise _Fail(EXIT_BAD, f"unknown family {args.family!r}")
    grids = [_expand(t) for t in args.ranges]
    seeded = args.family in ("tree", "random")
    seeds = range(args.seed, args.seed + args.seeds) if seeded else [None]
    flags = dict(tw=True, gon=True, sn_lower=True, sn_exact=args.sn_exact, sn_cap=args.cap)
    jobs = [(args.family, tuple(p), s, flags) for p in itertools.product(*grids) for s in seeds]
    if args.budget is not None and len(jobs) > args.budget:
        raise _Fail(EXIT_CAP, f"{len(jobs)} instances exceed the budget of {args.budget}")

    workers = min(threads(), len(jobs)) or 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_one, jobs))
    else:
        results = [_sweep_one(j) for j in jobs]

    tally = {"ok": 0, "violated": 0, "skip": 0, "cap": 0, "bad": 0}
    for (family, params, seed, _), (status, payload) in zip(jobs, results):
        label = f"family={family} params={','.join(map(str, params))}"
        if seed is not None:
            label += f" seed={seed}"
        if status == "ok":
            status = "ok" if payload.sandwich_ok else "violated"
            _machine(f"sweep {label} {payload.summary()}")
        else:
            _emit(f"{label}: {status} ({payload})")
            _machine(f"sweep {label} status={status}")
        tally[status] += 1
    _emit("summary: " + ", ".join(f"{k} {v}" for k, v in tally.items()))
    _machine("summary " + " ".join(f"{k}={v}" for k, v in tally.items()))
    if tally["violated"]:
        return EXIT_SANDWICH
    if tally["cap"]:
        return EXIT_CAP
    if tally["bad"]:
        return EXIT_BAD
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scramblekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="emit a graph family")
    s.add_argument("family", choices=sorted(FAMILIES))
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--out")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("export-dot", help="convert a graph file to DOT")
    s.add_argument("graph")
    s.add_argument("--name", default="G")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("invariants", help="tw, sn bounds and gonality with the sandwich check")
    s.add_argument("graph")
    s.add_argument("--tw", action="store_true")
    s.add_argument("--gon", action="store_true")
    s.add_argument("--sn-lower", action="store_true")
    s.add_argument("--sn-exact", action="store_true")
    s.add_argument("--cap", type=int, default=6, help="vertex cap for --sn-exact")
    s.add_argument("--tw-cap", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("order", help="order of a scramble with its certificate")
    s.add_argument("graph")
    s.add_argument("scramble")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("tw", help="exact treewidth")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=20)
    s.set_defaults(func=cmd_tw)

    s = sub.add_parser("gonality", help="divisorial gonality with a witness")
    s.add_argument("graph")
    s.add_argument("--max-degree", type=int, default=None)
    s.set_defaults(func=cmd_gonality)

    s = sub.add_parser("reduce", help="reduce a divisor at a vertex")
    s.add_argument("graph")
    s.add_argument("divisor")
    s.add_argument("vertex", type=int)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("rank", help="test a divisor for positive rank")
    s.add_argument("graph")
    s.add_argument("divisor")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("sn-lower", help="certified lower bound on the scramble number")
    s.add_argument("graph")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sn_lower)

    s = sub.add_parser("sn-exact", help="exact scramble number on small graphs")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=6)
    s.set_defaults(func=cmd_sn_exact)

    s = sub.add_parser("sweep", help="invariants over a range of family parameters")
    s.add_argument("family")
    s.add_argument("ranges", nargs="*", help="one value or lo:hi range per parameter")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--seeds", type=int, default=1, help="seeds per instance for tree/random")
    s.add_argument("--budget", type=int, default=None, help="maximum number of instances")
    s.add_argument("--sn-exact", action="store_true")
    s.add_argument("--cap", type=int, default=6)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_BAD
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (TooLarge, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ScrambleKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD


if __name__ == "__main__":
    sys.exit(main())
