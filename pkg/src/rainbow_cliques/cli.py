"""Command-line front end: construct / analyze / find / count / verify /
supersat / turan over ECG files and CSV outputs.

Exit codes: 0 success; 1 verification failure or pattern absent with
--require; 2 usage error; 3 parse or IO error.
"""

from __future__ import annotations

import argparse
import sys

from .constructions import counterexample_n7, extremal, k6_variant, lexicographic
from .graph import ECGParseError, format_ecg, is_complete, parse_ecg, saturation
from .search import (
    count_rainbow_cliques,
    find_monochromatic_cycle,
    find_monochromatic_path,
    find_properly_colored_c4,
    find_rainbow_clique,
    find_rainbow_complete_bipartite,
    find_rainbow_turan,
)
from .turan import thresholds, turan_number
from .verify import (
    falsify_two_cliques,
    format_report,
    supersaturation_experiment,
    verify_k6_dichotomy,
    verify_k8_reduction,
    verify_k9_reduction,
    verify_tightness,
    verify_triangle_threshold,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rbc",
        description="Edge-colored graph extremal analysis toolkit.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="generate a named coloring as ECG")
    c.add_argument(
        "target",
        choices=["extremal", "lexicographic", "k6-variant", "counterexample-n7"],
    )
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--which", choices=["turan-pair", "mono-c6"])
    c.add_argument("--out")

    a = sub.add_parser("analyze", help="print counts and saturation tallies")
    a.add_argument("file")

    f = sub.add_parser("find", help="search for a colored pattern")
    f.add_argument("file")
    f.add_argument(
        "--pattern",
        required=True,
        choices=[
            "rainbow-clique",
            "rainbow-bipartite",
            "rainbow-turan",
            "mono-cycle",
            "mono-path",
            "proper-c4",
        ],
    )
    f.add_argument("--k", type=int)
    f.add_argument("--a", type=int)
    f.add_argument("--b", type=int)
    f.add_argument("--r", type=int)
    f.add_argument("--len", type=int, dest="length")
    f.add_argument("--require", action="store_true")

    cn = sub.add_parser("count", help="count rainbow k-cliques")
    cn.add_argument("file")
    cn.add_argument("--k", type=int, required=True)

    v = sub.add_parser("verify", help="run a lemma verifier")
    v.add_argument(
        "lemma",
        choices=[
            "triangle-n3",
            "triangle-n4",
            "triangle-n5",
            "k6-dichotomy",
            "k8-reduction",
            "k9-reduction",
            "tightness",
            "two-cliques",
        ],
    )
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--trials", type=int, default=10000)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--out")

    s = sub.add_parser("supersat", help="supersaturation counting experiment")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--ns", required=True, help="comma-separated vertex counts")
    s.add_argument("--eps", type=float, required=True)
    s.add_argument("--seed", type=int, default=1)
    s.add_argument("--csv")

    t = sub.add_parser("turan", help="print a table of Turán numbers")
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--max-k", type=int, required=True)
    return p


def _read_graph(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ECGParseError(0, f"cannot read {path}: {exc}") from exc
    return parse_ecg(text)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args) -> int:
    if args.target == "extremal":
        if args.n is None or args.k is None:
            raise UsageError("construct extremal requires --n and --k")
        g = extremal(args.n, args.k)
    elif args.target == "lexicographic":
        if args.n is None:
            raise UsageError("construct lexicographic requires --n")
        g = lexicographic(args.n)
    elif args.target == "k6-variant":
        if args.which is None:
            raise UsageError("construct k6-variant requires --which")
        g = k6_variant(args.which)
    else:
        g = counterexample_n7()
    _emit(format_ecg(g), args.out)
    if args.out:
        print(f"wrote {args.target}: n={g.n} e={g.e} c={g.c} -> {args.out}")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    g = _read_graph(args.file)
    prof = saturation(g)
    c0, c1, c2 = prof.tallies
    print(
        f"e={g.e} c={g.c} e+c={g.e + g.c} "
        f"complete={'true' if is_complete(g) else 'false'}"
    )
    print(f"c0={c0} c1={c1} c2={c2} sum_ds={prof.sum_ds}")
    return EXIT_OK


def _cmd_find(args) -> int:
    pattern = args.pattern
    needed = {
        "rainbow-clique": ["k"],
        "rainbow-bipartite": ["a", "b"],
        "rainbow-turan": ["r"],
        "mono-cycle": ["length"],
        "mono-path": ["length"],
        "proper-c4": [],
    }[pattern]
    for name in needed:
        if getattr(args, name) is None:
            flag = "--len" if name == "length" else f"--{name}"
            raise UsageError(f"{pattern} requires {flag}")
    g = _read_graph(args.file)
    if pattern == "rainbow-clique":
        w = find_rainbow_clique(g, args.k)
    elif pattern == "rainbow-bipartite":
        w = find_rainbow_complete_bipartite(g, args.a, args.b)
    elif pattern == "rainbow-turan":
        hit = find_rainbow_turan(g, args.r)
        w = hit[1] if hit else None
        if hit:
            print(f"parts={list(hit[0].sizes)}")
    elif pattern == "mono-cycle":
        w = find_monochromatic_cycle(g, args.length)
    elif pattern == "mono-path":
        w = find_monochromatic_path(g, args.length)
    else:
        w = find_properly_colored_c4(g)
    if w is None:
        print(f"{pattern}: absent")
        return EXIT_FAIL if args.require else EXIT_OK
    print(f"{pattern}: found vertices={list(w.vertices)}")
    for u, v, c in w.edges:
        print(f"  {u} {v} {c}")
    return EXIT_OK


def _cmd_count(args) -> int:
    g = _read_graph(args.file)
    print(count_rainbow_cliques(g, args.k))
    return EXIT_OK


def _cmd_verify(args) -> int:
    lemma = args.lemma
    if lemma.startswith("triangle-n"):
        report = verify_triangle_threshold(int(lemma[-1]))
    elif lemma == "k6-dichotomy":
        report = verify_k6_dichotomy()
    elif lemma == "k8-reduction":
        report = verify_k8_reduction()
    elif lemma == "k9-reduction":
        report = verify_k9_reduction()
    elif lemma == "tightness":
        if args.n is None or args.k is None:
            raise UsageError("verify tightness requires --n and --k")
        report = verify_tightness(args.n, args.k)
    else:
        if args.n is None or args.k is None:
            raise UsageError("verify two-cliques requires --n and --k")
        report = falsify_two_cliques(args.k, args.n, args.trials, args.seed)
    text = format_report(report)
    _emit(text, args.out)
    if args.out:
        print(text.splitlines()[0])
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_supersat(args) -> int:
    try:
        ns = [int(x) for x in args.ns.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --ns list {args.ns!r}") from None
    if not ns:
        raise UsageError("--ns must name at least one vertex count")
    rows, slope = supersaturation_experiment(args.k, ns, args.eps, args.seed)
    lines = ["n,ec,count"] + [f"{n},{ec},{cnt}" for n, ec, cnt in rows]
    _emit("\n".join(lines) + "\n", args.csv)
    print(f"slope={slope:.4f}")
    return EXIT_OK


def _cmd_turan(args) -> int:
    if args.max_n < 1 or args.max_k < 1:
        raise UsageError("turan table bounds must be positive")
    header = "n\\k " + " ".join(f"{k:>6}" for k in range(1, args.max_k + 1))
    print(header)
    for n in range(1, args.max_n + 1):
        cells = " ".join(f"{turan_number(n, k):>6}" for k in range(1, args.max_k + 1))
        print(f"{n:>4} {cells}")
    for k in (4, 5):
        if args.max_n >= k:
            ext, exi = thresholds(args.max_n, k)
            print(f"thresholds(n={args.max_n}, k={k}): extremal={ext} existence={exi}")
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct,
    "analyze": _cmd_analyze,
    "find": _cmd_find,
    "count": _cmd_count,
    "verify": _cmd_verify,
    "supersat": _cmd_supersat,
    "turan": _cmd_turan,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ECGParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
