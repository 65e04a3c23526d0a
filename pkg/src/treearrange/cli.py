"""Command-line frontend: solving, verification, generation, enumeration,
oracle runs, separating-tree reports, SVG rendering, and a scaling benchmark.

Input formats
-------------
Edge list: first meaningful line is n, then n-1 lines "u v" with 1-based
labels.  Blank lines and "#" comments are ignored.

Head vector: a single line of n integers; entry i is the parent of vertex i,
0 marks the root.  Defines a rooted tree.

Arrangement: n lines "vertex position".

Exit codes: 0 success, 1 usage or parse error, 2 constraint violation
reported by verify.
"""

from __future__ import annotations

import argparse
import gc
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Union

from . import displacement, intervals
from .metrics import cost, covering_edge, find_crossing_linear
from .oracle import brute_force_min, exhaustive_profile, find_separating_trees
from .svg import render_svg
from .trees import (
    Arrangement,
    FreeTree,
    RootedTree,
    enumerate_labeled_trees,
    path_tree,
    random_tree,
)

ALGORITHMS = {"hs": displacement, "intervals": intervals}


# ----------------------------------------------------------------------------
# File formats
# ----------------------------------------------------------------------------

def _meaningful_lines(text: str) -> list[tuple[int, str]]:
    """(line number, content) pairs with comments and blank lines removed."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _int_tokens(number: int, line: str, expected: int) -> list[int]:
    tokens = line.split()
    if len(tokens) != expected:
        raise ValueError(f"line {number}: expected {expected} fields, got {len(tokens)}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"line {number}: non-integer field in {line!r}") from None


def parse_edge_list(text: str) -> FreeTree:
    """Edge-list format: n on the first meaningful line, then n-1 "u v" lines."""
    lines = _meaningful_lines(text)
    if not lines:
        raise ValueError("empty tree file")
    number, header = lines[0]
    (n,) = _int_tokens(number, header, 1)
    edges = []
    for number, line in lines[1:]:
        u, v = _int_tokens(number, line, 2)
        edges.append((u, v))
    return FreeTree(n, edges)


def parse_head_vector(text: str) -> RootedTree:
    """Head-vector format: one line, entry i is p(i), 0 marks the root."""
    lines = _meaningful_lines(text)
    if len(lines) != 1:
        raise ValueError(
            f"head-vector format is a single line, found {len(lines)} meaningful lines"
        )
    number, line = lines[0]
    try:
        heads = [int(t) for t in line.split()]
    except ValueError:
        raise ValueError(f"line {number}: non-integer head entry") from None
    n = len(heads)
    roots = [i for i, h in enumerate(heads, start=1) if h == 0]
    if len(roots) != 1:
        raise ValueError(f"line {number}: expected exactly one 0 entry, got {len(roots)}")
    edges = [(h, i) for i, h in enumerate(heads, start=1) if h != 0]
    return RootedTree(FreeTree(n, edges), roots[0])


def parse_arrangement(text: str, n: int) -> Arrangement:
    """Arrangement format: n lines "vertex position"."""
    positions: dict[int, int] = {}
    lines = _meaningful_lines(text)
    for number, line in lines:
        vertex, position = _int_tokens(number, line, 2)
        if vertex in positions:
            raise ValueError(f"line {number}: vertex {vertex} listed twice")
        positions[vertex] = position
    if len(positions) != n:
        raise ValueError(f"arrangement lists {len(positions)} vertices, tree has {n}")
    return Arrangement(positions)


def format_edge_list(tree: FreeTree) -> str:
    lines = [str(tree.n)]
    lines.extend(f"{u} {v}" for u, v in tree.edges)
    return "\n".join(lines) + "\n"


def _load_tree(path: str, fmt: str) -> Union[FreeTree, RootedTree]:
    text = Path(path).read_text()
    if fmt == "heads":
        return parse_head_vector(text)
    return parse_edge_list(text)


def _as_rooted(tree: Union[FreeTree, RootedTree], root: Optional[int]) -> RootedTree:
    """Resolve the root for a projective task; an explicit --root wins."""
    if root is not None:
        free = tree.tree if isinstance(tree, RootedTree) else tree
        return RootedTree(free, root)
    if isinstance(tree, RootedTree):
        return tree
    raise ValueError("projective task needs --root (or the heads input format)")


def _as_free(tree: Union[FreeTree, RootedTree]) -> FreeTree:
    return tree.tree if isinstance(tree, RootedTree) else tree


def _emit(out, tree_n: int, arr: Arrangement, total: int) -> None:
    for v in range(1, tree_n + 1):
        out.write(f"{v}\t{arr[v]}\n")
    out.write(f"D={total}\n")


# ----------------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------------

def cmd_solve(args) -> int:
    tree = _load_tree(args.input, args.format)
    solver = ALGORITHMS[args.algorithm]
    if args.task == "projective":
        rooted = _as_rooted(tree, args.root)
        arr = solver.optimal_projective(rooted)
        total = cost(rooted, arr)
        _emit(sys.stdout, rooted.n, arr, total)
    else:
        free = _as_free(tree)
        arr = solver.optimal_planar(free)
        total = cost(free, arr)
        _emit(sys.stdout, free.n, arr, total)
    return 0


def cmd_verify(args) -> int:
    tree = _load_tree(args.input, args.format)
    rooted = _as_rooted(tree, args.root) if args.task == "projective" else None
    free = _as_free(tree)
    arr = parse_arrangement(Path(args.arrangement).read_text(), free.n)
    print(f"D={cost(free, arr)}")
    crossing = find_crossing_linear(free, arr)
    if args.task == "planar":
        if crossing is None:
            print("planar: yes")
            return 0
        print("planar: no")
        print(f"crossing: {{{crossing.first[0]},{crossing.first[1]}}} x "
              f"{{{crossing.second[0]},{crossing.second[1]}}}")
        return 2
    if crossing is not None:
        print("projective: no (crossing)")
        print(f"crossing: {{{crossing.first[0]},{crossing.first[1]}}} x "
              f"{{{crossing.second[0]},{crossing.second[1]}}}")
        return 2
    cover = covering_edge(rooted, arr)
    if cover is not None:
        print("projective: no (root covered)")
        print(f"cover: root {rooted.root} covered by {{{cover[0]},{cover[1]}}}")
        return 2
    print("projective: yes")
    return 0


def cmd_gen(args) -> int:
    text = format_edge_list(random_tree(args.n, args.seed))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_enum(args) -> int:
    for tree in enumerate_labeled_trees(args.n):
        print(" ".join(f"{u} {v}" for u, v in tree.edges))
    return 0


def cmd_oracle(args) -> int:
    tree = _load_tree(args.input, args.format)
    if args.task == "projective":
        rooted = _as_rooted(tree, args.root)
        result = brute_force_min(rooted, "projective")
        _emit(sys.stdout, rooted.n, result.witness, result.min_cost)
    else:
        free = _as_free(tree)
        result = brute_force_min(free, args.task)
        _emit(sys.stdout, free.n, result.witness, result.min_cost)
    return 0


def cmd_separate(args) -> int:
    pairs = find_separating_trees(args.n)
    for tree, root in pairs:
        profile = exhaustive_profile(tree)
        edges = ";".join(f"{u}-{v}" for u, v in tree.edges)
        print(
            f"edges={edges} root={root} "
            f"projective={profile.projective_min[root]} planar={profile.planar_min}"
        )
    print(f"count={len(pairs)}")
    return 0


def cmd_render(args) -> int:
    tree = _load_tree(args.input, args.format)
    solver = ALGORITHMS[args.algorithm]
    if args.task == "projective":
        rooted = _as_rooted(tree, args.root)
        svg = render_svg(rooted, solver.optimal_projective(rooted), root=rooted.root)
    else:
        free = _as_free(tree)
        svg = render_svg(free, solver.optimal_planar(free))
    Path(args.out).write_text(svg)
    return 0


# ----------------------------------------------------------------------------
# Benchmark
# ----------------------------------------------------------------------------

@dataclass
class BenchRow:
    family: str
    algorithm: str
    n: int
    mean_seconds: float
    ratio: Optional[float]  # vs the previous size, when that size is exactly n/2


def run_benchmark(sizes: Sequence[int], trials: int, seed: int) -> list[BenchRow]:
    """Time both planar pipelines on random trees and on paths.

    Tree construction stays outside the timed regions, the collector is
    paused around each timed solve, and one untimed warmup sweep precedes
    the measurements.  Trials are interleaved across sizes so that machine
    load drift hits all sizes alike instead of skewing the doubling ratios.
    """
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be ascending")
    if trials < 1:
        raise ValueError("trials must be positive")
    totals: dict[tuple[str, str, int], float] = {}
    for family in ("random", "path"):
        for sweep in range(trials + 1):  # sweep 0 is the warmup
            for n in sizes:
                if family == "random":
                    tree = random_tree(n, seed + 7919 * max(sweep - 1, 0))
                else:
                    tree = path_tree(n)
                for algorithm, module in ALGORITHMS.items():
                    gc.collect()
                    gc.disable()
                    start = time.perf_counter()
                    module.optimal_planar(tree)
                    elapsed = time.perf_counter() - start
                    gc.enable()
                    if sweep > 0:
                        key = (family, algorithm, n)
                        totals[key] = totals.get(key, 0.0) + elapsed
    rows: list[BenchRow] = []
    previous: dict[tuple[str, str], tuple[int, float]] = {}
    for family in ("random", "path"):
        for n in sizes:
            for algorithm in ALGORITHMS:
                mean = totals[(family, algorithm, n)] / trials
                key = (family, algorithm)
                ratio = None
                if key in previous and previous[key][0] * 2 == n:
                    ratio = mean / previous[key][1]
                previous[key] = (n, mean)
                rows.append(BenchRow(family, algorithm, n, mean, ratio))
    return rows


def cmd_bench(args) -> int:
    rows = run_benchmark(args.sizes, args.trials, args.seed)
    print(f"{'family':<8} {'algorithm':<10} {'n':>9} {'mean_s':>10} {'ratio':>7}")
    for row in rows:
        ratio = f"{row.ratio:.2f}" if row.ratio is not None else "-"
        print(
            f"{row.family:<8} {row.algorithm:<10} {row.n:>9} "
            f"{row.mean_seconds:>10.4f} {ratio:>7}"
        )
    return 0


# ----------------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # argparse's default usage-error exit code is 2, which this tool reserves
    # for verify's constraint violations; remap usage errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_options(sub, with_algorithm: bool = True) -> None:
    sub.add_argument("input", help="tree file")
    sub.add_argument("--format", choices=("edges", "heads"), default="edges")
    sub.add_argument("--root", type=int, default=None)
    if with_algorithm:
        sub.add_argument("--algorithm", choices=tuple(ALGORITHMS), default="intervals")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treearrange", description=__doc__.split("\n", 1)[0])
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="minimum-cost arrangement")
    _add_input_options(solve)
    solve.add_argument("--task", choices=("planar", "projective"), default="planar")
    solve.set_defaults(func=cmd_solve)

    verify = commands.add_parser("verify", help="check an arrangement file")
    _add_input_options(verify, with_algorithm=False)
    verify.add_argument("arrangement", help="arrangement file")
    verify.add_argument("--task", choices=("planar", "projective"), default="planar")
    verify.set_defaults(func=cmd_verify)

    gen = commands.add_parser("gen", help="random tree in edge-list format")
    gen.add_argument("n", type=int)
    gen.add_argument("seed", type=int, nargs="?", default=0)
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_gen)

    enum = commands.add_parser("enum", help="all labeled trees, one per line")
    enum.add_argument("n", type=int)
    enum.set_defaults(func=cmd_enum)

    oracle = commands.add_parser("oracle", help="brute-force minimum (n <= 9)")
    _add_input_options(oracle, with_algorithm=False)
    oracle.add_argument(
        "--task",
        choices=("unrestricted", "planar", "projective"),
        default="planar",
    )
    oracle.set_defaults(func=cmd_oracle)

    separate = commands.add_parser(
        "separate", help="trees where some root worsens the planar optimum"
    )
    separate.add_argument("n", type=int)
    separate.set_defaults(func=cmd_separate)

    bench = commands.add_parser("bench", help="linear-scaling benchmark")
    bench.add_argument("--sizes", type=int, nargs="+", required=True)
    bench.add_argument("--trials", type=int, default=1)
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(func=cmd_bench)

    render = commands.add_parser("render", help="SVG arc diagram")
    _add_input_options(render)
    render.add_argument("--task", choices=("planar", "projective"), default="planar")
    render.add_argument("--out", required=True)
    render.set_defaults(func=cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
