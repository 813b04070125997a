"""Command-line front end and the plain-text file formats.

Formats:
  pattern / string  one line of whitespace-separated signed 64-bit integers
  tree              header "tree N", then N-1 lines "parent child label"
  dag               header "dag V E", then E lines "source target label"

Exit codes: 0 success (including "no match"), 1 usage error, 2 parse or
validation error.
"""

import argparse
import re
import sys
import time
from dataclasses import dataclass, field

from .dag import DagValidationError, TextDag, build_dag, build_dasg, match_dag, match_dag_explored
from .gen import gen_adversarial, gen_random_dag, gen_random_string, gen_random_tree
from .oracles import naive_match_string, naive_match_tree, naive_opsm
from .pattern import build_pattern_tables
from .stringmatch import match_string
from .tree import TextTree, TreeValidationError, build_tree
from .treematch import match_tree

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# size caps for --oracle reroutes; the brute-force paths are quadratic
# (strings, trees) or exponential (opsm)
ORACLE_STRING_LIMIT = 2048
ORACLE_TREE_LIMIT = 2048
ORACLE_OPSM_LIMIT = 20


class UsageError(Exception):
    """Bad command line or an unusable flag combination."""


class ParseError(ValueError):
    """Input file rejected; the message carries path, line, and column."""

    def __init__(self, path: str, line: int, msg: str, col: int | None = None):
        self.path = path
        self.line = line
        self.col = col
        self.msg = msg
        loc = f"{path}:{line}" if col is None else f"{path}:{line}:{col}"
        super().__init__(f"{loc}: {msg}")


@dataclass
class RunConfig:
    subcommand: str
    inputs: dict[str, str] = field(default_factory=dict)
    prune: bool = True
    oracle: bool = False
    stats: bool = False
    witness: bool = False
    seed: int = 0
    output: str | None = None
    params: dict[str, object] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# file parsing


def _content_rows(path: str) -> list[tuple[int, list[re.Match]]]:
    rows = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            toks = list(re.finditer(r"\S+", line))
            if toks:
                rows.append((lineno, toks))
    return rows


def _int_token(path: str, lineno: int, tok: re.Match) -> int:
    text = tok.group()
    col = tok.start() + 1
    try:
        value = int(text)
    except ValueError:
        raise ParseError(path, lineno, f"not an integer: {text!r}", col) from None
    if not INT64_MIN <= value <= INT64_MAX:
        raise ParseError(
            path, lineno, f"integer out of 64-bit signed range: {text}", col
        )
    return value


def parse_pattern_file(path: str) -> tuple[int, ...]:
    """One line of integers; an empty file is the empty sequence."""
    rows = _content_rows(path)
    if not rows:
        return ()
    if len(rows) > 1:
        lineno, toks = rows[1]
        raise ParseError(
            path, lineno, "expected a single line of integers", toks[0].start() + 1
        )
    lineno, toks = rows[0]
    return tuple(_int_token(path, lineno, tok) for tok in toks)


def parse_string_file(path: str) -> tuple[int, ...]:
    """Text strings use the same one-line format as patterns."""
    return parse_pattern_file(path)


def parse_tree_file(path: str) -> TextTree:
    rows = _content_rows(path)
    if not rows:
        raise ParseError(path, 1, "missing 'tree N' header")
    header_line, toks = rows[0]
    if toks[0].group() != "tree" or len(toks) != 2:
        raise ParseError(
            path, header_line, "expected header 'tree N'", toks[0].start() + 1
        )
    n = _int_token(path, header_line, toks[1])
    if n < 1:
        raise ParseError(path, header_line, "node count must be at least 1")
    if len(rows) - 1 != n - 1:
        raise ParseError(
            path,
            header_line,
            f"expected {n - 1} edge lines, found {len(rows) - 1}",
        )
    edges = []
    seen = set()
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise ParseError(
                path, lineno, "expected 'parent child label'", toks[0].start() + 1
            )
        u, v, lab = (_int_token(path, lineno, tok) for tok in toks)
        if not 0 <= u < n:
            raise ParseError(path, lineno, f"unknown parent id {u}")
        if not 0 <= v < n:
            raise ParseError(path, lineno, f"unknown child id {v}")
        if v == 0:
            raise ParseError(path, lineno, "node 0 is the root and cannot be a child")
        if v in seen:
            raise ParseError(path, lineno, f"duplicate child {v}")
        seen.add(v)
        edges.append((u, v, lab))
    try:
        return build_tree(edges)
    except TreeValidationError as exc:
        raise ParseError(path, header_line, str(exc)) from exc


def parse_dag_file(path: str) -> TextDag:
    rows = _content_rows(path)
    if not rows:
        raise ParseError(path, 1, "missing 'dag V E' header")
    header_line, toks = rows[0]
    if toks[0].group() != "dag" or len(toks) != 3:
        raise ParseError(
            path, header_line, "expected header 'dag V E'", toks[0].start() + 1
        )
    v_count = _int_token(path, header_line, toks[1])
    e_count = _int_token(path, header_line, toks[2])
    if v_count < 1:
        raise ParseError(path, header_line, "vertex count must be at least 1")
    if e_count < 0:
        raise ParseError(path, header_line, "edge count cannot be negative")
    if len(rows) - 1 != e_count:
        raise ParseError(
            path,
            header_line,
            f"expected {e_count} edge lines, found {len(rows) - 1}",
        )
    edges = []
    for lineno, toks in rows[1:]:
        if len(toks) != 3:
            raise ParseError(
                path, lineno, "expected 'source target label'", toks[0].start() + 1
            )
        u, v, lab = (_int_token(path, lineno, tok) for tok in toks)
        if not 0 <= u < v_count:
            raise ParseError(path, lineno, f"unknown source vertex {u}")
        if not 0 <= v < v_count:
            raise ParseError(path, lineno, f"unknown target vertex {v}")
        if u == v:
            raise ParseError(path, lineno, f"cycle detected: self-loop at vertex {u}")
        edges.append((u, lab, v))
    try:
        return build_dag(v_count, edges)
    except DagValidationError as exc:
        raise ParseError(path, header_line, str(exc)) from exc


# ---------------------------------------------------------------------------
# file writing


def pattern_file_text(values) -> str:
    return " ".join(str(v) for v in values) + "\n"


def tree_file_text(tree: TextTree) -> str:
    lines = [f"tree {tree.node_count}"]
    for v in range(1, tree.node_count):
        lines.append(f"{tree.parent[v]} {v} {tree.edge_label[v]}")
    return "\n".join(lines) + "\n"


def dag_file_text(dag: TextDag) -> str:
    lines = [f"dag {dag.vertex_count} {len(dag.edges)}"]
    for u, c, v in dag.edges:
        lines.append(f"{u} {v} {c}")
    return "\n".join(lines) + "\n"


def write_dag_file(path: str, dag: TextDag) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dag_file_text(dag))


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as f:
            f.write(text)


# ---------------------------------------------------------------------------
# subcommand execution


def _load_pattern(config: RunConfig) -> tuple[int, ...]:
    path = config.inputs["pattern"]
    p = parse_pattern_file(path)
    if not p:
        raise ParseError(path, 1, "pattern must be non-empty")
    return p


def _check_stats_flag(config: RunConfig) -> None:
    if config.stats and config.oracle:
        raise UsageError("--stats cannot be combined with --oracle")


def _run_match_string(config: RunConfig) -> int:
    _check_stats_flag(config)
    p = _load_pattern(config)
    t = parse_string_file(config.inputs["text"])
    lines = []
    if config.oracle:
        if len(t) > ORACLE_STRING_LIMIT:
            raise UsageError(
                f"--oracle is limited to texts of length <= {ORACLE_STRING_LIMIT}"
            )
        positions = naive_match_string(p, t)
        stats = None
    else:
        positions, stats = match_string(build_pattern_tables(p), t)
    lines.extend(str(i) for i in positions)
    if config.stats and stats is not None:
        lines.append(f"goto={stats.goto_count} fail={stats.fail_count}")
    _emit("".join(line + "\n" for line in lines), config.output)
    return 0


def _run_match_tree(config: RunConfig) -> int:
    _check_stats_flag(config)
    p = _load_pattern(config)
    tree = parse_tree_file(config.inputs["tree"])
    lines = []
    if config.oracle:
        if tree.node_count > ORACLE_TREE_LIMIT:
            raise UsageError(
                f"--oracle is limited to trees with <= {ORACLE_TREE_LIMIT} nodes"
            )
        nodes = naive_match_tree(p, tree)
        stats = None
    else:
        report = match_tree(build_pattern_tables(p), tree, prune=config.prune)
        nodes = report.matched_nodes
        stats = report.stats
    lines.extend(str(v) for v in nodes)
    if config.stats and stats is not None:
        lines.append(f"goto={stats.goto_count} fail={stats.fail_count}")
    _emit("".join(line + "\n" for line in lines), config.output)
    return 0


def _run_match_dag(config: RunConfig) -> int:
    if config.oracle:
        raise UsageError(
            "match-dag has no brute-force oracle; use opsm --oracle for "
            "subsequence-graph texts"
        )
    p = _load_pattern(config)
    dag = parse_dag_file(config.inputs["dag"])
    witness = match_dag(build_pattern_tables(p), dag)
    if witness is None:
        _emit("no\n", config.output)
    else:
        text = "yes\n"
        if config.witness:
            text += " ".join(str(v) for v in witness) + "\n"
        _emit(text, config.output)
    return 0


def _run_build_dasg(config: RunConfig) -> int:
    t = parse_string_file(config.inputs["text"])
    _emit(dag_file_text(build_dasg(t)), config.output)
    return 0


def _run_opsm(config: RunConfig) -> int:
    p = parse_pattern_file(config.inputs["pattern"])
    t = parse_string_file(config.inputs["text"])
    if config.oracle:
        if len(t) > ORACLE_OPSM_LIMIT:
            raise UsageError(
                f"--oracle is limited to texts of length <= {ORACLE_OPSM_LIMIT}"
            )
        found = naive_opsm(p, t)
    else:
        from .dag import opsm as opsm_fast

        found = opsm_fast(p, t)
    _emit("yes\n" if found else "no\n", config.output)
    return 0


def _run_gen(config: RunConfig) -> int:
    kind = config.subcommand.split()[1]
    params = config.params
    if kind == "adversarial":
        h = params["height"]
        m = params["pattern_length"] if params["pattern_length"] is not None else h - 2
        try:
            inst = gen_adversarial(h, m)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(tree_file_text(inst.tree), params["tree_out"])
        if params["pattern_out"] is not None:
            _emit(pattern_file_text(inst.pattern), params["pattern_out"])
        return 0
    if kind == "random-string":
        if params["length"] < 0:
            raise UsageError("length cannot be negative")
        if params["alphabet"] < 1:
            raise UsageError("alphabet size must be at least 1")
        seq = gen_random_string(params["length"], params["alphabet"], config.seed)
        _emit(pattern_file_text(seq), config.output)
        return 0
    if kind == "random-tree":
        if params["nodes"] < 1:
            raise UsageError("node count must be at least 1")
        if params["alphabet"] < 1:
            raise UsageError("alphabet size must be at least 1")
        tree = gen_random_tree(params["nodes"], params["alphabet"], config.seed)
        _emit(tree_file_text(tree), config.output)
        return 0
    if kind == "random-dag":
        if params["vertices"] < 1:
            raise UsageError("vertex count must be at least 1")
        if not 0.0 <= params["density"] <= 1.0:
            raise UsageError("density must lie in [0, 1]")
        if params["alphabet"] < 1:
            raise UsageError("alphabet size must be at least 1")
        dag = gen_random_dag(
            params["vertices"], params["density"], params["alphabet"], config.seed
        )
        _emit(dag_file_text(dag), config.output)
        return 0
    raise UsageError(f"unknown gen subcommand: {kind}")


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated integer list") from None
    if not values:
        raise UsageError(f"{what} must name at least one value")
    return values


def organ_pipe_instance(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Swapped-pair text of even length n and the increasing pattern of
    length n/2 + 1 that exceeds the text's longest increasing subsequence,
    forcing a full backtracking search with no match."""
    if n < 2 or n % 2 != 0:
        raise UsageError("dasg bench sizes must be even and at least 2")
    t = []
    for k in range(1, n, 2):
        t.extend((k + 1, k))
    p = tuple(range(1, n // 2 + 2))
    return p, tuple(t)


def _run_bench(config: RunConfig) -> int:
    kind = config.subcommand.split()[1]
    params = config.params
    if kind == "adversarial":
        heights = sorted(_parse_int_list(params["heights"], "--heights"))
        rows = ["h,N,m,goto,fail_pruned,fail_naive"]
        for h in heights:
            m = (
                params["pattern_length"]
                if params["pattern_length"] is not None
                else h - 2
            )
            try:
                inst = gen_adversarial(h, m)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
            tables = build_pattern_tables(inst.pattern)
            pruned = match_tree(tables, inst.tree, prune=True)
            naive = match_tree(tables, inst.tree, prune=False)
            rows.append(
                f"{h},{inst.tree.node_count},{m},{pruned.stats.goto_count},"
                f"{pruned.stats.fail_count},{naive.stats.fail_count}"
            )
        _emit("".join(row + "\n" for row in rows), config.output)
        return 0
    if kind == "dasg":
        sizes = sorted(_parse_int_list(params["sizes"], "--sizes"))
        rows = ["n,m,explored,matched,seconds"]
        for n in sizes:
            p, t = organ_pipe_instance(n)
            tables = build_pattern_tables(p)
            dag = build_dasg(t)
            start = time.perf_counter()
            witness, explored = match_dag_explored(tables, dag)
            elapsed = time.perf_counter() - start
            matched = "yes" if witness is not None else "no"
            rows.append(f"{n},{len(p)},{explored},{matched},{elapsed:.6f}")
        _emit("".join(row + "\n" for row in rows), config.output)
        return 0
    raise UsageError(f"unknown bench subcommand: {kind}")


def run(config: RunConfig) -> int:
    cmd = config.subcommand
    if cmd == "match-string":
        return _run_match_string(config)
    if cmd == "match-tree":
        return _run_match_tree(config)
    if cmd == "match-dag":
        return _run_match_dag(config)
    if cmd == "build-dasg":
        return _run_build_dasg(config)
    if cmd == "opsm":
        return _run_opsm(config)
    if cmd.startswith("gen "):
        return _run_gen(config)
    if cmd.startswith("bench "):
        return _run_bench(config)
    raise UsageError(f"unknown subcommand: {cmd}")


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="oppm",
        description="Order-preserving pattern matching on strings, trees, and DAGs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ms = sub.add_parser("match-string", help="find op-matching windows of a string")
    ms.add_argument("pattern", help="pattern file")
    ms.add_argument("text", help="string file")
    ms.add_argument("--stats", action="store_true", help="append transition counts")
    ms.add_argument("--oracle", action="store_true", help="use the brute-force path")
    ms.add_argument("--out", dest="output", help="write output to a file")

    mt = sub.add_parser("match-tree", help="find op-matching root-path windows")
    mt.add_argument("pattern", help="pattern file")
    mt.add_argument("tree", help="tree file")
    mt.add_argument(
        "--no-prune",
        dest="prune",
        action="store_false",
        help="disable subtree-height pruning of failure chains",
    )
    mt.add_argument("--stats", action="store_true", help="append transition counts")
    mt.add_argument("--oracle", action="store_true", help="use the brute-force path")
    mt.add_argument("--out", dest="output", help="write output to a file")

    md = sub.add_parser("match-dag", help="find an op-matching path in a DAG")
    md.add_argument("pattern", help="pattern file")
    md.add_argument("dag", help="DAG file")
    md.add_argument("--witness", action="store_true", help="print the witness path")
    md.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    md.add_argument("--out", dest="output", help="write output to a file")

    bd = sub.add_parser("build-dasg", help="build the subsequence graph of a string")
    bd.add_argument("text", help="string file")
    bd.add_argument("--out", dest="output", help="write the DAG file here")

    op = sub.add_parser("opsm", help="order-preserving subsequence decision")
    op.add_argument("pattern", help="pattern file")
    op.add_argument("text", help="string file")
    op.add_argument("--oracle", action="store_true", help="use subsequence enumeration")
    op.add_argument("--out", dest="output", help="write output to a file")

    g = sub.add_parser("gen", help="generate instances")
    gsub = g.add_subparsers(dest="gen_command", required=True, parser_class=_Parser)

    ga = gsub.add_parser("adversarial", help="worst-case tree family")
    ga.add_argument("--height", type=int, required=True)
    ga.add_argument(
        "--pattern-length", type=int, default=None, help="defaults to height - 2"
    )
    ga.add_argument("--tree-out", default=None, help="tree file (default stdout)")
    ga.add_argument("--pattern-out", default=None, help="also write the pattern file")

    gs = gsub.add_parser("random-string", help="seeded random string")
    gs.add_argument("--length", type=int, required=True)
    gs.add_argument("--alphabet", type=int, required=True)
    gs.add_argument("--seed", type=int, default=0)
    gs.add_argument("--out", dest="output")

    gt = gsub.add_parser("random-tree", help="seeded random tree")
    gt.add_argument("--nodes", type=int, required=True)
    gt.add_argument("--alphabet", type=int, required=True)
    gt.add_argument("--seed", type=int, default=0)
    gt.add_argument("--out", dest="output")

    gd = gsub.add_parser("random-dag", help="seeded random DAG")
    gd.add_argument("--vertices", type=int, required=True)
    gd.add_argument("--density", type=float, default=0.2)
    gd.add_argument("--alphabet", type=int, required=True)
    gd.add_argument("--seed", type=int, default=0)
    gd.add_argument("--out", dest="output")

    b = sub.add_parser("bench", help="counter and cost experiments (CSV)")
    bsub = b.add_subparsers(dest="bench_command", required=True, parser_class=_Parser)

    ba = bsub.add_parser("adversarial", help="pruned vs unpruned failure counts")
    ba.add_argument("--heights", required=True, help="comma-separated tree heights")
    ba.add_argument(
        "--pattern-length", type=int, default=None, help="defaults to height - 2"
    )
    ba.add_argument("--out", dest="output")

    bdg = bsub.add_parser("dasg", help="exponential path-search cost evidence")
    bdg.add_argument("--sizes", required=True, help="comma-separated even text sizes")
    bdg.add_argument("--out", dest="output")

    return parser


def _config_from_args(ns: argparse.Namespace) -> RunConfig:
    cmd = ns.command
    if cmd == "match-string":
        return RunConfig(
            subcommand=cmd,
            inputs={"pattern": ns.pattern, "text": ns.text},
            oracle=ns.oracle,
            stats=ns.stats,
            output=ns.output,
        )
    if cmd == "match-tree":
        return RunConfig(
            subcommand=cmd,
            inputs={"pattern": ns.pattern, "tree": ns.tree},
            prune=ns.prune,
            oracle=ns.oracle,
            stats=ns.stats,
            output=ns.output,
        )
    if cmd == "match-dag":
        return RunConfig(
            subcommand=cmd,
            inputs={"pattern": ns.pattern, "dag": ns.dag},
            oracle=ns.oracle,
            witness=ns.witness,
            output=ns.output,
        )
    if cmd == "build-dasg":
        return RunConfig(
            subcommand=cmd, inputs={"text": ns.text}, output=ns.output
        )
    if cmd == "opsm":
        return RunConfig(
            subcommand=cmd,
            inputs={"pattern": ns.pattern, "text": ns.text},
            oracle=ns.oracle,
            output=ns.output,
        )
    if cmd == "gen":
        kind = ns.gen_command
        if kind == "adversarial":
            params = {
                "height": ns.height,
                "pattern_length": ns.pattern_length,
                "tree_out": ns.tree_out,
                "pattern_out": ns.pattern_out,
            }
            return RunConfig(subcommand=f"gen {kind}", params=params)
        if kind == "random-string":
            return RunConfig(
                subcommand=f"gen {kind}",
                seed=ns.seed,
                output=ns.output,
                params={"length": ns.length, "alphabet": ns.alphabet},
            )
        if kind == "random-tree":
            return RunConfig(
                subcommand=f"gen {kind}",
                seed=ns.seed,
                output=ns.output,
                params={"nodes": ns.nodes, "alphabet": ns.alphabet},
            )
        if kind == "random-dag":
            return RunConfig(
                subcommand=f"gen {kind}",
                seed=ns.seed,
                output=ns.output,
                params={
                    "vertices": ns.vertices,
                    "density": ns.density,
                    "alphabet": ns.alphabet,
                },
            )
    if cmd == "bench":
        kind = ns.bench_command
        if kind == "adversarial":
            return RunConfig(
                subcommand=f"bench {kind}",
                output=ns.output,
                params={
                    "heights": ns.heights,
                    "pattern_length": ns.pattern_length,
                },
            )
        if kind == "dasg":
            return RunConfig(
                subcommand=f"bench {kind}",
                output=ns.output,
                params={"sizes": ns.sizes},
            )
    raise UsageError(f"unknown subcommand: {cmd}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        config = _config_from_args(ns)
        return run(config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TreeValidationError, DagValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
