"""Command-line front end: ``xjoin <command> [options]``.

Exit codes: 0 ok, 1 oracle mismatch / check failed, 2 parse or argument
error, 3 internal invariant failure, 4 size limit, 5 join not reduced.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .automorphism import (
    COLOR_AUT_LIMIT,
    NotReducedError,
    Permutation,
    aut_from_decomposition,
    brute_force_aut,
    find_isomorphism,
    verify_automorphism,
)
from .construction import lex_product, parse_fiber_spec, x_join
from .decomposition import (
    InvariantError,
    SizeLimitError,
    cem_oracle,
    check_partition,
    decompose,
    is_reduced_join,
)
from .graph import (
    GraphFormatError,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    is_connected,
    is_clique,
    is_independent,
    parse_edge_list,
    parse_graph6,
    random_graph,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL, EXIT_SIZE, EXIT_NOT_REDUCED = range(6)
DEFAULT_SEED = 20240101


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def looks_like_graph6(text: str) -> bool:
    data = text.strip()
    if data.startswith(">>graph6<<"):
        return True
    return bool(data) and not any(ch.isspace() for ch in data) and all(63 <= ord(ch) <= 126 for ch in data)


def read_graph(source: str, fmt: str = "auto"):
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {source}: {exc.strerror}", EXIT_USAGE) from None
    if fmt == "auto":
        fmt = "graph6" if looks_like_graph6(text) else "edgelist"
    try:
        return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)
    except GraphFormatError as exc:
        raise CliError(f"{source}: {exc}", EXIT_USAGE) from None


def _set_str(vs):
    return "{" + ",".join(map(str, vs)) + "}"


def _describe_quotient(q):
    if is_clique(q, range(q.n)):
        return f"K_{q.n}"
    if is_independent(q, range(q.n)):
        return f"empty_{q.n}"
    return f"{emit_graph6(q)} ({q.n} vertices, {q.num_edges()} edges)"


def decomposition_report(c) -> dict:
    return {
        "n": c.host.n,
        "classes": [{"vertices": list(cls.vertices), "kind": cls.kind.value} for cls in c.partition.classes],
        "quotient_edges": [list(e) for e in c.quotient.edges()],
        "colors": list(c.colors),
        "reduced": True,
    }


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _emit_graph(g, output):
    if output == "json":
        _emit({"n": g.n, "edges": [list(e) for e in g.edges()], "graph6": emit_graph6(g)})
    elif output == "dot":
        sys.stdout.write(emit_dot(g))
    elif output in ("edgelist", "text"):
        sys.stdout.write(emit_edge_list(g))
    else:
        print(emit_graph6(g))


def _join_from_args(args):
    base = read_graph(args.base, args.format)
    try:
        fibers = parse_fiber_spec(args.spec)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    if len(fibers) != base.n:
        raise CliError(f"spec has {len(fibers)} fibers but the base graph has {base.n} vertices", EXIT_USAGE)
    return base, fibers


# -- commands ------------------------------------------------------------

def cmd_decompose(args):
    c = decompose(read_graph(args.input, args.format))
    if args.output == "dot":
        labels = [f"{f.size} {f.kind.value}" for f in c.fibers]
        sys.stdout.write(emit_dot(c.quotient, labels, name="quotient"))
    elif args.output == "text":
        parts = ", ".join(f"{_set_str(cls.vertices)} {cls.kind.value}" for cls in c.partition.classes)
        print(f"{len(c.fibers)} classes: {parts}; quotient {_describe_quotient(c.quotient)}; reduced: true")
    else:
        _emit(decomposition_report(c))
    return EXIT_OK


def cmd_aut(args):
    g = read_graph(args.input, args.format)
    desc = aut_from_decomposition(decompose(g), limit=args.limit)
    report = desc.to_json()
    code = EXIT_OK
    if args.oracle:
        oracle_order, _ = brute_force_aut(g)
        report["oracle_order"] = str(oracle_order)
        report["match"] = oracle_order == desc.order
        if not report["match"]:
            code = EXIT_MISMATCH
    if args.output == "text":
        print(f"order: {desc.order}")
        print(f"kernel order: {desc.kernel_order}")
        print(f"quotient group order: {desc.quotient_group_order}")
        for p in desc.kernel_generators:
            print(f"kernel generator: {p}")
        for p in desc.complement_generators:
            print(f"complement generator: {p}")
        if args.oracle:
            print(f"oracle order: {report['oracle_order']}")
            print(f"match: {str(report['match']).lower()}")
    else:
        _emit(report)
    return code


def cmd_join(args):
    base, fibers = _join_from_args(args)
    g, _ = x_join(base, fibers)
    _emit_graph(g, args.output)
    return EXIT_OK


def cmd_lexprod(args):
    x = read_graph(args.x, args.format)
    y = read_graph(args.y, args.format)
    try:
        g = lex_product(x, y)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    _emit_graph(g, args.output)
    return EXIT_OK


def cmd_verify(args):
    g = read_graph(args.input, args.format)
    try:
        p = Permutation(tuple(int(t) for t in args.perm.replace(",", " ").split()))
        ok = verify_automorphism(g, p)
    except ValueError as exc:
        raise CliError(f"bad permutation: {exc}", EXIT_USAGE) from None
    if args.output == "json":
        _emit({"automorphism": ok})
    else:
        print(f"automorphism: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_roundtrip(args):
    base, fibers = _join_from_args(args)
    if not is_reduced_join(base, fibers):
        raise CliError("not reduced: the fiber spec makes the join coarsenable", EXIT_NOT_REDUCED)
    g, _ = x_join(base, fibers)
    c = decompose(g)
    iso = find_isomorphism(c.quotient, base, list(c.fibers), list(fibers))
    ok = iso is not None
    if args.output == "json":
        _emit({"isomorphic": ok, "mapping": iso, "joined_graph6": emit_graph6(g)})
    else:
        print(f"recovered quotient isomorphic to base: {str(ok).lower()}")
    return EXIT_OK if ok else EXIT_MISMATCH


def _oracle_check(g):
    c = decompose(g)
    row = {"n": g.n, "graph6": emit_graph6(g)}
    problems = check_partition(c.partition)
    row["theorem_order"] = str(aut_from_decomposition(c).order)
    row["oracle_order"] = str(brute_force_aut(g)[0])
    ok = row["theorem_order"] == row["oracle_order"] and not problems
    if is_connected(g):
        ours = sorted(c.classes)
        theirs = cem_oracle(g)
        row["cem_match"] = ours == theirs
        ok = ok and row["cem_match"]
    if problems:
        row["problems"] = problems
    row["match"] = ok
    return row


def cmd_oracle(args):
    if args.random:
        rng = random.Random(args.seed)
        graphs = [random_graph(args.vertices, rng.random(), rng) for _ in range(args.random)]
    else:
        graphs = [read_graph(args.input, args.format)]
    rows = [_oracle_check(g) for g in graphs]
    bad = [r for r in rows if not r["match"]]
    if args.output == "text":
        for r in rows:
            print(f"{r['graph6']}: theorem {r['theorem_order']} oracle {r['oracle_order']} match: {str(r['match']).lower()}")
        print(f"{len(rows) - len(bad)}/{len(rows)} agree")
    else:
        _emit(rows if len(rows) > 1 else rows[0])
    return EXIT_MISMATCH if bad else EXIT_OK


# -- parser --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto",
                        help="input format (default: auto-detect)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled inputs")
    common.add_argument("--limit", type=int, default=COLOR_AUT_LIMIT,
                        help="largest quotient the colored automorphism search accepts")

    parser = argparse.ArgumentParser(prog="xjoin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, outputs, default, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("-o", "--output", choices=outputs, default=default)
        p.set_defaults(func=func)
        return p

    p = add("decompose", cmd_decompose, ["json", "text", "dot"], "json", "twin partition and quotient")
    p.add_argument("input", nargs="?", default="-")

    p = add("aut", cmd_aut, ["json", "text"], "json", "automorphism group via the decomposition")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--oracle", action="store_true", help="cross-check the order by exhaustive search")

    graph_outputs = ["graph6", "edgelist", "json", "text", "dot"]
    p = add("join", cmd_join, graph_outputs, "graph6", "build a complete-empty X-join")
    p.add_argument("base")
    p.add_argument("--spec", required=True, help='fiber tokens, e.g. "i3 i3" or "c2 c1 c2"')

    p = add("lexprod", cmd_lexprod, graph_outputs, "graph6", "lexicographic product X o Y")
    p.add_argument("x")
    p.add_argument("y")

    p = add("verify", cmd_verify, ["text", "json"], "text", "check that a permutation is an automorphism")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--perm", required=True, help="image list, e.g. '1 2 3 0'")

    p = add("roundtrip", cmd_roundtrip, ["text", "json"], "text", "join then decompose and compare quotients")
    p.add_argument("base")
    p.add_argument("--spec", required=True)

    p = add("oracle", cmd_oracle, ["json", "text"], "json", "cross-check against brute-force oracles")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--random", type=int, metavar="COUNT", help="check COUNT seeded random graphs instead")
    p.add_argument("--vertices", type=int, default=8, help="vertex count for --random")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"xjoin: {exc}", file=sys.stderr)
        return exc.code
    except NotReducedError as exc:
        print(f"xjoin: not reduced: {exc}", file=sys.stderr)
        return EXIT_NOT_REDUCED
    except SizeLimitError as exc:
        print(f"xjoin: size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InvariantError as exc:
        print(f"xjoin: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
