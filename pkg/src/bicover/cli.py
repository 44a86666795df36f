"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 guard exceeded, 3 input error.

Graph specs used by ``gen`` and ``construct`` are prefix expressions::

    cycle N | complete N | path N | hypercube K | empty N | petersen
    multipartite A,B,C | complement SPEC | mycielski SPEC
    lex SPEC SPEC | join K SPEC...   (K specs)
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as cons
from . import graphs as gr
from .bicliques import CoverMultiset, is_good_cover, verify_cover
from .formats import FormatError, format_cover, format_edge_list, read_cover, read_graph
from .optimize import bc_exact, bc_fractional, check_lp_result, lp_dump
from .reports import REPORT_COLUMNS, TABLES, bound_report, family_constructions, fmt_q, format_tsv, map_cover

EXIT_OK, EXIT_VERIFY, EXIT_GUARD, EXIT_INPUT = 0, 1, 2, 3


class SpecError(ValueError):
    pass


def parse_spec(tokens: list[str]) -> tuple[gr.Graph, list[str]]:
    """Parse one graph spec off the front of ``tokens``; return (graph, rest)."""
    if not tokens:
        raise SpecError("graph spec expected")
    head, rest = tokens[0], tokens[1:]

    def take_int():
        nonlocal rest
        if not rest:
            raise SpecError(f"{head} needs a number")
        try:
            value = int(rest[0])
        except ValueError:
            raise SpecError(f"{head}: {rest[0]!r} is not an integer") from None
        rest = rest[1:]
        return value

    try:
        if head in ("cycle", "complete", "path", "hypercube", "empty"):
            return gr.family(head, take_int()), rest
        if head == "petersen":
            return gr.petersen(), rest
        if head == "multipartite":
            if not rest:
                raise SpecError("multipartite needs part sizes like 2,2,2")
            sizes = [int(t) for t in rest[0].split(",")]
            return gr.complete_multipartite(sizes), rest[1:]
        if head == "complement":
            G, rest = parse_spec(rest)
            return gr.complement(G), rest
        if head == "mycielski":
            G, rest = parse_spec(rest)
            return gr.mycielski(G)[0], rest
        if head == "lex":
            G, rest = parse_spec(rest)
            H, rest = parse_spec(rest)
            return gr.lexicographic_product(G, H)[0], rest
        if head == "join":
            k = take_int()
            parts = []
            for _ in range(k):
                P, rest = parse_spec(rest)
                parts.append(P)
            return gr.join(parts)[0], rest
    except (gr.GraphError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(str(exc)) from None
    raise SpecError(f"unknown graph kind {head!r}")


def parse_full_spec(tokens: list[str]) -> gr.Graph:
    G, rest = parse_spec(tokens)
    if rest:
        raise SpecError(f"unexpected trailing tokens: {' '.join(rest)}")
    return G


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, newline="\n")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands

def cmd_gen(args) -> int:
    G = parse_full_spec(args.spec)
    _emit(format_edge_list(G, " ".join(args.spec)), args.out)
    return EXIT_OK


def cmd_bc(args) -> int:
    G = read_graph(args.graph)
    res = bc_exact(G, args.d, max_nodes=args.guard_nodes, max_seconds=args.guard_seconds)
    flag = "" if res.optimal else " (incumbent, not proven optimal)"
    print(f"bc_{args.d} = {res.value}{flag}\tstatus={res.status}\tnodes={res.nodes_explored}"
          f"\tlower_bound={res.lower_bound}")
    if args.out:
        Path(args.out).write_text(format_cover(res.witness), newline="\n")
    else:
        sys.stdout.write(format_cover(res.witness))
    return EXIT_OK if res.optimal else EXIT_GUARD


def cmd_bcfrac(args) -> int:
    G = read_graph(args.graph)
    res = bc_fractional(G)
    errs = check_lp_result(G, res)
    print(f"bc* = {fmt_q(res.value)}")
    load = max(sum(res.dual.get(e, 0) for e in b.edges()) for b in res.bicliques)
    print(f"dual certificate: total {fmt_q(sum(res.dual.values()))}, max biclique load {fmt_q(load)},"
          f" {'valid' if not errs else 'INVALID'}")
    for i, w in sorted(res.weights.items()):
        print(f"{fmt_q(w)}\t{res.bicliques[i]}")
    if args.lp:
        Path(args.lp).write_text(lp_dump(G, 1, integer=False), newline="\n")
    return EXIT_OK if not errs else EXIT_VERIFY


def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    cover = read_cover(args.cover)
    check = verify_cover(G, cover)
    status = "pass" if check.ok else "fail"
    print(f"{status}\td={cover.d}\tsize={cover.size}\tmin_coverage={check.min_coverage}")
    for i in check.invalid_entries:
        print(f"invalid biclique at entry {i}: {cover.entries[i][0]}")
    for u, v in check.deficient_edges:
        print(f"deficient edge {u} {v}: covered {check.profile[(u, v)]} < {cover.d}")
    if args.good:
        witness = is_good_cover(G, cover) if check.ok else None
        print("good" if witness is not None else "not good")
        if witness is not None:
            print("orientation " + " ".join(map(str, witness)))
    return EXIT_OK if check.ok else EXIT_VERIFY


def cmd_construct(args) -> int:
    kind, tokens = args.kind, list(args.params)
    d = args.d
    if kind == "cycle":
        n = int(tokens[0])
        G, cover = gr.cycle(n), cons.cover_cycle(n, d)
    elif kind == "good-cycle":
        n = int(tokens[0])
        G = gr.cycle(n)
        cover, _ = cons.good_cover_cycle(n, d)
    elif kind == "hypercube":
        k = int(tokens[0])
        G, cover = gr.hypercube(k), cons.cover_hypercube(k, d)
    elif kind == "katona":
        n = int(tokens[0])
        G, cover = gr.complete(n), cons.cover_complete_katona(n).repeated(d)
    elif kind == "mycielski":
        base = parse_full_spec(tokens)
        G = gr.mycielski(base)[0]
        orientation = None
        if args.good:
            base_cover, orientation = _good_base(base, d, args)
            if orientation is None:
                print("no good cover found for the base graph", file=sys.stderr)
                return EXIT_VERIFY
        else:
            base_cover = _known_cover(base, d, args)
        cover = cons.cover_mycielski(base, base_cover, orientation)
    elif kind == "lex":
        Gg, rest = parse_spec(tokens)
        Hh = parse_full_spec(rest)
        G = gr.lexicographic_product(Gg, Hh)[0]
        _, coloring = gr.chromatic_number(gr.complement(Gg))
        cover = cons.cover_lexicographic(Gg, _known_cover(Gg, d, args), Hh, _known_cover(Hh, d, args),
                                         coloring)
    elif kind == "join":
        k = int(tokens[0])
        rest = tokens[1:]
        parts = []
        for _ in range(k):
            P, rest = parse_spec(rest)
            parts.append(P)
        if rest:
            raise SpecError(f"unexpected trailing tokens: {' '.join(rest)}")
        G = gr.join(parts)[0]
        kk = _known_cover(gr.complete(k), d, args) if k >= 2 else CoverMultiset((), d)
        cover = cons.cover_join(parts, [_known_cover(P, d, args) for P in parts], kk)
    else:
        raise SpecError(f"unknown construction {kind!r}")
    check = verify_cover(G, cover)
    if not check.ok:
        print("construction failed verification; nothing written", file=sys.stderr)
        return EXIT_VERIFY
    print(f"# {kind} {' '.join(tokens)} d={cover.d} size={cover.size} verified", file=sys.stderr)
    _emit(format_cover(cover), args.out)
    return EXIT_OK


def _known_cover(G: gr.Graph, d: int, args) -> CoverMultiset:
    """An optimal cover, or the smallest known one if the solver's guard trips."""
    if G.m == 0:
        return CoverMultiset((), d)
    res = bc_exact(G, d, max_nodes=args.guard_nodes, max_seconds=args.guard_seconds)
    if res.optimal:
        return res.witness
    options = [c for _, c in family_constructions(G, d)] + [res.witness]
    return min(options, key=lambda c: c.size)


def _good_base(G: gr.Graph, d: int, args):
    n = G.n
    perm = gr.find_isomorphism(gr.cycle(n), G) if n >= 3 and d % 2 == 0 else None
    if perm is not None:
        cover, orientation = cons.good_cover_cycle(n, d)
        return map_cover(cover, perm), orientation
    cover = _known_cover(G, d, args)
    return cover, is_good_cover(G, cover)


def cmd_bound(args) -> int:
    G = read_graph(args.graph)
    rep = bound_report(G, args.d, name=Path(args.graph).stem, max_nodes=args.guard_nodes,
                       max_seconds=args.guard_seconds)
    sys.stdout.write(format_tsv(REPORT_COLUMNS, [rep.row()]))
    if not rep.chain_ok():
        return EXIT_VERIFY
    return EXIT_GUARD if any(f.startswith("guard_exceeded") for f in rep.flags) else EXIT_OK


def cmd_reproduce(args) -> int:
    names = args.tables or list(TABLES)
    unknown = [n for n in names if n not in TABLES]
    if unknown:
        raise SpecError(f"unknown tables: {', '.join(unknown)}")
    chunks = []
    for name in names:
        title, header, rows = TABLES[name]()
        text = format_tsv(header, rows)
        if args.out:
            outdir = Path(args.out)
            outdir.mkdir(parents=True, exist_ok=True)
            (outdir / f"{title}.tsv").write_text(text, newline="\n")
        chunks.append(f"## {title}\n{text}")
    if not args.out:
        sys.stdout.write("\n".join(chunks))
    return EXIT_OK


# ---------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, depth=True):
    if depth:
        p.add_argument("-d", type=int, default=1, help="cover depth")
    p.add_argument("--guard-nodes", type=int, default=200_000)
    p.add_argument("--guard-seconds", type=float, default=None)
    p.add_argument("--out", default=None, help="output file (directory for reproduce)")


def _parsers() -> dict[str, tuple[argparse.ArgumentParser, callable]]:
    out = {}

    p = argparse.ArgumentParser(prog="bicover gen", description="write a graph as an edge list")
    p.add_argument("spec", nargs="+")
    p.add_argument("--out", default=None)
    out["gen"] = (p, cmd_gen)

    p = argparse.ArgumentParser(prog="bicover bc", description="exact d-biclique covering number")
    p.add_argument("graph")
    _common(p)
    out["bc"] = (p, cmd_bc)

    p = argparse.ArgumentParser(prog="bicover bcfrac", description="exact fractional cover number")
    p.add_argument("graph")
    p.add_argument("--lp", default=None, help="also dump the LP in CPLEX-LP text")
    out["bcfrac"] = (p, cmd_bcfrac)

    p = argparse.ArgumentParser(prog="bicover verify", description="check a cover file")
    p.add_argument("graph")
    p.add_argument("cover")
    p.add_argument("--good", action="store_true", help="also search for a good orientation")
    out["verify"] = (p, cmd_verify)

    p = argparse.ArgumentParser(prog="bicover construct", description="build an explicit cover")
    p.add_argument("kind", choices=["cycle", "good-cycle", "hypercube", "katona", "mycielski", "lex", "join"])
    p.add_argument("params", nargs="*")
    p.add_argument("--good", action="store_true")
    _common(p)
    out["construct"] = (p, cmd_construct)

    p = argparse.ArgumentParser(prog="bicover bound", description="bounds report as a TSV row")
    p.add_argument("graph")
    _common(p)
    p.set_defaults(guard_seconds=60.0)
    out["bound"] = (p, cmd_bound)

    p = argparse.ArgumentParser(prog="bicover reproduce", description="regenerate the result tables")
    p.add_argument("tables", nargs="*", help=f"subset of: {', '.join(TABLES)}")
    p.add_argument("--out", default=None, help="directory for one TSV per table")
    out["reproduce"] = (p, cmd_reproduce)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    commands = _parsers()
    if not argv or argv[0] in ("-h", "--help") or argv[0] not in commands:
        print("usage: bicover {%s} ..." % ",".join(commands), file=sys.stderr)
        return EXIT_OK if argv and argv[0] in ("-h", "--help") else EXIT_INPUT
    parser, handler = commands[argv[0]]
    try:
        args = parser.parse_intermixed_args(argv[1:])
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return handler(args)
    except gr.SizeGuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
