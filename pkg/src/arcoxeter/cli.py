"""Command-line interface: ``arcoxeter <command> <type> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__  # noqa: F401
from .arq import arq_from_cosets, arq_from_ringel, arq_from_word, is_alternating
from .chamber import chamber_weights, conjecture_sweep, format_table, level_structure, linearity_witness
from .quiverform import Orientation, adapted_word, all_orientations, is_adapted
from .rootsys import ConfigurationError, build_root_system, format_root, format_weight
from .typea import render_wiring, wiring_diagram
from .words import CensusBudgetExceeded, ReducedWord, census, is_convex, parse_word, root_order

log = logging.getLogger("arcoxeter")


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _word(system, args) -> ReducedWord:
    if not args.word:
        raise UsageError("--word is required")
    return ReducedWord(system, parse_word(args.word))


def _longest_word(system, args) -> ReducedWord:
    w = _word(system, args)
    if not w.is_longest():
        raise UsageError(f"word has length {len(w)}, expected a reduced word of w0 (length {system.num_positive})")
    return w


def cmd_roots(system, args) -> None:
    roots = system.positive_roots
    star = {i: system.star[i - 1] for i in system.vertices}
    obj = {
        "schema": "arcoxeter.roots/1",
        "dynkin": str(system.dynkin),
        "N": len(roots),
        "star": {str(i): j for i, j in star.items()},
        "positive_roots": [list(r) for r in roots],
    }
    lines = [f"type={system.dynkin} N={len(roots)}",
             "star=" + ",".join(f"{i}->{j}" for i, j in star.items())]
    lines += [f"  {format_root(r)}" for r in roots]
    _emit(obj, args.format, "\n".join(lines))


def cmd_order(system, args) -> None:
    w = _word(system, args)
    order = root_order(w)
    convex = is_convex(system, order.roots) if w.is_longest() else None
    obj = {
        "schema": "arcoxeter.order/1",
        "dynkin": str(system.dynkin),
        "word": list(w.letters),
        "roots": [list(r) for r in order.roots],
        "levels": {str(i): list(order.positions(i)) for i in system.vertices},
        "convex": convex,
    }
    lines = [f"beta{k}={format_root(r)}" for k, r in enumerate(order.roots, start=1)]
    lines += [f"level {i}: " + " ".join(f"beta{k}" for k in order.positions(i)) for i in system.vertices]
    lines.append(f"convex={'n/a' if convex is None else str(convex).lower()}")
    _emit(obj, args.format, "\n".join(lines))


def cmd_chamber(system, args) -> None:
    w = _word(system, args)
    seq = chamber_weights(w)
    report = level_structure(seq) if w.is_longest() else None
    obj = {
        "schema": "arcoxeter.chamber/1",
        "dynkin": str(system.dynkin),
        "word": list(w.letters),
        "weights": [list(m) for m in seq.weights],
        "levels": {str(i): [list(m) for m in lv] for i, lv in seq.levels().items()},
        "tails_ok": None if report is None else report.tails_ok,
    }
    lines = [f"mu{k}={format_weight(m)}" for k, m in enumerate(seq.weights, start=1)]
    lines += [f"level {i}: " + ", ".join(format_weight(m) for m in lv) for i, lv in seq.levels().items()]
    if report is not None:
        lines.append(f"tails_ok={str(report.tails_ok).lower()}")
        lines += report.failures
    _emit(obj, args.format, "\n".join(lines))


def cmd_adapted(system, args) -> None:
    w = _word(system, args)
    qs = [Orientation.parse(system, args.orientation)] if args.orientation else list(all_orientations(system))
    verdicts = {str(q): is_adapted(w.letters, q) for q in qs}
    obj = {"schema": "arcoxeter.adapted/1", "dynkin": str(system.dynkin), "word": list(w.letters),
           "adapted": verdicts, "alternating": is_alternating(system, w.letters)}
    lines = [f"{q or '(no edges)'}: adapted={str(v).lower()}" for q, v in verdicts.items()]
    if not args.orientation:
        lines.append(f"adapted to some orientation: {str(any(verdicts.values())).lower()}")
    _emit(obj, args.format, "\n".join(lines))


def cmd_arq(system, args) -> None:
    q = Orientation.parse(system, args.orientation) if args.orientation is not None else None
    if args.word:
        w = _word(system, args)
        if q is None:
            q = next((o for o in all_orientations(system) if is_adapted(w.letters, o)), None)
    elif q is not None:
        w = ReducedWord(system, adapted_word(q))
    else:
        raise UsageError("give --orientation or --word")
    methods = ["word", "ringel", "coset"] if args.method == "all" else [args.method]
    quivers = {}
    for m in methods:
        if m == "word":
            quivers[m] = arq_from_word(w)
        elif m == "coset":
            quivers[m] = arq_from_cosets(w)
        else:
            if q is None or not is_adapted(w.letters, q) or not w.is_longest():
                raise UsageError("the ringel method needs an orientation the word is adapted to")
            rq = arq_from_ringel(q)
            if rq.levels != w.letters:
                # reindex onto the given word through the roots
                where = {r: k for k, r in enumerate(rq.roots, start=1)}
                order = root_order(w).roots
                back = {where[r]: k for k, r in enumerate(order, start=1)}
                rq = type(rq)(system, w.letters, order, frozenset((back[a], back[b]) for a, b in rq.arrows),
                              tuple(rq.weights[where[r] - 1] for r in order))
            quivers[m] = rq
    first = next(iter(quivers.values()))
    agree = all(x.arrows == first.arrows for x in quivers.values())
    if args.format == "dot":
        sys.stdout.write(first.to_dot())
        return
    obj = {"schema": "arcoxeter.arq-run/1", "dynkin": str(system.dynkin), "word": list(w.letters),
           "methods": {m: x.to_json() for m, x in quivers.items()}, "agree": agree}
    lines = []
    if len(quivers) > 1:
        lines.append(f"methods agree: {str(agree).lower()}; arrows={len(first.arrows)}")
    for m, x in quivers.items():
        lines.append(f"[{m}] " + " ".join(f"{a}->{b}" for a, b in sorted(x.arrows)))
    for k in range(1, len(first) + 1):
        lines.append(f"  {first.label(k)}")
    _emit(obj, args.format, "\n".join(lines))


def cmd_linearity(system, args) -> None:
    w = _longest_word(system, args)
    res = linearity_witness(w)
    obj = {"schema": "arcoxeter.linearity/1", "dynkin": str(system.dynkin), "word": list(w.letters),
           "linear": res.linear,
           "matrix": None if res.matrix is None else res.matrix.tolist(),
           "failure": None if res.failure is None else {
               "position": res.failure[0],
               "combination": [{"position": p, "coefficient": c} for p, c in res.failure[1]]}}
    text = res.describe()
    if res.linear:
        text += "\nmap (columns = images of simple roots, in omega coordinates):\n"
        text += "\n".join("  " + " ".join(f"{int(x):3d}" for x in row) for row in res.matrix)
    _emit(obj, args.format, text)


def cmd_census(system, args) -> None:
    try:
        result = census(system.dynkin, extended=args.extended, timeout=args.timeout)
    except CensusBudgetExceeded as e:
        raise UsageError(f"{e}; {len(e.classes)} classes found, {e.frontier} unexpanded") from None
    report = conjecture_sweep(system.dynkin, result=result)
    verdict = "holds" if report.holds else "fails"
    obj = report.to_json()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=1, sort_keys=True)
    text = f"classes={report.num_classes} adapted={report.num_adapted} conjecture={verdict}"
    if args.table:
        text += "\n" + format_table([report])
    _emit(obj, args.format, text)


def cmd_wiring(system, args) -> None:
    w = _word(system, args)
    wd = wiring_diagram(w)
    fmt = args.format if args.format in ("svg", "text", "json") else "text"
    if fmt == "json":
        obj = {"schema": "arcoxeter.wiring/1", "dynkin": str(system.dynkin), "word": list(w.letters),
               "bands": [list(b) for b in wd.bands],
               "zones": [{"k": z.k, "level": z.level, "label": sorted(z.label)} for z in wd.zones]}
        _emit(obj, "json", "")
        return
    sys.stdout.write(render_wiring(wd, fmt))


COMMANDS = {
    "roots": cmd_roots,
    "order": cmd_order,
    "chamber": cmd_chamber,
    "adapted": cmd_adapted,
    "arq": cmd_arq,
    "linearity": cmd_linearity,
    "census": cmd_census,
    "wiring": cmd_wiring,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcoxeter", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, formats=("text", "json")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("type", help="Dynkin type, e.g. A3, D5, E6")
        p.add_argument("--format", choices=formats, default="text")
        return p

    add("roots", "positive roots, N and the involution i -> i*")
    add("order", "root order of a reduced word").add_argument("--word")
    add("chamber", "chamber weights of a reduced word").add_argument("--word")
    p = add("adapted", "adaptedness of a word to orientations")
    p.add_argument("--word")
    p.add_argument("--orientation")
    p = add("arq", "Auslander-Reiten quiver", formats=("text", "json", "dot"))
    p.add_argument("--word")
    p.add_argument("--orientation")
    p.add_argument("--method", choices=("word", "ringel", "coset", "all"), default="all")
    add("linearity", "linearity of beta_k -> mu_k").add_argument("--word")
    p = add("census", "commutation classes of w0 and the linearity conjecture")
    p.add_argument("--extended", action="store_true", help="lift the default class budget")
    p.add_argument("--timeout", type=float, default=None, help="seconds")
    p.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--table", action="store_true", help="print the card A / card O table")
    add("wiring", "wiring diagram (type A)", formats=("text", "svg", "json")).add_argument("--word")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        system = build_root_system(args.type)
        COMMANDS[args.command](system, args)
    except (UsageError, ConfigurationError, ValueError, RuntimeError) as e:
        print(f"arcoxeter {args.command}: error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
