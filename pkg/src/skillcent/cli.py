"""Command-line interface.

``skillcent compute`` evaluates one measure of one instance and prints a
TSV or JSON report; ``skillcent sums`` prints the component-sum sanity
check (Shapley and HC sum to v(N), Help does not); ``skillcent convert``
rewrites a legacy network file as a JSON game file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import SkillcentError, ValidationError
from .exact import (DeltaStar, delta_star, equivalence_classes, exact_cen_shapley,
                    exact_hc, exact_help, exact_hsh, exact_semivalue)
from .charfn import ENUM_MAX_PLAYERS
from .fixtures import FIXTURE_NAMES, fixture_path
from .formulas import (VetoDecomposition, pure_skill_check, pure_skill_measures,
                       veto_help, veto_hsh, veto_shapley)
from .fpt import fpt_semivalue
from .game import SkillGame
from .gameio import dump_game, load_game, parse_legacy
from .graph import Graph, relabel_edges
from .sampling import SAMPLED_MEASURES, SampleConfig, sample_measure
from .semivalues import SemivalueSpec, load_custom_semivalue
from .vectors import CentralityVector, format_grouped

__all__ = ["main"]

MEASURES = ("sh", "banzhaf", "semivalue", "hsh", "help", "hc", "cen-sh", "trivial")
GRAPH_MEASURES = ("hsh", "help", "hc", "cen-sh")
SEMIVALUE_MEASURES = ("sh", "banzhaf", "semivalue")
METHODS = ("auto", "enum", "veto", "fpt", "pure", "sample")
AUTO_FPT_STATE_BITS = 20


class UsageError(Exception):
    """Flag combinations the CLI rejects before computing anything."""


def default_threads() -> int:
    env = os.environ.get("SKILLCENT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"SKILLCENT_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def resolve_game(spec: str) -> tuple[SkillGame, Graph | None]:
    if spec in FIXTURE_NAMES:
        return load_game(fixture_path(spec))
    return load_game(spec)


def load_graph_file(path: str, game: SkillGame) -> Graph:
    with open(path) as fh:
        doc = json.load(fh)
    edges = doc["edges"] if isinstance(doc, dict) else doc
    pairs = [(str(a), str(b)) for a, b in edges]
    return Graph(game.n, relabel_edges(pairs, game.labels))


def parse_measure(raw: str) -> tuple[str, SemivalueSpec | None]:
    if raw.startswith("semivalue:"):
        return "semivalue", load_custom_semivalue(raw.split(":", 1)[1])
    if raw == "semivalue":
        raise UsageError("custom semivalues need a weight file: --measure semivalue:PATH")
    if raw not in MEASURES:
        raise UsageError(f"unknown measure {raw!r}; one of {', '.join(MEASURES)}")
    return raw, None


def parse_delta_mode(raw: str):
    if raw in ("def", "definition"):
        return "definition"
    if raw == "maxdeg":
        return "maxdeg"
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise UsageError(
            f"--delta-star must be 'def', 'maxdeg' or a number, got {raw!r}") from None


def _fpt_feasible(game: SkillGame) -> bool:
    states = 1
    for task in game.tasks:
        size = 1
        for c in task.counts:
            if c:
                size *= c + 1
        states = max(states, size)
    return states <= (1 << AUTO_FPT_STATE_BITS)


def choose_method(measure: str, game: SkillGame) -> str:
    if measure == "trivial":
        return "enum"
    if measure not in ("banzhaf", "semivalue") and pure_skill_check(game):
        return "pure"
    if measure in SEMIVALUE_MEASURES:
        if _fpt_feasible(game):
            return "fpt"
        if game.n <= ENUM_MAX_PLAYERS:
            return "enum"
        raise UsageError(
            f"no exact method fits n={game.n} with this task size; "
            "use --method sample (sh only) or relax the instance")
    return "enum" if game.n <= ENUM_MAX_PLAYERS else "sample"


def check_compatibility(measure: str, method: str) -> None:
    allowed = {
        "enum": MEASURES,
        "veto": ("sh", "hsh", "help"),
        "fpt": SEMIVALUE_MEASURES,
        "pure": ("sh", "hsh", "help", "hc", "cen-sh"),
        "sample": SAMPLED_MEASURES,
    }[method]
    if measure not in allowed:
        raise UsageError(f"--method {method} cannot compute --measure {measure}")


def compute_vector(game: SkillGame, graph: Graph | None, measure: str,
                   spec: SemivalueSpec | None, method: str, args,
                   threads: int) -> CentralityVector:
    if measure in GRAPH_MEASURES and graph is None:
        raise UsageError(f"--measure {measure} needs a graph (edges in the game file or --graph)")

    delta: DeltaStar | None = None
    if measure == "hc":
        mode = parse_delta_mode(args.delta_star)
        delta = delta_star(game, graph, mode)
        if delta.value <= 0:
            raise UsageError(
                f"delta-star resolved to {delta.value} under mode {delta.mode!r}; "
                "supply a positive override")

    if measure == "trivial":
        from .represent import trivial_centrality
        return trivial_centrality(game)

    if method == "pure":
        if not pure_skill_check(game):
            raise UsageError("--method pure needs a pure skill game (one skill copy per task)")
        if measure in GRAPH_MEASURES and graph is None:
            raise UsageError(f"--measure {measure} needs a graph")
        bundle = pure_skill_measures(game, graph if graph is not None else Graph.empty(game.n),
                                     delta if delta is not None else Fraction(1))
        return {"sh": bundle.sh, "cen-sh": bundle.cen_sh, "hsh": bundle.hsh,
                "help": bundle.help, "hc": bundle.hc}[measure]

    if method == "enum":
        if measure in SEMIVALUE_MEASURES:
            chosen = spec or (SemivalueSpec.shapley() if measure == "sh"
                              else SemivalueSpec.banzhaf())
            return exact_semivalue(game, chosen, threads)
        if measure == "hsh":
            return exact_hsh(game, graph, threads)
        if measure == "help":
            return exact_help(game, graph, threads)
        if measure == "cen-sh":
            return exact_cen_shapley(game, graph, threads)
        return exact_hc(game, graph, delta, threads)

    if method == "veto":
        d = VetoDecomposition.of(game)
        if measure == "sh":
            return veto_shapley(d)
        if measure == "hsh":
            return veto_hsh(d, graph if graph is not None else Graph.empty(game.n))
        return veto_help(d, graph if graph is not None else Graph.empty(game.n))

    if method == "fpt":
        chosen = spec or (SemivalueSpec.shapley() if measure == "sh"
                          else SemivalueSpec.banzhaf())
        return fpt_semivalue(game, chosen)

    cfg = SampleConfig(samples=args.samples, seed=args.seed, workers=threads)
    return sample_measure(game, graph, measure, cfg, delta)


def build_report(game: SkillGame, graph: Graph | None, vector: CentralityVector) -> dict:
    classes = equivalence_classes(game, graph if graph is not None else Graph.empty(game.n))
    report = {
        "name": game.name,
        "measure": vector.measure,
        "method": vector.method,
        "n": game.n,
        "normalized": vector.normalized,
        "seed": vector.seed,
        "samples": vector.samples,
        "delta_star": float(vector.delta_star) if vector.delta_star is not None else None,
        "values": {lab: float(v) for lab, v in zip(game.labels, vector.values)},
        "stderr": ({lab: s for lab, s in zip(game.labels, vector.stderr)}
                   if vector.stderr is not None else None),
        "sum": float(vector.total()),
        "ordering": format_grouped(vector.values, game.labels),
        "classes": [[game.labels[i] for i in grp] for grp in classes],
    }
    return report


def emit_tsv(report: dict, out) -> None:
    def g(x: float) -> str:
        return f"{x:.12g}"

    for key in ("name", "measure", "method", "n", "normalized", "seed",
                "samples", "delta_star"):
        if report[key] is not None:
            val = report[key]
            print(f"# {key}\t{g(val) if isinstance(val, float) else val}", file=out)
    header = "player\tvalue" + ("\tstderr" if report["stderr"] else "")
    print(header, file=out)
    for lab, value in report["values"].items():
        row = f"{lab}\t{g(value)}"
        if report["stderr"]:
            row += f"\t{g(report['stderr'][lab])}"
        print(row, file=out)
    print(f"# sum\t{g(report['sum'])}", file=out)
    print(f"# ordering\t{report['ordering']}", file=out)
    groups = " ".join("{" + ",".join(grp) + "}" for grp in report["classes"])
    print(f"# classes\t{groups}", file=out)


def cmd_compute(args) -> int:
    game, graph = resolve_game(args.game)
    if args.graph:
        graph = load_graph_file(args.graph, game)
    measure, spec = parse_measure(args.measure)
    threads = args.threads if args.threads else default_threads()

    method = args.method
    if method == "auto":
        method = choose_method(measure, game)
    else:
        check_compatibility(measure, method)

    vector = compute_vector(game, graph, measure, spec, method, args, threads)
    if args.normalize:
        vector = vector.normalize()

    report = build_report(game, graph, vector)
    if args.output == "json":
        print(json.dumps(report, indent=2), file=sys.stdout)
    else:
        emit_tsv(report, sys.stdout)
    return 0


def cmd_sums(args) -> int:
    game, graph = resolve_game(args.game)
    if args.graph:
        graph = load_graph_file(args.graph, game)
    if graph is None:
        raise UsageError("sums needs a graph (edges in the game file or --graph)")
    threads = args.threads if args.threads else default_threads()
    mode = parse_delta_mode(args.delta_star)
    delta = delta_star(game, graph, mode)

    sh = exact_semivalue(game, SemivalueSpec.shapley(), threads)
    hc = exact_hc(game, graph, delta, threads)
    hp = exact_help(game, graph, threads)
    grand = game.grand_value()

    def g(x) -> str:
        return f"{float(x):.12g}"

    print(f"sh-sum\t{g(sh.total())}")
    print(f"hc-sum\t{g(hc.total())}")
    print(f"help-sum\t{g(hp.total())}")
    print(f"v(N)\t{g(grand)}")
    ok = sh.total() == grand and hc.total() == grand
    print(f"check\t{'ok' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_convert(args) -> int:
    game, graph = parse_legacy(args.game)
    dump_game(game, graph, args.to)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skillcent",
        description="Skill-game centralities: semivalues and helping measures")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--game", required=True,
                       help=f"game file (JSON or legacy) or fixture name: {', '.join(FIXTURE_NAMES)}")
        p.add_argument("--graph", help="JSON file with an 'edges' list of player-id pairs")
        p.add_argument("--threads", type=int, default=0,
                       help="worker threads (default: SKILLCENT_THREADS or all cores)")

    comp = sub.add_parser("compute", help="compute one centrality measure")
    add_common(comp)
    comp.add_argument("--measure", required=True,
                      help="sh | banzhaf | semivalue:FILE | hsh | help | hc | cen-sh | trivial")
    comp.add_argument("--method", choices=METHODS, default="auto")
    comp.add_argument("--samples", type=int, default=100_000,
                      help="Monte Carlo sample count (method sample)")
    comp.add_argument("--seed", type=int, default=0, help="sampling master seed")
    comp.add_argument("--delta-star", default="def", dest="delta_star",
                      help="def | maxdeg | positive number (hc only)")
    comp.add_argument("--normalize", action="store_true",
                      help="divide by the component sum when it is nonzero")
    comp.add_argument("--output", choices=("tsv", "json"), default="tsv")
    comp.set_defaults(func=cmd_compute)

    sums = sub.add_parser("sums", help="component-sum check for sh, hc, help")
    add_common(sums)
    sums.add_argument("--delta-star", default="def", dest="delta_star")
    sums.set_defaults(func=cmd_sums)

    conv = sub.add_parser("convert", help="rewrite a legacy network file as JSON")
    conv.add_argument("--game", required=True, help="legacy network file")
    conv.add_argument("--to", required=True, help="output JSON path")
    conv.set_defaults(func=cmd_convert)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with code 2
        return 2
    except SkillcentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
