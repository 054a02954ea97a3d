"""Command-line surface: batch runs over graph files with JSON reports.

Every subcommand reads graphs from --in (graph6 or edge-list text,
auto-detected), takes flips and witnesses as JSON, and writes a report
document to --out or stdout. Exit codes: 0 for valid/success, 1 for
invalid/failure with a structured reason in the report, 2 for usage and
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bitset import full_mask, mask_from, members
from .conversion import SparsityLevel, flips_to_deletions, required_chain_size
from .errors import FlipwideError, PreconditionFailedError, SizeRequirementUnmetError
from .families import counterexample_experiment, generate, parse_family_spec
from .flips import FlipSet, apply_flips, normalize
from .graph import contains_biclique
from .graphio import (
    ReportDocument,
    detect_and_parse,
    flips_from_json,
    input_digest,
    instance_from_json,
    normalized_to_json,
    trace_to_json,
    write_graph6,
)
from .witness import (
    FlippableInstance,
    WidenableInstance,
    find_flat_subset,
    search_deletion_witness,
    verify_flippable,
    verify_widenable,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flipwide",
        description="Flip algebra, flatness witnesses, and deletion-wideness conversion.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_io(p, needs_in=True):
        if needs_in:
            p.add_argument("--in", dest="inputs", action="append", required=True,
                           metavar="FILE", help="input graph file (repeatable)")
            p.add_argument("--format", choices=["auto", "graph6", "edgelist"], default="auto",
                           help="input format (default: auto-detect by content)")
        p.add_argument("--out", metavar="FILE", help="write the JSON report here instead of stdout")

    p = sub.add_parser("generate", help="generate a named graph family")
    p.add_argument("--family", required=True,
                   help="family spec, e.g. biclique:2,6 or subdivided:1:biclique:2,6")
    p.add_argument("--seed", type=int, help="RNG seed; required for random families")
    p.add_argument("--graph-out", metavar="FILE", help="also write the raw graph6 bytes here")
    add_io(p, needs_in=False)

    p = sub.add_parser("flip", help="apply a flip set to a graph")
    p.add_argument("--flips", required=True, metavar="FILE", help="JSON list of [A, B] vertex arrays")
    add_io(p)

    p = sub.add_parser("normalize", help="normalize a flip set over its atom partition")
    p.add_argument("--flips", required=True, metavar="FILE")
    add_io(p)

    p = sub.add_parser("check-biclique", help="exhaustive K_{t,t} subgraph search")
    p.add_argument("--t", type=int, required=True)
    add_io(p)

    p = sub.add_parser("find-flat", help="search a flip-flatness witness subset")
    p.add_argument("--flips", required=True, metavar="FILE")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a-set", help="comma-separated vertex list (default: all vertices)")
    add_io(p)

    p = sub.add_parser("search-wide", help="brute-force deletion-wideness witness search")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("--a-set", help="comma-separated vertex list (default: all vertices)")
    add_io(p)

    p = sub.add_parser("convert", help="convert a flip witness into a deletion witness")
    p.add_argument("--flips", required=True, metavar="FILE")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t0", type=int, default=2,
                   help="biclique-exclusion parameter (default 2; effective floor 8)")
    p.add_argument("--mode", choices=["guaranteed", "best-effort"], default="best-effort")
    p.add_argument("--witness", help="witness JSON (inline or @file); B is searched if omitted")
    add_io(p)

    p = sub.add_parser("experiment", help="deletion-budget experiment on subdivided bicliques")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--N", type=int, required=True, dest="n_right")
    p.add_argument("--r", type=int, help="radius (default 2(s+1))")
    p.add_argument("--m", type=int, default=2)
    add_io(p, needs_in=False)

    p = sub.add_parser("ramsey", help="required chain size for a flip count")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t0", type=int, default=2)
    add_io(p, needs_in=False)

    p = sub.add_parser("verify", help="check a witness instance against its definition")
    p.add_argument("--witness", required=True, help="witness JSON (inline or @file)")
    add_io(p)

    return parser


def _read_graph(path: str, fmt: str):
    data = Path(path).read_bytes()
    if fmt == "graph6":
        from .graphio import parse_graph6
        return parse_graph6(data), data
    if fmt == "edgelist":
        from .graphio import parse_edge_list
        return parse_edge_list(data.decode("utf-8")), data
    return detect_and_parse(data), data


def _read_flips(path: str) -> list:
    return flips_from_json(json.loads(Path(path).read_text()))


def _read_witness_arg(text: str):
    if text.startswith("@"):
        return json.loads(Path(text[1:]).read_text())
    return json.loads(text)


def _parse_vertex_csv(text: str | None, n: int) -> int:
    if text is None:
        return full_mask(n)
    if not text.strip():
        return 0
    return mask_from(int(tok) for tok in text.split(","))


def _command_dict(args: argparse.Namespace) -> dict:
    skip = {"out", "inputs", "graph_out"}
    return {
        "subcommand": args.subcommand,
        **{k: v for k, v in sorted(vars(args).items()) if k not in skip and k != "subcommand"},
    }


def _run_single(args, graph, raw: bytes):
    """Returns (payload, exhaustive_flag, exit_code)."""
    cmd = args.subcommand
    if cmd == "flip":
        flips = _read_flips(args.flips)
        flipped = apply_flips(graph, flips)
        return {"n": flipped.n, "edge_count": flipped.edge_count(),
                "graph6": write_graph6(flipped).decode("ascii")}, None, EXIT_OK

    if cmd == "normalize":
        flips = _read_flips(args.flips)
        nf = normalize(flips, graph.n)
        payload = normalized_to_json(nf)
        payload["toggle_count"] = len(nf.toggles)
        payload["has_reflexive_toggle"] = nf.has_reflexive_toggle
        return payload, None, EXIT_OK

    if cmd == "check-biclique":
        found = contains_biclique(graph, args.t)
        if found is None:
            return {"found": False, "t": args.t}, True, EXIT_INVALID
        x, y = found
        return {"found": True, "t": args.t, "x": members(x), "y": members(y)}, True, EXIT_OK

    if cmd == "find-flat":
        flips = _read_flips(args.flips)
        a_set = _parse_vertex_csv(args.a_set, graph.n)
        b = find_flat_subset(graph, flips, a_set, args.r, args.m)
        exhaustive = a_set.bit_count() <= 40
        if b is None:
            return {"found": False, "reason": "no r-independent subset of the requested size"}, \
                exhaustive, EXIT_INVALID
        return {"found": True, "b": members(b)}, exhaustive, EXIT_OK

    if cmd == "search-wide":
        a_set = _parse_vertex_csv(args.a_set, graph.n)
        hit = search_deletion_witness(graph, a_set, args.r, args.m, args.budget)
        if hit is None:
            return {"found": False, "reason": "no deletion set within budget works"}, True, EXIT_INVALID
        s_mask, b = hit
        return {"found": True, "s": members(s_mask), "b": members(b)}, True, EXIT_OK

    if cmd == "convert":
        flips = _read_flips(args.flips)
        sparsity = SparsityLevel(args.t0)
        mode = args.mode.replace("-", "_")
        if args.witness:
            inst = instance_from_json(_read_witness_arg(args.witness), graph.n)
            if not isinstance(inst, FlippableInstance) or inst.witness is None:
                raise FlipwideError("convert needs a flippable witness with a B set")
            b_mask = inst.witness
        else:
            b_mask = find_flat_subset(graph, flips, full_mask(graph.n), args.r, args.m)
            if b_mask is None:
                return {"success": False,
                        "reason": "no flip-flatness witness found to convert"}, None, EXIT_INVALID
        result = flips_to_deletions(graph, flips, b_mask, args.r, sparsity, args.m, mode=mode)
        payload = {
            "success": result.success,
            "t_eff": sparsity.t_eff,
            "deletion_bound": sparsity.deletion_bound,
            "trace": trace_to_json(result.trace),
        }
        if result.success:
            payload["s"] = members(result.s_set)
            payload["s_size"] = result.s_set.bit_count()
            payload["b_final"] = members(result.b_final)
            return payload, None, EXIT_OK
        payload["failure_level"] = result.failure_level
        payload["reason"] = result.failure_reason
        return payload, None, EXIT_INVALID

    if cmd == "verify":
        inst = instance_from_json(_read_witness_arg(args.witness), graph.n)
        if isinstance(inst, WidenableInstance):
            verdict = verify_widenable(graph, inst)
        else:
            verdict = verify_flippable(graph, inst)
        payload = {"valid": verdict.valid}
        if verdict.reason:
            payload["reason"] = verdict.reason
        return payload, None, EXIT_OK if verdict.valid else EXIT_INVALID

    raise FlipwideError(f"unhandled subcommand {cmd!r}")


def _run_inputless(args):
    """Commands that build their own input. Returns (payload, exhaustive, code, digest)."""
    if args.subcommand == "generate":
        spec = parse_family_spec(args.family)
        if spec.kind == "random":
            if args.seed is None:
                raise _UsageError("random families require --seed")
            if len(spec.args) == 2:
                spec = type(spec)(spec.kind, spec.args + (args.seed,))
        graph = generate(spec)
        encoded = write_graph6(graph)
        if args.graph_out:
            Path(args.graph_out).write_bytes(encoded + b"\n")
        payload = {"family": args.family, "n": graph.n,
                   "edge_count": graph.edge_count(), "graph6": encoded.decode("ascii")}
        return payload, None, EXIT_OK, input_digest(encoded)

    if args.subcommand == "experiment":
        report = counterexample_experiment(args.s, args.n_right, args.r, args.m)
        budgets = [
            {
                "budget": res.budget,
                "success": res.success,
                "exhaustive": res.exhaustive,
                "s": members(res.s_set) if res.s_set is not None else None,
                "b": members(res.b_set) if res.b_set is not None else None,
            }
            for res in report.budget_results
        ]
        payload = {
            "s": report.s, "N": report.n_right, "r": report.r, "m": report.m,
            "n_vertices": report.n_vertices, "budgets": budgets,
            "min_budget": report.min_budget,
        }
        from .families import subdivided_biclique
        digest = input_digest(write_graph6(subdivided_biclique(args.s, args.n_right)))
        return payload, True, EXIT_OK, digest

    if args.subcommand == "ramsey":
        value = required_chain_size(args.k, SparsityLevel(args.t0), args.m)
        payload = {"value": value, "k": args.k, "m": args.m,
                   "t_eff": SparsityLevel(args.t0).t_eff}
        return payload, None, EXIT_OK, input_digest(b"")

    raise FlipwideError(f"unhandled subcommand {args.subcommand!r}")


class _UsageError(FlipwideError):
    pass


def _emit(reports: list[dict], out: str | None) -> None:
    text = json.dumps(reports[0] if len(reports) == 1 else reports, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE

    started = time.monotonic()
    try:
        if args.subcommand in ("generate", "experiment", "ramsey"):
            payload, exhaustive, code, digest = _run_inputless(args)
            report = ReportDocument(
                tool_version=__version__,
                input_digest=digest,
                command=_command_dict(args),
                result=payload,
                exhaustive=exhaustive,
                duration_seconds=time.monotonic() - started,
            )
            _emit([report.to_json()], args.out)
            return code

        reports = []
        worst = EXIT_OK
        for path in args.inputs:
            graph, raw = _read_graph(path, args.format)
            file_start = time.monotonic()
            payload, exhaustive, code = _run_single(args, graph, raw)
            reports.append(
                ReportDocument(
                    tool_version=__version__,
                    input_digest=input_digest(raw),
                    command=_command_dict(args),
                    result=payload,
                    exhaustive=exhaustive,
                    duration_seconds=time.monotonic() - file_start,
                ).to_json()
            )
            worst = max(worst, code)
        _emit(reports, args.out)
        return worst

    except (_UsageError,) as exc:
        _emit([{"tool_version": __version__, "error": {"kind": "usage", "message": str(exc)}}],
              args.out)
        return EXIT_USAGE
    except (PreconditionFailedError, SizeRequirementUnmetError) as exc:
        _emit([{"tool_version": __version__,
                "error": {"kind": type(exc).__name__, "message": str(exc)}}], args.out)
        return EXIT_INVALID
    except (FlipwideError, FileNotFoundError, json.JSONDecodeError) as exc:
        _emit([{"tool_version": __version__,
                "error": {"kind": type(exc).__name__, "message": str(exc)}}], args.out)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
