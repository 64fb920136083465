"""Command-line interface: plan verification, step tables, path search,
resource reports, and circuit export.

Exit codes are a stable contract for scripting: 0 success, 1 verification
failure, 2 usage or I/O error, 3 search exhausted without a path.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .convert import (
    ConversionPlan,
    FaultToleranceError,
    StepDivergenceError,
    builtin_plan,
    execute_plan,
    execute_reverse,
    export_circuit_lines,
    plan_from_json_dict,
    plan_to_json_dict,
    steane_code,
)
from .resources import resource_report
from .search import FrontierBudgetError, bfs_bidirectional, family_from_code
from .tableau import StabilizerCode, add_ancilla_plus

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _load_plan(args: argparse.Namespace) -> ConversionPlan:
    if args.builtin and args.plan:
        raise CliError(EXIT_USAGE, "--builtin and --plan are mutually exclusive")
    if args.builtin:
        return builtin_plan()
    if args.plan:
        try:
            with open(args.plan) as fh:
                return plan_from_json_dict(json.load(fh))
        except OSError as exc:
            raise CliError(EXIT_USAGE, f"cannot read plan: {exc}") from exc
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise CliError(EXIT_USAGE, f"malformed plan file: {exc}") from exc
    raise CliError(EXIT_USAGE, "select a plan with --builtin or --plan <path>")


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_verify_plan(args: argparse.Namespace) -> int:
    plan = _load_plan(args)
    runner = execute_reverse if args.reverse else execute_plan
    direction = "reverse" if args.reverse else "forward"
    try:
        results = runner(plan, validate=True, workers=args.workers)
    except (StepDivergenceError, FaultToleranceError) as exc:
        _emit(
            args,
            {"direction": direction, "passed": False, "error": str(exc)},
            f"FAIL [{direction}] {exc}",
        )
        return EXIT_VERIFY_FAILED

    lines = []
    steps_payload = []
    for offset, (code, report) in enumerate(results):
        if args.reverse:
            index = len(plan.steps) - offset
            ops = " ".join(op.inverse().to_text() for op in reversed(plan.steps[index - 1].ops))
        else:
            index = offset + 1
            ops = " ".join(op.to_text() for op in plan.steps[index - 1].ops)
        errors = f"errors ok ({report.checked} pairs)" if report else "errors -"
        lines.append(f"step {index:2d}  {ops or '(no ops)':<24}  table ok  {errors}")
        steps_payload.append(
            {
                "step": index,
                "ops": ops,
                "table_match": True,
                "errors_checked": report.checked if report else None,
            }
        )
    summary = f"all {len(results)} steps verified [{direction}]"
    _emit(
        args,
        {"direction": direction, "passed": True, "steps": steps_payload},
        "\n".join(lines + [summary]),
    )
    return EXIT_OK


def _render_table(code: StabilizerCode) -> str:
    lines = ["Stabilizers"]
    lines += [" " + g.to_string(spaced=True) for g in code.generators]
    lines.append("Logical Operators")
    lines.append("X_L =  " + code.logical_x.to_string(spaced=True))
    lines.append("Z_L =  " + code.logical_z.to_string(spaced=True))
    return "\n".join(lines)


def cmd_show_step(args: argparse.Namespace) -> int:
    plan = _load_plan(args)
    if not 1 <= args.step <= len(plan.steps):
        raise CliError(EXIT_USAGE, f"step must be in 1..{len(plan.steps)}")
    code = plan.steps[args.step - 1].expected_code
    _emit(args, {"step": args.step, "code": code.to_json_dict()}, _render_table(code))
    return EXIT_OK


def cmd_resources(args: argparse.Namespace) -> int:
    plan = _load_plan(args)
    report = resource_report(plan)
    lines = ["step  listed_max_weight  reduced_max_weight"]
    for s in report.steps:
        lines.append(f"{s.step_index:4d}  {s.listed_max_weight:17d}  {s.reduced_max_weight:18d}")
    lines += [
        f"max_weight: {report.max_weight}",
        f"data_qubits: {report.data_qubits}",
        f"ancilla_qubits: {report.ancilla_qubits}",
        f"total_qubits: {report.total_qubits}",
        f"census: cz={report.census.cz} hadamard={report.census.hadamard}"
        f" x_rot={report.census.x_rot} z_rot={report.census.z_rot}",
        f"cz_listed: {report.cz_listed}",
        f"cz_quoted: {report.cz_quoted}",
    ]
    lines += [f"note: {note}" for note in report.notes]
    _emit(args, report.to_json_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_export_circuit(args: argparse.Namespace) -> int:
    plan = _load_plan(args)
    text = "\n".join(export_circuit_lines(plan)) + "\n"
    if args.output:
        try:
            with open(args.output, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(EXIT_USAGE, f"cannot write circuit: {exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _resolve_endpoint(
    args: argparse.Namespace, step_attr: str, file_attr: str, default_code
) -> StabilizerCode:
    step = getattr(args, step_attr)
    path = getattr(args, file_attr)
    if step is not None and path is not None:
        raise CliError(EXIT_USAGE, f"--{step_attr.replace('_', '-')} conflicts with a code file")
    if step is not None:
        plan = builtin_plan()
        if not 1 <= step <= len(plan.steps):
            raise CliError(EXIT_USAGE, f"step must be in 1..{len(plan.steps)}")
        code = plan.steps[step - 1].expected_code
        return add_ancilla_plus(code, plan.width - code.n)
    if path is not None:
        try:
            with open(path) as fh:
                return StabilizerCode.from_json_dict(json.load(fh))
        except OSError as exc:
            raise CliError(EXIT_USAGE, f"cannot read code file: {exc}") from exc
        except (json.JSONDecodeError, KeyError, ValueError) as exc:
            raise CliError(EXIT_USAGE, f"malformed code file: {exc}") from exc
    return default_code()


def cmd_search(args: argparse.Namespace) -> int:
    def default_start() -> StabilizerCode:
        plan = builtin_plan()
        return add_ancilla_plus(plan.initial_code, plan.width - plan.initial_code.n)

    def default_goal() -> StabilizerCode:
        plan = builtin_plan()
        code = steane_code()
        return add_ancilla_plus(code, plan.width - code.n)

    start_code = _resolve_endpoint(args, "start_step", "start", default_start)
    goal_code = _resolve_endpoint(args, "goal_step", "goal", default_goal)
    start_family = family_from_code(start_code, args.orbit_cap)
    goal_family = family_from_code(goal_code, args.orbit_cap)

    try:
        outcome = bfs_bidirectional(
            start_family.codes,
            goal_family.codes,
            max_depth=args.max_depth,
            node_budget=args.node_budget,
            checkpoint_path=args.checkpoint,
            resume_from=args.resume_from,
            workers=args.workers,
        )
    except FrontierBudgetError as exc:
        where = f"; state saved to {exc.checkpoint_path}" if exc.checkpoint_path else ""
        print(f"search stopped: {exc}{where}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"checkpoint I/O failure: {exc}") from exc

    payload = {
        "found": outcome.found,
        "cz_count": outcome.path.cz_count if outcome.path else None,
        "path": [g.to_text() for g in outcome.path.gates] if outcome.path else [],
        "nodes_expanded": outcome.nodes_expanded,
        "frontier_peak": outcome.frontier_peak,
        "truncated_orbits": start_family.truncated or goal_family.truncated,
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK if outcome.found else EXIT_EXHAUSTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabconv",
        description="Stabilizer-code conversion toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_plan_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--builtin", action="store_true", help="use the built-in plan")
        p.add_argument("--plan", metavar="PATH", help="plan JSON file")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify-plan", help="replay a plan with per-step validation")
    add_plan_flags(p)
    p.add_argument("--reverse", action="store_true", help="validate the reverse direction")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify_plan)

    p = sub.add_parser("show-step", help="print one step table")
    add_plan_flags(p)
    p.add_argument("step", type=int, help="step index (1-based)")
    p.set_defaults(func=cmd_show_step)

    p = sub.add_parser("resources", help="weight/ancilla/gate accounting")
    add_plan_flags(p)
    p.set_defaults(func=cmd_resources)

    p = sub.add_parser("export-circuit", help="write the line-oriented circuit")
    add_plan_flags(p)
    p.add_argument("--output", metavar="PATH", help="output file (default stdout)")
    p.set_defaults(func=cmd_export_circuit)

    p = sub.add_parser("search", help="bidirectional CZ path search")
    p.add_argument("--builtin", action="store_true", help="five-qubit to seven-qubit endpoints")
    p.add_argument("--start-step", type=int, help="built-in step table as the start")
    p.add_argument("--goal-step", type=int, help="built-in step table as the goal")
    p.add_argument("--start", metavar="PATH", help="start code JSON file")
    p.add_argument("--goal", metavar="PATH", help="goal code JSON file")
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--orbit-cap", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--checkpoint", metavar="PATH", default=None)
    p.add_argument("--resume-from", metavar="PATH", default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
