"""Command-line interface.

Subcommands: ``run``, ``wrap``, ``verify``, ``find-prime``, ``ball``.
Results go to stdout (``--format json`` for machine-readable documents
with stable key order), diagnostics to stderr.

Exit codes: 0 success or every property holds; 1 property failure or a
verdict-bearing model violation (loss exceeded, residue not found,
non-halting, space violation); 2 usage, parse, or validation errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from .bits import check_bits, random_bits
from .errors import (
    BudgetExceeded,
    CatalysimError,
    LengthMismatch,
    IndexOutOfRange,
    LossExceeded,
    MachineViolation,
    NoGoodPrimeBelowCap,
    OverflowGuard,
    ParseError,
    ResidueNotFound,
    ValidationError,
)
from .fks import enumerate_ball, find_good_prime
from .machine import MachineDesc, load_machine, run_machine
from .properties import DEFAULT_VERIFY_BUDGET, verify_machine
from .wrapper import lossless_simulate, scratch_accounting, scratch_budget

__all__ = ["main", "build_parser"]

BUDGET_ENV_VAR = "CATALYSIM_BUDGET"

_USAGE_ERRORS = (ParseError, ValidationError, LengthMismatch, IndexOutOfRange,
                 OverflowGuard, BudgetExceeded, ValueError, OSError)
_VERDICT_ERRORS = (MachineViolation, LossExceeded, ResidueNotFound,
                   NoGoodPrimeBelowCap)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalysim",
        description="Simulate, verify, and losslessly wrap catalytic Turing machines.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "json"), default="human",
                       help="output format (default: human)")

    p_run = sub.add_parser("run", help="simulate one run of a machine")
    p_run.add_argument("--machine", required=True, help="machine description file")
    p_run.add_argument("--input", required=True, help="input bit string")
    p_run.add_argument("--aux", required=True,
                       help="aux bit string, or random:<m>:<seed>")
    p_run.add_argument("--step-cap", type=int, default=None,
                       help="override the configuration-count step cap")
    add_format(p_run)

    p_wrap = sub.add_parser("wrap", help="run a machine behind the lossless wrapper")
    p_wrap.add_argument("--machine", required=True)
    p_wrap.add_argument("--input", required=True)
    p_wrap.add_argument("--aux", required=True,
                        help="aux bit string, or random:<m>:<seed>")
    p_wrap.add_argument("--k", type=int, default=None,
                        help="override the machine's declared loss bound")
    p_wrap.add_argument("--strict", action="store_true",
                        help="check the loss bound directly after the inner run")
    p_wrap.add_argument("--step-cap", type=int, default=None)
    p_wrap.add_argument("--prime-cap", type=int, default=None)
    p_wrap.add_argument("--figures-dir", default=None,
                        help="also render the scratch accounting as PNG + CSV here")
    add_format(p_wrap)

    p_verify = sub.add_parser("verify", help="exhaustively verify the machine properties")
    p_verify.add_argument("--machine", required=True)
    p_verify.add_argument("--n", action="append", type=int, required=True,
                          help="input length to check; repeat for several")
    p_verify.add_argument("--k", type=int, default=None,
                          help="override the machine's declared loss bound")
    p_verify.add_argument("--figures-dir", default=None,
                          help="also render the loss profile as PNG + CSV here")
    add_format(p_verify)

    p_prime = sub.add_parser("find-prime", help="smallest prime injective on a Hamming ball")
    p_prime.add_argument("--aux", required=True,
                         help="ball center bit string, or random:<m>:<seed>")
    p_prime.add_argument("--radius", type=int, required=True)
    p_prime.add_argument("--prime-cap", type=int, default=None)
    add_format(p_prime)

    p_ball = sub.add_parser("ball", help="enumerate a Hamming ball in contract order")
    p_ball.add_argument("--aux", required=True,
                        help="ball center bit string, or random:<m>:<seed>")
    p_ball.add_argument("--radius", type=int, required=True)
    add_format(p_ball)

    return parser


def resolve_aux(spec: str) -> str:
    """Literal bit string, or ``random:<m>:<seed>`` for seeded content."""
    if spec.startswith("random:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected random:<m>:<seed>, got {spec!r}")
        try:
            m, seed = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"expected integer length and seed in {spec!r}") from None
        return random_bits(m, seed)
    return check_bits(spec, "aux bits")


def _with_k(machine: MachineDesc, k: int | None) -> MachineDesc:
    if k is None:
        return machine
    if k < 0:
        raise ValueError("loss bound override must be >= 0")
    return dataclasses.replace(machine, declared_k=k)


def emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        _emit_human(doc)


def _emit_human(doc, indent: int = 0) -> None:
    pad = "  " * indent
    for key, value in doc.items():
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _emit_human(value, indent + 1)
        elif isinstance(value, list) and value and not isinstance(value[0], (int, float, str)):
            print(f"{pad}{key}:")
            for item in value:
                _emit_human(item, indent + 1)
        elif isinstance(value, list) and len(value) > 8:
            print(f"{pad}{key}:")
            for item in value:
                print(f"{pad}  {item}")
        else:
            print(f"{pad}{key}: {value}")


def _good_prime_doc(gp) -> dict:
    return {"p": gp.p, "center": gp.center, "radius": gp.radius,
            "certified": gp.certified}


def _cmd_run(args) -> int:
    machine = load_machine(args.machine)
    aux = resolve_aux(args.aux)
    check_bits(args.input, "input bits")
    outcome = run_machine(machine, args.input, aux, args.step_cap)
    emit({
        "machine": machine.name,
        "input": args.input,
        "aux": aux,
        "verdict": outcome.verdict,
        "final_aux": outcome.final_aux,
        "steps": outcome.steps,
        "peak_work_cells": outcome.peak_work_cells,
    }, args.format)
    return 0


def _cmd_wrap(args) -> int:
    machine = _with_k(load_machine(args.machine), args.k)
    aux = resolve_aux(args.aux)
    check_bits(args.input, "input bits")
    run = lossless_simulate(machine, args.input, aux, strict=args.strict,
                            prime_cap=args.prime_cap, step_cap=args.step_cap)
    components = scratch_accounting(run)
    budget = scratch_budget(len(aux), run.loss_bound, run.good_prime.p)
    diff = [i + 1 for i, (a, b) in enumerate(zip(aux, run.final_aux)) if a != b]
    emit({
        "machine": machine.name,
        "input": args.input,
        "aux": aux,
        "verdict": run.verdict,
        "good_prime": _good_prime_doc(run.good_prime),
        "init_aux_val": run.init_aux_val,
        "restored": run.restored,
        "inner": {
            "verdict": run.inner_outcome.verdict,
            "final_aux": run.inner_outcome.final_aux,
            "steps": run.inner_outcome.steps,
            "peak_work_cells": run.inner_outcome.peak_work_cells,
        },
        "scratch": {
            "components": dict(components),
            "total_bits": run.scratch_bits_peak,
            "budget_bits": budget,
        },
        "final_aux": run.final_aux,
        "aux_diff_positions": diff,
    }, args.format)
    if args.figures_dir is not None:
        from . import figures
        out = Path(args.figures_dir)
        out.mkdir(parents=True, exist_ok=True)
        figures.write_scratch_csv(components, out / f"{machine.name}_scratch.csv")
        figures.render_scratch_figure(machine.name, components, budget,
                                      out / f"{machine.name}_scratch.png")
        print(f"figures written to {out}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    machine = _with_k(load_machine(args.machine), args.k)
    budget = DEFAULT_VERIFY_BUDGET
    env_budget = os.environ.get(BUDGET_ENV_VAR)
    if env_budget is not None:
        budget = int(env_budget)
    rows: list[dict] = []
    on_run = rows.append if args.figures_dir is not None else None
    report = verify_machine(machine, args.n, budget=budget, on_run=on_run)
    emit(report.to_json_dict(), args.format)
    if args.figures_dir is not None:
        from . import figures
        out = Path(args.figures_dir)
        out.mkdir(parents=True, exist_ok=True)
        figures.write_runs_csv(rows, out / f"{machine.name}_runs.csv")
        figures.render_loss_figure(machine.name, rows, out / f"{machine.name}_loss.png")
        print(f"figures written to {out}", file=sys.stderr)
    return 0 if report.holds_everywhere() else 1


def _cmd_find_prime(args) -> int:
    center = resolve_aux(args.aux)
    gp = find_good_prime(center, args.radius, args.prime_cap)
    emit(_good_prime_doc(gp), args.format)
    return 0


def _cmd_ball(args) -> int:
    center = resolve_aux(args.aux)
    strings = list(enumerate_ball(center, args.radius))
    emit({
        "center": center,
        "radius": args.radius,
        "count": len(strings),
        "strings": strings,
    }, args.format)
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "wrap": _cmd_wrap,
    "verify": _cmd_verify,
    "find-prime": _cmd_find_prime,
    "ball": _cmd_ball,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _VERDICT_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
