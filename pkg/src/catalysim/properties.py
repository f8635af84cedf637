"""Exhaustive desk-scale verification of the catalytic machine properties.

For every input length in ``n_values`` the verifier runs the machine on
every input ``x`` and every aux content ``w`` (lexicographic order) and
checks:

* halting within the configuration-count bound,
* the work/aux space bounds,
* the catalytic condition (final aux equals initial aux exactly),
* the declared lossy relaxation (Hamming loss at most ``declared_k``),
* consistency (verdict independent of ``w`` for each fixed ``x``).

The first counterexample per property, in enumeration order, is
recorded verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

from .bits import hamdist
from .errors import (
    AuxOverrun,
    BudgetExceeded,
    NonHalting,
    SpaceViolation,
)
from .machine import MachineDesc, config_count_bound, run_machine

__all__ = [
    "DEFAULT_VERIFY_BUDGET",
    "PROPERTY_ORDER",
    "PropertyStatus",
    "PropertyReport",
    "verify_machine",
    "hamdist",
]

DEFAULT_VERIFY_BUDGET = 1 << 20

PROPERTY_ORDER = (
    "space_bound",
    "catalytic_condition",
    "lossy_condition",
    "consistency",
    "halting",
)


@dataclass
class PropertyStatus:
    holds: bool = True
    counterexample: Optional[dict] = None

    def fail(self, counterexample: dict) -> None:
        if self.holds:
            self.holds = False
            self.counterexample = counterexample


@dataclass
class PropertyReport:
    machine: str
    n_values: list[int]
    declared_k: int
    properties: dict[str, PropertyStatus]
    measured_max_loss: int
    minimal_k: int

    def holds_everywhere(self) -> bool:
        return all(status.holds for status in self.properties.values())

    def to_json_dict(self) -> dict:
        """Report as a JSON-ready dict with stable key order."""
        props = {}
        for name in PROPERTY_ORDER:
            status = self.properties[name]
            entry: dict = {"status": "holds" if status.holds else "fails"}
            if name == "lossy_condition":
                entry["k"] = self.declared_k
            if status.counterexample is not None:
                entry["counterexample"] = status.counterexample
            props[name] = entry
        return {
            "machine": self.machine,
            "n_values": list(self.n_values),
            "declared_k": self.declared_k,
            "properties": props,
            "measured_max_loss": self.measured_max_loss,
            "minimal_k": self.minimal_k,
        }


def _bitstrings(length: int):
    if length == 0:
        yield ""
        return
    for tup in product("01", repeat=length):
        yield "".join(tup)


def verify_machine(M: MachineDesc, n_values: list[int],
                   budget: int = DEFAULT_VERIFY_BUDGET,
                   on_run: Callable[[dict], None] | None = None) -> PropertyReport:
    """Exhaustively check the machine properties over ``n_values``.

    Raises :class:`BudgetExceeded` before enumerating any ``n`` whose
    grid ``2**n * 2**m`` exceeds ``budget``. A run that violates the
    model (non-halting, space, head overrun) marks the matching property
    failed with that ``(x, w)`` and verification continues, so reports
    are total. ``on_run`` receives one record per completed run and is
    meant for report rendering.
    """
    properties = {name: PropertyStatus() for name in PROPERTY_ORDER}
    max_loss = 0

    for n in n_values:
        m = M.aux_len(n)
        grid = (2**n) * (2**m)
        if grid > budget:
            raise BudgetExceeded(
                f"verification grid for n={n} has {grid} runs, over budget {budget}",
                n=n)
        step_cap = config_count_bound(M, n)
        work_bound = M.work_bound(n)
        for x in _bitstrings(n):
            baseline: Optional[tuple[str, str]] = None  # (w, verdict)
            for w in _bitstrings(m):
                record = {"n": n, "x": x, "w": w}
                try:
                    outcome = run_machine(M, x, w, step_cap)
                except NonHalting as exc:
                    properties["halting"].fail({"n": n, "x": x, "w": w, "error": str(exc)})
                    record["error"] = type(exc).__name__
                except (SpaceViolation, AuxOverrun) as exc:
                    properties["space_bound"].fail({"n": n, "x": x, "w": w, "error": str(exc)})
                    record["error"] = type(exc).__name__
                else:
                    if outcome.peak_work_cells > work_bound:
                        properties["space_bound"].fail({
                            "n": n, "x": x, "w": w,
                            "peak_work_cells": outcome.peak_work_cells,
                            "work_bound": work_bound,
                        })
                    loss = hamdist(w, outcome.final_aux)
                    if loss > max_loss:
                        max_loss = loss
                    if loss > 0:
                        properties["catalytic_condition"].fail({
                            "n": n, "x": x, "w": w,
                            "final_aux": outcome.final_aux, "loss": loss,
                        })
                    if loss > M.declared_k:
                        properties["lossy_condition"].fail({
                            "n": n, "x": x, "w": w,
                            "final_aux": outcome.final_aux, "loss": loss,
                            "declared_k": M.declared_k,
                        })
                    if baseline is None:
                        baseline = (w, outcome.verdict)
                    elif outcome.verdict != baseline[1]:
                        properties["consistency"].fail({
                            "n": n, "x": x,
                            "w_a": baseline[0], "verdict_a": baseline[1],
                            "w_b": w, "verdict_b": outcome.verdict,
                        })
                    record.update(verdict=outcome.verdict,
                                  final_aux=outcome.final_aux,
                                  loss=loss,
                                  steps=outcome.steps,
                                  peak_work_cells=outcome.peak_work_cells)
                if on_run is not None:
                    on_run(record)

    return PropertyReport(
        machine=M.name,
        n_values=list(n_values),
        declared_k=M.declared_k,
        properties=properties,
        measured_max_loss=max_loss,
        minimal_k=max_loss,
    )
