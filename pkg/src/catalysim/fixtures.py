"""Bundled example machines.

The fixtures live as machine-format JSON files under ``machines/`` so
loading them doubles as a format conformance check. The zoo covers the
definitions positively and negatively:

* ``flip_first``: flips aux bit 1 once, accepts everything; 1-lossy.
* ``lose_2``: flips aux bits 1 and 2, rejects everything; 2-lossy.
* ``xor_parity``: decides input parity using aux bit 1 as scratch and
  restores it; perfectly catalytic.
* ``bad_inconsistent``: verdict depends on aux bit 1; fails consistency.
* ``bad_space``: walks the work head past its bound.
* ``looper``: never halts.
"""

from __future__ import annotations

from importlib import resources

from .machine import MachineDesc, parse_machine

__all__ = ["FIXTURE_NAMES", "fixture_text", "load_fixture"]

FIXTURE_NAMES = (
    "flip_first",
    "lose_2",
    "xor_parity",
    "bad_inconsistent",
    "bad_space",
    "looper",
)


def fixture_text(name: str) -> str:
    """Raw machine-format document of a bundled fixture."""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choices: {FIXTURE_NAMES}")
    return (resources.files(__package__) / "machines" / f"{name}.json").read_text("utf-8")


def load_fixture(name: str) -> MachineDesc:
    """Parse a bundled fixture into a validated machine description."""
    return parse_machine(fixture_text(name))
