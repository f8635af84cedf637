"""Three-tape deterministic Turing machine model with exact space accounting.

A machine owns three tapes:

* input tape: read-only, ``$`` end-markers at both ends, alphabet {0,1}.
  Head starts on the left marker (position 1) and must stay in
  [1, n+2].
* work tape: 1-based cells over the machine's work alphabet, lazily
  allocated, capped at ``work_bound(n)``. Head starts at cell 1.
* auxiliary tape: exactly ``aux_len(n)`` binary cells, borrowed content.
  Head starts at cell 1 and must stay in [1, m].

A transition entry keyed by (state, input symbol, work symbol, aux
symbol) rewrites the work and aux cells under the heads, moves each head
by L/R/S, and switches state. A missing entry is an implicit move to the
reject state with no writes and no head movement; it costs one step.
Reaching the accept or reject state halts the machine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Mapping, Union

from .bits import check_bits
from .errors import (
    AuxOverrun,
    InputOverrun,
    LengthMismatch,
    NonHalting,
    OverflowGuard,
    ParseError,
    SpaceViolation,
    ValidationError,
)

__all__ = [
    "ACCEPT",
    "REJECT",
    "BLANK",
    "END_MARKER",
    "MachineDesc",
    "Configuration",
    "RunOutcome",
    "parse_machine",
    "load_machine",
    "run_machine",
    "config_count_bound",
    "DEFAULT_BOUND_CEILING",
]

END_MARKER = "$"
BLANK = "_"
ACCEPT = "accept"
REJECT = "reject"

_MOVES = {"L": -1, "R": 1, "S": 0}
_INPUT_SYMBOLS = ("0", "1", END_MARKER)

# A run whose configuration-count bound exceeds this needs an explicit cap.
DEFAULT_BOUND_CEILING = 10**9

TransitionKey = tuple[str, str, str, str]
TransitionAction = tuple[str, str, str, str, str, str]

BoundSpec = Union[int, Mapping[int, int]]


def _resolve_bound(spec: BoundSpec, n: int, name: str) -> int:
    if isinstance(spec, int):
        return spec
    try:
        return spec[n]
    except KeyError:
        raise ValueError(f"{name} is not defined for input length n={n}") from None


@dataclass(frozen=True)
class MachineDesc:
    """Validated, immutable machine description.

    ``work_bound_spec`` and ``aux_len_spec`` are either a constant or a
    per-n table; use :meth:`work_bound` and :meth:`aux_len` to resolve
    them for a concrete input length.
    """

    name: str
    states: tuple[str, ...]
    start: str
    accept: str
    reject: str
    work_alphabet: tuple[str, ...]
    transitions: Mapping[TransitionKey, TransitionAction]
    work_bound_spec: BoundSpec
    aux_len_spec: BoundSpec
    declared_k: int

    def work_bound(self, n: int) -> int:
        """Maximum work cell permitted for inputs of length ``n``."""
        return _resolve_bound(self.work_bound_spec, n, "work_bound")

    def aux_len(self, n: int) -> int:
        """Auxiliary tape length for inputs of length ``n``."""
        return _resolve_bound(self.aux_len_spec, n, "aux_len")


@dataclass
class Configuration:
    """Instantaneous machine state during a run. Heads are 1-based."""

    state: str
    input_head: int
    work_head: int
    aux_head: int
    work_tape: list[str]
    aux_tape: list[str]


@dataclass(frozen=True)
class RunOutcome:
    """Result of one halting run."""

    verdict: str
    final_aux: str
    steps: int
    peak_work_cells: int


_TOP_KEYS = {
    "name", "states", "start", "accept", "reject", "work_alphabet",
    "work_bound", "aux_len", "declared_k", "transitions",
}
_TRANSITION_KEYS = {
    "from", "read_in", "read_work", "read_aux", "to",
    "write_work", "write_aux", "move_in", "move_work", "move_aux",
}


def _parse_bound(value, name: str) -> BoundSpec:
    if isinstance(value, bool):
        raise ParseError(f"{name} must be an integer or a per_n table")
    if isinstance(value, int):
        if value < 1:
            raise ValidationError(f"{name} must be >= 1, got {value}")
        return value
    if isinstance(value, dict):
        if set(value) != {"per_n"} or not isinstance(value["per_n"], dict):
            raise ParseError(f"{name} table must be of the form {{\"per_n\": {{...}}}}")
        table = {}
        for key, entry in value["per_n"].items():
            try:
                n = int(key)
            except (TypeError, ValueError):
                raise ParseError(f"{name} per_n key {key!r} is not an integer") from None
            if not isinstance(entry, int) or isinstance(entry, bool) or entry < 1:
                raise ValidationError(f"{name} per_n entry for n={n} must be an integer >= 1")
            table[n] = entry
        if not table:
            raise ParseError(f"{name} per_n table is empty")
        return table
    raise ParseError(f"{name} must be an integer or a per_n table")


def _require(doc: dict, key: str, kind: type, kind_name: str):
    if key not in doc:
        raise ParseError(f"missing required key {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"key {key!r} must be a {kind_name}")
    return value


def parse_machine(text: str) -> MachineDesc:
    """Parse and validate a machine description document (JSON).

    Raises :class:`ParseError` for structural problems and
    :class:`ValidationError` for semantic ones (undeclared states,
    outgoing transitions from halting states, non-binary aux symbols,
    duplicate transition keys).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("machine document must be a JSON object")

    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ParseError(f"unknown top-level keys: {sorted(unknown)}")

    name = _require(doc, "name", str, "string")
    if not name:
        raise ParseError("name must be non-empty")

    raw_states = _require(doc, "states", list, "array")
    if not raw_states or not all(isinstance(s, str) and s for s in raw_states):
        raise ParseError("states must be a non-empty array of non-empty strings")
    states = tuple(raw_states)
    if len(set(states)) != len(states):
        raise ValidationError("duplicate state names")

    start = _require(doc, "start", str, "string")
    accept = _require(doc, "accept", str, "string")
    reject = _require(doc, "reject", str, "string")
    for role, state in (("start", start), ("accept", accept), ("reject", reject)):
        if state not in states:
            raise ValidationError(f"{role} state {state!r} is not declared")
    if accept == reject:
        raise ValidationError("accept and reject must be distinct states")

    raw_alpha = _require(doc, "work_alphabet", list, "array")
    if not all(isinstance(s, str) and len(s) == 1 for s in raw_alpha):
        raise ParseError("work_alphabet must be an array of 1-character strings")
    work_alphabet = tuple(raw_alpha)
    if len(set(work_alphabet)) != len(work_alphabet):
        raise ValidationError("duplicate work alphabet symbols")
    if BLANK not in work_alphabet:
        raise ValidationError(f"work_alphabet must contain the blank {BLANK!r}")

    work_bound = _parse_bound(_require(doc, "work_bound", (int, dict), "integer or table"),
                              "work_bound")
    aux_len = _parse_bound(_require(doc, "aux_len", (int, dict), "integer or table"),
                           "aux_len")

    declared_k = _require(doc, "declared_k", int, "integer")
    if declared_k < 0:
        raise ValidationError("declared_k must be >= 0")

    raw_transitions = _require(doc, "transitions", list, "array")
    transitions: dict[TransitionKey, TransitionAction] = {}
    for i, rec in enumerate(raw_transitions):
        if not isinstance(rec, dict):
            raise ParseError(f"transition {i} must be an object")
        unknown = set(rec) - _TRANSITION_KEYS
        if unknown:
            raise ParseError(f"transition {i} has unknown keys: {sorted(unknown)}")
        missing = _TRANSITION_KEYS - set(rec)
        if missing:
            raise ParseError(f"transition {i} is missing keys: {sorted(missing)}")
        if not all(isinstance(rec[key], str) for key in _TRANSITION_KEYS):
            raise ParseError(f"transition {i} fields must all be strings")

        src, dst = rec["from"], rec["to"]
        for role, state in (("from", src), ("to", dst)):
            if state not in states:
                raise ValidationError(f"transition {i} references undeclared {role} state {state!r}")
        if src in (accept, reject):
            raise ValidationError(
                f"transition {i} leaves halting state {src!r}; accept/reject must have no outgoing transitions")
        if rec["read_in"] not in _INPUT_SYMBOLS:
            raise ValidationError(
                f"transition {i} reads input symbol {rec['read_in']!r}; input alphabet is 0, 1, {END_MARKER}")
        for key in ("read_work", "write_work"):
            if rec[key] not in work_alphabet:
                raise ValidationError(f"transition {i} uses undeclared work symbol {rec[key]!r}")
        for key in ("read_aux", "write_aux"):
            if rec[key] not in ("0", "1"):
                raise ValidationError(
                    f"transition {i} uses aux symbol {rec[key]!r}; the aux alphabet is binary")
        for key in ("move_in", "move_work", "move_aux"):
            if rec[key] not in _MOVES:
                raise ValidationError(f"transition {i} move {rec[key]!r} must be one of L, R, S")

        tkey: TransitionKey = (src, rec["read_in"], rec["read_work"], rec["read_aux"])
        if tkey in transitions:
            raise ValidationError(f"transition {i} duplicates key {tkey}")
        transitions[tkey] = (dst, rec["write_work"], rec["write_aux"],
                             rec["move_in"], rec["move_work"], rec["move_aux"])

    return MachineDesc(
        name=name,
        states=states,
        start=start,
        accept=accept,
        reject=reject,
        work_alphabet=work_alphabet,
        transitions=transitions,
        work_bound_spec=work_bound,
        aux_len_spec=aux_len,
        declared_k=declared_k,
    )


def load_machine(path) -> MachineDesc:
    """Read and parse a machine description file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_machine(fh.read())


def config_count_bound(M: MachineDesc, n: int,
                       ceiling: int = DEFAULT_BOUND_CEILING) -> int:
    """Number of distinct configurations reachable on inputs of length ``n``.

    A deterministic run longer than this has repeated a configuration
    and can never halt, so the bound doubles as a sound default step
    cap. Raises :class:`OverflowGuard` when the product exceeds
    ``ceiling``; the caller must then supply an explicit cap.
    """
    m = M.aux_len(n)
    wb = M.work_bound(n)
    g = len(M.work_alphabet)
    bound = len(M.states) * (n + 2) * wb * g**wb * m * 2**m
    if bound > ceiling:
        raise OverflowGuard(
            f"configuration bound {bound} for {M.name} at n={n} exceeds ceiling {ceiling}; "
            "pass an explicit step_cap")
    return bound


def run_machine(M: MachineDesc, x: str, w: str,
                step_cap: int | None = None) -> RunOutcome:
    """Simulate one run of ``M`` on input ``x`` with aux content ``w``.

    ``step_cap`` defaults to :func:`config_count_bound`; exceeding it
    raises :class:`NonHalting` because a deterministic machine past the
    configuration count has diverged. ``peak_work_cells`` is the highest
    work cell the head actually visited.
    """
    check_bits(x, "input")
    check_bits(w, "aux content")
    n = len(x)
    m = M.aux_len(n)
    if len(w) != m:
        raise LengthMismatch(
            f"aux content has length {len(w)} but {M.name} requires aux_len({n}) = {m}")
    if step_cap is None:
        step_cap = config_count_bound(M, n)
    elif step_cap < 1:
        raise ValueError("step_cap must be >= 1")
    wb = M.work_bound(n)

    input_tape = END_MARKER + x + END_MARKER
    cfg = Configuration(
        state=M.start,
        input_head=1,
        work_head=1,
        aux_head=1,
        work_tape=[BLANK],
        aux_tape=list(w),
    )
    steps = 0
    peak = 1
    transitions = M.transitions

    while cfg.state != M.accept and cfg.state != M.reject:
        if steps >= step_cap:
            raise NonHalting(
                f"{M.name} on x={x!r}, w={w!r} exceeded step cap {step_cap}")
        key = (cfg.state,
               input_tape[cfg.input_head - 1],
               cfg.work_tape[cfg.work_head - 1],
               cfg.aux_tape[cfg.aux_head - 1])
        action = transitions.get(key)
        if action is None:
            # Implicit reject: no writes, no movement.
            cfg.state = M.reject
            steps += 1
            continue
        to, write_work, write_aux, move_in, move_work, move_aux = action
        cfg.work_tape[cfg.work_head - 1] = write_work
        cfg.aux_tape[cfg.aux_head - 1] = write_aux
        cfg.input_head += _MOVES[move_in]
        cfg.work_head += _MOVES[move_work]
        cfg.aux_head += _MOVES[move_aux]
        if not 1 <= cfg.input_head <= n + 2:
            raise InputOverrun(
                f"{M.name} moved the input head to {cfg.input_head}, outside [1, {n + 2}]")
        if cfg.work_head < 1 or cfg.work_head > wb:
            raise SpaceViolation(
                f"{M.name} on x={x!r}, w={w!r} attempted work cell {cfg.work_head}, "
                f"outside [1, {wb}]")
        if cfg.work_head > len(cfg.work_tape):
            cfg.work_tape.append(BLANK)
        if cfg.work_head > peak:
            peak = cfg.work_head
        if not 1 <= cfg.aux_head <= m:
            raise AuxOverrun(
                f"{M.name} on x={x!r}, w={w!r} attempted aux cell {cfg.aux_head}, "
                f"outside [1, {m}]")
        cfg.state = to
        steps += 1

    verdict = ACCEPT if cfg.state == M.accept else REJECT
    return RunOutcome(verdict=verdict, final_aux="".join(cfg.aux_tape),
                      steps=steps, peak_work_cells=peak)
