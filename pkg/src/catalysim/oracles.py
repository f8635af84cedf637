"""Deliberately naive reference implementations used to cross-check the
main code paths. Everything here favors obviousness over speed: trial
division instead of Miller-Rabin, full enumeration instead of streaming,
linear scans instead of dict lookups.
"""

from __future__ import annotations

from itertools import product

from .bits import hamdist
from .machine import ACCEPT, BLANK, END_MARKER, REJECT, MachineDesc

__all__ = [
    "oracle_is_prime",
    "oracle_ball",
    "oracle_good_prime",
    "oracle_restore",
    "oracle_prime_injective_by_tuples",
    "oracle_trace_machine",
]


def oracle_is_prime(n: int) -> bool:
    """Trial division."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def oracle_ball(w: str, radius: int) -> set[str]:
    """All strings within Hamming distance ``radius`` of ``w``, by
    filtering the entire space. Exponential in ``len(w)``."""
    m = len(w)
    return {
        format(v, f"0{m}b")
        for v in range(1 << m)
        if bin(v ^ int(w, 2)).count("1") <= radius
    }


def oracle_good_prime(w: str, radius: int) -> int:
    """Smallest prime with injective residues on ``ball(w, radius)``.

    Materializes the whole ball as integers, then for each ascending
    trial-division prime sorts the residues and looks for an adjacent
    duplicate. Existence within the constructive bound means this loop
    terminates.
    """
    values = sorted(int(u, 2) for u in oracle_ball(w, radius))
    p = 2
    while True:
        if oracle_is_prime(p):
            residues = sorted(v % p for v in values)
            if all(a != b for a, b in zip(residues, residues[1:])):
                return p
        p += 1


def oracle_restore(z: str, w: str, k: int) -> str:
    """Ground truth for restoration: the answer is ``w`` by construction."""
    if hamdist(w, z) > k:
        raise ValueError(
            f"precondition violated: hamdist({w!r}, {z!r}) > {k}")
    return w


def oracle_prime_injective_by_tuples(w: str, r: int, p: int) -> bool:
    """Pair check in its raw tuple form, duplicates and all.

    Iterates index tuples of length ``r`` over [0, m] (0 meaning no
    flip), flips ``w`` accordingly for both tuples of every ordered
    pair, and reports whether any two distinct ball elements share a
    residue. Cost grows as ``(m+1)**(2r)``; keep ``m`` and ``r`` tiny.
    """
    m = len(w)
    w_int = int(w, 2)

    def flipped(tup):
        v = w_int
        for i in set(tup):
            if i != 0:
                v ^= 1 << (m - i)
        return v

    index_tuples = list(product(range(m + 1), repeat=r))
    for t1 in index_tuples:
        v1 = flipped(t1)
        for t2 in index_tuples:
            v2 = flipped(t2)
            if v1 != v2 and v1 % p == v2 % p:
                return False
    return True


def oracle_trace_machine(M: MachineDesc, x: str, w: str, step_cap: int) -> dict:
    """Second simulator, written independently of ``run_machine``.

    Tapes are dicts from 1-based position to symbol and the transition
    table is scanned linearly. Returns a plain dict with ``outcome`` one
    of accept/reject/nonhalting/space_violation/aux_overrun/
    input_overrun, plus the final aux, step count, and the set of work
    cells the head visited.
    """
    n = len(x)
    input_tape = {i + 1: ch for i, ch in enumerate(END_MARKER + x + END_MARKER)}
    work_tape: dict[int, str] = {}
    aux_tape = {i + 1: ch for i, ch in enumerate(w)}
    m = len(w)
    bound = M.work_bound(n)
    heads = {"in": 1, "work": 1, "aux": 1}
    visited_work = {1}
    state = M.start
    steps = 0
    delta = {"L": -1, "R": 1, "S": 0}

    def finish(outcome):
        return {
            "outcome": outcome,
            "final_aux": "".join(aux_tape[i] for i in range(1, m + 1)),
            "steps": steps,
            "visited_work": set(visited_work),
            "peak_work": max(visited_work),
        }

    while True:
        if state == M.accept:
            return finish("accept")
        if state == M.reject:
            return finish("reject")
        if steps >= step_cap:
            return finish("nonhalting")
        reads = (state,
                 input_tape[heads["in"]],
                 work_tape.get(heads["work"], BLANK),
                 aux_tape[heads["aux"]])
        found = None
        for key, action in M.transitions.items():
            if key == reads:
                found = action
                break
        steps += 1
        if found is None:
            state = M.reject
            continue
        to, write_work, write_aux, move_in, move_work, move_aux = found
        work_tape[heads["work"]] = write_work
        aux_tape[heads["aux"]] = write_aux
        heads["in"] += delta[move_in]
        heads["work"] += delta[move_work]
        heads["aux"] += delta[move_aux]
        if heads["in"] < 1 or heads["in"] > n + 2:
            return finish("input_overrun")
        if heads["work"] < 1 or heads["work"] > bound:
            return finish("space_violation")
        visited_work.add(heads["work"])
        if heads["aux"] < 1 or heads["aux"] > m:
            return finish("aux_overrun")
        state = to
