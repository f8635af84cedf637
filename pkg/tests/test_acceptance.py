"""Acceptance suite.

Each test covers one acceptance criterion at its stated tolerance (all
exact, zero tolerance) and prints one pass/fail line; run with
``pytest tests/test_acceptance.py -v -s`` to see the lines as they
appear.
"""

import dataclasses
import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

from catalysim.bits import hamdist
from catalysim.errors import LossExceeded, NonHalting
from catalysim.fixtures import load_fixture
from catalysim.fks import (
    ball_size,
    enumerate_ball,
    find_good_prime,
    mod_bits,
    primes_ascending,
)
from catalysim.machine import config_count_bound, run_machine
from catalysim.oracles import oracle_good_prime
from catalysim.properties import verify_machine
from catalysim.wrapper import lossless_simulate, restore


@contextmanager
def criterion(number, label, budget_seconds=None, elapsed_override=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number} ({label}): FAIL")
        raise
    elapsed = (elapsed_override if elapsed_override is not None
               else time.perf_counter() - start)
    if budget_seconds is not None and elapsed >= budget_seconds:
        print(f"[acceptance] criterion {number} ({label}): FAIL "
              f"(took {elapsed:.2f}s, budget {budget_seconds:.0f}s)")
        raise AssertionError(
            f"criterion {number} exceeded its runtime budget: "
            f"{elapsed:.2f}s >= {budget_seconds}s")
    line = f"[acceptance] criterion {number} ({label}): PASS in {elapsed:.2f}s"
    if budget_seconds is not None:
        line += f" (budget {budget_seconds:.0f}s)"
    print(line)


def bitstrings(length):
    if length == 0:
        return [""]
    return ["".join(t) for t in product("01", repeat=length)]


@pytest.fixture(scope="module")
def wrapped_grid():
    """Every wrapper run demanded by criterion 1, plus wall-clock time.

    Both lossy fixtures, each input length in {1, 2, 3} crossed with
    each aux length in {4, 6, 8} (aux length fixed to a constant per
    variant), every input, every initial aux content.
    """
    records = []
    start = time.perf_counter()
    for name in ("flip_first", "lose_2"):
        base = load_fixture(name)
        for m in (4, 6, 8):
            machine = dataclasses.replace(base, aux_len_spec=m)
            for n in (1, 2, 3):
                for x in bitstrings(n):
                    for w in bitstrings(m):
                        run = lossless_simulate(machine, x, w)
                        unwrapped = run_machine(machine, x, w)
                        records.append({
                            "fixture": name,
                            "k": machine.declared_k,
                            "m": m,
                            "x": x,
                            "w": w,
                            "final_aux": run.final_aux,
                            "verdict": run.verdict,
                            "unwrapped_verdict": unwrapped.verdict,
                            "p": run.good_prime.p,
                            "scratch_bits_peak": run.scratch_bits_peak,
                        })
    elapsed = time.perf_counter() - start
    return records, elapsed


def test_criterion_1_wrapped_lossy_machines_are_perfectly_catalytic(wrapped_grid):
    records, elapsed = wrapped_grid
    with criterion(1, "lossy fixtures wrap to exact restoration and same verdict",
                   budget_seconds=60.0, elapsed_override=elapsed):
        expected_runs = 2 * sum(2**n * 2**m for m in (4, 6, 8) for n in (1, 2, 3))
        assert len(records) == expected_runs
        for rec in records:
            assert rec["final_aux"] == rec["w"], rec
            assert hamdist(rec["final_aux"], rec["w"]) == 0
            assert rec["verdict"] == rec["unwrapped_verdict"], rec


def test_criterion_2_catalytic_machine_stays_lossy_for_every_k():
    with criterion(2, "perfectly catalytic fixture passes at k in {0,1,2}",
                   budget_seconds=5.0):
        base = load_fixture("xor_parity")
        report = verify_machine(base, [1, 2, 3])
        assert report.properties["catalytic_condition"].holds
        for k in (0, 1, 2):
            relaxed = dataclasses.replace(base, declared_k=k)
            relaxed_report = verify_machine(relaxed, [1, 2, 3])
            assert relaxed_report.properties["lossy_condition"].holds, k


def test_criterion_3_good_prime_search_is_constructive():
    with criterion(3, "smallest good prime matches oracle within the bound",
                   budget_seconds=120.0):
        rng = random.Random(0xF5)
        for _ in range(200):
            m = rng.randrange(1, 11)
            radius = rng.randrange(0, min(4, m) + 1)
            w = "".join(rng.choice("01") for _ in range(m))

            gp = find_good_prime(w, radius)
            assert gp.p == oracle_good_prime(w, radius), (w, radius)

            residues = [mod_bits(u, gp.p) for u in enumerate_ball(w, radius)]
            assert len(set(residues)) == len(residues), (w, radius, gp.p)

            index = 0
            for p in primes_ascending(0):
                index += 1
                if p == gp.p:
                    break
            k_ball = ball_size(m, radius)
            assert k_ball == len(residues)
            assert index <= m * k_ball * k_ball + 1, (w, radius, gp.p)


def test_criterion_4_restoration_target_is_unique():
    with criterion(4, "exactly one ball element carries the stored residue",
                   budget_seconds=60.0):
        m = 8
        rng = random.Random(0xC4)
        for k in (1, 2):
            for _ in range(20):
                w = "".join(rng.choice("01") for _ in range(m))
                gp = find_good_prime(w, 2 * k)
                target = mod_bits(w, gp.p)
                for z in enumerate_ball(w, k):
                    matches = [u for u in enumerate_ball(z, k)
                               if mod_bits(u, gp.p) == target]
                    assert matches == [w], (w, z, k)
                    assert restore(z, gp, target, k) == w


def test_criterion_5_negative_controls_produce_exact_verdicts():
    with criterion(5, "negative controls fail for the right reasons",
                   budget_seconds=10.0):
        inconsistent = verify_machine(load_fixture("bad_inconsistent"), [1])
        assert not inconsistent.properties["consistency"].holds
        witness = inconsistent.properties["consistency"].counterexample
        assert witness["x"] == "0"
        assert witness["verdict_a"] != witness["verdict_b"]

        space = verify_machine(load_fixture("bad_space"), [1])
        assert not space.properties["space_bound"].holds

        looper = load_fixture("looper")
        with pytest.raises(NonHalting):
            run_machine(looper, "0", "00", config_count_bound(looper, 1))

        tight = dataclasses.replace(load_fixture("lose_2"), declared_k=1)
        with pytest.raises(LossExceeded):
            lossless_simulate(tight, "1", "1010")


def test_criterion_6_streaming_reduction_matches_bigint_oracle():
    with criterion(6, "streaming mod agrees on 1000 random cases",
                   budget_seconds=5.0):
        rng = random.Random(0x6D0D)
        for _ in range(1000):
            length = rng.randrange(1, 257)
            w = "".join(rng.choice("01") for _ in range(length))
            p = next(primes_ascending(rng.randrange(2, 2**20 - 200)))
            assert p < 2**20
            assert mod_bits(w, p) == int(w, 2) % p, (w, p)


def test_criterion_7_scratch_stays_within_logarithmic_budget(wrapped_grid):
    records, _ = wrapped_grid
    with criterion(7, "wrapper scratch bits within (4k+2)ceil(log2(m+1)) + 3|p| + 8"):
        for rec in records:
            m, k, p = rec["m"], rec["k"], rec["p"]
            index_bits = m.bit_length()  # == ceil(log2(m+1)) for m >= 1
            budget = (4 * k + 2) * index_bits + 3 * p.bit_length() + 8
            assert rec["scratch_bits_peak"] <= budget, rec
