"""The fixture zoo's documented classifications, regenerated by the verifier."""

import pytest

from catalysim.fixtures import FIXTURE_NAMES, fixture_text, load_fixture
from catalysim.machine import parse_machine, run_machine
from catalysim.properties import verify_machine

# The property table documented in the README: which properties hold on
# the fixture's own declaration at n = 1, and the measured minimal loss.
FIXTURE_TABLE = {
    "flip_first": {
        "space_bound": True, "catalytic_condition": False,
        "lossy_condition": True, "consistency": True, "halting": True,
        "minimal_k": 1,
    },
    "lose_2": {
        "space_bound": True, "catalytic_condition": False,
        "lossy_condition": True, "consistency": True, "halting": True,
        "minimal_k": 2,
    },
    "xor_parity": {
        "space_bound": True, "catalytic_condition": True,
        "lossy_condition": True, "consistency": True, "halting": True,
        "minimal_k": 0,
    },
    "bad_inconsistent": {
        "space_bound": True, "catalytic_condition": True,
        "lossy_condition": True, "consistency": False, "halting": True,
        "minimal_k": 0,
    },
    "bad_space": {
        "space_bound": False, "catalytic_condition": True,
        "lossy_condition": True, "consistency": True, "halting": True,
        "minimal_k": 0,
    },
    "looper": {
        "space_bound": True, "catalytic_condition": True,
        "lossy_condition": True, "consistency": True, "halting": False,
        "minimal_k": 0,
    },
}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_parses_from_its_file(name):
    machine = load_fixture(name)
    assert machine.name == name
    assert parse_machine(fixture_text(name)) == machine


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_classification_matches_documented_table(name):
    expected = FIXTURE_TABLE[name]
    report = verify_machine(load_fixture(name), [1])
    regenerated = {prop: status.holds for prop, status in report.properties.items()}
    regenerated["minimal_k"] = report.minimal_k
    assert regenerated == expected


def test_xor_parity_decides_parity_for_all_small_inputs():
    machine = load_fixture("xor_parity")
    for n in range(1, 7):
        for x_int in range(2**n):
            x = format(x_int, f"0{n}b")
            expected = "accept" if x.count("1") % 2 == 1 else "reject"
            for w_int in range(16):
                w = format(w_int, "04b")
                outcome = run_machine(machine, x, w)
                assert outcome.verdict == expected
                assert outcome.final_aux == w
    report = verify_machine(machine, list(range(1, 7)))
    assert report.holds_everywhere()
    assert report.minimal_k == 0
