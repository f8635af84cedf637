"""catalysim: simulate, verify, and losslessly wrap catalytic Turing machines.

A catalytic machine borrows a full auxiliary tape of arbitrary content
and must restore it exactly by halting time. This package provides the
three-tape machine model and simulator, exhaustive desk-scale property
verification, and a wrapper that turns a machine allowed to lose up to
``k`` aux bits into a perfectly catalytic one by storing a prime-modulus
hash of the borrowed content and searching the Hamming ball around the
final content for the unique preimage.
"""

from . import errors
from .bits import bits_of_int, hamdist, int_of_bits, random_bits
from .fixtures import FIXTURE_NAMES, fixture_text, load_fixture
from .fks import (
    GoodPrime,
    ball_size,
    enumerate_ball,
    find_good_prime,
    fks_prime_cap,
    flip,
    flip_set,
    is_prime,
    mod_bits,
    primes_ascending,
)
from .machine import (
    ACCEPT,
    BLANK,
    END_MARKER,
    REJECT,
    Configuration,
    MachineDesc,
    RunOutcome,
    config_count_bound,
    load_machine,
    parse_machine,
    run_machine,
)
from .properties import (
    DEFAULT_VERIFY_BUDGET,
    PropertyReport,
    PropertyStatus,
    verify_machine,
)
from .wrapper import (
    WrapperRun,
    lossless_simulate,
    restore,
    scratch_accounting,
    scratch_budget,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
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
    "hamdist",
    "int_of_bits",
    "bits_of_int",
    "random_bits",
    "PropertyReport",
    "PropertyStatus",
    "verify_machine",
    "DEFAULT_VERIFY_BUDGET",
    "GoodPrime",
    "mod_bits",
    "flip",
    "flip_set",
    "enumerate_ball",
    "ball_size",
    "is_prime",
    "primes_ascending",
    "fks_prime_cap",
    "find_good_prime",
    "WrapperRun",
    "lossless_simulate",
    "restore",
    "scratch_accounting",
    "scratch_budget",
    "FIXTURE_NAMES",
    "fixture_text",
    "load_fixture",
    "__version__",
]
