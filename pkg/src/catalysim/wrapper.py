"""Lossless wrapping of lossy catalytic machines.

The wrapper turns a machine that may lose up to ``k`` aux bits into a
perfectly catalytic decision procedure in four phases:

1. find the smallest prime injective on the radius-``2k`` Hamming ball
   around the initial aux content ``w``;
2. store ``int(w) mod p`` as the restoration target;
3. run the machine as a black box, leaving some ``z`` with
   ``hamdist(w, z) <= k`` on the aux tape;
4. scan the radius-``k`` ball around ``z`` for the unique element whose
   residue matches the target and write it back.

Because ``ball(z, k)`` is contained in ``ball(w, 2k)`` (triangle
inequality) and the prime is injective there, the match is unique and
equals ``w``. The wrapper's own working storage is itemized in bits to
witness that the overhead is logarithmic in the tape length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import hamdist
from .errors import LengthMismatch, LossExceeded, ResidueNotFound
from .fks import GoodPrime, enumerate_ball, find_good_prime, mod_bits
from .machine import MachineDesc, RunOutcome, run_machine

__all__ = [
    "WrapperRun",
    "lossless_simulate",
    "restore",
    "scratch_accounting",
    "scratch_budget",
]


@dataclass(frozen=True)
class WrapperRun:
    """Record of one wrapped run."""

    verdict: str
    good_prime: GoodPrime
    init_aux_val: int
    restored: bool
    inner_outcome: RunOutcome
    final_aux: str
    loss_bound: int
    scratch_bits_peak: int


def scratch_budget(m: int, k: int, p: int) -> int:
    """Bit budget for the wrapper's working storage.

    Two index tuples of ``2k`` indices plus one of ``k`` reused, the
    prime, two residues, and constant flags: ``(4k+2) * ceil(log2(m+1))
    + 3 * bitlen(p) + 8``.
    """
    index_bits = m.bit_length()  # ceil(log2(m+1)) for m >= 1
    return (4 * k + 2) * index_bits + 3 * p.bit_length() + 8


def _scratch_components(m: int, k: int, p: int) -> list[tuple[str, int]]:
    index_bits = m.bit_length()
    return [
        ("prime", p.bit_length()),
        ("index_tuples", 2 * (2 * k) * index_bits),
        ("residues", 2 * p.bit_length()),
        ("flags", 3),
    ]


def scratch_accounting(run: WrapperRun) -> list[tuple[str, int]]:
    """Itemize the wrapper-local storage of a run as (component, bits).

    The components are the prime candidate, the two index tuples driving
    the pair checks, the two residues being compared, and the result and
    loop flags; their sum equals ``run.scratch_bits_peak``.
    """
    m = len(run.final_aux)
    return _scratch_components(m, run.loss_bound, run.good_prime.p)


def restore(z: str, prime: GoodPrime, target: int, k: int) -> str:
    """Find the unique string in ``ball(z, k)`` whose residue is ``target``.

    Scans the ball in enumeration-contract order and stops at the first
    match, which injectivity of ``prime`` on the enclosing ball makes
    unique. Raises :class:`ResidueNotFound` when no element matches,
    which signals loss beyond ``k`` or an uncertified prime.
    """
    for u in enumerate_ball(z, k):
        if mod_bits(u, prime.p) == target:
            return u
    raise ResidueNotFound(
        f"no element of ball({z!r}, {k}) has residue {target} mod {prime.p}")


def lossless_simulate(M: MachineDesc, x: str, w_prime: str, *,
                      strict: bool = False,
                      prime_cap: int | None = None,
                      step_cap: int | None = None) -> WrapperRun:
    """Run ``M`` on ``(x, w_prime)`` behind the restoration wrapper.

    ``M.declared_k`` bounds the loss the inner machine is trusted to
    cause. The returned run carries the inner verdict and a final aux
    bit-identical to ``w_prime``. With ``strict=True`` the loss bound is
    checked directly after the inner run for a sharper diagnostic;
    otherwise a violation surfaces as an empty residue search, raised as
    :class:`LossExceeded`. Inner-run errors propagate unchanged.
    """
    n = len(x)
    m = M.aux_len(n)
    if len(w_prime) != m:
        raise LengthMismatch(
            f"aux content has length {len(w_prime)} but {M.name} requires aux_len({n}) = {m}")
    k = M.declared_k

    good_prime = find_good_prime(w_prime, min(2 * k, m), prime_cap)
    init_aux_val = mod_bits(w_prime, good_prime.p)

    inner = run_machine(M, x, w_prime, step_cap)
    z = inner.final_aux

    if strict and hamdist(w_prime, z) > k:
        raise LossExceeded(
            f"{M.name} lost {hamdist(w_prime, z)} bits on x={x!r}, w={w_prime!r}; "
            f"declared_k={k}")
    try:
        restored_aux = restore(z, good_prime, init_aux_val, min(k, m))
    except ResidueNotFound as exc:
        raise LossExceeded(
            f"restoration failed for {M.name} on x={x!r}, w={w_prime!r}: {exc}; "
            f"the machine exceeded its declared loss bound k={k}") from exc

    scratch = sum(bits for _, bits in _scratch_components(m, k, good_prime.p))
    run = WrapperRun(
        verdict=inner.verdict,
        good_prime=good_prime,
        init_aux_val=init_aux_val,
        restored=True,
        inner_outcome=inner,
        final_aux=restored_aux,
        loss_bound=k,
        scratch_bits_peak=scratch,
    )
    assert run.scratch_bits_peak <= scratch_budget(m, k, good_prime.p)
    return run
