"""Exception hierarchy for catalysim.

Two broad families matter to callers: usage problems (bad documents, bad
arguments, infeasible requests) and model violations discovered while
running or wrapping a machine. The CLI maps the first family to exit
code 2 and the second to exit code 1.
"""


class CatalysimError(Exception):
    """Base class for all catalysim errors."""


class ParseError(CatalysimError):
    """Machine description document is structurally malformed."""


class ValidationError(CatalysimError):
    """Machine description is well-formed but semantically invalid."""


class LengthMismatch(CatalysimError):
    """Two bit strings that must have equal length do not."""


class IndexOutOfRange(CatalysimError):
    """A flip index points outside the bit string."""


class OverflowGuard(CatalysimError):
    """Configuration-count bound exceeds the configured ceiling."""


class BudgetExceeded(CatalysimError):
    """Exhaustive enumeration would exceed the configured budget."""

    def __init__(self, message: str, n: int | None = None):
        super().__init__(message)
        self.n = n


class MachineViolation(CatalysimError):
    """A run left the machine model (space, halting, or head bounds)."""


class SpaceViolation(MachineViolation):
    """Work head attempted a cell outside [1, work_bound(n)]."""


class AuxOverrun(MachineViolation):
    """Aux head attempted a cell outside [1, m]."""


class InputOverrun(MachineViolation):
    """Input head attempted a cell outside the end-marked input tape."""


class NonHalting(MachineViolation):
    """Run exceeded its step cap without reaching accept or reject."""


class NoGoodPrimeBelowCap(CatalysimError):
    """No prime up to the cap hashes the ball injectively."""

    def __init__(self, message: str, cap: int, last_prime: int | None,
                 collision: tuple[str, str] | None):
        super().__init__(message)
        self.cap = cap
        self.last_prime = last_prime
        self.collision = collision


class ResidueNotFound(CatalysimError):
    """No element of the search ball carries the stored residue."""


class LossExceeded(CatalysimError):
    """The wrapped machine lost more aux bits than it declared."""
