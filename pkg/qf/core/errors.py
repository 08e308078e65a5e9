from dataclasses import dataclass
from typing import Any, Optional, Sequence


class QuandleError(ValueError):
    """Base class for every domain failure raised by qf.

    Subclasses ValueError so callers that only know the stdlib contract
    (and the CLI handlers) can keep catching ValueError.
    """

    def __init__(self, message: str, witness: Optional[Sequence[Any]] = None):
        super().__init__(message)
        self.message = message
        self.witness = tuple(witness) if witness is not None else None

    def to_dict(self) -> dict:
        return {
            "type": type(self).__name__,
            "message": self.message,
            "witness": [str(w) for w in self.witness] if self.witness is not None else None,
        }


# algebra
class NonUnitLeadingCoefficient(QuandleError):
    pass

class NotInIdeal(QuandleError):
    pass

class SizeLimitExceeded(QuandleError):
    pass

class InfiniteModule(QuandleError):
    pass


# link diagrams
class ParseError(QuandleError):
    pass

class TopologyError(QuandleError):
    pass

class SignError(QuandleError):
    pass

class UnknownName(QuandleError):
    pass

class NotAKnot(QuandleError):
    pass


# quandles
class AxiomViolation(QuandleError):
    pass

class AxiomIViolation(AxiomViolation):
    pass

class AxiomIIViolation(AxiomViolation):
    pass

class AxiomIIIViolation(AxiomViolation):
    pass

class NotClosed(QuandleError):
    pass

class NotAHomomorphism(QuandleError):
    pass


# homology / extensions
class NotACocycle(QuandleError):
    pass

class InvalidDynamicalCocycle(QuandleError):
    pass

class EvenN(QuandleError):
    pass


# alexander
class NotAKernelVector(QuandleError):
    pass


# cli
class UnknownExample(QuandleError):
    pass


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Optional[tuple] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise SizeLimitExceeded(f"{what} needs {count} candidates, cap is {cap} (set QF_MAX_ENUM to raise it)")
