"""Exception types shared across the package.

DomainError subclasses signal mathematically meaningful refusals (the CLI maps
them to exit code 3), ParseError covers malformed text input (exit code 2) and
SamplingFailed is the one retry-budget failure (exit code 4).
"""


class ParseError(ValueError):
    """Malformed polynomial, ideal file or sequence text."""


class InhomogeneousInput(ParseError):
    """Polynomial text whose terms do not share a single degree."""


class DomainError(Exception):
    """Base class for well-formed input that the mathematics rejects."""


class SingularChange(DomainError):
    """A 2x2 substitution matrix with zero determinant."""


class NotArtinian(DomainError):
    """Ideal of infinite colength (common factor and no truncation)."""


class EmptyComponent(DomainError):
    """Requested the common factor of a zero graded component."""


class PairingUndefined(DomainError):
    """Power pairing requested in a degree whose quotient is not a line."""


class InvalidSequence(DomainError):
    """Sequence fails the shape constraints for two degree-1 generators."""


class InvalidColength(DomainError):
    """Enumeration requested below the smallest admissible colength."""


class NoCatalog(DomainError):
    """Normal forms requested for an infinite-type label."""


class InvalidParameters(DomainError):
    """Catalog label with missing or out-of-range parameters."""


class InvalidPencil(DomainError):
    """Pencil discriminant needs two independent quadratics."""


class SamplingFailed(Exception):
    """Random ideal construction exhausted its retry budget."""

    def __init__(self, entries, retries):
        self.entries = tuple(entries)
        self.retries = retries
        super().__init__(
            "could not realize sequence %s after %d attempts" % (self.entries, retries)
        )
