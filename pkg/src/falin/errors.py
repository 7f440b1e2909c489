"""Exception hierarchy for the falin package.

Error classes carry enough context to reconstruct what failed; the CLI maps
them onto exit codes (parse/usage -> 1, mathematical failure -> 2, broken
internal invariant -> 3).
"""

from __future__ import annotations


class FalinError(Exception):
    """Base class for all package errors."""


class VariableMismatch(FalinError):
    """Laurent operands disagree on the number of torus variables."""


class RankMismatch(FalinError):
    """Free-algebra operands disagree on rank or coefficient kind."""


class NotMonomial(FalinError):
    """A substitution image was required to be a single monomial."""


class ZeroTorusPoint(FalinError):
    """An evaluation point had a zero entry (not a torus element)."""


class SingularLinearPart(FalinError):
    """The linear part of a map is not invertible."""


class SingularMatrix(FalinError):
    """A matrix that must be invertible is singular."""


class NotPolynomialInverseWithinBound(FalinError):
    """Series inversion left a nonzero residual at the degree bound."""


class NotDiagonalizable(FalinError):
    """Weight spaces do not span; the input is not a genuine torus action."""


class NotEffective(FalinError):
    """The power matrix is singular: a subtorus acts trivially.

    ``report`` holds the partial LinearizationReport gathered before the
    determinant check failed (no beta, no verification verdict).
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FixedPointNotFound(FalinError):
    """The fixed-point heuristic exhausted its attempts."""


class AxiomsFail(FalinError):
    """An alleged action failed the group-action axioms.

    ``witness`` is the AxiomVerdict describing the first discrepancy.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DegreeBlowupExceeded(FalinError):
    """Corpus generation exceeded the hard degree (or size) cap."""


class InternalInvariant(FalinError):
    """A self-check the mathematics guarantees has failed: a bug."""


class ParseError(FalinError):
    """Syntax or semantic error in a document; always carries a position."""

    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col
