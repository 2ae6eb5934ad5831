"""Exception types raised by the library.

Everything inherits from MayMustError so callers can catch library errors
in one clause. Input problems are never silently defaulted away.
"""


class MayMustError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateArgumentError(MayMustError):
    """An argument identifier was declared more than once."""


class UnknownArgumentError(MayMustError):
    """An attack references an identifier that was never declared."""


class MayExceedsMustError(MayMustError):
    """A nuance tuple violates may <= must on one of its scales."""


class FractionOrderError(MayMustError):
    """Ratio fractions violate may-fraction <= must-fraction on a scale."""


class DomainMismatchError(MayMustError):
    """An order/meet operation was applied to labellings over different domains."""


class EmptyMeetError(MayMustError):
    """The meet of an empty collection of labellings was requested."""


class OverlappingDomainsError(MayMustError):
    """Strict composition was asked to combine labellings with shared arguments."""


class UndefinedAttackerLabelError(MayMustError):
    """A designation query needs an attacker's label that the labelling lacks."""


class UndefinedArgumentLabelError(MayMustError):
    """A properness query was made for an argument outside the labelling's domain."""


class NoMaximallyProperError(MayMustError):
    """No maximally proper labelling exists for a nonempty framework.

    This genuinely occurs: two pre-maximally proper labellings can make
    incomparable sets of arguments proper with no labelling covering both
    (see the existence notes in the README). The offending framework is
    carried in the message so it can be replayed.
    """


class FrozenLabelMissingError(MayMustError):
    """A reduction needs a frozen label for an external attacker that is undefined."""


class NonConvergentError(MayMustError):
    """Grounded iteration cycled, or converged to a non-least fixpoint.

    Either way the operator behaved non-monotonically on this instance and
    the iterative result cannot be trusted as a least fixpoint.
    """


class MmafSyntaxError(MayMustError):
    """A framework document line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line = line_no


class InvalidProbabilityError(MayMustError):
    """An attack probability lies outside [0, 1]."""


class InstanceTooLargeError(MayMustError):
    """The instance exceeds the configured exhaustive-search bound."""
