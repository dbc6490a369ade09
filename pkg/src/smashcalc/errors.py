"""Error taxonomy shared across the package.

Every failure mode that callers are expected to catch has its own class here.
Verification *failures* (an identity that does not hold) are not errors; they
are reported through reports.Report. Errors are for malformed input, broken
preconditions, and structurally impossible requests. The one exception is
TheoremViolation: two independently verified criteria disagreeing is never a
user mistake and must abort loudly.
"""


class SmashcalcError(Exception):
    """Base class for all package errors."""


class PoleAtPoint(SmashcalcError):
    """Evaluation of a rational function at a zero of its denominator."""


class DimensionMismatch(SmashcalcError):
    """Linear-algebra operands with incompatible shapes or spaces."""


class NoSolution(SmashcalcError):
    """Inconsistent linear system passed to solve."""


class DegreeCapExceeded(SmashcalcError):
    """A product or rewrite left the configured degree window."""


class NonOrientable(SmashcalcError):
    """A relation that cannot be oriented into a terminating rewrite rule."""


class UnknownGenerator(SmashcalcError):
    """Reference to a generator name the presentation does not declare."""


class SingularAntipode(SmashcalcError):
    """Antipode table is not invertible."""


class GateFailure(SmashcalcError):
    """A constructor-level axiom gate failed.  Carries the offending report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreconditionFailed(SmashcalcError):
    """A documented precondition of an operation does not hold."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InconsistentDifferential(SmashcalcError):
    """d applied to a defining relation does not normalize to zero."""


class NotBicovariant(SmashcalcError):
    """Supplied coactions fail the bicovariance identities."""


class RelationIncompatible(SmashcalcError):
    """A coaction does not preserve the carrier's defining relations."""


class NotEquivariant(SmashcalcError):
    """A would-be morphism fails H-equivariance or kills no relations."""


class TheoremViolation(SmashcalcError):
    """Two criteria that are provably equivalent disagreed on an instance.

    This is always fatal: it means the kernel itself is wrong, not the input.
    CLI maps it to exit code 3.
    """


class UnverifiedFormula(SmashcalcError):
    """A reconstructed formula failed its machine verification."""


class FeatureDisabled(SmashcalcError):
    """An operation behind a feature flag was invoked without the flag."""


class SchemaError(SmashcalcError):
    """Scenario file fails schema validation."""


class ExprSyntaxError(SmashcalcError):
    """Expression text rejected by the parser.  Carries a position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
