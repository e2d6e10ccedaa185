"""
Error hierarchy shared by every workbench package.

Input problems derive from InvalidInput, budget problems from
EnumerationBudgetExceeded, failed checks from VerificationFailure.
"""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class InvalidInput(WorkbenchError, ValueError):
    """Raised when a user supplied object violates its invariants."""


# Algebras ---------------------------------------------------------------


class AlgebraInvalid(InvalidInput):
    """The structure-constant table does not define a unital associative algebra."""


class NotPrimeCharacteristic(AlgebraInvalid):
    def __init__(self, char):
        self.char = char
        super().__init__(f"Characteristic {char} is not a prime number")


class NotAssociative(AlgebraInvalid):
    def __init__(self, i, j, k, labels=None):
        self.triple = (i, j, k)
        names = [labels[x] for x in self.triple] if labels else list(self.triple)
        super().__init__(
            f"Multiplication is not associative on basis triple "
            f"({names[0]}, {names[1]}, {names[2]})"
        )


class NoUnit(AlgebraInvalid):
    def __init__(self, detail="unit vector is not a two-sided identity"):
        super().__init__(f"No unit: {detail}")


class IdealInvalid(InvalidInput):
    """The ideal basis does not span a (square-zero) two-sided ideal."""


class NotTwoSided(IdealInvalid):
    def __init__(self, side, basis_index, ideal_index):
        self.side = side
        self.basis_index = basis_index
        self.ideal_index = ideal_index
        super().__init__(
            f"Ideal is not closed under {side} multiplication "
            f"(algebra basis {basis_index}, ideal vector {ideal_index})"
        )


class IdealNotSquareZero(IdealInvalid):
    def __init__(self, s, t):
        self.pair = (s, t)
        super().__init__(f"Ideal vectors {s} and {t} multiply to a nonzero element")


class NotBimodule(IdealInvalid):
    """The right tensor factor is not an (A, A)-sub-bimodule of A."""


class ModuleInvalid(InvalidInput):
    """The action matrices do not define a right module."""


class HomInvalid(InvalidInput):
    """The matrix does not intertwine the two module actions."""


# Pair category ----------------------------------------------------------


class NotSubmodule(InvalidInput):
    """The given subspace is not invariant under the algebra action."""


class NotKilledByI(InvalidInput):
    """The subobject Y is not annihilated by the ideal, so Y is not in B."""


class QuotientNotInB(InvalidInput):
    """X·I is not contained in Y, so X/Y is not in B."""


class NotInB(InvalidInput):
    """The module is not annihilated by the ideal."""


class PairHomInvalid(InvalidInput):
    """The module map does not send Y into Y'."""


class NotAdmissible(InvalidInput):
    """The sequence is not an admissible short exact sequence."""


# Envelope ---------------------------------------------------------------


class ConditionOneFails(InvalidInput):
    """The composition v ∘ ĵ(u) does not vanish."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__("Condition (i) fails: v composed with ĵ(u) is nonzero")


class ConditionTwoFails(InvalidInput):
    """u ∘ i(v) differs from the canonical map ĵ(X) → j(X) → X."""

    def __init__(self, residual):
        self.residual = residual
        super().__init__(
            "Condition (ii) fails: the square for u and v does not commute"
        )


class InvalidCObject(InvalidInput):
    """A D-module or quadruple does not decode to a valid object of C."""


class CHomInvalid(InvalidInput):
    """A pair (f, g) is not a morphism of quadruples."""


# Budgets and internal errors -------------------------------------------


class EnumerationBudgetExceeded(WorkbenchError):
    def __init__(self, cap, needed=None, what="enumeration"):
        self.cap = cap
        self.needed = needed
        detail = f" (needs {needed})" if needed is not None else ""
        super().__init__(f"{what} exceeds the budget of {cap}{detail}")


class UnrecognizedFactor(WorkbenchError):
    """A composition factor matched no known simple module."""


class VerificationFailure(WorkbenchError):
    def __init__(self, check, message, witness=None):
        self.check = check
        self.witness = witness or {}
        super().__init__(f"{check}: {message}")


# Configuration ----------------------------------------------------------


class ParseError(InvalidInput):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"Parse error at line {line}: {message}")


class SchemaViolation(InvalidInput):
    def __init__(self, field, message="missing or malformed"):
        self.field = field
        super().__init__(f"Schema violation in field {field!r}: {message}")
