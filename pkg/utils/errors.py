class SumRankError(Exception):
    """ Base error; `detail` is what the CLI and the HTTP layer report """
    exit_code = 2

    def __init__(self, detail: str = ""):
        super().__init__(detail or self.__class__.__name__)
        self.detail = detail or self.__class__.__name__


# Invalid parameters (exit code 2)
class NonPrimeP(SumRankError):
    pass


class EllNotDividingQMinus1(SumRankError):
    pass


class BadDegree(SumRankError):
    pass


class BadSubfieldDegree(SumRankError):
    pass


class ZeroBeta(SumRankError):
    pass


class ZeroEntry(SumRankError):
    pass


class DivByZero(SumRankError):
    pass


class LengthMismatch(SumRankError):
    pass


class BadPartition(SumRankError):
    pass


class PDividesEll(SumRankError):
    pass


class NonCoprimeFactors(SumRankError):
    pass


class ComponentCountMismatch(SumRankError):
    pass


class ComponentFieldMismatch(SumRankError):
    pass


class NotRootOfUnity(SumRankError):
    pass


class NotMonic(SumRankError):
    pass


class NotDivisor(SumRankError):
    pass


class RequiresNEqualsM(SumRankError):
    pass


class ConjugateEvaluationPoints(SumRankError):
    pass


class DependentBasis(SumRankError):
    pass


class AssumptionViolated(SumRankError):
    pass


class WeightInfeasible(SumRankError):
    pass


class InvalidVector(SumRankError):
    pass


class InvalidCodeFile(SumRankError):
    pass


class BudgetExceeded(SumRankError):
    exit_code = 3


# Decoding
class RadiusExceeded(SumRankError):
    exit_code = 4


# Internal self-checks; these indicate a bug, never a valid state
class VerificationFailed(SumRankError):
    exit_code = 5


class CrossCheckMismatch(SumRankError):
    exit_code = 5
