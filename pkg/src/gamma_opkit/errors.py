"""Exception hierarchy for contract violations and numerical failures."""


class OpkitError(Exception):
    """Base class for all workbench errors."""


class DimensionMismatch(OpkitError):
    pass


class NotHermitian(OpkitError):
    pass


class IndefiniteBeyondTolerance(OpkitError):
    pass


class NotAContraction(OpkitError):
    pass


class ResidualTooLarge(OpkitError):
    pass


class RankDeficientSystem(Warning):
    """Solution of a coupled operator system is not unique at tolerance."""


class NotToeplitz(OpkitError):
    pass


class NoConvergence(OpkitError):
    pass


class ResolventSingular(OpkitError):
    pass


class TruncationInsufficient(OpkitError):
    pass


class TailTooLarge(OpkitError):
    pass


class MissingInput(OpkitError):
    pass


class HypothesisViolated(OpkitError):
    pass


class EmbeddingNotFound(OpkitError):
    pass


class InvalidParams(OpkitError):
    pass


class GridTooCoarse(OpkitError):
    pass


class SolverDisagreement(OpkitError):
    pass


class RootFindingFailure(OpkitError):
    pass


class IncompatibleOperators(OpkitError):
    pass
