"""Exception hierarchy shared by all modules."""


class ActiveSumError(Exception):
    """Base class for every error raised by this package."""


class MembershipError(ActiveSumError):
    """An element was expected to lie in a group but does not."""


class CutoffExceeded(ActiveSumError):
    """An exhaustive enumeration would exceed its configured size cutoff."""

    def __init__(self, what, size, cutoff):
        super().__init__(f"{what}: size {size} exceeds cutoff {cutoff}")
        self.size = size
        self.cutoff = cutoff


class UnsupportedParameters(ActiveSumError):
    pass


class FamilyTooLarge(ActiveSumError):
    pass


class FamilyError(ActiveSumError):
    """A subgroup family is not a valid conjugation-closed family of distinct subgroups."""


class BudgetExceeded(ActiveSumError):
    """Coset enumeration ran out of coset budget.

    The partial table is discarded; ``stats`` keeps the counters gathered so far.
    """

    def __init__(self, budget, stats):
        super().__init__(f"coset enumeration exceeded budget of {budget} live cosets")
        self.budget = budget
        self.stats = stats


class EncodingError(ActiveSumError):
    pass


class NotAHomomorphism(ActiveSumError):
    pass


class HypothesisViolation(ActiveSumError):
    def __init__(self, hypothesis, witness=None, detail=""):
        msg = f"hypothesis '{hypothesis}' violated"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.hypothesis = hypothesis
        self.witness = witness


class MissingSchurData(ActiveSumError):
    pass


class DivisibilityError(ActiveSumError):
    pass


class ParseError(ActiveSumError):
    def __init__(self, message, line=None, source=None):
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line
        self.source = source
