"""
Gamma-Euler Error Types
Exception hierarchy shared by every module, plus the CLI exit-code contract
"""

from typing import Dict, Type


class GammaEulerError(Exception):
    """Base class for every error raised by the toolkit"""


class BudgetExceeded(GammaEulerError):
    """Enumeration would visit more candidates than the configured budget allows"""

    def __init__(self, what: str, candidates: int, budget: int):
        self.what = what
        self.candidates = candidates
        self.budget = budget
        super().__init__(f"{what}: {candidates} candidates exceed the budget of {budget}")


class SubsetBudgetExceeded(GammaEulerError):
    """Subset sums over more than subset_cap indices were requested"""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{size} indices exceed the subset cap of {cap} (2^{size} subsets)")


class UnsupportedGamma(GammaEulerError):
    """No formula and no user-supplied value exists for this (Gamma, isotropy) pair"""


class UnsupportedGroup(GammaEulerError):
    """The requested compact group has no implementation (e.g. SU(2))"""


class RejectsZeroWeight(GammaEulerError):
    """A real circle representation was given a zero weight in its unitary part"""


class FreeEllOne(GammaEulerError):
    """A free-group closed form was evaluated at l = 1, outside its stated range"""


class NonIntegralBurnside(GammaEulerError):
    """Burnside average was not an integer: the group table or hom set is broken"""


class InexactDivision(GammaEulerError):
    """A checked-exact division left a remainder"""


class InvalidGroupTable(GammaEulerError):
    """A multiplication table failed the group axioms"""


class GammaSpecError(GammaEulerError):
    """Textual input could not be parsed"""


class ConfigurationError(GammaEulerError):
    """Configuration file or environment override is malformed"""


class CrossCheckMismatch(GammaEulerError):
    """Two independent evaluation paths disagreed"""

    def __init__(self, what: str, expected, actual):
        self.what = what
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what}: {expected} != {actual}")


EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_MISMATCH = 4

_EXIT_CODES: Dict[Type[GammaEulerError], int] = {
    GammaSpecError: EXIT_PARSE,
    ConfigurationError: EXIT_PARSE,
    RejectsZeroWeight: EXIT_PARSE,
    FreeEllOne: EXIT_PARSE,
    InvalidGroupTable: EXIT_PARSE,
    UnsupportedGamma: EXIT_UNSUPPORTED,
    UnsupportedGroup: EXIT_UNSUPPORTED,
    BudgetExceeded: EXIT_UNSUPPORTED,
    SubsetBudgetExceeded: EXIT_UNSUPPORTED,
    CrossCheckMismatch: EXIT_MISMATCH,
    NonIntegralBurnside: EXIT_MISMATCH,
    InexactDivision: EXIT_MISMATCH,
}


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the public exit code (unknown errors count as mismatches)"""
    for cls in type(exc).__mro__:
        if cls in _EXIT_CODES:
            return _EXIT_CODES[cls]
    return EXIT_MISMATCH


def exact_div(numerator: int, denominator: int, what: str = "division") -> int:
    """Integer division that refuses to round"""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivision(f"{what}: {numerator} / {denominator} leaves remainder {remainder}")
    return quotient
