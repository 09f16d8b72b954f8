# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT


from typing import Optional

from Crypto.Hash import BLAKE2s

DEFAULT_PRECISION_CAP = 256
FIRST_ROUND_BITS = 64

DEFAULT_IDOC_DEPTH = 1000
DEFAULT_MAX_PIECES = 1000
DEFAULT_MAX_STEPS = 1000
DEFAULT_MAX_ORBIT_VALUES = 10 ** 7

# the first-return budget is this number times the number of intervals
RETURN_BUDGET_PER_INTERVAL = 10 ** 4

# Birkhoff orbits longer than this are computed in floating point
FLOAT_MODE_THRESHOLD = 10 ** 6

EXIT_TOOL_ERROR = 1
EXIT_INPUT_ERROR = 2


class IetForgeError(Exception):
    """Base class of the errors that the command line reports as
    diagnostics with a stable code."""
    code = "tool-error"
    exit_code = EXIT_TOOL_ERROR

    def diagnostic(self) -> str:
        return f"error[{self.code}]: {self}"


class PrecisionExhausted(IetForgeError):
    code = "precision-exhausted"


class IrrationalityUnknown(IetForgeError):
    code = "irrationality-unknown"


class NonPositiveLength(IetForgeError):
    code = "non-positive-length"

    def __init__(self, index: int):
        super().__init__(f"Length {index} is not positive")
        self.index = index


class MixedIrrationals(IetForgeError):
    code = "mixed-irrationals"


class OutOfDomain(IetForgeError):
    code = "out-of-domain"


class LengthMismatch(IetForgeError):
    code = "length-mismatch"


class VerificationFailed(IetForgeError):
    code = "verification-failed"

    def __init__(self, index: int, message: Optional[str] = None):
        super().__init__(message or f"Verification failed at interval {index}")
        self.index = index


class BudgetExhausted(IetForgeError):
    code = "budget-exhausted"


class NoReturnWithinBudget(IetForgeError):
    code = "no-return"

    def __init__(self, stranded, budget: int):
        # `stranded` is the (lo, hi) pair of the subinterval that never came
        # back; kept untyped here to avoid importing the numeric layer
        super().__init__(
            f"Subinterval [{stranded[0]}, {stranded[1]}) did not return "
            f"within {budget} steps")
        self.stranded = stranded
        self.budget = budget


class ParameterOutOfRange(IetForgeError):
    code = "parameter-out-of-range"


class SpecSyntaxError(IetForgeError):
    code = "syntax-error"
    exit_code = EXIT_INPUT_ERROR

    def __init__(self, line: int, col: int, expected: str,
                 found: Optional[str] = None):
        found_txt = "end of input" if found is None else repr(found)
        super().__init__(
            f"{line}:{col}: expected {expected}, found {found_txt}")
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found


class SpecSemanticError(IetForgeError):
    code = "semantic-error"
    exit_code = EXIT_INPUT_ERROR


def blake2s_hex(data: bytes) -> str:
    h_obj = BLAKE2s.new(digest_bits=256)
    h_obj.update(data)
    return h_obj.hexdigest()
