"""Exception hierarchy.

Every domain error carries a stable ``code`` used by the CLI's JSON error
output on stderr.
"""


class WPSError(Exception):
    code = "WPSError"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class NotWellFormed(WPSError, ValueError):
    code = "NotWellFormed"


class TooFewVariables(WPSError, ValueError):
    code = "TooFewVariables"


class NotCartierDegree(WPSError, ValueError):
    code = "NotCartierDegree"


class PolynomialSyntaxError(WPSError, ValueError):
    code = "SyntaxError"

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position

    def to_json(self):
        return {"error": self.code, "message": str(self), "position": self.position}


class DegreeMismatch(WPSError, ValueError):
    code = "DegreeMismatch"


class UnknownVariable(WPSError, ValueError):
    code = "UnknownVariable"


class IndexOutOfRange(WPSError, IndexError):
    code = "IndexOutOfRange"


class GradingViolation(WPSError, ValueError):
    code = "GradingViolation"


class ZeroPolynomial(WPSError, ValueError):
    code = "ZeroPolynomial"


class ResourceLimit(WPSError, RuntimeError):
    code = "ResourceLimit"


class NonHomogeneousInput(WPSError, ValueError):
    code = "NonHomogeneousInput"


class NoMinWeightSpace(WPSError, ValueError):
    code = "NoMinWeightSpace"


class UnsupportedPositiveDimensionalZmin(WPSError, ValueError):
    code = "UnsupportedPositiveDimensionalZmin"


class CStarFails(WPSError, ValueError):
    code = "CStarFails"


class EmptyLinearSystem(WPSError, ValueError):
    code = "EmptyLinearSystem"


class DimensionNot2(WPSError, ValueError):
    code = "DimensionNot2"


class BadPrime(WPSError, ValueError):
    code = "BadPrime"
