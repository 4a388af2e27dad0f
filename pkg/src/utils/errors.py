"""
Exception hierarchy shared by the library and the CLI

Every class carries the process exit code the CLI reports for it.
"""


class HyperlapError(Exception):
    """Base class for all toolkit errors"""
    exit_code: int = 1


class ConfigurationError(HyperlapError):
    """Invalid options, unknown names, missing seeds"""
    exit_code = 1


class ParameterError(ConfigurationError):
    """Numeric parameter outside its admissible range"""


class StratificationError(ConfigurationError):
    """Cross-validation folds cannot be built for the given labels"""


class DataError(HyperlapError):
    """Malformed or unusable input data"""
    exit_code = 2


class HypergraphValidationError(DataError):
    """Hypergraph violates a structural invariant"""


class NormalizationError(DataError):
    """A sample cannot be normalized (zero norm)"""

    def __init__(self, message: str, vertex: int):
        super().__init__(message)
        self.vertex = vertex


class NumericalError(HyperlapError):
    """Numerical failure inside a kernel"""
    exit_code = 3


class ContractError(NumericalError):
    """Input breaks a kernel contract (e.g. asymmetric matrix)"""


class FactorizationError(NumericalError):
    """Matrix factorization failed"""


class RankError(NumericalError):
    """Not enough nonzero eigenvalues for the requested embedding"""

    def __init__(self, message: str, zero_count: int):
        super().__init__(message)
        self.zero_count = zero_count


class DegenerateVolumeError(NumericalError):
    """Simplex degree exceeds the ambient dimension"""


class DegenerateFaceError(NumericalError):
    """A hyperface cofactor vanishes (parallel or degenerate faces)"""
