"""Application enums."""

import enum


class LogLevel(str, enum.Enum):
    """Defines available logging levels for application monitoring and debugging."""

    NOTSET = "NOTSET"
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    FATAL = "FATAL"
    TRACE = "TRACE"


class AppEnvs(str, enum.Enum):
    """Application envs"""

    LOCAL = "local"
    DEVELOPMENT = "development"
    QA = "qa"
    PRODUCTION = "production"


class StorageKind(str, enum.Enum):
    """Backing storage of a matrix handle."""

    DENSE = "dense"
    SPARSE = "sparse"


class StreamNamespace(int, enum.Enum):
    """Disjoint key spaces of the counter-based Gaussian generator."""

    ESTIMATOR = 0
    MONTE_CARLO = 1
    MATRIX = 2


class PlanMode(str, enum.Enum):
    """Which guarantee a sample plan was computed for."""

    ELEMENTWISE = "elementwise"
    NORMWISE = "normwise"
    MEDIAN = "median"
    MATVEC_ELEMENTWISE = "matvec-elementwise"
    MATVEC_NORMWISE = "matvec-normwise"


class Selector(str, enum.Enum):
    """Which relative error an experiment row reports."""

    FIRST = "first"
    ARGMAX = "argmax"
    ARGMIN = "argmin"
    NORMWISE = "normwise"


class MMFormat(str, enum.Enum):
    """Matrix Market storage layouts."""

    COORDINATE = "coordinate"
    ARRAY = "array"


class MMField(str, enum.Enum):
    """Matrix Market value fields the reader accepts."""

    REAL = "real"
    INTEGER = "integer"
    PATTERN = "pattern"


class MMSymmetry(str, enum.Enum):
    """Matrix Market symmetry qualifiers the reader accepts."""

    GENERAL = "general"
    SYMMETRIC = "symmetric"
    SKEW_SYMMETRIC = "skew-symmetric"


class SourceScheme(str, enum.Enum):
    """Prefixes of a matrix source string."""

    GAUSS = "gauss"
    UNIFORM = "uniform"
    MM = "mm"
