import os
from collections.abc import Callable
from enum import Enum, StrEnum
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


class FieldKind(StrEnum):
    RATIONALS = "Q"
    PRIME = "Fp"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class CoefficientKind(StrEnum):
    SELF = "self"
    DUAL = "dual"
    FILE = "file"


class SplitCoefficient(StrEnum):
    """Coefficient bimodules attached to a split algebra"""

    IDEAL = "ideal"
    QUOTIENT = "quotient"
    TOTAL = "total"


class TheoremId(StrEnum):
    VERTICAL_INDEPENDENCE = "prop-2.1"
    FIRST_COLUMN = "thm-2.2"
    COLUMN_EXT = "thm-2.4"
    TOR_COMPLEX = "prop-2.5"
    TOR_COMPLEX_FOUR = "prop-2.7"
    HORIZONTAL_ZERO = "thm-3.1"
    EXT_SUM = "cor-3.2"
    DELTA_ZERO_KERNEL = "prop-3.3"
    BIDEGREE = "prop-3.6"
    CUP_FORMULA = "thm-4.1"
    BILINEAR_DELTA = "prop-5.4"
    H1_TRIVIAL_EXTENSION = "thm-5.3"
    NONVANISHING_H1 = "cor-5.3"
    DIRECT_SUMMAND = "thm-5.6"
    NULLHOMOTOPY = "prop-5.7"
    ONE_WAY = "thm-5.9"
    KUNNETH = "sec5-kunneth"
    NONZERO_DELTA = "sec5-nonzero-delta"
    TRIANGULAR_LES = "sec6-les"
    TRIANGULAR_DELTA_CUP = "sec6-delta-cup"


class LinalgConfig(Enum):
    SPARSE_DENSITY_THRESHOLD = 0.05


class DegreeCapConfig(Enum):
    # (max algebra dim, max degree)
    TOTAL_CAPS = ((4, 4), (6, 3))
    TOTAL_CAP_LARGE = 2
    # (max base dim, (p cap, q cap))
    COLUMN_CAPS = ((3, (2, 2)),)
    COLUMN_CAP_LARGE = (1, 1)
    # chains in the top degree a bar-type complex may build
    BAR_CHAINS_MAX = 25_000
    EXT_DEFAULT_QMAX = 3
    HOMOLOGY_DEFAULT = 3


class CorpusConfig(Enum):
    DEFAULT_DIR = Path(__file__).parent / "corpus"
    ALLOWED_EXTENSIONS = {"json"}
    MAX_FILE_SIZE = 1_000_000


class RunDefaults(Enum):
    SEED = 0
    MAX_DEGREE = 3


class ExitCode(Enum):
    OK = 0
    VERIFICATION_FAILED = 1
    INPUT_ERROR = 2


def degree_cap(dim: int) -> int:
    for bound, cap in DegreeCapConfig.TOTAL_CAPS.value:
        if dim <= bound:
            return cap
    return DegreeCapConfig.TOTAL_CAP_LARGE.value


def column_cap(base_dim: int) -> tuple[int, int]:
    for bound, caps in DegreeCapConfig.COLUMN_CAPS.value:
        if base_dim <= bound:
            return caps
    return DegreeCapConfig.COLUMN_CAP_LARGE.value


CORPUS_DIR = Path(os.getenv("HH_CORPUS_DIR", str(CorpusConfig.DEFAULT_DIR.value)))
DEFAULT_SEED = int(os.getenv("HH_SEED", str(RunDefaults.SEED.value)))


def bar_degree(chain_dim: Callable[[int], int], requested: int) -> int:
    """The largest degree up to `requested` whose next chain group fits under the size cap."""
    n = requested
    while n > 0 and chain_dim(n + 1) > DegreeCapConfig.BAR_CHAINS_MAX.value:
        n -= 1
    return n
