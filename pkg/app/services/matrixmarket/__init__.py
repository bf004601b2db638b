"""Matrix Market I/O and synthetic matrix sources."""

from app.services.matrixmarket.generators import (
    gen_gaussian,
    gen_uniform01,
    load_source,
    parse_source,
)
from app.services.matrixmarket.models import MatrixMarketHeader, MatrixSource
from app.services.matrixmarket.reader import (
    parse_header,
    read_matrix_market,
    read_matrix_market_path,
)
from app.services.matrixmarket.writer import (
    write_matrix_market,
    write_matrix_market_path,
)

__all__ = [
    "MatrixMarketHeader",
    "MatrixSource",
    "gen_gaussian",
    "gen_uniform01",
    "load_source",
    "parse_header",
    "parse_source",
    "read_matrix_market",
    "read_matrix_market_path",
    "write_matrix_market",
    "write_matrix_market_path",
]
