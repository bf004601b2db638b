"""Counter-based standard-normal streams.

The j-th vector of a stream is a pure function of (seed, namespace, j, d): each
sample owns ceil(d/4) Philox counter values, so any sample range can be drawn
independently of every other range and of the order ranges are drawn in.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special

from app.constants import messages
from app.core.enums import StreamNamespace
from app.core.exceptions import InvalidArgumentError

_UINT64_LIMIT = 2**64
_MANTISSA_SHIFT = np.uint64(11)
_MANTISSA_SCALE = 2.0**-53


@dataclass(frozen=True)
class GaussianStream:
    """Deterministic source of i.i.d. N(0, I_d) vectors."""

    seed: int
    namespace: StreamNamespace = StreamNamespace.ESTIMATOR

    def __post_init__(self) -> None:
        if not 0 <= self.seed < _UINT64_LIMIT:
            raise InvalidArgumentError(messages.INVALID_SEED.format(value=self.seed))

    @property
    def key(self) -> int:
        """128-bit Philox key: low word is the seed, high word the namespace."""
        return self.seed + (int(self.namespace) << 64)

    def raw_block(self, start: int, count: int, d: int) -> np.ndarray:
        """Raw 64-bit words for samples start..start+count-1, shape (count, d)."""
        if d < 1:
            raise InvalidArgumentError(messages.EMPTY_MATRIX)
        if start < 0 or count < 0:
            raise InvalidArgumentError(
                messages.INVALID_SAMPLE_RANGE.format(start=start, count=count)
            )
        words = -(-d // 4)
        bitgen = np.random.Philox(key=self.key, counter=start * words)
        raw = bitgen.random_raw(count * words * 4).reshape(count, words * 4)
        return raw[:, :d]

    def uniform_block(self, start: int, count: int, d: int) -> np.ndarray:
        """Uniforms on the open interval (0, 1), shape (count, d)."""
        raw = self.raw_block(start, count, d)
        return ((raw >> _MANTISSA_SHIFT).astype(np.float64) + 0.5) * _MANTISSA_SCALE

    def block(self, start: int, count: int, d: int) -> np.ndarray:
        """Standard normals by inverse CDF, shape (count, d)."""
        return special.ndtri(self.uniform_block(start, count, d))


def sample_gaussian(stream: GaussianStream, j: int, d: int) -> np.ndarray:
    """Return the j-th d-dimensional standard normal vector of the stream."""
    return stream.block(j, 1, d)[0]
