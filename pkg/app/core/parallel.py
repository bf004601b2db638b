"""Deterministic block scheduling for sample evaluation."""

from __future__ import annotations

import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TypeVar

from loguru import logger

from app.core.config import settings

T = TypeVar("T")


def default_worker_count() -> int:
    """Worker threads used when neither the caller nor the config fixes one."""
    return settings.WORKER_COUNT or min(8, os.cpu_count() or 1)


def block_size_for(d: int) -> int:
    """Samples per block; depends only on the dimension."""
    return max(1, settings.SAMPLE_BLOCK_ELEMENTS // max(1, d))


@dataclass(frozen=True)
class Block:
    """Half-open sample-index range [start, start + count)."""

    start: int
    count: int


def split_blocks(start: int, count: int, d: int) -> list[Block]:
    """Cut a sample range into blocks whose boundaries depend only on (start, d)."""
    size = block_size_for(d)
    return [
        Block(offset, min(size, start + count - offset))
        for offset in range(start, start + count, size)
    ]


class BlockExecutor:
    """Evaluates blocks, optionally on a thread pool, returning results in block order."""

    def __init__(self, workers: int | None = None) -> None:
        self.workers = max(1, workers or default_worker_count())

    def map(
        self,
        fn: Callable[[Block], T],
        blocks: Sequence[Block],
        concurrent: bool = True,
    ) -> list[T]:
        """Apply fn to every block; the output order never depends on scheduling."""
        if not concurrent or self.workers == 1 or len(blocks) <= 1:
            return [fn(block) for block in blocks]

        logger.debug(f"Dispatching {len(blocks)} blocks to {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(fn, blocks))
