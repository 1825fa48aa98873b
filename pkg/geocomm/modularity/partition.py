# -*- coding: utf-8 -*-
from dataclasses import dataclass
from functools import cached_property

from numpy import (
    arange, argsort, array, array_equal, asarray, bincount, cumsum, int64, split,
    unique, zeros
)

from geocomm._typing import AnyArray1d, Dict, IntArray
from geocomm.errors import InputError

__all__ = ["Partition"]



@dataclass(frozen=True, eq=False)
class Partition:
    """Assignment of every node to exactly one community.

    Community ids are dense, ```0..community_count - 1```. Build with
    ```Partition.from_labels``` to compact arbitrary labels.
    """
    labels: IntArray

    def __post_init__(self):
        labels = array(self.labels, dtype=int64, copy=True)
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_labels(cls, labels: AnyArray1d) -> "Partition":
        raw = asarray(labels).ravel()
        if raw.size == 0:
            return cls(zeros(0, dtype=int64))
        _, dense = unique(raw, return_inverse=True)
        return cls(dense.astype(int64).ravel())

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(arange(n, dtype=int64))

    @classmethod
    def single(cls, n: int) -> "Partition":
        return cls(zeros(n, dtype=int64))

    @property
    def n(self) -> int:
        return int(self.labels.size)

    @property
    def community_count(self) -> int:
        return int(self.labels.max()) + 1 if self.labels.size else 0

    @cached_property
    def sizes(self) -> IntArray:
        return bincount(self.labels, minlength=self.community_count)

    @cached_property
    def communities(self) -> Dict[int, IntArray]:
        """Community id to its ascending member indices."""
        order = argsort(self.labels, kind="stable")
        chunks = split(order, cumsum(self.sizes)[:-1])
        return {c: chunk for c, chunk in enumerate(chunks)}

    def members(self, c: int) -> IntArray:
        if not 0 <= c < self.community_count:
            raise InputError(f"no community {c} (have {self.community_count})")
        return self.communities[c]

    def check(self, n: int) -> "Partition":
        """Returns self if it covers exactly ```n``` nodes."""
        if self.n != n:
            raise InputError(f"partition has {self.n} labels for {n} nodes")
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return array_equal(self.labels, other.labels)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, communities={self.community_count})"
