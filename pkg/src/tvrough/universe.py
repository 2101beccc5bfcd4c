"""Finite universes and their subsets (bitmask backed)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import CapExceeded, UniverseMismatch

MAX_ENUMERATION_SIZE = 16


@dataclass(frozen=True)
class Universe:
    """An ordered, duplicate-free, non-empty list of element names.

    Element ``i`` of the universe owns bit ``1 << i`` in every subset mask.
    """

    elements: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("a universe needs at least one element")
        for e in elements:
            if not isinstance(e, str) or not e:
                raise ValueError(f"element names must be non-empty strings, got {e!r}")
        if len(set(elements)) != len(elements):
            raise ValueError(f"duplicate element names in {list(elements)}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(elements)})

    @classmethod
    def of(cls, *names: str) -> "Universe":
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        return cls(tuple(names))

    @classmethod
    def canonical(cls, n: int) -> "Universe":
        """Universe x1..xn, as used by the sweeps."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not an element of the universe {list(self.elements)}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def bit(self, name: str) -> int:
        return 1 << self.index(name)

    def subset(self, names: Iterable[str] = ()) -> "SubsetU":
        mask = 0
        for name in names:
            mask |= self.bit(name)
        return SubsetU(self, mask)

    def empty(self) -> "SubsetU":
        return SubsetU(self, 0)

    def full(self) -> "SubsetU":
        return SubsetU(self, self.full_mask)

    def check_enumerable(self, cap: int = MAX_ENUMERATION_SIZE) -> None:
        if len(self) > cap:
            raise CapExceeded(f"|U| = {len(self)} exceeds the enumeration cap of {cap}")

    def masks(self) -> range:
        """All subset masks in increasing order."""
        self.check_enumerable()
        return range(1 << len(self.elements))

    def subsets(self) -> Iterator["SubsetU"]:
        for m in self.masks():
            yield SubsetU(self, m)


@dataclass(frozen=True)
class SubsetU:
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise ValueError(f"mask {self.mask} out of range for a universe of size {len(self.universe)}")

    def _other(self, other: "SubsetU") -> int:
        if not isinstance(other, SubsetU):
            raise TypeError(f"expected a SubsetU, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatch("subsets belong to different universes")
        return other.mask

    def __contains__(self, name: str) -> bool:
        return bool(self.mask & self.universe.bit(name))

    def __iter__(self) -> Iterator[str]:
        for i, e in enumerate(self.universe.elements):
            if self.mask >> i & 1:
                yield e

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __and__(self, other: "SubsetU") -> "SubsetU":
        return SubsetU(self.universe, self.mask & self._other(other))

    def __or__(self, other: "SubsetU") -> "SubsetU":
        return SubsetU(self.universe, self.mask | self._other(other))

    def __sub__(self, other: "SubsetU") -> "SubsetU":
        return SubsetU(self.universe, self.mask & ~self._other(other))

    def __le__(self, other: "SubsetU") -> bool:
        return self.mask & ~self._other(other) == 0

    def __ge__(self, other: "SubsetU") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "SubsetU") -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: "SubsetU") -> bool:
        return other.__lt__(self)

    def complement(self) -> "SubsetU":
        return SubsetU(self.universe, self.universe.full_mask & ~self.mask)

    @property
    def names(self) -> list[str]:
        return list(self)

    def __str__(self) -> str:
        return "{" + ",".join(self) + "}"

    def __repr__(self) -> str:
        return f"SubsetU({self})"
