"""Words of nonnegative integers and the families NIW, NIW^e, DW^o."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Iterator


class UnboundedFamily(ValueError):
    pass


@dataclass(frozen=True)
class IntWord:
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(v) for v in self.letters)
        if any(v < 0 for v in letters):
            raise ValueError(f"negative letter in {letters}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "IntWord":
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(tok) for tok in text.split(",")))

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def tot(self) -> int:
        return sum(self.letters)

    @property
    def odd(self) -> int:
        return sum(v & 1 for v in self.letters)

    def is_nonincreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.letters, self.letters[1:]))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


class FamilyTag(str, enum.Enum):
    NIW = "NIW"
    NIW_E = "NIW_E"
    DW_O = "DW_O"


@dataclass(frozen=True)
class WordFamily:
    tag: FamilyTag
    n: int
    s: float | int = math.inf

    def __post_init__(self):
        object.__setattr__(self, "tag", FamilyTag(self.tag))
        if self.n < 0 or self.s < 0:
            raise ValueError("n and s must be nonnegative")
        if self.s == math.inf and self.tag is not FamilyTag.NIW:
            raise ValueError(f"{self.tag.value} needs a finite bound")


def _nonincreasing(n: int, top: int, letters: list[int]) -> Iterator[tuple[int, ...]]:
    # letters ascending; first letter ranges over letters <= top
    if n == 0:
        yield ()
        return
    for i, a in enumerate(letters):
        if a > top:
            break
        for rest in _nonincreasing(n - 1, a, letters[: i + 1]):
            yield (a,) + rest


def _decreasing(n: int, letters: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for i, a in enumerate(letters):
        for rest in _decreasing(n - 1, letters[:i]):
            yield (a,) + rest


def enumerate_words(family: WordFamily) -> Iterator[IntWord]:
    """Each word of the family once, in lexicographic order."""
    if family.s == math.inf:
        raise UnboundedFamily(f"{family.tag.value}_{family.n}(inf) is infinite")
    s = int(family.s)
    if family.tag is FamilyTag.NIW:
        gen = _nonincreasing(family.n, s, list(range(s + 1)))
    elif family.tag is FamilyTag.NIW_E:
        gen = _nonincreasing(family.n, s, list(range(0, s + 1, 2)))
    else:
        gen = _decreasing(family.n, list(range(1, s + 1, 2)))
    for letters in gen:
        yield IntWord(letters)


def niw(n: int, s: int) -> Iterator[IntWord]:
    return enumerate_words(WordFamily(FamilyTag.NIW, n, s))


def tot_subset(a: Iterable[int]) -> int:
    return sum(a)


def inv_crossing(b: Iterable[int], c: Iterable[int]) -> int:
    """Number of pairs (i, j) with i in b, j in c and i > j."""
    c = list(c)
    return sum(1 for i in b for j in c if i > j)
