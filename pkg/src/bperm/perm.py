"""Signed permutations of the hyperoctahedral group B_n.

A signed permutation of order ``n`` is stored in signed one-line notation,
a tuple of nonzero integers whose absolute values are a permutation of
``1..n``.  Descents, inversions and runs compare letters by their natural
integer order, so ``-3 < -1 < 2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence


class PermutationError(ValueError):
    """Raised when a letter sequence is not a signed permutation."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} at index {index}")
        self.index = index


class ZeroLetter(PermutationError):
    pass


class RepeatedAbsoluteValue(PermutationError):
    pass


class OutOfRange(PermutationError):
    pass


class MalformedPrefix(RuntimeError):
    """The part left of the desarrangement factor is not (neg increasing)(pos increasing)."""


class NotPlain(ValueError):
    """A plain permutation was expected but the word has negative letters."""


@dataclass(frozen=True)
class SignedPermutation:
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        _check_letters(self.letters)

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "SignedPermutation":
        obj = object.__new__(cls)
        object.__setattr__(obj, "letters", letters)
        return obj

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        """Parse the comma separated encoding, e.g. ``"3,-2,1"``; ``""`` is e."""
        text = text.strip()
        if not text:
            return cls(())
        letters = []
        for pos, token in enumerate(text.split(","), start=1):
            token = token.strip()
            try:
                letters.append(int(token))
            except ValueError:
                raise ValueError(f"bad token {token!r} at index {pos}") from None
        return cls(tuple(letters))

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.letters)

    def inverse(self) -> "SignedPermutation":
        """Group inverse: if position i holds +-j then position j holds +-i."""
        inv = [0] * len(self.letters)
        for i, x in enumerate(self.letters, start=1):
            inv[abs(x) - 1] = i if x > 0 else -i
        return SignedPermutation._trusted(tuple(inv))


def _check_letters(letters: Sequence[int]) -> None:
    n = len(letters)
    seen = set()
    for i, x in enumerate(letters, start=1):
        if x == 0:
            raise ZeroLetter("zero letter", i)
        if abs(x) > n:
            raise OutOfRange(f"letter {x} outside +-1..{n}", i)
        if abs(x) in seen:
            raise RepeatedAbsoluteValue(f"repeated absolute value {abs(x)}", i)
        seen.add(abs(x))


def validate(letters: Iterable[int]) -> SignedPermutation:
    return SignedPermutation(tuple(letters))


def _as_tuple(w) -> tuple[int, ...]:
    return w.letters if isinstance(w, SignedPermutation) else tuple(w)


# -- classical statistics -----------------------------------------------------

def neg(w) -> int:
    return sum(1 for x in _as_tuple(w) if x < 0)


def inv(w) -> int:
    x = _as_tuple(w)
    n = len(x)
    return sum(1 for i in range(n) for j in range(i + 1, n) if x[i] > x[j])


def descent_set(w) -> frozenset[int]:
    x = _as_tuple(w)
    return frozenset(i for i in range(1, len(x)) if x[i - 1] > x[i])


def des(w) -> int:
    return len(descent_set(w))


def maj(w) -> int:
    return sum(descent_set(w))


def fdes(w) -> int:
    x = _as_tuple(w)
    return 2 * des(x) + (1 if x and x[0] < 0 else 0)


def fmaj(w) -> int:
    return 2 * maj(w) + neg(w)


def length(w) -> int:
    """Coxeter length, computed as inv plus the sum of |x| over negative letters."""
    x = _as_tuple(w)
    return inv(x) + sum(-v for v in x if v < 0)


def fix_sets(w) -> tuple[frozenset[int], frozenset[int]]:
    """Return (Fix+, Fix-); negative fixed points are reported as negative letters."""
    x = _as_tuple(w)
    plus = frozenset(i for i, v in enumerate(x, start=1) if v == i)
    minus = frozenset(v for i, v in enumerate(x, start=1) if v == -i)
    return plus, minus


# -- desarrangements and the pixed factorization ------------------------------

def initial_run_length(word: Sequence[int]) -> int:
    """Length of the maximal strictly decreasing prefix (0 for the empty word)."""
    if not word:
        return 0
    m = 1
    while m < len(word) and word[m - 1] > word[m]:
        m += 1
    return m


def is_desarrangement(word: Sequence[int]) -> bool:
    """True iff the leftmost trough sits at an even position; e counts."""
    return initial_run_length(word) % 2 == 0


def _desarrangement_start(x: Sequence[int]) -> int:
    # run[i] = length of the decreasing run starting at i; smallest i with an
    # even run is the start of the longest desarrangement right factor.
    n = len(x)
    run = 0
    start = n
    for i in range(n - 1, -1, -1):
        run = run + 1 if i < n - 1 and x[i] > x[i + 1] else 1
        if run % 2 == 0:
            start = i
    return start


@dataclass(frozen=True)
class PixedFactorization:
    w_minus: tuple[int, ...]
    w_plus: tuple[int, ...]
    w_d: tuple[int, ...]

    def word(self) -> tuple[int, ...]:
        return self.w_minus + self.w_plus + self.w_d

    def __str__(self) -> str:
        def enc(part):
            return ",".join(map(str, part)) if part else "e"

        return " | ".join(enc(p) for p in (self.w_minus, self.w_plus, self.w_d))


def pixed_factorization(w) -> PixedFactorization:
    x = _as_tuple(w)
    start = _desarrangement_start(x)
    prefix = x[:start]
    k = 0
    while k < len(prefix) and prefix[k] < 0:
        k += 1
    w_minus, w_plus = prefix[:k], prefix[k:]
    if any(v < 0 for v in w_plus) or any(
        part[i] >= part[i + 1] for part in (w_minus, w_plus) for i in range(len(part) - 1)
    ):
        raise MalformedPrefix(f"prefix {prefix} of {x} is not (neg increasing)(pos increasing)")
    return PixedFactorization(w_minus, w_plus, x[start:])


def pix_sets(w) -> tuple[frozenset[int], frozenset[int]]:
    """Return (Pix+, Pix-) as sets of letters."""
    f = pixed_factorization(w)
    return frozenset(f.w_plus), frozenset(f.w_minus)


# -- full profile ---------------------------------------------------------------

@dataclass(frozen=True)
class StatProfile:
    neg: int
    neg_set: frozenset[int]
    fix_plus: int
    fix_minus: int
    fix_plus_set: frozenset[int]
    fix_minus_set: frozenset[int]
    inv: int
    length: int
    des: int
    maj: int
    fdes: int
    fmaj: int
    pix_plus: int
    pix_minus: int
    pix_plus_set: frozenset[int]
    pix_minus_set: frozenset[int]

    def as_dict(self) -> dict:
        out = {}
        for key, value in self.__dict__.items():
            out[key] = sorted(value) if isinstance(value, frozenset) else value
        return out


def stat_profile(w) -> StatProfile:
    x = _as_tuple(w)
    fplus, fminus = fix_sets(x)
    pplus, pminus = pix_sets(x)
    negs = frozenset(v for v in x if v < 0)
    d = des(x)
    m = maj(x)
    i = inv(x)
    return StatProfile(
        neg=len(negs),
        neg_set=negs,
        fix_plus=len(fplus),
        fix_minus=len(fminus),
        fix_plus_set=fplus,
        fix_minus_set=fminus,
        inv=i,
        length=i + sum(-v for v in negs),
        des=d,
        maj=m,
        fdes=2 * d + (1 if x and x[0] < 0 else 0),
        fmaj=2 * m + len(negs),
        pix_plus=len(pplus),
        pix_minus=len(pminus),
        pix_plus_set=pplus,
        pix_minus_set=pminus,
    )


# -- enumeration ------------------------------------------------------------------

class SubsetClass(str, enum.Enum):
    B = "B"
    D = "D"
    K = "K"
    DB = "DB"
    KB = "KB"


def in_class(x: Sequence[int], cls: SubsetClass) -> bool:
    cls = SubsetClass(cls)
    if cls is SubsetClass.B:
        return True
    if cls in (SubsetClass.D, SubsetClass.K) and any(v < 0 for v in x):
        return False
    if cls in (SubsetClass.D, SubsetClass.DB):
        return all(v != i for i, v in enumerate(x, start=1))
    # Pix+ empty: nothing between the negative prefix and the desarrangement
    return not pixed_factorization(x).w_plus


def _lex_signed_words(n: int) -> Iterator[tuple[int, ...]]:
    alphabet = [v for v in range(-n, n + 1) if v]
    used = [False] * (n + 1)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for v in alphabet:
            a = abs(v)
            if not used[a]:
                used[a] = True
                word.append(v)
                yield from rec()
                word.pop()
                used[a] = False

    return rec()


def signed_words(n: int) -> Iterator[tuple[int, ...]]:
    """All of B_n as raw tuples, in no particular order (fast path)."""
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, p))


def enumerate_class(n: int, cls: SubsetClass | str = SubsetClass.B) -> Iterator[SignedPermutation]:
    """Members of B_n, D_n, K_n, D_n^B or K_n^B in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    cls = SubsetClass(cls)
    if cls in (SubsetClass.D, SubsetClass.K):
        source = permutations(range(1, n + 1))
    else:
        source = _lex_signed_words(n)
    for x in source:
        if in_class(x, cls):
            yield SignedPermutation._trusted(tuple(x))


# -- plain permutations -------------------------------------------------------------

@dataclass(frozen=True)
class LigneStats:
    ligne: frozenset[int]
    iligne: frozenset[int]
    maj: int
    imaj: int


def ligne_stats(sigma) -> LigneStats:
    x = _as_tuple(sigma)
    if any(v < 0 for v in x):
        raise NotPlain(f"{x} has negative letters")
    pos = {v: i for i, v in enumerate(x, start=1)}
    ligne = descent_set(x)
    # i is an inverse descent iff i+1 stands to the left of i
    iligne = frozenset(i for i in range(1, len(x)) if pos[i + 1] < pos[i])
    return LigneStats(ligne, iligne, sum(ligne), sum(iligne))


def bar(w) -> SignedPermutation:
    return SignedPermutation._trusted(tuple(-v for v in _as_tuple(w)))
