"""Weighted signed permutations and the bijections built on them.

A weighted signed permutation is a pair ``(c, w)`` of equal length with
``c`` nonincreasing, equal weights forcing an ascent of ``w`` and the parity
of each weight matching the sign of the letter below it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .perm import SignedPermutation, fix_sets, neg
from .words import IntWord, niw


class WspViolation(ValueError):
    def __init__(self, condition: int, index: int, detail: str = ""):
        msg = f"wsp{condition} violated at index {index}"
        super().__init__(f"{msg}: {detail}" if detail else msg)
        self.condition = condition
        self.index = index


class InsertionConflict(ValueError):
    pass


class NegativeBLetter(ValueError):
    pass


@dataclass(frozen=True)
class WeightedSignedPermutation:
    c: IntWord
    w: SignedPermutation

    @property
    def n(self) -> int:
        return len(self.c)

    def is_derangement(self) -> bool:
        return all(abs(x) != i for i, x in enumerate(self.w, start=1))

    def __str__(self) -> str:
        return f"c={self.c};w={self.w}"

    @classmethod
    def parse(cls, text: str) -> "WeightedSignedPermutation":
        fields = parse_record(text)
        return validate_wsp(IntWord.parse(fields["c"]), SignedPermutation.parse(fields["w"]))


def parse_record(text: str) -> dict[str, str]:
    """Split ``"c=1,0;w=-1,2"`` into ``{"c": "1,0", "w": "-1,2"}``."""
    out = {}
    for part in text.split(";"):
        if not part.strip():
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"field {part!r} lacks '='")
        out[key.strip()] = value.strip()
    return out


def validate_wsp(c, w) -> WeightedSignedPermutation:
    c = c if isinstance(c, IntWord) else IntWord(tuple(c))
    w = w if isinstance(w, SignedPermutation) else SignedPermutation(tuple(w))
    if len(c) != len(w):
        raise ValueError(f"lengths differ: {len(c)} != {len(w)}")
    for k in range(1, len(c)):
        if c[k - 1] < c[k]:
            raise WspViolation(1, k + 1, "weights must be nonincreasing")
    for k, (ck, xk) in enumerate(zip(c, w), start=1):
        if (ck % 2 == 0) != (xk > 0):
            raise WspViolation(4, k, f"weight {ck} over letter {xk}")
    for k in range(1, len(c)):
        if c[k - 1] == c[k] and not w[k - 1] < w[k]:
            raise WspViolation(3, k, "equal weights over a descent")
    return WeightedSignedPermutation(c, w)


def _pair(c: Sequence[int], x: Sequence[int]) -> WeightedSignedPermutation:
    return WeightedSignedPermutation(IntWord(tuple(c)), SignedPermutation._trusted(tuple(x)))


# -- decomposition into a derangement core and fixed-point words --------------

@dataclass(frozen=True)
class WspDecomposition:
    core: WeightedSignedPermutation
    v_e: IntWord
    v_o: IntWord

    @property
    def i(self) -> int:
        return self.core.n

    @property
    def j(self) -> int:
        return len(self.v_e)

    @property
    def k(self) -> int:
        return len(self.v_o)

    def __str__(self) -> str:
        return f"c={self.core.c};w={self.core.w};ve={self.v_e};vo={self.v_o}"


def wsp_decompose(p: WeightedSignedPermutation) -> WspDecomposition:
    x = p.w.letters
    c = p.c.letters
    fixed_plus = [k for k, v in enumerate(x) if v == k + 1]
    fixed_minus = [k for k, v in enumerate(x) if v == -(k + 1)]
    v_e = IntWord(tuple(c[k] for k in fixed_plus))
    v_o = IntWord(tuple(c[k] for k in fixed_minus))
    drop = set(fixed_plus) | set(fixed_minus)
    keep = [k for k in range(len(x)) if k not in drop]
    rank = {a: r for r, a in enumerate(sorted(abs(x[k]) for k in keep), start=1)}
    core_c = tuple(c[k] for k in keep)
    core_x = tuple(rank[x[k]] if x[k] > 0 else -rank[-x[k]] for k in keep)
    return WspDecomposition(_pair(core_c, core_x), v_e, v_o)


def _fixed_count(x: Sequence[int]) -> int:
    return sum(1 for pos, v in enumerate(x, start=1) if abs(v) == pos)


def _insert_block(c: tuple, x: tuple, b: int, h: int) -> tuple[tuple, tuple]:
    m = len(c)
    left = sum(1 for v in c if v > b)
    r = sum(1 for v in c if v == b)
    sign = 1 if b % 2 == 0 else -1
    found = []
    for chosen in combinations(range(left + 1, left + r + h + 1), h):
        P = set(chosen)
        g = [p for p in range(1, m + h + 1) if p not in P]
        relabeled = [g[abs(v) - 1] * (1 if v > 0 else -1) for v in x]
        block_old = iter(relabeled[left:left + r])
        new_x = relabeled[:left]
        for pos in range(left + 1, left + r + h + 1):
            new_x.append(sign * pos if pos in P else next(block_old))
        new_x.extend(relabeled[left + r:])
        block = new_x[left:left + r + h]
        if any(block[t] >= block[t + 1] for t in range(len(block) - 1)):
            continue
        # relabeled old letters must not gain or lose fixedness
        if _fixed_count(new_x) != _fixed_count(x) + h:
            continue
        found.append(tuple(new_x))
    if len(found) != 1:
        raise InsertionConflict(f"{len(found)} placements for weight {b} (x{h}) into {c}/{x}")
    new_c = c[:left] + (b,) * (r + h) + c[left + r:]
    return new_c, found[0]


def wsp_insertion_steps(d: WspDecomposition) -> Iterator[tuple[int, int, WeightedSignedPermutation]]:
    """Insert the fixed-point columns one weight at a time, largest weight first.

    Yields ``(weight, multiplicity, pair_after_insertion)`` for every distinct
    weight of ``v_e v_o``.
    """
    if any(v % 2 for v in d.v_e) or any(v % 2 == 0 for v in d.v_o):
        raise InsertionConflict("v_e must be even and v_o odd")
    if len(set(d.v_o)) != len(d.v_o):
        raise InsertionConflict("v_o must have distinct letters")
    if not d.core.is_derangement():
        raise InsertionConflict("core has a fixed point")
    counts: dict[int, int] = {}
    for v in tuple(d.v_e) + tuple(d.v_o):
        counts[v] = counts.get(v, 0) + 1
    c, x = d.core.c.letters, d.core.w.letters
    for b in sorted(counts, reverse=True):
        c, x = _insert_block(c, x, b, counts[b])
        yield b, counts[b], _pair(c, x)


def wsp_recompose(d: WspDecomposition) -> WeightedSignedPermutation:
    result = d.core
    for _, _, result in wsp_insertion_steps(d):
        pass
    return result


# -- MacMahon Verfahren ---------------------------------------------------------

def macmahon_to_word(p: WeightedSignedPermutation) -> IntWord:
    d = [0] * p.n
    for ck, xk in zip(p.c, p.w):
        d[abs(xk) - 1] = ck
    return IntWord(tuple(d))


def macmahon_from_word(d: IntWord | Sequence[int], s: int | None = None) -> WeightedSignedPermutation:
    d = tuple(d)
    if s is not None and any(v > s for v in d):
        raise ValueError(f"letter above bound {s} in {d}")
    columns = []
    for pos, v in enumerate(d, start=1):
        letter = pos if v % 2 == 0 else -pos
        columns.append((-v, letter))
    columns.sort()  # weight descending, then letter ascending inside a block
    return _pair(tuple(-a for a, _ in columns), tuple(b for _, b in columns))


# -- pairing with nonincreasing words ---------------------------------------------

def _suffix_descents(x: Sequence[int]) -> list[int]:
    n = len(x)
    z = [0] * n
    for k in range(n - 2, -1, -1):
        z[k] = z[k + 1] + (1 if x[k] > x[k + 1] else 0)
    return z


def fdes_pairing(p: WeightedSignedPermutation, s: int | None = None) -> tuple[IntWord, SignedPermutation]:
    """Map (c, w) to (b, w) with 2 b_1 + fdes w = c_1 and 2 tot b + fmaj w = tot c."""
    x = p.w.letters
    z = _suffix_descents(x)
    b = []
    for ck, xk, zk in zip(p.c, x, z):
        eps = 1 if xk < 0 else 0
        bk = (ck - eps) // 2 - zk
        if bk < 0:
            raise NegativeBLetter(f"b would be negative for {p}")
        b.append(bk)
    if s is not None and p.c.letters and p.c[0] > s:
        raise ValueError(f"c_1 = {p.c[0]} exceeds bound {s}")
    return IntWord(tuple(b)), p.w


def fdes_pairing_inverse(b: IntWord | Sequence[int], w) -> WeightedSignedPermutation:
    b = tuple(b)
    x = w.letters if isinstance(w, SignedPermutation) else tuple(w)
    if any(b[k] < b[k + 1] for k in range(len(b) - 1)):
        raise ValueError(f"b = {b} is not nonincreasing")
    z = _suffix_descents(x)
    c = tuple(2 * (bk + zk) + (1 if xk < 0 else 0) for bk, zk, xk in zip(b, z, x))
    return validate_wsp(c, x)


# -- enumeration ----------------------------------------------------------------------

def _fill_blocks(runs: list[tuple[int, int]], remaining: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not runs:
        yield ()
        return
    (weight, size), rest = runs[0], runs[1:]
    sign = 1 if weight % 2 == 0 else -1
    for chosen in combinations(remaining, size):
        block = tuple(sorted(sign * a for a in chosen))
        left = tuple(a for a in remaining if a not in chosen)
        for tail in _fill_blocks(rest, left):
            yield block + tail


def enumerate_wsp(n: int, s: int, derangements_only: bool = False) -> Iterator[WeightedSignedPermutation]:
    """All of WSP_n(s) (or WSD_n(s)), built block by block from each c in NIW_n(s)."""
    if s == math.inf:
        raise ValueError("s must be finite")
    if n < 0 or s < 0:
        raise ValueError("n and s must be nonnegative")
    for c in niw(n, s):
        runs: list[tuple[int, int]] = []
        for v in c:
            if runs and runs[-1][0] == v:
                runs[-1] = (v, runs[-1][1] + 1)
            else:
                runs.append((v, 1))
        for x in _fill_blocks(runs, tuple(range(1, n + 1))):
            if derangements_only and any(abs(v) == i for i, v in enumerate(x, start=1)):
                continue
            yield WeightedSignedPermutation(c, SignedPermutation._trusted(x))


def decomposition_equalities(p: WeightedSignedPermutation, d: WspDecomposition) -> dict[str, bool]:
    """The four bookkeeping identities linking a pair and its decomposition."""
    fplus, fminus = fix_sets(p.w)
    return {
        "tot": p.c.tot == d.core.c.tot + d.v_e.tot + d.v_o.tot,
        "neg": neg(p.w) == neg(d.core.w) + len(d.v_o),
        "fix_plus": len(fplus) == len(d.v_e),
        "fix_minus": len(fminus) == len(d.v_o),
    }
