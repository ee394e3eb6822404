"""Generating polynomials obtained by enumeration, and closed forms.

One pass over B_n (or S_n) tallies every statistic bundle at once; results
are cached per n.  Exponent vectors follow the variable order of
``qalgebra.VARS``: (t, q, Y0, Y1, Z).
"""

from __future__ import annotations

import math
import os
from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from ..perm import signed_words
from ..qalgebra import ONE, ZERO, LaurentPoly, Z, gauss_multinomial, q, q_integer, Y0, Y1

DEFAULT_CAP = 7


class CapExceeded(ValueError):
    pass


def nmax_cap() -> int:
    return int(os.environ.get("BPERM_NMAX_CAP", DEFAULT_CAP))


def _check_cap(n: int, size: int) -> None:
    cap = nmax_cap()
    # the cap bounds the amount of enumeration, so S_n may go further than B_n
    if size > 2 ** cap * factorial(cap):
        raise CapExceeded(f"n={n} exceeds the enumeration cap (BPERM_NMAX_CAP={cap})")


B_BUNDLES = ("FIX", "PIX", "PIX_L", "FLAG")
S_BUNDLES = ("A", "A_TQ", "INV_A", "IMAJ_A", "D", "K", "K_IMAJ")


def _initial_run_parity_start(x: tuple) -> int:
    n = len(x)
    run = 0
    start = n
    for i in range(n - 1, -1, -1):
        run = run + 1 if i < n - 1 and x[i] > x[i + 1] else 1
        if run % 2 == 0:
            start = i
    return start


def _pix_counts(x: tuple) -> tuple[int, int]:
    start = _initial_run_parity_start(x)
    minus = 0
    for v in x[:start]:
        if v < 0:
            minus += 1
    return start - minus, minus


@lru_cache(maxsize=None)
def _b_counts(n: int) -> dict[str, Counter]:
    out = {name: Counter() for name in B_BUNDLES}
    fix_c, pix_c, pixl_c, flag_c = (out[k] for k in B_BUNDLES)
    rng = range(n)
    for x in signed_words(n):
        fp = fm = ng = negsum = 0
        for i in rng:
            v = x[i]
            if v < 0:
                ng += 1
                negsum -= v
                if v == -i - 1:
                    fm += 1
            elif v == i + 1:
                fp += 1
        d = m = inv = 0
        for i in range(n - 1):
            if x[i] > x[i + 1]:
                d += 1
                m += i + 1
        for i in rng:
            xi = x[i]
            for j in range(i + 1, n):
                if xi > x[j]:
                    inv += 1
        pp, pm = _pix_counts(x)
        first_neg = 1 if n and x[0] < 0 else 0
        fix_c[(0, 0, fp, fm, ng)] += 1
        pix_c[(0, 0, pp, pm, ng)] += 1
        pixl_c[(0, inv + negsum, pp, pm, ng)] += 1
        flag_c[(2 * d + first_neg, 2 * m + ng, fp, fm, ng)] += 1
    return out


@lru_cache(maxsize=None)
def _s_counts(n: int) -> dict[str, Counter]:
    out = {name: Counter() for name in S_BUNDLES}
    a_c, atq_c, inva_c, imaja_c, d_c, k_c, kimaj_c = (out[k] for k in S_BUNDLES)
    for x in permutations(range(1, n + 1)):
        fix = sum(1 for i in range(n) if x[i] == i + 1)
        d = m = 0
        for i in range(n - 1):
            if x[i] > x[i + 1]:
                d += 1
                m += i + 1
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if x[i] > x[j])
        pos = [0] * (n + 2)
        for i, v in enumerate(x):
            pos[v] = i
        imaj = sum(i for i in range(1, n) if pos[i + 1] < pos[i])
        pix = _initial_run_parity_start(x)
        a_c[(0, m, fix, 0, 0)] += 1
        atq_c[(d, m, fix, 0, 0)] += 1
        inva_c[(0, inv, pix, 0, 0)] += 1
        imaja_c[(0, imaj, pix, 0, 0)] += 1
        if fix == 0:
            d_c[(0, m, 0, 0, 0)] += 1
        if pix == 0:
            k_c[(0, inv, 0, 0, 0)] += 1
            kimaj_c[(0, imaj, 0, 0, 0)] += 1
    return out


FAMILIES = {
    # B_n bundles
    "FIX": "sum over B_n of Y0^fix+ Y1^fix- Z^neg",
    "PIX": "sum over B_n of Y0^pix+ Y1^pix- Z^neg",
    "PIX_L": "sum over B_n of q^length Y0^pix+ Y1^pix- Z^neg",
    "FLAG": "sum over B_n of t^fdes q^fmaj Y0^fix+ Y1^fix- Z^neg",
    "FMAJ": "FLAG at t=1",
    "DnB_Y": "sum over signed derangements of t^fdes q^fmaj Y1^fix- Z^neg",
    "DnB": "sum over signed derangements of q^fmaj Z^neg",
    "KnB": "sum over signed desarrangements of q^length Y1^pix- Z^neg",
    "Bn": "FLAG at t=1",
    # S_n bundles
    "A": "sum over S_n of q^maj Y0^fix",
    "A_TQ": "sum over S_n of t^des q^maj Y0^fix",
    "INV_A": "sum over S_n of q^inv Y0^pix",
    "IMAJ_A": "sum over S_n of q^imaj Y0^pix",
    "D": "sum over derangements of q^maj",
    "K": "sum over desarrangements of q^inv",
    "K_IMAJ": "sum over desarrangements of q^imaj",
}


def _drop(counter: Counter, *, t=False, y0_zero=False, y1=False) -> Counter:
    out = Counter()
    for e, c in counter.items():
        if y0_zero and e[2]:
            continue
        e2 = list(e)
        if t:
            e2[0] = 0
        if y1:
            e2[3] = 0
        out[tuple(e2)] += c
    return out


def enum_counts(n: int, family: str) -> Counter:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family in S_BUNDLES:
        _check_cap(n, factorial(n))
        return _s_counts(n)[family]
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    _check_cap(n, 2 ** n * factorial(n))
    if family in B_BUNDLES:
        return _b_counts(n)[family]
    if family in ("FMAJ", "Bn"):
        return _drop(_b_counts(n)["FLAG"], t=True)
    if family == "DnB_Y":
        return _drop(_b_counts(n)["FLAG"], y0_zero=True)
    if family == "DnB":
        return _drop(_b_counts(n)["FLAG"], t=True, y0_zero=True, y1=True)
    if family == "KnB":
        return _drop(_b_counts(n)["PIX_L"], y0_zero=True)
    raise KeyError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")


def enum_polynomial(n: int, family: str) -> LaurentPoly:
    """Generating polynomial of ``family`` at order n, by exhaustive enumeration."""
    return LaurentPoly(enum_counts(n, family))


# -- closed forms ------------------------------------------------------------------

def derangement_numbers(n_max: int) -> list[int]:
    """d_0..d_{n_max} from d_n = n d_{n-1} + (-1)^n."""
    out = [1]
    for n in range(1, n_max + 1):
        out.append(n * out[-1] + (-1) ** n)
    return out


def derangement_alternating_sum(n: int) -> int:
    """n! sum_k (-1)^k / k!, the coefficient form of (1-u)^{-1} e^{-u}."""
    return sum((-1) ** k * (factorial(n) // factorial(k)) for k in range(n + 1))


def derangement_positive_sum(n: int) -> int:
    """d_n as a sum of positive terms indexed by the position 2k of the first trough."""
    total = 1 if n % 2 == 0 else 0
    for k in range(1, (n - 1) // 2 + 1):
        total += 2 * k * math.prod(range(2 * k + 2, n + 1))
    return total


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for a in range(n + 1):
        for rest in _compositions(n - a, parts - 1):
            yield (a,) + rest


def fix_closed_form(n: int) -> LaurentPoly:
    """Four-index multinomial sum over (i, j, k, l) with derangement numbers."""
    d = derangement_numbers(n)
    total = ZERO
    for i, j, k, l in _compositions(n, 4):
        if not d[k + l]:
            continue
        coeff = factorial(n) // (factorial(i) * factorial(j) * factorial(k) * factorial(l))
        total = total + LaurentPoly.monomial(coeff * d[k + l], Y0=i, Y1=j, Z=j + k)
    return total


def fix_exponential_form(n: int) -> LaurentPoly:
    """n! [u^n] of exp(u (Y0 + Y1 Z - 1 - Z)) / (1 - u (1 + Z))."""
    base = Y0 + Y1 * Z - 1 - Z
    total = ZERO
    for m in range(n + 1):
        total = total + (factorial(n) // factorial(m)) * (1 + Z) ** (n - m) * base ** m
    return total


def d_closed_form(n: int, base: LaurentPoly = q) -> LaurentPoly:
    """Positive expression for the maj polynomial of derangements in ``base``."""
    total = base ** comb(n, 2) if n % 2 == 0 else ZERO
    for k in range(1, (n - 1) // 2 + 1):
        term = q_integer(2 * k, base) * base ** comb(2 * k, 2)
        for m in range(2 * k + 2, n + 1):
            term = term * q_integer(m, base)
        total = total + term
    return total


def length_closed_form(n: int) -> LaurentPoly:
    """Four-index q-multinomial sum for the (length, pix+, pix-, neg) polynomial."""
    total = ZERO
    D = [d_closed_form(m) for m in range(n + 1)]
    for i, j, k, l in _compositions(n, 4):
        if D[k + l].is_zero():
            continue
        mono = LaurentPoly.monomial(1, q=comb(j + k + 1, 2) + i * k, Y0=i, Y1=j, Z=j + k)
        total = total + gauss_multinomial(n, (i, j, k, l)) * mono * D[k + l]
    return total


def dnb_recurrence(n_max: int) -> list[LaurentPoly]:
    """D_n^B(q, Z) from D_{n+1} = (1 + qZ)[n+1]_{q^2} D_n + (-1)^{n+1} q^{n(n+1)}."""
    out = [ONE]
    for n in range(n_max):
        out.append((1 + q * Z) * q_integer(n + 1, q * q) * out[-1]
                   + (-1) ** (n + 1) * q ** (n * (n + 1)))
    return out


def dnb_two_term(n_max: int) -> list[LaurentPoly]:
    """D_n^B(q, Z) from the second-order recurrence starting at 1, Zq."""
    out = [ONE, q * Z]
    q2 = q * q
    for n in range(1, n_max):
        a = q_integer(n, q2) + q * Z * q_integer(n + 1, q2)
        b = (1 + q * Z) * q2 ** n * q_integer(n, q2)
        out.append(a * out[n] + b * out[n - 1])
    return out[: n_max + 1]
