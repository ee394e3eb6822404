"""Registry of identity checkers.

Every checker compares two independently computed sides and returns ``None``
on agreement or a witness dict locating the first disagreement.  Identities
involving infinite products are compared as series truncated in u (and t)
with coefficients expanded up to a fixed q-degree.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import permutations
from math import comb, factorial
from typing import Callable, Iterator, Optional

from ..perm import (
    bar,
    fix_sets,
    fmaj,
    neg,
    pix_sets,
    signed_words,
)
from ..qalgebra import (
    ONE,
    ZERO,
    LaurentPoly,
    TruncSeries,
    Y0,
    Y1,
    Z,
    e_q,
    first_difference,
    gauss_binomial,
    pochhammer_u,
    q,
    q_factorial_ratio,
    q_integer,
    q_pochhammer,
    t,
)
from ..weighted import (
    decomposition_equalities,
    enumerate_wsp,
    fdes_pairing,
    fdes_pairing_inverse,
    macmahon_from_word,
    macmahon_to_word,
    wsp_decompose,
    wsp_recompose,
)
from ..words import FamilyTag, WordFamily, enumerate_words
from .families import (
    _check_cap,
    d_closed_form,
    derangement_alternating_sum,
    derangement_numbers,
    derangement_positive_sum,
    dnb_recurrence,
    dnb_two_term,
    enum_polynomial,
    fix_closed_form,
    fix_exponential_form,
    length_closed_form,
)
from .phi import desarmenien_f, f_inverse, phi, phi_inverse
from ..perm import is_desarrangement, ligne_stats


class UnknownIdentity(KeyError):
    pass


@dataclass(frozen=True)
class Params:
    n_max: int = 5
    u_order: int = 5
    t_order: int = 8
    q_order: int = 12
    s_max: int = 4

    @property
    def series_order(self) -> int:
        return min(self.u_order, self.n_max)


@dataclass
class VerifyReport:
    identity: str
    params: dict
    status: str
    witness: Optional[dict] = None
    elapsed: float = 0.0
    description: str = field(default="", repr=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        out = asdict(self)
        out["elapsed"] = round(self.elapsed, 4)
        return out


Witness = Optional[dict]
Checker = Callable[[Params], Witness]


def _diff(expected, actual, **where) -> Witness:
    d = first_difference(expected, actual)
    if d is None:
        return None
    return {**where, **d}


def _first(checks: Iterator[Witness]) -> Witness:
    for w in checks:
        if w is not None:
            return w
    return None


def _mismatch(message: str, **where) -> dict:
    return {**where, "mismatch": message}


# -- series helpers ------------------------------------------------------------

def _qbounds(p: Params) -> dict:
    return {"q": p.q_order}


def _egf(p: Params, family: str, denominator: Callable[[int], LaurentPoly], bounds) -> TruncSeries:
    """sum_n u^n P_n / denominator(n), truncated."""
    N = p.series_order
    coeffs = []
    for n in range(N + 1):
        coeffs.append(enum_polynomial(n, family).mul_trunc(denominator(n).inverse_trunc(bounds), bounds))
    return TruncSeries(coeffs, N, "u", bounds)


def _geometric_factor(p: Params, c: LaurentPoly, bounds) -> TruncSeries:
    """(1 - u c)^(-1)."""
    return TruncSeries([ONE, -c], p.series_order, "u", bounds).inverse()


def _inv_one_minus(base: LaurentPoly, bounds) -> LaurentPoly:
    return (1 - base).inverse_trunc(bounds)


# -- fixed points, pixed points and the generating series ---------------------

def check_thm1_1(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        fix = enum_polynomial(n, "FIX")
        w = _diff(fix_closed_form(n), fix, n=n, sides="closed form vs fix enumeration") or _diff(
            fix, enum_polynomial(n, "PIX"), n=n, sides="fix vs pix enumeration")
        if w:
            return w
    return None


def check_1_2(p: Params) -> Witness:
    return _first(
        _diff(fix_exponential_form(n), enum_polynomial(n, "FIX"), n=n)
        for n in range(p.n_max + 1)
    )


def check_1_7(p: Params) -> Witness:
    b = _qbounds(p)
    N = p.series_order
    den = lambda n: q_pochhammer(-Z * q, q, n) * q_pochhammer(q, q, n)
    lhs = _egf(p, "PIX_L", den, b)
    inner = []
    for n in range(N + 1):
        a_n = ONE
        for k in range(1, n + 1):
            a_n = a_n * (Y0 + q ** k * Y1 * Z)
        inner.append(a_n.mul_trunc(den(n).inverse_trunc(b), b))
    rhs = (_geometric_factor(p, _inv_one_minus(q, b), b)
           * pochhammer_u(ONE, q, None, N, b)
           * TruncSeries(inner, N, "u", b))
    return _diff(rhs, lhs)


def _fmaj_product(p: Params, b) -> TruncSeries:
    N = p.series_order
    q2 = q * q
    return (pochhammer_u(ONE, q2, None, N, b)
            * pochhammer_u(Y0, q2, None, N, b).inverse()
            * pochhammer_u(-q * Y1 * Z, q2, None, N, b)
            * pochhammer_u(-q * Z, q2, None, N, b).inverse())


def check_1_8(p: Params) -> Witness:
    b = _qbounds(p)
    lhs = _egf(p, "FMAJ", lambda n: q_pochhammer(q * q, q * q, n), b)
    c = (1 + q * Z).mul_trunc(_inv_one_minus(q * q, b), b)
    rhs = _geometric_factor(p, c, b) * _fmaj_product(p, b)
    return _diff(rhs, lhs)


def _weight_sum(s: int) -> LaurentPoly:
    return sum((q ** i * (Z if i % 2 else ONE) for i in range(s + 1)), ZERO)


def _finite_wsp_product(N: int, s: int, bounds) -> TruncSeries:
    q2 = q * q
    e, o = s // 2 + 1, (s + 1) // 2
    return (pochhammer_u(ONE, q2, e, N, bounds)
            * pochhammer_u(Y0, q2, e, N, bounds).inverse()
            * pochhammer_u(-q * Y1 * Z, q2, o, N, bounds)
            * pochhammer_u(-q * Z, q2, o, N, bounds).inverse())


def check_1_9(p: Params) -> Witness:
    b = {"q": p.q_order, "t": p.t_order}
    N = p.series_order
    lhs_coeffs = []
    for n in range(N + 1):
        inv = q_pochhammer(t * t, q * q, n + 1).inverse_trunc(b)
        lhs_coeffs.append(((1 + t) * enum_polynomial(n, "FLAG")).mul_trunc(inv, b))
    lhs = TruncSeries(lhs_coeffs, N, "u", b)
    rhs = TruncSeries([], N, "u", b)
    for s in range(p.t_order + 1):
        term = _geometric_factor(p, _weight_sum(s), b) * _finite_wsp_product(N, s, b)
        rhs = rhs + term.scale(t ** s)
    return _diff(rhs, lhs)


# -- derangements and phi ------------------------------------------------------------

def check_2_1(p: Params) -> Witness:
    d = derangement_numbers(p.n_max)
    for n in range(p.n_max + 1):
        if derangement_alternating_sum(n) != d[n]:
            return _mismatch("alternating sum", n=n, expected=d[n], actual=derangement_alternating_sum(n))
        count = enum_polynomial(n, "D").evaluate({"q": 1})
        if count != d[n]:
            return _mismatch("derangement count", n=n, expected=d[n], actual=count)
    return None


def check_2_2(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        closed = fix_closed_form(n)
        w = _diff(closed, enum_polynomial(n, "FIX"), n=n)
        if w:
            return w
        # the q-analog tends to the same sum at q = 1
        w = _diff(closed, length_closed_form(n).substitute({"q": 1}), n=n, sides="q=1 limit")
        if w:
            return w
    return None


def check_2_4(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        image = set()
        for x in signed_words(n):
            y = phi(x)
            image.add(y.letters)
            fp, fm = fix_sets(x)
            pp, pm = pix_sets(y)
            if (fm, fp, neg(x)) != (pm, pp, neg(y)):
                return _mismatch("statistics not transported", n=n, word=list(x), image=list(y))
            if phi_inverse(y).letters != x:
                return _mismatch("inverse fails", n=n, word=list(x))
        if len(image) != 2 ** n * factorial(n):
            return _mismatch("not injective", n=n, image_size=len(image))
    return None


# -- length and desarrangements --------------------------------------------------------

def check_3_2(p: Params) -> Witness:
    return _first(
        _diff(enum_polynomial(n, "D"), enum_polynomial(n, "K"), n=n)
        for n in range(p.n_max + 1)
    )


def _d_series(p: Params, b) -> TruncSeries:
    return _egf(p, "D", lambda n: q_pochhammer(q, q, n), b)


def check_3_3(p: Params) -> Witness:
    b = _qbounds(p)
    rhs = _geometric_factor(p, _inv_one_minus(q, b), b) * pochhammer_u(ONE, q, None, p.series_order, b)
    return _diff(rhs, _d_series(p, b))


def check_3_5(p: Params) -> Witness:
    return _first(
        _diff(length_closed_form(n), enum_polynomial(n, "PIX_L"), n=n)
        for n in range(p.n_max + 1)
    )


# -- weighted signed permutations -----------------------------------------------------

def _wsp_cells(p: Params):
    for n in range(p.n_max + 1):
        _check_cap(n, (p.s_max + 1) ** n)
        for s in range(p.s_max + 1):
            yield n, s


def check_4_1(p: Params) -> Witness:
    for n, s in _wsp_cells(p):
        for pair in enumerate_wsp(n, s):
            d = wsp_decompose(pair)
            eq = decomposition_equalities(pair, d)
            if not all(eq.values()):
                return _mismatch(f"equalities {eq}", n=n, s=s, pair=str(pair))
            if not d.core.is_derangement():
                return _mismatch("core has a fixed point", n=n, s=s, pair=str(pair))
            if wsp_recompose(d) != pair:
                return _mismatch("recomposition differs", n=n, s=s, pair=str(pair))
    return None


def check_5_1(p: Params) -> Witness:
    for s in range(p.s_max + 1):
        for n in range(p.n_max + 1):
            expected = gauss_binomial(n + s // 2, n, q * q)
            actual = sum((q ** v.tot for v in enumerate_words(WordFamily(FamilyTag.NIW_E, n, s))), ZERO)
            w = _diff(expected, actual, n=n, s=s)
            if w:
                return w
            # also against the u-expansion of 1/(u; q^2)_{floor(s/2)+1}
            series = pochhammer_u(ONE, q * q, s // 2 + 1, n).inverse()
            w = _diff(series[n], actual, n=n, s=s, sides="series coefficient")
            if w:
                return w
    return None


def check_5_2(p: Params) -> Witness:
    for s in range(p.s_max + 1):
        for n in range(p.n_max + 1):
            series = pochhammer_u(-q, q * q, (s + 1) // 2, n)
            actual = sum((q ** v.tot for v in enumerate_words(WordFamily(FamilyTag.DW_O, n, s))), ZERO)
            w = _diff(series[n], actual, n=n, s=s)
            if w:
                return w
    return None


def _wsp_poly(n: int, s: int, with_fix: bool) -> LaurentPoly:
    counts: Counter = Counter()
    for pair in enumerate_wsp(n, s):
        x = pair.w.letters
        fp = fm = 0
        if with_fix:
            for i, v in enumerate(x, start=1):
                if v == i:
                    fp += 1
                elif v == -i:
                    fm += 1
        counts[(0, pair.c.tot, fp, fm, neg(x))] += 1
    return LaurentPoly(counts)


def check_5_3(p: Params) -> Witness:
    N = p.series_order
    for s in range(p.s_max + 1):
        _check_cap(N, (s + 1) ** N)
        full = TruncSeries([_wsp_poly(n, s, True) for n in range(N + 1)], N)
        bare = TruncSeries([_wsp_poly(n, s, False) for n in range(N + 1)], N)
        w = _diff(_finite_wsp_product(N, s, None) * bare, full, s=s)
        if w:
            return w
    return None


def check_5_3_macmahon(p: Params) -> Witness:
    for n, s in _wsp_cells(p):
        seen = set()
        for pair in enumerate_wsp(n, s):
            d = macmahon_to_word(pair)
            if d.tot != pair.c.tot or d.odd != neg(pair.w) or any(v > s for v in d):
                return _mismatch("tot/odd not preserved", n=n, s=s, pair=str(pair))
            if macmahon_from_word(d, s) != pair:
                return _mismatch("inverse fails", n=n, s=s, pair=str(pair))
            seen.add(d.letters)
        if len(seen) != (s + 1) ** n:
            return _mismatch("not onto {0..s}^n", n=n, s=s, image_size=len(seen))
    return None


def check_5_6(p: Params) -> Witness:
    N = p.series_order
    for s in range(p.s_max + 1):
        _check_cap(N, (s + 1) ** N)
        lhs = TruncSeries([_wsp_poly(n, s, False) for n in range(N + 1)], N)
        rhs = TruncSeries([ONE, -_weight_sum(s)], N).inverse()
        w = _diff(rhs, lhs, s=s)
        if w:
            return w
    return None


def check_5_7(p: Params) -> Witness:
    for n, s in _wsp_cells(p):
        w = _diff(_weight_sum(s) ** n, _wsp_poly(n, s, False), n=n, s=s)
        if w:
            return w
    return None


def _t_coefficient(poly: LaurentPoly, k: int) -> LaurentPoly:
    return LaurentPoly({(0,) + e[1:]: c for e, c in poly.items() if e[0] == k})


def check_5_8(p: Params) -> Witness:
    b = {"t": p.s_max}
    for n in range(p.n_max + 1):
        _check_cap(n, (p.s_max + 1) ** n)
        inv = q_pochhammer(t * t, q * q, n + 1).inverse_trunc(b)
        folded = ((1 + t) * enum_polynomial(n, "FLAG")).mul_trunc(inv, b)
        for s in range(p.s_max + 1):
            w = _diff(_t_coefficient(folded, s), _wsp_poly(n, s, True), n=n, s=s)
            if w:
                return w
    return None


def check_5_8_pairing(p: Params) -> Witness:
    """The (b, w) pairing behind the flag statistics."""
    from ..words import niw
    from ..perm import fdes, enumerate_class

    for n, s in _wsp_cells(p):
        produced = set()
        for pair in enumerate_wsp(n, s):
            b, w = fdes_pairing(pair, s)
            c = pair.c
            if c.letters and 2 * b[0] + fdes(w) != c[0]:
                return _mismatch("2 b_1 + fdes != c_1", n=n, s=s, pair=str(pair))
            if 2 * b.tot + fmaj(w) != c.tot:
                return _mismatch("2 tot b + fmaj != tot c", n=n, s=s, pair=str(pair))
            if fdes_pairing_inverse(b, w) != pair:
                return _mismatch("inverse fails", n=n, s=s, pair=str(pair))
            produced.add((b.letters, w.letters))
        target = set()
        for w in enumerate_class(n, "B"):
            for b in niw(n, s):
                if (2 * b[0] if n else 0) + fdes(w) <= s:
                    target.add((b.letters, w.letters))
        if produced != target:
            return _mismatch("image differs from {(b, w): 2 b_1 + fdes w <= s}", n=n, s=s)
    return None


# -- specializations -------------------------------------------------------------------

def check_6_2_3(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        for x in signed_words(n):
            y = bar(x)
            fp, fm = fix_sets(x)
            gp, gm = fix_sets(y)
            ok = (bar(y).letters == x and fmaj(x) + fmaj(y) == n * n and neg(x) + neg(y) == n
                  and len(fp) == len(gm) and len(fm) == len(gp))
            if not ok:
                return _mismatch("involution property", n=n, word=list(x))
    return None


def check_6_5(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        poly = enum_polynomial(n, "FMAJ")
        dual = poly.substitute({"q": q ** -1, "Y0": Y1, "Y1": Y0, "Z": Z ** -1})
        w = _diff(poly, q ** (n * n) * Z ** n * dual, n=n)
        if w:
            return w
    return None


def check_6_6(p: Params) -> Witness:
    b = _qbounds(p)
    lhs = _egf(p, "DnB", lambda n: q_pochhammer(q * q, q * q, n), b)
    c = (1 + q * Z).mul_trunc(_inv_one_minus(q * q, b), b)
    rhs = _geometric_factor(p, c, b) * pochhammer_u(ONE, q * q, None, p.series_order, b)
    return _diff(rhs, lhs)


def check_6_7(p: Params) -> Witness:
    q2 = q * q
    for n in range(p.n_max + 1):
        lhs = q_factorial_ratio(n, q2) * (1 + q * Z) ** n
        rhs = sum((gauss_binomial(n, k, q2) * enum_polynomial(k, "DnB") for k in range(n + 1)), ZERO)
        w = _diff(lhs, rhs, n=n)
        if w:
            return w
    return None


def check_6_8(p: Params) -> Witness:
    q2 = q * q
    for n in range(p.n_max + 1):
        rhs = ZERO
        for k in range(n + 1):
            rhs = rhs + ((-1) ** k * gauss_binomial(n, k, q2) * q ** (k * (k - 1))
                         * q_factorial_ratio(n - k, q2) * (1 + q * Z) ** (n - k))
        w = _diff(rhs, enum_polynomial(n, "DnB"), n=n)
        if w:
            return w
    return None


def check_6_9(p: Params) -> Witness:
    rec = dnb_recurrence(p.n_max)
    return _first(_diff(rec[n], enum_polynomial(n, "DnB"), n=n) for n in range(p.n_max + 1))


def check_6_10(p: Params) -> Witness:
    rec = dnb_two_term(p.n_max)
    return _first(_diff(rec[n], enum_polynomial(n, "DnB"), n=n) for n in range(p.n_max + 1))


def check_6_12(p: Params) -> Witness:
    b = _qbounds(p)
    N = p.series_order
    den = lambda n: q_pochhammer(-Z * q, q, n) * q_pochhammer(q, q, n)
    lhs = _egf(p, "KnB", den, b)
    inner = [(q ** comb(n + 1, 2) * (Y1 * Z) ** n).mul_trunc(den(n).inverse_trunc(b), b)
             for n in range(N + 1)]
    rhs = (_geometric_factor(p, _inv_one_minus(q, b), b)
           * pochhammer_u(ONE, q, None, N, b)
           * TruncSeries(inner, N, "u", b))
    return _diff(rhs, lhs)


def check_6_14(p: Params) -> Witness:
    b = {"t": p.t_order}
    N = p.series_order
    # the symmetric-group polynomial is the flag one at Z = 0 with t, q squared
    for n in range(p.n_max + 1):
        flag = enum_polynomial(n, "FLAG").substitute({"Z": 0})
        a = enum_polynomial(n, "A_TQ").rescale("t", 2).rescale("q", 2)
        w = _diff(a, flag, n=n, sides="flag at Z=0")
        if w:
            return w
    coeffs = [enum_polynomial(n, "A_TQ").mul_trunc(q_pochhammer(t, q, n + 1).inverse_trunc(b), b)
              for n in range(N + 1)]
    lhs = TruncSeries(coeffs, N, "u", b)
    rhs = TruncSeries([], N, "u", b)
    for s in range(p.t_order + 1):
        term = (_geometric_factor(p, q_integer(s + 1), b)
                * pochhammer_u(ONE, q, s + 1, N, b)
                * pochhammer_u(Y0, q, s + 1, N, b).inverse())
        rhs = rhs + term.scale(t ** s)
    return _diff(rhs, lhs)


def check_6_15(p: Params) -> Witness:
    b = _qbounds(p)
    N = p.series_order
    rhs = (_geometric_factor(p, _inv_one_minus(q, b), b)
           * pochhammer_u(ONE, q, None, N, b)
           * pochhammer_u(Y0, q, None, N, b).inverse())
    for family in ("A", "INV_A"):
        lhs = _egf(p, family, lambda n: q_pochhammer(q, q, n), b)
        w = _diff(rhs, lhs, family=family)
        if w:
            return w
    return None


def check_6_16(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        rhs = sum((gauss_binomial(n, k) * enum_polynomial(k, "D") for k in range(n + 1)), ZERO)
        w = _diff(q_factorial_ratio(n), rhs, n=n)
        if w:
            return w
    return None


def check_6_17(p: Params) -> Witness:
    b = _qbounds(p)
    N = p.series_order
    lhs = e_q(N, b) * _d_series(p, b)
    return _diff(_geometric_factor(p, _inv_one_minus(q, b), b), lhs)


def check_6_18(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        closed = d_closed_form(n)
        w = _diff(closed, enum_polynomial(n, "D"), n=n) or _diff(
            closed, enum_polynomial(n, "K"), n=n, sides="inv over desarrangements")
        if w:
            return w
    return None


def check_6_19(p: Params) -> Witness:
    d = derangement_numbers(p.n_max)
    for n in range(p.n_max + 1):
        if derangement_positive_sum(n) != d[n]:
            return _mismatch("positive sum", n=n, expected=d[n], actual=derangement_positive_sum(n))
        if d_closed_form(n).evaluate({"q": 1}) != d[n]:
            return _mismatch("q=1 of the closed form", n=n, expected=d[n])
    return None


def _same_family(p: Params, a: str, b: str, y0_zero: bool = False) -> Witness:
    for n in range(p.n_max + 1):
        pa, pb = enum_polynomial(n, a), enum_polynomial(n, b)
        if y0_zero:
            pa, pb = pa.substitute({"Y0": 0}), pb.substitute({"Y0": 0})
        w = _diff(pa, pb, n=n, families=f"{a} vs {b}")
        if w:
            return w
    return None


def check_6_22(p: Params) -> Witness:
    return _same_family(p, "A", "INV_A")


def check_6_24(p: Params) -> Witness:
    return _same_family(p, "A", "IMAJ_A")


def check_6_25(p: Params) -> Witness:
    return (_same_family(p, "INV_A", "A", y0_zero=True)
            or _same_family(p, "K", "INV_A", y0_zero=True)
            or _same_family(p, "K", "D"))


def check_6_26(p: Params) -> Witness:
    return _same_family(p, "K", "K_IMAJ")


def check_6_27(p: Params) -> Witness:
    for n in range(p.n_max + 1):
        _check_cap(n, factorial(n))
        by_ligne: Counter = Counter()
        by_iligne: Counter = Counter()
        for x in permutations(range(1, n + 1)):
            st = ligne_stats(x)
            if all(v != i for i, v in enumerate(x, start=1)):
                by_ligne[st.ligne] += 1
            if is_desarrangement(x):
                by_iligne[st.iligne] += 1
        for E in set(by_ligne) | set(by_iligne):
            if by_ligne[E] != by_iligne[E]:
                return _mismatch("subset counts differ", n=n, subset=sorted(E),
                                 expected=by_ligne[E], actual=by_iligne[E])
    return None


def check_f_bijection(p: Params) -> Witness:
    """Désarménien's f on plain derangements of every order up to n_max."""
    for n in range(p.n_max + 1):
        _check_cap(n, factorial(n))
        image = set()
        expected = 0
        for x in permutations(range(1, n + 1)):
            if any(v == i for i, v in enumerate(x, start=1)):
                continue
            expected += 1
            y = desarmenien_f(x)
            if not is_desarrangement(y) or sorted(y) != sorted(x):
                return _mismatch("image is not a rearranged desarrangement", n=n, word=list(x))
            if f_inverse(y) != {i: v for i, v in enumerate(x, start=1)}:
                return _mismatch("inverse fails", n=n, word=list(x))
            image.add(y)
        desarr = sum(1 for x in permutations(range(1, n + 1)) if is_desarrangement(x))
        if len(image) != expected or desarr != expected:
            return _mismatch("not a bijection", n=n, image_size=len(image), desarrangements=desarr)
    return None


def _combine(*checks: Checker) -> Checker:
    def run(p: Params) -> Witness:
        for c in checks:
            w = c(p)
            if w:
                return w
        return None
    return run


REGISTRY: dict[str, tuple[str, Checker]] = {
    "1.2": ("exponential generating function of the fix polynomial", check_1_2),
    "thm1.1": ("fix and pix enumerations agree with the derangement-number sum", check_thm1_1),
    "1.7": ("u-series for the (length, pix) polynomials", check_1_7),
    "1.8": ("u-series for the (fmaj, fix) polynomials", check_1_8),
    "1.9": ("(u, t)-series for the (fdes, fmaj, fix) polynomials", check_1_9),
    "2.1": ("derangement numbers", check_2_1),
    "2.2": ("four-index sum for the fix polynomial", check_2_2),
    "2.4": ("phi is a bijection carrying fixed points to pixed points", _combine(check_2_4, check_f_bijection)),
    "3.2": ("inv over desarrangements equals maj over derangements", check_3_2),
    "3.3": ("u-series for the maj polynomial of derangements", check_3_3),
    "3.5": ("q-multinomial sum for the (length, pix) polynomial", check_3_5),
    "4.1": ("decomposition of weighted signed permutations", check_4_1),
    "5.1": ("even nonincreasing words", check_5_1),
    "5.2": ("odd decreasing words", check_5_2),
    "5.3": ("fixed-point factor of weighted signed permutations", _combine(check_5_3, check_5_3_macmahon)),
    "5.6": ("u-series for weighted signed permutations by tot and neg", check_5_6),
    "5.7": ("weighted signed permutations by tot and neg, per n", check_5_7),
    "5.8": ("t-expansion of the flag polynomial", _combine(check_5_8, check_5_8_pairing)),
    "6.2-3": ("negating every letter", check_6_2_3),
    "6.5": ("duality of the (fmaj, fix) polynomial", check_6_5),
    "6.6": ("u-series for signed derangements", check_6_6),
    "6.7": ("binomial transform of signed derangements", check_6_7),
    "6.8": ("alternating sum for signed derangements", check_6_8),
    "6.9": ("first-order recurrence for signed derangements", check_6_9),
    "6.10": ("second-order recurrence for signed derangements", check_6_10),
    "6.12": ("u-series for signed desarrangements", check_6_12),
    "6.14": ("(u, t)-series for (des, maj, fix) on permutations", check_6_14),
    "6.15": ("u-series for (maj, fix) and (inv, pix) on permutations", check_6_15),
    "6.16": ("q-binomial transform of derangements", check_6_16),
    "6.17": ("derangement series times e_q", check_6_17),
    "6.18": ("positive closed form for derangements by maj", check_6_18),
    "6.19": ("positive sum for derangement numbers", check_6_19),
    "6.22": ("(maj, fix) and (inv, pix) agree on permutations", check_6_22),
    "6.24": ("(maj, fix) and (imaj, pix) agree on permutations", check_6_24),
    "6.25": ("desarrangements by inv equal derangements by maj", check_6_25),
    "6.26": ("inv and imaj agree on desarrangements", check_6_26),
    "6.27": ("descent sets of derangements vs inverse descent sets of desarrangements", check_6_27),
}

IDENTITY_IDS = tuple(REGISTRY)


def verify(identity: str, params: Params | None = None, **overrides) -> VerifyReport:
    if identity not in REGISTRY:
        raise UnknownIdentity(f"unknown identity {identity!r}")
    params = params or Params()
    if overrides:
        params = Params(**{**asdict(params), **overrides})
    description, checker = REGISTRY[identity]
    start = time.perf_counter()
    witness = checker(params)
    elapsed = time.perf_counter() - start
    return VerifyReport(
        identity=identity,
        params=asdict(params),
        status="pass" if witness is None else "fail",
        witness=witness,
        elapsed=elapsed,
        description=description,
    )


def verify_all(params: Params | None = None, ids=IDENTITY_IDS) -> Iterator[VerifyReport]:
    for identity in ids:
        yield verify(identity, params)
