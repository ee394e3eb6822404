"""Exact sparse Laurent polynomials in t, q, Y0, Y1, Z and truncated series.

Coefficients are Python ints. Exponent vectors are 5-tuples in the fixed
variable order ``VARS``. ``TruncSeries`` holds power series in a formal main
variable (``u`` by default) whose coefficients are ``LaurentPoly`` values,
optionally reduced modulo bounds on some auxiliary variables ("q-adic mode").
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

VARS = ("t", "q", "Y0", "Y1", "Z")
NVARS = len(VARS)
_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * NVARS

Exps = tuple  # tuple[int, int, int, int, int]


class HalfIntegerExponent(ValueError):
    pass


class InexactDivision(ArithmeticError):
    pass


class NotInvertible(ArithmeticError):
    pass


def _var_index(name: str) -> int:
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _bounds_tuple(bounds) -> tuple:
    if bounds is None:
        return (None,) * NVARS
    if isinstance(bounds, tuple) and len(bounds) == NVARS:
        return bounds
    out = [None] * NVARS
    for name, value in dict(bounds).items():
        out[_var_index(name)] = value
    return tuple(out)


def _within(e: Exps, bounds: tuple) -> bool:
    for a, b in zip(e, bounds):
        if b is not None and a > b:
            return False
    return True


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != NVARS:
                    raise ValueError(f"exponent vector {e} must have {NVARS} entries")
                if c:
                    clean[e] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({_ZERO_EXP: int(c)} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, **exps: int) -> "LaurentPoly":
        e = [0] * NVARS
        for name, k in exps.items():
            e[_var_index(name)] = int(k)
        return cls._raw({tuple(e): int(coeff)} if coeff else {})

    @classmethod
    def var(cls, name: str) -> "LaurentPoly":
        return cls.monomial(1, **{name: 1})

    @classmethod
    def from_counts(cls, counts: Mapping[Exps, int]) -> "LaurentPoly":
        return cls(counts)

    # -- inspection -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, **exps: int) -> int:
        e = [0] * NVARS
        for name, k in exps.items():
            e[_var_index(name)] = k
        return self._terms.get(tuple(e), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def degree(self, name: str) -> int:
        i = _var_index(name)
        return max(e[i] for e in self._terms) if self._terms else 0

    def min_degree(self, name: str) -> int:
        i = _var_index(name)
        return min(e[i] for e in self._terms) if self._terms else 0

    def variables(self) -> set[str]:
        return {VARS[i] for e in self._terms for i in range(NVARS) if e[i]}

    # -- ring operations ------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul_trunc(other, None)

    __rmul__ = __mul__

    def mul_trunc(self, other: "LaurentPoly", bounds=None) -> "LaurentPoly":
        """Product with every term exceeding ``bounds`` dropped."""
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        bnd = _bounds_tuple(bounds)
        check = any(x is not None for x in bnd)
        out: dict = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                if check and not _within(e, bnd):
                    continue
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse_monomial(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotInvertible(f"{self} is not a unit monomial")
        (e, c), = self._terms.items()
        return LaurentPoly._raw({tuple(-x for x in e): c})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitutions and evaluation ------------------------------------------------

    def substitute(self, mapping: Mapping[str, "LaurentPoly | int"]) -> "LaurentPoly":
        """Replace variables by polynomials; negative powers need unit monomials."""
        idx = {_var_index(k): self._coerce(v) for k, v in mapping.items()}
        result = LaurentPoly()
        cache: dict = {}
        for e, c in self._terms.items():
            kept = list(e)
            term = LaurentPoly.const(c)
            for i, image in idx.items():
                k = e[i]
                kept[i] = 0
                if k == 0:
                    continue
                key = (i, k)
                if key not in cache:
                    if k < 0 and image.is_zero():
                        raise ZeroDivisionError(f"{VARS[i]}^{k} at {VARS[i]}=0")
                    cache[key] = image ** k
                term = term * cache[key]
            result = result + term * LaurentPoly._raw({tuple(kept): 1})
        return result

    def rescale(self, name: str, factor) -> "LaurentPoly":
        """Substitute ``name -> name**factor``; fractional results raise."""
        i = _var_index(name)
        factor = Fraction(factor)
        out = {}
        for e, c in self._terms.items():
            new = e[i] * factor
            if new.denominator != 1:
                raise HalfIntegerExponent(f"{VARS[i]}^{e[i]} -> exponent {new}")
            e2 = list(e)
            e2[i] = int(new)
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly(out)

    def evaluate(self, values: Mapping[str, int]) -> int:
        """Integer value at integer points; unlisted variables must be absent."""
        vals = [None] * NVARS
        for k, v in values.items():
            vals[_var_index(k)] = int(v)
        total = 0
        for e, c in self._terms.items():
            term = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if vals[i] is None:
                    raise KeyError(f"no value for {VARS[i]}")
                if k < 0:
                    if vals[i] not in (1, -1):
                        raise ValueError(f"{VARS[i]}^{k} at {VARS[i]}={vals[i]} is not an integer")
                    term *= vals[i] ** (-k)
                else:
                    term *= vals[i] ** k
            total += term
        return total

    def truncate(self, bounds) -> "LaurentPoly":
        bnd = _bounds_tuple(bounds)
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if _within(e, bnd)})

    # -- division ------------------------------------------------------------------------

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raise InexactDivision when it is not a Laurent polynomial."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        if other.is_monomial():
            (e0, c0), = other._terms.items()
            out = {}
            for e, c in self._terms.items():
                if c % c0:
                    raise InexactDivision(f"{self} / {other}")
                out[tuple(a - b for a, b in zip(e, e0))] = c // c0
            return LaurentPoly._raw(out)
        # quotient exponents lie in the box [low(N)-low(D), high(N)-high(D)]
        lo = [min(e[i] for e in self._terms) - min(e[i] for e in other._terms) for i in range(NVARS)]
        hi = [max(e[i] for e in self._terms) - max(e[i] for e in other._terms) for i in range(NVARS)]
        lead_e = max(other._terms)
        lead_c = other._terms[lead_e]
        rem = dict(self._terms)
        quot = {}
        while rem:
            e = max(rem)
            c = rem[e]
            qe = tuple(a - b for a, b in zip(e, lead_e))
            if c % lead_c or any(not (l <= x <= h) for x, l, h in zip(qe, lo, hi)):
                raise InexactDivision(f"{self} / {other}")
            qc = c // lead_c
            quot[qe] = qc
            for de, dc in other._terms.items():
                te = tuple(a + b for a, b in zip(qe, de))
                v = rem.get(te, 0) - qc * dc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return LaurentPoly._raw(quot)

    def inverse_trunc(self, bounds) -> "LaurentPoly":
        """Inverse modulo ``bounds``; the part of degree 0 in every bounded variable must be a unit monomial."""
        bnd = _bounds_tuple(bounds)
        bounded = [i for i in range(NVARS) if bnd[i] is not None]
        if not bounded:
            raise NotInvertible("inverse_trunc needs at least one bounded variable")
        if any(e[i] < 0 for e in self._terms for i in bounded):
            raise NotInvertible("negative exponent in a bounded variable")
        const = {e: c for e, c in self._terms.items() if all(e[i] == 0 for i in bounded)}
        if len(const) != 1 or abs(next(iter(const.values()))) != 1:
            raise NotInvertible(f"{self}: constant part is not a unit monomial")
        lead_inv = LaurentPoly._raw(const).inverse_monomial()
        x = 1 - self.mul_trunc(lead_inv, bnd)  # no constant part in bounded variables
        steps = sum(bnd[i] for i in bounded) + 1
        result = LaurentPoly.const(1)
        for _ in range(steps):
            result = (1 + x.mul_trunc(result, bnd)).truncate(bnd)
        return result.mul_trunc(lead_inv, bnd)

    # -- text forms ------------------------------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in canonical order: total degree ascending, then lex descending."""
        return sorted(self._terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            for name, x in zip(VARS, e):
                if x == 1:
                    factors.append(name)
                elif x:
                    factors.append(f"{name}^{x}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if k == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        if re.search(r"[\w^]\s+[\w^]", text):
            raise ValueError(f"missing operator in {text!r}")
        s = re.sub(r"\s+", "", text)
        if s in ("", "0"):
            return cls()
        pos = 0
        out: dict = {}
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            if pos and not m.group("sign"):
                raise ValueError(f"missing operator near {s[pos:]!r}")
            coeff = -1 if m.group("sign") == "-" else 1
            e = [0] * NVARS
            for factor in m.group("body").split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in _INDEX:
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                e[_INDEX[name]] += int(power) if power else 1
            key = tuple(e)
            out[key] = out.get(key, 0) + coeff
            pos = m.end()
        return cls(out)

    def to_json_terms(self) -> list[dict]:
        return [
            {"exps": {name: x for name, x in zip(VARS, e) if x}, "coeff": c}
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_terms(cls, items: Iterable[Mapping]) -> "LaurentPoly":
        out: dict = {}
        for item in items:
            e = [0] * NVARS
            for name, x in item["exps"].items():
                e[_var_index(name)] = int(x)
            key = tuple(e)
            out[key] = out.get(key, 0) + int(item["coeff"])
        return cls(out)


_FACTOR = r"(?:\d+|[A-Za-z][A-Za-z0-9]*(?:\^-?\d+)?)"
_TERM_RE = re.compile(rf"(?P<sign>[+-])?(?P<body>{_FACTOR}(?:\*{_FACTOR})*)")

ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
t = LaurentPoly.var("t")
q = LaurentPoly.var("q")
Y0 = LaurentPoly.var("Y0")
Y1 = LaurentPoly.var("Y1")
Z = LaurentPoly.var("Z")


# -- q-analog builders ------------------------------------------------------------------

def q_pochhammer(a, step=q, n: int = 0) -> LaurentPoly:
    """(a; step)_n = (1 - a)(1 - a step) ... (1 - a step^(n-1))."""
    a = LaurentPoly._coerce(a)
    step = LaurentPoly._coerce(step)
    result = ONE
    factor = a
    for _ in range(n):
        result = result * (1 - factor)
        factor = factor * step
    return result


def q_integer(n: int, base=q) -> LaurentPoly:
    """[n]_base = 1 + base + ... + base^(n-1)."""
    base = LaurentPoly._coerce(base)
    result = ZERO
    power = ONE
    for _ in range(n):
        result = result + power
        power = power * base
    return result


@lru_cache(maxsize=4096)
def _gauss_cached(n: int, parts: tuple, base: LaurentPoly) -> LaurentPoly:
    numerator = q_pochhammer(base, base, n)
    denominator = ONE
    for m in parts:
        denominator = denominator * q_pochhammer(base, base, m)
    return numerator.exact_div(denominator)


def gauss_multinomial(n: int, parts: Sequence[int], base=q) -> LaurentPoly:
    """q-multinomial coefficient (base; base)_n / prod (base; base)_{m_i}."""
    parts = tuple(int(m) for m in parts)
    if any(m < 0 for m in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} must be nonnegative and sum to {n}")
    return _gauss_cached(n, parts, LaurentPoly._coerce(base))


def gauss_binomial(n: int, k: int, base=q) -> LaurentPoly:
    if k < 0 or k > n:
        return ZERO
    return gauss_multinomial(n, (k, n - k), base)


def q_factorial_ratio(n: int, base=q) -> LaurentPoly:
    """(base; base)_n / (1 - base)^n, i.e. the product of q-integers [1]..[n]."""
    return q_pochhammer(base, base, n).exact_div((1 - LaurentPoly._coerce(base)) ** n)


# -- truncated series ------------------------------------------------------------------------

class TruncSeries:
    """Power series in ``var`` known modulo ``var**(order+1)``.

    ``bounds`` optionally truncates every coefficient in auxiliary variables,
    e.g. ``{"q": 12}`` keeps q-degrees up to 12.
    """

    __slots__ = ("coeffs", "order", "var", "bounds")

    def __init__(self, coeffs: Sequence, order: int, var: str = "u", bounds=None):
        self.order = order
        self.var = var
        self.bounds = _bounds_tuple(bounds)
        cs = [LaurentPoly._coerce(c) for c in list(coeffs)[: order + 1]]
        cs += [ZERO] * (order + 1 - len(cs))
        self.coeffs = tuple(c.truncate(self.bounds) for c in cs)

    @classmethod
    def one(cls, order: int, var: str = "u", bounds=None) -> "TruncSeries":
        return cls([ONE], order, var, bounds)

    @classmethod
    def from_poly(cls, coeffs_by_power: Mapping[int, LaurentPoly] | Sequence, order: int,
                  var: str = "u", bounds=None) -> "TruncSeries":
        if isinstance(coeffs_by_power, Mapping):
            cs = [ZERO] * (order + 1)
            for k, c in coeffs_by_power.items():
                if 0 <= k <= order:
                    cs[k] = cs[k] + LaurentPoly._coerce(c)
            return cls(cs, order, var, bounds)
        return cls(coeffs_by_power, order, var, bounds)

    def _like(self, coeffs) -> "TruncSeries":
        return TruncSeries(coeffs, self.order, self.var, self.bounds)

    def _check(self, other: "TruncSeries"):
        if (other.order, other.var, other.bounds) != (self.order, self.var, self.bounds):
            raise ValueError("series with different truncations")

    def __getitem__(self, k: int) -> LaurentPoly:
        return self.coeffs[k]

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = self._like([other])
        self._check(other)
        return self._like([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        c = LaurentPoly._coerce(c)
        return self._like([a.mul_trunc(c, self.bounds) for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a.mul_trunc(b, self.bounds)
        return self._like(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by var**k."""
        return self._like([ZERO] * k + list(self.coeffs))

    def coefficient_inverse(self, c: LaurentPoly) -> LaurentPoly:
        if c.is_unit():
            return c.inverse_monomial()
        if any(b is not None for b in self.bounds):
            return c.inverse_trunc(self.bounds)
        raise NotInvertible(f"constant coefficient {c} is not invertible")

    def inverse(self) -> "TruncSeries":
        c0inv = self.coefficient_inverse(self.coeffs[0])
        out = [c0inv]
        for k in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j].mul_trunc(out[k - j], self.bounds)
            out.append((-acc).mul_trunc(c0inv, self.bounds))
        return self._like(out)

    @classmethod
    def geom_inverse(cls, x: "TruncSeries") -> "TruncSeries":
        """1 / (1 - x)."""
        return (1 - x).inverse()

    def truncate_coefficients(self, bounds) -> "TruncSeries":
        return TruncSeries(self.coeffs, self.order, self.var, bounds)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.order, self.var, self.bounds, self.coeffs) == (other.order, other.var, other.bounds, other.coeffs)

    def __repr__(self):
        body = ", ".join(f"{self.var}^{k}: {c}" for k, c in enumerate(self.coeffs) if not c.is_zero())
        return f"TruncSeries({{{body}}}, order={self.order})"


def series_var(order: int, var: str = "u", bounds=None) -> TruncSeries:
    return TruncSeries([ZERO, ONE], order, var, bounds)


def pochhammer_u(a, step, n: int | None, order: int, bounds=None, var: str = "u") -> TruncSeries:
    """(a*u; step)_n as a series in u; ``n=None`` is the infinite product.

    The infinite product keeps factors until ``a * step**k`` vanishes under
    ``bounds``, so ``step`` must raise the degree of some bounded variable.
    """
    a = LaurentPoly._coerce(a)
    step = LaurentPoly._coerce(step)
    bnd = _bounds_tuple(bounds)
    result = TruncSeries.one(order, var, bnd)
    factor = a
    k = 0
    while n is None or k < n:
        f = factor.truncate(bnd)
        if f.is_zero():
            if n is None:
                break
        else:
            result = result * TruncSeries([ONE, -f], order, var, bnd)
        factor = factor * step
        k += 1
        if n is None and k > 10_000:
            raise ValueError("infinite product does not terminate under the given bounds")
    return result


def e_q(order: int, bounds, base=q, var: str = "u") -> TruncSeries:
    """sum_n u^n / (base; base)_n, coefficients expanded modulo ``bounds``."""
    bnd = _bounds_tuple(bounds)
    coeffs = [q_pochhammer(base, base, n).inverse_trunc(bnd) for n in range(order + 1)]
    return TruncSeries(coeffs, order, var, bnd)


def E_q(order: int, bounds, base=q, var: str = "u") -> TruncSeries:
    """sum_n base^C(n,2) u^n / (base; base)_n."""
    bnd = _bounds_tuple(bounds)
    base = LaurentPoly._coerce(base)
    coeffs = [
        (base ** comb(n, 2)).mul_trunc(q_pochhammer(base, base, n).inverse_trunc(bnd), bnd)
        for n in range(order + 1)
    ]
    return TruncSeries(coeffs, order, var, bnd)


def first_difference(expected: TruncSeries | LaurentPoly, actual: TruncSeries | LaurentPoly):
    """Locate the first coefficient where two polynomials or series disagree.

    Returns ``None`` when equal, else a dict naming the main-variable power
    (for series), the monomial, and both coefficients.
    """
    if isinstance(expected, TruncSeries):
        for k, (a, b) in enumerate(zip(expected.coeffs, actual.coeffs)):
            diff = first_difference(a, b)
            if diff is not None:
                diff[expected.var] = k
                return diff
        return None
    expected = LaurentPoly._coerce(expected)
    actual = LaurentPoly._coerce(actual)
    if expected == actual:
        return None
    delta = expected - actual
    e, _ = delta.sorted_terms()[0]
    mono = LaurentPoly._raw({e: 1})
    return {
        "monomial": str(mono),
        "expected": expected._terms.get(e, 0),
        "actual": actual._terms.get(e, 0),
    }
