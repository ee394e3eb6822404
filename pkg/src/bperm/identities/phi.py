"""Désarménien's map f and the bijection phi trading fixed points for pixed points."""

from __future__ import annotations

from typing import Mapping, Sequence

from ..perm import SignedPermutation, is_desarrangement, pixed_factorization


class HasFixedPoint(ValueError):
    pass


class NotDesarrangement(ValueError):
    pass


def _as_mapping(tau: Mapping[int, int] | Sequence[int]) -> dict[int, int]:
    # a plain word x1..xn is read as the map i -> x_i on {1..n}
    if isinstance(tau, Mapping):
        mapping = dict(tau)
    else:
        mapping = {i: x for i, x in enumerate(tau, start=1)}
    if sorted(mapping) != sorted(mapping.values()):
        raise ValueError(f"{mapping} is not a permutation of its domain")
    return mapping


def cycles(tau: Mapping[int, int] | Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of tau, each written starting from its smallest element."""
    mapping = _as_mapping(tau)
    seen = set()
    out = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        out.append(tuple(cyc))
    return out


def desarmenien_f(tau: Mapping[int, int] | Sequence[int]) -> tuple[int, ...]:
    """Rearrange a derangement into a desarrangement.

    Each cycle is rotated so that its minimum comes second, the cycles are
    listed by decreasing minima and the brackets are dropped.
    """
    cyc = cycles(tau)
    for c in cyc:
        if len(c) == 1:
            raise HasFixedPoint(f"{c[0]} is a fixed point")
    # a cycle listed from its minimum m becomes (last, m, ...)
    rotated = [(c[-1],) + c[:-1] for c in cyc]
    rotated.sort(key=lambda c: c[1], reverse=True)
    return tuple(x for c in rotated for x in c)


def f_inverse(word: Sequence[int]) -> dict[int, int]:
    """Recover the derangement (as a mapping) from a desarrangement."""
    word = tuple(word)
    if not is_desarrangement(word):
        raise NotDesarrangement(f"{word} is not a desarrangement")
    mapping: dict[int, int] = {}
    rest = word
    while rest:
        i = rest.index(min(rest))
        if i == 0:
            raise NotDesarrangement(f"{word} does not split into cycles")
        cyc = rest[i - 1:]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            mapping[a] = b
        rest = rest[: i - 1]
    return mapping


def derangement_part(w) -> dict[int, int]:
    """The map tau on the non-fixed letters of w.

    Position p is labelled by whichever of p, -p occurs in w, and tau sends
    that label to the letter standing at p.
    """
    x = w.letters if isinstance(w, SignedPermutation) else tuple(w)
    present = {abs(v): v for v in x}
    return {present[p]: v for p, v in enumerate(x, start=1) if abs(v) != p}


def phi(w) -> SignedPermutation:
    x = w.letters if isinstance(w, SignedPermutation) else tuple(w)
    v_minus = tuple(v for p, v in enumerate(x, start=1) if v == -p)
    v_plus = tuple(v for p, v in enumerate(x, start=1) if v == p)
    tau = derangement_part(x)
    tail = desarmenien_f(tau) if tau else ()
    # v_minus is read in increasing order, i.e. by decreasing position
    return SignedPermutation._trusted(tuple(sorted(v_minus)) + v_plus + tail)


def phi_inverse(w) -> SignedPermutation:
    x = w.letters if isinstance(w, SignedPermutation) else tuple(w)
    fact = pixed_factorization(x)
    out = [0] * len(x)
    for v in fact.w_minus + fact.w_plus:
        out[abs(v) - 1] = v
    for label, image in f_inverse(fact.w_d).items():
        out[abs(label) - 1] = image
    return SignedPermutation(tuple(out))
