"""Brute-force reference implementations, written straight from the definitions.

Nothing here imports the library's statistics; the tests compare the two.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations, product
from math import factorial


def all_signed(n):
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, p))


def coxeter_lengths(n):
    """Length in B_n by breadth-first search over the standard generators."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    todo = deque([start])
    while todo:
        w = todo.popleft()
        nbrs = []
        if n:
            nbrs.append((-w[0],) + w[1:])
        for i in range(n - 1):
            nbrs.append(w[:i] + (w[i + 1], w[i]) + w[i + 2:])
        for v in nbrs:
            if v not in dist:
                dist[v] = dist[w] + 1
                todo.append(v)
    return dist


def first_trough(word):
    """1-based position of the first letter smaller than its right neighbour (end counts as +inf)."""
    for i in range(len(word)):
        if i == len(word) - 1 or word[i] < word[i + 1]:
            return i + 1
    return 0


def is_desarrangement(word):
    return first_trough(word) % 2 == 0


def pixed(word):
    """Longest desarrangement suffix found by trying suffixes from the longest."""
    for start in range(len(word) + 1):
        if is_desarrangement(word[start:]):
            break
    prefix = word[:start]
    minus = tuple(v for v in prefix if v < 0)
    plus = tuple(v for v in prefix if v > 0)
    assert prefix == minus + plus
    return minus, plus, word[start:]


def descents(word):
    return [i for i in range(1, len(word)) if word[i - 1] > word[i]]


def derangement_count(n):
    return sum(1 for p in permutations(range(1, n + 1)) if all(v != i for i, v in enumerate(p, 1)))


def inclusion_exclusion(n):
    return sum((-1) ** k * factorial(n) // factorial(k) for k in range(n + 1))


def poly_from_counts(pairs):
    """Collapse (exponent tuple, weight) pairs into a dict."""
    out = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def poly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def gaussian_by_subsets(n, k):
    """[n choose k]_q from q^(k(k+1)/2) [n k]_q = sum over k-subsets A of q^tot A."""
    from itertools import combinations

    shift = k * (k + 1) // 2
    out = {}
    for A in combinations(range(1, n + 1), k):
        e = sum(A) - shift
        out[e] = out.get(e, 0) + 1
    return out
