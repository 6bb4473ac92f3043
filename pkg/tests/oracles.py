"""Slow, independent reference implementations used only by the tests.

None of these share code with the package engines: tableaux are enumerated
cell by cell, characters come from the Frobenius formula, and plethysm
restrictions come from explicit weight lists.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial


def _cells(shape, inner=()):
    inner = tuple(inner) + (0,) * (len(shape) - len(inner))
    return [(r, c) for r, row in enumerate(shape) for c in range(inner[r], row)]


def ssyt(shape, max_entry, inner=()):
    """All semistandard fillings of shape/inner with entries 1..max_entry, row by row."""
    cells = _cells(shape, inner)
    filling = {}

    def rec(idx):
        if idx == len(cells):
            yield dict(filling)
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in filling:
            lo = max(lo, filling[r, c - 1])
        if (r - 1, c) in filling:
            lo = max(lo, filling[r - 1, c] + 1)
        for v in range(lo, max_entry + 1):
            filling[r, c] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def content(tableau, letters):
    counts = Counter(tableau.values())
    return tuple(counts.get(i, 0) for i in range(1, letters + 1))


def kostka_bruteforce(lam, mu):
    mu = tuple(mu)
    return sum(1 for t in ssyt(lam, len(mu)) if content(t, len(mu)) == mu)


def schur_weights_bruteforce(lam, n):
    """Weight multiset of S_lam(C^n) from tableaux."""
    return Counter(content(t, n) for t in ssyt(lam, n))


def lr_bruteforce(lam, mu, nu):
    """Skew tableaux of shape lam/mu, content nu, reverse reading word a lattice word."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu) or len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    count = 0
    for t in ssyt(lam, len(nu), mu):
        if content(t, len(nu)) != nu:
            continue
        seen = Counter()
        ok = True
        for r in range(len(lam)):
            for c in sorted((c for (rr, c) in t if rr == r), reverse=True):
                v = t[r, c]
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


def _poly_mul(p, q):
    out = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return out


@lru_cache(maxsize=None)
def _frobenius(lam, rho):
    """chi^lam(rho) as the coefficient of x^(lam + delta) in a_delta * p_rho."""
    lam = tuple(lam)
    n = max(len(lam), 1)
    lam = lam + (0,) * (n - len(lam))
    poly = Counter()
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        poly[tuple(n - 1 - perm[i] for i in range(n))] += -1 if inv % 2 else 1
    for k in rho:
        pk = Counter({tuple(k * (i == j) for j in range(n)): 1 for i in range(n)})
        poly = _poly_mul(poly, pk)
    return poly.get(tuple(lam[i] + n - 1 - i for i in range(n)), 0)


def frobenius_character(lam, rho):
    return _frobenius(tuple(lam), tuple(rho))


def all_partitions(n, max_part=None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def z(rho):
    out = 1
    for k, m in Counter(rho).items():
        out *= k ** m * factorial(m)
    return out


def kronecker_bruteforce(a, b, c):
    n = sum(a)
    total = sum(
        Fraction(frobenius_character(a, r) * frobenius_character(b, r) * frobenius_character(c, r), z(r))
        for r in all_partitions(n)
    )
    assert total.denominator == 1
    return int(total)


def sym_k_restriction_bruteforce(k, theta):
    """U(2) highest-weight multiplicities of S_theta(Sym^k C^2).

    Weights of S_theta(C^{k+1}) from tableaux, pushed through the weights
    (k - j, j) of the basis of Sym^k C^2, then peeled from the top.
    """
    d = k + 1
    weights = Counter()
    for w, m in schur_weights_bruteforce(theta, d).items():
        weights[(sum(x * (k - j) for j, x in enumerate(w)), sum(x * j for j, x in enumerate(w)))] += m
    out = {}
    while weights:
        top = max(w for w, m in weights.items() if m)
        m = weights[top]
        out[top] = m
        # the U(2) irreducible with highest weight (p, q) has weights (p - i, q + i), i = 0..p-q
        for i in range(top[0] - top[1] + 1):
            weights[(top[0] - i, top[1] + i)] -= m
        weights = Counter({w: v for w, v in weights.items() if v})
    return out


def small_integer_certificate(rows, bound=4):
    """Search integer (x, y) in [-bound, bound] with x_i + y_j > x_k + y_l on strict pairs."""
    m, n = len(rows), len(rows[0])
    cells = [(i, j) for i in range(m) for j in range(n)]
    pairs = [(p, q) for p in cells for q in cells if rows[p[0]][p[1]] > rows[q[0]][q[1]]]
    rng = range(-bound, bound + 1)
    for x in itertools.product(rng, repeat=m):
        for y in itertools.product(rng, repeat=n):
            if all(x[i] + y[j] > x[k] + y[l] for (i, j), (k, l) in pairs):
                return x, y
    return None
