"""Partitions and the classical combinatorial coefficients built on them.

Everything here is a pure function of its (immutable) inputs. Memo tables are
``functools.lru_cache`` instances keyed on canonical tuples, so concurrent
callers at worst duplicate work.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import SizeMismatchError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value and hash the same.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in partition {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts are not weakly decreasing: {parts}")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self):
            raise ValueError(f"partition {self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(str(p) for p in self)})"


def _check_same_size(lam: Partition, mu: Partition) -> None:
    if lam.size != mu.size:
        raise SizeMismatchError(f"|{lam}| = {lam.size} but |{mu}| = {mu.size}")


def partitions(n: int, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, iteratively.

    >>> [str(p) for p in partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return
    a = [n]
    while True:
        if max_length is None or len(a) <= max_length:
            yield Partition(a)
        rem = 0
        while a and a[-1] == 1:
            a.pop()
            rem += 1
        if not a:
            return
        a[-1] -= 1
        rem += 1
        k = a[-1]
        while rem > k:
            a.append(k)
            rem -= k
        a.append(rem)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every partial sum of ``lam`` is at most that of ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    _check_same_size(lam, mu)
    sl = sm = 0
    for i in range(max(len(lam), len(mu))):
        sl += lam[i] if i < len(lam) else 0
        sm += mu[i] if i < len(mu) else 0
        if sl > sm:
            return False
    return True


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Young-diagram containment ``mu ⊆ lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


# -- Kostka numbers ----------------------------------------------------------

def _strips_removed(lam: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions kappa with lam/kappa a horizontal strip of ``size`` boxes."""
    n = len(lam)
    kappa = [0] * n

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if left == 0:
                yield Partition(kappa)
            return
        lo = lam[i + 1] if i + 1 < n else 0
        # boxes still removable from rows i.. bounds the search
        for take in range(min(lam[i] - lo, left), -1, -1):
            kappa[i] = lam[i] - take
            yield from rec(i + 1, left - take)

    yield from rec(0, size)


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], content: tuple[int, ...]) -> int:
    # content is sorted decreasing with zeros removed; the largest letter
    # (smallest count) fills a horizontal strip on the rim of lam.
    if not content:
        return 1 if not lam else 0
    if len(lam) > len(content):
        return 0
    rest = content[:-1]
    return sum(_kostka(kappa, rest) for kappa in _strips_removed(lam, content[-1]))


def kostka_content(lam: Sequence[int], content: Sequence[int]) -> int:
    """Number of SSYT of shape ``lam`` whose letter counts are ``content``.

    ``content`` may be any composition; the count is symmetric in it.
    """
    lam = Partition(lam)
    if sum(content) != lam.size or any(c < 0 for c in content):
        return 0
    key = tuple(sorted((c for c in content if c), reverse=True))
    if not dominance_leq(key, lam):
        return 0
    return _kostka(tuple(lam), key)


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    lam, mu = Partition(lam), Partition(mu)
    _check_same_size(lam, mu)
    return kostka_content(lam, mu)


# -- Littlewood-Richardson coefficients --------------------------------------

def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu,nu}.

    Incompatible inputs (sizes that do not add up, mu or nu not inside lam)
    give 0.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    # symmetric in (mu, nu); enumerate over the skew shape with fewer letters
    if (len(nu), tuple(nu)) > (len(mu), tuple(mu)):
        mu, nu = nu, mu
    return _lr(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=None)
def _lr(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    rows = len(lam)
    mu_p = mu + (0,) * (rows - len(mu))
    m = len(nu)
    if m == 0:
        return 1 if lam == mu else 0

    @lru_cache(maxsize=None)
    def fill(r: int, prev: tuple[int, ...], cum: tuple[int, ...]) -> int:
        # prev[i]: copies of letter i+1 in row r-1; cum: totals over rows < r
        if r == rows:
            return 1 if cum == nu else 0
        length = lam[r] - mu_p[r]
        top = min(m, r + 1)
        total = 0
        counts = [0] * m

        def choose(i: int, used: int) -> None:
            nonlocal total
            if i == top:
                if used == length:
                    total += fill(r + 1, tuple(counts), tuple(c + k for c, k in zip(cum, counts)))
                return
            left = length - used
            hi = min(left, nu[i] - cum[i])
            if i > 0:
                # lattice word: i-1's seen before this row cover this row's i's
                hi = min(hi, cum[i - 1] - cum[i])
            if r > 0:
                # column strictness: cells holding letters <= i+1 sit under
                # the skew part or letters <= i of the row above
                above = mu_p[r - 1] + sum(prev[:i])
                hi = min(hi, above - mu_p[r] - used)
            if i == top - 1:
                if hi < left:
                    return
                counts[i] = left
                choose(i + 1, length)
                counts[i] = 0
                return
            for k in range(hi, -1, -1):
                counts[i] = k
                choose(i + 1, used + k)
            counts[i] = 0

        choose(0, 0)
        return total

    return fill(0, (0,) * m, (0,) * m)


def lr_weights(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """LR multiplicity of V_a in V_b ⊗ V_c for U(n) dominant weights.

    The three vectors have the common length n and may have negative entries;
    they are shifted by powers of the determinant into partitions.
    """
    n = len(a)
    if len(b) != n or len(c) != n:
        raise SizeMismatchError("dominant weights must share one length")
    for w in (a, b, c):
        if any(w[i] < w[i + 1] for i in range(n - 1)):
            raise ValueError(f"{tuple(w)} is not dominant")
    if n == 0:
        return 1
    sb = -min(min(b), 0)
    sc = -min(min(c), 0)
    aa = [x + sb + sc for x in a]
    if min(aa) < 0:
        return 0
    return lr_coefficient(Partition(aa), Partition(x + sb for x in b), Partition(x + sc for x in c))
