"""Cached and optionally parallel evaluation of direct coefficients."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .cache import Cache
from .partitions import Partition, kostka, lr_coefficient
from .symchar import kronecker, mn_character

# below this many cache misses a process pool costs more than it saves
_POOL_THRESHOLD = 4


def _p(x: Sequence[int]) -> str:
    return str(Partition(x))


def kron_key(a, b, c) -> str:
    return f"kron:{_p(a)}|{_p(b)}|{_p(c)}"


def _kron_job(triple):
    return kronecker(*triple)


class Evaluator:
    def __init__(self, cache: Cache | None = None, jobs: int | None = None):
        self.cache = cache if cache is not None else Cache()
        self.jobs = max(1, jobs if jobs is not None else (os.cpu_count() or 1))
        self.hits = 0
        self.misses = 0

    def _lookup(self, key: str, compute) -> int:
        value = self.cache.get(key)
        if value is not None:
            self.hits += 1
            return value
        self.misses += 1
        value = compute()
        self.cache.put(key, value)
        return value

    def kron(self, a, b, c) -> int:
        return self._lookup(kron_key(a, b, c), lambda: kronecker(a, b, c))

    def kron_many(self, triples: Sequence[tuple]) -> list[int]:
        """Kronecker coefficients for many triples, in order."""
        triples = [tuple(Partition(x) for x in t) for t in triples]
        keys = [kron_key(*t) for t in triples]
        missing = sorted({k: t for k, t in zip(keys, triples) if self.cache.get(k) is None}.items())
        self.hits += len(triples) - len(missing)
        self.misses += len(missing)
        if self.jobs > 1 and len(missing) >= _POOL_THRESHOLD:
            with ProcessPoolExecutor(max_workers=min(self.jobs, len(missing))) as pool:
                results = list(pool.map(_kron_job, [t for _, t in missing]))
        else:
            results = [_kron_job(t) for _, t in missing]
        for (k, _), v in zip(missing, results):
            self.cache.put(k, v)
        return [self.cache.get(k) for k in keys]

    def lr(self, lam, mu, nu) -> int:
        return self._lookup(f"lr:{_p(lam)}|{_p(mu)}|{_p(nu)}", lambda: lr_coefficient(lam, mu, nu))

    def kostka(self, lam, mu) -> int:
        return self._lookup(f"kostka:{_p(lam)}|{_p(mu)}", lambda: kostka(lam, mu))

    def character(self, lam, rho) -> int:
        return self._lookup(f"char:{_p(lam)}|{_p(rho)}", lambda: mn_character(lam, rho))
