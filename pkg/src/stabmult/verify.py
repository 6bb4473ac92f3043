"""The acceptance battery behind ``stabmult verify``.

Every check returns ``(passed, detail)``. Checks tagged ``fast`` form the
quick suite; ``full`` runs everything.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .evaluator import Evaluator
from .liechar import GroupShape, decompose, pairing, recompose
from .partitions import Partition, partitions
from .stability import (
    IntegerMatrix,
    is_additive,
    kron_limit,
    kron_module_WA,
    kron_stretched_sequence,
    lr_limit,
    lr_stretched_sequence,
    plethysm_module_Wsigma,
    plethysm_restriction_multiplicity,
    triple_from_matrix,
)
from .symchar import _kronecker, centralizer_order, plethysm_schur

Check = Callable[[Evaluator], "tuple[bool, str]"]


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    tag: str
    check: Check


@dataclass
class Outcome:
    criterion: Criterion
    passed: bool
    detail: str
    elapsed_ms: int

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        c = self.criterion
        return f"[{mark}] {c.number:2d} ({c.tag}) {c.title}: {self.detail} [{self.elapsed_ms} ms]"


def _scale(p, n):
    return tuple(n * x for x in p)


def additive_grid() -> Iterator[IntegerMatrix]:
    """Additive 2x2 matrices with entries in {0, 1, 2}."""
    for e in itertools.product(range(3), repeat=4):
        A = IntegerMatrix((e[:2], e[2:]))
        if is_additive(A) is not None:
            yield A


def check_oscillation(ev: Evaluator) -> tuple[bool, str]:
    got = ev.kron_many([(_scale((1, 1), n),) * 3 for n in range(1, 7)])
    want = [(1 + (-1) ** n) // 2 for n in range(1, 7)]
    return got == want, f"values {got}"


def check_additive_stable(ev: Evaluator) -> tuple[bool, str]:
    grid = list(additive_grid())
    triples, labels = [], []
    for A in grid:
        t = triple_from_matrix(A)
        for n in range(1, 4):
            triples.append((_scale(t.alpha, n), _scale(t.beta, n), _scale(t.gamma, n)))
            labels.append((str(A), n))
    values = ev.kron_many(triples)
    bad = [(lab, v) for lab, v in zip(labels, values) if v != 1]
    return not bad, f"{len(grid)} additive matrices, {len(values)} coefficients, failures {bad[:5]}"


def check_kron_limit(ev: Evaluator) -> tuple[bool, str]:
    A = IntegerMatrix.parse("1,0;0,0")
    checked, bad = 0, []
    for size in range(4):
        for a in partitions(size, 2):
            for b in partitions(size, 2):
                for c in partitions(size, 4):
                    report = kron_stretched_sequence(a, b, c, A, 8, window=3, evaluate=ev.kron_many)
                    limit = kron_limit(a, b, c, A)
                    checked += 1
                    if report.plateau is None or report.plateau[1] != limit:
                        bad.append((str(a), str(b), str(c), report.values, limit))
    return checked >= 5 and not bad, f"{checked} offset triples, mismatches {bad[:3]}"


LR_DIRECTIONS = [((1, 0), (1, 0)), ((1, 1, 0), (1, 0, 0)), ((2, 1, 0), (1, 1, 0))]


def check_lr(ev: Evaluator) -> tuple[bool, str]:
    bad = []
    for mu1, mu2 in LR_DIRECTIONS:
        mu = tuple(x + y for x, y in zip(mu1, mu2))
        for n in range(1, 11):
            v = ev.lr(_scale(mu, n), _scale(mu1, n), _scale(mu2, n))
            if v != 1:
                bad.append((mu1, mu2, n, v))
    checked, nonzero = 0, 0
    for mu1, mu2 in LR_DIRECTIONS:
        rank = len(mu1)
        for size in range(1, 4):
            for a in partitions(size, rank):
                for bsize in range(size + 1):
                    for b in partitions(bsize, rank):
                        for c in partitions(size - bsize, rank):
                            report = lr_stretched_sequence(a, b, c, mu1, mu2, 6)
                            limit = lr_limit(a, b, c, mu1, mu2)
                            checked += 1
                            nonzero += limit > 0
                            if report.plateau is None or report.plateau[1] != limit:
                                bad.append((a, b, c, mu1, mu2, report.values, limit))
    ok = not bad and checked >= 5
    return ok, f"30 diagonal values, {checked} offset triples ({nonzero} nonzero limits), failures {bad[:3]}"


def check_orthogonality(ev: Evaluator) -> tuple[bool, str]:
    pairs = 0
    for n in range(9):
        parts = list(partitions(n))
        table = {(lam, rho): ev.character(lam, rho) for lam in parts for rho in parts}
        for lam in parts:
            for mu in parts:
                s = sum(Fraction(table[lam, r] * table[mu, r], centralizer_order(r)) for r in parts)
                pairs += 1
                if s != (lam == mu):
                    return False, f"<{lam}, {mu}> = {s} at n = {n}"
    return True, f"{pairs} pairs for n <= 8"


def check_kron_identities(ev: Evaluator) -> tuple[bool, str]:
    triples = 0
    for n in range(1, 7):
        parts = [tuple(p) for p in partitions(n)]
        for a, b, c in itertools.combinations_with_replacement(parts, 3):
            # evaluate the character sum in every argument order, bypassing the canonical-order memo key
            values = {_kronecker(*perm) for perm in itertools.permutations((a, b, c))}
            triples += 1
            if len(values) != 1:
                return False, f"g not symmetric at {a}, {b}, {c}: {values}"
        for a in parts:
            for b in parts:
                if ev.kron(a, b, (n,)) != (a == b):
                    return False, f"g({a}, {b}, ({n})) = {ev.kron(a, b, (n,))}"
    return True, f"{triples} unordered triples symmetric, g(a, b, (n)) = delta for n <= 6"


def check_plethysm(ev: Evaluator) -> tuple[bool, str]:
    cases = 0
    for k in range(1, 9):
        for size in range(1, 8 // k + 1):
            for theta in partitions(size):
                expansion = plethysm_schur(theta, (k,))
                for top in range(k * size, (k * size + 1) // 2 - 1, -1):
                    lam = (top, k * size - top)
                    want = expansion.get(Partition(lam), 0)
                    got = plethysm_restriction_multiplicity(k, theta, lam) if theta.length <= k + 1 else 0
                    cases += 1
                    if got != want:
                        return False, f"k = {k}, theta = ({theta}), lambda = {lam}: {got} vs {want}"
    s22 = plethysm_schur((2,), (2,)) == {(4,): 1, (2, 2): 1}
    s211 = plethysm_schur((2,), (1, 1)) == {(2, 2): 1, (1, 1, 1, 1): 1}
    return s22 and s211, f"{cases} two-row coefficients agree; s2[s2] {s22}, s2[s11] {s211}"


def check_plethysm_spot(ev: Evaluator) -> tuple[bool, str]:
    values = [plethysm_restriction_multiplicity(2, (2 * n,), (4 * n, 0)) for n in range(1, 5)]
    W = plethysm_module_Wsigma(2, (2,))
    graded = W.margin > 0 and all(pairing(W.grading, w) >= W.margin for w in W.char)
    return values == [1] * 4 and graded, f"values {values}, W weights {dict(W.char.items())}, grading {W.grading}"


def check_graded_modules(ev: Evaluator) -> tuple[bool, str]:
    count = 0
    for A in additive_grid():
        W = kron_module_WA(A, is_additive(A))
        strict = len(A.strict_pairs())
        rows, cols = A.row_sums(), A.col_sums()
        small = sum(1 for x in rows for y in rows if x > y) + sum(1 for x in cols for y in cols if x > y)
        if any(m < 0 for _, m in W.char.items()):
            return False, f"negative multiplicity for {A}"
        if W.dim != strict - small:
            return False, f"dim W = {W.dim} but {strict} - {small} for {A}"
        if any(pairing(W.grading, w) < W.margin for w in W.char):
            return False, f"weight below margin for {A}"
        count += 1
    return True, f"{count} modules checked"


def random_combination(rng: random.Random) -> tuple[GroupShape, dict]:
    rank = rng.randint(1, 4)
    blocks = []
    while sum(blocks) < rank:
        blocks.append(rng.randint(1, min(3, rank - sum(blocks))))
    shape = GroupShape(tuple(blocks))
    mults = {}
    for _ in range(rng.randint(1, 3)):
        w = []
        for n in blocks:
            w.extend(sorted((rng.randint(-2, 3) for _ in range(n)), reverse=True))
        mults[tuple(w)] = mults.get(tuple(w), 0) + rng.randint(1, 3)
    return shape, mults


def check_reconstruction(ev: Evaluator, trials: int = 100, seed: int = 20240611) -> tuple[bool, str]:
    rng = random.Random(seed)
    for i in range(trials):
        shape, mults = random_combination(rng)
        got = decompose(recompose(shape, mults))
        if got != mults:
            return False, f"trial {i} on {shape}: {mults} came back as {got}"
    return True, f"{trials} random combinations recovered"


CRITERIA = [
    Criterion(1, "oscillating Kronecker sequence g(n(1,1), n(1,1), n(1,1))", "fast", check_oscillation),
    Criterion(2, "additive 2x2 directions give g = 1 for n = 1..3", "fast", check_additive_stable),
    Criterion(3, "Kronecker limit formula matches plateaus, A = [[1,0],[0,0]]", "full", check_kron_limit),
    Criterion(4, "LR diagonal values and limit formula", "fast", check_lr),
    Criterion(5, "symmetric group character orthogonality, n <= 8", "fast", check_orthogonality),
    Criterion(6, "Kronecker symmetry and trivial-factor identity, n <= 6", "fast", check_kron_identities),
    Criterion(7, "plethysm: U(2) restriction route vs power-sum route", "fast", check_plethysm),
    Criterion(8, "Sym^2(C^2) direction sigma = (2,0,0)", "fast", check_plethysm_spot),
    Criterion(9, "graded modules W_A over the additive grid", "fast", check_graded_modules),
    Criterion(10, "Weyl extraction reconstructs random combinations", "full", check_reconstruction),
]

SUITES = ("fast", "full")


def run_suite(suite: str, evaluator: Evaluator | None = None, echo: Callable[[str], None] | None = None) -> list[Outcome]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    ev = evaluator or Evaluator(jobs=1)
    out = []
    for crit in CRITERIA:
        if suite == "fast" and crit.tag != "fast":
            continue
        start = time.perf_counter()
        try:
            passed, detail = crit.check(ev)
        except Exception as exc:  # a crashing criterion is a failing one
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        outcome = Outcome(crit, passed, detail, int((time.perf_counter() - start) * 1000))
        out.append(outcome)
        if echo:
            echo(outcome.line())
    return out
