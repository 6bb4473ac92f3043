"""Symmetric-group characters, Kronecker coefficients and plethysm.

Characters are evaluated with the Murnaghan-Nakayama rule on beta-sets
(abacus form): removing a border strip of length k is moving one bead from
position b to the free position b - k, with sign given by the number of beads
jumped over.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping, Sequence

from .errors import DegreeCapError, SizeMismatchError
from .partitions import Partition, partitions

#: Largest |lambda|*|mu| accepted by :func:`plethysm_schur`.
PLETHYSM_DEGREE_CAP = 12


def centralizer_order(rho: Sequence[int]) -> int:
    """z_rho = prod_k k^{m_k} m_k!, the order of the centralizer of rho."""
    rho = Partition(rho)
    return prod(k ** m * factorial(m) for k, m in Counter(rho).items())


def class_size(rho: Sequence[int]) -> int:
    rho = Partition(rho)
    return factorial(rho.size) // centralizer_order(rho)


def _hook_dimension(lam: tuple[int, ...]) -> int:
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    if rho[0] == 1:
        return _hook_dimension(lam)
    k, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        moved = sorted((occupied - {b}) | {target}, reverse=True)
        mu = Partition(moved[i] - (length - 1 - i) for i in range(length))
        value = _mn(tuple(mu), rest)
        total += -value if jumped % 2 else value
    return total


def mn_character(lam: Sequence[int], rho: Sequence[int]) -> int:
    """The irreducible character chi^lam evaluated on the class of cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise SizeMismatchError(f"|{lam}| != |{rho}|")
    return _mn(tuple(lam), tuple(rho))


def kronecker(alpha: Sequence[int], beta: Sequence[int], gamma: Sequence[int]) -> int:
    """Kronecker coefficient g(alpha, beta, gamma) by character orthogonality."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not alpha.size == beta.size == gamma.size:
        raise SizeMismatchError(
            f"Kronecker coefficient needs equal sizes, got {alpha.size}, {beta.size}, {gamma.size}"
        )
    a, b, c = sorted((tuple(alpha), tuple(beta), tuple(gamma)))
    return _kronecker(a, b, c)


@lru_cache(maxsize=None)
def _kronecker(a: tuple[int, ...], b: tuple[int, ...], c: tuple[int, ...]) -> int:
    n = sum(a)
    nfact = factorial(n)
    total = 0
    for rho in partitions(n):
        r = tuple(rho)
        x = _mn(a, r)
        if not x:
            continue
        y = _mn(b, r)
        if not y:
            continue
        z = _mn(c, r)
        if z:
            total += nfact // centralizer_order(rho) * x * y * z
    value, remainder = divmod(total, nfact)
    assert remainder == 0, "character sum is not divisible by n!"
    return value


class PowerSumVector:
    """A symmetric function of fixed degree n in the power-sum basis.

    ``coeffs`` maps cycle types (partitions of n) to exact rationals.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Sequence[int], Fraction] | None = None):
        self.degree = degree
        self.coeffs: dict[Partition, Fraction] = {}
        for rho, c in (coeffs or {}).items():
            rho = Partition(rho)
            if rho.size != degree:
                raise SizeMismatchError(f"cycle type {rho} is not a partition of {degree}")
            if c:
                self.coeffs[rho] = self.coeffs.get(rho, Fraction(0)) + Fraction(c)
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSumVector):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = ", ".join(f"({rho}): {c}" for rho, c in sorted(self.coeffs.items(), reverse=True))
        return f"PowerSumVector({self.degree}, {{{body}}})"

    def __add__(self, other: "PowerSumVector") -> "PowerSumVector":
        if self.degree != other.degree:
            raise SizeMismatchError("cannot add symmetric functions of different degree")
        out = dict(self.coeffs)
        for rho, c in other.coeffs.items():
            out[rho] = out.get(rho, Fraction(0)) + c
        return PowerSumVector(self.degree, out)

    def __mul__(self, other: "PowerSumVector") -> "PowerSumVector":
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for r1, c1 in self.coeffs.items():
            for r2, c2 in other.coeffs.items():
                out[Partition(sorted(r1 + r2, reverse=True))] += c1 * c2
        return PowerSumVector(self.degree + other.degree, out)

    def scale(self, k: Fraction | int) -> "PowerSumVector":
        return PowerSumVector(self.degree, {r: c * k for r, c in self.coeffs.items()})

    def inner(self, other: "PowerSumVector") -> Fraction:
        """Hall inner product, <p_rho, p_sigma> = z_rho delta."""
        return sum(
            (c * other.coeffs[r] * centralizer_order(r) for r, c in self.coeffs.items() if r in other.coeffs),
            Fraction(0),
        )

    def is_virtual_character(self) -> bool:
        return all((c * centralizer_order(r)).denominator == 1 for r, c in self.coeffs.items())

    def to_schur(self) -> dict[Partition, Fraction]:
        """Coefficients in the Schur basis, <f, s_nu> = sum_rho f_rho chi^nu(rho)."""
        out = {}
        for nu in partitions(self.degree):
            c = sum((f * _mn(tuple(nu), tuple(r)) for r, f in self.coeffs.items()), Fraction(0))
            if c:
                out[nu] = c
        return out


def schur_to_power_sums(lam: Sequence[int]) -> PowerSumVector:
    lam = Partition(lam)
    n = lam.size
    return PowerSumVector(
        n, {rho: Fraction(_mn(tuple(lam), tuple(rho)), centralizer_order(rho)) for rho in partitions(n)}
    )


def _power_plethysm(k: int, f: PowerSumVector) -> PowerSumVector:
    """p_k[f]: every p_rho becomes p_{k*rho}."""
    return PowerSumVector(f.degree * k, {Partition(k * r for r in rho): c for rho, c in f.coeffs.items()})


def plethysm_schur(lam: Sequence[int], mu: Sequence[int], cap: int | None = None) -> dict[Partition, int]:
    """Schur expansion of the plethysm s_lam[s_mu], via the power-sum basis."""
    lam, mu = Partition(lam), Partition(mu)
    cap = PLETHYSM_DEGREE_CAP if cap is None else cap
    degree = lam.size * mu.size
    if degree > cap:
        raise DegreeCapError(f"plethysm degree {degree} exceeds the cap {cap}")
    inner = schur_to_power_sums(mu)
    images = {k: _power_plethysm(k, inner) for k in range(1, lam.size + 1)}
    total = PowerSumVector(degree)
    for rho, c in schur_to_power_sums(lam).coeffs.items():
        term = PowerSumVector(0, {(): 1})
        for part in rho:
            term = term * images[part]
        total = total + term.scale(c)
    out = {}
    for nu, c in total.to_schur().items():
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"non-integral plethysm coefficient {c} at {nu}")
        out[nu] = int(c)
    return out
