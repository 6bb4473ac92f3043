"""Characters of products of unitary groups, stored as weight multisets.

A :class:`GroupShape` ``[n_1, ..., n_k]`` stands for U(n_1) x ... x U(n_k)
with its diagonal maximal torus; weights are integer tuples of length
``n_1 + ... + n_k``. Dominant means weakly decreasing inside each block and
rho is ``(n-1, ..., 0)`` blockwise.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    CutoffError,
    DimensionMismatchError,
    GradingViolationError,
    NonDominantWeightError,
    NotWeylInvariantError,
)
from .partitions import Partition, kostka_content

Weight = tuple[int, ...]

#: Largest block size for which Weyl groups are enumerated element by element.
MAX_WEYL_BLOCK = 6


@dataclass(frozen=True)
class GroupShape:
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(int(b) for b in self.blocks)
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError(f"a group shape needs positive block sizes, got {self.blocks}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def torus(cls, rank: int) -> "GroupShape":
        return cls((1,) * rank)

    @property
    def rank(self) -> int:
        return sum(self.blocks)

    def ranges(self) -> list[range]:
        out, start = [], 0
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def split(self, w: Sequence[int]) -> list[tuple[int, ...]]:
        self.check_length(w)
        return [tuple(w[r.start:r.stop]) for r in self.ranges()]

    def check_length(self, w: Sequence[int]) -> None:
        if len(w) != self.rank:
            raise DimensionMismatchError(f"weight {tuple(w)} does not have length {self.rank}")

    def is_dominant(self, w: Sequence[int]) -> bool:
        self.check_length(w)
        return all(w[i] >= w[i + 1] for r in self.ranges() for i in range(r.start, r.stop - 1))

    def rho(self) -> Weight:
        return tuple(r.stop - 1 - i for r in self.ranges() for i in r)

    def weyl_group(self, max_block: int | None = None) -> Iterator[tuple[tuple[int, ...], int]]:
        """Yield ``(perm, sign)`` for the product of the blockwise symmetric groups.

        ``perm[i]`` is the position coordinate i is sent to.
        """
        limit = MAX_WEYL_BLOCK if max_block is None else max_block
        if max(self.blocks) > limit:
            raise ValueError(f"block of size {max(self.blocks)} exceeds the Weyl enumeration limit {limit}")
        per_block = []
        for r in self.ranges():
            items = []
            for p in permutations(r):
                inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
                items.append((p, -1 if inversions % 2 else 1))
            per_block.append(items)

        def rec(i: int, perm: tuple[int, ...], sign: int) -> Iterator[tuple[tuple[int, ...], int]]:
            if i == len(per_block):
                yield perm, sign
                return
            for p, s in per_block[i]:
                yield from rec(i + 1, perm + p, sign * s)

        yield from rec(0, (), 1)

    def __str__(self) -> str:
        return "[" + ",".join(str(b) for b in self.blocks) + "]"


def act(perm: Sequence[int], w: Sequence[int]) -> Weight:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[perm[i]] = x
    return tuple(out)


def parse_weight(text: str) -> tuple[Weight, GroupShape | None]:
    """Parse ``"2,0|1,1"``; returns the weight and, if blocks were marked, the shape."""
    text = text.strip()
    if not text:
        return (), None
    chunks = text.split("|")
    parts = [[int(t) for t in c.split(",") if t.strip()] for c in chunks]
    weight = tuple(x for p in parts for x in p)
    shape = GroupShape(tuple(len(p) for p in parts)) if len(chunks) > 1 else None
    return weight, shape


def format_weight(w: Sequence[int], shape: GroupShape | None = None) -> str:
    if shape is None:
        return ",".join(str(x) for x in w)
    return "|".join(",".join(str(x) for x in block) for block in shape.split(w))


class Character:
    """Finite formal sum of torus weights with integer multiplicities."""

    __slots__ = ("shape", "terms")

    def __init__(self, shape: GroupShape, terms: Mapping[Sequence[int], int] | Iterable = ()):
        self.shape = shape
        acc: dict[Weight, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, m in items:
            w = tuple(w)
            shape.check_length(w)
            acc[w] += m
        self.terms: dict[Weight, int] = {w: m for w, m in acc.items() if m}

    @classmethod
    def trivial(cls, shape: GroupShape) -> "Character":
        return cls(shape, {(0,) * shape.rank: 1})

    def __getitem__(self, w: Sequence[int]) -> int:
        return self.terms.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    @property
    def dim(self) -> int:
        return sum(self.terms.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __repr__(self) -> str:
        body = ", ".join(f"({format_weight(w)}): {m}" for w, m in sorted(self.terms.items(), reverse=True))
        return f"Character({self.shape}, {{{body}}})"

    def _same_shape(self, other: "Character") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other: "Character") -> "Character":
        self._same_shape(other)
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) + m
        return Character(self.shape, out)

    def __sub__(self, other: "Character") -> "Character":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "Character":
        return Character(self.shape, {w: k * m for w, m in self.terms.items()})

    def __mul__(self, other: "Character") -> "Character":
        """Tensor product over the same group."""
        self._same_shape(other)
        out: dict[Weight, int] = defaultdict(int)
        for w1, m1 in self.terms.items():
            for w2, m2 in other.terms.items():
                out[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
        return Character(self.shape, out)

    def outer(self, other: "Character") -> "Character":
        """External tensor product, living on the concatenated shape."""
        shape = GroupShape(self.shape.blocks + other.shape.blocks)
        return Character(shape, {w1 + w2: m1 * m2 for w1, m1 in self.terms.items() for w2, m2 in other.terms.items()})

    def dual(self) -> "Character":
        return Character(self.shape, {tuple(-x for x in w): m for w, m in self.terms.items()})

    def on_shape(self, shape: GroupShape) -> "Character":
        """Reinterpret the same torus character for another group of equal rank."""
        if shape.rank != self.shape.rank:
            raise DimensionMismatchError(f"rank {self.shape.rank} cannot be read on shape {shape}")
        return Character(shape, self.terms)

    def is_weyl_invariant(self) -> bool:
        for w, m in self.terms.items():
            for r in self.shape.ranges():
                for i in range(r.start, r.stop - 1):
                    if w[i] != w[i + 1]:
                        swapped = list(w)
                        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                        if self.terms.get(tuple(swapped), 0) != m:
                            return False
        return True


def _compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if total - first > cap * (parts - 1):
            break
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _schur_weights(n: int, lam: tuple[int, ...]) -> tuple[tuple[Weight, int], ...]:
    """Weights of the polynomial U(n)-irreducible S_lam(C^n) with Kostka multiplicities."""
    top = lam[0] if lam else 0
    out = []
    for w in _compositions(sum(lam), n, top):
        k = kostka_content(lam, w)
        if k:
            out.append((w, k))
    return tuple(out)


def irreducible_character(shape: GroupShape, lam: Sequence[int]) -> Character:
    """Full weight multiset of the irreducible with highest weight ``lam``."""
    lam = tuple(lam)
    if len(lam) != shape.rank:
        raise DimensionMismatchError(f"highest weight {lam} does not match shape {shape}")
    if not shape.is_dominant(lam):
        raise NonDominantWeightError(f"{format_weight(lam, shape)} is not dominant for {shape}")
    result: Character | None = None
    for n, block in zip(shape.blocks, shape.split(lam)):
        shift = block[-1]
        part = tuple(x - shift for x in block)
        piece = Character(
            GroupShape((n,)),
            {tuple(x + shift for x in w): m for w, m in _schur_weights(n, tuple(Partition(part)))},
        )
        result = piece if result is None else result.outer(piece)
    assert result is not None
    return Character(shape, result.terms)


def weyl_dimension(shape: GroupShape, lam: Sequence[int]) -> int:
    num = den = 1
    for block in shape.split(lam):
        n = len(block)
        for i in range(n):
            for j in range(i + 1, n):
                num *= block[i] - block[j] + j - i
                den *= j - i
    return num // den


def restrict_character(c: Character, torus_map: Sequence[Sequence[int]], shape: GroupShape | None = None) -> Character:
    """Push every weight of ``c`` through the integer matrix ``torus_map``.

    ``torus_map`` has one row per coordinate of the target and one column per
    coordinate of the source. The result lives on ``shape`` (a torus of the
    right rank by default).
    """
    rows = [tuple(r) for r in torus_map]
    if any(len(r) != c.shape.rank for r in rows):
        raise DimensionMismatchError(f"map columns do not match source rank {c.shape.rank}")
    shape = shape or GroupShape.torus(len(rows))
    if shape.rank != len(rows):
        raise DimensionMismatchError(f"map has {len(rows)} rows but target shape {shape} has rank {shape.rank}")
    out: dict[Weight, int] = defaultdict(int)
    for w, m in c.items():
        out[tuple(sum(a * x for a, x in zip(r, w)) for r in rows)] += m
    return Character(shape, out)


def sym_layers(c: Character, d_max: int) -> list[dict[Weight, int]]:
    """Weight multisets of Sym^0(c), ..., Sym^{d_max}(c)."""
    zero = (0,) * c.shape.rank
    layers: list[dict[Weight, int]] = [{zero: 1}] + [{} for _ in range(d_max)]
    for w, m in c.items():
        if m < 0:
            raise ValueError("symmetric powers need a genuine module (non-negative multiplicities)")
        for _ in range(m):
            # one more line: new[j] = old[j] + new[j-1] shifted by w
            for j in range(1, d_max + 1):
                src = layers[j - 1]
                dst = layers[j]
                for u, k in src.items():
                    v = tuple(a + b for a, b in zip(u, w))
                    dst[v] = dst.get(v, 0) + k
    return layers


def sym_power_character(c: Character, d: int) -> Character:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return Character(c.shape, sym_layers(c, d)[d])


def _straighten(shape: GroupShape, v: Sequence[int], rho: Weight) -> tuple[Weight, int] | None:
    """Dominant lam and sign with w(lam + rho) = v + rho, or None if singular."""
    u = [a + b for a, b in zip(v, rho)]
    sign = 1
    out: list[int] = []
    for r in shape.ranges():
        block = u[r.start:r.stop]
        if len(set(block)) != len(block):
            return None
        inversions = sum(1 for i in range(len(block)) for j in range(i + 1, len(block)) if block[i] < block[j])
        if inversions % 2:
            sign = -sign
        out.extend(sorted(block, reverse=True))
    return tuple(a - b for a, b in zip(out, rho)), sign


def decompose(c: Character) -> dict[Weight, int]:
    """Multiplicities of irreducibles in a Weyl-invariant character.

    Uses the alternating sum mult_lam = sum_w sign(w) c[w(lam+rho)-rho],
    evaluated by straightening each weight of ``c`` into the dominant chamber.
    """
    if not c.is_weyl_invariant():
        raise NotWeylInvariantError(f"character on {c.shape} is not invariant under its Weyl group")
    rho = c.shape.rho()
    out: dict[Weight, int] = defaultdict(int)
    for v, m in c.items():
        hit = _straighten(c.shape, v, rho)
        if hit is not None:
            lam, sign = hit
            out[lam] += sign * m
    return {lam: m for lam, m in sorted(out.items(), reverse=True) if m}


def recompose(shape: GroupShape, mults: Mapping[Sequence[int], int]) -> Character:
    total = Character(shape)
    for lam, m in mults.items():
        total = total + irreducible_character(shape, lam).scaled(m)
    return total


def multiplicity(c: Character, target: Sequence[int]) -> int:
    """Multiplicity of the single irreducible ``target`` in ``c``."""
    target = tuple(target)
    shape = c.shape
    if not shape.is_dominant(target):
        raise NonDominantWeightError(f"{format_weight(target, shape)} is not dominant for {shape}")
    rho = shape.rho()
    shifted = tuple(a + b for a, b in zip(target, rho))
    return sum(sign * c[tuple(a - b for a, b in zip(act(p, shifted), rho))] for p, sign in shape.weyl_group())


def pairing(xi: Sequence[int], w: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(xi, w))


@dataclass(frozen=True)
class GradedModule:
    """A module W with an integral functional pairing >= margin > 0 on each weight.

    The certificate is what makes Sym(W*) have finite multiplicities: the
    degree-d part pairs at most ``-d * margin`` with the grading.
    """

    char: Character
    grading: Weight
    margin: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "grading", tuple(self.grading))
        self.char.shape.check_length(self.grading)
        if self.margin <= 0:
            raise GradingViolationError(f"margin must be positive, got {self.margin}")
        for w, m in self.char.items():
            if m <= 0:
                raise GradingViolationError(f"weight {w} has non-positive multiplicity {m}")
            if pairing(self.grading, w) < self.margin:
                raise GradingViolationError(
                    f"weight {w} pairs to {pairing(self.grading, w)} with the grading, below margin {self.margin}"
                )

    @property
    def shape(self) -> GroupShape:
        return self.char.shape

    @property
    def dim(self) -> int:
        return self.char.dim


def degree_cutoff(W: GradedModule, boundary: Character, target: Sequence[int]) -> int:
    """First degree d whose layer of Sym(W*) (x) boundary cannot reach target.

    Weights of Sym^d(W*) (x) boundary pair at most B_boundary - d*t with the
    grading, while every alternating-sum lookup for ``target`` pairs at least
    B_target, so layers with B_boundary - d*t < B_target vanish.
    """
    xi, t = W.grading, W.margin
    rho = W.shape.rho()
    shifted = tuple(a + b for a, b in zip(target, rho))
    b_target = min(
        pairing(xi, tuple(a - b for a, b in zip(act(p, shifted), rho))) for p, _ in W.shape.weyl_group()
    )
    b_boundary = max(pairing(xi, r) for r in boundary)
    gap = b_boundary - b_target
    if gap < 0:
        return 0
    return gap // t + 1


def graded_sym_multiplicity(
    W: GradedModule,
    boundary: Character,
    target: Sequence[int],
    extra_layers: int = 0,
) -> int:
    """Multiplicity of V_target in Sym(W*) (x) boundary.

    Layers d = 0 .. cutoff are summed; the layer at the cutoff is computed and
    must vanish, otherwise :class:`CutoffError` is raised.
    """
    target = tuple(target)
    shape = W.shape
    if boundary.shape != shape:
        raise DimensionMismatchError(f"boundary lives on {boundary.shape}, module on {shape}")
    if not shape.is_dominant(target):
        raise NonDominantWeightError(f"{format_weight(target, shape)} is not dominant for {shape}")
    if not len(boundary):
        return 0
    d_max = degree_cutoff(W, boundary, target) + extra_layers
    layers = sym_layers(W.char, d_max)
    rho = shape.rho()
    shifted = tuple(a + b for a, b in zip(target, rho))
    lookups = [(sign, tuple(a - b for a, b in zip(act(p, shifted), rho))) for p, sign in shape.weyl_group()]
    bterms = list(boundary.items())
    total = 0
    for d, layer in enumerate(layers):
        # Sym^d(W*) has weight -x where x runs over Sym^d(W)
        contribution = 0
        for sign, v in lookups:
            for r, m in bterms:
                k = layer.get(tuple(a - b for a, b in zip(r, v)))
                if k:
                    contribution += sign * m * k
        if d >= d_max - extra_layers and contribution:
            raise CutoffError(f"degree {d} beyond the proven cutoff contributed {contribution}")
        total += contribution
    return total


def integral_grading(values: Sequence[Fraction], margin: Fraction) -> tuple[Weight, int]:
    """Clear denominators of a rational functional and its margin together."""
    den = math.lcm(*(Fraction(v).denominator for v in list(values) + [margin]))
    return tuple(int(Fraction(v) * den) for v in values), int(Fraction(margin) * den)
