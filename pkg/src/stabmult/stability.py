"""Stability of branching multiplicities along stretched directions.

Three families are covered, all as restrictions along a morphism G -> G~:

* Kronecker: U(E) x U(F) -> U(E (x) F), directions given by additive matrices;
* Littlewood-Richardson: U(n) diagonally in U(n) x U(n);
* plethysm: U(2) acting on Sym^k(C^2).

For each, a stretched sequence m(y + n x) is computed directly from the
combinatorial engines, and its limit is computed independently as a
multiplicity in Sym(W*) (x) boundary over the stabilizer of the direction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .errors import (
    DimensionMismatchError,
    GradingViolationError,
    LengthError,
    NegativeMultiplicityError,
    NonAdditiveMatrixError,
    NonDominantWeightError,
    NonPartitionError,
    SizeMismatchError,
    WindowError,
)
from .liechar import (
    Character,
    GradedModule,
    GroupShape,
    Weight,
    decompose,
    graded_sym_multiplicity,
    integral_grading,
    irreducible_character,
    pairing,
    restrict_character,
)
from .lp import maximize
from .partitions import Partition, lr_weights
from .symchar import kronecker

DEFAULT_WINDOW = 3


# -- data types ----------------------------------------------------------------

@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        if any(v < 0 for r in rows for v in r):
            raise ValueError("matrix entries must be non-negative")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "IntegerMatrix":
        """``"1,0;0,0"``: rows separated by ``;``, entries by ``,``."""
        return cls(tuple(tuple(int(v) for v in row.split(",")) for row in text.strip().split(";")))

    def __str__(self) -> str:
        return ";".join(",".join(str(v) for v in r) for r in self.rows)

    @property
    def dim_e(self) -> int:
        return len(self.rows)

    @property
    def dim_f(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.rows[ij[0]][ij[1]]

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.dim_e) for j in range(self.dim_f)]

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(r[j] for r in self.rows) for j in range(self.dim_f))

    def strict_pairs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        cells = self.cells()
        return [(p, q) for p in cells for q in cells if self[p] > self[q]]

    def sorted_cells(self) -> list[tuple[int, int]]:
        """Cells by decreasing entry, ties lexicographic in (i, j)."""
        return sorted(self.cells(), key=lambda ij: (-self[ij], ij))

    def canonical(self) -> tuple["IntegerMatrix", list[int], list[int]]:
        """Rows and columns stably sorted by decreasing sums, with the permutations used."""
        rs, cs = self.row_sums(), self.col_sums()
        rperm = sorted(range(self.dim_e), key=lambda i: -rs[i])
        cperm = sorted(range(self.dim_f), key=lambda j: -cs[j])
        return IntegerMatrix(tuple(tuple(self.rows[i][j] for j in cperm) for i in rperm)), rperm, cperm


def _frac(v: Fraction) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class AdditivityCertificate:
    """Rational functional (x, y) with x_i + y_j - x_k - y_l >= margin on strict pairs.

    For a plain adaptedness check ``y`` is empty and ``x`` is the whole
    functional.
    """

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    margin: Fraction

    @property
    def functional(self) -> tuple[Fraction, ...]:
        return tuple(self.x) + tuple(self.y)

    def verify(self, A: IntegerMatrix) -> bool:
        if len(self.x) != A.dim_e or len(self.y) != A.dim_f or self.margin <= 0:
            return False
        return all(
            self.x[i] + self.y[j] - self.x[k] - self.y[l] >= self.margin for (i, j), (k, l) in A.strict_pairs()
        )

    def to_dict(self) -> dict:
        return {"x": [_frac(v) for v in self.x], "y": [_frac(v) for v in self.y], "margin": _frac(self.margin)}


@dataclass(frozen=True)
class KronTriple:
    alpha: Partition
    beta: Partition
    gamma: Partition

    def __post_init__(self) -> None:
        if not self.alpha.size == self.beta.size == self.gamma.size:
            raise SizeMismatchError("triple entries must have equal sizes")

    def __str__(self) -> str:
        return f"{self.alpha}|{self.beta}|{self.gamma}"


@dataclass
class StretchReport:
    """A computed stretched sequence m(y + n x), n = 0 .. n_max.

    A plateau is what was observed on the computed range, not a proof of
    stabilization.
    """

    direction: dict
    offsets: dict
    values: list[int]
    window: int = DEFAULT_WINDOW
    plateau: tuple[int, int] | None = None
    predicted_limit: int | None = None
    agreement: bool | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def finish(self) -> "StretchReport":
        if len(self.values) >= self.window:
            self.plateau = detect_plateau(self.values, self.window)
        else:
            self.warnings.append(f"only {len(self.values)} values, fewer than the plateau window {self.window}")
        if self.plateau is not None and self.predicted_limit is not None:
            self.agreement = self.plateau[1] == self.predicted_limit
        elif self.predicted_limit is not None:
            self.warnings.append(f"no plateau observed up to n = {self.n_max}")
        return self

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "offsets": self.offsets,
            "n_max": self.n_max,
            "window": self.window,
            "values": list(self.values),
            "plateau": list(self.plateau) if self.plateau else None,
            "predicted_limit": self.predicted_limit,
            "agreement": self.agreement,
            "observation": f"finite range n <= {self.n_max}",
        }


# -- plateau detection ---------------------------------------------------------

def detect_plateau(values: Sequence[int], window: int = DEFAULT_WINDOW) -> tuple[int, int] | None:
    """``(n0, v)`` if the last ``window`` values all equal v; n0 starts the constant tail."""
    if window < 2 or window > len(values):
        raise WindowError(f"window {window} must be in [2, {len(values)}]")
    v = values[-1]
    if any(x != v for x in values[-window:]):
        return None
    n0 = len(values) - 1
    while n0 > 0 and values[n0 - 1] == v:
        n0 -= 1
    return n0, v


# -- adaptedness ---------------------------------------------------------------

def is_adapted(
    positive_pairing_roots: Sequence[Sequence[int]],
    torus_map: Sequence[Sequence[int]],
) -> AdditivityCertificate | None:
    """Find xi with <pi(alpha), xi> >= t > 0 for every listed root, or None.

    Solves  max t  s.t.  <pi(alpha), xi> >= t,  |xi_i| <= 1,  0 <= t <= 1  exactly;
    the roots' images lie in an open half space iff the optimum is positive.
    """
    rows = [tuple(r) for r in torus_map]
    source = len(rows[0]) if rows else 0
    if any(len(r) != source for r in rows):
        raise DimensionMismatchError("ragged torus map")
    images = []
    for root in positive_pairing_roots:
        if len(root) != source:
            raise DimensionMismatchError(f"root {tuple(root)} does not have length {source}")
        images.append(tuple(sum(a * x for a, x in zip(r, root)) for r in rows))
    dim = len(rows)
    # variables: xi_plus (dim), xi_minus (dim), t
    A, b = [], []
    for p in images:
        A.append([-v for v in p] + list(p) + [1])
        b.append(0)
    for i in range(2 * dim + 1):
        A.append([int(i == j) for j in range(2 * dim + 1)])
        b.append(1)
    c = [0] * (2 * dim) + [1]
    t, x = maximize(c, A, b)
    if t <= 0:
        return None
    xi = tuple(x[i] - x[dim + i] for i in range(dim))
    assert all(sum(a * v for a, v in zip(p, xi)) >= t for p in images), "LP returned an unsound certificate"
    return AdditivityCertificate(xi, (), t)


def kron_torus_map(dim_e: int, dim_f: int, cells: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Matrix of theta_ij -> e_i + f_j, columns following ``cells``."""
    out = [[0] * len(cells) for _ in range(dim_e + dim_f)]
    for col, (i, j) in enumerate(cells):
        out[i][col] = 1
        out[dim_e + j][col] = 1
    return out


def is_additive(A: IntegerMatrix) -> AdditivityCertificate | None:
    cells = A.cells()
    index = {ij: n for n, ij in enumerate(cells)}
    roots = []
    for p, q in A.strict_pairs():
        root = [0] * len(cells)
        root[index[p]] += 1
        root[index[q]] -= 1
        roots.append(root)
    cert = is_adapted(roots, kron_torus_map(A.dim_e, A.dim_f, cells))
    if cert is None:
        return None
    xi = cert.x
    cert = AdditivityCertificate(tuple(xi[: A.dim_e]), tuple(xi[A.dim_e:]), cert.margin)
    assert cert.verify(A)
    return cert


def triple_from_matrix(A: IntegerMatrix) -> KronTriple:
    return KronTriple(
        Partition(sorted(A.row_sums(), reverse=True)),
        Partition(sorted(A.col_sums(), reverse=True)),
        Partition(sorted((v for r in A.rows for v in r), reverse=True)),
    )


# -- Kronecker family ----------------------------------------------------------

def _runs(values: Sequence[int]) -> GroupShape:
    """Block shape of the runs of equal consecutive values."""
    blocks = []
    for i, v in enumerate(values):
        if i and v == values[i - 1]:
            blocks[-1] += 1
        else:
            blocks.append(1)
    return GroupShape(tuple(blocks))


def _symmetrize(values: Sequence[Fraction], shape: GroupShape) -> tuple[Fraction, ...]:
    out = []
    for r in shape.ranges():
        avg = sum((Fraction(values[i]) for i in r), Fraction(0)) / len(r)
        out.extend([avg] * len(r))
    return tuple(out)


def _canonical_with_cert(
    A: IntegerMatrix, cert: AdditivityCertificate
) -> tuple[IntegerMatrix, AdditivityCertificate]:
    C, rperm, cperm = A.canonical()
    moved = AdditivityCertificate(tuple(cert.x[i] for i in rperm), tuple(cert.y[j] for j in cperm), cert.margin)
    if not moved.verify(C):
        raise ValueError("certificate does not certify the matrix")
    # average over the stabilizer's Weyl group; the strict-pair system is invariant under it
    sym = AdditivityCertificate(
        _symmetrize(moved.x, _runs(C.row_sums())), _symmetrize(moved.y, _runs(C.col_sums())), moved.margin
    )
    return C, (sym if sym.verify(C) else moved)


def h_shape(A: IntegerMatrix) -> GroupShape:
    """Stabilizer of pi(A) in U(E) x U(F); A must have sorted row and column sums."""
    return GroupShape(_runs(A.row_sums()).blocks + _runs(A.col_sums()).blocks)


def h_tilde_shape(A: IntegerMatrix) -> GroupShape:
    """Stabilizer of A in U(E (x) F), coordinates in :meth:`IntegerMatrix.sorted_cells` order."""
    return _runs([A[ij] for ij in A.sorted_cells()])


def kron_module_WA(A: IntegerMatrix, cert: AdditivityCertificate) -> GradedModule:
    """The H_A-module W_A: nilradical of A modulo the image of the nilradical of pi(A).

    Coordinates follow rows and columns of ``A`` sorted by decreasing sums.
    """
    C, cert = _canonical_with_cert(A, cert)
    m, n = C.dim_e, C.dim_f
    alpha, beta = C.row_sums(), C.col_sums()
    terms: dict[Weight, int] = {}

    def bump(w: list[int], k: int) -> None:
        key = tuple(w)
        terms[key] = terms.get(key, 0) + k

    for (i, j), (k, l) in C.strict_pairs():
        w = [0] * (m + n)
        w[i] += 1
        w[k] -= 1
        w[m + j] += 1
        w[m + l] -= 1
        bump(w, 1)
    for i in range(m):
        for k in range(m):
            if alpha[i] > alpha[k]:
                w = [0] * (m + n)
                w[i], w[k] = 1, -1
                bump(w, -1)
    for j in range(n):
        for l in range(n):
            if beta[j] > beta[l]:
                w = [0] * (m + n)
                w[m + j], w[m + l] = 1, -1
                bump(w, -1)
    bad = {w: v for w, v in terms.items() if v < 0}
    if bad:
        raise NegativeMultiplicityError(f"image of the small nilradical is not injective at weights {bad}")
    grading, margin = integral_grading(cert.functional, cert.margin)
    return GradedModule(Character(h_shape(C), terms), grading, margin)


def _check_lengths(a: Partition, b: Partition, c: Partition, dim_e: int, dim_f: int) -> None:
    if not a.size == b.size == c.size:
        raise SizeMismatchError(f"offsets must have equal sizes, got {a.size}, {b.size}, {c.size}")
    if a.length > dim_e or b.length > dim_f or c.length > dim_e * dim_f:
        raise LengthError(f"offsets ({a}), ({b}), ({c}) do not fit dimensions {dim_e} x {dim_f}")


def stretch(base: Sequence[int], direction: Sequence[int], n: int) -> tuple[int, ...]:
    """``base + n * direction`` on padded vectors; must stay weakly decreasing."""
    size = max(len(base), len(direction))
    b = tuple(base) + (0,) * (size - len(base))
    d = tuple(direction) + (0,) * (size - len(direction))
    out = tuple(x + n * y for x, y in zip(b, d))
    if any(out[i] < out[i + 1] for i in range(size - 1)):
        raise NonPartitionError(f"{b} + {n}*{d} = {out} is not weakly decreasing")
    return out


def _kron_values(triples: list[tuple[Partition, Partition, Partition]]) -> list[int]:
    return [kronecker(*t) for t in triples]


def kron_stretched_sequence(
    a: Sequence[int],
    b: Sequence[int],
    c: Sequence[int],
    A: IntegerMatrix,
    n_max: int,
    window: int = DEFAULT_WINDOW,
    allow_non_additive: bool = False,
    evaluate: Callable[[list], list[int]] | None = None,
) -> StretchReport:
    """values[n] = g(a + n alpha_A, b + n beta_A, c + n gamma_A) for n = 0 .. n_max.

    ``evaluate`` maps a list of partition triples to their Kronecker
    coefficients; callers use it to add caching or a process pool.
    """
    a, b, c = Partition(a), Partition(b), Partition(c)
    _check_lengths(a, b, c, A.dim_e, A.dim_f)
    cert = is_additive(A)
    if cert is None and not allow_non_additive:
        raise NonAdditiveMatrixError(f"matrix {A} is not additive")
    t = triple_from_matrix(A)
    triples = [
        (Partition(stretch(a, t.alpha, n)), Partition(stretch(b, t.beta, n)), Partition(stretch(c, t.gamma, n)))
        for n in range(n_max + 1)
    ]
    values = (evaluate or _kron_values)(triples)
    report = StretchReport(
        direction={"family": "kron", "matrix": str(A), "triple": str(t)},
        offsets={"a": str(a), "b": str(b), "c": str(c)},
        values=list(values),
        window=window,
    )
    if cert is None:
        report.warnings.append("matrix is not additive; no limit formula applies")
    else:
        report.predicted_limit = kron_limit(a, b, c, A)
    return report.finish()


def kron_limit(a: Sequence[int], b: Sequence[int], c: Sequence[int], A: IntegerMatrix) -> int:
    """Limit of the stretched Kronecker sequence, as a multiplicity in Sym(W_A*) (x) V_c."""
    a, b, c = Partition(a), Partition(b), Partition(c)
    _check_lengths(a, b, c, A.dim_e, A.dim_f)
    cert = is_additive(A)
    if cert is None:
        raise NonAdditiveMatrixError(f"matrix {A} is not additive")
    W = kron_module_WA(A, cert)
    C, _, _ = A.canonical()
    m, n = C.dim_e, C.dim_f
    cells = C.sorted_cells()
    upper = irreducible_character(h_tilde_shape(C), c.padded(m * n))
    boundary = restrict_character(upper, kron_torus_map(m, n, cells), W.shape)
    target = a.padded(m) + b.padded(n)
    return graded_sym_multiplicity(W, boundary, target)


# -- Littlewood-Richardson family ----------------------------------------------

def _dominant(w: Sequence[int], what: str) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise NonDominantWeightError(f"{what} = {w} is not dominant")
    return w


def lr_module_W(mu1: Sequence[int], mu2: Sequence[int]) -> GradedModule:
    """Root spaces pairing positively with both mu1 and mu2, as a G_mu-module."""
    mu1, mu2 = _dominant(mu1, "mu1"), _dominant(mu2, "mu2")
    if len(mu1) != len(mu2):
        raise DimensionMismatchError("mu1 and mu2 must have the same length")
    n = len(mu1)
    mu = tuple(x + y for x, y in zip(mu1, mu2))
    terms = {}
    for i in range(n):
        for j in range(n):
            if mu1[i] > mu1[j] and mu2[i] > mu2[j]:
                w = [0] * n
                w[i], w[j] = 1, -1
                terms[tuple(w)] = 1
    margin = min((pairing(mu, w) for w in terms), default=1)
    return GradedModule(Character(_runs(mu), terms), mu, margin)


def _lr_inputs(a, b, c, mu1, mu2):
    mu1, mu2 = _dominant(mu1, "mu1"), _dominant(mu2, "mu2")
    if len(mu1) != len(mu2):
        raise DimensionMismatchError("mu1 and mu2 must have the same length")
    n = len(mu1)
    a, b, c = Partition(a), Partition(b), Partition(c)
    if max(a.length, b.length, c.length) > n:
        raise LengthError(f"offsets must have at most {n} parts")
    if a.size != b.size + c.size:
        raise SizeMismatchError(f"|a| = {a.size} differs from |b| + |c| = {b.size + c.size}")
    return a.padded(n), b.padded(n), c.padded(n), mu1, mu2


def lr_stretched_sequence(
    a: Sequence[int],
    b: Sequence[int],
    c: Sequence[int],
    mu1: Sequence[int],
    mu2: Sequence[int],
    n_max: int,
    window: int = DEFAULT_WINDOW,
) -> StretchReport:
    """values[n] = multiplicity of V_{a+n(mu1+mu2)} in V_{b+n mu1} (x) V_{c+n mu2}."""
    a, b, c, mu1, mu2 = _lr_inputs(a, b, c, mu1, mu2)
    mu = tuple(x + y for x, y in zip(mu1, mu2))
    values = [lr_weights(stretch(a, mu, k), stretch(b, mu1, k), stretch(c, mu2, k)) for k in range(n_max + 1)]
    report = StretchReport(
        direction={"family": "lr", "mu1": list(mu1), "mu2": list(mu2)},
        offsets={"a": list(a), "b": list(b), "c": list(c)},
        values=values,
        window=window,
        predicted_limit=lr_limit(a, b, c, mu1, mu2),
    )
    return report.finish()


def lr_limit(a, b, c, mu1, mu2) -> int:
    """Limit multiplicity over G_mu: Sym(W*) (x) V^{G_mu1}_b (x) V^{G_mu2}_c against V^{G_mu}_a."""
    a, b, c, mu1, mu2 = _lr_inputs(a, b, c, mu1, mu2)
    W = lr_module_W(mu1, mu2)
    left = irreducible_character(_runs(mu1), b).on_shape(W.shape)
    right = irreducible_character(_runs(mu2), c).on_shape(W.shape)
    return graded_sym_multiplicity(W, left * right, a)


# -- plethysm family: U(2) acting on Sym^k(C^2) --------------------------------

def plethysm_torus_map(k: int) -> list[list[int]]:
    """Basis vector j of Sym^k(C^2) has U(2)-weight (k - j, j), j = 0 .. k."""
    return [[k - j for j in range(k + 1)], [j for j in range(k + 1)]]


U2 = GroupShape((2,))


@lru_cache(maxsize=None)
def _sym_k_decomposition(k: int, theta: Partition) -> dict[Weight, int]:
    upper = irreducible_character(GroupShape((k + 1,)), theta.padded(k + 1))
    return decompose(restrict_character(upper, plethysm_torus_map(k), U2))


def plethysm_restriction_multiplicity(k: int, theta: Sequence[int], lam: Sequence[int]) -> int:
    """[V_lam : S_theta(Sym^k C^2)] for the U(2)-irreducible with highest weight lam."""
    if k < 1:
        raise ValueError("k must be at least 1")
    theta = Partition(theta)
    if theta.length > k + 1:
        raise LengthError(f"S_{theta} vanishes on a space of dimension {k + 1}")
    lam = _dominant(lam, "lambda")
    if len(lam) != 2:
        raise DimensionMismatchError("lambda must be a U(2) weight")
    if sum(lam) != k * theta.size:
        return 0
    return _sym_k_decomposition(k, theta).get(lam, 0)


def _sigma_data(k: int, sigma: Sequence[int]) -> tuple[tuple[int, ...], GroupShape, tuple[int, int]]:
    sigma = Partition(sigma)
    if sigma.length > k + 1:
        raise LengthError(f"sigma = ({sigma}) has more than {k + 1} parts")
    s = sigma.padded(k + 1)
    mu = (sum(x * (k - j) for j, x in enumerate(s)), sum(x * j for j, x in enumerate(s)))
    return s, _runs(s), mu


def plethysm_module_Wsigma(k: int, sigma: Sequence[int]) -> GradedModule:
    """W_sigma = nilradical of sigma in gl(Sym^k C^2) modulo the image of n_mu."""
    s, _, mu = _sigma_data(k, sigma)
    terms: dict[Weight, int] = {}
    for i in range(k + 1):
        for j in range(k + 1):
            if s[i] > s[j]:
                # alpha_i - alpha_j with alpha_j = (k - j, j)
                w = (j - i, i - j)
                terms[w] = terms.get(w, 0) + 1
    if mu[0] > mu[1]:
        terms[(1, -1)] = terms.get((1, -1), 0) - 1
    bad = {w: v for w, v in terms.items() if v < 0}
    if bad:
        raise NegativeMultiplicityError(f"image of n_mu is not injective at weights {bad}")
    shape = GroupShape((1, 1)) if mu[0] > mu[1] else U2
    margin = min((pairing(mu, w) for w, v in terms.items() if v), default=1)
    if margin <= 0:
        raise GradingViolationError(f"mu = {mu} does not grade W_sigma positively")
    return GradedModule(Character(shape, terms), mu, margin)


def plethysm_limit(k: int, sigma: Sequence[int], lam: Sequence[int], theta: Sequence[int]) -> int:
    """Multiplicity of V^{G_mu}_lam in Sym(W_sigma*) (x) the blockwise S_theta[i](V_[i])."""
    s, blocks, _ = _sigma_data(k, sigma)
    W = plethysm_module_Wsigma(k, sigma)
    theta = Partition(theta)
    if theta.length > k + 1:
        raise LengthError(f"theta = ({theta}) has more than {k + 1} parts")
    upper = irreducible_character(blocks, theta.padded(k + 1))
    boundary = restrict_character(upper, plethysm_torus_map(k), W.shape)
    return graded_sym_multiplicity(W, boundary, _dominant(lam, "lambda"))


def plethysm_stability_report(
    k: int,
    sigma: Sequence[int],
    lam: Sequence[int],
    theta: Sequence[int],
    n_max: int,
    window: int = DEFAULT_WINDOW,
) -> StretchReport:
    """values[n] = [V_{lam + n mu} : S_{theta + n sigma}(Sym^k C^2)] with mu = pi(sigma)."""
    s, _, mu = _sigma_data(k, sigma)
    theta = Partition(theta)
    lam = _dominant(lam, "lambda")
    if len(lam) != 2:
        raise DimensionMismatchError("lambda must be a U(2) weight")
    values = [
        plethysm_restriction_multiplicity(k, Partition(stretch(theta, s, n)), stretch(lam, mu, n))
        for n in range(n_max + 1)
    ]
    report = StretchReport(
        direction={"family": "plethysm", "k": k, "sigma": str(Partition(sigma)), "mu": list(mu)},
        offsets={"theta": str(theta), "lambda": list(lam)},
        values=values,
        window=window,
    )
    try:
        report.predicted_limit = plethysm_limit(k, sigma, lam, theta)
    except GradingViolationError as exc:
        report.warnings.append(f"no positive grading on the quotient module, limit not predicted: {exc}")
    return report.finish()
