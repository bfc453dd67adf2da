"""Interpolation matrices for linear systems with a fat point, and everything
rank-based built on them: system dimensions, superabundances h_{j,B}, random
zero-locus testing, kernel forms, and unexpectedness reports.

Layout of the square matrix M for the pair (d, m) at a point B: the s point
evaluation rows of the degree-d monomial vector, then the binom(m+N-1, N) rows
of its order-(m-1) partial derivatives evaluated at B.  M is square exactly
when binom(d+N, N) = binom(m+N-1, N) + s, and det M as a function of B cuts
out the locus where the system L(d; mB+Z) is nonempty.

The nested family M_1 c M_2 c ... c M_d dehomogenizes at a_0 = 1 and stacks,
under the s point rows, the derivative rows of orders 0..j-1 in the affine
variables; M_j therefore has s + binom(j-1+N, N) rows, its rows are a prefix
of the rows of M_{j+1}, and M_m has the same rank as M.  (The affine count
binom(j-1+N, N) is the number of multi-indices of order < j in N variables;
counting multi-indices over all N+1 variables instead would give
j*binom(j+N, N)/(N+1) rows, but derivatives involving the dehomogenized
variable are redundant once a_0 = 1, so the affine count is the one used.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import linalg
from .errors import DimensionMismatchError, EmptySystemError, NotSquareError, NotUniqueError
from .fields import CounterRng
from .monomials import derivative_indices, derivative_indices_upto, evaluate_row, monomial_basis
from .polynomials import HomogeneousPoly
from .projective import PointConfiguration


def square_size(N: int, d: int, m: int) -> int:
    """The point count s making M square; NotSquareError when nonpositive."""
    if not d >= m >= 1:
        raise ValueError("need d >= m >= 1")
    s = comb(d + N, N) - comb(m + N - 1, N)
    if s <= 0:
        raise NotSquareError(f"binom({d}+{N},{N}) - binom({m}+{N}-1,{N}) = {s} <= 0")
    return s


def degree_of_F(N: int, d: int, m: int) -> int:
    """Degree of det M in the coordinates of B: binom(m+N-1, N) * (d-m+1)."""
    if not d >= m >= 1:
        raise ValueError("need d >= m >= 1")
    return comb(m + N - 1, N) * (d - m + 1)


def point_rows(config: PointConfiguration, d: int) -> list[list]:
    """Evaluation rows of the degree-d monomial vector at the points of Z."""
    basis = monomial_basis(config.N, d)
    zero_idx = (0,) * (config.N + 1)
    return [evaluate_row(basis, zero_idx, q, config.field) for q in config.points]


def fat_point_rows(config_field, N: int, d: int, m: int, B) -> list[list]:
    """The binom(m+N-1, N) homogeneous order-(m-1) derivative rows at B."""
    basis = monomial_basis(N, d)
    return [
        evaluate_row(basis, idx, B, config_field)
        for idx in derivative_indices(N + 1, m - 1)
    ]


def square_matrix(config: PointConfiguration, d: int, m: int, B) -> list[list]:
    """The square interpolation matrix M(B); checks |Z| against the square size."""
    s = square_size(config.N, d, m)
    if len(config) != s:
        raise NotSquareError(f"|Z| = {len(config)} but the square size is {s}")
    if len(B) != config.N + 1:
        raise DimensionMismatchError("B needs N+1 coordinates")
    return point_rows(config, d) + fat_point_rows(config.field, config.N, d, m, B)


@dataclass(frozen=True)
class InterpolationChain:
    """The stacked affine matrices M_1 c ... c M_d at a numeric point B.

    ``rows`` holds the rows of M_d: the s point rows followed by the affine
    derivative rows in order of ascending derivative order; the rows of M_j
    are the prefix of length s + binom(j-1+N, N).  ``chart_shift`` records the
    cyclic coordinate relabeling applied (to Z and B alike) when the first
    coordinate of B was zero; relabeling is invertible so every rank is that
    of the original system.
    """

    config: PointConfiguration
    d: int
    B: tuple
    chart_shift: int
    rows: tuple

    @property
    def N(self) -> int:
        return self.config.N

    @property
    def s(self) -> int:
        return len(self.config)

    def num_rows(self, j: int) -> int:
        return self.s + comb(j - 1 + self.N, self.N)

    def matrix(self, j: int) -> list:
        if not 1 <= j <= self.d:
            raise ValueError(f"j must be in 1..{self.d}")
        return list(self.rows[: self.num_rows(j)])

    def ranks(self) -> list[int]:
        """rank M_j for j = 1..d, from one incremental elimination pass."""
        prefix = linalg.prefix_ranks(list(self.rows), self.config.field)
        return [prefix[self.num_rows(j) - 1] for j in range(1, self.d + 1)]


def build_chain(config: PointConfiguration, d: int, B, m: int | None = None) -> InterpolationChain:
    """Assemble M_1 c ... c M_d at the point B (N+1 homogeneous coordinates).

    ``m`` is accepted for interface symmetry; the chain itself extends to j = d
    regardless, with M_m the square matrix when |Z| matches the square size.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    field = config.field
    if len(B) != config.N + 1:
        raise DimensionMismatchError("B needs N+1 coordinates")
    Bv = [field.coerce(c) for c in B]
    shift = next((k for k, c in enumerate(Bv) if not field.is_zero(c)), None)
    if shift is None:
        raise ValueError("B must be a nonzero projective point")
    work = config if shift == 0 else config.shifted(shift)
    Bs = Bv[shift:] + Bv[:shift]
    inv = field.inv(Bs[0])
    affine_B = tuple(field.mul(c, inv) for c in Bs[1:])

    basis = monomial_basis(config.N, d)
    rows = point_rows(work, d)
    for idx in derivative_indices_upto(config.N, d - 1):
        rows.append(evaluate_row(basis, idx, affine_B, field))
    return InterpolationChain(
        config=work, d=d, B=tuple(Bv), chart_shift=shift, rows=tuple(map(tuple, rows))
    )


def matrix_json(rows, field) -> list[list[str]]:
    """Row-major dump with every entry as a decimal string, so consumers never
    face 64-bit overflow."""
    return [[field.to_str(x) for x in row] for row in rows]


@dataclass(frozen=True)
class SystemDims:
    """dim L(d; jB+Z) together with its virtual dimension and superabundance."""

    d: int
    j: int
    dim: int
    vdim: int
    h: int


def _dims_from_ranks(N: int, d: int, m: int, s: int, ranks: list[int]) -> list[SystemDims]:
    ncols = comb(d + N, N)
    out = []
    for j in range(1, d + 1):
        dim = ncols - ranks[j - 1]
        vdim = ncols - comb(j + N - 1, N) - s
        h = dim - vdim if j <= m else dim
        out.append(SystemDims(d=d, j=j, dim=dim, vdim=vdim, h=h))
    return out


def dim_system(config: PointConfiguration, d: int, m: int, j: int, B) -> SystemDims:
    """Dimension bookkeeping for L(d; jB+Z) at a numeric B.

    h is dim - vdim for j <= m and dim for j > m; either way it equals the
    rank deficiency min(rows, cols) - rank of M_j(B).
    """
    if not 1 <= j <= d:
        raise ValueError("need 1 <= j <= d")
    chain = build_chain(config, d, B)
    return _dims_from_ranks(config.N, d, m, len(config), chain.ranks())[j - 1]


def all_dims(config: PointConfiguration, d: int, m: int, B) -> list[SystemDims]:
    chain = build_chain(config, d, B)
    return _dims_from_ranks(config.N, d, m, len(config), chain.ranks())


def h_total(config: PointConfiguration, d: int, m: int, B) -> int:
    """h_B = sum of h_{j,B} over j = 1..d; lower-bounds the multiplicity of B
    in the zero set of det M."""
    s = square_size(config.N, d, m)
    if len(config) != s:
        raise NotSquareError(f"|Z| = {len(config)} but the square size is {s}")
    return sum(sd.h for sd in all_dims(config, d, m, B))


@dataclass(frozen=True)
class ZeroLocusVerdict:
    """Outcome of random determinant evaluation (polynomial identity testing).

    ``ProbablyZero`` carries the Schwartz-Zippel error bound
    (deg F / p)^trials; ``NonzeroWitness`` carries a point where det M != 0,
    which proves F is not identically zero.
    """

    kind: str  # "ProbablyZero" | "NonzeroWitness"
    trials: int
    seed: int
    prime: int
    error_bound: Fraction | None = None
    witness: tuple | None = None
    witness_trial: int | None = None

    @property
    def probably_zero(self) -> bool:
        return self.kind == "ProbablyZero"


def zero_locus_test(
    config: PointConfiguration, d: int, m: int, trials: int = 20, seed: int = 0
) -> ZeroLocusVerdict:
    """Evaluate det M(B) at ``trials`` uniform points of the chart a_0 = 1.

    Any nonzero value is returned as a witness.  All-zero yields ProbablyZero
    with error bound (deg F / p)^trials; the sampled set depends only on
    (seed, trial index), not on evaluation order.
    """
    field = config.field
    if field.kind != "Prime":
        raise ValueError("zero_locus_test runs over a prime field")
    s = square_size(config.N, d, m)
    if len(config) != s:
        raise NotSquareError(f"|Z| = {len(config)} but the square size is {s}")
    rows_z = point_rows(config, d)
    rng = CounterRng(seed, ("zero-locus", d, m))
    deg = degree_of_F(config.N, d, m)
    for t in range(trials):
        B = (1,) + rng.affine_point(field, config.N, t)
        mat = rows_z + fat_point_rows(field, config.N, d, m, B)
        if linalg.det_mod(mat, field.p) != 0:
            return ZeroLocusVerdict(
                kind="NonzeroWitness",
                trials=trials,
                seed=seed,
                prime=field.p,
                witness=B,
                witness_trial=t,
            )
    return ZeroLocusVerdict(
        kind="ProbablyZero",
        trials=trials,
        seed=seed,
        prime=field.p,
        error_bound=Fraction(deg, field.p) ** trials,
    )


def kernel_form(config: PointConfiguration, d: int, m: int, B) -> HomogeneousPoly:
    """The unique degree-d form through Z with an m-fold point at B, when the
    system L(d; mB+Z) is exactly one-dimensional.

    Raises EmptySystemError when the system is empty and NotUniqueError(dim)
    when it has dimension above one.  The returned form is re-verified by
    direct evaluation: it vanishes at every point of Z and all its
    order-(m-1) partials vanish at B.
    """
    field = config.field
    if len(B) != config.N + 1:
        raise DimensionMismatchError("B needs N+1 coordinates")
    Bv = tuple(field.coerce(c) for c in B)
    mat = point_rows(config, d) + fat_point_rows(field, config.N, d, m, Bv)
    basis = linalg.nullspace(mat, field)
    if len(basis) == 0:
        raise EmptySystemError(f"L({d}; {m}B+Z) is empty at this B")
    if len(basis) > 1:
        raise NotUniqueError(len(basis))
    mono = monomial_basis(config.N, d)
    terms = {
        e: c for e, c in zip(mono.entries, basis[0]) if not field.is_zero(field.coerce(c))
    }
    form = HomogeneousPoly(config.N, d, terms, field)
    for q in config.points:
        if not field.is_zero(form.evaluate(q)):
            raise AssertionError("kernel form fails to vanish on Z")
    for idx in derivative_indices(config.N + 1, m - 1):
        if not field.is_zero(form.partial_at(idx, Bv)):
            raise AssertionError("kernel form fails the multiplicity condition at B")
    return form


def ideal_dimension(config: PointConfiguration, d: int) -> int:
    """dim of the degree-d part of the ideal of Z: binom(d+N, N) minus the
    rank of the point evaluation rows."""
    return comb(d + config.N, config.N) - linalg.rank(point_rows(config, d), config.field)


@dataclass(frozen=True)
class UnexpectednessReport:
    """Comparison of the actual generic dimension of L(d; mB+Z) with the naive
    conditions count."""

    N: int
    d: int
    m: int
    s: int
    dim_ideal_d: int
    independent: bool
    conditions_B: int  # binom(m+N-1, N), the conditions an m-fold point imposes
    generic_dim: int
    expected: int
    actual: int
    unexpected: bool
    trials: int
    seed: int
    warnings: tuple = ()

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "d": self.d,
            "m": self.m,
            "s": self.s,
            "dim_ideal_d": self.dim_ideal_d,
            "independent_conditions": self.independent,
            "conditions_of_fat_point": self.conditions_B,
            "generic_dim": self.generic_dim,
            "expected": self.expected,
            "actual": self.actual,
            "unexpected": self.unexpected,
            "trials": self.trials,
            "seed": self.seed,
            "warnings": list(self.warnings),
        }


def unexpectedness_report(
    config: PointConfiguration, d: int, m: int, trials: int = 20, seed: int = 0
) -> UnexpectednessReport:
    """Decide whether imposing an m-fold general point on the degree-d forms
    through Z drops fewer conditions than expected.

    The generic dimension of L(d; mB+Z) is taken as the minimum over ``trials``
    random B: the dimension is upper-semicontinuous in B, so every sample only
    over-estimates the generic value.
    """
    field = config.field
    N, s = config.N, len(config)
    ncols = comb(d + N, N)
    dim_ideal = ideal_dimension(config, d)
    independent = dim_ideal == ncols - s
    conditions_B = comb(m + N - 1, N)
    rng = CounterRng(seed, ("unexpected", d, m))
    generic = None
    for t in range(trials):
        B = (1,) + rng.affine_point(field, N, t) if field.kind == "Prime" else None
        if B is None:
            # rational configs sample small integer points deterministically
            sub = rng.split("ratpt", t)
            B = (1,) + tuple(
                Fraction(sub.draw_below(2**31, j) - 2**30) for j in range(N)
            )
        dims = dim_system(config, d, m, m, B)
        generic = dims.dim if generic is None else min(generic, dims.dim)
    expected = max(0, dim_ideal - conditions_B)
    warnings = () if independent else ("DependentConditions",)
    return UnexpectednessReport(
        N=N,
        d=d,
        m=m,
        s=s,
        dim_ideal_d=dim_ideal,
        independent=independent,
        conditions_B=conditions_B,
        generic_dim=generic,
        expected=expected,
        actual=generic,
        unexpected=generic > expected,
        trials=trials,
        seed=seed,
        warnings=warnings,
    )
