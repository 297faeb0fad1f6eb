"""Benchmark correlations, closed-form certificates, and oracle families.

Two families of projections are of special interest: symmetric
informationally complete ones (d^2 rank-one projections with constant
pairwise overlap, summing to d times the identity) and maximal sets of
mutually unbiased bases (d+1 orthonormal bases with constant cross-basis
overlap).  Each determines a correlation whose level-1 certificate is
known in closed form, including an explicit triangular factorization and
eigensystem.  Whether the level-2 extension admits a matricially spanning
completion is exactly the existence question for these objects in a given
dimension; this module ships the correlations, the closed forms,
reference families in small dimensions (as oracles and fixtures, not as
claims about open cases), and a search harness over level-2 feasible
points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .certificate import (
    REAL,
    Certificate,
    Correlation,
    from_projections,
    level1_certificate,
)
from .solver import SolverConfig, SolverReport, solve_feasibility
from .spanning import SpanningReport, check_matricially_spanning
from .words import enumerate_words


def _check_dim(d: int) -> None:
    if d < 2:
        raise ValueError("dimension d must be at least 2")


def p_sic(d: int) -> Correlation:
    """Correlation of a symmetric informationally complete family:
    N = d^2 questions, diagonal 1/d, off-diagonal 1/(d(d+1))."""
    _check_dim(d)
    n = d * d
    diag = float(Fraction(1, d))
    off = float(Fraction(1, d * (d + 1)))
    p = np.full((n, n), off)
    np.fill_diagonal(p, diag)
    return Correlation(p)


@dataclass(frozen=True)
class MubIndex:
    """Basis-major flattening of the (basis, vector) index pair.

    Bases are numbered 1..d+1 and vectors within a basis 1..d; the flat
    position is (x-1)*d + i, also 1-based.
    """

    x: int
    i: int

    def flatten(self, d: int) -> int:
        if not (1 <= self.x <= d + 1 and 1 <= self.i <= d):
            raise ValueError(f"index {self} out of range for dimension {d}")
        return (self.x - 1) * d + self.i

    @classmethod
    def from_flat(cls, position: int, d: int) -> "MubIndex":
        if not 1 <= position <= d * (d + 1):
            raise ValueError(f"flat position {position} out of range for dimension {d}")
        x, i = divmod(position - 1, d)
        return cls(x + 1, i + 1)


def p_mub(d: int) -> Correlation:
    """Correlation of d+1 mutually unbiased bases: N = d(d+1) questions,
    1/d on the diagonal, 0 within a basis, 1/d^2 across bases."""
    _check_dim(d)
    n = d * (d + 1)
    cross = float(Fraction(1, d * d))
    diag = float(Fraction(1, d))
    p = np.full((n, n), cross)
    for x in range(d + 1):
        block = slice(x * d, (x + 1) * d)
        p[block, block] = 0.0
        for i in range(x * d, (x + 1) * d):
            p[i, i] = diag
    return Correlation(p)


def sic_level1(d: int) -> Certificate:
    """Closed-form level-1 certificate of p_sic(d), assembled directly:
    unit corner, border and diagonal 1/d, off-diagonal 1/(d(d+1))."""
    _check_dim(d)
    n = d * d
    border = float(Fraction(1, d))
    off = float(Fraction(1, d * (d + 1)))
    m = np.full((n + 1, n + 1), off)
    m[0, 0] = 1.0
    m[0, 1:] = border
    m[1:, 0] = border
    np.fill_diagonal(m[1:, 1:], border)
    return Certificate(n, 1, REAL, tuple(enumerate_words(n, 1)), m)


def sic_level1_factor(d: int) -> np.ndarray:
    """Upper-triangular L with dagger(L) L = sic_level1(d).matrix.

    Row zero is (1, 1/d, ..., 1/d); row k has pivot
    sqrt((d^2-k) / ((d+1)(d^2-k+1))) and constant tail -pivot/(d^2-k).
    The d^2 rows exhibit the rank directly.
    """
    _check_dim(d)
    n = d * d
    ell = np.zeros((n, n + 1))
    ell[0, 0] = 1.0
    ell[0, 1:] = 1.0 / d
    for k in range(1, n):
        pivot = math.sqrt((n - k) / ((d + 1) * (n - k + 1)))
        ell[k, k] = pivot
        ell[k, k + 1 :] = -pivot / (n - k)
    return ell


def mub_level1(d: int) -> Certificate:
    """Closed-form level-1 certificate of p_mub(d), assembled directly:
    border 1/d, identity-like diagonal blocks, constant cross blocks."""
    _check_dim(d)
    n = d * (d + 1)
    m = np.full((n + 1, n + 1), float(Fraction(1, d * d)))
    m[0, 0] = 1.0
    border = float(Fraction(1, d))
    m[0, 1:] = border
    m[1:, 0] = border
    for x in range(d + 1):
        block = slice(1 + x * d, 1 + (x + 1) * d)
        m[block, block] = 0.0
    for i in range(1, n + 1):
        m[i, i] = border
    return Certificate(n, 1, REAL, tuple(enumerate_words(n, 1)), m)


def mub_level1_factor(d: int) -> np.ndarray:
    """Block factor L with dagger(L) L = mub_level1(d).matrix.

    The adjoint has a unit first column block followed by one copy per
    basis of the d x (d-1) block C whose columns are the scaled
    difference vectors sqrt((d-k)/(d(d-k+1))) (0,..,0,1,-1/(d-k),..).
    L has d^2 rows, exhibiting the rank directly.
    """
    _check_dim(d)
    n = d * (d + 1)
    c = np.zeros((d, d - 1))
    for k in range(1, d):
        scale = math.sqrt((d - k) / (d * (d - k + 1)))
        c[k - 1, k - 1] = scale
        c[k:, k - 1] = -scale / (d - k)
    adjoint = np.zeros((n + 1, d * d))
    adjoint[0, 0] = 1.0
    for x in range(d + 1):
        rows = slice(1 + x * d, 1 + (x + 1) * d)
        adjoint[rows, 0] = 1.0 / d
        cols = slice(1 + x * (d - 1), 1 + (x + 1) * (d - 1))
        adjoint[rows, cols] = c
    return adjoint.T


def mub_null_coefficients(d: int) -> tuple[float, float]:
    """Coefficients (a, b) of the closed-form null vectors of mub_level1(d).

    b is the positive root of d(d+1) b^2 + 2 d b - 1 = 0 and a = -1 - d b,
    so the first defining relation 1 + a + d b = 0 holds by construction.
    The vector (1, b, ..., b) with one basis block replaced by (a, ..., a)
    is annihilated by the closed-form certificate, for every choice of the
    distinguished basis.
    """
    _check_dim(d)
    b = (math.sqrt(d * (2 * d + 1)) - d) / (d * (d + 1))
    return (-1.0 - d * b, b)


def reference_sic(d: int) -> list[np.ndarray]:
    """Reference constant-overlap family for d in {2, 3}.

    d=2: rank-one projections along the four Bloch tetrahedron
    directions.  d=3: the clock-and-shift orbit of the fiducial vector
    (0, 1, -1)/sqrt(2).  Pairwise normalized overlaps are 1/(d+1).
    """
    if d == 2:
        sx = np.array([[0, 1], [1, 0]], dtype=complex)
        sy = np.array([[0, -1j], [1j, 0]])
        sz = np.array([[1, 0], [0, -1]], dtype=complex)
        eye = np.eye(2, dtype=complex)
        blochs = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]) / math.sqrt(3)
        return [(eye + b[0] * sx + b[1] * sy + b[2] * sz) / 2 for b in blochs]
    if d == 3:
        omega = np.exp(2j * np.pi / 3)
        clock = np.diag([1, omega, omega**2])
        shift = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=complex)
        fiducial = np.array([0, 1, -1], dtype=complex) / math.sqrt(2)
        family = []
        for a in range(3):
            for b in range(3):
                v = np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(clock, b) @ fiducial
                family.append(np.outer(v, v.conj()))
        return family
    raise ValueError(f"no reference constant-overlap family shipped for d={d}; supported: 2, 3")


def _is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % q for q in range(2, int(math.isqrt(d)) + 1))


def reference_mubs(d: int) -> list[list[np.ndarray]]:
    """d+1 mutually unbiased projective measurements in prime dimension d.

    d=2 uses the three spin eigenbases; odd primes use the computational
    basis plus the d exponential-phase bases with vector components
    omega^(a j^2 + j k)/sqrt(d).  Cross-basis overlaps are 1/d in squared
    magnitude.
    """
    if not _is_prime(d):
        raise ValueError(f"d={d} is not prime; unbiased reference bases are shipped for primes")
    if d == 2:
        root2 = math.sqrt(2)
        vectors = [
            [np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)],
            [np.array([1, 1], dtype=complex) / root2, np.array([1, -1], dtype=complex) / root2],
            [np.array([1, 1j]) / root2, np.array([1, -1j]) / root2],
        ]
    else:
        omega = np.exp(2j * np.pi / d)
        j = np.arange(d)
        vectors = [[np.eye(d, dtype=complex)[:, k] for k in range(d)]]
        for a in range(d):
            vectors.append(
                [omega ** ((a * j * j + k * j) % d) / math.sqrt(d) for k in range(d)]
            )
    return [[np.outer(v, v.conj()) for v in basis] for basis in vectors]


def flatten_pvms(bases: list[list[np.ndarray]]) -> list[np.ndarray]:
    """Concatenate projective measurements basis-major, matching MubIndex."""
    return [p for basis in bases for p in basis]


@dataclass(frozen=True, eq=False)
class SearchReport:
    """Level-2 feasibility search plus the spanning post-checks."""

    status: str
    solver: SolverReport | None
    spanning: SpanningReport | None

    def to_jsonable(self) -> dict:
        return {
            "status": self.status,
            "solver": None if self.solver is None else self.solver.to_jsonable(),
            "spanning": None if self.spanning is None else self.spanning.to_jsonable(),
        }


def search_t2(
    corr: Correlation,
    d: int,
    config: SolverConfig | None = None,
    certificate: Certificate | None = None,
) -> SearchReport:
    """Search for a level-2 completion meeting the spanning conditions.

    The rank and center conditions are not convex, so they are evaluated
    after the fact on whichever feasible point turned up (or on a
    supplied certificate).  A feasible point that fails them says nothing
    about other completions; nonexistence is never claimed.
    """
    if certificate is not None:
        spanning = check_matricially_spanning(certificate.restriction(1), certificate, d)
        status = (
            "spanning-conditions-met"
            if spanning.passed
            else "inconclusive: feasible point found, spanning conditions unmet"
        )
        return SearchReport(status=status, solver=None, spanning=spanning)
    report = solve_feasibility(corr, 2, config)
    if report.status != "feasible":
        return SearchReport(status=report.status, solver=report, spanning=None)
    t2 = report.certificate
    spanning = check_matricially_spanning(t2.restriction(1), t2, d)
    status = (
        "spanning-conditions-met"
        if spanning.passed
        else "inconclusive: feasible point found, spanning conditions unmet"
    )
    return SearchReport(status=status, solver=report, spanning=spanning)
