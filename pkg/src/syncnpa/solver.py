"""Level-k feasibility by Dykstra-corrected alternating projections.

The feasible set is the intersection of the PSD cone with the affine
subspace of class-constant matrices pinned to a target correlation.  Both
projections are cheap and exact, and Dykstra's correction makes the
alternation converge to a point of the intersection whenever one exists;
the cone is not a subspace, so the plain von Neumann scheme would not.  A
residual that stalls well above tolerance is reported as an infeasibility
gap, which is strong evidence but not a proof of infeasibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

import numpy as np

from .certificate import (
    COMPLEX,
    REAL,
    Certificate,
    ClassTable,
    Correlation,
    ValidationReport,
    class_positions,
    symmetry_mode,
    validate,
)
from .words import CanonicalClass, canonical_class


def project_psd(matrix: np.ndarray) -> np.ndarray:
    """Frobenius-nearest PSD matrix: clip negative eigenvalues to zero."""
    m = np.asarray(matrix)
    dev = float(np.abs(m - m.conj().T).max())
    if dev > 1e-10:
        raise ValueError(f"matrix is not Hermitian: max deviation {dev:.2e}")
    h = (m + m.conj().T) / 2
    vals, vecs = np.linalg.eigh(h)
    if vals[0] >= 0:
        return h
    out = (vecs * np.clip(vals, 0.0, None)) @ vecs.conj().T
    return (out + out.conj().T) / 2


class AffineClassProjection:
    """Orthogonal projection onto pinned class-constant matrices.

    Free-class entries are replaced by their mean; the classes the
    correlation determines (the empty class, single letters, and ordered
    pairs) are overwritten with their pinned values.  On Hermitian input
    the output is Hermitian: positions of mutually reversed classes are
    mutual transposes, so their means stay conjugate.
    """

    def __init__(
        self,
        n: int,
        level: int,
        mode: str,
        corr: Correlation | None = None,
        pin_correlation: bool = True,
    ) -> None:
        if level < 1:
            raise ValueError("level must be at least 1")
        sym = symmetry_mode(mode)
        self.n = n
        self.level = level
        self.mode = mode
        self.words, positions = class_positions(n, level, sym)
        self.size = len(self.words)
        pins: dict[CanonicalClass, float] = {canonical_class((), sym): 1.0}
        if corr is not None and pin_correlation:
            if corr.n != n:
                raise ValueError(f"correlation size {corr.n} does not match n={n}")
            for x in range(1, n + 1):
                pins[canonical_class((x,), sym)] = float(corr.p[x - 1, x - 1])
                for y in range(x + 1, n + 1):
                    pins[canonical_class((x, y), sym)] = float(corr.p[x - 1, y - 1])
        self.classes = sorted(positions, key=CanonicalClass.sort_key)
        self.free = tuple(c for c in self.classes if c not in pins)
        self.pinned = {c: pins[c] for c in self.classes if c in pins}
        self._free_idx = [positions[c] for c in self.free]
        self._pin_items = [(positions[c], v) for c, v in self.pinned.items()]
        self._positions = positions

    def __call__(self, matrix: np.ndarray) -> np.ndarray:
        out = np.array(matrix)
        flat = out.reshape(-1)
        for idx in self._free_idx:
            flat[idx] = flat[idx].mean()
        for idx, value in self._pin_items:
            flat[idx] = value
        return out

    def build(self, table: Mapping[CanonicalClass, complex] | None = None) -> np.ndarray:
        """Matrix with free classes taken from ``table`` (default 0) and
        pinned classes at their pinned values."""
        dtype = float if self.mode == REAL else complex
        flat = np.zeros(self.size * self.size, dtype=dtype)
        if table:
            for cls in self.free:
                if cls in table:
                    flat[self._positions[cls]] = table[cls]
        for idx, value in self._pin_items:
            flat[idx] = value
        return flat.reshape(self.size, self.size)

    def class_values(self, matrix: np.ndarray) -> ClassTable:
        flat = np.asarray(matrix).ravel()
        table: ClassTable = {}
        for cls in self.classes:
            if cls in self.pinned:
                table[cls] = self.pinned[cls]
            else:
                mean = flat[self._positions[cls]].mean()
                table[cls] = float(mean.real) if self.mode == REAL else complex(mean)
        return table


def project_affine(
    matrix: np.ndarray, n: int, k: int, mode: str, corr: Correlation | None
) -> np.ndarray:
    """One-shot affine projection; see AffineClassProjection."""
    proj = AffineClassProjection(n, k, mode, corr)
    m = np.asarray(matrix)
    if m.shape != (proj.size, proj.size):
        raise ValueError(f"matrix shape {m.shape} does not match index size {proj.size}")
    return proj(m)


@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the alternating-projection solve.

    ``tol_feas`` is the convergence residual and the PSD floor used when
    validating the returned certificate (the affine-side iterate is PSD
    up to the residual).  ``tol_psd`` bounds acceptable Hermiticity drift
    of the iterates and is the class tolerance of the final validation.
    ``seed`` switches the deterministic zero start to a seeded randomized
    start; both are reproducible.
    """

    max_iters: int = 50_000
    tol_feas: float = 1e-7
    tol_psd: float = 1e-10
    mode: str = REAL
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if self.tol_feas <= 0 or self.tol_psd <= 0:
            raise ValueError("tolerances must be positive")
        symmetry_mode(self.mode)


@dataclass(frozen=True, eq=False)
class SolverReport:
    """Outcome of a feasibility solve."""

    status: str  # "feasible" | "no-convergence" | "infeasible-gap"
    iterations: int
    residual: float
    n: int
    level: int
    mode: str
    certificate: Certificate | None = None
    validation: ValidationReport | None = None

    def to_jsonable(self, include_certificate: bool = False) -> dict:
        obj = {
            "status": self.status,
            "iterations": self.iterations,
            "residual": self.residual,
            "n": self.n,
            "level": self.level,
            "mode": self.mode,
            "validation": None if self.validation is None else self.validation.to_jsonable(),
        }
        if include_certificate and self.certificate is not None:
            obj["certificate"] = self.certificate.to_jsonable()
        return obj


# Plateau detection for the infeasibility heuristic: residual moved less
# than this over the last PLATEAU_WINDOW iterations while staying above
# 10x the feasibility tolerance.
PLATEAU_WINDOW = 500
PLATEAU_CHANGE = 1e-12


def solve_feasibility(
    corr: Correlation,
    k: int,
    config: SolverConfig | None = None,
    initial_classes: Mapping[CanonicalClass, complex] | None = None,
) -> SolverReport:
    """Decide level-k feasibility of a correlation.

    Alternates between the PSD cone and the pinned class subspace with
    Dykstra corrections, starting from the pinned projection of the zero
    matrix (or of ``initial_classes`` when warm-starting).  On success the
    returned certificate is the affine-side iterate: exactly
    class-constant and pinned, PSD up to the reported residual, and it
    passes validation at matching tolerances.
    """
    if config is None:
        config = SolverConfig()
    if k < 1:
        raise ValueError("level must be at least 1")
    proj = AffineClassProjection(corr.n, k, config.mode, corr)
    start: dict[CanonicalClass, complex] = dict(initial_classes) if initial_classes else {}
    if config.seed is not None:
        # kept small: large offsets can push the Dykstra path toward a
        # degenerate face of the cone, where convergence turns sublinear
        rng = np.random.default_rng(config.seed)
        for cls in proj.free:
            start[cls] = start.get(cls, 0.0) + rng.normal(scale=1e-4)
    x = proj.build(start)
    p_corr = np.zeros_like(x)
    q_corr = np.zeros_like(x)
    status = "no-convergence"
    residual = np.inf
    history: list[float] = []
    iterations = 0
    for iterations in range(1, config.max_iters + 1):
        y = project_psd(x + p_corr)
        p_corr = x + p_corr - y
        x = proj(y + q_corr)
        q_corr = y + q_corr - x
        residual = float(np.linalg.norm(y - x))
        history.append(residual)
        if residual < config.tol_feas:
            status = "feasible"
            break
        if (
            iterations > PLATEAU_WINDOW
            and abs(history[-1 - PLATEAU_WINDOW] - residual) < PLATEAU_CHANGE
            and residual > 10 * config.tol_feas
        ):
            status = "infeasible-gap"
            break
    cert = None
    report = None
    if status == "feasible":
        cert = Certificate(corr.n, k, config.mode, proj.words, x)
        report = validate(cert, corr, tol_psd=config.tol_feas, tol_class=config.tol_psd)
    return SolverReport(
        status=status,
        iterations=iterations,
        residual=residual,
        n=corr.n,
        level=k,
        mode=config.mode,
        certificate=cert,
        validation=report,
    )


def export_sdpa(
    corr: Correlation | None,
    k: int,
    mode: str,
    path,
    n: int | None = None,
    pin_correlation: bool = True,
) -> dict:
    """Write the level-k feasibility problem in SDPA sparse format.

    One variable per free class, a zero objective, and a single block:
    the variable matrices are 0/1 indicators of class positions and the
    constant matrix is the negated pinned contribution.  Entries are
    1-based, upper triangle only; comment lines start with a double
    quote.  With ``corr`` None (or ``pin_correlation`` False) only the
    unit corner is pinned and the correlation entries become variables.
    """
    if mode != REAL:
        raise ValueError("SDPA export supports real mode only")
    if corr is None and n is None:
        raise ValueError("alphabet size n is required when no correlation is given")
    n = corr.n if corr is not None else n
    proj = AffineClassProjection(n, k, mode, corr, pin_correlation=pin_correlation)
    size = proj.size

    def upper(idx: np.ndarray):
        rows, cols = np.divmod(idx, size)
        for i, j in zip(rows, cols):
            if i <= j:
                yield int(i) + 1, int(j) + 1

    lines = [
        f'"syncnpa level-{k} feasibility: n={n} block={size} mode={mode}',
        f'"variables (free classes): {len(proj.free)}; pinned classes: {len(proj.pinned)}',
        str(len(proj.free)),
        "1",
        str(size),
        " ".join("0.0" for _ in proj.free),
    ]
    for cls, value in proj.pinned.items():
        if value == 0.0:
            continue
        for i, j in upper(proj._positions[cls]):
            lines.append(f"0 1 {i} {j} {-value!r}")
    for var, cls in enumerate(proj.free, start=1):
        for i, j in upper(proj._positions[cls]):
            lines.append(f"{var} 1 {i} {j} 1.0")
    Path(path).write_text("\n".join(lines) + "\n")
    return {
        "path": str(path),
        "variables": len(proj.free),
        "block_size": size,
        "pinned_classes": len(proj.pinned),
    }
