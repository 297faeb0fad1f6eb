"""Running the hierarchy across levels and detecting rank loops.

Feasibility at every level is consistent with a trace realization on some
(possibly infinite-dimensional) algebra.  A rank plateau between two
consecutive restrictions of one feasible moment matrix certifies a
finite-dimensional realization: the word vectors stop spanning new
directions.  The converse direction is asymmetric by nature — ranks are
measured on whichever feasible point was found, not on all of them — so
the absence of a plateau is never reported as disproof.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificate import Certificate, Correlation, validate
from .solver import SolverConfig, SolverReport, solve_feasibility

RANK_REL_TOL = 1e-9


def numerical_rank(matrix: np.ndarray, rel_tol: float = RANK_REL_TOL) -> int:
    """Count of singular values above rel_tol * sigma_max * max(dim)."""
    m = np.asarray(matrix)
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s[0] <= 0:
        return 0
    return int((s > rel_tol * s[0] * max(m.shape)).sum())


def _check_restriction(lower: Certificate, upper: Certificate) -> None:
    if lower.n != upper.n or lower.mode != upper.mode:
        raise ValueError("certificates disagree on alphabet size or mode")
    if lower.level > upper.level:
        raise ValueError("restriction has higher level than the extension")
    size = lower.size
    if upper.words[:size] != lower.words:
        raise ValueError("word indices mismatch: not a leading principal restriction")
    if not np.allclose(upper.matrix[:size, :size], lower.matrix, atol=1e-12, rtol=0):
        raise ValueError("matrix entries mismatch: not a leading principal restriction")


def check_rank_loop(lower: Certificate, upper: Certificate, rel_tol: float = RANK_REL_TOL) -> bool:
    """True when a restriction and its extension have equal numerical rank."""
    _check_restriction(lower, upper)
    return numerical_rank(lower.matrix, rel_tol) == numerical_rank(upper.matrix, rel_tol)


@dataclass(frozen=True, eq=False)
class HierarchyReport:
    """Per-level solver outcomes, restriction ranks, and the verdict.

    Ranks are those of the level restrictions of the deepest feasible
    certificate (level j at position j-1), so they are non-decreasing.
    Verdicts: "rank-loop-Dq", "consistent-with-Dqc",
    "rejected-at-level-<j>", or "inconclusive".
    """

    n: int
    mode: str
    max_level: int
    rank_rel_tol: float
    level_reports: tuple[SolverReport, ...]
    ranks: tuple[int, ...] | None
    loop_level: int | None
    verdict: str
    certificate: Certificate | None

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "max_level": self.max_level,
            "rank_rel_tol": self.rank_rel_tol,
            "levels": [
                {
                    "level": r.level,
                    "status": r.status,
                    "iterations": r.iterations,
                    "residual": r.residual,
                }
                for r in self.level_reports
            ],
            "ranks": None if self.ranks is None else list(self.ranks),
            "loop_level": self.loop_level,
            "verdict": self.verdict,
        }


def _restriction_ranks(cert: Certificate, rel_tol: float) -> tuple[int, ...]:
    return tuple(
        numerical_rank(cert.restriction(j).matrix, rel_tol) for j in range(1, cert.level + 1)
    )


def _find_loop(ranks: tuple[int, ...]) -> int | None:
    for m in range(1, len(ranks)):
        if ranks[m - 1] == ranks[m]:
            return m
    return None


def certify(
    corr: Correlation,
    max_level: int = 2,
    config: SolverConfig | None = None,
    certificate: Certificate | None = None,
    rank_rel_tol: float = RANK_REL_TOL,
) -> HierarchyReport:
    """Solve levels 1..max_level and classify the correlation.

    Each level warm-starts from the class values found at the previous
    one.  An externally supplied certificate (for instance one built from
    an explicit projection family) bypasses the solver: it is validated
    against the correlation and its restriction ranks are examined
    directly.
    """
    if config is None:
        config = SolverConfig()
    if max_level < 1:
        raise ValueError("max_level must be at least 1")

    if certificate is not None:
        report = validate(certificate, corr)
        if not report.passed:
            raise ValueError("supplied certificate fails validation against the correlation")
        ranks = _restriction_ranks(certificate, rank_rel_tol)
        loop = _find_loop(ranks)
        verdict = "rank-loop-Dq" if loop is not None else "consistent-with-Dqc"
        return HierarchyReport(
            n=corr.n,
            mode=certificate.mode,
            max_level=certificate.level,
            rank_rel_tol=rank_rel_tol,
            level_reports=(),
            ranks=ranks,
            loop_level=loop,
            verdict=verdict,
            certificate=certificate,
        )

    reports: list[SolverReport] = []
    deepest: Certificate | None = None
    warm = None
    for k in range(1, max_level + 1):
        report = solve_feasibility(corr, k, config, initial_classes=warm)
        reports.append(report)
        if report.status == "infeasible-gap":
            return HierarchyReport(
                n=corr.n,
                mode=config.mode,
                max_level=max_level,
                rank_rel_tol=rank_rel_tol,
                level_reports=tuple(reports),
                ranks=None,
                loop_level=None,
                verdict=f"rejected-at-level-{k}",
                certificate=None,
            )
        if report.status == "no-convergence":
            return HierarchyReport(
                n=corr.n,
                mode=config.mode,
                max_level=max_level,
                rank_rel_tol=rank_rel_tol,
                level_reports=tuple(reports),
                ranks=None,
                loop_level=None,
                verdict="inconclusive",
                certificate=None,
            )
        deepest = report.certificate
        warm = deepest.class_table()
    assert deepest is not None
    ranks = _restriction_ranks(deepest, rank_rel_tol)
    loop = _find_loop(ranks)
    verdict = "rank-loop-Dq" if loop is not None else "consistent-with-Dqc"
    return HierarchyReport(
        n=corr.n,
        mode=config.mode,
        max_level=max_level,
        rank_rel_tol=rank_rel_tol,
        level_reports=tuple(reports),
        ranks=ranks,
        loop_level=loop,
        verdict=verdict,
        certificate=deepest,
    )
