"""Matricial-spanning tests on level-2 certificates.

A correlation of claimed dimension d comes from projections spanning the
full d x d matrix algebra exactly when the first two certificates have
rank d^2 and the span contains no central element besides scalars.  The
second condition is read off a stacked block matrix of commutator
moments: a coefficient vector t lies in its kernel exactly when
sum_i t_i P_i commutes with every generator in any realization.

That kernel also contains every linear dependency among the projections
themselves (a family holding several resolutions of the identity always
has such dependencies), because a vanishing combination trivially
commutes with everything.  The center dimension therefore subtracts the
dependency space, whose size is the kernel dimension of the single-letter
Gram block; for linearly independent families the two notions coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certificate import Certificate, ValidationReport, validate
from .hierarchy import RANK_REL_TOL, _check_restriction, numerical_rank


def commutator_stack(cert: Certificate) -> np.ndarray:
    """Stack the commutator-moment blocks of a level-2 certificate.

    Block (x, y), for x and y ranging over the empty word and all single
    letters, has (k, i) entry M[ix, ky] - M[kx, iy]; blocks are stacked
    vertically in x-major order.  Rows of the certificate are addressed
    through the power-free form of each two-letter word, so ii collapses
    to i.
    """
    if cert.level != 2:
        raise ValueError(f"a level-2 certificate is required, got level {cert.level}")
    n = cert.n
    m = cert.matrix
    prefixes = [()] + [(a,) for a in range(1, n + 1)]
    rows = np.array(
        [[cert.row_of((i,) + x) for x in prefixes] for i in range(1, n + 1)]
    )
    blocks = []
    for xi in range(n + 1):
        for yi in range(n + 1):
            c = m[np.ix_(rows[:, xi], rows[:, yi])]
            blocks.append(c.T - c)
    return np.vstack(blocks)


def nullity(stack: np.ndarray, rel_tol: float = RANK_REL_TOL, method: str = "gram") -> int:
    """Kernel dimension of a stacked matrix.

    The default squares the stack into its small Gram matrix (same
    kernel, one cheap eigenproblem); method="svd" ranks the stack
    directly as a cross-check.
    """
    s = np.asarray(stack)
    cols = s.shape[1]
    if method == "gram":
        return cols - numerical_rank(s.conj().T @ s, rel_tol)
    if method == "svd":
        return cols - numerical_rank(s, rel_tol)
    raise ValueError(f"unknown nullity method {method!r}; expected 'gram' or 'svd'")


@dataclass(frozen=True, eq=False)
class SpanningReport:
    """Outcome of the four matricial-spanning conditions for dimension d.

    ``s_nullity`` is the raw kernel dimension of the commutator stack;
    ``relation_nullity`` the kernel dimension of the single-letter Gram
    block (linear dependencies among the projections); their difference
    ``center_dimension`` is the quantity that must equal one.
    """

    d: int
    rank_t1: int
    rank_t2: int
    s_nullity: int
    relation_nullity: int
    center_dimension: int
    passed: bool
    rank_rel_tol: float
    validation: ValidationReport

    def to_jsonable(self) -> dict:
        return {
            "d": self.d,
            "rank_t1": self.rank_t1,
            "rank_t2": self.rank_t2,
            "s_nullity": self.s_nullity,
            "relation_nullity": self.relation_nullity,
            "center_dimension": self.center_dimension,
            "passed": self.passed,
            "rank_rel_tol": self.rank_rel_tol,
            "validation": self.validation.to_jsonable(),
        }


def check_matricially_spanning(
    t1: Certificate,
    t2: Certificate,
    d: int,
    tol_psd: float = 1e-8,
    tol_class: float = 1e-10,
    rank_rel_tol: float = RANK_REL_TOL,
) -> SpanningReport:
    """Evaluate the spanning conditions: the certificate validates, both
    ranks equal d^2, and the center dimension is one.

    ``t1`` must be the level-1 restriction of ``t2``; an index or entry
    mismatch is an error rather than a failed condition.
    """
    _check_restriction(t1, t2)
    if t2.level != 2:
        raise ValueError(f"a level-2 certificate is required, got level {t2.level}")
    report = validate(t2, tol_psd=tol_psd, tol_class=tol_class)
    rank1 = numerical_rank(t1.matrix, rank_rel_tol)
    rank2 = numerical_rank(t2.matrix, rank_rel_tol)
    stack = commutator_stack(t2)
    s_null = nullity(stack, rank_rel_tol)
    gram = t2.matrix[1 : t2.n + 1, 1 : t2.n + 1]
    relation_null = t2.n - numerical_rank(gram, rank_rel_tol)
    center = s_null - relation_null
    passed = report.passed and rank1 == rank2 == d * d and center == 1
    return SpanningReport(
        d=d,
        rank_t1=rank1,
        rank_t2=rank2,
        s_nullity=s_null,
        relation_nullity=relation_null,
        center_dimension=center,
        passed=passed,
        rank_rel_tol=rank_rel_tol,
        validation=report,
    )
