"""Cross-validation of the SDPA export against an independent solver.

The reader below is written from the format conventions alone (header
counts, one block, symmetric fill-in of upper-triangle entries) and never
touches the writer's code path.  The parsed problem is handed to cvxopt,
which maximizes the smallest eigenvalue of the matrix pencil; a
nonnegative optimum means feasible.
"""

import numpy as np
import pytest

from syncnpa.applications import p_mub
from syncnpa.certificate import REAL, Correlation
from syncnpa.solver import export_sdpa, solve_feasibility

cvxopt = pytest.importorskip("cvxopt")


def read_sdpa(path):
    lines = [ln for ln in open(path).read().splitlines() if ln.strip()]
    body = [ln for ln in lines if not ln.startswith(('"', "*"))]
    m = int(body[0].split()[0])
    nblocks = int(body[1].split()[0])
    assert nblocks == 1
    size = int(body[2].strip("{}").split()[0])
    costs = [float(v) for v in body[3].split()]
    # a zero objective may serialize as a blank costs line
    entry_lines = body[4:] if len(costs) == m else body[3:]
    mats = [np.zeros((size, size)) for _ in range(m + 1)]
    for line in entry_lines:
        mat_no, blk, i, j, value = line.split()
        assert int(blk) == 1
        i, j, value = int(i), int(j), float(value)
        assert 1 <= i <= j <= size
        mats[int(mat_no)][i - 1, j - 1] = value
        mats[int(mat_no)][j - 1, i - 1] = value
    return m, size, mats


def max_min_eigenvalue(path):
    """Maximize t subject to sum_i x_i F_i - F0 >= t I, t <= 10."""
    from cvxopt import matrix, solvers

    m, size, mats = read_sdpa(path)
    f0, fs = mats[0], mats[1:]
    cost = matrix([0.0] * m + [-1.0])
    lmi = np.zeros((size * size, m + 1))
    for idx, f in enumerate(fs):
        lmi[:, idx] = -f.ravel()
    lmi[:, m] = np.eye(size).ravel()
    bound = np.zeros((1, m + 1))
    bound[0, m] = 1.0
    solvers.options["show_progress"] = False
    solution = solvers.sdp(
        cost,
        Gl=matrix(bound),
        hl=matrix([10.0]),
        Gs=[matrix(lmi)],
        hs=[matrix(-f0)],
    )
    assert solution["status"] == "optimal"
    return float(solution["x"][m])


def test_export_format_is_well_formed(tmp_path):
    path = tmp_path / "mub2.dat-s"
    summary = export_sdpa(p_mub(2), 2, REAL, path)
    m, size, mats = read_sdpa(path)
    assert m == summary["variables"]
    assert size == summary["block_size"] == 37
    # indicator matrices are 0/1 and mutually disjoint
    support = np.zeros((size, size))
    for f in mats[1:]:
        assert set(np.unique(f)) <= {0.0, 1.0}
        overlap = support * f
        assert overlap.max() == 0.0
        support += f
    # pinned positions never carry a variable
    assert (support * (mats[0] != 0)).max() == 0.0


def test_external_solver_agrees_on_feasible_problem(tmp_path):
    path = tmp_path / "mub2.dat-s"
    export_sdpa(p_mub(2), 2, REAL, path)
    ours = solve_feasibility(p_mub(2), 2)
    assert ours.status == "feasible"
    assert max_min_eigenvalue(path) > -1e-6


def test_external_solver_agrees_on_infeasible_problem(tmp_path):
    corr = Correlation(np.eye(2))
    path = tmp_path / "eye.dat-s"
    export_sdpa(corr, 2, REAL, path)
    ours = solve_feasibility(corr, 2)
    assert ours.status == "infeasible-gap"
    assert max_min_eigenvalue(path) < -1e-3


def test_third_party_reader_if_available(tmp_path):
    """Optional: exercised only where an SDPA-reading package is installed."""
    picos = pytest.importorskip("picos")
    path = tmp_path / "mub2.dat-s"
    export_sdpa(p_mub(2), 2, REAL, path)
    problem = picos.import_cbf if hasattr(picos, "import_cbf") else None
    if problem is None:
        pytest.skip("installed picos version has no file importer")
