# The feasibility question: does a given correlation extend to a level-k
# moment matrix at all?  The feasible set is an intersection of the PSD
# cone with an affine class subspace, so alternating projections with
# Dykstra's correction decide it.  A correlation whose forced level-1
# matrix is indefinite gets rejected; a realizable one converges to a
# certificate that validates.

import tempfile
from pathlib import Path

import numpy as np

from syncnpa import Correlation, certify, export_sdpa, p_mub, solve_feasibility

print("level-2 feasibility for two qubit-unbiased-bases questions:")
report = solve_feasibility(p_mub(2), 2)
print(f"  status {report.status} after {report.iterations} iterations, "
      f"residual {report.residual:.2e}")
print(f"  certificate: {report.certificate.size} x {report.certificate.size}, "
      f"validation passed: {report.validation.passed}")

print("\na correlation with no completion (forced level-1 determinant -1):")
eye = Correlation(np.eye(2))
report = solve_feasibility(eye, 1)
print(f"  status {report.status}, residual stalled at {report.residual:.4f}")
print("  (heuristic verdict: the residual is the apparent cone distance, not a proof)")

print("\nhierarchy run with rank tracking:")
hierarchy = certify(p_mub(2), max_level=2)
print(f"  verdict {hierarchy.verdict}, restriction ranks {hierarchy.ranks}, "
      f"loop at level {hierarchy.loop_level}")

hierarchy = certify(eye, max_level=2)
print(f"  identity fixture: {hierarchy.verdict}")

# the same problem, exported for any SDPA-format solver
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "mub2_level2.dat-s"
    summary = export_sdpa(p_mub(2), 2, "real", path)
    print(f"\nSDPA export: {summary['variables']} variables, "
          f"block size {summary['block_size']}")
    print("  header:")
    for line in path.read_text().splitlines()[:6]:
        print("   ", line)
