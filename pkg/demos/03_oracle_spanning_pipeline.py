# End-to-end oracle pipeline: explicit projection families -> level-2
# moment matrix -> the four matricial-spanning conditions.  The reference
# families are genuine, so every condition must pass; this is the
# strongest self-test the package has.
#
# One subtlety worth watching: for d+1 unbiased bases the raw kernel of
# the commutator stack has dimension d+1, not 1, because every basis sums
# to the identity and those d dependency vectors commute with everything
# trivially.  The dependency count is exactly the kernel of the
# single-letter Gram block, and subtracting it leaves the center
# dimension, which is the number that must equal one.

import numpy as np

from syncnpa import (
    check_matricially_spanning,
    commutator_stack,
    flatten_pvms,
    from_projections,
    reference_mubs,
    reference_sic,
    validate,
)


def run(name, family, d):
    t2 = from_projections(family, 2)
    report = validate(t2, t2.correlation())
    spanning = check_matricially_spanning(t2.restriction(1), t2, d)
    stack = commutator_stack(t2)
    print(f"{name}: index size {t2.size}, claimed dimension {d}")
    print(f"  validation passed: {report.passed} "
          f"(min eig {min(report.level_min_eigs):.1e}, class spread {report.class_spread:.1e})")
    print(f"  rank(T1) = {spanning.rank_t1}, rank(T2) = {spanning.rank_t2}, target d^2 = {d * d}")
    print(f"  commutator stack {stack.shape}: kernel {spanning.s_nullity}, "
          f"dependencies {spanning.relation_nullity}, center dimension {spanning.center_dimension}")
    print(f"  matricially spanning: {spanning.passed}\n")


run("tetrahedron family (d=2)", reference_sic(2), 2)
run("clock-and-shift family (d=3)", reference_sic(3), 3)
run("three qubit bases (d=2)", flatten_pvms(reference_mubs(2)), 2)
run("four qutrit bases (d=3)", flatten_pvms(reference_mubs(3)), 3)

# the scalar direction is always in the kernel when the family sums to a
# multiple of the identity
t2 = from_projections(reference_sic(2), 2)
stack = commutator_stack(t2)
print("all-ones vector in the kernel (family sums to d·I):",
      np.abs(stack @ np.ones(4)).max())
