# The two benchmark correlations extend uniquely to a level-1 moment
# matrix, and those matrices are known in closed form together with a
# triangular factor and a full eigensystem.  This script reproduces both,
# checks the factors, and shows the (d^2)-rank structure that the deeper
# spanning tests build on.

import numpy as np

from syncnpa import (
    gram_factor,
    level1_certificate,
    mub_level1,
    mub_level1_factor,
    mub_null_coefficients,
    numerical_rank,
    p_mub,
    p_sic,
    sic_level1,
    sic_level1_factor,
)

d = 3

print(f"constant-overlap family, d={d}: N = d^2 = {d * d} questions")
corr = p_sic(d)
print("  diagonal", corr.p[0, 0], " off-diagonal", corr.p[0, 1], " row sum", corr.p[0].sum())

t1 = sic_level1(d)
unique = level1_certificate(corr)
print("  closed form == unique level-1 extension:",
      np.array_equal(t1.matrix, unique.matrix))

ell = sic_level1_factor(d)
print(f"  factor: {ell.shape[0]} x {ell.shape[1]} upper triangular, "
      f"max |L'L - T1| = {np.abs(ell.T @ ell - t1.matrix).max():.2e}")
print(f"  rank(T1) = {numerical_rank(t1.matrix)} (= d^2)")

vals = np.linalg.eigvalsh(t1.matrix)
print("  eigenvalues:", np.round(vals, 6))
print(f"  expected: one 0, {d * d - 1} copies of 1/(d+1) = {1 / (d + 1):.6f}, one 2")

print(f"\nunbiased bases, d={d}: N = d(d+1) = {d * (d + 1)} questions")
m1 = mub_level1(d)
print("  closed form == unique extension:",
      np.array_equal(m1.matrix, level1_certificate(p_mub(d)).matrix))
ell = mub_level1_factor(d)
print(f"  factor reconstruction error {np.abs(ell.T @ ell - m1.matrix).max():.2e}, "
      f"rank {numerical_rank(m1.matrix)} (= d^2)")

a, b = mub_null_coefficients(d)
print(f"  null-vector coefficients a = {a:.6f}, b = {b:.6f}; 1 + a + d b = {1 + a + d * b:.1e}")
u = np.concatenate([[1.0], [a] * d] + [[b] * d] * d)
print(f"  |T1 u| for the first null vector: {np.abs(m1.matrix @ u).max():.2e}")

# any PSD matrix factors the same way numerically
ell = gram_factor(m1.matrix)
print(f"\ngeneric Gram factor: {ell.shape[0]} rows (same rank), "
      f"error {np.linalg.norm(ell.conj().T @ ell - m1.matrix):.2e}")
