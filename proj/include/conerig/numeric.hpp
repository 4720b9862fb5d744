#pragma once

#include "conerig/types.hpp"

namespace conerig {

/// Numerical rank: number of singular values above max(rows,cols) * sigma_max * rank_rel_tol.
/// A zero (or empty) matrix has rank 0.
int numeric_rank(const MatrixXd& M, const NumericPolicy& policy);

/// Orthonormal basis of the right null space of M.
Subspace kernel(const MatrixXd& M, const NumericPolicy& policy);

/// Orthonormal basis of the left null space of M (kernel of the transpose).
Subspace cokernel(const MatrixXd& M, const NumericPolicy& policy);

/// Exact rank over the rationals. Every double is a dyadic rational, so the
/// conversion is exact; this is the tolerance-free oracle for matrices whose
/// entries were produced by rational arithmetic.
int exact_rational_rank(const MatrixXd& M);

/// Orthonormal column basis spanning the same space as the columns of M
/// (rank-revealing, drops near-dependent columns).
MatrixXd orthonormalize_columns(const MatrixXd& M, const NumericPolicy& policy);

/// dim(colspan(A) ∩ colspan(B)) for matrices with orthonormal-ish columns.
int intersection_dimension(const MatrixXd& A, const MatrixXd& B, const NumericPolicy& policy);

}  // namespace conerig
