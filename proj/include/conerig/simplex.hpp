#pragma once

#include <Eigen/Dense>

namespace conerig {

struct LpResult {
    bool feasible = false;
    double objective = 0.0;
    Eigen::VectorXd x;
};

/// Dense two-phase simplex for max c^T x subject to A x <= b, x >= 0
/// (b of arbitrary sign). Bland's rule, so it terminates; intended for the
/// small stress-feasibility programs, not for large instances.
LpResult solve_lp_max(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                      const Eigen::VectorXd& c);

}  // namespace conerig
