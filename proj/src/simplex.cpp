#include "conerig/simplex.hpp"

#include <limits>
#include <vector>

namespace conerig {

namespace {

constexpr double kTol = 1e-9;

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Tableau layout: rows = constraints, columns = structural + slack + artificial
// variables, one extra column for the right-hand side. `basis[i]` is the
// variable currently basic in row i.
struct Tableau {
    MatrixXd T;
    std::vector<int> basis;
    int n_cols = 0;  // variable columns (rhs excluded)

    double rhs(int row) const { return T(row, n_cols); }
};

// One simplex phase on the given objective row (reduced costs for a
// maximization; entries > kTol are candidate entering columns). Returns false
// on unboundedness.
bool run_simplex(Tableau& tab, Eigen::RowVectorXd& obj, double& obj_value,
                 const std::vector<bool>& allowed) {
    const int m = static_cast<int>(tab.T.rows());
    while (true) {
        int enter = -1;
        for (int j = 0; j < tab.n_cols; ++j)  // Bland: first improving column
            if (allowed[j] && obj[j] > kTol) { enter = j; break; }
        if (enter < 0) return true;

        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (tab.T(i, enter) > kTol) {
                const double ratio = tab.rhs(i) / tab.T(i, enter);
                if (ratio < best_ratio - kTol ||
                    (ratio < best_ratio + kTol &&
                     (leave < 0 || tab.basis[i] < tab.basis[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return false;  // unbounded

        const double pivot = tab.T(leave, enter);
        tab.T.row(leave) /= pivot;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            const double f = tab.T(i, enter);
            if (f != 0.0) tab.T.row(i) -= f * tab.T.row(leave);
        }
        const double fo = obj[enter];
        obj -= fo * tab.T.row(leave).head(tab.n_cols);
        obj_value += fo * tab.rhs(leave);
        tab.basis[leave] = enter;
    }
}

}  // namespace

LpResult solve_lp_max(const MatrixXd& A, const VectorXd& b, const VectorXd& c) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());

    int n_art = 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) ++n_art;

    Tableau tab;
    tab.n_cols = n + m + n_art;
    tab.T = MatrixXd::Zero(m, tab.n_cols + 1);
    tab.basis.assign(m, -1);

    int art = n + m;
    for (int i = 0; i < m; ++i) {
        if (b[i] >= 0) {
            tab.T.block(i, 0, 1, n) = A.row(i);
            tab.T(i, n + i) = 1.0;  // slack
            tab.T(i, tab.n_cols) = b[i];
            tab.basis[i] = n + i;
        } else {
            tab.T.block(i, 0, 1, n) = -A.row(i);
            tab.T(i, n + i) = -1.0;
            tab.T(i, art) = 1.0;
            tab.T(i, tab.n_cols) = -b[i];
            tab.basis[i] = art++;
        }
    }

    LpResult res;
    std::vector<bool> allowed(tab.n_cols, true);

    if (n_art > 0) {
        // phase 1: max -(sum of artificials)
        Eigen::RowVectorXd obj = Eigen::RowVectorXd::Zero(tab.n_cols);
        for (int j = n + m; j < tab.n_cols; ++j) obj[j] = -1.0;
        double obj_value = 0.0;
        for (int i = 0; i < m; ++i)
            if (tab.basis[i] >= n + m) {  // price out the basic artificials
                obj += tab.T.row(i).head(tab.n_cols);
                obj_value -= tab.rhs(i);
                obj[tab.basis[i]] = 0.0;
            }
        if (!run_simplex(tab, obj, obj_value, allowed)) return res;
        if (obj_value < -1e-7) return res;  // infeasible
        for (int j = n + m; j < tab.n_cols; ++j) allowed[j] = false;
        // drive any artificial still basic (at value 0) out of the basis
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < n + m) continue;
            int enter = -1;
            for (int j = 0; j < n + m; ++j)
                if (std::abs(tab.T(i, j)) > kTol) { enter = j; break; }
            if (enter < 0) continue;  // redundant row, harmless
            const double pivot = tab.T(i, enter);
            tab.T.row(i) /= pivot;
            for (int r = 0; r < m; ++r) {
                if (r == i) continue;
                const double f = tab.T(r, enter);
                if (f != 0.0) tab.T.row(r) -= f * tab.T.row(i);
            }
            tab.basis[i] = enter;
        }
    }

    // phase 2
    Eigen::RowVectorXd obj = Eigen::RowVectorXd::Zero(tab.n_cols);
    obj.head(n) = c.transpose();
    double obj_value = 0.0;
    for (int i = 0; i < m; ++i)
        if (obj[tab.basis[i]] != 0.0) {
            const double f = obj[tab.basis[i]];
            obj -= f * tab.T.row(i).head(tab.n_cols);
            obj_value += f * tab.rhs(i);
        }
    if (!run_simplex(tab, obj, obj_value, allowed)) return res;  // unbounded

    res.feasible = true;
    res.objective = obj_value;
    res.x = VectorXd::Zero(n);
    for (int i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs(i);
    return res;
}

}  // namespace conerig
