#include "conerig/numeric.hpp"

#include <Eigen/SVD>
#include <gmpxx.h>

#include <cmath>

namespace conerig {

namespace {

void check_finite(const MatrixXd& M, const char* where) {
    if (!M.allFinite()) throw std::invalid_argument(std::string(where) + ": non-finite entries");
}

}  // namespace

int numeric_rank(const MatrixXd& M, const NumericPolicy& policy) {
    check_finite(M, "numeric_rank");
    if (M.rows() == 0 || M.cols() == 0) return 0;
    Eigen::JacobiSVD<MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    if (smax == 0.0) return 0;
    const double thresh =
        static_cast<double>(std::max(M.rows(), M.cols())) * smax * policy.rank_rel_tol;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > thresh) ++r;
    return r;
}

Subspace kernel(const MatrixXd& M, const NumericPolicy& policy) {
    check_finite(M, "kernel");
    const int cols = static_cast<int>(M.cols());
    if (M.rows() == 0 || cols == 0) {
        return Subspace{cols, MatrixXd::Identity(cols, cols)};
    }
    Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    const double thresh =
        smax == 0.0 ? 0.0
                    : static_cast<double>(std::max(M.rows(), M.cols())) * smax * policy.rank_rel_tol;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > thresh) ++r;
    return Subspace{cols, svd.matrixV().rightCols(cols - r)};
}

Subspace cokernel(const MatrixXd& M, const NumericPolicy& policy) {
    return kernel(M.transpose(), policy);
}

int exact_rational_rank(const MatrixXd& M) {
    const int rows = static_cast<int>(M.rows());
    const int cols = static_cast<int>(M.cols());
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<mpq_class>> A(rows, std::vector<mpq_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (!std::isfinite(M(i, j)))
                throw std::invalid_argument("exact_rational_rank: non-finite entries");
            A[i][j] = mpq_class(M(i, j));  // exact: doubles are dyadic rationals
        }
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (A[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(A[row], A[pivot]);
        for (int i = row + 1; i < rows; ++i) {
            if (A[i][col] == 0) continue;
            mpq_class f = A[i][col] / A[row][col];
            for (int j = col; j < cols; ++j) A[i][j] -= f * A[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

MatrixXd orthonormalize_columns(const MatrixXd& M, const NumericPolicy& policy) {
    if (M.cols() == 0 || M.rows() == 0) return MatrixXd(M.rows(), 0);
    Eigen::JacobiSVD<MatrixXd> svd(M, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    if (smax == 0.0) return MatrixXd(M.rows(), 0);
    const double thresh =
        static_cast<double>(std::max(M.rows(), M.cols())) * smax * policy.rank_rel_tol;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > thresh) ++r;
    return svd.matrixU().leftCols(r);
}

int intersection_dimension(const MatrixXd& A, const MatrixXd& B, const NumericPolicy& policy) {
    if (A.cols() == 0 || B.cols() == 0) return 0;
    MatrixXd stacked(A.rows(), A.cols() + B.cols());
    stacked << A, B;
    const int ra = numeric_rank(A, policy);
    const int rb = numeric_rank(B, policy);
    return ra + rb - numeric_rank(stacked, policy);
}

}  // namespace conerig
