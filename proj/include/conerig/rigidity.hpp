#pragma once

#include "conerig/numeric.hpp"
#include "conerig/types.hpp"

#include <random>

namespace conerig {

/// |E| x (D*n) matrix; row e for edge {i,j} holds hat(p_i - p_j) in the
/// D-wide column block of i and hat(p_j - p_i) in the block of j.
struct RigidityMatrix {
    MatrixXd matrix;
    std::vector<std::pair<int, int>> row_labels;
    int block_width = 0;

    int col_block_start(int vertex) const { return vertex * block_width; }
};

struct AnalysisReport {
    int rank = 0;
    int motion_dim = 0;
    int trivial_dim = 0;
    int flex_dim = 0;
    int stress_dim = 0;
    bool infinitesimally_rigid = false;
    bool independent = false;
    bool isostatic = false;
    bool spans_ambient = false;
};

RigidityMatrix rigidity_matrix(const Framework& fw);

/// Kernel of the rigidity matrix.
Subspace infinitesimal_motions(const Framework& fw, const NumericPolicy& policy);

/// Basis of the rigid-body motions u_i = A p_i + t evaluated at p, where
/// A = J K for skew K (so A^T J + J A = 0) and t ranges over translations.
/// fix_origin drops the translations. Dimension is the rank of the evaluated
/// generators, which can fall below binom(D+1,2) at degenerate configurations.
Subspace trivial_motion_basis(const Framework& fw, bool fix_origin, const NumericPolicy& policy);

/// Cokernel of the rigidity matrix.
Subspace self_stresses(const Framework& fw, const NumericPolicy& policy);

/// Whether the joints affinely span the ambient space.
bool spans_ambient(const Configuration& config, const NumericPolicy& policy);

AnalysisReport analyze(const Framework& fw, const NumericPolicy& policy);

/// Monte-Carlo estimate of the generic rigidity-matrix rank: maximum rank over
/// policy.sample_count random configurations with coordinates uniform in [-1,1].
struct RegularEstimate {
    int max_rank = 0;

    bool is_regular(int rank_at_p) const { return rank_at_p >= max_rank; }
};

RegularEstimate estimate_regular(const Graph& g, const Signature& sig, const NumericPolicy& policy,
                                 std::mt19937_64& rng);

/// The random configurations used by estimate_regular, in sampling order.
/// Exposed so the coned estimate can reuse the identical samples.
std::vector<Configuration> sample_configs(int n_vertices, int dim, int count, std::mt19937_64& rng);

}  // namespace conerig
