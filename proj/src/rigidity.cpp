#include "conerig/rigidity.hpp"

namespace conerig {

RigidityMatrix rigidity_matrix(const Framework& fw) {
    const int D = fw.dim();
    const int n = fw.graph.n_vertices;
    RigidityMatrix R;
    R.block_width = D;
    R.row_labels = fw.graph.edges;
    R.matrix = MatrixXd::Zero(fw.graph.n_edges(), D * n);
    for (int e = 0; e < fw.graph.n_edges(); ++e) {
        auto [i, j] = fw.graph.edges[e];
        const VectorXd diff = (fw.config.points.row(i) - fw.config.points.row(j)).transpose();
        const VectorXd h = hat(diff, fw.signature);
        R.matrix.block(e, D * i, 1, D) = h.transpose();
        R.matrix.block(e, D * j, 1, D) = -h.transpose();
    }
    return R;
}

Subspace infinitesimal_motions(const Framework& fw, const NumericPolicy& policy) {
    return kernel(rigidity_matrix(fw).matrix, policy);
}

Subspace trivial_motion_basis(const Framework& fw, bool fix_origin, const NumericPolicy& policy) {
    const int D = fw.dim();
    const int n = fw.graph.n_vertices;
    const VectorXd Jdiag = fw.signature.diagonal();

    std::vector<VectorXd> gens;
    for (int a = 0; a < D; ++a)
        for (int b = a + 1; b < D; ++b) {
            // A = J K with K = e_a e_b^T - e_b e_a^T
            VectorXd u = VectorXd::Zero(D * n);
            for (int i = 0; i < n; ++i) {
                u[D * i + a] = Jdiag[a] * fw.config.points(i, b);
                u[D * i + b] = -Jdiag[b] * fw.config.points(i, a);
            }
            gens.push_back(u);
        }
    if (!fix_origin)
        for (int k = 0; k < D; ++k) {
            VectorXd u = VectorXd::Zero(D * n);
            for (int i = 0; i < n; ++i) u[D * i + k] = 1.0;
            gens.push_back(u);
        }

    MatrixXd G(D * n, static_cast<int>(gens.size()));
    for (int c = 0; c < static_cast<int>(gens.size()); ++c) G.col(c) = gens[c];
    return Subspace{D * n, orthonormalize_columns(G, policy)};
}

Subspace self_stresses(const Framework& fw, const NumericPolicy& policy) {
    return cokernel(rigidity_matrix(fw).matrix, policy);
}

bool spans_ambient(const Configuration& config, const NumericPolicy& policy) {
    const int n = config.n_points();
    if (n == 0) return false;
    const Eigen::RowVectorXd centroid = config.points.colwise().mean();
    const MatrixXd centered = config.points.rowwise() - centroid;
    return numeric_rank(centered, policy) == config.dim;
}

AnalysisReport analyze(const Framework& fw, const NumericPolicy& policy) {
    policy.validate();
    const RigidityMatrix R = rigidity_matrix(fw);
    AnalysisReport rep;
    rep.rank = numeric_rank(R.matrix, policy);
    rep.motion_dim = static_cast<int>(R.matrix.cols()) - rep.rank;
    rep.trivial_dim = trivial_motion_basis(fw, false, policy).dimension();
    rep.flex_dim = rep.motion_dim - rep.trivial_dim;
    rep.stress_dim = fw.graph.n_edges() - rep.rank;
    rep.spans_ambient = spans_ambient(fw.config, policy);
    rep.infinitesimally_rigid = rep.flex_dim == 0 && rep.spans_ambient;
    rep.independent = rep.stress_dim == 0;
    rep.isostatic = rep.infinitesimally_rigid && rep.independent;
    return rep;
}

std::vector<Configuration> sample_configs(int n_vertices, int dim, int count,
                                          std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<Configuration> out;
    for (int s = 0; s < count; ++s) {
        MatrixXd pts(n_vertices, dim);
        for (int i = 0; i < n_vertices; ++i)
            for (int k = 0; k < dim; ++k) pts(i, k) = unif(rng);
        out.emplace_back(dim, std::move(pts));
    }
    return out;
}

RegularEstimate estimate_regular(const Graph& g, const Signature& sig, const NumericPolicy& policy,
                                 std::mt19937_64& rng) {
    policy.validate();
    RegularEstimate est;
    for (const Configuration& c : sample_configs(g.n_vertices, sig.dim(), policy.sample_count, rng)) {
        const Framework fw(g, c, sig);
        est.max_rank = std::max(est.max_rank, numeric_rank(rigidity_matrix(fw).matrix, policy));
    }
    return est;
}

}  // namespace conerig
