#include "conerig/orbit.hpp"

namespace conerig {

namespace {

VectorXd vertex_point(const SymFramework& sf, int i) {
    return sf.framework.config.points.row(i).transpose();
}

int mapping_element(const SymFramework& sf, int from, int to) {
    for (int x = 0; x < sf.group().size(); ++x)
        if (sf.perm(x, from) == to) return x;
    throw std::logic_error("mapping_element: vertices in different orbits");
}

SymFramework complete_graph_variant(const SymFramework& sf) {
    const int n = sf.framework.graph.n_vertices;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    Framework fw(Graph(n, std::move(edges)), sf.framework.config, sf.framework.signature);
    return SymFramework{std::move(fw), sf.type_map};
}

}  // namespace

OrbitRigidityMatrix orbit_matrix(const SymFramework& sf, const OrbitData& orbits,
                                 const NumericPolicy& policy) {
    const Signature& sig = sf.framework.signature;
    OrbitRigidityMatrix O;
    O.orbits = orbits;
    int cols = 0;
    for (int o = 0; o < orbits.k(); ++o) {
        O.col_start.push_back(cols);
        O.basis_mats.push_back(fixed_subspace(sf, orbits.vertex_reps[o], policy));
        cols += O.basis_mats.back().dimension();
    }
    O.matrix = MatrixXd::Zero(orbits.r(), cols);

    for (int row = 0; row < orbits.r(); ++row) {
        const EdgeOrbitForm& f = orbits.edge_orbits[row];
        const int oi = orbits.vertex_orbit_of[f.i];
        const VectorXd pi = vertex_point(sf, f.i);
        if (!f.case2) {
            const int oj = orbits.vertex_orbit_of[f.j];
            const VectorXd pj = vertex_point(sf, f.j);
            const MatrixXd& Mx = sf.group().elements[f.x];
            const MatrixXd& Mxinv = sf.group().elements[sf.group().inverse[f.x]];
            const VectorXd ri = hat(pi - Mx * pj, sig);
            const VectorXd rj = hat(pj - Mxinv * pi, sig);
            O.matrix.block(row, O.col_start[oi], 1, O.col_width(oi)) =
                ri.transpose() * O.basis_mats[oi].basis;
            O.matrix.block(row, O.col_start[oj], 1, O.col_width(oj)) =
                rj.transpose() * O.basis_mats[oj].basis;
        } else {
            const MatrixXd& My = sf.group().elements[f.x];
            const MatrixXd& Myinv = sf.group().elements[sf.group().inverse[f.x]];
            const VectorXd r = hat(2.0 * pi - My * pi - Myinv * pi, sig);
            O.matrix.block(row, O.col_start[oi], 1, O.col_width(oi)) =
                r.transpose() * O.basis_mats[oi].basis;
        }
    }
    return O;
}

Subspace symmetric_motions(const SymFramework& sf, const NumericPolicy& policy) {
    return kernel(orbit_matrix(sf, compute_orbits(sf), policy).matrix, policy);
}

Subspace symmetric_stresses(const SymFramework& sf, const NumericPolicy& policy) {
    return cokernel(orbit_matrix(sf, compute_orbits(sf), policy).matrix, policy);
}

VectorXd lift_motion(const SymFramework& sf, const OrbitRigidityMatrix& O, const VectorXd& v) {
    if (v.size() != O.total_cols())
        throw std::invalid_argument("lift_motion: coordinate vector size mismatch");
    const int D = sf.framework.dim();
    const int n = sf.framework.graph.n_vertices;
    VectorXd u = VectorXd::Zero(D * n);
    for (int o = 0; o < O.orbits.k(); ++o) {
        const int rep = O.orbits.vertex_reps[o];
        const VectorXd urep = O.basis_mats[o].basis * v.segment(O.col_start[o], O.col_width(o));
        for (int w : O.orbits.vertex_members[o]) {
            const int x = mapping_element(sf, rep, w);
            u.segment(D * w, D) = sf.group().elements[x] * urep;
        }
    }
    return u;
}

VectorXd lift_stress(const SymFramework& sf, const OrbitRigidityMatrix& O, const VectorXd& omega) {
    if (omega.size() != O.orbits.r())
        throw std::invalid_argument("lift_stress: coefficient count mismatch");
    VectorXd full(sf.framework.graph.n_edges());
    for (int e = 0; e < full.size(); ++e) full[e] = omega[O.orbits.edge_orbit_of[e]];
    return full;
}

bool s_regular(const SymFramework& sf, const NumericPolicy& policy, std::mt19937_64& rng) {
    policy.validate();
    const OrbitData orbits = compute_orbits(sf);
    const int rank_here = numeric_rank(orbit_matrix(sf, orbits, policy).matrix, policy);
    int max_rank = rank_here;
    for (int s = 0; s < policy.sample_count; ++s) {
        const Configuration c = sample_symmetric_config(sf, orbits, policy, rng);
        SymFramework sample{Framework(sf.framework.graph, c, sf.framework.signature), sf.type_map};
        max_rank = std::max(max_rank,
                            numeric_rank(orbit_matrix(sample, orbits, policy).matrix, policy));
    }
    return rank_here == max_rank;
}

int symmetric_trivial_dim(const SymFramework& sf, const NumericPolicy& policy) {
    const SymFramework full = complete_graph_variant(sf);
    return symmetric_motions(full, policy).dimension();
}

FlexPrediction predict_finite_flex(const SymFramework& sf, const NumericPolicy& policy,
                                   std::mt19937_64& rng) {
    FlexPrediction out;
    if (!spans_ambient(sf.framework.config, policy)) {
        out.withheld = true;
        return out;
    }
    out.s_regular = s_regular(sf, policy, rng);
    const int nullity = symmetric_motions(sf, policy).dimension();
    out.sym_flex_dim = nullity - symmetric_trivial_dim(sf, policy);
    out.predicted = out.s_regular && out.sym_flex_dim > 0;
    return out;
}

}  // namespace conerig
