#include "conerig/coning.hpp"

#include <cmath>
#include <set>

namespace conerig {

std::string metric_name(MetricTag tag) {
    switch (tag) {
        case MetricTag::euclidean_plane: return "euclidean";
        case MetricTag::euclidean_cone: return "euclidean_cone";
        case MetricTag::hemisphere: return "hemisphere";
        case MetricTag::whole_sphere: return "whole_sphere";
        case MetricTag::minkowski_cone: return "minkowski_cone";
        case MetricTag::hyperbolic: return "hyperbolic";
        case MetricTag::de_sitter: return "de_sitter";
    }
    throw std::logic_error("metric_name: unknown tag");
}

MetricTag parse_metric(const std::string& name) {
    if (name == "euclidean") return MetricTag::euclidean_plane;
    if (name == "euclidean_cone") return MetricTag::euclidean_cone;
    if (name == "hemisphere" || name == "sphere") return MetricTag::hemisphere;
    if (name == "whole_sphere") return MetricTag::whole_sphere;
    if (name == "minkowski_cone" || name == "minkowski") return MetricTag::minkowski_cone;
    if (name == "hyperbolic") return MetricTag::hyperbolic;
    if (name == "de_sitter") return MetricTag::de_sitter;
    throw std::invalid_argument("unknown metric tag: " + name);
}

MatrixXd ConedFramework::coned_points() const {
    const int D = base.framework.dim();
    MatrixXd q(n(), D + 1);
    for (int i = 0; i < n(); ++i) {
        q.block(i, 0, 1, D) = alphas[i] * base.framework.config.points.row(i);
        q(i, D) = alphas[i];
    }
    return q;
}

bool ConedFramework::alphas_orbit_constant(double tol) const {
    for (int o = 0; o < base_orbits.k(); ++o) {
        const double a = alphas[base_orbits.vertex_members[o].front()];
        for (int v : base_orbits.vertex_members[o])
            if (std::abs(alphas[v] - a) > tol) return false;
    }
    return true;
}

Graph cone_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges = g.edges;
    for (int i = 0; i < g.n_vertices; ++i) edges.emplace_back(i, g.n_vertices);
    return Graph(g.n_vertices + 1, std::move(edges));
}

namespace {

bool minkowski_target(MetricTag t) {
    return t == MetricTag::minkowski_cone || t == MetricTag::hyperbolic ||
           t == MetricTag::de_sitter;
}

void check_push_domain(const ConedFramework& cf, bool de_sitter) {
    constexpr double margin = 1e-8;
    for (int i = 0; i < cf.n(); ++i) {
        const double norm = cf.base.framework.config.points.row(i).norm();
        if (!de_sitter && norm >= 1.0 - margin)
            throw std::invalid_argument("hyperbolic target: joint " + std::to_string(i + 1) +
                                        " has norm " + std::to_string(norm) +
                                        ", needs norm < 1");
        if (de_sitter && norm <= 1.0 + margin)
            throw std::invalid_argument("de Sitter target: joint " + std::to_string(i + 1) +
                                        " has norm " + std::to_string(norm) +
                                        ", needs norm > 1");
    }
}

}  // namespace

ConedFramework cone_framework(const SymFramework& sf, MetricTag target) {
    if (target == MetricTag::euclidean_plane)
        throw std::invalid_argument("cone_framework: target must be a coned metric");
    const Signature& bs = sf.framework.signature;
    ConedFramework cf;
    cf.base = sf;
    cf.base_orbits = compute_orbits(sf);
    cf.metric = minkowski_target(target) ? MetricTag::minkowski_cone : MetricTag::euclidean_cone;
    const bool mink = minkowski_target(target);
    if (!mink && bs.neg != 0)
        throw std::invalid_argument("cone_framework: Euclidean cone needs a Euclidean base");
    cf.cone_sig = mink ? Signature(bs.pos, bs.neg + 1) : Signature(bs.pos + 1, bs.neg);
    cf.cone_group = extend_group(sf.group(), mink);
    cf.alphas = VectorXd::Ones(cf.n());
    if (target == MetricTag::hyperbolic) check_push_domain(cf, false);
    if (target == MetricTag::de_sitter) check_push_domain(cf, true);
    return cf;
}

ConedFramework cone_framework(const Framework& fw, MetricTag target) {
    return cone_framework(with_identity_group(fw), target);
}

SymFramework coned_sym_framework(const ConedFramework& cf) {
    if (!cf.alphas_orbit_constant())
        throw std::invalid_argument("coned_sym_framework: alphas vary within an orbit");
    const int n = cf.n();
    MatrixXd pts(n + 1, cf.cone_dim());
    pts.topRows(n) = cf.coned_points();
    pts.row(n).setZero();
    Framework fw(cone_graph(cf.base.framework.graph), Configuration(cf.cone_dim(), pts),
                 cf.cone_sig);
    TypeMap tm;
    tm.group = cf.cone_group;
    for (const auto& perm : cf.base.type_map.perms) {
        std::vector<int> p = perm;
        p.push_back(n);
        tm.perms.push_back(std::move(p));
    }
    return SymFramework{std::move(fw), std::move(tm)};
}

RigidityMatrix cone_rigidity_matrix(const ConedFramework& cf, bool modified) {
    const int n = cf.n();
    const int D1 = cf.cone_dim();
    const Graph& g = cf.base.framework.graph;
    const MatrixXd q = cf.coned_points();

    RigidityMatrix R;
    R.block_width = D1;
    R.matrix = MatrixXd::Zero(g.n_edges() + n, D1 * n);
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [i, j] = g.edges[e];
        R.row_labels.emplace_back(i, j);
        if (modified) {
            R.matrix.block(e, D1 * i, 1, D1) =
                -hat(q.row(j).transpose(), cf.cone_sig).transpose();
            R.matrix.block(e, D1 * j, 1, D1) =
                -hat(q.row(i).transpose(), cf.cone_sig).transpose();
        } else {
            const VectorXd h = hat((q.row(i) - q.row(j)).transpose(), cf.cone_sig);
            R.matrix.block(e, D1 * i, 1, D1) = h.transpose();
            R.matrix.block(e, D1 * j, 1, D1) = -h.transpose();
        }
    }
    for (int i = 0; i < n; ++i) {
        const int row = g.n_edges() + i;
        R.row_labels.emplace_back(-1, i);  // -1 marks the cone joint
        R.matrix.block(row, D1 * i, 1, D1) =
            hat(q.row(i).transpose(), cf.cone_sig).transpose();
    }
    return R;
}

OrbitRigidityMatrix cone_orbit_matrix(const ConedFramework& cf, const NumericPolicy& policy,
                                      bool modified) {
    const OrbitData& orbits = cf.base_orbits;
    const int D1 = cf.cone_dim();
    const MatrixXd q = cf.coned_points();

    OrbitRigidityMatrix O;
    O.orbits = orbits;
    int cols = 0;
    for (int o = 0; o < orbits.k(); ++o) {
        // M_i* = blockdiag(M_i, 1)
        const Subspace Mi = fixed_subspace(cf.base, orbits.vertex_reps[o], policy);
        MatrixXd star = MatrixXd::Zero(D1, Mi.dimension() + 1);
        star.block(0, 0, D1 - 1, Mi.dimension()) = Mi.basis;
        star(D1 - 1, Mi.dimension()) = 1.0;
        O.col_start.push_back(cols);
        O.basis_mats.push_back(Subspace{D1, std::move(star)});
        cols += O.basis_mats.back().dimension();
    }

    const int r = orbits.r();
    O.matrix = MatrixXd::Zero(r + orbits.k(), cols);

    // coning rows {0,i}, one per vertex orbit, written after the edge-orbit rows
    for (int o = 0; o < orbits.k(); ++o) {
        const int rep = orbits.vertex_reps[o];
        O.matrix.block(r + o, O.col_start[o], 1, O.col_width(o)) =
            hat(q.row(rep).transpose(), cf.cone_sig).transpose() * O.basis_mats[o].basis;
    }

    for (int row = 0; row < r; ++row) {
        const EdgeOrbitForm& f = orbits.edge_orbits[row];
        const int oi = orbits.vertex_orbit_of[f.i];
        const VectorXd qi = q.row(f.i).transpose();
        if (!f.case2) {
            const int oj = orbits.vertex_orbit_of[f.j];
            const VectorXd qj = q.row(f.j).transpose();
            const MatrixXd& Mx = cf.cone_group.elements[f.x];
            const MatrixXd& Mxinv = cf.cone_group.elements[cf.cone_group.inverse[f.x]];
            O.matrix.block(row, O.col_start[oi], 1, O.col_width(oi)) =
                hat(qi - Mx * qj, cf.cone_sig).transpose() * O.basis_mats[oi].basis;
            O.matrix.block(row, O.col_start[oj], 1, O.col_width(oj)) =
                hat(qj - Mxinv * qi, cf.cone_sig).transpose() * O.basis_mats[oj].basis;
            if (modified) {
                O.matrix.row(row) -= O.matrix.row(r + oi);
                O.matrix.row(row) -= O.matrix.row(r + oj);
            }
        } else {
            const MatrixXd& My = cf.cone_group.elements[f.x];
            const MatrixXd& Myinv = cf.cone_group.elements[cf.cone_group.inverse[f.x]];
            O.matrix.block(row, O.col_start[oi], 1, O.col_width(oi)) =
                hat(2.0 * qi - My * qi - Myinv * qi, cf.cone_sig).transpose() *
                O.basis_mats[oi].basis;
            if (modified) O.matrix.row(row) -= O.matrix.row(r + oi);
        }
    }
    return O;
}

VectorXd transfer_velocity(const VectorXd& u, const ConedFramework& cf) {
    const int D = cf.base.framework.dim();
    const int n = cf.n();
    if (u.size() != D * n) throw std::invalid_argument("transfer_velocity: size mismatch");
    const double eps = cf.minkowskian() ? 1.0 : -1.0;
    VectorXd v((D + 1) * n);
    for (int i = 0; i < n; ++i) {
        const VectorXd ui = u.segment(D * i, D);
        v.segment((D + 1) * i, D) = cf.alphas[i] * ui;
        v[(D + 1) * i + D] =
            cf.alphas[i] * eps * ui.dot(cf.base.framework.config.points.row(i).transpose());
    }
    return v;
}

VectorXd transfer_stress(const VectorXd& omega, const ConedFramework& cf, bool modified) {
    const Graph& g = cf.base.framework.graph;
    if (omega.size() != g.n_edges()) throw std::invalid_argument("transfer_stress: size mismatch");
    const int n = cf.n();
    VectorXd out = VectorXd::Zero(g.n_edges() + n);
    VectorXd row_sum = VectorXd::Zero(n);        // sum_j w_ij at alpha = 1
    VectorXd scaled_sum = VectorXd::Zero(n);     // sum_j w_ij / (alpha_i alpha_j)
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [i, j] = g.edges[e];
        out[e] = omega[e] / (cf.alphas[i] * cf.alphas[j]);
        row_sum[i] += omega[e];
        row_sum[j] += omega[e];
        scaled_sum[i] += out[e];
        scaled_sum[j] += out[e];
    }
    for (int i = 0; i < n; ++i) {
        const double mod_coeff = row_sum[i] / (cf.alphas[i] * cf.alphas[i]);
        out[g.n_edges() + i] = modified ? mod_coeff : mod_coeff - scaled_sum[i];
    }
    return out;
}

VectorXd transfer_orbit_stress(const VectorXd& omega, const ConedFramework& cf, bool modified) {
    const OrbitData& orbits = cf.base_orbits;
    if (omega.size() != orbits.r())
        throw std::invalid_argument("transfer_orbit_stress: size mismatch");
    VectorXd out = VectorXd::Zero(orbits.r() + orbits.k());
    VectorXd row_sum = VectorXd::Zero(orbits.k());
    VectorXd scaled_sum = VectorXd::Zero(orbits.k());
    for (int row = 0; row < orbits.r(); ++row) {
        const EdgeOrbitForm& f = orbits.edge_orbits[row];
        const int oi = orbits.vertex_orbit_of[f.i];
        const double ai = cf.alphas[f.i];
        if (!f.case2) {
            const int oj = orbits.vertex_orbit_of[f.j];
            const double aj = cf.alphas[f.j];
            out[row] = omega[row] / (ai * aj);
            row_sum[oi] += omega[row];
            row_sum[oj] += omega[row];
            scaled_sum[oi] += out[row];
            scaled_sum[oj] += out[row];
        } else {
            out[row] = omega[row] / (ai * ai);
            row_sum[oi] += omega[row];
            scaled_sum[oi] += out[row];
        }
    }
    for (int o = 0; o < orbits.k(); ++o) {
        const double ao = cf.alphas[orbits.vertex_reps[o]];
        const double mod_coeff = row_sum[o] / (ao * ao);
        out[orbits.r() + o] = modified ? mod_coeff : mod_coeff - scaled_sum[o];
    }
    return out;
}

ConedFramework pull_orbits(const ConedFramework& cf, const std::vector<double>& orbit_alphas) {
    if (static_cast<int>(orbit_alphas.size()) != cf.base_orbits.k())
        throw std::invalid_argument("pull_orbits: need one scalar per vertex orbit");
    for (double a : orbit_alphas)
        if (a == 0.0) throw std::invalid_argument("pull_orbits: zero scalar");
    ConedFramework out = cf;
    for (int o = 0; o < cf.base_orbits.k(); ++o)
        for (int v : cf.base_orbits.vertex_members[o]) out.alphas[v] *= orbit_alphas[o];
    return out;
}

ConedFramework push_to_sphere(const ConedFramework& cf) {
    if (cf.minkowskian())
        throw std::invalid_argument("push_to_sphere: needs a Euclidean cone");
    ConedFramework out = cf;
    for (int i = 0; i < cf.n(); ++i) {
        const double norm2 = cf.base.framework.config.points.row(i).squaredNorm() + 1.0;
        out.alphas[i] = 1.0 / std::sqrt(norm2);
    }
    out.metric = MetricTag::hemisphere;
    return out;
}

ConedFramework push_to_hyperboloid(const ConedFramework& cf) {
    if (!cf.minkowskian())
        throw std::invalid_argument("push_to_hyperboloid: needs a Minkowskian cone");
    check_push_domain(cf, false);
    ConedFramework out = cf;
    for (int i = 0; i < cf.n(); ++i) {
        const double norm2 = cf.base.framework.config.points.row(i).squaredNorm();
        out.alphas[i] = 1.0 / std::sqrt(1.0 - norm2);
    }
    out.metric = MetricTag::hyperbolic;
    return out;
}

ConedFramework push_to_de_sitter(const ConedFramework& cf) {
    if (!cf.minkowskian())
        throw std::invalid_argument("push_to_de_sitter: needs a Minkowskian cone");
    check_push_domain(cf, true);
    ConedFramework out = cf;
    for (int i = 0; i < cf.n(); ++i) {
        const double norm2 = cf.base.framework.config.points.row(i).squaredNorm();
        out.alphas[i] = 1.0 / std::sqrt(norm2 - 1.0);
    }
    out.metric = MetricTag::de_sitter;
    return out;
}

Framework project_back(const ConedFramework& cf) {
    const int D = cf.base.framework.dim();
    const MatrixXd q = cf.coned_points();
    MatrixXd pts(cf.n(), D);
    for (int i = 0; i < cf.n(); ++i) {
        const double h = q(i, D);
        if (std::abs(h) <= 1e-12)
            throw std::invalid_argument("project_back: joint " + std::to_string(i + 1) +
                                        " lies on the hyperplane at infinity");
        pts.row(i) = q.block(i, 0, 1, D) / h;
    }
    return Framework(cf.base.framework.graph, Configuration(D, std::move(pts)),
                     cf.base.framework.signature);
}

ConedFramework invert_orbits(const ConedFramework& cf, const std::vector<int>& orbit_ids) {
    ConedFramework out = cf;
    std::set<int> seen;
    for (int o : orbit_ids) {
        if (o < 0 || o >= cf.base_orbits.k())
            throw std::invalid_argument("invert_orbits: orbit id out of range");
        if (!seen.insert(o).second) continue;
        for (int v : cf.base_orbits.vertex_members[o]) out.alphas[v] = -out.alphas[v];
    }
    if (!orbit_ids.empty() && out.metric == MetricTag::hemisphere)
        out.metric = MetricTag::whole_sphere;
    return out;
}

ConedFramework invert_vertices(const ConedFramework& cf, const std::vector<int>& vertices) {
    ConedFramework out = cf;
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= cf.n())
            throw std::invalid_argument("invert_vertices: vertex out of range");
        if (!seen.insert(v).second) continue;
        out.alphas[v] = -out.alphas[v];
    }
    if (!vertices.empty() && out.metric == MetricTag::hemisphere)
        out.metric = MetricTag::whole_sphere;
    return out;
}

Framework signature_flip(const Framework& fw, int k) {
    if (k < 0 || k > fw.signature.neg)
        throw std::invalid_argument("signature_flip: k must be between 0 and neg");
    MatrixXd pts = fw.config.points;
    for (int s = fw.signature.pos; s < fw.signature.pos + k; ++s) pts.col(s) = -pts.col(s);
    return Framework(fw.graph, Configuration(fw.dim(), std::move(pts)),
                     Signature(fw.signature.pos + k, fw.signature.neg - k));
}

void TransferReport::add(std::string name, bool pass, std::string detail) {
    all_pass = all_pass && pass;
    clauses.push_back(TransferClause{std::move(name), pass, std::move(detail)});
}

ConedFramework push_to_target(const ConedFramework& cone, MetricTag target) {
    switch (target) {
        case MetricTag::hemisphere:
        case MetricTag::whole_sphere: return push_to_sphere(cone);
        case MetricTag::hyperbolic: return push_to_hyperboloid(cone);
        case MetricTag::de_sitter: return push_to_de_sitter(cone);
        default: return cone;
    }
}

namespace {

Framework coned_joint_framework(const ConedFramework& cf) {
    return Framework(cf.base.framework.graph, Configuration(cf.cone_dim(), cf.coned_points()),
                     cf.cone_sig);
}

}  // namespace

TransferReport verify_transfer(const SymFramework& sf, MetricTag target,
                               const NumericPolicy& policy, std::mt19937_64& rng) {
    policy.validate();
    constexpr double residual_tol = 1e-8;
    TransferReport rep;
    rep.target = target;

    const ConedFramework cf = push_to_target(cone_framework(sf, target), target);
    const Framework& base = sf.framework;
    const int n = base.graph.n_vertices;

    const RigidityMatrix Rbase = rigidity_matrix(base);
    const int rank_base = numeric_rank(Rbase.matrix, policy);
    const RigidityMatrix Rcone = cone_rigidity_matrix(cf, false);
    const RigidityMatrix Rcone_mod = cone_rigidity_matrix(cf, true);
    const int rank_cone = numeric_rank(Rcone.matrix, policy);
    const int rank_cone_mod = numeric_rank(Rcone_mod.matrix, policy);

    const OrbitData orbits = cf.base_orbits;
    const OrbitRigidityMatrix Obase = orbit_matrix(sf, orbits, policy);
    const int rank_orbit = numeric_rank(Obase.matrix, policy);
    const OrbitRigidityMatrix Ocone = cone_orbit_matrix(cf, policy, false);
    const OrbitRigidityMatrix Ocone_mod = cone_orbit_matrix(cf, policy, true);
    const int rank_ocone = numeric_rank(Ocone.matrix, policy);

    rep.add("rank_step",
            rank_cone == rank_base + n && rank_cone_mod == rank_cone &&
                rank_ocone == rank_orbit + orbits.k() &&
                numeric_rank(Ocone_mod.matrix, policy) == rank_ocone,
            "rank(cone) = " + std::to_string(rank_cone) + ", rank(base) + n = " +
                std::to_string(rank_base + n) + "; rank(cone orbit) = " +
                std::to_string(rank_ocone) + ", rank(orbit) + k = " +
                std::to_string(rank_orbit + orbits.k()));

    const AnalysisReport base_rep = analyze(base, policy);
    const Framework coned_joints = coned_joint_framework(cf);
    const int trivial_cone = trivial_motion_basis(coned_joints, true, policy).dimension();
    const int nullity_cone = static_cast<int>(Rcone.matrix.cols()) - rank_cone;
    const int flex_cone = nullity_cone - trivial_cone;
    const int sym_nullity_base = static_cast<int>(Obase.matrix.cols()) - rank_orbit;
    const int sym_nullity_cone = static_cast<int>(Ocone.matrix.cols()) - rank_ocone;
    rep.add("motion_dims",
            flex_cone == base_rep.flex_dim && sym_nullity_cone == sym_nullity_base,
            "flex dim " + std::to_string(base_rep.flex_dim) + " -> " + std::to_string(flex_cone) +
                "; symmetric motion dim " + std::to_string(sym_nullity_base) + " -> " +
                std::to_string(sym_nullity_cone));

    const int stress_cone = static_cast<int>(Rcone.matrix.rows()) - rank_cone;
    const int sym_stress_base = orbits.r() - rank_orbit;
    const int sym_stress_cone = static_cast<int>(Ocone.matrix.rows()) - rank_ocone;
    rep.add("stress_dims",
            stress_cone == base_rep.stress_dim && sym_stress_cone == sym_stress_base,
            "stress dim " + std::to_string(base_rep.stress_dim) + " -> " +
                std::to_string(stress_cone) + "; symmetric stress dim " +
                std::to_string(sym_stress_base) + " -> " + std::to_string(sym_stress_cone));

    double worst = 0.0;
    const Subspace motions = kernel(Rbase.matrix, policy);
    for (int c = 0; c < motions.dimension(); ++c) {
        const VectorXd v = transfer_velocity(motions.basis.col(c), cf);
        worst = std::max(worst, (Rcone.matrix * v).cwiseAbs().maxCoeff());
        worst = std::max(worst, (Rcone_mod.matrix * v).cwiseAbs().maxCoeff());
    }
    const Subspace stresses = cokernel(Rbase.matrix, policy);
    for (int c = 0; c < stresses.dimension(); ++c) {
        const VectorXd w0 = transfer_stress(stresses.basis.col(c), cf, false);
        const VectorXd w1 = transfer_stress(stresses.basis.col(c), cf, true);
        worst = std::max(worst, (w0.transpose() * Rcone.matrix).cwiseAbs().maxCoeff());
        worst = std::max(worst, (w1.transpose() * Rcone_mod.matrix).cwiseAbs().maxCoeff());
    }
    const Subspace sym_stresses = cokernel(Obase.matrix, policy);
    for (int c = 0; c < sym_stresses.dimension(); ++c) {
        const VectorXd w0 = transfer_orbit_stress(sym_stresses.basis.col(c), cf, false);
        const VectorXd w1 = transfer_orbit_stress(sym_stresses.basis.col(c), cf, true);
        worst = std::max(worst, (w0.transpose() * Ocone.matrix).cwiseAbs().maxCoeff());
        worst = std::max(worst, (w1.transpose() * Ocone_mod.matrix).cwiseAbs().maxCoeff());
    }
    rep.add("transferred_residuals", worst <= residual_tol,
            "max residual " + std::to_string(worst));

    // matched-seed regularity comparison
    std::mt19937_64 seeded(policy.rng_seed);
    const auto samples = sample_configs(n, base.dim(), policy.sample_count, seeded);
    int max_base = 0, max_cone = 0;
    for (const Configuration& c : samples) {
        const Framework sample_fw(base.graph, c, base.signature);
        max_base = std::max(max_base, numeric_rank(rigidity_matrix(sample_fw).matrix, policy));
        ConedFramework sample_cone = cone_framework(with_identity_group(sample_fw),
                                                    cf.minkowskian() ? MetricTag::minkowski_cone
                                                                     : MetricTag::euclidean_cone);
        max_cone = std::max(
            max_cone, numeric_rank(cone_rigidity_matrix(sample_cone, false).matrix, policy));
    }
    const bool reg_base = rank_base >= max_base;
    const bool reg_cone = rank_cone >= max_cone;
    rep.add("regularity_agrees", reg_base == reg_cone,
            std::string("base ") + (reg_base ? "regular" : "non-regular") + ", cone " +
                (reg_cone ? "regular" : "non-regular"));
    (void)rng;
    return rep;
}

}  // namespace conerig
