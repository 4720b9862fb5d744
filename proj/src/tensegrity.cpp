#include "conerig/tensegrity.hpp"

#include "conerig/simplex.hpp"

#include <set>

namespace conerig {

std::string member_kind_name(MemberKind k) {
    switch (k) {
        case MemberKind::bar: return "bar";
        case MemberKind::cable: return "cable";
        case MemberKind::strut: return "strut";
    }
    throw std::logic_error("member_kind_name: unknown kind");
}

MemberKind parse_member_kind(const std::string& name) {
    if (name == "bar") return MemberKind::bar;
    if (name == "cable") return MemberKind::cable;
    if (name == "strut") return MemberKind::strut;
    throw std::invalid_argument("unknown member kind: " + name);
}

TensegrityFramework::TensegrityFramework(SymFramework sf, std::vector<MemberKind> k)
    : framework(std::move(sf)), kinds(std::move(k)) {
    if (static_cast<int>(kinds.size()) != framework.framework.graph.n_edges())
        throw std::invalid_argument("TensegrityFramework: one kind per edge required");
    const OrbitData orbits = compute_orbits(framework);
    for (const EdgeOrbitForm& f : orbits.edge_orbits)
        for (int e : f.members)
            if (kinds[e] != kinds[f.members.front()])
                throw std::invalid_argument(
                    "TensegrityFramework: member kinds vary within an edge orbit");
}

std::optional<VectorXd> proper_stress_in_span(const MatrixXd& N,
                                              const std::vector<MemberKind>& kinds, bool strict) {
    const int n_edges = static_cast<int>(N.rows());
    const int s = static_cast<int>(N.cols());
    if (static_cast<int>(kinds.size()) != n_edges)
        throw std::invalid_argument("proper_stress_in_span: kind count mismatch");

    int n_signed = 0;
    for (MemberKind k : kinds)
        if (k != MemberKind::bar) ++n_signed;
    if (s == 0 || n_signed == 0) {
        // only the zero stress is available / required
        if (strict && n_signed > 0) return std::nullopt;
        return VectorXd::Zero(n_edges);
    }

    // variables: z' in [0,2]^s (z = z' - 1), t in [0,1]; maximize t
    const int nv = s + 1;
    const int m = n_signed + s + 1;
    MatrixXd A = MatrixXd::Zero(m, nv);
    VectorXd b = VectorXd::Zero(m);
    int row = 0;
    for (int e = 0; e < n_edges; ++e) {
        if (kinds[e] == MemberKind::bar) continue;
        const double shift = N.row(e).sum();
        if (kinds[e] == MemberKind::cable) {
            // N_e z >= t  ->  -N_e z' + t <= -shift
            A.block(row, 0, 1, s) = -N.row(e);
            A(row, s) = 1.0;
            b[row] = -shift;
        } else {
            // N_e z <= -t  ->  N_e z' + t <= shift
            A.block(row, 0, 1, s) = N.row(e);
            A(row, s) = 1.0;
            b[row] = shift;
        }
        ++row;
    }
    for (int k = 0; k < s; ++k) {
        A(row, k) = 1.0;
        b[row++] = 2.0;
    }
    A(row, s) = 1.0;
    b[row] = 1.0;

    VectorXd c = VectorXd::Zero(nv);
    c[s] = 1.0;
    const LpResult lp = solve_lp_max(A, b, c);
    if (!lp.feasible) return std::nullopt;  // cannot happen: z = 0, t = 0 is feasible
    if (strict && lp.objective <= 1e-8) return std::nullopt;
    const VectorXd z = lp.x.head(s) - VectorXd::Ones(s);
    return VectorXd(N * z);
}

namespace {

MatrixXd symmetric_stress_span(const SymFramework& sf, const NumericPolicy& policy) {
    const OrbitData orbits = compute_orbits(sf);
    const OrbitRigidityMatrix O = orbit_matrix(sf, orbits, policy);
    const Subspace sym = cokernel(O.matrix, policy);
    MatrixXd N(sf.framework.graph.n_edges(), sym.dimension());
    for (int c = 0; c < sym.dimension(); ++c) N.col(c) = lift_stress(sf, O, sym.basis.col(c));
    return N;
}

}  // namespace

std::optional<VectorXd> proper_stress(const TensegrityFramework& tf, bool strict,
                                      const NumericPolicy& policy, bool symmetric_only) {
    const MatrixXd N = symmetric_only
                           ? symmetric_stress_span(tf.framework, policy)
                           : self_stresses(tf.framework.framework, policy).basis;
    return proper_stress_in_span(N, tf.kinds, strict);
}

bool tensegrity_rigid(const TensegrityFramework& tf, const NumericPolicy& policy,
                      bool symmetric_only) {
    if (!analyze(tf.framework.framework, policy).infinitesimally_rigid) return false;
    return proper_stress(tf, true, policy, symmetric_only).has_value();
}

std::vector<MemberKind> ConedTensegrity::cone_kinds() const {
    std::vector<MemberKind> kinds = base_kinds;
    kinds.insert(kinds.end(), cone.n(), MemberKind::bar);
    return kinds;
}

ConedTensegrity cone_tensegrity(const TensegrityFramework& tf, MetricTag target) {
    ConedTensegrity ct;
    ct.cone = push_to_target(cone_framework(tf.framework, target), target);
    ct.base_kinds = tf.kinds;
    for (int i = 0; i < ct.cone.n(); ++i)
        if (ct.cone.alphas[i] <= 0.0)
            throw std::invalid_argument("cone_tensegrity: pulls must stay in the upper half-space");
    return ct;
}

bool cone_tensegrity_rigid(const ConedTensegrity& ct, const NumericPolicy& policy) {
    const RigidityMatrix R = cone_rigidity_matrix(ct.cone, false);
    const int nullity = static_cast<int>(R.matrix.cols()) - numeric_rank(R.matrix, policy);
    const Framework joints(ct.cone.base.framework.graph,
                           Configuration(ct.cone.cone_dim(), ct.cone.coned_points()),
                           ct.cone.cone_sig);
    const int trivial = trivial_motion_basis(joints, true, policy).dimension();
    if (nullity != trivial) return false;
    const MatrixXd N = cokernel(R.matrix, policy).basis;
    return proper_stress_in_span(N, ct.cone_kinds(), true).has_value();
}

ConedTensegrity invert_tensegrity_orbits(const ConedTensegrity& ct,
                                         const std::vector<int>& orbit_ids) {
    ConedTensegrity out = ct;
    out.cone = invert_orbits(ct.cone, orbit_ids);
    std::set<int> inverted;
    for (int o : orbit_ids)
        for (int v : ct.cone.base_orbits.vertex_members[o]) inverted.insert(v);
    const Graph& g = ct.cone.base.framework.graph;
    for (int e = 0; e < g.n_edges(); ++e) {
        auto [u, v] = g.edges[e];
        const bool one_end = inverted.count(u) + inverted.count(v) == 1;
        if (!one_end || out.base_kinds[e] == MemberKind::bar) continue;
        out.base_kinds[e] =
            out.base_kinds[e] == MemberKind::cable ? MemberKind::strut : MemberKind::cable;
    }
    return out;
}

}  // namespace conerig
