#include "conerig/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace conerig {

namespace {

int find_element(const std::vector<MatrixXd>& elems, const MatrixXd& M, double tol) {
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        if ((elems[i] - M).cwiseAbs().maxCoeff() <= tol) return i;
    return -1;
}

}  // namespace

PointGroup PointGroup::from_elements(std::vector<MatrixXd> elems, Signature sig, double group_tol) {
    PointGroup g;
    g.dim = sig.dim();
    g.sig = sig;
    g.elements = std::move(elems);
    if (g.elements.empty()) throw std::invalid_argument("PointGroup: empty element list");

    const MatrixXd J = sig.diagonal().asDiagonal();
    for (const auto& M : g.elements) {
        if (M.rows() != g.dim || M.cols() != g.dim)
            throw std::invalid_argument("PointGroup: element of wrong dimension");
        if ((M.transpose() * J * M - J).cwiseAbs().maxCoeff() > group_tol)
            throw std::invalid_argument("PointGroup: element is not a signature isometry");
    }

    g.identity_index = find_element(g.elements, MatrixXd::Identity(g.dim, g.dim), group_tol);
    if (g.identity_index < 0) throw std::invalid_argument("PointGroup: identity missing");

    const int m = g.size();
    g.mult.assign(m, std::vector<int>(m, -1));
    g.inverse.assign(m, -1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int c = find_element(g.elements, g.elements[a] * g.elements[b], group_tol);
            if (c < 0) throw std::invalid_argument("PointGroup: not closed under multiplication");
            g.mult[a][b] = c;
            if (c == g.identity_index) g.inverse[a] = b;
        }
    for (int a = 0; a < m; ++a)
        if (g.inverse[a] < 0) throw std::invalid_argument("PointGroup: element without inverse");
    return g;
}

PointGroup identity_group(int dim) {
    return PointGroup::from_elements({MatrixXd::Identity(dim, dim)}, Signature(dim, 0), 1e-9);
}

namespace {

MatrixXd planar_rotation(double angle, int dim) {
    MatrixXd M = MatrixXd::Identity(dim, dim);
    M(0, 0) = std::cos(angle);
    M(0, 1) = -std::sin(angle);
    M(1, 0) = std::sin(angle);
    M(1, 1) = std::cos(angle);
    return M;
}

}  // namespace

PointGroup cyclic_group(int m, int dim) {
    if (m < 1 || dim < 2) throw std::invalid_argument("cyclic_group: need m >= 1, dim >= 2");
    std::vector<MatrixXd> elems;
    for (int j = 0; j < m; ++j) elems.push_back(planar_rotation(2.0 * M_PI * j / m, dim));
    return PointGroup::from_elements(std::move(elems), Signature(dim, 0), 1e-9);
}

PointGroup reflection_group(int dim, int axis) {
    MatrixXd R = MatrixXd::Identity(dim, dim);
    R(axis, axis) = -1.0;
    return PointGroup::from_elements({MatrixXd::Identity(dim, dim), R}, Signature(dim, 0), 1e-9);
}

PointGroup dihedral_group(int m, int dim) {
    MatrixXd R = MatrixXd::Identity(dim, dim);
    R(0, 0) = -1.0;
    std::vector<MatrixXd> elems;
    for (int j = 0; j < m; ++j) {
        MatrixXd C = planar_rotation(2.0 * M_PI * j / m, dim);
        elems.push_back(C);
        elems.push_back(R * C);
    }
    return PointGroup::from_elements(std::move(elems), Signature(dim, 0), 1e-9);
}

void TypeMap::validate(const Graph& g) const {
    const int m = group.size();
    if (static_cast<int>(perms.size()) != m)
        throw std::invalid_argument("TypeMap: permutation count != group order");
    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < g.n_edges(); ++e) edge_index[g.edges[e]] = e;

    for (int x = 0; x < m; ++x) {
        const auto& p = perms[x];
        if (static_cast<int>(p.size()) != g.n_vertices)
            throw std::invalid_argument("TypeMap: permutation of wrong length");
        std::vector<bool> seen(g.n_vertices, false);
        for (int i : p) {
            if (i < 0 || i >= g.n_vertices || seen[i])
                throw std::invalid_argument("TypeMap: not a permutation");
            seen[i] = true;
        }
        for (auto [u, v] : g.edges) {
            int a = p[u], b = p[v];
            if (a > b) std::swap(a, b);
            if (!edge_index.count({a, b}))
                throw std::invalid_argument("TypeMap: permutation does not preserve the edge set");
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int c = group.mult[a][b];
            for (int i = 0; i < g.n_vertices; ++i)
                if (perms[a][perms[b][i]] != perms[c][i])
                    throw std::invalid_argument("TypeMap: permutations are not a homomorphism");
        }
}

SymFramework validate_symmetric(const Framework& fw, const TypeMap& tm,
                                const NumericPolicy& policy) {
    if (tm.group.dim != fw.dim())
        throw std::invalid_argument("validate_symmetric: group dimension mismatch");
    tm.validate(fw.graph);
    for (int x = 0; x < tm.group.size(); ++x) {
        const MatrixXd& M = tm.group.elements[x];
        for (int i = 0; i < fw.graph.n_vertices; ++i) {
            const VectorXd lhs = M * fw.config.points.row(i).transpose();
            const VectorXd rhs = fw.config.points.row(tm.perms[x][i]).transpose();
            const double residual = (lhs - rhs).norm();
            if (residual > policy.group_tol)
                throw std::invalid_argument(
                    "validate_symmetric: element " + std::to_string(x) + " at vertex " +
                    std::to_string(i + 1) + " violates the symmetry equations, residual " +
                    std::to_string(residual));
        }
    }
    return SymFramework{fw, tm};
}

OrbitData compute_orbits(const SymFramework& sf) {
    const Graph& g = sf.framework.graph;
    const int m = sf.group().size();
    const int n = g.n_vertices;

    OrbitData od;
    od.vertex_orbit_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (od.vertex_orbit_of[i] >= 0) continue;
        const int id = static_cast<int>(od.vertex_reps.size());
        std::vector<int> members;
        for (int x = 0; x < m; ++x) {
            int w = sf.perm(x, i);
            if (od.vertex_orbit_of[w] < 0) {
                od.vertex_orbit_of[w] = id;
                members.push_back(w);
            }
        }
        std::sort(members.begin(), members.end());
        od.vertex_reps.push_back(members.front());
        od.vertex_members.push_back(std::move(members));
    }

    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < g.n_edges(); ++e) edge_index[g.edges[e]] = e;
    auto image_edge = [&](int e, int x) {
        auto [u, v] = g.edges[e];
        int a = sf.perm(x, u), b = sf.perm(x, v);
        if (a > b) std::swap(a, b);
        return edge_index.at({a, b});
    };

    od.edge_orbit_of.assign(g.n_edges(), -1);
    for (int e = 0; e < g.n_edges(); ++e) {
        if (od.edge_orbit_of[e] >= 0) continue;
        EdgeOrbitForm form;
        const int id = static_cast<int>(od.edge_orbits.size());
        for (int x = 0; x < m; ++x) {
            int f = image_edge(e, x);
            if (od.edge_orbit_of[f] < 0) {
                od.edge_orbit_of[f] = id;
                form.members.push_back(f);
            }
        }
        std::sort(form.members.begin(), form.members.end());
        form.rep_edge = form.members.front();

        auto [u, v] = g.edges[form.rep_edge];
        const int ou = od.vertex_orbit_of[u];
        const int ov = od.vertex_orbit_of[v];
        // map the representative edge onto the form {i, x(j)} / {i, x(i)}
        auto element_mapping = [&](int from, int to) {
            for (int x = 0; x < m; ++x)
                if (sf.perm(x, from) == to) return x;
            throw std::logic_error("compute_orbits: vertices not in the same orbit");
        };
        if (ou != ov) {
            form.case2 = false;
            if (od.vertex_reps[ov] < od.vertex_reps[ou]) std::swap(u, v);
            form.i = od.vertex_reps[od.vertex_orbit_of[u]];
            form.j = od.vertex_reps[od.vertex_orbit_of[v]];
            const int gmap = element_mapping(u, form.i);
            const int w = sf.perm(gmap, v);
            form.x = element_mapping(form.j, w);
        } else {
            form.case2 = true;
            form.i = od.vertex_reps[ou];
            const int gmap = element_mapping(u, form.i);
            const int w = sf.perm(gmap, v);
            form.j = form.i;
            form.x = element_mapping(form.i, w);
        }
        od.edge_orbits.push_back(std::move(form));
    }
    return od;
}

Subspace fixed_subspace(const SymFramework& sf, int vertex, const NumericPolicy& policy) {
    const PointGroup& g = sf.group();
    const int d = g.dim;
    std::vector<int> stab;
    for (int x = 0; x < g.size(); ++x)
        if (x != g.identity_index && sf.perm(x, vertex) == vertex) stab.push_back(x);
    if (stab.empty()) return Subspace{d, MatrixXd::Identity(d, d)};

    MatrixXd stacked(static_cast<int>(stab.size()) * d, d);
    for (int s = 0; s < static_cast<int>(stab.size()); ++s)
        stacked.middleRows(s * d, d) = g.elements[stab[s]] - MatrixXd::Identity(d, d);
    NumericPolicy p = policy;
    p.rank_rel_tol = policy.group_tol;
    Subspace U = kernel(stacked, p);
    // deterministic sign: largest-magnitude entry of each basis vector positive
    for (int c = 0; c < U.basis.cols(); ++c) {
        int idx = 0;
        U.basis.col(c).cwiseAbs().maxCoeff(&idx);
        if (U.basis(idx, c) < 0) U.basis.col(c) = -U.basis.col(c);
    }
    return U;
}

Configuration sample_symmetric_config(const SymFramework& sf, const OrbitData& orbits,
                                      const NumericPolicy& policy, std::mt19937_64& rng) {
    const int d = sf.framework.dim();
    const int n = sf.framework.graph.n_vertices;
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    for (int attempt = 0; attempt < 100; ++attempt) {
        MatrixXd pts = MatrixXd::Zero(n, d);
        for (int o = 0; o < orbits.k(); ++o) {
            const int rep = orbits.vertex_reps[o];
            const Subspace U = fixed_subspace(sf, rep, policy);
            VectorXd coeffs(U.dimension());
            for (int c = 0; c < coeffs.size(); ++c) coeffs[c] = unif(rng);
            const VectorXd prep = U.basis * coeffs;  // origin when U is zero-dimensional
            for (int member : orbits.vertex_members[o]) {
                for (int x = 0; x < sf.group().size(); ++x) {
                    if (sf.perm(x, rep) == member) {
                        pts.row(member) = (sf.group().elements[x] * prep).transpose();
                        break;
                    }
                }
            }
        }
        bool collision = false;
        for (int i = 0; i < n && !collision; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((pts.row(i) - pts.row(j)).norm() < 1e-6) { collision = true; break; }
        if (!collision) return Configuration(d, pts);
    }
    throw std::runtime_error("sample_symmetric_config: joints kept colliding after 100 attempts");
}

PointGroup extend_group(const PointGroup& g, bool minkowski_target) {
    if (!minkowski_target && g.sig.neg != 0)
        throw std::invalid_argument("extend_group: Euclidean extension requires a Euclidean base");
    const int d = g.dim;
    std::vector<MatrixXd> elems;
    for (const auto& M : g.elements) {
        MatrixXd E = MatrixXd::Zero(d + 1, d + 1);
        E.topLeftCorner(d, d) = M;
        E(d, d) = 1.0;
        elems.push_back(E);
    }
    const Signature sig =
        minkowski_target ? Signature(g.sig.pos, g.sig.neg + 1) : Signature(g.sig.pos + 1, g.sig.neg);
    return PointGroup::from_elements(std::move(elems), sig, 1e-9);
}

SymFramework with_identity_group(const Framework& fw) {
    TypeMap tm;
    tm.group = PointGroup::from_elements({MatrixXd::Identity(fw.dim(), fw.dim())}, fw.signature, 1e-9);
    std::vector<int> id(fw.graph.n_vertices);
    std::iota(id.begin(), id.end(), 0);
    tm.perms = {id};
    return SymFramework{fw, tm};
}

}  // namespace conerig
