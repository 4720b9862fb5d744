#include "conerig/types.hpp"

#include <set>

namespace conerig {

Graph::Graph(int n, std::vector<std::pair<int, int>> e) : n_vertices(n), edges(std::move(e)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range: {" +
                                        std::to_string(u) + "," + std::to_string(v) + "}");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
    }
}

Framework::Framework(Graph g, Configuration c, Signature s)
    : graph(std::move(g)), config(std::move(c)), signature(s) {
    if (config.dim != signature.dim())
        throw std::invalid_argument("Framework: config dimension != signature dimension");
    if (config.n_points() != graph.n_vertices)
        throw std::invalid_argument("Framework: point count != vertex count");
    const int n = graph.n_vertices;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((config.points.row(i) - config.points.row(j)).norm() == 0.0)
                throw std::invalid_argument("Framework: coincident joints " + std::to_string(i + 1) +
                                            " and " + std::to_string(j + 1));
}

double signature_inner(const VectorXd& a, const VectorXd& b, const Signature& sig) {
    if (a.size() != sig.dim() || b.size() != sig.dim())
        throw std::invalid_argument("signature_inner: dimension mismatch");
    double s = 0.0;
    for (int k = 0; k < sig.dim(); ++k) s += sig.sign(k) * a[k] * b[k];
    return s;
}

VectorXd hat(const VectorXd& a, const Signature& sig) {
    if (a.size() != sig.dim()) throw std::invalid_argument("hat: dimension mismatch");
    VectorXd r = a;
    for (int k = sig.pos; k < sig.dim(); ++k) r[k] = -r[k];
    return r;
}

}  // namespace conerig
