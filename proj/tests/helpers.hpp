#pragma once

#include "conerig/document.hpp"

#include <optional>
#include <random>

namespace conerig::testing {

inline NumericPolicy default_policy() { return NumericPolicy{}; }

inline Framework make_framework(int dim, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<std::vector<double>>& pts,
                                std::optional<Signature> maybe_sig = std::nullopt) {
    const Signature sig = maybe_sig.value_or(Signature(dim, 0));
    MatrixXd P(static_cast<int>(pts.size()), dim);
    for (size_t i = 0; i < pts.size(); ++i)
        for (int k = 0; k < dim; ++k) P(static_cast<int>(i), k) = pts[i][k];
    return Framework(Graph(static_cast<int>(pts.size()), edges), Configuration(dim, P), sig);
}

inline Framework random_framework(int n, int dim, double edge_prob, std::mt19937_64& rng,
                                  std::optional<Signature> maybe_sig = std::nullopt) {
    const Signature sig = maybe_sig.value_or(Signature(dim, 0));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::bernoulli_distribution keep(edge_prob);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (keep(rng)) edges.emplace_back(i, j);
    if (edges.empty()) edges.emplace_back(0, 1);
    MatrixXd P(n, dim);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < dim; ++k) P(i, k) = unif(rng);
    return Framework(Graph(n, std::move(edges)), Configuration(dim, std::move(P)), sig);
}

inline FrameworkDocument load_fixture(const std::string& name) {
#ifdef CONERIG_FIXTURE_DIR
    return load_framework_document(std::string(CONERIG_FIXTURE_DIR) + "/" + name);
#else
    return load_framework_document("fixtures/" + name);
#endif
}

/// |proj of v onto colspan(B) - v|: membership residual of v in span(B).
inline double span_residual(const MatrixXd& B, const VectorXd& v) {
    if (B.cols() == 0) return v.norm();
    const VectorXd proj = B * (B.transpose() * B).ldlt().solve(B.transpose() * v);
    return (proj - v).norm();
}

}  // namespace conerig::testing
