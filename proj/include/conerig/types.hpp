#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conerig {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Undirected simple graph. Vertices are 0-based internally; the edge list
/// order is fixed and used for all row indexing of rigidity-type matrices.
struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // stored with first < second

    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> e);

    int n_edges() const { return static_cast<int>(edges.size()); }
};

/// Metric signature (+,...,+,-,...,-): `pos` positive slots first, then
/// `neg` negative slots. Euclidean iff neg == 0.
struct Signature {
    int pos = 0;
    int neg = 0;

    Signature() = default;
    Signature(int p, int q) : pos(p), neg(q) {
        if (p < 1 || q < 0) throw std::invalid_argument("Signature: need pos >= 1, neg >= 0");
    }

    int dim() const { return pos + neg; }
    double sign(int k) const { return k < pos ? 1.0 : -1.0; }
    bool euclidean() const { return neg == 0; }

    /// The diagonal of J = diag(+1,...,+1,-1,...,-1).
    VectorXd diagonal() const {
        VectorXd d(dim());
        for (int k = 0; k < dim(); ++k) d[k] = sign(k);
        return d;
    }

    bool operator==(const Signature& o) const { return pos == o.pos && neg == o.neg; }
};

/// Placement of joints: row i of `points` is the position of vertex i.
struct Configuration {
    int dim = 0;
    MatrixXd points;  // n x dim

    Configuration() = default;
    Configuration(int d, MatrixXd pts) : dim(d), points(std::move(pts)) {
        if (points.cols() != dim) throw std::invalid_argument("Configuration: column count != dim");
    }

    int n_points() const { return static_cast<int>(points.rows()); }
    Eigen::RowVectorXd point(int i) const { return points.row(i); }
};

struct Framework {
    Graph graph;
    Configuration config;
    Signature signature;

    Framework() = default;
    Framework(Graph g, Configuration c, Signature s);

    int dim() const { return signature.dim(); }
};

/// A linear subspace given by an orthonormal column basis.
struct Subspace {
    int ambient_dim = 0;
    MatrixXd basis;  // ambient_dim x dim, orthonormal columns

    int dimension() const { return static_cast<int>(basis.cols()); }
};

struct NumericPolicy {
    double rank_rel_tol = 1e-12;
    double group_tol = 1e-9;
    int sample_count = 5;
    std::uint64_t rng_seed = 0;

    void validate() const {
        if (rank_rel_tol <= 0 || group_tol <= 0)
            throw std::invalid_argument("NumericPolicy: tolerances must be positive");
        if (sample_count < 1) throw std::invalid_argument("NumericPolicy: sample_count must be >= 1");
    }
};

/// Signature inner product <a,b> = sum over positive slots - sum over negative slots.
double signature_inner(const VectorXd& a, const VectorXd& b, const Signature& sig);

/// Negates the negative-signature slots; an involution. Euclidean hat is the identity.
VectorXd hat(const VectorXd& a, const Signature& sig);

}  // namespace conerig
