#pragma once

#include "conerig/orbit.hpp"

namespace conerig {

enum class MetricTag {
    euclidean_plane,
    euclidean_cone,
    hemisphere,
    whole_sphere,
    minkowski_cone,
    hyperbolic,
    de_sitter,
};

std::string metric_name(MetricTag tag);
MetricTag parse_metric(const std::string& name);

/// Cone of a (possibly symmetric) framework: joints on rays q_i = alpha_i * (p_i, 1)
/// through the origin in one more dimension, cone joint at the origin. The cone
/// matrices are built directly from the base structure; the cone joint is kept
/// fixed, so its columns never appear.
struct ConedFramework {
    SymFramework base;
    OrbitData base_orbits;
    MetricTag metric = MetricTag::euclidean_cone;
    Signature cone_sig;     // (pos+1, neg) Euclidean cone, (pos, neg+1) Minkowskian
    PointGroup cone_group;  // base group bordered with a trailing 1
    VectorXd alphas;        // per base vertex, nonzero

    int n() const { return base.framework.graph.n_vertices; }
    int cone_dim() const { return cone_sig.dim(); }
    bool minkowskian() const { return cone_sig.neg > base.framework.signature.neg; }

    /// n x (D+1) matrix of coned joints (cone joint excluded).
    MatrixXd coned_points() const;

    /// True when the alphas are constant on every vertex orbit, i.e. the coned
    /// framework still realizes the extended symmetry.
    bool alphas_orbit_constant(double tol = 1e-12) const;
};

/// Adds a cone vertex (internal index n, external id n+1) joined to every vertex.
/// Base edges keep their positions; the n coning edges follow in vertex order.
Graph cone_graph(const Graph& g);

ConedFramework cone_framework(const SymFramework& sf, MetricTag target);
ConedFramework cone_framework(const Framework& fw, MetricTag target);

/// The coned framework as an explicit symmetric framework on cone_graph
/// (cone joint at the origin, group extended, permutations fixing the cone
/// vertex). Requires orbit-constant alphas.
SymFramework coned_sym_framework(const ConedFramework& cf);

/// (|E|+n) x ((D+1)n) matrix: base edge rows first, then one coning row per
/// vertex with block i = hat(q_i). Modified form replaces the edge-row blocks
/// by (-hat(q_j)), (-hat(q_i)) (each edge row minus its two coning rows).
RigidityMatrix cone_rigidity_matrix(const ConedFramework& cf, bool modified);

/// Orbit version: base edge-orbit rows followed by k coning rows {0,i} with
/// block i = hat(q_i)^T M_i*, where M_i* = blockdiag(M_i, 1). Modified form
/// subtracts the coning row of each block touched by an edge row (twice for
/// Case 1, once for Case 2).
OrbitRigidityMatrix cone_orbit_matrix(const ConedFramework& cf, const NumericPolicy& policy,
                                      bool modified);

/// Transfers a base motion u to the cone: v_i = alpha_i * (u_i, eps * u_i . p_i)
/// with eps = -1 for the Euclidean cone and +1 for the Minkowskian cone, making
/// v_i signature-perpendicular to the cone ray q_i.
VectorXd transfer_velocity(const VectorXd& u, const ConedFramework& cf);

/// Transfers a base self-stress to the cone matrix. Coefficients on edge rows
/// become w_ij / (alpha_i alpha_j); the coning-row coefficient is
/// (sum_j w_ij)/alpha_i^2 for the modified matrix, and that minus
/// sum_j w_ij/(alpha_i alpha_j) for the unmodified one.
VectorXd transfer_stress(const VectorXd& omega, const ConedFramework& cf, bool modified);

/// Orbit version of transfer_stress; the coning coefficient for orbit i sums
/// the orbit-row coefficients over the blocks structurally touching i.
VectorXd transfer_orbit_stress(const VectorXd& omega, const ConedFramework& cf, bool modified);

/// Scales the ray positions: one scalar per vertex orbit, applied on top of
/// the current alphas.
ConedFramework pull_orbits(const ConedFramework& cf, const std::vector<double>& orbit_alphas);

ConedFramework push_to_sphere(const ConedFramework& cf);
/// Dispatches to the push matching the target tag; identity for plain cones.
ConedFramework push_to_target(const ConedFramework& cf, MetricTag target);
ConedFramework push_to_hyperboloid(const ConedFramework& cf);
ConedFramework push_to_de_sitter(const ConedFramework& cf);

/// Central projection back to the height-1 hyperplane; errors when a joint has
/// last coordinate too close to zero.
Framework project_back(const ConedFramework& cf);

/// Negates the rays of whole orbits (keeps the extended symmetry).
ConedFramework invert_orbits(const ConedFramework& cf, const std::vector<int>& orbit_ids);
/// Negates individual rays (may break the coned symmetry; the projected
/// framework keeps its apparent symmetry).
ConedFramework invert_vertices(const ConedFramework& cf, const std::vector<int>& vertices);

/// Negates k of the negative-slot coordinates across all joints and
/// reinterprets them as positive; the rigidity matrix is unchanged entrywise.
Framework signature_flip(const Framework& fw, int k);

struct TransferClause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TransferReport {
    MetricTag target;
    std::vector<TransferClause> clauses;
    bool all_pass = true;

    void add(std::string name, bool pass, std::string detail = "");
};

/// Runs the full coning pipeline to the target metric and checks: (a) the rank
/// steps by n (and by k for orbit matrices), (b) flex dimensions match, (c)
/// stress dimensions match, (d) transferred motions/stresses annihilate the
/// target matrices, (e) regularity verdicts agree under matched sampling seeds.
TransferReport verify_transfer(const SymFramework& sf, MetricTag target,
                               const NumericPolicy& policy, std::mt19937_64& rng);

}  // namespace conerig
