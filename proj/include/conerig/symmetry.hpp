#pragma once

#include "conerig/numeric.hpp"
#include "conerig/types.hpp"

#include <random>

namespace conerig {

/// Finite group of signature-orthogonal matrices (MᵀJM = J) fixing the origin.
struct PointGroup {
    int dim = 0;
    Signature sig;
    std::vector<MatrixXd> elements;
    int identity_index = 0;
    std::vector<std::vector<int>> mult;  // mult[a][b] = index of elements[a]*elements[b]
    std::vector<int> inverse;

    int size() const { return static_cast<int>(elements.size()); }

    /// Validates closure, identity, inverses and signature-orthogonality,
    /// and builds the multiplication table.
    static PointGroup from_elements(std::vector<MatrixXd> elems, Signature sig, double group_tol);
};

PointGroup identity_group(int dim);
/// C_m: cyclic group generated by a 2pi/m rotation (about the z-axis when dim == 3).
PointGroup cyclic_group(int m, int dim);
/// C_s: identity plus the reflection negating coordinate `axis`.
PointGroup reflection_group(int dim, int axis = 0);
/// C_mv: dihedral group generated by a 2pi/m rotation and the reflection negating x.
PointGroup dihedral_group(int m, int dim);

/// Group action on the graph: one vertex permutation per group element.
struct TypeMap {
    PointGroup group;
    std::vector<std::vector<int>> perms;  // perms[x][i] = image of vertex i under element x

    /// Checks that perms define a homomorphism into Aut(G).
    void validate(const Graph& g) const;
};

struct SymFramework {
    Framework framework;
    TypeMap type_map;

    const PointGroup& group() const { return type_map.group; }
    int perm(int x, int i) const { return type_map.perms[x][i]; }
};

/// Representative form of an edge orbit: Case 1 rows come from an edge
/// {i, x(j)} with i, j in distinct vertex orbits; Case 2 rows from {i, x(i)}.
struct EdgeOrbitForm {
    int rep_edge = 0;          // index into graph.edges
    bool case2 = false;
    int i = 0;                 // vertex orbit representative
    int j = 0;                 // second representative (Case 1 only)
    int x = 0;                 // group element index realizing the representative edge
    std::vector<int> members;  // edge indices, ascending
};

struct OrbitData {
    std::vector<int> vertex_reps;               // orbit id -> representative vertex
    std::vector<int> vertex_orbit_of;           // vertex -> orbit id
    std::vector<std::vector<int>> vertex_members;
    std::vector<EdgeOrbitForm> edge_orbits;
    std::vector<int> edge_orbit_of;

    int k() const { return static_cast<int>(vertex_reps.size()); }
    int r() const { return static_cast<int>(edge_orbits.size()); }
};

/// Checks x(p_i) = p_{Phi(x)(i)} for every element and vertex; throws with the
/// first violating (element, vertex) pair and its residual.
SymFramework validate_symmetric(const Framework& fw, const TypeMap& tm, const NumericPolicy& policy);

OrbitData compute_orbits(const SymFramework& sf);

/// Basis matrix M_i of U(p_i), the intersection of the fixed spaces of the
/// stabilizer of vertex i. Identity basis when the stabilizer is trivial.
Subspace fixed_subspace(const SymFramework& sf, int vertex, const NumericPolicy& policy);

/// Random configuration in the symmetric configuration space: representative
/// coefficients uniform in [-1,1] inside U(p_i), propagated over the orbits.
Configuration sample_symmetric_config(const SymFramework& sf, const OrbitData& orbits,
                                      const NumericPolicy& policy, std::mt19937_64& rng);

/// Borders every element with a trailing 1. The new slot is positive for the
/// Euclidean cone and negative for the Minkowskian cone.
PointGroup extend_group(const PointGroup& g, bool minkowski_target);

/// Wraps a plain framework with the trivial symmetry.
SymFramework with_identity_group(const Framework& fw);

}  // namespace conerig
