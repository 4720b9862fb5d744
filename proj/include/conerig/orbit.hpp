#pragma once

#include "conerig/rigidity.hpp"
#include "conerig/symmetry.hpp"

namespace conerig {

/// One row per edge orbit, one column block of width c_i = dim U(p_i) per
/// vertex-orbit representative. Case 1 row for {i, x(j)}: block i holds
/// hat(p_i - x(p_j))^T M_i, block j holds hat(p_j - x^{-1}(p_i))^T M_j.
/// Case 2 row for {i, y(i)}: block i holds hat(2p_i - y(p_i) - y^{-1}(p_i))^T M_i.
struct OrbitRigidityMatrix {
    MatrixXd matrix;  // r x sum(c_i)
    OrbitData orbits;
    std::vector<int> col_start;        // vertex orbit id -> first column
    std::vector<Subspace> basis_mats;  // M_i per vertex orbit

    int col_width(int orbit_id) const { return basis_mats[orbit_id].dimension(); }
    int total_cols() const { return static_cast<int>(matrix.cols()); }
};

OrbitRigidityMatrix orbit_matrix(const SymFramework& sf, const OrbitData& orbits,
                                 const NumericPolicy& policy);

/// Kernel of the orbit matrix, in orbit coordinates.
Subspace symmetric_motions(const SymFramework& sf, const NumericPolicy& policy);

/// Cokernel of the orbit matrix: fully symmetric self-stresses in orbit
/// coordinates (one entry per edge orbit).
Subspace symmetric_stresses(const SymFramework& sf, const NumericPolicy& policy);

/// Expands orbit coordinates to a full D*n velocity vector:
/// u_i = M_i v_i on representatives, u_{x(i)} = M_x u_i elsewhere.
VectorXd lift_motion(const SymFramework& sf, const OrbitRigidityMatrix& O, const VectorXd& v);

/// Copies each orbit stress coefficient to every member of its edge orbit.
VectorXd lift_stress(const SymFramework& sf, const OrbitRigidityMatrix& O, const VectorXd& omega);

/// Whether the orbit-matrix rank at p attains the sampled maximum over random
/// symmetric configurations.
bool s_regular(const SymFramework& sf, const NumericPolicy& policy, std::mt19937_64& rng);

struct FlexPrediction {
    bool predicted = false;
    bool s_regular = false;
    int sym_flex_dim = 0;
    bool withheld = false;  // joints do not span the ambient space
};

/// Symmetry-based finite-flex prediction: predicted iff the configuration is
/// S-regular and the symmetric motion space exceeds the symmetric trivial
/// motions (measured against the complete graph on the same joints).
FlexPrediction predict_finite_flex(const SymFramework& sf, const NumericPolicy& policy,
                                   std::mt19937_64& rng);

/// Dimension of the fully symmetric trivial motions: nullity of the orbit
/// matrix of the complete graph on the same configuration and group action.
int symmetric_trivial_dim(const SymFramework& sf, const NumericPolicy& policy);

}  // namespace conerig
