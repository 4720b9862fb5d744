#pragma once

#include "conerig/coning.hpp"

#include <optional>

namespace conerig {

enum class MemberKind { bar, cable, strut };

std::string member_kind_name(MemberKind k);
MemberKind parse_member_kind(const std::string& name);

/// Bar-joint framework whose edges are partitioned into cables (tension only),
/// struts (compression only) and bars. In the symmetric case the kinds must be
/// constant on edge orbits.
struct TensegrityFramework {
    SymFramework framework;
    std::vector<MemberKind> kinds;  // per edge

    TensegrityFramework() = default;
    TensegrityFramework(SymFramework sf, std::vector<MemberKind> k);
};

/// Searches span(N) for a stress nonnegative on cables and nonpositive on
/// struts; the strict version needs strict signs with margin. Solved as
/// max t with omega = N z, omega_e >= t on cables, omega_e <= -t on struts,
/// |z|_inf <= 1, t <= 1; strict feasibility iff the optimum exceeds 1e-8.
std::optional<VectorXd> proper_stress_in_span(const MatrixXd& N,
                                              const std::vector<MemberKind>& kinds, bool strict);

/// Proper self-stress of the tensegrity, over the full self-stress space
/// (symmetric_only restricts to the lifted fully symmetric stresses).
std::optional<VectorXd> proper_stress(const TensegrityFramework& tf, bool strict,
                                      const NumericPolicy& policy, bool symmetric_only = false);

/// Roth-Whiteley test: infinitesimally rigid as a bar framework and a strict
/// proper self-stress exists.
bool tensegrity_rigid(const TensegrityFramework& tf, const NumericPolicy& policy,
                      bool symmetric_only = false);

/// Coned tensegrity: base kinds carried over, coning edges are bars.
struct ConedTensegrity {
    ConedFramework cone;
    std::vector<MemberKind> base_kinds;

    /// Kinds aligned with the cone rigidity matrix rows (base edges, then the
    /// coning edges as bars).
    std::vector<MemberKind> cone_kinds() const;
};

ConedTensegrity cone_tensegrity(const TensegrityFramework& tf, MetricTag target);

/// Rigidity test on the cone (cone joint fixed): motion space reduces to the
/// rotations about the origin, and a strict proper stress exists on the cone
/// matrix rows.
bool cone_tensegrity_rigid(const ConedTensegrity& ct, const NumericPolicy& policy);

/// Inverts the selected vertex orbits and applies the relabeling rules: an
/// edge with exactly one inverted endpoint swaps cable and strut; bars and
/// edges with zero or two inverted endpoints are unchanged.
ConedTensegrity invert_tensegrity_orbits(const ConedTensegrity& ct,
                                         const std::vector<int>& orbit_ids);

}  // namespace conerig
