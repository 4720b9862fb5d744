#pragma once

#include "conerig/tensegrity.hpp"

namespace conerig {

/// Input problem (malformed file, bad ids, ...): CLI exit code 2, as opposed
/// to analysis-domain errors (exit code 1).
struct DocumentError : std::runtime_error {
    explicit DocumentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// On-disk framework description. Vertex ids are 1-based and contiguous in the
/// file; everything here is already converted to internal 0-based indices.
struct FrameworkDocument {
    int format_version = 1;
    Signature signature{1, 0};
    MatrixXd points;  // n x dim
    std::vector<std::pair<int, int>> edges;
    std::vector<MemberKind> kinds;  // aligned with edges, default bar
    bool has_symmetry = false;
    std::vector<MatrixXd> sym_elements;
    std::vector<std::vector<int>> sym_perms;
    std::string metric_tag;  // empty when absent

    int n_vertices() const { return static_cast<int>(points.rows()); }
    bool all_bars() const;

    Framework to_framework() const;
    SymFramework to_sym_framework(const NumericPolicy& policy) const;
    TensegrityFramework to_tensegrity(const NumericPolicy& policy) const;
};

FrameworkDocument parse_framework_document(const std::string& text);
FrameworkDocument load_framework_document(const std::string& path);
std::string serialize_framework_document(const FrameworkDocument& doc);

/// Document for an explicit framework (used by --emit); carries the member
/// kinds and symmetry when provided.
FrameworkDocument make_document(const Framework& fw, const std::vector<MemberKind>& kinds = {},
                                const TypeMap* symmetry = nullptr,
                                const std::string& metric_tag = "");

}  // namespace conerig
