#include "conerig/document.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace conerig {

using ordered_json = nlohmann::ordered_json;

bool FrameworkDocument::all_bars() const {
    for (MemberKind k : kinds)
        if (k != MemberKind::bar) return false;
    return true;
}

Framework FrameworkDocument::to_framework() const {
    return Framework(Graph(n_vertices(), edges), Configuration(signature.dim(), points),
                     signature);
}

SymFramework FrameworkDocument::to_sym_framework(const NumericPolicy& policy) const {
    Framework fw = to_framework();
    if (!has_symmetry) return with_identity_group(fw);
    TypeMap tm;
    tm.group = PointGroup::from_elements(sym_elements, signature, policy.group_tol);
    tm.perms = sym_perms;
    return validate_symmetric(fw, tm, policy);
}

TensegrityFramework FrameworkDocument::to_tensegrity(const NumericPolicy& policy) const {
    return TensegrityFramework(to_sym_framework(policy), kinds);
}

namespace {

const ordered_json& require(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw DocumentError(std::string("missing field '") + key + "'");
    return *it;
}

int require_int(const ordered_json& j, const char* key) {
    const ordered_json& v = require(j, key);
    if (!v.is_number_integer()) throw DocumentError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

FrameworkDocument parse_framework_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DocumentError(std::string("not valid JSON: ") + e.what());
    }
    FrameworkDocument doc;
    doc.format_version = require_int(j, "format_version");
    if (doc.format_version != 1)
        throw DocumentError("unsupported format_version " + std::to_string(doc.format_version));

    const ordered_json& sig = require(j, "signature");
    doc.signature = Signature(require_int(sig, "pos"), require_int(sig, "neg"));
    const int dim = require_int(j, "dimension");
    if (dim != doc.signature.dim())
        throw DocumentError("dimension does not match the signature");

    const ordered_json& verts = require(j, "vertices");
    if (!verts.is_array() || verts.empty()) throw DocumentError("'vertices' must be a non-empty array");
    const int n = static_cast<int>(verts.size());
    doc.points = MatrixXd::Zero(n, dim);
    std::vector<bool> seen(n, false);
    for (const auto& v : verts) {
        const int id = require_int(v, "id");
        if (id < 1 || id > n) throw DocumentError("vertex id " + std::to_string(id) + " out of 1.." + std::to_string(n));
        if (seen[id - 1]) throw DocumentError("duplicate vertex id " + std::to_string(id));
        seen[id - 1] = true;
        const ordered_json& coords = require(v, "coords");
        if (!coords.is_array() || static_cast<int>(coords.size()) != dim)
            throw DocumentError("vertex " + std::to_string(id) + ": coords must have " + std::to_string(dim) + " entries");
        for (int k = 0; k < dim; ++k) doc.points(id - 1, k) = coords[k].get<double>();
    }

    const ordered_json& edges = require(j, "edges");
    if (!edges.is_array()) throw DocumentError("'edges' must be an array");
    int e_index = 0;
    for (const auto& e : edges) {
        ++e_index;
        const int u = require_int(e, "u");
        const int v = require_int(e, "v");
        if (u < 1 || u > n || v < 1 || v > n)
            throw DocumentError("edge " + std::to_string(e_index) + ": endpoint out of range");
        doc.edges.emplace_back(u - 1, v - 1);
        MemberKind kind = MemberKind::bar;
        if (e.contains("kind")) {
            try {
                kind = parse_member_kind(e["kind"].get<std::string>());
            } catch (const std::invalid_argument& ex) {
                throw DocumentError("edge " + std::to_string(e_index) + ": " + ex.what());
            }
        }
        doc.kinds.push_back(kind);
    }

    if (j.contains("symmetry")) {
        doc.has_symmetry = true;
        const ordered_json& elems = require(j["symmetry"], "elements");
        if (!elems.is_array() || elems.empty())
            throw DocumentError("'symmetry.elements' must be a non-empty array");
        for (const auto& el : elems) {
            const ordered_json& mat = require(el, "matrix");
            if (!mat.is_array() || static_cast<int>(mat.size()) != dim)
                throw DocumentError("symmetry matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
            MatrixXd M(dim, dim);
            for (int r = 0; r < dim; ++r) {
                if (!mat[r].is_array() || static_cast<int>(mat[r].size()) != dim)
                    throw DocumentError("symmetry matrix row has wrong length");
                for (int c = 0; c < dim; ++c) M(r, c) = mat[r][c].get<double>();
            }
            doc.sym_elements.push_back(std::move(M));
            const ordered_json& perm = require(el, "vertex_perm");
            if (!perm.is_array() || static_cast<int>(perm.size()) != n)
                throw DocumentError("vertex_perm must list all " + std::to_string(n) + " vertices");
            std::vector<int> p;
            std::vector<bool> hit(n, false);
            for (const auto& entry : perm) {
                const int id = entry.get<int>();
                if (id < 1 || id > n || hit[id - 1])
                    throw DocumentError("vertex_perm is not a permutation of 1.." + std::to_string(n));
                hit[id - 1] = true;
                p.push_back(id - 1);
            }
            doc.sym_perms.push_back(std::move(p));
        }
    }

    if (j.contains("metric_tag")) doc.metric_tag = j["metric_tag"].get<std::string>();
    return doc;
}

FrameworkDocument load_framework_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_framework_document(buf.str());
}

std::string serialize_framework_document(const FrameworkDocument& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["dimension"] = doc.signature.dim();
    j["signature"] = {{"pos", doc.signature.pos}, {"neg", doc.signature.neg}};
    j["vertices"] = ordered_json::array();
    for (int i = 0; i < doc.n_vertices(); ++i) {
        ordered_json v;
        v["id"] = i + 1;
        v["coords"] = std::vector<double>(doc.points.row(i).begin(), doc.points.row(i).end());
        j["vertices"].push_back(std::move(v));
    }
    j["edges"] = ordered_json::array();
    for (size_t e = 0; e < doc.edges.size(); ++e) {
        ordered_json je;
        je["u"] = doc.edges[e].first + 1;
        je["v"] = doc.edges[e].second + 1;
        if (!doc.kinds.empty() && doc.kinds[e] != MemberKind::bar)
            je["kind"] = member_kind_name(doc.kinds[e]);
        j["edges"].push_back(std::move(je));
    }
    if (doc.has_symmetry) {
        ordered_json elems = ordered_json::array();
        for (size_t x = 0; x < doc.sym_elements.size(); ++x) {
            ordered_json el;
            ordered_json mat = ordered_json::array();
            for (int r = 0; r < doc.sym_elements[x].rows(); ++r)
                mat.push_back(std::vector<double>(doc.sym_elements[x].row(r).begin(),
                                                  doc.sym_elements[x].row(r).end()));
            el["matrix"] = std::move(mat);
            std::vector<int> perm;
            for (int i : doc.sym_perms[x]) perm.push_back(i + 1);
            el["vertex_perm"] = std::move(perm);
            elems.push_back(std::move(el));
        }
        j["symmetry"] = {{"elements", std::move(elems)}};
    }
    if (!doc.metric_tag.empty()) j["metric_tag"] = doc.metric_tag;
    return j.dump(2) + "\n";
}

FrameworkDocument make_document(const Framework& fw, const std::vector<MemberKind>& kinds,
                                const TypeMap* symmetry, const std::string& metric_tag) {
    FrameworkDocument doc;
    doc.signature = fw.signature;
    doc.points = fw.config.points;
    doc.edges = fw.graph.edges;
    doc.kinds = kinds.empty() ? std::vector<MemberKind>(fw.graph.n_edges(), MemberKind::bar)
                              : kinds;
    if (symmetry != nullptr) {
        doc.has_symmetry = true;
        doc.sym_elements = symmetry->group.elements;
        doc.sym_perms = symmetry->perms;
    }
    doc.metric_tag = metric_tag;
    return doc;
}

}  // namespace conerig
