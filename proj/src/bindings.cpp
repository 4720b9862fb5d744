#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conerig/document.hpp"

namespace py = pybind11;
using namespace conerig;

namespace {

Framework make_framework(const MatrixXd& points, const std::vector<std::pair<int, int>>& edges,
                         int pos, int neg) {
    const int n = static_cast<int>(points.rows());
    return Framework(Graph(n, edges), Configuration(static_cast<int>(points.cols()), points),
                     Signature(pos, neg));
}

py::dict report_dict(const AnalysisReport& rep) {
    py::dict d;
    d["rank"] = rep.rank;
    d["motion_dim"] = rep.motion_dim;
    d["trivial_dim"] = rep.trivial_dim;
    d["flex_dim"] = rep.flex_dim;
    d["stress_dim"] = rep.stress_dim;
    d["spans_ambient"] = rep.spans_ambient;
    d["infinitesimally_rigid"] = rep.infinitesimally_rigid;
    d["independent"] = rep.independent;
    d["isostatic"] = rep.isostatic;
    return d;
}

}  // namespace

PYBIND11_MODULE(pyconerig, m) {
    m.doc() = "infinitesimal rigidity analysis of bar-joint and tensegrity frameworks";

    m.def(
        "rigidity_matrix",
        [](const MatrixXd& points, const std::vector<std::pair<int, int>>& edges, int pos,
           int neg) { return rigidity_matrix(make_framework(points, edges, pos, neg)).matrix; },
        py::arg("points"), py::arg("edges"), py::arg("pos"), py::arg("neg") = 0,
        "Rigidity matrix of the framework; points is n x d, signature (pos, neg).");

    m.def(
        "analyze",
        [](const MatrixXd& points, const std::vector<std::pair<int, int>>& edges, int pos,
           int neg) {
            return report_dict(analyze(make_framework(points, edges, pos, neg), NumericPolicy{}));
        },
        py::arg("points"), py::arg("edges"), py::arg("pos"), py::arg("neg") = 0);

    m.def(
        "analyze_file",
        [](const std::string& path) {
            const NumericPolicy policy;
            const FrameworkDocument doc = load_framework_document(path);
            const SymFramework sf = doc.to_sym_framework(policy);
            py::dict out = report_dict(analyze(sf.framework, policy));
            if (doc.has_symmetry) {
                const OrbitData orbits = compute_orbits(sf);
                const OrbitRigidityMatrix O = orbit_matrix(sf, orbits, policy);
                const int orank = numeric_rank(O.matrix, policy);
                std::mt19937_64 rng(policy.rng_seed);
                const FlexPrediction pred = predict_finite_flex(sf, policy, rng);
                py::dict sym;
                sym["vertex_orbits"] = orbits.k();
                sym["edge_orbits"] = orbits.r();
                sym["orbit_rank"] = orank;
                sym["sym_motion_dim"] = O.total_cols() - orank;
                sym["sym_flex_dim"] = pred.sym_flex_dim;
                sym["sym_stress_dim"] = orbits.r() - orank;
                sym["s_regular"] = pred.s_regular;
                sym["predicted_finite_flex"] = pred.predicted;
                out["symmetric"] = sym;
            }
            return out;
        },
        py::arg("path"));

    m.def(
        "orbit_matrix_file",
        [](const std::string& path) {
            const NumericPolicy policy;
            const SymFramework sf = load_framework_document(path).to_sym_framework(policy);
            return orbit_matrix(sf, compute_orbits(sf), policy).matrix;
        },
        py::arg("path"));

    m.def(
        "infinitesimal_motions",
        [](const MatrixXd& points, const std::vector<std::pair<int, int>>& edges, int pos,
           int neg) {
            return infinitesimal_motions(make_framework(points, edges, pos, neg), NumericPolicy{})
                .basis;
        },
        py::arg("points"), py::arg("edges"), py::arg("pos"), py::arg("neg") = 0);

    m.def(
        "self_stresses",
        [](const MatrixXd& points, const std::vector<std::pair<int, int>>& edges, int pos,
           int neg) {
            return self_stresses(make_framework(points, edges, pos, neg), NumericPolicy{}).basis;
        },
        py::arg("points"), py::arg("edges"), py::arg("pos"), py::arg("neg") = 0);

    m.def(
        "verify_transfer_file",
        [](const std::string& path, const std::string& target, std::uint64_t seed) {
            NumericPolicy policy;
            policy.rng_seed = seed;
            const SymFramework sf = load_framework_document(path).to_sym_framework(policy);
            std::mt19937_64 rng(seed);
            const TransferReport rep = verify_transfer(sf, parse_metric(target), policy, rng);
            py::list ledger;
            for (const TransferClause& c : rep.clauses) {
                py::dict clause;
                clause["clause"] = c.name;
                clause["pass"] = c.pass;
                clause["detail"] = c.detail;
                ledger.append(clause);
            }
            py::dict out;
            out["target"] = metric_name(rep.target);
            out["ledger"] = ledger;
            out["all_pass"] = rep.all_pass;
            return out;
        },
        py::arg("path"), py::arg("target"), py::arg("seed") = 0);

    m.def(
        "tensegrity_rigid_file",
        [](const std::string& path) {
            const NumericPolicy policy;
            return tensegrity_rigid(load_framework_document(path).to_tensegrity(policy), policy);
        },
        py::arg("path"));

    m.def(
        "numeric_rank",
        [](const MatrixXd& M) { return numeric_rank(M, NumericPolicy{}); }, py::arg("matrix"));

    m.def("exact_rank", &exact_rational_rank, py::arg("matrix"),
          "Rank over the rationals of the exactly-represented double entries.");
}
