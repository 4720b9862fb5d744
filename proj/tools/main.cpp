#include "CLI11.hpp"
#include "json.hpp"

#include "conerig/document.hpp"
#include "conerig/svg.hpp"

#include <fstream>
#include <iostream>

namespace {

using conerig::FrameworkDocument;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

struct CommonFlags {
    std::uint64_t seed = 0;
    int samples = 5;
    double tol = 1e-12;

    conerig::NumericPolicy policy() const {
        conerig::NumericPolicy p;
        p.rng_seed = seed;
        p.sample_count = samples;
        p.rank_rel_tol = tol;
        p.validate();
        return p;
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "RNG seed for the sampling estimates");
    cmd->add_option("--samples", flags.samples, "Monte-Carlo sample count");
    cmd->add_option("--tol", flags.tol, "relative rank tolerance");
}

ordered_json provenance(const CommonFlags& flags) {
    return ordered_json{{"seed", flags.seed},
                        {"samples", flags.samples},
                        {"rank_rel_tol", flags.tol},
                        {"tool_version", kToolVersion}};
}

ordered_json analysis_json(const conerig::AnalysisReport& rep) {
    return ordered_json{{"rank", rep.rank},
                        {"motion_dim", rep.motion_dim},
                        {"trivial_dim", rep.trivial_dim},
                        {"flex_dim", rep.flex_dim},
                        {"stress_dim", rep.stress_dim},
                        {"spans_ambient", rep.spans_ambient},
                        {"infinitesimally_rigid", rep.infinitesimally_rigid},
                        {"independent", rep.independent},
                        {"isostatic", rep.isostatic}};
}

conerig::SymFramework apply_alphas(const conerig::SymFramework& sf,
                                   const std::vector<double>& alphas,
                                   const conerig::NumericPolicy& policy) {
    const conerig::OrbitData orbits = conerig::compute_orbits(sf);
    if (static_cast<int>(alphas.size()) != orbits.k())
        throw std::invalid_argument("--alphas: expected one value per vertex orbit (" +
                                    std::to_string(orbits.k()) + ")");
    for (double a : alphas)
        if (a == 0.0) throw std::invalid_argument("--alphas: zero entries are not allowed");
    conerig::MatrixXd pts = sf.framework.config.points;
    for (int o = 0; o < orbits.k(); ++o)
        for (int v : orbits.vertex_members[o]) pts.row(v) *= alphas[o];
    conerig::Framework fw(sf.framework.graph,
                          conerig::Configuration(sf.framework.dim(), std::move(pts)),
                          sf.framework.signature);
    return conerig::validate_symmetric(fw, sf.type_map, policy);
}

int run_analyze(const std::string& input, const CommonFlags& flags, const std::string& metric,
                bool exact, const std::string& svg_path) {
    const FrameworkDocument doc = conerig::load_framework_document(input);
    const conerig::NumericPolicy policy = flags.policy();
    const conerig::SymFramework sf = doc.to_sym_framework(policy);
    const conerig::Framework& fw = sf.framework;

    ordered_json out;
    out["format_version"] = 1;
    out["provenance"] = provenance(flags);
    out["metric"] = metric.empty() ? (doc.metric_tag.empty() ? "euclidean" : doc.metric_tag)
                                   : metric;
    out["analysis"] = analysis_json(conerig::analyze(fw, policy));

    if (exact) {
        out["exact_rank"] = conerig::exact_rational_rank(conerig::rigidity_matrix(fw).matrix);
    }

    if (doc.has_symmetry) {
        const conerig::OrbitData orbits = conerig::compute_orbits(sf);
        const conerig::OrbitRigidityMatrix O = conerig::orbit_matrix(sf, orbits, policy);
        const int orank = conerig::numeric_rank(O.matrix, policy);
        std::mt19937_64 rng(policy.rng_seed);
        const conerig::FlexPrediction pred = conerig::predict_finite_flex(sf, policy, rng);
        out["symmetric"] = ordered_json{
            {"vertex_orbits", orbits.k()},
            {"edge_orbits", orbits.r()},
            {"orbit_rank", orank},
            {"sym_motion_dim", O.total_cols() - orank},
            {"sym_flex_dim", pred.sym_flex_dim},
            {"sym_stress_dim", orbits.r() - orank},
            {"s_regular", pred.s_regular},
            {"predicted_finite_flex", pred.predicted},
            {"prediction_withheld", pred.withheld}};
    }

    if (!doc.all_bars()) {
        const conerig::TensegrityFramework tf = doc.to_tensegrity(policy);
        const auto strict = conerig::proper_stress(tf, true, policy);
        out["tensegrity"] = ordered_json{
            {"strict_proper_stress", strict.has_value()},
            {"tensegrity_rigid", conerig::tensegrity_rigid(tf, policy)}};
    }

    const std::string metric_req = metric.empty() ? doc.metric_tag : metric;
    if (!metric_req.empty() && metric_req != "euclidean") {
        const conerig::MetricTag target = conerig::parse_metric(metric_req);
        const conerig::ConedFramework cf =
            conerig::push_to_target(conerig::cone_framework(sf, target), target);
        const conerig::RigidityMatrix R = conerig::cone_rigidity_matrix(cf, false);
        const int rank = conerig::numeric_rank(R.matrix, policy);
        const conerig::Framework joints(cf.base.framework.graph,
                                        conerig::Configuration(cf.cone_dim(), cf.coned_points()),
                                        cf.cone_sig);
        const int trivial = conerig::trivial_motion_basis(joints, true, policy).dimension();
        const int nullity = static_cast<int>(R.matrix.cols()) - rank;
        out["cone"] = ordered_json{{"metric", conerig::metric_name(cf.metric)},
                                   {"rank", rank},
                                   {"motion_dim", nullity},
                                   {"trivial_dim", trivial},
                                   {"flex_dim", nullity - trivial},
                                   {"stress_dim", static_cast<int>(R.matrix.rows()) - rank}};
        if (!doc.all_bars()) {
            const conerig::TensegrityFramework tf = doc.to_tensegrity(policy);
            out["cone"]["tensegrity_rigid"] =
                conerig::cone_tensegrity_rigid(conerig::cone_tensegrity(tf, target), policy);
        }
    }

    if (!svg_path.empty()) conerig::write_svg(doc, svg_path);

    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_transfer(const std::string& input, const CommonFlags& flags, const std::string& to,
                 const std::string& emit_path, const std::vector<int>& invert,
                 const std::vector<double>& alphas) {
    const FrameworkDocument doc = conerig::load_framework_document(input);
    const conerig::NumericPolicy policy = flags.policy();
    conerig::SymFramework sf = doc.to_sym_framework(policy);
    const conerig::MetricTag target = conerig::parse_metric(to);

    if (!alphas.empty()) sf = apply_alphas(sf, alphas, policy);

    std::mt19937_64 rng(policy.rng_seed);
    conerig::TransferReport rep = conerig::verify_transfer(sf, target, policy, rng);

    conerig::ConedFramework cf =
        conerig::push_to_target(conerig::cone_framework(sf, target), target);
    if (!invert.empty()) {
        std::vector<int> ids;
        for (int o : invert) ids.push_back(o - 1);  // orbit ids are 1-based on the CLI
        const int rank_before =
            conerig::numeric_rank(conerig::cone_rigidity_matrix(cf, false).matrix, policy);
        cf = conerig::invert_orbits(cf, ids);
        const int rank_after =
            conerig::numeric_rank(conerig::cone_rigidity_matrix(cf, false).matrix, policy);
        rep.add("inversion_rank_invariant", rank_before == rank_after,
                "rank " + std::to_string(rank_before) + " -> " + std::to_string(rank_after));
    }

    ordered_json out;
    out["format_version"] = 1;
    out["provenance"] = provenance(flags);
    out["target"] = conerig::metric_name(target);
    out["ledger"] = ordered_json::array();
    for (const conerig::TransferClause& c : rep.clauses)
        out["ledger"].push_back(
            ordered_json{{"clause", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["all_pass"] = rep.all_pass;

    if (!emit_path.empty()) {
        FrameworkDocument emitted;
        const int n = cf.n();
        conerig::MatrixXd pts(n + 1, cf.cone_dim());
        pts.topRows(n) = cf.coned_points();
        pts.row(n).setZero();
        conerig::Framework coned(conerig::cone_graph(cf.base.framework.graph),
                                 conerig::Configuration(cf.cone_dim(), std::move(pts)),
                                 cf.cone_sig);
        if (cf.alphas_orbit_constant()) {
            const conerig::SymFramework csf = conerig::coned_sym_framework(cf);
            emitted = conerig::make_document(coned, {}, &csf.type_map,
                                             conerig::metric_name(cf.metric));
        } else {
            emitted = conerig::make_document(coned, {}, nullptr, conerig::metric_name(cf.metric));
        }
        std::ofstream f(emit_path);
        if (!f) throw std::runtime_error("cannot write file: " + emit_path);
        f << conerig::serialize_framework_document(emitted);
    }

    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"infinitesimal rigidity analysis of bar-joint and tensegrity frameworks"};
    app.require_subcommand(1);

    CommonFlags a_flags;
    std::string a_input, a_metric, a_svg;
    bool a_exact = false;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a framework file");
    analyze->add_option("input", a_input, "framework document")->required();
    analyze->add_option("--metric", a_metric, "metric tag to analyze in");
    analyze->add_flag("--exact", a_exact, "also report the exact rational rank");
    analyze->add_option("--svg", a_svg, "write a 2-D figure to this path");
    add_common_flags(analyze, a_flags);

    CommonFlags t_flags;
    std::string t_input, t_to, t_emit;
    std::vector<int> t_invert;
    std::vector<double> t_alphas;
    CLI::App* transfer = app.add_subcommand("transfer", "verify a coning transfer");
    transfer->add_option("input", t_input, "framework document")->required();
    transfer->add_option("--to", t_to, "target metric tag")->required();
    transfer->add_option("--emit", t_emit, "write the transformed framework to this path");
    transfer->add_option("--invert", t_invert, "1-based vertex-orbit ids to invert");
    transfer->add_option("--alphas", t_alphas, "per-orbit scaling of the base joints");
    add_common_flags(transfer, t_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(a_input, a_flags, a_metric, a_exact, a_svg);
        return run_transfer(t_input, t_flags, t_to, t_emit, t_invert, t_alphas);
    } catch (const conerig::DocumentError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
