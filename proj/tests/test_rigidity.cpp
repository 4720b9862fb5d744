#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conerig/orbit.hpp"
#include "helpers.hpp"

using namespace conerig;
using conerig::testing::default_policy;
using conerig::testing::load_fixture;
using conerig::testing::make_framework;
using conerig::testing::random_framework;

TEST_CASE("rigidity_matrix entries") {
    // single edge in E^1
    const Framework seg = make_framework(1, {{0, 1}}, {{0}, {1}});
    const MatrixXd R1 = rigidity_matrix(seg).matrix;
    CHECK(R1(0, 0) == doctest::Approx(-1.0));
    CHECK(R1(0, 1) == doctest::Approx(1.0));

    // K_{2,2} fixture row {1,2} = ((-1,1),(1,-1),0,0)
    const Framework k22 = load_fixture("k22_c2.json").to_framework();
    const MatrixXd R = rigidity_matrix(k22).matrix;
    VectorXd row(8);
    row << -1, 1, 1, -1, 0, 0, 0, 0;
    CHECK((R.row(0).transpose() - row).norm() <= 1e-12);

    // Minkowski signature: hat negates the last slot
    const Framework mink =
        make_framework(2, {{0, 1}}, {{0, 0}, {1, 1}}, Signature(1, 1));
    const MatrixXd Rm = rigidity_matrix(mink).matrix;
    VectorXd mrow(4);
    mrow << -1, 1, 1, -1;
    CHECK((Rm.row(0).transpose() - mrow).norm() <= 1e-12);
}

TEST_CASE("infinitesimal_motions dimensions") {
    const NumericPolicy policy = default_policy();
    const Framework empty = make_framework(2, {}, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(infinitesimal_motions(empty, policy).dimension() == 6);

    const Framework tri = make_framework(2, {{0, 1}, {1, 2}, {0, 2}},
                                         {{0, 0}, {1, 0}, {0.3, 0.9}});
    CHECK(infinitesimal_motions(tri, policy).dimension() == 3);

    const Framework k22 = load_fixture("k22_c2.json").to_framework();
    CHECK(infinitesimal_motions(k22, policy).dimension() == 4);
}

TEST_CASE("trivial_motion_basis") {
    const NumericPolicy policy = default_policy();
    const Framework fw = make_framework(2, {{0, 1}},
                                        {{0.1, 0.7}, {1, 0}, {0.4, 1.3}, {-0.6, 0.2}});
    CHECK(trivial_motion_basis(fw, false, policy).dimension() == 3);
    CHECK(trivial_motion_basis(fw, true, policy).dimension() == 1);

    // Minkowski plane: same count, generator A = J K
    const Framework mink = make_framework(2, {{0, 1}}, {{0.3, 0.7}, {1.1, 0.2}, {-0.5, 0.9}},
                                          Signature(1, 1));
    CHECK(trivial_motion_basis(mink, false, policy).dimension() == 3);

    // E^3 rotations only
    const Framework e3 = make_framework(3, {{0, 1}},
                                        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(trivial_motion_basis(e3, true, policy).dimension() == 3);

    // trivial motions lie in the kernel of the K_n rigidity matrix
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        const int n = 5;
        std::vector<std::pair<int, int>> all;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
        Framework kn = random_framework(n, 3, 1.0, rng);
        kn = Framework(Graph(n, all), kn.config, kn.signature);
        const MatrixXd R = rigidity_matrix(kn).matrix;
        const Subspace T = trivial_motion_basis(kn, false, policy);
        CHECK(T.dimension() == 6);
        CHECK((R * T.basis).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("self_stresses") {
    const NumericPolicy policy = default_policy();
    const Framework tri = make_framework(2, {{0, 1}, {1, 2}, {0, 2}},
                                         {{0, 0}, {1, 0}, {0.3, 0.9}});
    CHECK(self_stresses(tri, policy).dimension() == 0);

    std::mt19937_64 rng(9);
    const Framework k4 = random_framework(4, 2, 1.0, rng);
    REQUIRE(k4.graph.n_edges() == 6);
    CHECK(self_stresses(k4, policy).dimension() == 1);

    // stress equilibrium: omega^T R = 0 rowwise
    const Subspace S = self_stresses(k4, policy);
    CHECK((S.basis.transpose() * rigidity_matrix(k4).matrix).cwiseAbs().maxCoeff() <= 1e-10);

    // C_{3v} framework carries the replicated orbit stress
    const Framework c3v = load_fixture("c3v_triangles.json").to_framework();
    const Subspace Sc = self_stresses(c3v, policy);
    REQUIRE(Sc.dimension() == 1);
    VectorXd expected(9);
    expected << 1, 1, 1, -1.0 / 6, -1.0 / 6, -1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 3;
    CHECK(conerig::testing::span_residual(Sc.basis, expected / expected.norm()) <= 1e-9);
}

TEST_CASE("analyze verdicts") {
    const NumericPolicy policy = default_policy();
    const AnalysisReport tri = analyze(
        make_framework(2, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {1, 0}, {0.3, 0.9}}), policy);
    CHECK(tri.isostatic);
    CHECK(tri.infinitesimally_rigid);
    CHECK(tri.independent);

    const AnalysisReport k22 = analyze(load_fixture("k22_c2.json").to_framework(),
                                       policy);
    CHECK(k22.flex_dim == 1);
    CHECK(k22.independent);
    CHECK_FALSE(k22.infinitesimally_rigid);
    CHECK(k22.stress_dim + k22.rank == 4);

    std::mt19937_64 rng(9);
    const AnalysisReport k4 = analyze(random_framework(4, 2, 1.0, rng), policy);
    CHECK(k4.infinitesimally_rigid);
    CHECK_FALSE(k4.independent);

    // body-bar fixture: isostatic
    const AnalysisReport bb = analyze(load_fixture("body_bar.json").to_framework(), policy);
    CHECK(bb.isostatic);
}

TEST_CASE("estimate_regular") {
    const NumericPolicy policy = default_policy();
    std::mt19937_64 rng(21);

    const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(estimate_regular(tri, Signature(2, 0), policy, rng).max_rank == 3);

    const FrameworkDocument k22doc = load_fixture("k22_c2.json");
    const Framework k22 = k22doc.to_framework();
    const RegularEstimate est = estimate_regular(k22.graph, k22.signature, policy, rng);
    CHECK(est.max_rank == 4);
    CHECK(est.is_regular(numeric_rank(rigidity_matrix(k22).matrix, policy)));

    // K_{4,4}: generic rank 13, the perpendicular placement falls short
    const Framework k44 = load_fixture("k44_perpendicular.json").to_framework();
    const RegularEstimate est44 = estimate_regular(k44.graph, k44.signature, policy, rng);
    CHECK(est44.max_rank == 13);
    CHECK(numeric_rank(rigidity_matrix(k44).matrix, policy) < 13);

    // monotone under edge addition
    std::mt19937_64 r2(33), r3(33);
    const Graph g1(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const Graph g2(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(estimate_regular(g2, Signature(2, 0), policy, r3).max_rank >=
          estimate_regular(g1, Signature(2, 0), policy, r2).max_rank);
}

TEST_CASE("rank invariant under group isometries of the whole configuration") {
    const NumericPolicy policy = default_policy();
    std::mt19937_64 rng(41);
    const PointGroup c5 = cyclic_group(5, 2);
    for (int t = 0; t < 5; ++t) {
        const Framework fw = random_framework(6, 2, 0.6, rng);
        const int r = numeric_rank(rigidity_matrix(fw).matrix, policy);
        for (const MatrixXd& M : c5.elements) {
            const Framework moved(fw.graph,
                                  Configuration(2, (M * fw.config.points.transpose()).transpose()),
                                  fw.signature);
            CHECK(numeric_rank(rigidity_matrix(moved).matrix, policy) == r);
        }
    }
}

TEST_CASE("predict_finite_flex") {
    const NumericPolicy policy = default_policy();
    std::mt19937_64 rng(51);

    // rigid triangle with the identity group: nothing predicted
    const SymFramework tri = with_identity_group(
        make_framework(2, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {1, 0}, {0.3, 0.9}}));
    CHECK_FALSE(predict_finite_flex(tri, policy, rng).predicted);

    // K_{2,2} with C_2 at the fixture configuration: predicted
    const SymFramework k22 = load_fixture("k22_c2.json").to_sym_framework(policy);
    const FlexPrediction p = predict_finite_flex(k22, policy, rng);
    CHECK(p.s_regular);
    CHECK(p.sym_flex_dim == 1);
    CHECK(p.predicted);

    // degenerate configuration: prediction withheld
    const Framework flat = make_framework(2, {{0, 1}, {1, 2}},
                                          {{0, 0}, {1, 0}, {2, 0}});
    const FlexPrediction w = predict_finite_flex(with_identity_group(flat), policy, rng);
    CHECK(w.withheld);
}
