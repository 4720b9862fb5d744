#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conerig/simplex.hpp"
#include "conerig/tensegrity.hpp"
#include "helpers.hpp"

using namespace conerig;
using conerig::testing::default_policy;
using conerig::testing::load_fixture;
using conerig::testing::make_framework;

namespace {

TensegrityFramework shrunk_fixture(double scale, const NumericPolicy& policy) {
    const FrameworkDocument doc = load_fixture("k4_tensegrity.json");
    const SymFramework sf = doc.to_sym_framework(policy);
    const SymFramework small = validate_symmetric(
        Framework(sf.framework.graph, Configuration(2, sf.framework.config.points * scale),
                  sf.framework.signature),
        sf.type_map, policy);
    return TensegrityFramework(small, doc.kinds);
}

}  // namespace

TEST_CASE("simplex") {
    MatrixXd A(2, 2);
    A << 1, 0, 0, 1;
    VectorXd b(2);
    b << 1, 2;
    VectorXd c(2);
    c << 1, 1;
    const LpResult lp = solve_lp_max(A, b, c);
    REQUIRE(lp.feasible);
    CHECK(lp.objective == doctest::Approx(3.0));
    CHECK(lp.x[0] == doctest::Approx(1.0));
    CHECK(lp.x[1] == doctest::Approx(2.0));

    // negative right-hand side exercises phase 1
    MatrixXd A2(2, 1);
    A2 << -1, 1;
    VectorXd b2(2);
    b2 << -1, 3;
    VectorXd c2(1);
    c2 << 1;
    const LpResult lp2 = solve_lp_max(A2, b2, c2);
    REQUIRE(lp2.feasible);
    CHECK(lp2.objective == doctest::Approx(3.0));

    // infeasible: x >= 1 and x <= 0.5
    VectorXd b3(2);
    b3 << -1, 0.5;
    CHECK_FALSE(solve_lp_max(A2, b3, c2).feasible);

    // binding equality via paired rows: x = 2, maximize -x
    MatrixXd A4(2, 1);
    A4 << 1, -1;
    VectorXd b4(2);
    b4 << 2, -2;
    VectorXd c4(1);
    c4 << -1;
    const LpResult lp4 = solve_lp_max(A4, b4, c4);
    REQUIRE(lp4.feasible);
    CHECK(lp4.x[0] == doctest::Approx(2.0));
}

TEST_CASE("proper_stress_in_span on the square") {
    const NumericPolicy policy = default_policy();
    const FrameworkDocument doc = load_fixture("k4_tensegrity.json");
    const Framework fw = doc.to_framework();
    const MatrixXd N = self_stresses(fw, policy).basis;
    REQUIRE(N.cols() == 1);

    const auto w = proper_stress_in_span(N, doc.kinds, true);
    REQUIRE(w.has_value());
    // diagonal cables in tension, boundary struts in compression
    CHECK((*w)[0] > 1e-8);
    CHECK((*w)[1] > 1e-8);
    for (int e = 2; e < 6; ++e) CHECK((*w)[e] < -1e-8);

    // flipping every label negates the stress, so feasibility is preserved
    std::vector<MemberKind> flipped = doc.kinds;
    for (MemberKind& k : flipped)
        k = k == MemberKind::cable ? MemberKind::strut : MemberKind::cable;
    const auto wf = proper_stress_in_span(N, flipped, true);
    REQUIRE(wf.has_value());
    CHECK((*wf)[0] < -1e-8);

    // opposing signs on the two diagonals are impossible: the stress ties them
    const std::vector<MemberKind> mixed = {MemberKind::cable, MemberKind::strut,
                                           MemberKind::bar,   MemberKind::bar,
                                           MemberKind::bar,   MemberKind::bar};
    CHECK_FALSE(proper_stress_in_span(N, mixed, true).has_value());
    // the non-strict version still admits the zero stress
    const auto wz = proper_stress_in_span(N, mixed, false);
    REQUIRE(wz.has_value());
    CHECK(wz->cwiseAbs().maxCoeff() <= 1e-8);

    // all bars: vacuously strict
    CHECK(proper_stress_in_span(N, std::vector<MemberKind>(6, MemberKind::bar), true)
              .has_value());
    // empty stress span with a cable present: nothing strict
    CHECK_FALSE(proper_stress_in_span(MatrixXd(6, 0), doc.kinds, true).has_value());
}

TEST_CASE("tensegrity_rigid") {
    const NumericPolicy policy = default_policy();
    const FrameworkDocument doc = load_fixture("k4_tensegrity.json");
    const TensegrityFramework tf = doc.to_tensegrity(policy);

    CHECK(tensegrity_rigid(tf, policy));
    // the witness stress is fully symmetric, so the restricted search finds it too
    CHECK(tensegrity_rigid(tf, policy, true));
    CHECK(proper_stress(tf, true, policy).has_value());

    // flipping every label keeps rigidity (negate the witness stress)
    std::vector<MemberKind> flipped = doc.kinds;
    for (MemberKind& k : flipped)
        k = k == MemberKind::cable ? MemberKind::strut : MemberKind::cable;
    CHECK(tensegrity_rigid(TensegrityFramework(tf.framework, flipped), policy));

    // opposing diagonals: bar-rigid but no strict proper stress
    const std::vector<MemberKind> mixed = {MemberKind::cable, MemberKind::strut,
                                           MemberKind::bar,   MemberKind::bar,
                                           MemberKind::bar,   MemberKind::bar};
    CHECK_FALSE(tensegrity_rigid(TensegrityFramework(tf.framework, mixed), policy));

    // all-bar variant reduces to bar rigidity
    const TensegrityFramework bars(tf.framework, std::vector<MemberKind>(6, MemberKind::bar));
    CHECK(tensegrity_rigid(bars, policy));

    // isostatic triangle with a cable: no self-stress to prop it up
    const Framework tri = make_framework(2, {{0, 1}, {1, 2}, {0, 2}},
                                         {{0, 0}, {1, 0}, {0.3, 0.9}});
    const TensegrityFramework tc(with_identity_group(tri),
                                 {MemberKind::cable, MemberKind::bar, MemberKind::bar});
    CHECK_FALSE(tensegrity_rigid(tc, policy));

    // kinds varying within an edge orbit are rejected
    std::vector<MemberKind> uneven = doc.kinds;
    uneven[2] = MemberKind::cable;  // orbit partner of edge {3,4} stays strut
    CHECK_THROWS_AS(TensegrityFramework(tf.framework, uneven), std::invalid_argument);
}

TEST_CASE("cone_tensegrity_rigid") {
    const NumericPolicy policy = default_policy();
    const TensegrityFramework tf =
        load_fixture("k4_tensegrity.json").to_tensegrity(policy);

    const ConedTensegrity hemi = cone_tensegrity(tf, MetricTag::hemisphere);
    CHECK(hemi.cone_kinds().size() == 10);
    for (size_t e = 6; e < 10; ++e) CHECK(hemi.cone_kinds()[e] == MemberKind::bar);
    CHECK(cone_tensegrity_rigid(hemi, policy));

    // hyperbolic target after shrinking into the unit disc
    const TensegrityFramework small = shrunk_fixture(0.4, policy);
    const ConedTensegrity hyp = cone_tensegrity(small, MetricTag::hyperbolic);
    CHECK(cone_tensegrity_rigid(hyp, policy));

    // opposing diagonals stay non-rigid on the cone
    ConedTensegrity bad = hemi;
    bad.base_kinds = {MemberKind::cable, MemberKind::strut, MemberKind::bar,
                      MemberKind::bar,   MemberKind::bar,   MemberKind::bar};
    CHECK_FALSE(cone_tensegrity_rigid(bad, policy));
}

TEST_CASE("invert_tensegrity_orbits") {
    const NumericPolicy policy = default_policy();
    const TensegrityFramework tf =
        load_fixture("k4_tensegrity.json").to_tensegrity(policy);
    const ConedTensegrity ct = cone_tensegrity(tf, MetricTag::hemisphere);

    // vertex orbits under C_2 are {1,3} and {2,4}; invert the first
    const ConedTensegrity inv = invert_tensegrity_orbits(ct, {0});
    // diagonals keep their kinds (0 or 2 inverted endpoints), sides swap
    CHECK(inv.base_kinds[0] == MemberKind::cable);
    CHECK(inv.base_kinds[1] == MemberKind::cable);
    for (int e = 2; e < 6; ++e) CHECK(inv.base_kinds[e] == MemberKind::cable);

    // rank and the rigidity verdict survive the inversion
    CHECK(numeric_rank(cone_rigidity_matrix(inv.cone, false).matrix, policy) ==
          numeric_rank(cone_rigidity_matrix(ct.cone, false).matrix, policy));
    CHECK(cone_tensegrity_rigid(inv, policy));
    CHECK(inv.cone.metric == MetricTag::whole_sphere);

    // inverting the complement afterwards undoes the relabeling
    const ConedTensegrity both_seq = invert_tensegrity_orbits(inv, {1});
    const ConedTensegrity both_at_once = invert_tensegrity_orbits(ct, {0, 1});
    CHECK(both_seq.base_kinds == ct.base_kinds);
    CHECK(both_seq.base_kinds == both_at_once.base_kinds);
    CHECK((both_seq.cone.alphas + ct.cone.alphas).norm() <= 1e-12);
    CHECK(cone_tensegrity_rigid(both_at_once, policy));
}
