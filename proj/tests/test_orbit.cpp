#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conerig/orbit.hpp"
#include "helpers.hpp"

using namespace conerig;
using conerig::testing::default_policy;
using conerig::testing::load_fixture;
using conerig::testing::span_residual;

TEST_CASE("orbit matrix of the K_{2,2}/C_2 fixture") {
    const NumericPolicy policy = default_policy();
    const SymFramework sf = load_fixture("k22_c2.json").to_sym_framework(policy);
    const OrbitRigidityMatrix O = orbit_matrix(sf, compute_orbits(sf), policy);
    REQUIRE(O.matrix.rows() == 2);
    REQUIRE(O.matrix.cols() == 4);
    MatrixXd expected(2, 4);
    expected << -1, 1, 1, -1,
                 1, 3, 1, 3;
    CHECK((O.matrix - expected).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("orbit matrix of the C_{3v} fixture") {
    const NumericPolicy policy = default_policy();
    const SymFramework sf = load_fixture("c3v_triangles.json").to_sym_framework(policy);
    const OrbitRigidityMatrix O = orbit_matrix(sf, compute_orbits(sf), policy);
    REQUIRE(O.matrix.rows() == 3);
    REQUIRE(O.matrix.cols() == 2);
    MatrixXd expected(3, 2);
    expected << 1, -1,
                6, 0,
                0, 3;
    CHECK((O.matrix - expected).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(numeric_rank(O.matrix, policy) == 2);
}

TEST_CASE("identity group: orbit matrix equals the rigidity matrix") {
    const NumericPolicy policy = default_policy();
    const SymFramework sf = with_identity_group(load_fixture("body_bar.json").to_framework());
    const OrbitRigidityMatrix O = orbit_matrix(sf, compute_orbits(sf), policy);
    const MatrixXd R = rigidity_matrix(sf.framework).matrix;
    CHECK((O.matrix - R).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("symmetric motions and stresses") {
    const NumericPolicy policy = default_policy();

    const SymFramework k22 = load_fixture("k22_c2.json").to_sym_framework(policy);
    const Subspace mk = symmetric_motions(k22, policy);
    // kernel holds the C_2-symmetric rotation plus the genuine flex
    CHECK(mk.dimension() == 2);
    CHECK(symmetric_trivial_dim(k22, policy) == 1);
    VectorXd flex(4);
    flex << -1, 0, -0.5, 0.5;
    CHECK(span_residual(mk.basis, flex / flex.norm()) <= 1e-9);
    CHECK(symmetric_stresses(k22, policy).dimension() == 0);

    const SymFramework c3v = load_fixture("c3v_triangles.json").to_sym_framework(policy);
    CHECK(symmetric_motions(c3v, policy).dimension() == 0);
    const Subspace sc = symmetric_stresses(c3v, policy);
    REQUIRE(sc.dimension() == 1);
    VectorXd stress(3);
    stress << 1, -1.0 / 6, 1.0 / 3;
    CHECK(span_residual(sc.basis, stress / stress.norm()) <= 1e-9);
}

TEST_CASE("lifting motions and stresses") {
    const NumericPolicy policy = default_policy();
    const SymFramework k22 = load_fixture("k22_c2.json").to_sym_framework(policy);
    const OrbitRigidityMatrix O = orbit_matrix(k22, compute_orbits(k22), policy);

    VectorXd v(4);
    v << -1, 0, -0.5, 0.5;
    const VectorXd lifted = lift_motion(k22, O, v);
    VectorXd expected(8);
    expected << -1, 0, -0.5, 0.5, 1, 0, 0.5, -0.5;
    CHECK((lifted - expected).norm() <= 1e-12);
    CHECK((rigidity_matrix(k22.framework).matrix * lifted).cwiseAbs().maxCoeff() <= 1e-12);

    const SymFramework c3v = load_fixture("c3v_triangles.json").to_sym_framework(policy);
    const OrbitRigidityMatrix Oc = orbit_matrix(c3v, compute_orbits(c3v), policy);
    VectorXd w(3);
    w << 1, -1.0 / 6, 1.0 / 3;
    const VectorXd lw = lift_stress(c3v, Oc, w);
    VectorXd exp9(9);
    exp9 << 1, 1, 1, -1.0 / 6, -1.0 / 6, -1.0 / 6, 1.0 / 3, 1.0 / 3, 1.0 / 3;
    CHECK((lw - exp9).norm() <= 1e-9);
    CHECK((lw.transpose() * rigidity_matrix(c3v.framework).matrix).cwiseAbs().maxCoeff() <= 1e-9);

    // lifted motions satisfy the symmetry-equivariance equations
    std::mt19937_64 rng(4);
    const Subspace mk = symmetric_motions(k22, policy);
    for (int c = 0; c < mk.dimension(); ++c) {
        const VectorXd u = lift_motion(k22, O, mk.basis.col(c));
        for (int x = 0; x < k22.group().size(); ++x)
            for (int i = 0; i < 4; ++i) {
                const VectorXd lhs = k22.group().elements[x] * u.segment(2 * i, 2);
                const VectorXd rhs = u.segment(2 * k22.perm(x, i), 2);
                CHECK((lhs - rhs).norm() <= 1e-10);
            }
    }
    (void)rng;
}

TEST_CASE("rank-nullity on orbit matrices") {
    const NumericPolicy policy = default_policy();
    for (const char* name : {"k22_c2.json", "c3v_triangles.json",
                             "k44_perpendicular.json"}) {
        const SymFramework sf = load_fixture(name).to_sym_framework(policy);
        const OrbitRigidityMatrix O = orbit_matrix(sf, compute_orbits(sf), policy);
        const int r = numeric_rank(O.matrix, policy);
        CHECK(symmetric_motions(sf, policy).dimension() + r == O.total_cols());
        CHECK(symmetric_stresses(sf, policy).dimension() + r ==
              static_cast<int>(O.matrix.rows()));
    }
}

TEST_CASE("s_regular") {
    const NumericPolicy policy = default_policy();
    std::mt19937_64 rng(61);
    const SymFramework k22 = load_fixture("k22_c2.json").to_sym_framework(policy);
    CHECK(s_regular(k22, policy, rng));

    const SymFramework k44 = load_fixture("k44_perpendicular.json").to_sym_framework(policy);
    CHECK(s_regular(k44, policy, rng));
}

TEST_CASE("K_{4,4} finite-flex predictions") {
    const NumericPolicy policy = default_policy();
    std::mt19937_64 rng(71);

    const SymFramework perp = load_fixture("k44_perpendicular.json").to_sym_framework(policy);
    const FlexPrediction p1 = predict_finite_flex(perp, policy, rng);
    CHECK(p1.sym_flex_dim >= 1);
    CHECK(p1.predicted);

    const SymFramework skew = load_fixture("k44_nonperpendicular.json").to_sym_framework(policy);
    const FlexPrediction p2 = predict_finite_flex(skew, policy, rng);
    CHECK_FALSE(p2.predicted);
    CHECK_FALSE(p2.s_regular);
}
