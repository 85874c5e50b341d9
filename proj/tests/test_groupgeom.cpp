#include "doctest.h"

#include <random>

#include "manin/double_geometry.hpp"
#include "manin/models.hpp"

using namespace manin;

namespace {

DoubleGeometry su2_geometry() { return DoubleGeometry(MatrixGroupModel(models::su2())); }

// s with Ad_s a rotation by pi about the third axis; the -1 eigenspace is
// the (e1,e2) plane. This is diag(i,-i) in the defining representation.
GroupPoint torus_pi_over_2(const MatrixGroupModel& m) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(3);
    c(2) = -M_PI;
    return m.exp_point(c);
}

}  // namespace

TEST_CASE("bundled representations satisfy the model invariants") {
    for (auto name : {"su2", "sl2r", "nonabelian2d", "u1", "t2"}) {
        MatrixGroupModel m(*models::by_name(name));
        Report rep = m.validate(7, 12);
        INFO("model ", name);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("dressing field values at and away from the identity") {
    DoubleGeometry geo = su2_geometry();
    GroupPoint e = geo.model().identity();
    Eigen::VectorXd x(3);
    x << 1.0, -2.0, 0.5;

    CHECK(geo.dressing(x, x, e).norm() == doctest::Approx(0.0));
    CHECK((geo.dressing(x, -x, e) + 2 * x).norm() == doctest::Approx(0.0).epsilon(1e-12));

    std::mt19937 rng(3);
    GroupPoint s = geo.model().random_point(rng);
    Eigen::VectorXd expect = x - s.Ad.inverse() * x;
    CHECK((geo.dressing(x, x, s) - expect).norm() < 1e-12);
}

TEST_CASE("admissibility at the identity and at the -1 locus") {
    DoubleGeometry geo = su2_geometry();
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);

    auto at_e = geo.admissibility(geo.model().identity(), zero);
    CHECK(at_e.admissible);

    GroupPoint s = torus_pi_over_2(geo.model());
    auto at_s = geo.admissibility(s, zero);
    CHECK_FALSE(at_s.admissible);
    CHECK(at_s.margin < 1e-7);

    auto tw = geo.find_admissible_twist(s, 0.5);
    auto fixed = geo.admissibility(s, tw.t);
    CHECK(fixed.admissible);
    CHECK(fixed.margin > 0.1);
}

TEST_CASE("find_admissible_twist structure at the torus point") {
    DoubleGeometry geo = su2_geometry();
    GroupPoint s = torus_pi_over_2(geo.model());

    auto tw = geo.find_admissible_twist(s, 0.5);
    REQUIRE(tw.pairs.size() == 1);  // V is 2-dimensional
    const auto& [a, b] = tw.pairs[0];
    const Eigen::MatrixXd& K = geo.model().K();
    CHECK((a.transpose() * K * a)(0) == doctest::Approx(1.0));
    CHECK((b.transpose() * K * b)(0) == doctest::Approx(1.0));
    CHECK(std::abs((a.transpose() * K * b)(0)) < 1e-12);
    // V is spanned by e1, e2
    CHECK(std::abs(a(2)) < 1e-9);
    CHECK(std::abs(b(2)) < 1e-9);

    // no -1 eigenvalue: empty twist
    std::mt19937 rng(5);
    Eigen::VectorXd small = Eigen::VectorXd::Zero(3);
    small(0) = 0.3;
    auto none = geo.find_admissible_twist(geo.model().exp_point(small), 0.5);
    CHECK(none.t.norm() == 0.0);

    // the twisted complement stays isotropic: hyperbolic Gram of the graph
    // columns is t + t^T
    CHECK((tw.t + tw.t.transpose()).norm() < 1e-12);
}

TEST_CASE("twisted hat forms at the torus point match the closed forms") {
    DoubleGeometry geo = su2_geometry();
    GroupPoint s = torus_pi_over_2(geo.model());
    double eps = 0.5;
    auto tw = geo.find_admissible_twist(s, eps);
    const auto& [a, b] = tw.pairs[0];
    const Eigen::MatrixXd& K = geo.model().K();

    Eigen::VectorXd a_hat = geo.hat(a, s, tw.t);
    Eigen::VectorXd b_hat = geo.hat(b, s, tw.t);
    CHECK((a_hat + (1.0 / (2 * eps)) * (K * b)).norm() < 1e-9);
    CHECK((b_hat - (1.0 / (2 * eps)) * (K * a)).norm() < 1e-9);

    // x orthogonal to V keeps the reference closed form
    Eigen::VectorXd e3 = Eigen::VectorXd::Unit(3, 2);
    Eigen::VectorXd e3_hat = geo.hat(e3, s, tw.t);
    CHECK((e3_hat - geo.hat_closed_form(e3, s)).norm() < 1e-9);
}

TEST_CASE("tau vanishes at the identity and stays antisymmetric") {
    DoubleGeometry geo = su2_geometry();
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);
    CHECK(geo.tau(geo.model().identity(), zero).norm() < 1e-12);

    std::mt19937 rng(11);
    for (int k = 0; k < 10; ++k) {
        GroupPoint s = geo.model().random_point(rng);
        if (!geo.admissibility(s, zero).admissible) continue;
        Eigen::MatrixXd tau = geo.tau(s, zero);
        CHECK((tau + tau.transpose()).norm() < 1e-9);
        // consistency: x_S(s) = ((j o tau_s)(x))_S(s)
        Eigen::MatrixXd M = geo.complement_images(s, zero);
        Eigen::MatrixXd B = s.Ad.inverse();
        for (int i = 0; i < 3; ++i) {
            Eigen::VectorXd x = Eigen::VectorXd::Unit(3, i);
            Eigen::VectorXd lhs = x - B * x;
            Eigen::VectorXd rhs = M * (tau.transpose() * x);
            CHECK((lhs - rhs).norm() < 1e-9);
        }
    }
}

TEST_CASE("hat forms: identity point, closed form, and the two-path twist transport") {
    DoubleGeometry geo = su2_geometry();
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);
    const Eigen::MatrixXd& K = geo.model().K();

    // at e: (1 + Ad)^{-1} = 1/2, so x-hat = K x
    Eigen::VectorXd x(3);
    x << 0.7, -0.1, 2.0;
    CHECK((geo.hat(x, geo.model().identity(), zero) - K * x).norm() < 1e-12);

    std::mt19937 rng(13);
    Eigen::MatrixXd t(3, 3);
    t << 0, 1, 0, -1, 0, 0, 0, 0, 0;  // e1 ^ e2
    for (int k = 0; k < 10; ++k) {
        GroupPoint s = geo.model().random_point(rng);
        if (!geo.admissibility(s, zero).admissible) continue;
        CHECK((geo.hat(x, s, zero) - geo.hat_closed_form(x, s)).norm() < 1e-9);
        if (!geo.admissibility(s, t).admissible) continue;
        CHECK((geo.twisted_hat(x, s, zero, t) - geo.hat(x, s, t)).norm() < 1e-9);
    }

    // t = 0 transport is the identity
    GroupPoint s = geo.model().random_point(rng);
    CHECK((geo.twisted_hat(x, s, zero, zero) - geo.hat(x, s, zero)).norm() < 1e-12);

    // non-admissible points raise with the margin attached
    GroupPoint bad = torus_pi_over_2(geo.model());
    CHECK_THROWS_AS(geo.hat(x, bad, zero), NonAdmissibleError);
    try {
        geo.hat(x, bad, zero);
    } catch (const NonAdmissibleError& e) {
        CHECK(e.margin < 1e-7);
    }
}

TEST_CASE("P_G vanishes for the reference complement and is a twisted cocycle") {
    DoubleGeometry geo = su2_geometry();
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);
    std::mt19937 rng(17);

    CHECK(geo.P_G(geo.model().identity(), zero).norm() < 1e-12);
    for (int k = 0; k < 5; ++k)
        CHECK(geo.P_G(geo.model().random_point(rng), zero).norm() < 1e-12);

    Eigen::MatrixXd t(3, 3);
    t << 0, 0.5, -0.25, -0.5, 0, 1.0, 0.25, -1.0, 0;
    CHECK(geo.P_G(geo.model().identity(), t).norm() < 1e-12);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        GroupPoint g = geo.model().random_point(rng);
        GroupPoint h = geo.model().random_point(rng);
        GroupPoint gh = geo.model().point(g.matrix * h.matrix);
        Eigen::MatrixXd lhs = geo.P_G(gh, t);
        Eigen::MatrixXd rhs = geo.P_G(g, t) + g.Ad * geo.P_G(h, t) * g.Ad.transpose();
        worst = std::max(worst, (lhs - rhs).norm());
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("P_S values: identity, closed form, twist law") {
    DoubleGeometry geo = su2_geometry();
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(3, 3);
    CHECK(geo.P_S(geo.model().identity(), zero).norm() < 1e-12);

    std::mt19937 rng(19);
    Eigen::MatrixXd t(3, 3);
    t << 0, -0.75, 0.5, 0.75, 0, 0.25, -0.5, -0.25, 0;
    const Eigen::MatrixXd& Kinv = geo.model().K_inv();
    for (int k = 0; k < 10; ++k) {
        GroupPoint s = geo.model().random_point(rng);
        Eigen::MatrixXd B = s.Ad.inverse();
        Eigen::MatrixXd expect = 0.5 * (Kinv * B.transpose() - B * Kinv);
        CHECK((geo.P_S(s, zero) - expect).norm() < 1e-12);

        Eigen::MatrixXd I = Eigen::MatrixXd::Identity(3, 3);
        Eigen::MatrixXd tS = (I - B) * t * (I - B).transpose();
        CHECK((geo.P_S(s, t) - (geo.P_S(s, zero) - tS)).norm() < 1e-12);
    }
}

TEST_CASE("frame fields evaluate the Schouten identity of P_S pointwise") {
    DoubleGeometry geo = su2_geometry();
    const QuasiTriple& qt = geo.triple();
    const FrameAlgebra& fa = geo.frame();

    Multivector a_mv = qt.canonical_r().antisymmetric_part().to_multivector();
    Multivector P_field = -geo.dressing_frame_field(a_mv);
    Multivector half_PP = Rat(1, 2) * schouten(P_field, P_field, fa.f());
    Multivector phi_field = geo.action_frame_field(qt.phi());

    std::mt19937 rng(23);
    double worst = 0, worst_phi = 0, worst_ps = 0;
    for (int k = 0; k < 100; ++k) {
        GroupPoint s = geo.model().random_point(rng);
        auto lhs = geo.frame_eval3(half_PP, s);
        auto rhs = geo.frame_eval3(phi_field, s);
        for (size_t i = 0; i < lhs.size(); ++i) {
            worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
            worst_phi = std::max(worst_phi, std::abs(rhs[i]));
        }
        // the degree-2 frame field of P_S matches the pointwise matrix
        Eigen::MatrixXd direct = geo.P_S(s, Eigen::MatrixXd::Zero(3, 3));
        Eigen::MatrixXd via_frame = geo.frame_eval2(P_field, s);
        worst_ps = std::max(worst_ps, (direct - via_frame).norm());
    }
    CHECK(worst < 1e-9);
    CHECK(worst_phi < 1e-9);  // phi_S vanishes identically on SU(2)
    CHECK(worst_ps < 1e-9);
}
