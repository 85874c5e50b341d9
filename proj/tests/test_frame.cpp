#include "doctest.h"

#include "manin/frame_algebra.hpp"
#include "manin/models.hpp"
#include "manin/quasi_triple.hpp"
#include "test_helpers.hpp"

using namespace manin;
using namespace manin::testing;

namespace {

// Rational rotation about the z axis from a Pythagorean pair: preserves both
// the su(2) bracket and K, so it is a valid exact Ad matrix.
RatMat rational_rotation_z(const Rat& c, const Rat& s) {
    RatMat R(3, 3);
    R.at(0, 0) = c;  R.at(0, 1) = -s;
    R.at(1, 0) = s;  R.at(1, 1) = c;
    R.at(2, 2) = Rat(1);
    return R;
}

RatMat rational_rotation_x(const Rat& c, const Rat& s) {
    RatMat R(3, 3);
    R.at(0, 0) = Rat(1);
    R.at(1, 1) = c;  R.at(1, 2) = -s;
    R.at(2, 1) = s;  R.at(2, 2) = c;
    return R;
}

// Ad of a point (g1, g2) of D = G x G on the double, written in the adapted
// basis (diagonal; half-antidiagonal raised by K).
RatMat adapted_double_ad(const RatMat& A1, const RatMat& A2, const RatMat& K) {
    int n = K.rows();
    RatMat Kinv = *K.inverse();
    // T: adapted coords -> product coords (columns are the adapted basis)
    RatMat T(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) {
            T.at(r, i) = (r == i) ? Rat(1) : Rat(0);
            T.at(n + r, i) = (r == i) ? Rat(1) : Rat(0);
            T.at(r, n + i) = Rat(1, 2) * Kinv.at(i, r);
            T.at(n + r, n + i) = Rat(-1, 2) * Kinv.at(i, r);
        }
    RatMat block(2 * n, 2 * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            block.at(r, c) = A1.at(r, c);
            block.at(n + r, n + c) = A2.at(r, c);
        }
    return *T.inverse() * block * T;
}

}  // namespace

TEST_CASE("frame generators satisfy the stated bracket relations") {
    auto su2 = models::su2().algebra;
    FrameAlgebra fa(su2);
    const auto& f = fa.f();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Multivector ll = schouten(fa.gen_left(i), fa.gen_left(j), f);
            Multivector rr = schouten(fa.gen_right(i), fa.gen_right(j), f);
            Multivector lr = schouten(fa.gen_left(i), fa.gen_right(j), f);
            CHECK(lr.is_zero());
            for (int k = 0; k < 3; ++k) {
                CHECK(ll.coeff(Blade(1) << k) == su2.f.f(i, j, k));
                CHECK(rr.coeff(Blade(1) << (3 + k)) == -su2.f.f(i, j, k));
            }
        }
}

TEST_CASE("pointwise evaluation substitutes the right frame images") {
    auto su2 = models::su2().algebra;
    FrameAlgebra fa(su2);
    RatMat B = rational_rotation_z(Rat(3, 5), Rat(4, 5));
    Multivector field = wedge(fa.gen_left(0), fa.gen_right(1));
    Multivector val = fa.evaluate(field, B);
    // e1 ^ (B e2) with B e2 = (-4/5, 3/5, 0)
    Multivector expect = wedge(Multivector::basis(su2.space(), 0),
                               Multivector::vector(su2.space(), {Rat(-4, 5), Rat(3, 5), Rat(0)}));
    CHECK(val == expect);
}

TEST_CASE("P_D frame identities for the su(2) double") {
    auto su2 = models::su2().algebra;
    QuasiTriple qt = QuasiTriple::build_pair_from_metric(su2);
    FrameAlgebra fa(qt.d());
    const auto& ds = qt.d().space();

    Tensor2 r = qt.canonical_r();
    Multivector a_mv = r.antisymmetric_part().to_multivector();
    Multivector P = fa.left(a_mv) - fa.right(a_mv);
    Multivector phi_d = qt.phi().map_generators(ds, [&](int i) {
        return Multivector::basis(ds, i);
    });

    Tensor3 ss_t = drinfeld_bracket(r.symmetric_part(), qt.d().f);
    REQUIRE(ss_t.is_totally_antisymmetric());
    Multivector ss = ss_t.to_multivector();

    // <s,s> is ad(d)-invariant, exactly.
    CHECK(is_ad_invariant(ss, qt.d().f));

    // 1/2 [P_D, P_D] = (phi - <s,s>)^rho - (phi - <s,s>)^lambda as a free
    // frame-algebra identity; the lambda/rho lifts of the invariant <s,s>
    // agree only after pointwise evaluation.
    Multivector lhs = Rat(1, 2) * schouten(P, P, fa.f());
    Multivector inv_part = phi_d - ss;
    CHECK(lhs == fa.right(inv_part) - fa.left(inv_part));

    // Exact pointwise form of the Schouten identity at rational Ad points.
    RatMat A1 = rational_rotation_z(Rat(3, 5), Rat(4, 5));
    RatMat A2 = rational_rotation_x(Rat(5, 13), Rat(12, 13));
    RatMat B = adapted_double_ad(A1, A2, *su2.K);
    Multivector lhs_val = fa.evaluate(lhs, B);
    Multivector rhs_val = fa.evaluate(fa.right(phi_d) - fa.left(phi_d), B);
    CHECK(lhs_val == rhs_val);

    // The invariant discrepancy evaluates to zero on its own.
    CHECK(fa.evaluate(fa.left(ss) - fa.right(ss), B).is_zero());
}

TEST_CASE("pentagon: [P_G, phi^lambda] = 0 exactly in the frame algebra") {
    auto su2 = models::su2().algebra;
    QuasiTriple qt = QuasiTriple::build_pair_from_metric(su2);
    FrameAlgebra fa(qt.d());
    const auto& ds = qt.d().space();

    Multivector a_mv = qt.canonical_r().antisymmetric_part().to_multivector();
    Multivector P = fa.left(a_mv) - fa.right(a_mv);
    Multivector phi_d = qt.phi().map_generators(ds, [&](int i) {
        return Multivector::basis(ds, i);
    });
    CHECK(schouten(P, fa.left(phi_d), fa.f()).is_zero());
    CHECK(schouten(P, fa.right(phi_d), fa.f()).is_zero());
}

TEST_CASE("Lie derivatives of P_D along invariant fields, exactly") {
    auto su2 = models::su2().algebra;
    std::mt19937 rng(71);
    QuasiTriple qt =
        QuasiTriple::build_pair_from_metric(su2)
            .with_twist(Twist::from_tensor(random_antisymmetric_tensor2(su2.space(), rng)));
    FrameAlgebra fa(qt.d());
    const auto& ds = qt.d().space();

    Multivector a_mv = qt.canonical_r().antisymmetric_part().to_multivector();
    Multivector P = fa.left(a_mv) - fa.right(a_mv);

    // L_{x^l} P_D = F(x)^l on the subalgebra basis
    for (int i = 0; i < 3; ++i) {
        Multivector lhs = schouten(fa.gen_left(i), P, fa.f());
        Multivector Fx = qt.F().of_basis(i).map_generators(ds, [&](int k) {
            return Multivector::basis(ds, k);
        });
        CHECK(lhs == fa.left(Fx));
        Multivector rhs_r = schouten(fa.gen_right(i), P, fa.f());
        CHECK(rhs_r == fa.right(Fx));
    }

    // L_{xi^l} P_D = -f(xi)^l + phi(xi)^l on the complement basis
    for (int i = 0; i < 3; ++i) {
        Multivector xi_d = Multivector::vector(ds, qt.complement_basis(i));
        Multivector lhs = schouten(fa.left(xi_d), P, fa.f());
        Multivector fxi(ds, 2);
        for (int m = 0; m < 3; ++m)
            for (int k = m + 1; k < 3; ++k) {
                const Rat& c = su2.f.f(m, k, i);
                if (c.is_zero()) continue;
                Multivector w = wedge(Multivector::vector(ds, qt.complement_basis(m)),
                                      Multivector::vector(ds, qt.complement_basis(k)));
                w *= c;
                fxi += w;
            }
        std::vector<Rat> delta(3, Rat(0));
        delta[i] = Rat(1);
        Multivector phixi = contract_first(delta, qt.phi()).map_generators(ds, [&](int k) {
            return Multivector::basis(ds, k);
        });
        CHECK(lhs == fa.left(-fxi + phixi));
    }
}
