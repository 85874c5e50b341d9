#include "doctest.h"

#include "manin/brackets.hpp"
#include "manin/models.hpp"
#include "test_helpers.hpp"

using namespace manin;
using namespace manin::testing;

namespace {

// Independent recursive Leibniz expansion of d_F: splits off the first
// factor instead of looping over positions.
Multivector ce_oracle(const Cobracket& F, const Multivector& u) {
    if (u.degree() == 0) return Multivector(u.space(), 1);
    Multivector out(u.space(), u.degree() + 1);
    for (const auto& [b, c] : u.terms()) {
        auto idx = blade_indices(b);
        if (idx.size() == 1) {
            Multivector term = F.of_basis(idx[0]);
            term *= c;
            out += term;
            continue;
        }
        Blade rest = b & ~(Blade(1) << idx[0]);
        Multivector head = Multivector::basis(u.space(), idx[0]);
        Multivector rest_mv(u.space(), u.degree() - 1);
        rest_mv.set_coeff(rest, c);
        out += wedge(F.of_basis(idx[0]), rest_mv);
        out -= wedge(head, ce_oracle(F, rest_mv));
    }
    return out;
}

}  // namespace

TEST_CASE("schouten reduces to the Lie bracket on degree-1 inputs") {
    auto su2 = models::su2().algebra;
    const auto& s = su2.space();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Multivector lhs =
                schouten(Multivector::basis(s, i), Multivector::basis(s, j), su2.f);
            Multivector rhs(s, 1);
            for (int k = 0; k < 3; ++k) rhs.add_coeff(Blade(1) << k, su2.f.f(i, j, k));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("schouten calibration: <r,r> = -1/2 [r,r] frozen on su(2)") {
    // r = e1 ^ e2 over su(2). Expanding the three Yang-Baxter commutator
    // terms by hand gives <r,r> = e1^e2^e3; the bracket convention must then
    // produce [r,r] = -2 e1^e2^e3.
    auto su2 = models::su2().algebra;
    const auto& s = su2.space();
    Multivector r(s, 2);
    r.set_coeff(0b011, Rat(1));

    Tensor3 rr = drinfeld_bracket(Tensor2::from_multivector(r), su2.f);
    CHECK(rr.is_totally_antisymmetric());
    Multivector expected(s, 3);
    expected.set_coeff(0b111, Rat(1));
    CHECK(rr.to_multivector() == expected);

    CHECK(schouten(r, r, su2.f) == Rat(-2) * expected);
}

TEST_CASE("skew identity on random antisymmetric r") {
    auto lie = models::sl2r().algebra;
    std::mt19937 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        Tensor2 r = random_antisymmetric_tensor2(lie.space(), rng);
        Tensor3 rr = drinfeld_bracket(r, lie.f);
        Tensor3 anti = rr.antisymmetrize();
        CHECK(rr == anti);  // already totally antisymmetric for antisymmetric r
        Multivector lhs = anti.to_multivector();
        Multivector rhs =
            Rat(-1, 2) * schouten(r.to_multivector(), r.to_multivector(), lie.f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("drinfeld bracket of zero is zero") {
    auto su2 = models::su2().algebra;
    Tensor2 zero(su2.space());
    CHECK(drinfeld_bracket(zero, su2.f).is_zero());
}

TEST_CASE("symmetric invariant r keeps only the first commutator term") {
    // s = K^{-1} = 2 I for su(2) with K = 1/2 delta. Expected components
    // frozen from f_{bc}^a s^{bb'} s^{cc'} = 4 f_{b'c'}^a.
    auto su2 = models::su2().algebra;
    const auto& sp = su2.space();
    Tensor2 sym(sp);
    for (int i = 0; i < 3; ++i) sym.at(i, i) = Rat(2);
    CHECK(is_ad_invariant(sym, su2.f));

    Tensor3 got = drinfeld_bracket(sym, su2.f);
    Tensor3 expected(sp);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) expected.at(a, b, c) = Rat(4) * su2.f.f(b, c, a);
    CHECK(got == expected);
}

TEST_CASE("ras decomposition for r with invariant symmetric part") {
    auto su2 = models::su2().algebra;
    std::mt19937 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        Tensor2 a = random_antisymmetric_tensor2(su2.space(), rng);
        Tensor2 s(su2.space());
        Rat scale = random_rat(rng);
        for (int i = 0; i < 3; ++i) s.at(i, i) = scale;
        Tensor2 r = a + s;
        Tensor3 lhs = drinfeld_bracket(r, su2.f);
        Tensor3 rhs = drinfeld_bracket(a, su2.f) + drinfeld_bracket(s, su2.f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("graded antisymmetry and Leibniz rule") {
    auto lie = models::su2().algebra;
    BasedSpace s = lie.space();
    std::mt19937 rng(31);
    for (int trial = 0; trial < 24; ++trial) {
        int p = 1 + trial % 3, q = 1 + (trial / 3) % 3, rr = 1 + (trial / 9) % 2;
        Multivector u = random_multivector(s, p, rng);
        Multivector v = random_multivector(s, q, rng);
        Multivector w = random_multivector(s, rr, rng);

        Multivector uv = schouten(u, v, lie.f);
        Multivector vu = schouten(v, u, lie.f);
        if (((p - 1) * (q - 1)) % 2 == 0) vu = -vu;
        CHECK(uv == vu);

        // [u, v^w] = (-1)^{(p-1)|w|} [u,v]^w + v^[u,w]
        Multivector lhs = schouten(u, wedge(v, w), lie.f);
        Multivector first = wedge(schouten(u, v, lie.f), w);
        if (((p - 1) * rr) % 2 == 1) first = -first;
        Multivector rhs = first + wedge(v, schouten(u, w, lie.f));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("graded Jacobi identity on random bivectors of su(2)") {
    auto lie = models::su2().algebra;
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Multivector u = random_multivector(lie.space(), 2, rng);
        Multivector v = random_multivector(lie.space(), 2, rng);
        Multivector w = random_multivector(lie.space(), 2, rng);
        // degrees are all even, shifted degree 1: [u,[v,w]] = [[u,v],w] - [v,[u,w]]
        Multivector lhs = schouten(u, schouten(v, w, lie.f), lie.f);
        Multivector rhs = schouten(schouten(u, v, lie.f), w, lie.f) -
                          schouten(v, schouten(u, w, lie.f), lie.f);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("scalar brackets vanish") {
    auto lie = models::su2().algebra;
    Multivector c = Multivector::scalar(lie.space(), Rat(7));
    Multivector u = Multivector::basis(lie.space(), 0);
    CHECK(schouten(c, u, lie.f).is_zero());
    CHECK(schouten(c, c, lie.f).is_zero());
}

TEST_CASE("ad_derivation basics and Leibniz collapse on su(2)") {
    auto lie = models::su2().algebra;
    const auto& s = lie.space();
    Multivector e1 = Multivector::basis(s, 0);

    CHECK(ad_derivation(e1, Multivector::scalar(s, Rat(3)), lie.f).is_zero());

    Multivector e2 = Multivector::basis(s, 1);
    CHECK(ad_derivation(e1, e2, lie.f) == lie.f.bracket(e1, e2));

    // ad_{e1}(e2 ^ e3) = [e1,e2]^e3 + e2^[e1,e3] = e3^e3 - e2^e2 = 0
    Multivector u(s, 2);
    u.set_coeff(0b110, Rat(1));
    CHECK(ad_derivation(e1, u, lie.f).is_zero());
}

TEST_CASE("ad_derivation agrees with the degree-1 schouten bracket") {
    auto lie = models::sl2r().algebra;
    std::mt19937 rng(53);
    for (int trial = 0; trial < 12; ++trial) {
        Multivector x = random_multivector(lie.space(), 1, rng);
        Multivector u = random_multivector(lie.space(), 1 + trial % 3, rng);
        CHECK(ad_derivation(x, u, lie.f) == schouten(x, u, lie.f));
    }
}

TEST_CASE("ce_differential with zero cobracket is zero") {
    auto lie = models::su2().algebra;
    Cobracket F(lie.space());
    std::mt19937 rng(61);
    Multivector u = random_multivector(lie.space(), 2, rng);
    CHECK(ce_differential(F, u).is_zero());
}

TEST_CASE("ce_differential matches the recursive Leibniz oracle") {
    auto lie = models::su2().algebra;
    const auto& s = lie.space();
    std::mt19937 rng(67);
    for (int trial = 0; trial < 12; ++trial) {
        Cobracket F(s);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = j + 1; k < 3; ++k) F.set(i, j, k, random_rat(rng));
        Multivector u = random_multivector(s, 1 + trial % 2, rng);
        CHECK(ce_differential(F, u) == ce_oracle(F, u));
    }
}

TEST_CASE("jacobi defect vanishes for su(2) and abelian algebras") {
    CHECK(jacobi_defect(models::su2().algebra.f).is_zero());
    CHECK(jacobi_defect(models::t2().algebra.f).is_zero());
}

TEST_CASE("jacobi defect flags a perturbed su(2)") {
    auto lie = models::su2().algebra;
    StructureConstants f = lie.f;
    f.set(0, 1, 0, f.f(0, 1, 0) + Rat(1));  // f_{12}^1 += 1
    Jacobiator J = jacobi_defect(f);
    CHECK_FALSE(J.is_zero());
    auto v = J.first_violation();
    REQUIRE(v.has_value());
    CHECK_FALSE(v->value.is_zero());
}

TEST_CASE("non-antisymmetric structure constants are rejected with an index") {
    BasedSpace s(2);
    StructureConstants f(s);
    f.set_raw(0, 1, 0, Rat(1));  // no mirror entry
    CHECK_THROWS_WITH_AS(jacobi_defect(f), doctest::Contains("antisymmetry"),
                         std::invalid_argument);
}
