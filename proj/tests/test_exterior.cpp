#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "manin/multivector.hpp"
#include "manin/tensor.hpp"
#include "test_helpers.hpp"

using namespace manin;
using namespace manin::testing;

namespace manin::testing {

DenseTensor dense_wedge(const DenseTensor& u, const DenseTensor& v) {
    DenseTensor out;
    out.dim = u.dim;
    out.degree = u.degree + v.degree;
    int p = u.degree, q = v.degree;
    Rat norm(1);
    for (int i = 2; i <= p; ++i) norm *= Rat(i);
    for (int i = 2; i <= q; ++i) norm *= Rat(i);

    std::vector<int> idx(out.degree);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == out.degree) {
            std::vector<int> perm(out.degree);
            std::iota(perm.begin(), perm.end(), 0);
            Rat acc(0);
            do {
                int sgn = 1;
                for (size_t a = 0; a < perm.size(); ++a)
                    for (size_t b = a + 1; b < perm.size(); ++b)
                        if (perm[a] > perm[b]) sgn = -sgn;
                std::vector<int> iu(p), iv(q);
                for (int a = 0; a < p; ++a) iu[a] = idx[perm[a]];
                for (int a = 0; a < q; ++a) iv[a] = idx[perm[p + a]];
                Rat term = u.at(iu) * v.at(iv);
                if (!term.is_zero()) acc += sgn > 0 ? term : -term;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (!acc.is_zero()) out.c[idx] = acc / norm;
            return;
        }
        for (int i = 0; i < out.dim; ++i) {
            idx[pos] = i;
            self(self, pos + 1);
        }
    };
    if (out.degree == 0) {
        Rat prod = u.at({}) * v.at({});
        if (!prod.is_zero()) out.c[{}] = prod;
    } else {
        rec(rec, 0);
    }
    return out;
}

}  // namespace manin::testing

TEST_CASE("wedge of a basis vector with itself vanishes") {
    BasedSpace s(3);
    auto e1 = Multivector::basis(s, 0);
    CHECK(wedge(e1, e1).is_zero());
}

TEST_CASE("wedge is graded anticommutative on degree one") {
    BasedSpace s(3);
    auto e1 = Multivector::basis(s, 0);
    auto e2 = Multivector::basis(s, 1);
    CHECK(wedge(e1, e2) == -wedge(e2, e1));
}

TEST_CASE("top form coefficient is the product of the input coefficients") {
    // (2 e1^e2) ^ (3 e3) in dimension 3; expected value frozen from the
    // full-antisymmetrization oracle below.
    BasedSpace s(3);
    Multivector u(s, 2);
    u.set_coeff(0b011, Rat(2));
    Multivector v(s, 1);
    v.set_coeff(0b100, Rat(3));
    Multivector w = wedge(u, v);
    CHECK(w.coeff(0b111) == Rat(6));
    CHECK(w.terms().size() == 1);

    DenseTensor oracle = dense_wedge(to_dense(u), to_dense(v));
    CHECK(oracle.at({0, 1, 2}) == Rat(6));
    CHECK(from_dense(oracle, s) == w);
}

TEST_CASE("wedge matches the full-antisymmetrization oracle on random inputs") {
    std::mt19937 rng(11);
    BasedSpace s(5);
    for (int trial = 0; trial < 20; ++trial) {
        int p = trial % 3;
        int q = (trial / 3) % 3;
        Multivector u = random_multivector(s, p, rng);
        Multivector v = random_multivector(s, q, rng);
        Multivector impl = wedge(u, v);
        Multivector oracle = from_dense(dense_wedge(to_dense(u), to_dense(v)), s);
        CHECK(impl == oracle);
    }
}

TEST_CASE("wedge is associative and graded commutative") {
    std::mt19937 rng(7);
    BasedSpace s(8);
    for (int trial = 0; trial < 30; ++trial) {
        int p = trial % 3, q = (trial / 3) % 3, r = 1 + (trial / 9) % 2;
        Multivector u = random_multivector(s, p, rng, 0.4);
        Multivector v = random_multivector(s, q, rng, 0.4);
        Multivector w = random_multivector(s, r, rng, 0.4);
        CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
        Multivector vu = wedge(v, u);
        if ((p * q) % 2 == 1) vu = -vu;
        CHECK(wedge(u, v) == vu);
    }
}

TEST_CASE("components apply permutation signs and kill repeated indices") {
    BasedSpace s(4);
    Multivector m(s, 2);
    m.set_coeff(0b0101, Rat(5));  // e1 ^ e3
    CHECK(m.component(std::vector<int>{0, 2}) == Rat(5));
    CHECK(m.component(std::vector<int>{2, 0}) == Rat(-5));
    CHECK(m.component(std::vector<int>{2, 2}) == Rat(0));
}

TEST_CASE("tensor2 round trip through multivector preserves antisymmetric data") {
    std::mt19937 rng(3);
    BasedSpace s(6);
    for (int trial = 0; trial < 5; ++trial) {
        Tensor2 t = random_antisymmetric_tensor2(s, rng);
        CHECK(Tensor2::from_multivector(t.to_multivector()) == t);
    }
}

TEST_CASE("tensor3 antisymmetrize projects and fixes antisymmetric tensors") {
    BasedSpace s(3);
    Tensor3 t(s);
    t.at(0, 1, 2) = Rat(6);  // single slot, not antisymmetric
    Tensor3 a = t.antisymmetrize();
    CHECK(a.at(0, 1, 2) == Rat(1));
    CHECK(a.at(1, 0, 2) == Rat(-1));
    CHECK(a.is_totally_antisymmetric());
    CHECK(a.antisymmetrize() == a);
}

TEST_CASE("contract_first against the tensor components") {
    std::mt19937 rng(5);
    BasedSpace s(5);
    Multivector u = random_multivector(s, 3, rng);
    std::vector<Rat> xi(5, Rat(0));
    xi[1] = Rat(2);
    xi[4] = Rat(-1, 3);
    Multivector c = contract_first(xi, u);
    // (i_xi u)^{jk} = sum_i xi_i u^{ijk}
    for (int j = 0; j < 5; ++j)
        for (int k = j + 1; k < 5; ++k) {
            Rat expect(0);
            for (int i = 0; i < 5; ++i)
                expect += xi[i] * u.component(std::vector<int>{i, j, k});
            CHECK(c.component(std::vector<int>{j, k}) == expect);
        }
}

TEST_CASE("mismatched spaces are rejected") {
    BasedSpace a(3), b(4);
    CHECK_THROWS_AS(wedge(Multivector::basis(a, 0), Multivector::basis(b, 0)),
                    std::invalid_argument);
}
