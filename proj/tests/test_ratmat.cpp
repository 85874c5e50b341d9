#include "doctest.h"

#include <random>

#include "manin/ratmat.hpp"
#include "test_helpers.hpp"

using namespace manin;
using namespace manin::testing;

TEST_CASE("inverse of a frozen 3x3") {
    RatMat A(3, 3);
    A.at(0, 0) = Rat(2); A.at(0, 1) = Rat(1); A.at(0, 2) = Rat(0);
    A.at(1, 0) = Rat(0); A.at(1, 1) = Rat(1, 2); A.at(1, 2) = Rat(1);
    A.at(2, 0) = Rat(1); A.at(2, 1) = Rat(0); A.at(2, 2) = Rat(1);
    auto inv = A.inverse();
    REQUIRE(inv.has_value());
    CHECK(A * *inv == RatMat::identity(3));
    CHECK(*inv * A == RatMat::identity(3));
}

TEST_CASE("singular matrices have no inverse and a kernel") {
    RatMat A(2, 2);
    A.at(0, 0) = Rat(1); A.at(0, 1) = Rat(2);
    A.at(1, 0) = Rat(2); A.at(1, 1) = Rat(4);
    CHECK_FALSE(A.inverse().has_value());
    auto ker = A.kernel();
    REQUIRE(ker.size() == 1);
    auto img = A * ker[0];
    for (const auto& v : img) CHECK(v.is_zero());
    CHECK(A.rank() == 1);
}

TEST_CASE("random invertible matrices round trip") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + trial % 4;
        RatMat A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A.at(i, j) = random_rat(rng);
        auto inv = A.inverse();
        if (!inv) continue;  // rare singular draw
        CHECK(A * *inv == RatMat::identity(n));
    }
}

TEST_CASE("rank plus nullity equals the column count") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        RatMat A(3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j)
                A.at(i, j) = (trial + i + j) % 3 == 0 ? random_rat(rng) : Rat(0);
        CHECK(A.rank() + static_cast<int>(A.kernel().size()) == 5);
        for (const auto& v : A.kernel()) {
            auto img = A * v;
            for (const auto& e : img) CHECK(e.is_zero());
        }
    }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
    RatMat A(2, 2);
    A.at(0, 0) = Rat(1); A.at(0, 1) = Rat(1);
    A.at(1, 0) = Rat(1); A.at(1, 1) = Rat(-1);
    auto x = A.solve({Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(2));
    CHECK((*x)[1] == Rat(1));

    RatMat B(2, 2);
    B.at(0, 0) = Rat(1); B.at(0, 1) = Rat(1);
    B.at(1, 0) = Rat(2); B.at(1, 1) = Rat(2);
    CHECK_FALSE(B.solve({Rat(1), Rat(3)}).has_value());
}
