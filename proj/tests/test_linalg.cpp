#include <catch2/catch_amalgamated.hpp>

#include "codexlcc/linalg.hpp"
#include "codexlcc/rng.hpp"

using namespace codexlcc;

TEST_CASE("solver recovers solutions and detects inconsistency") {
    auto f = Field::prime_power(7, 1);
    Xoshiro256 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        size_t rows = 3 + rng.bounded(6), cols = 1 + rng.bounded(5);
        GfMat A(f, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c) A.at(r, c) = static_cast<uint32_t>(rng.bounded(7));
        GfSolver s(A);
        std::vector<uint32_t> x(cols);
        for (auto& v : x) v = static_cast<uint32_t>(rng.bounded(7));
        auto b = A.matvec(x);
        auto got = s.solve(b);
        REQUIRE(got.has_value());
        CHECK(A.matvec(*got) == b);
        // kernel vectors really are in the kernel
        for (const auto& k : s.kernel()) {
            auto z = A.matvec(k);
            for (auto v : z) CHECK(v == 0);
        }
        CHECK(s.rank() + s.kernel().size() == cols);
    }
}

TEST_CASE("inconsistent system returns nullopt") {
    auto f = Field::prime_power(5, 1);
    GfMat A(f, 3, 1);
    A.at(0, 0) = 1;
    A.at(1, 0) = 1;
    A.at(2, 0) = 0;
    GfSolver s(A);
    std::vector<uint32_t> b{1, 2, 0};
    CHECK_FALSE(s.solve(b).has_value());
    std::vector<uint32_t> b2{2, 2, 0};
    REQUIRE(s.solve(b2).has_value());
    CHECK((*s.solve(b2))[0] == 2);
}

TEST_CASE("rank") {
    auto f = Field::prime_power(2, 2);
    GfMat A(f, 2, 3);
    A.at(0, 0) = 1;
    A.at(0, 1) = 2;
    A.at(1, 1) = 1;
    A.at(1, 2) = 3;
    CHECK(gf_rank(A) == 2);
    GfMat B(f, 2, 2);
    B.at(0, 0) = 1;
    B.at(0, 1) = 2;
    B.at(1, 0) = 2;
    B.at(1, 1) = f->mul(2, 2);  // row2 = 2 * row1
    CHECK(gf_rank(B) == 1);
}
