#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "codexlcc/codex.hpp"
#include "codexlcc/rm_code.hpp"

using namespace codexlcc;

namespace {

Codex rational_gf7() {
    auto f7 = Field::prime_power(7, 1);
    return Codex::build(FunctionField::rational(f7), {.k = 1, .t = 1, .d = 2, .r = 3});
}

Codex rational_gf5_t1() {
    auto f5 = Field::prime_power(5, 1);
    return Codex::build(FunctionField::rational(f5), {.k = 1, .t = 1, .d = 2, .r = 3});
}

Codex hermitian_q3() {
    auto f9 = Field::quadratic_extension(Field::prime_power(3, 1));
    return Codex::build(FunctionField::hermitian(f9), {.k = 1, .t = 1, .d = 2, .r = 15});
}

}  // namespace

TEST_CASE("build_codex parameters") {
    auto cdx = rational_gf7();
    CHECK(cdx.n() == 6);
    CHECK(cdx.k() == 1);
    CHECK(cdx.deg_g() == 1);
    CHECK(cdx.dim() == 2);
    CHECK(audit_codex(cdx).pass());

    // need n >= r
    auto f5 = Field::prime_power(5, 1);
    CHECK_THROWS_AS(Codex::build(FunctionField::rational(f5), {.k = 1, .t = 1, .d = 2, .r = 5}),
                    std::invalid_argument);

    auto h3 = hermitian_q3();
    CHECK(h3.n() == 26);
    CHECK(h3.deg_g() == 7);
    CHECK(h3.dim() == 5);
    CHECK(h3.product_bound_ok());  // 14 < 15
}

TEST_CASE("psi is interpolation at Q") {
    auto f5 = Field::prime_power(5, 1);
    auto cdx = Codex::build(FunctionField::rational(f5), {.k = 1, .t = 1, .d = 2, .r = 3});
    // c = evals of 1 + x at P = {1,2,3,4}; psi(c) = value at 0 = 1
    std::vector<uint32_t> coeffs{1, 1};
    auto c = cdx.encode(coeffs);
    REQUIRE(c == std::vector<uint32_t>{2, 3, 4, 0});
    CHECK(cdx.psi(c) == std::vector<uint32_t>{1});

    // psi(1) = 1
    std::vector<uint32_t> ones(cdx.n(), 1);
    CHECK(cdx.psi(ones) == std::vector<uint32_t>{1});

    // multiplicativity instance: (1+x)(2+x) evaluated at 0 gives 2
    std::vector<uint32_t> g{2, 1};
    auto cg = cdx.encode(g);
    auto prod = star_product(cdx.field(), c, cg);
    CHECK(cdx.psi(prod) == std::vector<uint32_t>{2});

    // a word outside the supercode is rejected: the unique h in L(2G) with
    // h(1)=1, h(2)=0, h(3)=0 is 3(x-2)(x-3), whose value at 4 is 1, not 2
    std::vector<uint32_t> bad{1, 0, 0, 2};
    CHECK_FALSE(cdx.try_psi(bad).has_value());
}

TEST_CASE("sample_with_image coset structure") {
    auto cdx = rational_gf5_t1();
    const auto& K = cdx.field();
    // kernel of psi has dimension dim - k = 1, so the coset has q = 5 elements
    REQUIRE(cdx.kernel_coeffs().size() == 1);

    std::vector<uint32_t> target{1};
    Xoshiro256 rng(17);
    std::set<std::vector<uint32_t>> seen;
    for (int i = 0; i < 200; ++i) {
        auto c = cdx.sample_with_image(target, rng);
        REQUIRE(cdx.psi(c) == target);
        seen.insert(c);
    }
    CHECK(seen.size() == 5);

    // enumerating the coset exactly: the projection to coordinate 0 hits each
    // element of F_5 exactly once (f(x) = a + b x, b ranging over F_5)
    auto part = cdx.particular_coeffs(target);
    std::set<uint32_t> proj;
    for (uint32_t u = 0; u < 5; ++u) {
        auto a = part;
        for (size_t i = 0; i < a.size(); ++i)
            a[i] = K->add(a[i], K->mul(u, cdx.kernel_coeffs()[0][i]));
        proj.insert(cdx.encode(a)[0]);
    }
    CHECK(proj.size() == 5);
}

TEST_CASE("star product basics") {
    auto cdx = rational_gf7();
    const auto& K = cdx.field();
    Xoshiro256 rng(3);
    std::vector<uint32_t> a(cdx.n()), ones(cdx.n(), 1);
    for (auto& v : a) v = static_cast<uint32_t>(rng.bounded(7));
    CHECK(star_product(K, a, ones) == a);
    std::vector<uint32_t> b(cdx.n());
    for (auto& v : b) v = static_cast<uint32_t>(rng.bounded(7));
    CHECK(star_product(K, a, b) == star_product(K, b, a));

    // pointwise product of evaluations equals evaluation of the product poly
    std::vector<uint32_t> f{1, 1}, g{2, 1};  // 1+x, 2+x over GF(7)
    auto prod = star_product(K, cdx.encode(f), cdx.encode(g));
    // (1+x)(2+x) = 2 + 3x + x^2
    auto pc = cdx.power_code(2);
    std::vector<uint32_t> fg{2, 3, 1};
    CHECK(prod == pc.encode(fg));
}

TEST_CASE("audit passes on valid instances and fails on a broken one") {
    CHECK(audit_codex(rational_gf7()).pass());
    CHECK(audit_codex(rational_gf5_t1()).pass());
    auto h3rep = audit_codex(hermitian_q3());
    CHECK(h3rep.pass());
    CHECK(h3rep.privacy_exhaustive);  // binom(26,1) = 26 sets

    // dropping the constant function breaks the unital clause
    auto f5 = Field::prime_power(5, 1);
    auto F = FunctionField::rational(f5);
    auto broken = Codex::build_with_basis(F, {.k = 1, .t = 1, .d = 2, .r = 3},
                                          {{1, 0, 1}, {2, 0, 2}});
    auto rep = audit_codex(broken);
    CHECK_FALSE(rep.unital);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("identity: psi commutes with coordinatewise polynomial maps") {
    // f^(n)(c_1..c_m) lies in C^{*d} and psi maps it to f^(k)(psi(c_1)..psi(c_m))
    auto cdx = hermitian_q3();
    const auto& K = cdx.field();
    const uint32_t m = 3;
    Xoshiro256 rng(2027);
    for (int trial = 0; trial < 200; ++trial) {
        auto fpoly = rm_random_poly(K, cdx.d(), m, rng.next());
        std::vector<std::vector<uint32_t>> words, images;
        for (uint32_t i = 0; i < m; ++i) {
            std::vector<uint32_t> a(cdx.dim());
            for (auto& v : a) v = static_cast<uint32_t>(rng.bounded(K->order()));
            words.push_back(cdx.encode(a));
            images.push_back(cdx.psi_of_coeffs(a));
        }
        std::vector<uint32_t> fn(cdx.n()), fk(cdx.k());
        for (uint32_t j = 0; j < cdx.n(); ++j) {
            Point u(m);
            for (uint32_t i = 0; i < m; ++i) u[i] = words[i][j];
            fn[j] = fpoly.eval(u);
        }
        for (uint32_t j = 0; j < cdx.k(); ++j) {
            Point u(m);
            for (uint32_t i = 0; i < m; ++i) u[i] = images[i][j];
            fk[j] = fpoly.eval(u);
        }
        auto im = cdx.try_psi(fn);
        REQUIRE(im.has_value());  // membership in C^{*d}
        REQUIRE(*im == fk);
    }
}

TEST_CASE("minimum distance of the power supercode, exhaustive at GF(5)") {
    auto cdx = rational_gf5_t1();
    auto pc = cdx.power_code(2);  // L(2 * infinity) at 4 points
    const auto& K = cdx.field();
    REQUIRE(pc.basis.dim() == 3);
    size_t min_wt = pc.points.size();
    std::vector<uint32_t> coeffs(3);
    for (uint32_t c0 = 0; c0 < 5; ++c0)
        for (uint32_t c1 = 0; c1 < 5; ++c1)
            for (uint32_t c2 = 0; c2 < 5; ++c2) {
                if (c0 == 0 && c1 == 0 && c2 == 0) continue;
                coeffs = {c0, c1, c2};
                auto w = pc.encode(coeffs);
                size_t wt = 0;
                for (auto v : w) wt += (v != 0);
                min_wt = std::min(min_wt, wt);
            }
    // n - d*deg(G) = 4 - 2 = 2
    CHECK(min_wt == 2);
    (void)K;
}

TEST_CASE("descriptor serialization") {
    auto cdx = hermitian_q3();
    auto j = cdx.descriptor();
    CHECK(j["curve"] == "hermitian");
    CHECK(j["n"] == 26);
    CHECK(j["deg_g"] == 7);
    CHECK(j["field"]["order"] == 9);
    CHECK(j["p_places"].size() == 26);
}
