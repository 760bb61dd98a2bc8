#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "codexlcc/mfp_interleave.hpp"

using namespace codexlcc;

namespace {

InterleavedCodex hermitian_q4_interleaved(uint32_t r = 33, bool check_bound = true) {
    auto f16 = Field::quadratic_extension(Field::prime_power(2, 2));
    auto cdx = Codex::build(FunctionField::hermitian(f16),
                            {.k = 1, .t = 4, .d = 2, .r = r, .check_product_bound = check_bound});
    auto mfp = MFP::build(f16, 2);
    return InterleavedCodex::build(std::move(cdx), mfp);
}

}  // namespace

TEST_CASE("mfp basics over GF(9)") {
    auto f9 = Field::quadratic_extension(Field::prime_power(3, 1));
    auto mfp = MFP::build(f9, 2);
    const uint32_t gamma = mfp.gamma();
    CHECK(gamma == 3);

    CHECK(mfp.pi(1) == std::vector<uint32_t>{1, 1, 1});
    CHECK(mfp.pi(gamma) == std::vector<uint32_t>{0, 1, 2});

    // phi(pi(gamma) * pi(gamma)) = gamma^2 = 2
    auto sq = star_product(mfp.base_field(), mfp.pi(gamma), mfp.pi(gamma));
    CHECK(sq == std::vector<uint32_t>{0, 1, 1});
    CHECK(mfp.phi(sq) == 2);

    CHECK_THROWS_AS(MFP::build(Field::quadratic_extension(Field::prime_power(2, 1)), 2),
                    std::invalid_argument);
}

TEST_CASE("mfp identity exhaustive over GF(9), d = 2") {
    auto f9 = Field::quadratic_extension(Field::prime_power(3, 1));
    auto mfp = MFP::build(f9, 2);
    for (uint32_t a = 0; a < 81; ++a) {
        auto pa = mfp.pi(a);
        for (uint32_t b = 0; b < 81; ++b) {
            auto pb = mfp.pi(b);
            REQUIRE(mfp.phi(star_product(mfp.base_field(), pa, pb)) == f9->mul(a, b));
        }
    }
    // pi is injective
    std::set<std::vector<uint32_t>> images;
    for (uint32_t a = 0; a < 81; ++a) images.insert(mfp.pi(a));
    CHECK(images.size() == 81);
}

TEST_CASE("pi_word blockwise extension") {
    auto f9 = Field::quadratic_extension(Field::prime_power(3, 1));
    auto mfp = MFP::build(f9, 2);
    Xoshiro256 rng(31);
    std::vector<uint32_t> v(5);
    for (auto& x : v) x = static_cast<uint32_t>(rng.bounded(81));
    auto w = mfp.pi_word(v);
    REQUIRE(w.size() == 15);
    for (size_t i = 0; i < 5; ++i) {
        auto blk = mfp.pi(v[i]);
        for (size_t j = 0; j < 3; ++j) REQUIRE(w[i * 3 + j] == blk[j]);
    }
    // linearity over random pairs
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t a = static_cast<uint32_t>(rng.bounded(81)), b = static_cast<uint32_t>(rng.bounded(81));
        auto lhs = mfp.pi(f9->add(a, b));
        auto pa = mfp.pi(a), pb = mfp.pi(b);
        std::vector<uint32_t> sum(3);
        for (int j = 0; j < 3; ++j) sum[j] = mfp.base_field()->add(pa[j], pb[j]);
        REQUIRE(lhs == sum);
    }
}

TEST_CASE("inner power code distance is q - d, exhaustive for q <= 5") {
    for (uint32_t q : {3u, 4u, 5u}) {
        FieldPtr base = (q == 4) ? Field::prime_power(2, 2) : Field::prime_power(q, 1);
        auto ext = Field::quadratic_extension(base);
        const uint32_t d = 2;
        auto mfp = MFP::build(ext, d);
        // pi(F)^{*d} spans the evaluations of degree <= d polynomials; smallest
        // nonzero weight over all of them
        size_t min_wt = q;
        std::vector<uint32_t> coeffs(d + 1);
        std::function<void(uint32_t)> rec = [&](uint32_t pos) {
            if (pos == d + 1) {
                bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](uint32_t c) { return c == 0; });
                if (zero) return;
                size_t wt = 0;
                for (uint32_t x = 0; x < q; ++x) {
                    uint32_t acc = 0;
                    for (size_t j = coeffs.size(); j-- > 0;)
                        acc = base->add(base->mul(acc, x), coeffs[j]);
                    wt += (acc != 0);
                }
                min_wt = std::min(min_wt, wt);
                return;
            }
            for (uint32_t c = 0; c < q; ++c) {
                coeffs[pos] = c;
                rec(pos + 1);
            }
        };
        rec(0);
        REQUIRE(min_wt == q - d);
    }
}

TEST_CASE("interleave parameters") {
    // out-of-regime r = 20 instance: parameter arithmetic still applies
    auto ic = hermitian_q4_interleaved(20, false);
    CHECK(ic.n() == 63);
    CHECK(ic.ell() == 4);
    CHECK(ic.r_prime() == 2 * 63 + 4 * 20);  // 206
    CHECK(ic.code_length() == 252);
    CHECK((ic.n() - ic.outer().r() + 1) * (ic.ell() - ic.d()) == 88);
    CHECK(ic.ell() * ic.n() - ic.r_prime() + 1 == 47);
    CHECK(audit_interleaved(ic, 5, 20, 7).distance_bound);

    auto f16 = Field::quadratic_extension(Field::prime_power(2, 2));
    auto cdx = Codex::build(FunctionField::hermitian(f16), {.k = 1, .t = 4, .d = 2, .r = 33});
    // arity mismatch rejected
    CHECK_THROWS_AS(InterleavedCodex::build(cdx, MFP::build(f16, 3)), std::invalid_argument);
}

TEST_CASE("restricted space dimension") {
    auto ic = hermitian_q4_interleaved();
    // dim_base = 2 dim_C - k
    CHECK(ic.dim_base() == 2 * ic.outer().dim() - ic.k());
}

TEST_CASE("varphi round trip and errors") {
    auto ic = hermitian_q4_interleaved();
    const auto& base = ic.base_field();
    Xoshiro256 rng(2029);

    // varphi(pi(c)) = psi(c) for random c in the restricted space
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<uint32_t> target{static_cast<uint32_t>(rng.bounded(base->order()))};
        auto c = ic.sample_with_image(target, rng);
        auto z = ic.mfp().pi_word(c);
        REQUIRE(ic.varphi(z, 1) == target);
    }

    // all-ones maps to all-ones
    std::vector<uint32_t> ones(ic.code_length(), 1);
    CHECK(ic.varphi(ones, 1) == std::vector<uint32_t>(ic.k(), 1));

    // a block whose interpolant has degree 3 is rejected at d' = 2
    std::vector<uint32_t> bad(ic.code_length(), 0);
    for (uint32_t j = 0; j < 4; ++j) bad[j] = base->pow(j, 3);
    CHECK_THROWS_AS(ic.varphi(bad, 2), std::domain_error);
}

TEST_CASE("interleaved audit passes") {
    auto ic = hermitian_q4_interleaved();
    auto rep = audit_interleaved(ic, 100, 200, 11);
    CHECK(rep.unital);
    CHECK(rep.surjective);
    CHECK(rep.weak_privacy);
    CHECK(rep.multiplicative);
    CHECK(rep.distance_bound);
    CHECK(rep.pass());
}

TEST_CASE("descriptor") {
    auto ic = hermitian_q4_interleaved();
    auto j = ic.descriptor();
    CHECK(j["ell"] == 4);
    CHECK(j["length"] == 252);
    CHECK(j["outer"]["curve"] == "hermitian");
}
