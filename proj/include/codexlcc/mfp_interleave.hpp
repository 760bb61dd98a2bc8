#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "codexlcc/codex.hpp"

namespace codexlcc {

/// (d, 2, q)_q multiplication friendly pair from the length-q Reed-Solomon
/// code: pi writes alpha = a0 + a1*gamma in GF(q^2) as the evaluations of
/// a0 + a1*X at all q points of GF(q) (code order), and phi interpolates a
/// received q-vector and evaluates at gamma.  Then pi(1) is all-ones and
/// phi(pi(a_1) * ... * pi(a_d)) = a_1 ... a_d whenever q > d.
class MFP {
public:
    static MFP build(const FieldPtr& ext, uint32_t d) {
        if (!ext || !ext->base() || ext->degree() != 2)
            throw std::invalid_argument("MFP: field must be a quadratic extension");
        MFP m;
        m.ext_ = ext;
        m.base_ = ext->base();
        m.d_ = d;
        const uint32_t q = m.base_->order();
        if (q <= d) throw std::invalid_argument("MFP: requires q > d");
        m.gamma_ = ext->from_digits({0, 1});
        // Lagrange weights at gamma: w_j = prod_{i != j} (gamma - x_i) / (x_j - x_i)
        m.phi_w_.resize(q);
        for (uint32_t j = 0; j < q; ++j) {
            uint32_t num = 1, den = 1;
            for (uint32_t i = 0; i < q; ++i) {
                if (i == j) continue;
                num = ext->mul(num, ext->sub(m.gamma_, ext->embed_base(i)));
                den = ext->mul(den, ext->sub(ext->embed_base(j), ext->embed_base(i)));
            }
            m.phi_w_[j] = ext->div(num, den);
        }
        return m;
    }

    uint32_t arity() const { return d_; }
    const FieldPtr& ext_field() const { return ext_; }
    const FieldPtr& base_field() const { return base_; }
    /// Code of the adjoined root of the extension modulus.
    uint32_t gamma() const { return gamma_; }

    /// pi(alpha) in GF(q)^q.
    std::vector<uint32_t> pi(uint32_t alpha) const {
        const uint32_t q = base_->order();
        const uint32_t a0 = ext_->digit(alpha, 0), a1 = ext_->digit(alpha, 1);
        std::vector<uint32_t> out(q);
        for (uint32_t j = 0; j < q; ++j) out[j] = base_->add(a0, base_->mul(a1, j));
        return out;
    }

    /// Blockwise extension of pi to GF(q^2)^s -> GF(q)^(q s).
    std::vector<uint32_t> pi_word(std::span<const uint32_t> v) const {
        const uint32_t q = base_->order();
        std::vector<uint32_t> out;
        out.reserve(v.size() * q);
        for (uint32_t x : v) {
            auto blk = pi(x);
            out.insert(out.end(), blk.begin(), blk.end());
        }
        return out;
    }

    /// phi: GF(q)^q -> GF(q^2), interpolate and evaluate at gamma.
    uint32_t phi(std::span<const uint32_t> block) const {
        const uint32_t q = base_->order();
        if (block.size() != q) throw std::invalid_argument("MFP::phi: block length mismatch");
        uint32_t acc = 0;
        for (uint32_t j = 0; j < q; ++j)
            if (block[j]) acc = ext_->add(acc, ext_->mul(ext_->embed_base(block[j]), phi_w_[j]));
        return acc;
    }

    /// Value at gamma of a polynomial given by coefficients over GF(q).
    uint32_t eval_at_gamma(std::span<const uint32_t> coeffs) const {
        uint32_t acc = 0;
        for (size_t j = coeffs.size(); j-- > 0;)
            acc = ext_->add(ext_->mul(acc, gamma_), ext_->embed_base(coeffs[j]));
        return acc;
    }

private:
    FieldPtr ext_, base_;
    uint32_t d_ = 0, gamma_ = 0;
    std::vector<uint32_t> phi_w_;
};

/// Concatenation of a codex over GF(q^2) with the Reed-Solomon MFP: the
/// (n, ell=q, t, d, dn+qr; F_q^k / F_q)-interleaved codex
/// C1 = pi(psi^{-1}(F_q^k)), with varphi = psi o blockwise-phi.
///
/// The GF(q)-linear structure of psi^{-1}(F_q^k) is computed at build time by
/// solving, over GF(q), the conditions "second coordinate of psi(c) vanishes"
/// against the GF(q)-basis {b, gamma b} of the outer coefficient space.
class InterleavedCodex {
public:
    static InterleavedCodex build(Codex outer, const MFP& mfp) {
        if (mfp.ext_field() != outer.field())
            throw std::invalid_argument("InterleavedCodex: mfp field does not match codex field");
        if (mfp.arity() != outer.d())
            throw std::invalid_argument("InterleavedCodex: mfp arity does not match codex d");
        InterleavedCodex ic;
        ic.mfp_ = mfp;
        const FieldPtr ext = outer.field();
        const FieldPtr base = mfp.base_field();
        const uint32_t q = base->order();
        ic.rprime_ = static_cast<uint64_t>(outer.d()) * outer.n() +
                     static_cast<uint64_t>(q) * outer.r();

        // GF(q)-basis of the outer coefficient space: e_l and gamma*e_l
        const uint32_t D = outer.dim();
        std::vector<std::vector<uint32_t>> gf_basis;
        gf_basis.reserve(2 * D);
        for (uint32_t l = 0; l < D; ++l) {
            std::vector<uint32_t> e(D, 0);
            e[l] = 1;
            gf_basis.push_back(e);
            e[l] = mfp.gamma();
            gf_basis.push_back(e);
        }
        // "imaginary part of psi" as a GF(q)-linear map on that basis
        GfMat im(base, outer.k(), 2 * D);
        std::vector<std::vector<uint32_t>> psi_images(2 * D);
        for (uint32_t l = 0; l < 2 * D; ++l) {
            psi_images[l] = outer.psi_of_coeffs(gf_basis[l]);
            for (uint32_t j = 0; j < outer.k(); ++j) im.at(j, l) = ext->digit(psi_images[l][j], 1);
        }
        auto restricted = GfSolver(im).kernel();  // coordinates over gf_basis
        ic.coeff_basis_.reserve(restricted.size());
        ic.image_re_ = GfMat(base, outer.k(), restricted.size());
        for (size_t v = 0; v < restricted.size(); ++v) {
            std::vector<uint32_t> a(D, 0);
            std::vector<uint32_t> img(outer.k(), 0);
            for (uint32_t l = 0; l < 2 * D; ++l) {
                const uint32_t u = restricted[v][l];
                if (!u) continue;
                const uint32_t ue = ext->embed_base(u);
                for (uint32_t i = 0; i < D; ++i)
                    if (gf_basis[l][i]) a[i] = ext->add(a[i], ext->mul(ue, gf_basis[l][i]));
                for (uint32_t j = 0; j < outer.k(); ++j)
                    img[j] = ext->add(img[j], ext->mul(ue, psi_images[l][j]));
            }
            for (uint32_t j = 0; j < outer.k(); ++j) {
                if (ext->digit(img[j], 1) != 0)
                    throw std::logic_error("InterleavedCodex: restriction failed");
                ic.image_re_.at(j, v) = ext->digit(img[j], 0);
            }
            ic.coeff_basis_.push_back(std::move(a));
        }
        ic.image_solver_ = GfSolver(ic.image_re_);
        if (ic.image_solver_.rank() != outer.k())
            throw std::logic_error("InterleavedCodex: varphi is not surjective onto F_q^k");
        ic.image_kernel_ = ic.image_solver_.kernel();
        ic.outer_ = std::move(outer);
        return ic;
    }

    const Codex& outer() const { return outer_; }
    const MFP& mfp() const { return mfp_; }
    const FieldPtr& base_field() const { return mfp_.base_field(); }
    uint32_t n() const { return outer_.n(); }
    uint32_t ell() const { return mfp_.base_field()->order(); }
    uint32_t t() const { return outer_.t(); }
    uint32_t d() const { return outer_.d(); }
    uint32_t k() const { return outer_.k(); }
    uint64_t r_prime() const { return rprime_; }
    uint64_t code_length() const { return static_cast<uint64_t>(n()) * ell(); }

    /// GF(q)-dimension of C1 (= 2 dim_C - k).
    size_t dim_base() const { return coeff_basis_.size(); }
    /// Outer coefficient vectors of a GF(q)-basis of psi^{-1}(F_q^k).
    const std::vector<std::vector<uint32_t>>& coeff_basis() const { return coeff_basis_; }
    /// varphi images of the basis vectors, a k x dim_base matrix over GF(q).
    const GfMat& image_re() const { return image_re_; }

    /// Outer codeword c (not yet pi-expanded) uniform over
    /// {c in psi^{-1}(F_q^k) : psi(c) = target}, target over GF(q).
    std::vector<uint32_t> sample_with_image(std::span<const uint32_t> target, Xoshiro256& rng) const {
        auto u = image_solver_.solve(target);
        if (!u) throw std::logic_error("InterleavedCodex: unreachable target");
        const FieldPtr& base = mfp_.base_field();
        for (const auto& kv : image_kernel_) {
            const uint32_t s = static_cast<uint32_t>(rng.bounded(base->order()));
            if (s == 0) continue;
            for (size_t i = 0; i < u->size(); ++i)
                if (kv[i]) (*u)[i] = base->add((*u)[i], base->mul(s, kv[i]));
        }
        return encode_restricted(*u);
    }

    /// Outer codeword from coordinates over the restricted GF(q)-basis.
    std::vector<uint32_t> encode_restricted(std::span<const uint32_t> coords) const {
        const FieldPtr& ext = outer_.field();
        std::vector<uint32_t> a(outer_.dim(), 0);
        for (size_t v = 0; v < coords.size(); ++v) {
            if (!coords[v]) continue;
            const uint32_t ue = ext->embed_base(coords[v]);
            for (uint32_t i = 0; i < outer_.dim(); ++i)
                if (coeff_basis_[v][i]) a[i] = ext->add(a[i], ext->mul(ue, coeff_basis_[v][i]));
        }
        return outer_.encode(a);
    }

    /// varphi on C1^{*d'}: blockwise phi (each block must interpolate to a
    /// polynomial of degree <= d'), then outer psi; the result must land in
    /// the embedded F_q^k.
    std::vector<uint32_t> varphi(std::span<const uint32_t> word, uint32_t dprime) const {
        const auto outer_word = blockwise_phi(word, dprime);
        auto img = outer_.try_psi(outer_word);
        if (!img) throw std::domain_error("varphi: outer word is not in the power supercode");
        std::vector<uint32_t> out(outer_.k());
        const FieldPtr& ext = outer_.field();
        for (uint32_t j = 0; j < outer_.k(); ++j) {
            if (ext->digit((*img)[j], 1) != 0)
                throw std::domain_error("varphi: image does not lie in the base field");
            out[j] = ext->digit((*img)[j], 0);
        }
        return out;
    }

    /// Inner layer of varphi: GF(q)^(qn) -> GF(q^2)^n.
    std::vector<uint32_t> blockwise_phi(std::span<const uint32_t> word, uint32_t dprime) const {
        const uint32_t q = ell();
        if (word.size() != code_length()) throw std::invalid_argument("varphi: word length mismatch");
        if (dprime > outer_.d()) throw std::invalid_argument("varphi: power out of range");
        std::vector<uint32_t> outer_word(n());
        for (uint32_t i = 0; i < n(); ++i) {
            auto coeffs = interpolate_block(word.subspan(static_cast<size_t>(i) * q, q));
            for (uint32_t j = dprime + 1; j < q; ++j)
                if (coeffs[j] != 0)
                    throw std::domain_error("varphi: block is not in the inner power code");
            outer_word[i] = mfp_.eval_at_gamma(std::span<const uint32_t>(coeffs.data(), dprime + 1));
        }
        return outer_word;
    }

    /// Coefficients over GF(q) of the degree < q interpolant of a block.
    std::vector<uint32_t> interpolate_block(std::span<const uint32_t> block) const {
        const FieldPtr& base = mfp_.base_field();
        const uint32_t q = base->order();
        // Newton interpolation at nodes 0..q-1
        std::vector<uint32_t> dd(block.begin(), block.end());
        for (uint32_t level = 1; level < q; ++level)
            for (uint32_t i = q - 1; i >= level; --i)
                dd[i] = base->div(base->sub(dd[i], dd[i - 1]), base->sub(i, i - level));
        std::vector<uint32_t> coeffs(q, 0);
        // expand newton form backwards
        for (uint32_t i = q; i-- > 0;) {
            // coeffs = coeffs * (x - x_i) + dd[i]
            for (uint32_t j = q - 1; j >= 1; --j)
                coeffs[j] = base->add(coeffs[j - 1], base->mul(coeffs[j], base->neg(i)));
            coeffs[0] = base->add(base->mul(coeffs[0], base->neg(i)), dd[i]);
            if (i == 0) break;
        }
        return coeffs;
    }

    nlohmann::json descriptor() const {
        nlohmann::json j;
        j["outer"] = outer_.descriptor();
        j["mfp"] = {{"d", mfp_.arity()}, {"q", ell()}};
        j["ell"] = ell();
        j["r_prime"] = rprime_;
        j["length"] = code_length();
        return j;
    }

private:
    Codex outer_{};
    MFP mfp_;
    uint64_t rprime_ = 0;
    std::vector<std::vector<uint32_t>> coeff_basis_;
    GfMat image_re_;
    GfSolver image_solver_{GfMat()};
    std::vector<std::vector<uint32_t>> image_kernel_;
};

struct InterleavedAudit {
    bool unital = false;
    bool surjective = false;
    bool weak_privacy = false;
    bool multiplicative = false;
    bool distance_bound = false;
    size_t privacy_sets_checked = 0;

    bool pass() const { return unital && surjective && weak_privacy && multiplicative && distance_bound; }
};

/// Clause checks for an interleaved codex: unital, surjectivity of varphi,
/// weak t-privacy with uniformity (rank k+t for sampled single-column size-t
/// coordinate sets), multiplicativity of varphi on random pairs from C1, and
/// the concatenated distance bound (n-r+1)(q-d) >= qn - r' + 1.
inline InterleavedAudit audit_interleaved(const InterleavedCodex& ic, size_t mult_trials = 100,
                                          size_t privacy_samples = 200, uint64_t seed = 1) {
    InterleavedAudit rep;
    const FieldPtr& base = ic.base_field();
    const uint32_t q = ic.ell(), n = ic.n(), k = ic.k(), t = ic.t();

    {
        std::vector<uint32_t> ones(ic.code_length(), 1);
        auto im = ic.varphi(ones, 1);
        rep.unital = std::all_of(im.begin(), im.end(), [](uint32_t v) { return v == 1; });
    }

    rep.surjective = gf_rank(ic.image_re()) == k;

    {
        // weak t-privacy: single-column coordinate sets only
        const size_t B = ic.dim_base();
        std::vector<std::vector<uint32_t>> basis_words(B);
        for (size_t v = 0; v < B; ++v) {
            std::vector<uint32_t> e(B, 0);
            e[v] = 1;
            basis_words[v] = ic.encode_restricted(e);
        }
        Xoshiro256 rng(splitmix64(seed ^ 0x171ea6edULL));
        bool ok = true;
        for (size_t s = 0; s < privacy_samples && ok; ++s) {
            const uint32_t col = static_cast<uint32_t>(rng.bounded(q));
            std::vector<uint32_t> pool(n);
            for (uint32_t i = 0; i < n; ++i) pool[i] = i;
            for (uint32_t i = 0; i < t; ++i) std::swap(pool[i], pool[i + rng.bounded(n - i)]);
            GfMat m(base, k + t, B);
            for (uint32_t r = 0; r < k; ++r)
                for (size_t c = 0; c < B; ++c) m.at(r, c) = ic.image_re().at(r, c);
            const FieldPtr& ext = ic.outer().field();
            for (uint32_t i = 0; i < t; ++i) {
                const uint32_t blk = pool[i];
                for (size_t c = 0; c < B; ++c) {
                    const uint32_t sym = basis_words[c][blk];
                    m.at(k + i, c) =
                        base->add(ext->digit(sym, 0), base->mul(ext->digit(sym, 1), col));
                }
            }
            if (gf_rank(m) != k + t) ok = false;
        }
        rep.weak_privacy = ok;
        rep.privacy_sets_checked = privacy_samples;
    }

    {
        Xoshiro256 rng(splitmix64(seed ^ 0x9e11f2a7ULL));
        bool ok = true;
        for (size_t trial = 0; trial < mult_trials && ok; ++trial) {
            std::vector<uint32_t> u1(ic.dim_base()), u2(ic.dim_base());
            for (auto& v : u1) v = static_cast<uint32_t>(rng.bounded(base->order()));
            for (auto& v : u2) v = static_cast<uint32_t>(rng.bounded(base->order()));
            auto z1 = ic.mfp().pi_word(ic.encode_restricted(u1));
            auto z2 = ic.mfp().pi_word(ic.encode_restricted(u2));
            auto lhs = ic.varphi(star_product(base, z1, z2), 2);
            auto rhs = star_product(base, ic.varphi(z1, 1), ic.varphi(z2, 1));
            ok = (lhs == rhs);
        }
        rep.multiplicative = ok;
    }

    rep.distance_bound = static_cast<uint64_t>(n - ic.outer().r() + 1) * (q - ic.d()) >=
                         static_cast<uint64_t>(q) * n - ic.r_prime() + 1;
    return rep;
}

}  // namespace codexlcc
