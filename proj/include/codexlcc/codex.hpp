#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "codexlcc/function_fields.hpp"
#include "codexlcc/linalg.hpp"
#include "codexlcc/rng.hpp"

namespace codexlcc {

/// Coordinatewise (Schur) product.
inline std::vector<uint32_t> star_product(const FieldPtr& f, std::span<const uint32_t> a,
                                          std::span<const uint32_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("star_product: length mismatch");
    std::vector<uint32_t> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f->mul(a[i], b[i]);
    return out;
}

inline std::vector<uint32_t> star_product(const FieldPtr& f,
                                          const std::vector<std::vector<uint32_t>>& words) {
    if (words.empty()) throw std::invalid_argument("star_product: no factors");
    std::vector<uint32_t> out = words[0];
    for (size_t i = 1; i < words.size(); ++i) out = star_product(f, out, words[i]);
    return out;
}

struct CodexParams {
    uint32_t k = 1;
    uint32_t t = 1;
    uint32_t d = 2;
    uint32_t r = 0;
    uint32_t n = 0;  // 0: use all places left after Q
    /// Enforce r > d * deg(G) at build time.  Disabling lets parameter studies
    /// instantiate out-of-regime instances; the audit still reports the bound.
    bool check_product_bound = true;
};

/// An (n, t, d, r; F^k / F)-codex built from a one-point divisor
/// G = (2g + k + t - 1) * infinity on the rational or Hermitian function
/// field: C = L(G) evaluated at P, and psi mapping a word of C^{*d'} to the
/// evaluations at Q of the unique function behind it.
///
/// The first k places (in the deterministic place order) become Q, the next n
/// become P.  Immutable after build; sampling takes an explicit rng.
class Codex {
public:
    static Codex build(const FunctionField& F, const CodexParams& prm) {
        std::vector<Place> all = F.kind == CurveKind::Rational
                                     ? rational_places(F.constants)
                                     : hermitian_places(F.constants);
        return build_at(F, prm, std::move(all));
    }

    /// Construction with an explicit function basis replacing L(G); used to
    /// study broken instances (the audit's negative controls).
    static Codex build_with_basis(const FunctionField& F, const CodexParams& prm,
                                  std::vector<BasisFunction> fns) {
        std::vector<Place> all = F.kind == CurveKind::Rational
                                     ? rational_places(F.constants)
                                     : hermitian_places(F.constants);
        return build_at(F, prm, std::move(all), std::move(fns));
    }

    const FunctionField& function_field() const { return F_; }
    const FieldPtr& field() const { return F_.constants; }
    uint32_t n() const { return n_; }
    uint32_t k() const { return k_; }
    uint32_t t() const { return t_; }
    uint32_t d() const { return d_; }
    uint32_t r() const { return r_; }
    uint64_t deg_g() const { return deg_g_; }
    uint32_t dim() const { return static_cast<uint32_t>(basis_.dim()); }
    bool product_bound_ok() const { return d_ * deg_g_ < r_; }
    const std::vector<Place>& qplaces() const { return Q_; }
    const std::vector<Place>& pplaces() const { return P_; }
    const RRBasis& basis() const { return basis_; }
    const GfMat& eval_p() const { return eval_p_; }
    const GfMat& eval_q() const { return eval_q_; }

    /// Codeword of C from L(G) coefficients.
    std::vector<uint32_t> encode(std::span<const uint32_t> coeffs) const { return eval_p_.matvec(coeffs); }
    std::vector<uint32_t> psi_of_coeffs(std::span<const uint32_t> coeffs) const {
        return eval_q_.matvec(coeffs);
    }

    /// psi extended to C^{*d'} for any d' <= d: solve for the function
    /// h in L(dG) with h(P) = word, evaluate at Q.  Throws if the word is not
    /// in the supercode C(dG, P).
    std::vector<uint32_t> psi(std::span<const uint32_t> word) const {
        auto v = try_psi(word);
        if (!v) throw std::domain_error("Codex::psi: word is not in the d-th power supercode");
        return *v;
    }

    std::optional<std::vector<uint32_t>> try_psi(std::span<const uint32_t> word) const {
        if (word.size() != n_) throw std::invalid_argument("Codex::psi: word length mismatch");
        auto coeffs = power_solver_.solve(word);
        if (!coeffs) return std::nullopt;
        return power_eval_q_.matvec(*coeffs);
    }

    /// Uniform over the coset {c in C : psi(c) = target}: one particular
    /// solution plus a uniform element of ker(psi) on C.
    std::vector<uint32_t> sample_with_image(std::span<const uint32_t> target, Xoshiro256& rng) const {
        std::vector<uint32_t> a = particular_coeffs(target);
        const Field& K = *F_.constants;
        for (const auto& kv : kernel_coeffs_) {
            const uint32_t u = static_cast<uint32_t>(rng.bounded(K.order()));
            if (u == 0) continue;
            for (size_t i = 0; i < a.size(); ++i)
                if (kv[i]) a[i] = K.add(a[i], K.mul(u, kv[i]));
        }
        return encode(a);
    }

    /// L(G)-coefficients of one codeword with psi = target.
    std::vector<uint32_t> particular_coeffs(std::span<const uint32_t> target) const {
        if (target.size() != k_) throw std::invalid_argument("Codex: target length mismatch");
        auto a = q_solver_.solve(target);
        if (!a) throw std::logic_error("Codex: psi is not surjective");
        return *a;
    }

    /// Basis of ker(psi) in coefficient space (dimension dim() - k).
    const std::vector<std::vector<uint32_t>>& kernel_coeffs() const { return kernel_coeffs_; }

    /// The supercode C(d'G, P) containing C^{*d'}.
    EvalCode power_code(uint32_t dprime) const {
        if (dprime < 1 || dprime > d_) throw std::invalid_argument("Codex::power_code: power out of range");
        return EvalCode::make(F_, P_, dprime * deg_g_);
    }

    /// Evaluations at Q of the basis of L(d'G); together with a decoder's
    /// recovered coefficients this gives psi of the decoded word directly.
    GfMat eval_q_for(const RRBasis& b) const {
        GfMat m(F_.constants, k_, b.dim());
        for (uint32_t r = 0; r < k_; ++r)
            for (size_t c = 0; c < b.dim(); ++c) m.at(r, c) = eval_function(F_, b.fns[c], Q_[r]);
        return m;
    }

    nlohmann::json descriptor() const {
        nlohmann::json j;
        j["curve"] = F_.kind == CurveKind::Rational ? "rational" : "hermitian";
        nlohmann::json fld;
        fld["p"] = F_.constants->characteristic();
        std::vector<uint32_t> degrees;
        for (const Field* f = F_.constants.get(); f; f = f->base().get()) degrees.push_back(f->degree());
        std::reverse(degrees.begin(), degrees.end());
        fld["degrees"] = degrees;
        fld["order"] = F_.constants->order();
        j["field"] = fld;
        j["k"] = k_;
        j["t"] = t_;
        j["d"] = d_;
        j["r"] = r_;
        j["n"] = n_;
        j["deg_g"] = deg_g_;
        auto places_json = [](const std::vector<Place>& ps) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& p : ps) arr.push_back({p.x, p.y});
            return arr;
        };
        j["q_places"] = places_json(Q_);
        j["p_places"] = places_json(P_);
        return j;
    }

private:
    static Codex build_at(const FunctionField& F, const CodexParams& prm, std::vector<Place> all,
                          std::optional<std::vector<BasisFunction>> basis_override = std::nullopt) {
        Codex c;
        c.F_ = F;
        c.k_ = prm.k;
        c.t_ = prm.t;
        c.d_ = prm.d;
        c.r_ = prm.r;
        if (prm.k < 1 || prm.t < 1 || prm.d < 2) throw std::invalid_argument("Codex: requires k >= 1, t >= 1, d >= 2");
        if (all.size() < prm.k + 1) throw std::invalid_argument("Codex: insufficient places");
        const uint32_t avail = static_cast<uint32_t>(all.size()) - prm.k;
        c.n_ = prm.n == 0 ? avail : prm.n;
        if (c.n_ > avail) throw std::invalid_argument("Codex: insufficient places for requested n");
        c.deg_g_ = 2 * F.genus() + prm.k + prm.t - 1;
        if (c.r_ < 1 || c.r_ > c.n_)
            throw std::invalid_argument("Codex: requires 1 <= r <= n (r=" + std::to_string(c.r_) +
                                        ", n=" + std::to_string(c.n_) + ")");
        if (prm.check_product_bound && !(static_cast<uint64_t>(c.d_) * c.deg_g_ < c.r_))
            throw std::invalid_argument("Codex: requires r > d*(2g+k+t-1) = " +
                                        std::to_string(c.d_ * c.deg_g_));
        c.Q_.assign(all.begin(), all.begin() + prm.k);
        c.P_.assign(all.begin() + prm.k, all.begin() + prm.k + c.n_);

        c.basis_ = rr_basis(F, c.deg_g_);
        if (basis_override) c.basis_.fns = std::move(*basis_override);
        c.eval_p_ = GfMat(F.constants, c.n_, c.basis_.dim());
        for (uint32_t r = 0; r < c.n_; ++r)
            for (size_t j = 0; j < c.basis_.dim(); ++j)
                c.eval_p_.at(r, j) = eval_function(F, c.basis_.fns[j], c.P_[r]);
        c.eval_q_ = GfMat(F.constants, c.k_, c.basis_.dim());
        for (uint32_t r = 0; r < c.k_; ++r)
            for (size_t j = 0; j < c.basis_.dim(); ++j)
                c.eval_q_.at(r, j) = eval_function(F, c.basis_.fns[j], c.Q_[r]);

        // psi surjectivity and the kernel, in coefficient space
        c.q_solver_ = GfSolver(c.eval_q_);
        c.kernel_coeffs_ = c.q_solver_.kernel();

        // solver for psi on the d-th power supercode
        RRBasis pb = rr_basis(F, c.d_ * c.deg_g_);
        GfMat pe(F.constants, c.n_, pb.dim());
        for (uint32_t r = 0; r < c.n_; ++r)
            for (size_t j = 0; j < pb.dim(); ++j) pe.at(r, j) = eval_function(F, pb.fns[j], c.P_[r]);
        c.power_solver_ = GfSolver(pe);
        c.power_eval_q_ = c.eval_q_for(pb);
        return c;
    }

    FunctionField F_;
    uint32_t n_ = 0, k_ = 0, t_ = 0, d_ = 0, r_ = 0;
    uint64_t deg_g_ = 0;
    std::vector<Place> Q_, P_;
    RRBasis basis_;
    GfMat eval_p_, eval_q_;
    GfSolver q_solver_{GfMat()};
    std::vector<std::vector<uint32_t>> kernel_coeffs_;
    GfSolver power_solver_{GfMat()};
    GfMat power_eval_q_;
};

struct AuditReport {
    bool unital = false;
    bool surjective = false;
    bool privacy = false;
    bool multiplicative = false;
    bool product_bound = false;
    size_t privacy_sets_checked = 0;
    bool privacy_exhaustive = false;

    bool pass() const { return unital && surjective && privacy && multiplicative && product_bound; }
};

namespace codexdetail {

/// Visit size-t subsets of [n]: all of them when binom(n,t) <= limit,
/// otherwise `samples` uniformly random ones.
template <typename Fn>
std::pair<size_t, bool> for_each_index_set(uint32_t n, uint32_t t, size_t limit, size_t samples,
                                           uint64_t seed, Fn&& fn) {
    long double count = 1.0L;
    for (uint32_t i = 0; i < t; ++i) count = count * (n - i) / (i + 1);
    if (count <= static_cast<long double>(limit)) {
        std::vector<uint32_t> idx(t);
        for (uint32_t i = 0; i < t; ++i) idx[i] = i;
        size_t visited = 0;
        for (;;) {
            fn(idx);
            ++visited;
            uint32_t i = t;
            while (i-- > 0) {
                if (idx[i] + (t - i) <= n - 1) {
                    ++idx[i];
                    for (uint32_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) return {visited, true};
            }
        }
    }
    Xoshiro256 rng(seed);
    std::vector<uint32_t> idx(t);
    for (size_t s = 0; s < samples; ++s) {
        // distinct positions via partial Fisher-Yates over a small buffer
        std::vector<uint32_t> pool(n);
        for (uint32_t i = 0; i < n; ++i) pool[i] = i;
        for (uint32_t i = 0; i < t; ++i) std::swap(pool[i], pool[i + rng.bounded(n - i)]);
        idx.assign(pool.begin(), pool.begin() + t);
        std::sort(idx.begin(), idx.end());
        fn(idx);
    }
    return {samples, false};
}

}  // namespace codexdetail

/// Checks the defining codex clauses on a built instance: unital, psi
/// surjectivity, t-privacy with uniformity (rank k+t for every size-t
/// coordinate set, sampled when there are too many), multiplicativity of psi
/// on `mult_trials` random d-tuples, and the reconstruction degree bound
/// d*deg(G) < r.
inline AuditReport audit_codex(const Codex& cdx, size_t mult_trials = 100, uint64_t seed = 1) {
    AuditReport rep;
    const FieldPtr& K = cdx.field();
    rep.product_bound = cdx.product_bound_ok();

    // unital: the all-one word is in C and psi(1) = 1
    {
        GfSolver s(cdx.eval_p());
        std::vector<uint32_t> ones(cdx.n(), 1);
        auto a = s.solve(ones);
        if (a) {
            auto im = cdx.psi_of_coeffs(*a);
            rep.unital = std::all_of(im.begin(), im.end(), [](uint32_t v) { return v == 1; });
        }
    }

    rep.surjective = gf_rank(cdx.eval_q()) == cdx.k();

    // t-privacy with uniformity: rank of (psi, proj_A) equals k + t
    {
        bool ok = true;
        auto [checked, exhaustive] = codexdetail::for_each_index_set(
            cdx.n(), cdx.t(), 10000, 200, seed, [&](const std::vector<uint32_t>& A) {
                GfMat m(K, cdx.k() + cdx.t(), cdx.dim());
                for (uint32_t r = 0; r < cdx.k(); ++r)
                    for (uint32_t c = 0; c < cdx.dim(); ++c) m.at(r, c) = cdx.eval_q().at(r, c);
                for (uint32_t i = 0; i < cdx.t(); ++i)
                    for (uint32_t c = 0; c < cdx.dim(); ++c)
                        m.at(cdx.k() + i, c) = cdx.eval_p().at(A[i], c);
                if (gf_rank(m) != cdx.k() + cdx.t()) ok = false;
            });
        rep.privacy = ok;
        rep.privacy_sets_checked = checked;
        rep.privacy_exhaustive = exhaustive;
    }

    // psi(c_1 * ... * c_d) = psi(c_1) * ... * psi(c_d)
    {
        Xoshiro256 rng(splitmix64(seed ^ 0xa0d17u));
        bool ok = true;
        for (size_t trial = 0; trial < mult_trials && ok; ++trial) {
            std::vector<std::vector<uint32_t>> words, images;
            for (uint32_t i = 0; i < cdx.d(); ++i) {
                std::vector<uint32_t> a(cdx.dim());
                for (auto& v : a) v = static_cast<uint32_t>(rng.bounded(K->order()));
                words.push_back(cdx.encode(a));
                images.push_back(cdx.psi_of_coeffs(a));
            }
            auto z = star_product(K, words);
            auto lhs = cdx.try_psi(z);
            if (!lhs) {
                ok = false;
                break;
            }
            auto rhs = star_product(K, images);
            ok = (*lhs == rhs);
        }
        rep.multiplicative = ok;
    }
    return rep;
}

}  // namespace codexlcc
