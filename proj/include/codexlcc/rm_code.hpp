#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codexlcc/gf.hpp"
#include "codexlcc/rng.hpp"

namespace codexlcc {

/// Evaluation point in F_q^m, one code per coordinate.
using Point = std::vector<uint32_t>;

inline uint64_t rm_dimension(uint32_t q, uint32_t d, uint32_t m) {
    if (d >= q) throw std::invalid_argument("rm_dimension: requires total degree d < q");
    // binom(m+d, d)
    unsigned __int128 num = 1;
    for (uint32_t i = 1; i <= d; ++i) {
        num = num * (m + i) / i;
        if (num > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::overflow_error("rm_dimension: overflow");
    }
    return static_cast<uint64_t>(num);
}

/// Sparse m-variate polynomial of total degree <= d over F_q.  Exponent
/// vectors have Lee weight sum(e_i) <= d and e_i <= q-1; zero coefficients are
/// not stored.
class MultiPoly {
public:
    MultiPoly(FieldPtr f, uint32_t m, uint32_t d) : f_(std::move(f)), m_(m), d_(d) {
        if (d_ >= f_->order()) throw std::invalid_argument("MultiPoly: requires d < q");
    }

    const FieldPtr& field() const { return f_; }
    uint32_t vars() const { return m_; }
    uint32_t degree_bound() const { return d_; }
    const std::map<std::vector<uint16_t>, uint32_t>& terms() const { return terms_; }

    void set_coeff(const std::vector<uint16_t>& exps, uint32_t coeff) {
        if (exps.size() != m_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        uint64_t w = 0;
        for (uint16_t e : exps) w += e;
        if (w > d_) throw std::invalid_argument("MultiPoly: Lee weight exceeds degree bound");
        if (coeff == 0)
            terms_.erase(exps);
        else
            terms_[exps] = coeff;
    }

    uint32_t coeff(const std::vector<uint16_t>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? 0 : it->second;
    }

    uint32_t eval(const Point& u) const {
        if (u.size() != m_) throw std::invalid_argument("MultiPoly::eval: dimension mismatch");
        const Field& F = *f_;
        uint32_t acc = 0;
        for (const auto& [exps, c] : terms_) {
            uint32_t mono = c;
            for (uint32_t i = 0; i < m_ && mono; ++i)
                if (exps[i]) mono = F.mul(mono, F.pow(u[i], exps[i]));
            acc = F.add(acc, mono);
        }
        return acc;
    }

    MultiPoly operator+(const MultiPoly& other) const {
        if (f_ != other.f_ || m_ != other.m_)
            throw std::invalid_argument("MultiPoly: mismatched operands");
        MultiPoly out(f_, m_, std::max(d_, other.d_));
        out.terms_ = terms_;
        for (const auto& [exps, c] : other.terms_) {
            uint32_t s = f_->add(out.coeff(exps), c);
            if (s == 0)
                out.terms_.erase(exps);
            else
                out.terms_[exps] = s;
        }
        return out;
    }

private:
    FieldPtr f_;
    uint32_t m_, d_;
    std::map<std::vector<uint16_t>, uint32_t> terms_;
};

namespace rmdetail {

template <typename Fn>
void exponents_rec(std::vector<uint16_t>& e, uint32_t pos, uint32_t remaining, Fn& fn) {
    if (pos == e.size()) {
        fn(const_cast<const std::vector<uint16_t>&>(e));
        return;
    }
    for (uint32_t v = 0; v <= remaining; ++v) {
        e[pos] = static_cast<uint16_t>(v);
        exponents_rec(e, pos + 1, remaining - v, fn);
    }
    e[pos] = 0;
}

/// Visit all exponent vectors with Lee weight <= d in lexicographic order.
template <typename Fn>
void for_each_exponent(uint32_t m, uint32_t d, Fn&& fn) {
    std::vector<uint16_t> e(m, 0);
    exponents_rec(e, 0, d, fn);
}

}  // namespace rmdetail

/// All binom(m+d, d) coefficients drawn i.i.d. uniform over F_q; deterministic
/// for a seed.  Only feasible for moderate dimension; desk-scale experiments
/// with huge dimension use rm_random_sparse instead.
inline MultiPoly rm_random_poly(const FieldPtr& f, uint32_t d, uint32_t m, uint64_t seed) {
    const uint64_t dim = rm_dimension(f->order(), d, m);
    if (dim > 4'000'000) throw std::invalid_argument("rm_random_poly: dimension too large, use rm_random_sparse");
    MultiPoly out(f, m, d);
    Xoshiro256 rng(seed);
    rmdetail::for_each_exponent(m, d, [&](const std::vector<uint16_t>& e) {
        uint32_t c = static_cast<uint32_t>(rng.bounded(f->order()));
        if (c) out.set_coeff(e, c);
    });
    return out;
}

/// Random polynomial with at most `terms` monomials of total degree <= d.
/// Exponents are sampled as a uniform total degree in [0, d] split by a random
/// composition; coefficients are uniform over F_q^*.
inline MultiPoly rm_random_sparse(const FieldPtr& f, uint32_t d, uint32_t m, uint32_t terms, uint64_t seed) {
    MultiPoly out(f, m, d);
    Xoshiro256 rng(seed);
    for (uint32_t t = 0; t < terms; ++t) {
        uint32_t total = static_cast<uint32_t>(rng.bounded(d + 1));
        std::vector<uint16_t> e(m, 0);
        for (uint32_t u = 0; u < total; ++u) ++e[rng.bounded(m)];
        out.set_coeff(e, 1 + static_cast<uint32_t>(rng.bounded(f->order() - 1)));
    }
    return out;
}

enum class ErrorModel { ExactSet, BernoulliPrf, FileOverrides };

inline const char* error_model_name(ErrorModel m) {
    switch (m) {
        case ErrorModel::ExactSet: return "exact";
        case ErrorModel::BernoulliPrf: return "prf";
        case ErrorModel::FileOverrides: return "file";
    }
    return "?";
}

/// Point-addressable access to a corrupted Reed-Muller word a_f + b without
/// materializing the q^m entries.
///
/// ExactSet draws exactly floor(delta * q^m) corrupted positions without
/// replacement (requires q^m < 2^63).  BernoulliPrf makes corruption of a
/// point a deterministic function of (seed, point) with marginal probability
/// delta, so repeated queries agree and the word scales to q^m ~ 2^64.
/// Either way the corrupted value differs from f(u), with the error offset
/// uniform over the q-1 nonzero values.  FileOverrides serves a clean word
/// plus explicit (point, value) overrides.
class CorruptedWordOracle {
public:
    CorruptedWordOracle(MultiPoly f, ErrorModel model, double delta, uint64_t seed)
        : f_(std::move(f)), model_(model), delta_(delta), seed_(seed) {
        const uint32_t q = f_.field()->order();
        m_ = f_.vars();
        if (delta < 0.0 || delta >= 1.0) throw std::invalid_argument("CorruptedWordOracle: delta outside [0,1)");
        if (model_ == ErrorModel::ExactSet) {
            long double n = 1.0L;
            for (uint32_t i = 0; i < m_; ++i) n *= q;
            if (n >= 9.2e18L) throw std::invalid_argument("CorruptedWordOracle: ExactSet needs q^m < 2^63");
            const uint64_t N = static_cast<uint64_t>(n);
            // floor(delta * N), nudged so that rates like 1/9 stored as a
            // double still land on the intended integer
            const uint64_t K = static_cast<uint64_t>(static_cast<long double>(delta) * n + 1e-9L);
            // Floyd's sampling: K distinct indices out of N
            Xoshiro256 rng(splitmix64(seed_ ^ 0x5eedF10Dull));
            for (uint64_t j = N - K; j < N; ++j) {
                uint64_t idx = rng.bounded(j + 1);
                if (!exact_set_.insert(idx).second) exact_set_.insert(j);
            }
        }
    }

    const MultiPoly& poly() const { return f_; }
    ErrorModel model() const { return model_; }
    double delta() const { return delta_; }
    uint64_t query_count() const { return queries_; }

    uint64_t point_index(const Point& u) const {
        const uint32_t q = f_.field()->order();
        uint64_t idx = 0;
        for (uint32_t i = 0; i < m_; ++i) idx = idx * q + u[i];
        return idx;
    }

    /// Inject an adversarial override: the word reads `value` at `u`.
    void set_override(const Point& u, uint32_t value) { overrides_[point_index(u)] = value; }

    uint32_t query(const Point& u) {
        ++queries_;
        return value_at(u);
    }

    /// Ground-truth adjudication access; does not count as a query.
    bool is_corrupted(const Point& u) const { return value_at(u) != f_.eval(u); }

private:
    uint32_t value_at(const Point& u) const {
        const uint64_t idx = point_index(u);
        if (auto it = overrides_.find(idx); it != overrides_.end()) return it->second;
        const uint32_t clean = f_.eval(u);
        const uint32_t q = f_.field()->order();
        switch (model_) {
            case ErrorModel::FileOverrides:
                return clean;
            case ErrorModel::ExactSet:
                if (!exact_set_.count(idx)) return clean;
                break;
            case ErrorModel::BernoulliPrf: {
                uint64_t h = splitmix64(seed_ ^ splitmix64(idx + 0x9e3779b97f4a7c15ull));
                double uu = static_cast<double>(h >> 11) * 0x1.0p-53;
                if (uu >= delta_) return clean;
                break;
            }
        }
        uint64_t h2 = splitmix64(seed_ ^ splitmix64(idx * 0x2545F4914F6CDD1Dull + 17));
        uint32_t offset = 1 + static_cast<uint32_t>(h2 % (q - 1));
        return f_.field()->add(clean, offset);
    }

    MultiPoly f_;
    ErrorModel model_;
    double delta_;
    uint64_t seed_;
    uint32_t m_;
    uint64_t queries_ = 0;
    std::unordered_set<uint64_t> exact_set_;
    std::unordered_map<uint64_t, uint32_t> overrides_;
};

}  // namespace codexlcc
