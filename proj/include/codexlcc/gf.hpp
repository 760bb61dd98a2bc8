#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace codexlcc {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Arithmetic context for GF(p^e) with p^e <= 2^16.
///
/// Elements are identified by integer codes in [0, q).  A code packs the
/// coefficient vector over the base field positionally, code = sum_i c_i qb^i
/// with qb the base field order; for a prime field the code is the residue
/// itself.  Extension fields reduce modulo the lexicographically least monic
/// irreducible polynomial (candidates compared by their packed code), so a
/// given construction always yields the same tables.
///
/// Multiplication, inversion and powering go through exp/log tables built once
/// at construction from the polynomial-basis product; addition is carry-free
/// digit arithmetic mod p.  Contexts are immutable after construction.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// GF(p^e) over the prime field, modulus chosen deterministically.
    static FieldPtr prime_power(uint32_t p, uint32_t e);

    /// GF(q^2) as a degree-2 extension of an existing GF(q) context.  The
    /// subfield embedding is then the identity on codes.
    static FieldPtr quadratic_extension(const FieldPtr& base);

    uint32_t characteristic() const { return p_; }
    uint32_t order() const { return q_; }
    /// Extension degree over the base field (1 for prime fields).
    uint32_t degree() const { return deg_; }
    /// Base context; null for prime fields.
    const FieldPtr& base() const { return base_; }
    /// Monic modulus as base-field codes, constant term first, length degree()+1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    /// Smallest multiplicative generator (by code).
    uint32_t generator() const { return gen_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (deg_ == 1 && !base_) return (a + b) % p_;
        return add_digits(a, b);
    }
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    /// a^e with the convention 0^0 = 1.
    uint32_t pow(uint32_t a, uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        uint64_t le = (static_cast<uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[le];
    }

    /// Reference product on the polynomial representation.  The exp/log tables
    /// are built from this path and agree with it bit for bit.
    uint32_t mul_poly(uint32_t a, uint32_t b) const;

    /// i-th base-field coordinate of a code.
    uint32_t digit(uint32_t code, uint32_t i) const {
        uint32_t qb = base_ ? base_->order() : p_;
        for (uint32_t k = 0; k < i; ++k) code /= qb;
        return code % qb;
    }
    uint32_t from_digits(const std::vector<uint32_t>& c) const;

    /// Image of a base-field code in this field (requires base() != null).
    uint32_t embed_base(uint32_t base_code) const {
        if (!base_) throw std::invalid_argument("Field::embed_base: prime field has no base");
        if (base_code >= base_->order()) throw std::invalid_argument("Field::embed_base: code out of range");
        return base_code;
    }

    FieldElement element(uint32_t code) const;
    FieldElement zero() const;
    FieldElement one() const;

private:
    Field() = default;
    void build_tables();
    uint32_t add_digits(uint32_t a, uint32_t b) const;
    uint32_t pow_poly(uint32_t a, uint64_t e) const;

    uint32_t p_ = 0, q_ = 0, deg_ = 1;
    FieldPtr base_;
    std::vector<uint32_t> modulus_;
    uint32_t gen_ = 1;
    std::vector<uint32_t> exp_, log_;
};

/// Value with its context.  Arithmetic is only defined between elements of the
/// same context and throws on mismatch.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* f, uint32_t code) : f_(f), code_(code) {}

    uint32_t code() const { return code_; }
    const Field* field() const { return f_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.f_, a.f_->add(a.code_, b.code_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.f_, a.f_->sub(a.code_, b.code_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.f_, a.f_->mul(a.code_, b.code_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        same(a, b);
        return {a.f_, a.f_->div(a.code_, b.code_)};
    }
    FieldElement operator-() const { return {f_, f_->neg(code_)}; }
    FieldElement inv() const { return {f_, f_->inv(code_)}; }
    FieldElement pow(uint64_t e) const { return {f_, f_->pow(code_, e)}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.f_ == b.f_ && a.code_ == b.code_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    static void same(const FieldElement& a, const FieldElement& b) {
        if (a.f_ != b.f_) throw std::invalid_argument("field context mismatch");
    }
    const Field* f_ = nullptr;
    uint32_t code_ = 0;
};

inline FieldElement Field::element(uint32_t code) const {
    if (code >= q_) throw std::invalid_argument("Field::element: code out of range");
    return FieldElement(this, code);
}
inline FieldElement Field::zero() const { return FieldElement(this, 0); }
inline FieldElement Field::one() const { return FieldElement(this, 1); }

/// All q elements in code order: 0 first, 1 second, then the rest.
inline std::vector<FieldElement> enumerate(const FieldPtr& f) {
    std::vector<FieldElement> out;
    out.reserve(f->order());
    for (uint32_t c = 0; c < f->order(); ++c) out.push_back(f->element(c));
    return out;
}

/// Canonical embedding GF(q) -> GF(q^2) for a pair built with
/// Field::quadratic_extension.  Identity on codes; a ring homomorphism.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
        if (!to_ || to_->base() != from_)
            throw std::invalid_argument("SubfieldEmbedding: no embedding registered for this field pair");
    }
    const FieldPtr& from() const { return from_; }
    const FieldPtr& to() const { return to_; }
    FieldElement operator()(const FieldElement& x) const {
        if (x.field() != from_.get())
            throw std::invalid_argument("SubfieldEmbedding: element not in source field");
        return to_->element(x.code());
    }
    /// Image of the source generator.
    FieldElement generator_image() const { return to_->element(from_->generator()); }

private:
    FieldPtr from_, to_;
};

// --- implementation ---

namespace gfdetail {

// polynomial helpers over a prime p, coefficient vectors with constant term
// first, used only during context construction
inline void trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<uint32_t> pmod(std::vector<uint32_t> a, const std::vector<uint32_t>& f, uint32_t p) {
    // f monic
    const size_t df = f.size() - 1;
    trim(a);
    while (a.size() > df) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (size_t j = 0; j <= df; ++j) {
                uint64_t sub = (static_cast<uint64_t>(c) * f[j]) % p;
                a[shift + j] = static_cast<uint32_t>((a[shift + j] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline std::vector<uint32_t> pmulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                     const std::vector<uint32_t>& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<uint32_t>((c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    return pmod(std::move(c), f, p);
}

inline std::vector<uint32_t> ppowmod(std::vector<uint32_t> a, uint64_t e, const std::vector<uint32_t>& f,
                                     uint32_t p) {
    std::vector<uint32_t> r{1};
    a = pmod(std::move(a), f, p);
    while (e) {
        if (e & 1) r = pmulmod(r, a, f, p);
        a = pmulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<uint32_t> pgcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b, with b made monic first
        uint32_t lead = b.back();
        if (lead != 1) {
            // inverse mod p by Fermat
            uint32_t li = 1;
            uint32_t base = lead, ex = p - 2;
            while (ex) {
                if (ex & 1) li = static_cast<uint32_t>((static_cast<uint64_t>(li) * base) % p);
                base = static_cast<uint32_t>((static_cast<uint64_t>(base) * base) % p);
                ex >>= 1;
            }
            for (auto& c : b) c = static_cast<uint32_t>((static_cast<uint64_t>(c) * li) % p);
        }
        auto r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin irreducibility test for a monic polynomial over GF(p).
inline bool irreducible_over_prime(const std::vector<uint32_t>& f, uint32_t p) {
    const uint32_t e = static_cast<uint32_t>(f.size()) - 1;
    const std::vector<uint32_t> x{0, 1};
    // x^(p^e) == x mod f
    std::vector<uint32_t> t = x;
    for (uint32_t i = 0; i < e; ++i) t = ppowmod(std::move(t), p, f, p);
    std::vector<uint32_t> txm = t;  // t - x
    if (txm.size() < 2) txm.resize(2, 0);
    txm[1] = (txm[1] + p - 1) % p;
    trim(txm);
    if (!txm.empty()) return false;
    // gcd(x^(p^(e/l)) - x, f) == 1 for each prime l | e
    for (uint32_t l = 2; l <= e; ++l) {
        if (e % l != 0) continue;
        bool lp = true;
        for (uint32_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        std::vector<uint32_t> u = x;
        for (uint32_t i = 0; i < e / l; ++i) u = ppowmod(std::move(u), p, f, p);
        if (u.size() < 2) u.resize(2, 0);
        u[1] = (u[1] + p - 1) % p;
        trim(u);
        auto g = pgcd(f, u, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

inline bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace gfdetail

inline uint32_t Field::neg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, place = 1;
    while (a) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

inline uint32_t Field::add_digits(uint32_t a, uint32_t b) const {
    uint32_t r = 0, place = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

inline uint32_t Field::from_digits(const std::vector<uint32_t>& c) const {
    const uint32_t qb = base_ ? base_->order() : p_;
    if (c.size() > deg_) throw std::invalid_argument("Field::from_digits: too many digits");
    uint32_t code = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= qb) throw std::invalid_argument("Field::from_digits: digit out of range");
        code = code * qb + c[i];
    }
    return code;
}

inline uint32_t Field::mul_poly(uint32_t a, uint32_t b) const {
    if (deg_ == 1 && !base_) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    const Field& B = *base_;
    const uint32_t qb = B.order();
    std::vector<uint32_t> da(deg_), db(deg_);
    for (uint32_t i = 0; i < deg_; ++i) {
        da[i] = a % qb;
        a /= qb;
        db[i] = b % qb;
        b /= qb;
    }
    std::vector<uint32_t> acc(2 * deg_ - 1, 0);
    for (uint32_t i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < deg_; ++j)
            if (db[j] != 0) acc[i + j] = B.add(acc[i + j], B.mul(da[i], db[j]));
    }
    for (size_t i = acc.size(); i-- > deg_;) {
        uint32_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (uint32_t j = 0; j < deg_; ++j)
            if (modulus_[j] != 0) acc[i - deg_ + j] = B.sub(acc[i - deg_ + j], B.mul(c, modulus_[j]));
    }
    uint32_t code = 0;
    for (uint32_t i = deg_; i-- > 0;) code = code * qb + acc[i];
    return code;
}

inline uint32_t Field::pow_poly(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_poly(r, a);
        a = mul_poly(a, a);
        e >>= 1;
    }
    return r;
}

inline void Field::build_tables() {
    exp_.assign(q_ - 1, 1);
    log_.assign(q_, 0xffffffffu);
    if (q_ == 2) {
        gen_ = 1;
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    // factor q-1
    std::vector<uint32_t> primes;
    uint32_t m = q_ - 1;
    for (uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    uint32_t g = 0;
    for (uint32_t cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (uint32_t l : primes) {
            if (pow_poly(cand, (q_ - 1) / l) == 1) { ok = false; break; }
        }
        if (ok) { g = cand; break; }
    }
    if (g == 0) throw std::logic_error("Field: no generator found");
    gen_ = g;
    uint32_t cur = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_poly(cur, g);
    }
    if (cur != 1) throw std::logic_error("Field: generator order mismatch");
}

inline FieldPtr Field::prime_power(uint32_t p, uint32_t e) {
    if (!gfdetail::is_prime(p)) throw std::invalid_argument("Field::prime_power: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("Field::prime_power: degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("Field::prime_power: order exceeds 2^16");
    }
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->deg_ = e;
    f->q_ = static_cast<uint32_t>(q);
    if (e == 1) {
        f->modulus_ = {0, 1};  // x: never used for reduction at degree 1
        f->build_tables();
        return f;
    }
    f->base_ = prime_power(p, 1);
    // lexicographically least monic irreducible: candidates ordered by packed
    // code of the non-leading coefficients
    uint64_t span = 1;
    for (uint32_t i = 0; i < e; ++i) span *= p;
    for (uint64_t c = 0; c < span; ++c) {
        std::vector<uint32_t> cand(e + 1, 0);
        uint64_t x = c;
        for (uint32_t i = 0; i < e; ++i) {
            cand[i] = static_cast<uint32_t>(x % p);
            x /= p;
        }
        cand[e] = 1;
        if (gfdetail::irreducible_over_prime(cand, p)) {
            f->modulus_ = cand;
            break;
        }
    }
    if (f->modulus_.empty()) throw std::logic_error("Field: no irreducible modulus found");
    f->build_tables();
    return f;
}

inline FieldPtr Field::quadratic_extension(const FieldPtr& base) {
    if (!base) throw std::invalid_argument("Field::quadratic_extension: null base");
    const uint64_t q = static_cast<uint64_t>(base->order()) * base->order();
    if (q > 65536) throw std::invalid_argument("Field::quadratic_extension: order exceeds 2^16");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = base->characteristic();
    f->deg_ = 2;
    f->q_ = static_cast<uint32_t>(q);
    f->base_ = base;
    const uint32_t qb = base->order();
    // least monic irreducible quadratic x^2 + c1 x + c0, ordered by c0 + qb*c1;
    // a quadratic is irreducible iff it has no root in the base field
    for (uint32_t code = 0; code < qb * qb; ++code) {
        uint32_t c0 = code % qb, c1 = code / qb;
        bool has_root = false;
        for (uint32_t x = 0; x < qb; ++x) {
            uint32_t v = base->add(base->add(base->mul(x, x), base->mul(c1, x)), c0);
            if (v == 0) { has_root = true; break; }
        }
        if (!has_root) {
            f->modulus_ = {c0, c1, 1};
            break;
        }
    }
    if (f->modulus_.empty()) throw std::logic_error("Field: no irreducible quadratic found");
    f->build_tables();
    return f;
}

}  // namespace codexlcc
