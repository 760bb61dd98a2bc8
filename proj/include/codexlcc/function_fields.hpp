#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "codexlcc/gf.hpp"
#include "codexlcc/linalg.hpp"

namespace codexlcc {

enum class CurveKind { Rational, Hermitian };

/// Descriptor of one of the two supported function fields over a constants
/// field F:
///   Rational   F(x), genus 0, one finite place per element of F.
///   Hermitian  F(x,y) with y^q + y = x^(q+1), where F = GF(q^2) must be a
///              quadratic_extension of GF(q); genus q(q-1)/2 and exactly q^3
///              finite rational places.
/// Only one-point divisors s * infinity are used, so a Riemann-Roch basis is a
/// list of monomials x^i y^j ordered by pole order at infinity.
struct FunctionField {
    CurveKind kind = CurveKind::Rational;
    FieldPtr constants;
    uint32_t curve_q = 0;  // Hermitian parameter; constants = GF(curve_q^2)

    static FunctionField rational(FieldPtr f) { return {CurveKind::Rational, std::move(f), 0}; }

    static FunctionField hermitian(FieldPtr gfq2) {
        if (!gfq2 || !gfq2->base() || gfq2->degree() != 2)
            throw std::invalid_argument("FunctionField::hermitian: constants must be a quadratic extension");
        uint32_t q = gfq2->base()->order();
        return {CurveKind::Hermitian, std::move(gfq2), q};
    }

    uint64_t genus() const {
        if (kind == CurveKind::Rational) return 0;
        return static_cast<uint64_t>(curve_q) * (curve_q - 1) / 2;
    }
};

/// A finite rational place: x = alpha for the rational field, the point
/// (alpha, beta) on the curve for the Hermitian field.
struct Place {
    uint32_t x = 0;
    uint32_t y = 0;

    friend bool operator==(const Place& a, const Place& b) { return a.x == b.x && a.y == b.y; }
};

/// All finite places of the rational function field minus exclusions, in
/// element code order.
inline std::vector<Place> rational_places(const FieldPtr& f, const std::set<uint32_t>& exclude = {}) {
    std::vector<Place> out;
    for (uint32_t a = 0; a < f->order(); ++a)
        if (!exclude.count(a)) out.push_back({a, 0});
    return out;
}

/// The q^3 finite places of the Hermitian curve, lexicographic in (alpha, beta).
inline std::vector<Place> hermitian_places(const FieldPtr& gfq2) {
    FunctionField F = FunctionField::hermitian(gfq2);
    const uint32_t q = F.curve_q;
    const Field& K = *gfq2;
    std::vector<Place> out;
    out.reserve(static_cast<size_t>(q) * q * q);
    for (uint32_t a = 0; a < K.order(); ++a) {
        const uint32_t rhs = K.pow(a, q + 1);
        for (uint32_t b = 0; b < K.order(); ++b) {
            if (K.add(K.pow(b, q), b) == rhs) out.push_back({a, b});
        }
    }
    return out;
}

/// Monomial x^xe y^ye with its pole order at infinity.
struct BasisFunction {
    uint32_t xe = 0, ye = 0;
    uint64_t pole_order = 0;
};

/// Ordered basis of L(s * infinity).
struct RRBasis {
    FunctionField field;
    uint64_t s = 0;
    std::vector<BasisFunction> fns;

    size_t dim() const { return fns.size(); }
};

/// Basis of L(s * infinity): {1, x, ..., x^s} for the rational field;
/// {x^i y^j : 0 <= j <= q-1, qi + (q+1)j <= s} for the Hermitian field,
/// ordered by pole order (pole orders are distinct, so the order is total).
inline RRBasis rr_basis(const FunctionField& F, uint64_t s) {
    RRBasis out{F, s, {}};
    if (F.kind == CurveKind::Rational) {
        for (uint64_t i = 0; i <= s; ++i)
            out.fns.push_back({static_cast<uint32_t>(i), 0, i});
        return out;
    }
    const uint32_t q = F.curve_q;
    for (uint32_t j = 0; j < q; ++j) {
        for (uint64_t i = 0; q * i + static_cast<uint64_t>(q + 1) * j <= s; ++i)
            out.fns.push_back({static_cast<uint32_t>(i), j, q * i + static_cast<uint64_t>(q + 1) * j});
    }
    std::sort(out.fns.begin(), out.fns.end(),
              [](const BasisFunction& a, const BasisFunction& b) { return a.pole_order < b.pole_order; });
    return out;
}

/// Exact value of a basis function at a finite place.
inline uint32_t eval_function(const FunctionField& F, const BasisFunction& b, const Place& P) {
    const Field& K = *F.constants;
    uint32_t v = K.pow(P.x, b.xe);
    if (b.ye) v = K.mul(v, K.pow(P.y, b.ye));
    return v;
}

/// Evaluation data of the one-point code C(s * infinity, P): the places, the
/// Riemann-Roch basis and the evaluation matrix (rows = places, columns =
/// basis functions).  This is the supercode object the bounded-distance
/// decoders work against.
struct EvalCode {
    FunctionField F;
    std::vector<Place> points;
    uint64_t max_pole = 0;  // s
    RRBasis basis;
    GfMat evals;

    static EvalCode make(const FunctionField& F, std::vector<Place> points, uint64_t s) {
        EvalCode c{F, std::move(points), s, rr_basis(F, s), {}};
        c.evals = GfMat(F.constants, c.points.size(), c.basis.dim());
        for (size_t r = 0; r < c.points.size(); ++r)
            for (size_t j = 0; j < c.basis.dim(); ++j)
                c.evals.at(r, j) = eval_function(F, c.basis.fns[j], c.points[r]);
        return c;
    }

    /// Codeword from L(s*infinity)-coefficients.
    std::vector<uint32_t> encode(std::span<const uint32_t> coeffs) const { return evals.matvec(coeffs); }
};

}  // namespace codexlcc
