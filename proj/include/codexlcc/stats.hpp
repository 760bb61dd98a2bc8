#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace codexlcc {

struct WilsonInterval {
    double lo = 0.0, hi = 1.0;
};

/// Wilson score interval for a binomial proportion.
inline WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054) {
    if (trials == 0) return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = p + z2 / (2.0 * n);
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {std::max(0.0, (center - half) / denom), std::min(1.0, (center + half) / denom)};
}

namespace statsdetail {

// regularized incomplete gamma, series and continued-fraction forms
inline double gamma_series(double a, double x) {
    double sum = 1.0 / a, term = sum, ap = a;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace statsdetail

/// P(Gamma(a) <= x), the regularized lower incomplete gamma function.
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return statsdetail::gamma_series(a, x);
    return 1.0 - statsdetail::gamma_cf(a, x);
}

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom: P(X >= x).
inline double chi2_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return 1.0 - gamma_p(dof / 2.0, x / 2.0);
}

/// Exact upper binomial tail P(X >= ceil(s/2)) for X ~ Bin(s, b); the
/// majority-vote failure probability when each round fails with probability b.
inline double binomial_majority_tail(double b, uint32_t s) {
    if (b < 0.0 || b > 1.0) throw std::invalid_argument("binomial_majority_tail: b outside [0,1]");
    if (s == 0) return 0.0;
    const uint32_t from = (s + 1) / 2;
    long double sum = 0.0L;
    for (uint32_t i = from; i <= s; ++i) {
        long double logterm = lgammal(s + 1.0L) - lgammal(i + 1.0L) - lgammal(s - i + 1.0L);
        if (b > 0.0) logterm += i * logl(static_cast<long double>(b));
        else if (i > 0) continue;
        if (b < 1.0) logterm += (s - i) * logl(1.0L - static_cast<long double>(b));
        else if (i < s) continue;
        sum += expl(logterm);
    }
    return static_cast<double>(std::min(sum, 1.0L));
}

}  // namespace codexlcc
