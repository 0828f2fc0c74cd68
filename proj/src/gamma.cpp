#include "subdiff/gamma.hpp"

#include <cmath>
#include <limits>

namespace subdiff {

namespace {

// Lanczos coefficients, g = 7, 9 terms.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

// Lanczos partial-fraction sum for Gamma(z+1), valid for z >= 0.
double lanczos_sum(double z) {
    double s = lanczos_c[0];
    for (int i = 1; i < 9; ++i) s += lanczos_c[i] / (z + i);
    return s;
}

// Gamma(z+1) for z >= 0, overflow-safe up to the double range.
double gamma_1p(double z) {
    const double base = z + lanczos_g + 0.5;
    const double expo = (z + 0.5) * std::log(base) - base;
    if (expo > 708.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(2.0 * M_PI) * lanczos_sum(z) * std::exp(expo);
}

double log_gamma_1p(double z) {
    const double base = z + lanczos_g + 0.5;
    return half_log_two_pi + (z + 0.5) * std::log(base) - base +
           std::log(lanczos_sum(z));
}

} // namespace

double sin_pi(double x) {
    // Reduce to |r| <= 0.5 with r = x - round(x); exact while |x| < 2^52.
    const double n = std::nearbyint(x);
    const double r = x - n;
    const double s = std::sin(M_PI * r);
    return (std::fmod(std::fabs(n), 2.0) < 0.5) ? s : -s;
}

double gamma_fn(double x) {
    if (std::isnan(x)) return x;
    if (x >= 0.5) {
        if (x > 171.7) return std::numeric_limits<double>::infinity();
        return gamma_1p(x) / x; // Gamma(x) = Gamma(x+1)/x
    }
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x)), 1-x > 0.5.
    const double s = sin_pi(x);
    if (s == 0.0) return std::numeric_limits<double>::infinity(); // pole
    return M_PI / (s * gamma_fn(1.0 - x));
}

double log_gamma(double x) {
    // x > 0 only.
    return log_gamma_1p(x) - std::log(x);
}

double reciprocal_gamma(double x) {
    if (x >= 0.5) {
        if (x > 171.7) return 0.0;
        return x / gamma_1p(x);
    }
    const double s = sin_pi(x);
    if (s == 0.0) return 0.0; // pole of Gamma: the reciprocal vanishes
    // May overflow to +-inf once Gamma(1-x) itself overflows (x < -170.7).
    return s * gamma_fn(1.0 - x) / M_PI;
}

} // namespace subdiff
