#include "subdiff/dd.hpp"

#include <array>
#include <limits>

namespace subdiff {

namespace {

struct pair2 {
    double s, e;
};

inline pair2 two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline pair2 quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline pair2 two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd renorm(double s1, double s2) {
    const pair2 q = quick_two_sum(s1, s2);
    return dd(q.s, q.e);
}

// Stirling series coefficients B_{2j} / (2j (2j-1)) as exact rationals.
struct stirling_frac {
    double num, den;
};
constexpr stirling_frac stirling_fracs[16] = {
    {1, 12},           {-1, 360},           {1, 1260},
    {-1, 1680},        {1, 1188},           {-691, 360360},
    {1, 156},          {-3617, 122400},     {43867, 244188},
    {-174611, 125400}, {854513, 63756},     {-236364091, 1506960},
    {8553103, 3900},   {-23749461029, 657720},
    {8615841276005, 12460140}, {-7709321041217, 505920},
};

const std::array<dd, 16>& stirling_coeffs() {
    static const std::array<dd, 16> coeffs = [] {
        std::array<dd, 16> c{};
        for (int i = 0; i < 16; ++i)
            c[i] = dd(stirling_fracs[i].num) / dd(stirling_fracs[i].den);
        return c;
    }();
    return coeffs;
}

} // namespace

dd operator+(dd a, dd b) {
    pair2 s = two_sum(a.hi, b.hi);
    const pair2 t = two_sum(a.lo, b.lo);
    s.e += t.s;
    s = quick_two_sum(s.s, s.e);
    s.e += t.e;
    return renorm(s.s, s.e);
}

dd operator-(dd a, dd b) { return a + (-b); }

dd operator*(dd a, dd b) {
    pair2 p = two_prod(a.hi, b.hi);
    p.e += a.hi * b.lo + a.lo * b.hi;
    return renorm(p.s, p.e);
}

dd operator/(dd a, dd b) {
    const double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    const double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    const double q3 = r.hi / b.hi;
    const pair2 s = quick_two_sum(q1, q2);
    return renorm(s.s, s.e + q3);
}

dd dd_exp(dd x) {
    if (x.hi > 709.0) return dd(std::numeric_limits<double>::infinity());
    if (x.hi < -745.0) return dd(0.0);

    const double m = std::nearbyint(x.hi / ddc::ln2.hi);
    dd r = x - dd(m) * ddc::ln2;
    // Scale down by 512 so the Taylor series needs ~10 terms.
    r.hi /= 512.0;
    r.lo /= 512.0;

    dd sum = dd(1.0) + r;
    dd term = r;
    for (int k = 2; k <= 12; ++k) {
        term = term * r / dd(static_cast<double>(k));
        sum += term;
        if (std::fabs(term.hi) < 1e-35) break;
    }
    for (int i = 0; i < 9; ++i) sum = sum * sum; // undo the /512 scaling

    const int mi = static_cast<int>(m);
    return dd(std::ldexp(sum.hi, mi), std::ldexp(sum.lo, mi));
}

dd dd_log(dd x) {
    dd y = dd(std::log(x.hi));
    // Newton on y -> y + x e^{-y} - 1; one step doubles the digits.
    for (int i = 0; i < 2; ++i) y = y + x * dd_exp(-y) - dd(1.0);
    return y;
}

dd dd_lgamma(dd x) {
    // Shift to y >= 32 where the Stirling tail is below 1e-40.
    int n = 0;
    if (x.hi < 32.0) n = static_cast<int>(std::ceil(32.0 - x.hi));
    dd shift_prod = dd(1.0);
    for (int j = 0; j < n; ++j) shift_prod *= (x + dd(static_cast<double>(j)));
    const dd y = x + dd(static_cast<double>(n));

    const dd ln_y = dd_log(y);
    dd result = (y - dd(0.5)) * ln_y - y + ddc::half_ln_2pi;

    const dd w = dd(1.0) / y;
    const dd w2 = w * w;
    dd p = w;
    const auto& coeffs = stirling_coeffs();
    for (int j = 0; j < 16; ++j) {
        result += coeffs[j] * p;
        p *= w2;
    }

    if (n > 0) result -= dd_log(shift_prod);
    return result;
}

dd dd_gamma(dd x) { return dd_exp(dd_lgamma(x)); }

} // namespace subdiff
