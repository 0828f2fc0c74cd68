#pragma once

#include <cmath>

namespace subdiff {

// Double-double value: unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Carries roughly 32 significant decimal digits; used by the oracle
// backends and by the alternating-series summation inside the
// Mittag-Leffler evaluator, where plain doubles lose too much to
// cancellation.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {} // NOLINT: implicit by design
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

dd operator+(dd a, dd b);
dd operator-(dd a, dd b);
dd operator*(dd a, dd b);
dd operator/(dd a, dd b);
inline dd operator-(dd a) { return dd(-a.hi, -a.lo); }

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }

inline dd dd_abs(dd a) { return a.hi < 0.0 ? -a : a; }
inline double to_double(dd a) { return a.hi + a.lo; }

// exp(x), x given as double-double; overflows to inf past ~709.
dd dd_exp(dd x);

// ln(x) for x > 0.
dd dd_log(dd x);

// ln Gamma(x) for x >= 1 (Stirling series with recurrence shift).
dd dd_lgamma(dd x);

// Gamma(x) for x >= 1.
dd dd_gamma(dd x);

namespace ddc {
inline const dd ln2{0.6931471805599453, 2.3190468138462996e-17};
inline const dd half_ln_2pi{0.9189385332046728, -3.8782941580672414e-17};
inline const dd pi{3.141592653589793, 1.2246467991473532e-16};
inline const dd e{2.718281828459045, 1.4456468917292502e-16};
} // namespace ddc

} // namespace subdiff
