#pragma once

namespace subdiff::paper {

// Constants that appear verbatim in the derivative estimates and thresholds.
// They are fixed here once and never recomputed at runtime.
inline constexpr double B1 = 43.0;
inline constexpr double B2 = 4.6;
inline constexpr double euler_mascheroni = 0.57722;
inline constexpr double product_threshold = 0.0075; // rho0*lambda0 above this => T0 = 2
inline constexpr double C0 = 3.0;                   // tail-integral bound, m = 0
inline constexpr double C1 = 14.72;                 // m = 1
inline constexpr double C2 = 94.2;                  // m = 2
inline constexpr double sigma_coeff = 5.0;          // lambda^sigma0 >= 5*Gamma(1-rho)
inline constexpr double g2_coeff = 2.3;             // |g2'| <= 2.3 (1+t0^rho) ln(lambda) / (...)^2

inline constexpr double lemma4_constant(int m) {
    return m == 0 ? C0 : (m == 1 ? C1 : C2);
}

} // namespace subdiff::paper
