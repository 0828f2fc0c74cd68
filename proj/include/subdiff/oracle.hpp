#pragma once

#include <complex>
#include <vector>

#include "subdiff/errors.hpp"

namespace subdiff::oracle {

// Uniform-step L1 discretization of the per-mode Caputo problem
//   D_t^rho w + lambda w = 0,  w(0) = w0.
struct L1SchemeConfig {
    int steps = 100;       // M
    double t_final = 1.0;
    double rho = 0.5;

    void validate() const;
    double step() const { return t_final / steps; }
};

// Implicit L1 march; returns the trajectory w_0 .. w_M.
// Converges to w0 * E_rho(-lambda t^rho) at rate O(h^{2-rho}).
std::vector<std::complex<double>> l1_solve_mode(double lambda,
                                                std::complex<double> w0,
                                                const L1SchemeConfig& cfg);

struct HighPrecResult {
    double value;
    double err_estimate;
    int terms;
};

// Ground-truth series sum of E_rho(z), z <= 0, in double-double arithmetic.
// Terms are added until they drop below 10^{-digits}.  Throws PrecisionLoss
// when the alternating-series cancellation eats past the double-double
// budget, i.e. when the requested digits cannot be delivered.
HighPrecResult ml_series_highprec(double rho, double z, int digits);

// Largest |z| the series oracle can certify at the requested digits for a
// given rho (cancellation grows like exp(|z|^{1/rho})).
double highprec_feasible_z(double rho, int digits);

// max over rho_grid of I(rho) = (1/rho) int_1^inf e^{-s^{1/rho}/2} s^{m/rho+1} ds,
// evaluated after the substitution r = s^{1/rho} (integrand e^{-r/2} r^{m-1+2 rho}).
double verify_lemma4_constants(const std::vector<double>& rho_grid, int m);

} // namespace subdiff::oracle
