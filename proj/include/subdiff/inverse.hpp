#pragma once

#include <optional>
#include <vector>

#include "subdiff/constants.hpp"
#include "subdiff/errors.hpp"

namespace subdiff {

// Single-frequency modulus observation (xi, t, d).
struct InverseObservation {
    std::vector<double> xi;
    double t = 0.0;
    double d = 0.0;

    void validate() const;
};

struct RecoverySpec {
    double rho0 = 0.1;   // lower search bound for rho
    double sigma0 = 0.5; // lower search bound for sigma (second problem)
    double tol = 1e-10;
    int max_iter = 200;
    double b1 = paper::B1; // fixed
    double b2 = paper::B2; // fixed

    void validate() const;
};

struct SolvabilityInterval {
    bool solvable = false;
    double lower = 0.0;       // open endpoint
    double upper = 0.0;       // closed for the rho problem, open for sigma
    double ratio = 0.0;       // d / |phi_hat|
    double value_near_one = 0.0; // E at the numerical rho (or sigma) upper edge
};

struct RecoveryResult {
    double rho_star = 0.0;
    std::optional<double> sigma_star;
    double residual = 0.0;
    int iterations = 0;
    double threshold_t0 = 0.0; // observation-time threshold used
    std::optional<double> threshold_lambda1;
    bool solvable = false;
    double interval_lower = 0.0;
    double interval_upper = 0.0;
};

// Observation-time threshold: 2 when rho0*lambda0 > 0.0075, otherwise e^k
// with k the fixed point of k -> max{B1/(B2 rho0), ln(2 B2 k / lambda0)/rho0}
// (plus a 1e-9 relative margin so the strict inequalities survive rounding).
double compute_t0(double lambda0, double rho0, const RecoverySpec& spec = {});

// e^{-lambda0} < d/|phi_hat| <= E_{rho0}(-lambda0 t0^{rho0})?
SolvabilityInterval check_solvability_rho(const InverseObservation& obs,
                                          double phi_hat_mag, double lambda0,
                                          const RecoverySpec& spec);

// Bisection for rho on [rho0, 1-1e-6]; unique root by monotone decrease.
RecoveryResult recover_rho(const InverseObservation& obs, double phi_hat_mag,
                           double lambda0, const RecoverySpec& spec);

// Frequency-magnitude threshold e^n, n = max(ln(5 Gamma(1-rho*))/sigma0, 0),
// guaranteeing strict sigma-monotonicity for every lambda >= Lambda1.
double compute_lambda1(double rho_star, double sigma0, double t0);

// E_{rho*}(-lambda1 t1^{rho*}) < d1/|phi_hat| < E_{rho*}(-lambda1^{sigma0} t1^{rho*})?
SolvabilityInterval check_solvability_sigma(const InverseObservation& obs1,
                                            double phi_hat_mag1, double lambda1,
                                            double rho_star, double sigma0);

// Two-step recovery: rho* from the normalized observation (A(xi0) = 1),
// then sigma* by bisection in sigma at the second frequency.
RecoveryResult recover_rho_sigma(const InverseObservation& obs0,
                                 double phi_hat_mag0, double a_at_xi0,
                                 const InverseObservation& obs1,
                                 double phi_hat_mag1, double lambda1,
                                 const RecoverySpec& spec);

} // namespace subdiff
