#pragma once

#include <string>

#include "subdiff/errors.hpp"

namespace subdiff {

enum class MLRegime { series, asymptotic, hankel, exponential };

std::string regime_name(MLRegime r);

// Inputs for a single evaluation of E_rho(z).
struct MLParams {
    double rho = 0.5;         // order, in (0, 1]
    double z = 0.0;           // argument; production use is z <= 0
    double series_tol = 1e-12;
    int max_terms = 5000;
    double crossover = 5.0;   // |z| at which the asymptotic branch takes over

    void validate() const;
};

struct MLResult {
    double value = 0.0;
    MLRegime regime = MLRegime::series;
    double err_estimate = 0.0; // first omitted term / quadrature estimate
};

// Keyhole contour: two rays at angles +-beta joined by an arc of |zeta| = 1.
// The integral representation used here requires beta = 3*pi*rho/4.
struct HankelContour {
    double beta = 0.0;
    double radius = 1.0;
    double ray_cutoff = 0.0; // |zeta| where the rays are truncated
    int n_arc = 64;          // Gauss-Legendre nodes on the arc
    int n_ray = 24;          // Gauss-Legendre nodes per ray panel

    // Contour whose spec-form tail bound e^{-R^{1/rho}/2} R^{1/rho+1}
    // stays below tol/10.
    static HankelContour for_order(double rho, double tol = 1e-12);

    void validate() const;
};

// Largest |z| for which the compensated series keeps ~16 significant digits;
// the asymptotic branch is already at full accuracy there.  Grows like 36^rho.
double series_stable_crossover(double rho);

// E_rho(z) by the regime dispatch: exact exponential at rho = 1, compensated
// power series for |z| < crossover, smallest-term asymptotic expansion
// otherwise (z <= 0 only).
MLResult eval_ml(const MLParams& params);

// e_lambda(rho) = E_rho(-lambda t^rho) with the rho-aware crossover.
MLResult eval_ml_neg(double rho, double lambda, double t);

// Same value through the contour representation f1(rho) + f2(rho);
// independent of the series/asymptotic code paths.
MLResult eval_hankel(const MLParams& params, const HankelContour& contour,
                     double lambda, double t);

// The two components of the contour representation of E_rho(-s):
// f1 = 1/(s Gamma(1-rho)) and f2 = the contour integral.
double hankel_f1(double rho, double s);
double hankel_f2(double rho, double s, const HankelContour& contour,
                 double* err_estimate = nullptr);

// Central difference of rho -> e_lambda(rho) at fixed lambda, t.
double ml_drho(double rho, double lambda, double t, double h = 1e-5);

} // namespace subdiff
