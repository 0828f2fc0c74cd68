#pragma once

namespace subdiff {

// Gamma function on the real line (Lanczos approximation, reflection for
// x < 0).  Relative error is below 1e-13 on the ranges the solvers touch;
// poles at nonpositive integers return +-inf.
double gamma_fn(double x);

// log|Gamma(x)| for x > 0.
double log_gamma(double x);

// 1/Gamma(x), finite for every real x (exactly 0 at the poles of Gamma).
double reciprocal_gamma(double x);

// sin(pi*x) with exact argument reduction, accurate for large |x|.
double sin_pi(double x);

} // namespace subdiff
