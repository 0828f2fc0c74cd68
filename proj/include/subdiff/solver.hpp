#pragma once

#include <complex>
#include <string>
#include <vector>

#include "subdiff/grid.hpp"
#include "subdiff/symbol.hpp"

namespace subdiff {

// D_t^rho u + A^sigma(D) u = 0, u(.,0) = phi, evaluated at the given times.
struct ForwardProblem {
    EllipticSymbol sym;
    double rho = 0.5;
    double sigma = 1.0; // sigma = 1 recovers the plain elliptic operator
    InitialData phi;
    std::vector<double> times;

    void validate() const;
};

struct ForwardSolution {
    std::vector<std::vector<std::complex<double>>> fields; // one per time
    std::vector<double> l2_norms;                          // per time
    double l2_initial = 0.0;
    std::vector<std::string> warnings;
};

// Spectral solve: each lattice mode is multiplied by E_rho(-A^sigma(xi) t^rho)
// and transformed back.  Modes may be evaluated in parallel; every mode
// writes its own slot, so the result is independent of the thread count.
ForwardSolution forward_solve(const ForwardProblem& problem, const GridSpec& grid,
                              int threads = 1);

// One lattice mode: E_rho(-A^sigma(xi) t^rho) * phi_hat.
std::complex<double> mode_evolution(const EllipticSymbol& sym, double rho,
                                    double sigma, std::span<const double> xi,
                                    double t, std::complex<double> phi_hat);

// Max |u| over the outer shell (any |x_a| >= 0.9 L); a diagnostic for the
// domain-truncation quality.
double boundary_decay_report(std::span<const std::complex<double>> field,
                             const GridSpec& grid);

} // namespace subdiff
