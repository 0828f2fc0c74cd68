#include "subdiff/solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "subdiff/ml.hpp"

namespace subdiff {

namespace {

template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
    threads = std::max(1, threads);
    if (threads == 1 || n < 1024) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

void ForwardProblem::validate() const {
    sym.validate();
    if (!(rho > 0.0 && rho <= 1.0)) throw Error("forward problem: rho in (0, 1]");
    if (!(sigma > 0.0 && sigma <= 1.0)) throw Error("forward problem: sigma in (0, 1]");
    if (times.empty()) throw Error("forward problem: empty time list");
    for (double t : times)
        if (!(t > 0.0)) throw Error("forward problem: times must be positive");
}

std::complex<double> mode_evolution(const EllipticSymbol& sym, double rho,
                                    double sigma, std::span<const double> xi,
                                    double t, std::complex<double> phi_hat) {
    if (!(t > 0.0)) throw Error("mode_evolution: t must be positive");
    const double a = symbol_power(sym, sigma, xi);
    if (a == 0.0) return phi_hat; // E_rho(0) = 1
    return eval_ml_neg(rho, a, t).value * phi_hat;
}

ForwardSolution forward_solve(const ForwardProblem& problem, const GridSpec& grid,
                              int threads) {
    problem.validate();
    grid.validate();
    check_ellipticity(problem.sym, std::max(200, 64 * grid.dim));
    if (problem.sym.dim != grid.dim)
        throw DimensionMismatch("forward_solve: symbol and grid dimensions differ");

    ForwardSolution out;
    if (problem.phi.tau <= grid.dim / 2.0)
        out.warnings.push_back(
            "initial data smoothness tau <= N/2; the classical-solution "
            "hypothesis is not met (the discrete solve proceeds)");

    const SpectralField phi_hat = initial_spectrum(problem.phi, grid);
    const std::size_t n_total = grid.total_points();

    // Domain-truncation check on the initial spectrum.
    double hat_max = 0.0, hat_boundary = 0.0;
    for (std::size_t p = 0; p < n_total; ++p) {
        const double m = std::abs(phi_hat.coeffs[p]);
        hat_max = std::max(hat_max, m);
        if (grid.on_frequency_boundary(p)) hat_boundary = std::max(hat_boundary, m);
    }
    if (hat_max > 0.0 && hat_boundary > 1e-8 * hat_max)
        throw GridTooCoarse(
            "forward_solve: |phi_hat| at the lattice boundary is " +
            std::to_string(hat_boundary / hat_max) + " of its maximum");

    out.l2_initial = l2_norm_spectral(phi_hat);

    // A^sigma over the lattice, reused across times.
    std::vector<double> lam(n_total);
    parallel_for(n_total, threads, [&](std::size_t p) {
        lam[p] = symbol_power(problem.sym, problem.sigma, grid.xi(p));
    });

    for (double t : problem.times) {
        SpectralField evolved{grid, std::vector<std::complex<double>>(n_total)};
        parallel_for(n_total, threads, [&](std::size_t p) {
            if (lam[p] == 0.0) {
                evolved.coeffs[p] = phi_hat.coeffs[p];
            } else {
                evolved.coeffs[p] =
                    eval_ml_neg(problem.rho, lam[p], t).value * phi_hat.coeffs[p];
            }
        });

        // Multiplier bound: |evolved| <= |phi_hat| mode by mode.
        for (std::size_t p = 0; p < n_total; ++p) {
            if (std::abs(evolved.coeffs[p]) >
                std::abs(phi_hat.coeffs[p]) * (1.0 + 1e-12))
                throw Error("forward_solve: multiplier left (0, 1] at a mode");
        }

        const double norm_t = l2_norm_spectral(evolved);
        if (norm_t > out.l2_initial * (1.0 + 1e-12))
            throw Error("forward_solve: L2 norm grew over the initial norm");
        out.l2_norms.push_back(norm_t);
        out.fields.push_back(transform_inverse(evolved));
    }
    return out;
}

double boundary_decay_report(std::span<const std::complex<double>> field,
                             const GridSpec& grid) {
    grid.validate();
    if (field.size() != grid.total_points())
        throw SizeMismatch("boundary_decay_report: field does not match the grid");
    const double cut = 0.9 * grid.half_extent;
    double worst = 0.0;
    for (std::size_t p = 0; p < field.size(); ++p) {
        const auto x = grid.point(p);
        bool outer = false;
        for (double c : x)
            if (std::fabs(c) >= cut) outer = true;
        if (outer) worst = std::max(worst, std::abs(field[p]));
    }
    return worst;
}

} // namespace subdiff
