#include "subdiff/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "subdiff/dd.hpp"
#include "subdiff/gamma.hpp"

namespace subdiff::oracle {

namespace {

// Decimal digits the double-double sum can actually deliver once the
// Gamma-evaluation noise across ~10^3 terms is accounted for.
constexpr double budget_digits = 28.0;

// Composite Gauss-Legendre on [a, b] with fixed panel count; enough for the
// smooth positive integrands of the tail integral.
template <typename F>
double integrate_panels(F&& f, double a, double b, int panels, int nodes) {
    // 16-node rule computed inline (weights via Newton on Legendre P_n).
    static thread_local std::vector<double> xs, ws;
    if (static_cast<int>(xs.size()) != nodes) {
        xs.assign(nodes, 0.0);
        ws.assign(nodes, 0.0);
        for (int i = 0; i < (nodes + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (nodes + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < nodes; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = nodes * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / pp;
                x -= dx;
                if (std::fabs(dx) < 1e-15) break;
            }
            xs[i] = -x;
            xs[nodes - 1 - i] = x;
            ws[i] = ws[nodes - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
    }
    double total = 0.0;
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width, half = 0.5 * width;
        for (int i = 0; i < nodes; ++i)
            total += half * ws[i] * f(mid + half * xs[i]);
    }
    return total;
}

} // namespace

void L1SchemeConfig::validate() const {
    if (steps < 10) throw Error("l1 scheme: need at least 10 steps");
    if (!(t_final > 0.0)) throw Error("l1 scheme: t_final must be positive");
    if (!(rho > 0.0 && rho <= 1.0)) throw Error("l1 scheme: rho must lie in (0, 1]");
}

std::vector<std::complex<double>> l1_solve_mode(double lambda,
                                                std::complex<double> w0,
                                                const L1SchemeConfig& cfg) {
    cfg.validate();
    if (lambda < 0.0) throw Error("l1 scheme: lambda must be nonnegative");

    const int m = cfg.steps;
    const double h = cfg.step();
    const double rho = cfg.rho;

    // Caputo weights b_j = (j+1)^{1-rho} - j^{1-rho}.
    std::vector<double> b(m);
    for (int j = 0; j < m; ++j)
        b[j] = std::pow(j + 1.0, 1.0 - rho) - std::pow(static_cast<double>(j), 1.0 - rho);

    const double c = std::pow(h, -rho) / gamma_fn(2.0 - rho);

    std::vector<std::complex<double>> w(m + 1);
    std::vector<std::complex<double>> diff(m + 1); // diff[n] = w_n - w_{n-1}
    w[0] = w0;
    for (int n = 1; n <= m; ++n) {
        // c * sum_{j=0}^{n-1} b_j (w_{n-j} - w_{n-j-1}) + lambda w_n = 0
        std::complex<double> hist(0.0, 0.0);
        for (int j = 1; j < n; ++j) hist += b[j] * diff[n - j];
        w[n] = (c * (w[n - 1] - hist)) / (c + lambda);
        diff[n] = w[n] - w[n - 1];
    }
    return w;
}

double highprec_feasible_z(double rho, int digits) {
    const double nats = (budget_digits - digits) * std::log(10.0);
    if (nats <= 0.0) return 0.0;
    return std::pow(nats, rho);
}

HighPrecResult ml_series_highprec(double rho, double z, int digits) {
    if (!(rho > 0.0 && rho <= 1.0)) throw Error("highprec series: rho in (0, 1]");
    if (z > 0.0) throw Error("highprec series: z must be nonpositive");
    if (std::fabs(z) > 30.0) throw Error("highprec series: |z| must not exceed 30");
    if (digits < 1 || digits > 50) throw Error("highprec series: digits in [1, 50]");
    if (z == 0.0) return {1.0, 0.0, 0};

    const double threshold = std::pow(10.0, -digits);

    dd sum = dd(1.0);
    dd zz = dd(1.0);
    double max_mag = 1.0;
    double prev_mag = 1.0;
    bool past_peak = false;
    int k = 1;
    double omitted = 0.0;

    for (;; ++k) {
        if (k > 200000)
            throw PrecisionLoss("highprec series: term budget exhausted");
        zz *= dd(z);
        if (std::fabs(zz.hi) > 1e300)
            throw PrecisionLoss(
                "highprec series: power overflow before convergence");
        const dd arg = dd(rho) * dd(static_cast<double>(k)) + dd(1.0);
        if (arg.hi > 170.0) {
            // Gamma overflows past here; the remaining tail is far below
            // any representable threshold in the feasible region.
            omitted = prev_mag;
            break;
        }
        const dd term = zz / dd_gamma(arg);
        sum += term;
        const double mag = std::fabs(to_double(term));
        max_mag = std::max(max_mag, mag);
        if (mag < prev_mag) past_peak = true;
        if (past_peak && mag < threshold * 1e-3) {
            omitted = mag;
            break;
        }
        prev_mag = mag;
    }

    const double value = to_double(sum);
    const double cancel = max_mag / std::max(std::fabs(value), 1e-300);
    if (std::log10(cancel) > budget_digits - digits)
        throw PrecisionLoss(
            "highprec series: cancellation " + std::to_string(std::log10(cancel)) +
            " digits exceeds the double-double budget for " +
            std::to_string(digits) + " requested digits");

    const double err =
        std::max(omitted, max_mag * std::pow(10.0, -budget_digits));
    return {value, err, k};
}

double verify_lemma4_constants(const std::vector<double>& rho_grid, int m) {
    if (m < 0 || m > 2) throw Error("lemma4: m must be 0, 1 or 2");
    if (rho_grid.empty()) throw Error("lemma4: empty rho grid");

    // Truncation point: e^{-r/2} r^{m+1} < 1e-14.
    double r_max = 2.0 * (14.0 * std::log(10.0));
    for (int i = 0; i < 40; ++i)
        r_max = 2.0 * (14.0 * std::log(10.0) + (m + 1.0) * std::log(r_max));

    double worst = 0.0;
    for (double rho : rho_grid) {
        if (!(rho > 0.0 && rho <= 1.0)) throw Error("lemma4: rho grid out of (0, 1]");
        const double expo = m - 1.0 + 2.0 * rho;
        auto f = [expo](double r) { return std::exp(-0.5 * r) * std::pow(r, expo); };
        const double coarse = integrate_panels(f, 1.0, r_max, 24, 16);
        const double fine = integrate_panels(f, 1.0, r_max, 48, 16);
        if (std::fabs(fine - coarse) > 1e-10 * std::max(1.0, std::fabs(fine)))
            throw QuadratureNotConverged(
                "lemma4: panel refinement did not settle at rho = " +
                std::to_string(rho));
        worst = std::max(worst, fine);
    }
    return worst;
}

} // namespace subdiff::oracle
