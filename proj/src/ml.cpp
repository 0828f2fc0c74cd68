#include "subdiff/ml.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <vector>

#include "subdiff/dd.hpp"
#include "subdiff/gamma.hpp"

namespace subdiff {

namespace {

// Effective machine epsilon of the compensated series including the
// accumulated Gamma/exp noise; used for the cancellation floor.
constexpr double series_noise = 5e-29;

struct series_out {
    double value;
    double err;
};

// Sum E_rho(z) = sum_k z^k / Gamma(rho k + 1) with double-double terms.
// Terms are formed as exp(k ln|z| - lgamma(rho k + 1)) so intermediate
// magnitudes never overflow even when individual factors would.
series_out sum_series(double rho, double z, double tol, int max_terms) {
    if (z == 0.0) return {1.0, 0.0};

    const dd ln_az = dd_log(dd(std::fabs(z)));
    const bool negative = z < 0.0;

    dd sum = dd(1.0); // k = 0 term
    double max_mag = 1.0;
    double prev_mag = 1.0;
    bool past_peak = false;

    for (int k = 1; k <= max_terms; ++k) {
        const dd arg = dd(rho) * dd(static_cast<double>(k)) + dd(1.0);
        const dd ln_term = dd(static_cast<double>(k)) * ln_az - dd_lgamma(arg);
        if (ln_term.hi > 700.0)
            throw NonConvergent(
                "mittag-leffler series: term overflow, |z| too large for the "
                "series regime at rho = " + std::to_string(rho));
        dd term = dd_exp(ln_term);
        if (negative && (k & 1)) term = -term;

        sum += term;
        const double mag = std::fabs(to_double(term));
        max_mag = std::max(max_mag, mag);
        if (mag < prev_mag) past_peak = true;

        const double scale = std::max(std::fabs(to_double(sum)), 1e-300);
        if (past_peak && (mag < 0.01 * tol * scale || mag < 1e-33 * max_mag)) {
            const double err = std::max(mag, max_mag * series_noise);
            return {to_double(sum), err};
        }
        prev_mag = mag;
    }
    throw NonConvergent(
        "mittag-leffler series: max_terms exceeded, |z| too large for the "
        "series regime");
}

// E_rho(-t) ~ sum_{k>=1} (-1)^{k+1} t^{-k} / Gamma(1 - rho k), truncated at
// the smallest term of the envelope t^{-k} Gamma(rho k) / pi.
series_out sum_asymptotic(double rho, double t, double tol) {
    const double tinv = 1.0 / t;
    double p = 1.0;       // t^{-k}
    double sum = 0.0;
    double env_prev = std::numeric_limits<double>::infinity();
    const int kmax = static_cast<int>(170.0 / rho) + 2;

    for (int k = 1; k <= kmax; ++k) {
        p *= tinv;
        const double x = rho * k;
        if (x > 170.0) return {sum, env_prev}; // Gamma overflow; tail negligible
        const double env = gamma_fn(x) * p / M_PI;
        if (k > 1 && env >= env_prev) return {sum, env}; // smallest term reached
        const double term = p * reciprocal_gamma(1.0 - x);
        sum += (k & 1) ? term : -term;
        env_prev = env;
        if (env < 0.01 * tol * std::fabs(sum) && k > 2) return {sum, env};
    }
    return {sum, env_prev};
}

// --- Gauss-Legendre nodes on [-1, 1], cached per node count. ---

struct gl_rule {
    std::vector<double> x, w;
};

const gl_rule& gauss_legendre(int n) {
    thread_local std::map<int, gl_rule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    gl_rule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

} // namespace

std::string regime_name(MLRegime r) {
    switch (r) {
        case MLRegime::series: return "series";
        case MLRegime::asymptotic: return "asymptotic";
        case MLRegime::hankel: return "hankel";
        case MLRegime::exponential: return "exponential";
    }
    return "unknown";
}

void MLParams::validate() const {
    if (!(rho > 0.0 && rho <= 1.0))
        throw InvalidOrder("rho must lie in (0, 1], got " + std::to_string(rho));
    if (!(series_tol > 0.0)) throw Error("series_tol must be positive");
    if (max_terms < 1) throw Error("max_terms must be >= 1");
    if (!(crossover > 0.0)) throw Error("crossover must be positive");
    if (!std::isfinite(z)) throw Error("z must be finite");
}

double series_stable_crossover(double rho) { return std::pow(36.0, rho); }

MLResult eval_ml(const MLParams& params) {
    params.validate();

    if (params.rho == 1.0) {
        const double v = std::exp(params.z);
        return {v, MLRegime::exponential, std::fabs(v) * 1e-16};
    }

    if (std::fabs(params.z) < params.crossover) {
        const series_out s =
            sum_series(params.rho, params.z, params.series_tol, params.max_terms);
        return {s.value, MLRegime::series, s.err};
    }

    if (params.z > 0.0)
        throw NonConvergent(
            "eval_ml: positive argument beyond the series range is unsupported");

    const series_out s = sum_asymptotic(params.rho, -params.z, params.series_tol);
    return {s.value, MLRegime::asymptotic, s.err};
}

MLResult eval_ml_neg(double rho, double lambda, double t) {
    if (!(lambda > 0.0)) throw Error("eval_ml_neg: lambda must be positive");
    if (!(t > 0.0)) throw Error("eval_ml_neg: t must be positive");

    MLParams p;
    p.rho = rho;
    p.z = -lambda * std::pow(t, rho);
    p.series_tol = 1e-12;
    p.max_terms = 20000;
    p.crossover = series_stable_crossover(rho);
    return eval_ml(p);
}

HankelContour HankelContour::for_order(double rho, double tol) {
    HankelContour c;
    c.beta = 0.75 * M_PI * rho;
    // Solve e^{-u/2} u^{1+rho} = tol/10 for the cutoff in the u = |zeta|^{1/rho}
    // variable, then map back to the zeta plane.
    double u = 2.0 * std::log(10.0 / tol) + 20.0;
    for (int i = 0; i < 60; ++i)
        u = 2.0 * (std::log(10.0 / tol) + (1.0 + rho) * std::log(u));
    c.ray_cutoff = std::pow(u, rho);
    return c;
}

void HankelContour::validate() const {
    if (!(beta > 0.0 && beta < M_PI)) throw ContourError("beta must lie in (0, pi)");
    if (radius != 1.0) throw ContourError("the representation requires radius = 1");
    if (!(ray_cutoff > radius)) throw ContourError("ray_cutoff must exceed the radius");
    if (n_arc < 2 || n_ray < 2) throw ContourError("need at least 2 nodes per piece");
}

double hankel_f1(double rho, double s) {
    return reciprocal_gamma(1.0 - rho) / s;
}

double hankel_f2(double rho, double s, const HankelContour& contour,
                 double* err_estimate) {
    contour.validate();
    if (std::fabs(contour.beta - 0.75 * M_PI * rho) > 1e-9)
        throw ContourError("hankel contour requires beta = 3*pi*rho/4");

    const double beta = contour.beta;
    const double u_max = std::pow(contour.ray_cutoff, 1.0 / rho);

    // Spec-form tail bound of the truncated rays.
    const double ln_tail =
        -0.5 * u_max + (1.0 / rho + 1.0) * std::log(contour.ray_cutoff);
    const double tail = std::exp(ln_tail);

    const std::complex<double> i_unit(0.0, 1.0);
    const std::complex<double> e_ib = std::polar(1.0, beta);
    // exp(i * 3pi/4), the direction of zeta^{1/rho} on the upper ray
    const std::complex<double> dir(-M_SQRT1_2, M_SQRT1_2);

    double mass = 0.0;

    // Ray part: substitute u = |zeta|^{1/rho} so the exponential decays at a
    // uniform rate e^{-u/sqrt(2)} for every rho.
    const gl_rule& ray_rule = gauss_legendre(contour.n_ray);
    double ray_sum = 0.0;
    const double panel_width = 8.0;
    for (double u0 = 1.0; u0 < u_max; u0 += panel_width) {
        const double u1 = std::min(u0 + panel_width, u_max);
        const double mid = 0.5 * (u0 + u1), half = 0.5 * (u1 - u0);
        for (int i = 0; i < contour.n_ray; ++i) {
            const double u = mid + half * ray_rule.x[i];
            const std::complex<double> zeta = std::pow(u, rho) * e_ib;
            const std::complex<double> w =
                std::exp(u * dir) * (zeta / (zeta + s)) * e_ib;
            const double f = w.imag() * rho * std::pow(u, rho - 1.0);
            ray_sum += half * ray_rule.w[i] * f;
            mass += half * ray_rule.w[i] * std::abs(f);
        }
    }

    // Arc part: Re[e^{e^{i theta/rho}} e^{2 i theta} / (e^{i theta} + s)].
    const gl_rule& arc_rule = gauss_legendre(contour.n_arc);
    double arc_sum = 0.0;
    {
        const double mid = 0.5 * beta, half = 0.5 * beta;
        for (int i = 0; i < contour.n_arc; ++i) {
            const double theta = mid + half * arc_rule.x[i];
            const std::complex<double> eit = std::polar(1.0, theta);
            const std::complex<double> a =
                std::exp(std::polar(1.0, theta / rho)) * eit * eit / (eit + s);
            arc_sum += half * arc_rule.w[i] * a.real();
            mass += half * arc_rule.w[i] * std::abs(a.real());
        }
    }

    const double scale = 1.0 / (M_PI * rho * s);
    if (err_estimate) *err_estimate = scale * (tail + mass * 1e-14);
    return -scale * (ray_sum + arc_sum);
}

MLResult eval_hankel(const MLParams& params, const HankelContour& contour,
                     double lambda, double t) {
    params.validate();
    if (!(lambda > 0.0) || !(t > 0.0))
        throw Error("eval_hankel: lambda and t must be positive");

    const double rho = params.rho;
    const double s = lambda * std::pow(t, rho);

    const double u_max = std::pow(contour.ray_cutoff, 1.0 / rho);
    const double ln_tail =
        -0.5 * u_max + (1.0 / rho + 1.0) * std::log(contour.ray_cutoff);
    if (ln_tail > std::log(params.series_tol))
        throw ContourError(
            "hankel ray cutoff too small: truncation estimate exceeds series_tol");

    double quad_err = 0.0;
    const double f2 = hankel_f2(rho, s, contour, &quad_err);
    const double f1 = hankel_f1(rho, s);
    return {f1 + f2, MLRegime::hankel, quad_err};
}

double ml_drho(double rho, double lambda, double t, double h) {
    if (!(h > 0.0)) throw Error("ml_drho: h must be positive");
    if (rho + h >= 1.0)
        throw StepTooLarge("ml_drho: rho + h reaches the rho = 1 boundary");
    if (rho - h <= 1e-3)
        throw StepTooLarge("ml_drho: rho - h leaves the supported order range");
    const double up = eval_ml_neg(rho + h, lambda, t).value;
    const double dn = eval_ml_neg(rho - h, lambda, t).value;
    return (up - dn) / (2.0 * h);
}

} // namespace subdiff
