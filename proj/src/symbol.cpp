#include "subdiff/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "subdiff/grid.hpp"

namespace subdiff {

int MultiIndex::total_degree() const {
    int d = 0;
    for (int e : entries) d += e;
    return d;
}

void EllipticSymbol::validate() const {
    if (dim < 1) throw Error("symbol: dimension must be >= 1");
    if (order < 2 || order % 2 != 0)
        throw Error("symbol: order must be an even integer >= 2");
    if (terms.empty()) throw Error("symbol: no terms");
    for (const auto& [alpha, coeff] : terms) {
        (void)coeff;
        if (static_cast<int>(alpha.entries.size()) != dim)
            throw DimensionMismatch("symbol: multi-index length != dim");
        for (int e : alpha.entries)
            if (e < 0) throw Error("symbol: negative multi-index entry");
        if (alpha.total_degree() != order)
            throw Error("symbol: term of degree " +
                        std::to_string(alpha.total_degree()) +
                        " breaks homogeneity of order " + std::to_string(order));
    }
}

EllipticSymbol EllipticSymbol::laplacian(int dim) {
    EllipticSymbol s;
    s.dim = dim;
    s.order = 2;
    for (int j = 0; j < dim; ++j) {
        MultiIndex alpha;
        alpha.entries.assign(dim, 0);
        alpha.entries[j] = 2;
        s.terms.emplace_back(std::move(alpha), 1.0);
    }
    return s;
}

double symbol_eval(const EllipticSymbol& sym, std::span<const double> xi) {
    if (static_cast<int>(xi.size()) != sym.dim)
        throw DimensionMismatch("symbol_eval: xi has length " +
                                std::to_string(xi.size()) + ", expected " +
                                std::to_string(sym.dim));
    double total = 0.0;
    for (const auto& [alpha, coeff] : sym.terms) {
        double mono = coeff;
        for (int j = 0; j < sym.dim; ++j) {
            for (int p = 0; p < alpha.entries[j]; ++p) mono *= xi[j];
        }
        total += mono;
    }
    return total;
}

double symbol_power(const EllipticSymbol& sym, double sigma,
                    std::span<const double> xi) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw Error("symbol_power: sigma must lie in (0, 1]");
    const double a = symbol_eval(sym, xi);
    if (sigma == 1.0) return a;
    return std::pow(a, sigma);
}

namespace {

std::vector<std::vector<double>> sphere_samples(int dim, int n, std::uint64_t seed) {
    std::vector<std::vector<double>> pts;
    pts.reserve(n);
    if (dim == 1) {
        pts.push_back({1.0});
        pts.push_back({-1.0});
    } else if (dim == 2) {
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * M_PI * i / n;
            pts.push_back({std::cos(th), std::sin(th)});
        }
    } else if (dim == 3) {
        // Fibonacci lattice
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        for (int i = 0; i < n; ++i) {
            const double z = 1.0 - 2.0 * (i + 0.5) / n;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double th = 2.0 * M_PI * i / golden;
            pts.push_back({r * std::cos(th), r * std::sin(th), z});
        }
    } else {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < n; ++i) {
            std::vector<double> v(dim);
            double norm2 = 0.0;
            do {
                norm2 = 0.0;
                for (auto& c : v) {
                    c = gauss(rng);
                    norm2 += c * c;
                }
            } while (norm2 < 1e-12);
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : v) c *= inv;
            pts.push_back(std::move(v));
        }
    }
    return pts;
}

} // namespace

double check_ellipticity(const EllipticSymbol& sym, int n_samples,
                         std::uint64_t seed) {
    sym.validate();
    if (n_samples < 100) throw Error("check_ellipticity: need >= 100 samples");
    double min_val = std::numeric_limits<double>::infinity();
    for (const auto& pt : sphere_samples(sym.dim, n_samples, seed))
        min_val = std::min(min_val, symbol_eval(sym, pt));
    if (!(min_val > 0.0))
        throw NotElliptic("symbol minimum on the unit sphere is " +
                          std::to_string(min_val));
    return min_val;
}

InitialData InitialData::gaussian(std::vector<double> center, double width,
                                  double amplitude, double tau) {
    if (!(width > 0.0)) throw Error("gaussian initial data: width must be positive");
    InitialData d;
    d.kind = Kind::gaussian;
    d.center = std::move(center);
    d.width = width;
    d.amplitude = amplitude;
    d.tau = tau;
    return d;
}

InitialData InitialData::samples(std::vector<std::complex<double>> values, double tau) {
    InitialData d;
    d.kind = Kind::grid_samples;
    d.values = std::move(values);
    d.tau = tau;
    return d;
}

InitialData InitialData::coeffs(std::vector<std::complex<double>> values, double tau) {
    InitialData d;
    d.kind = Kind::fourier_coeffs;
    d.values = std::move(values);
    d.tau = tau;
    return d;
}

double sobolev_norm(const InitialData& phi, double a, const GridSpec& grid) {
    const SpectralField hat = initial_spectrum(phi, grid);
    const double cell = std::pow(grid.dxi(), grid.dim);
    const double two_pi_n = std::pow(2.0 * M_PI, grid.dim);

    double total = 0.0;
    double boundary_max = 0.0;
    const std::size_t n_total = grid.total_points();
    for (std::size_t p = 0; p < n_total; ++p) {
        const double w = std::pow(1.0 + grid.xi_norm2(p), a);
        const double integrand = w * std::norm(hat.coeffs[p]);
        total += integrand;
        if (grid.on_frequency_boundary(p))
            boundary_max = std::max(boundary_max, integrand);
    }
    if (total > 0.0 && boundary_max > 1e-8 * total)
        throw GridTooCoarse(
            "sobolev_norm: boundary integrand has not decayed (ratio " +
            std::to_string(boundary_max / total) + ")");
    return std::sqrt(two_pi_n * cell * total);
}

EllipticSymbol parse_symbol(std::istream& in) {
    EllipticSymbol sym;
    sym.terms.clear();
    int dim = -1;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<double> nums;
        double v;
        while (ls >> v) nums.push_back(v);
        if (nums.empty()) continue;
        if (nums.size() < 2)
            throw IOError("symbol file: line needs alpha entries plus a coefficient");
        if (dim < 0) dim = static_cast<int>(nums.size()) - 1;
        if (static_cast<int>(nums.size()) != dim + 1)
            throw IOError("symbol file: inconsistent entry count across lines");
        MultiIndex alpha;
        for (int j = 0; j < dim; ++j) {
            const double e = nums[j];
            if (e < 0 || e != std::floor(e))
                throw IOError("symbol file: multi-index entries must be nonnegative integers");
            alpha.entries.push_back(static_cast<int>(e));
        }
        sym.terms.emplace_back(std::move(alpha), nums.back());
    }
    if (sym.terms.empty()) throw IOError("symbol file: no terms found");
    sym.dim = dim;
    sym.order = sym.terms.front().first.total_degree();
    sym.validate();
    return sym;
}

EllipticSymbol parse_symbol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open symbol file: " + path);
    return parse_symbol(in);
}

std::string symbol_to_text(const EllipticSymbol& sym) {
    std::ostringstream out;
    for (const auto& [alpha, coeff] : sym.terms) {
        for (int e : alpha.entries) out << e << ' ';
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", coeff);
        out << buf << '\n';
    }
    return out.str();
}

std::uint64_t symbol_hash(const EllipticSymbol& sym) {
    const std::string text = symbol_to_text(sym);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace subdiff
