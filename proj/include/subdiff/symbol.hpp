#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subdiff/errors.hpp"

namespace subdiff {

struct GridSpec; // grid.hpp

// alpha = (alpha_1, ..., alpha_N), all nonnegative.
struct MultiIndex {
    std::vector<int> entries;

    int total_degree() const;
    bool operator==(const MultiIndex& o) const { return entries == o.entries; }
};

// A(xi) = sum_{|alpha| = m} a_alpha xi^alpha, homogeneous of even order m,
// positive away from the origin.
struct EllipticSymbol {
    int dim = 1;
    int order = 2; // m = 2l
    std::vector<std::pair<MultiIndex, double>> terms;

    void validate() const; // structural checks; positivity is sampled separately
    static EllipticSymbol laplacian(int dim);
};

double symbol_eval(const EllipticSymbol& sym, std::span<const double> xi);

// A(xi)^sigma for sigma in (0, 1]; equals symbol_eval at sigma = 1.
double symbol_power(const EllipticSymbol& sym, double sigma,
                    std::span<const double> xi);

// Minimum of A over quasi-uniform unit-sphere samples; positive value
// certifies ellipticity up to sampling resolution, otherwise NotElliptic.
double check_ellipticity(const EllipticSymbol& sym, int n_samples,
                         std::uint64_t seed = 1);

// Initial data for the forward problems.
struct InitialData {
    enum class Kind { gaussian, grid_samples, fourier_coeffs };

    Kind kind = Kind::gaussian;
    double tau = 1.0; // Sobolev smoothness exponent; solvers warn if tau <= N/2

    // gaussian: amplitude * exp(-|x - center|^2 / (2 width^2))
    std::vector<double> center;
    double width = 1.0;
    double amplitude = 1.0;

    // grid_samples / fourier_coeffs, stored in the grid's flat layout
    std::vector<std::complex<double>> values;

    static InitialData gaussian(std::vector<double> center, double width,
                                double amplitude = 1.0, double tau = 1.0);
    static InitialData samples(std::vector<std::complex<double>> values,
                               double tau = 1.0);
    static InitialData coeffs(std::vector<std::complex<double>> values,
                              double tau = 1.0);
};

// Discrete L2^a Sobolev norm via the frequency lattice, normalized so that
// a = 0 reproduces the physical L2 norm.  Throws GridTooCoarse when the
// integrand has not decayed at the lattice boundary.
double sobolev_norm(const InitialData& phi, double a, const GridSpec& grid);

// External text format: one term per line, "alpha_1 ... alpha_N coefficient".
EllipticSymbol parse_symbol(std::istream& in);
EllipticSymbol parse_symbol_file(const std::string& path);
std::string symbol_to_text(const EllipticSymbol& sym);
std::uint64_t symbol_hash(const EllipticSymbol& sym); // FNV-1a of the text form

} // namespace subdiff
