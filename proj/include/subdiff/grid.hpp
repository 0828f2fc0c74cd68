#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "subdiff/errors.hpp"
#include "subdiff/symbol.hpp"

namespace subdiff {

// Uniform periodic grid on [-L, L]^N with n points per axis (n a power of
// two).  Physical nodes x_j = -L + 2L j/n; frequency lattice xi_k = k pi/L
// for k in [-n/2, n/2).
struct GridSpec {
    int dim = 1;
    double half_extent = 10.0; // L
    int points_per_axis = 64;  // n

    void validate() const;
    std::size_t total_points() const;
    double dx() const { return 2.0 * half_extent / points_per_axis; }
    double dxi() const { return M_PI / half_extent; }

    // DFT index p (0..n-1) -> signed lattice index k in [-n/2, n/2)
    int freq_index(int p) const {
        return p < points_per_axis / 2 ? p : p - points_per_axis;
    }

    void unflatten(std::size_t flat, std::span<int> idx) const;
    std::vector<double> point(std::size_t flat) const;
    std::vector<double> xi(std::size_t flat) const;
    double xi_norm2(std::size_t flat) const;
    // true when some axis sits at the extreme lattice index -n/2
    bool on_frequency_boundary(std::size_t flat) const;
};

// Fourier coefficients of a field on the grid, in DFT layout, following the
// convention u_hat(xi) = (2 pi)^{-N} integral u(x) e^{-i x xi} dx.
struct SpectralField {
    GridSpec grid;
    std::vector<std::complex<double>> coeffs;
};

SpectralField transform_forward(std::span<const std::complex<double>> samples,
                                const GridSpec& grid);
SpectralField transform_forward_real(std::span<const double> samples,
                                     const GridSpec& grid);
std::vector<std::complex<double>> transform_inverse(const SpectralField& field);

// Discrete L2 norms; Parseval holds between the two within roundoff.
double l2_norm_physical(std::span<const std::complex<double>> samples,
                        const GridSpec& grid);
double l2_norm_spectral(const SpectralField& field);

// Physical-space samples of analytic initial data (gaussian kind), or the
// stored samples for the grid_samples kind.
std::vector<std::complex<double>> sample_physical(const InitialData& phi,
                                                  const GridSpec& grid);

// Fourier coefficients of the initial data on the grid's lattice: analytic
// closed form for gaussians, DFT of samples otherwise.
SpectralField initial_spectrum(const InitialData& phi, const GridSpec& grid);

} // namespace subdiff
