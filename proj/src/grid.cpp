#include "subdiff/grid.hpp"

#include <algorithm>
#include <cmath>

namespace subdiff {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place radix-2 complex FFT, sign = -1 forward / +1 inverse, unnormalized.
void fft_radix2(std::complex<double>* a, int n, int sign) {
    // bit-reversal permutation
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / len;
        for (int i = 0; i < n; i += len) {
            for (int j = 0; j < len / 2; ++j) {
                const std::complex<double> w =
                    std::polar(1.0, ang * j);
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

// N-dimensional FFT over the flat row-major array.
void fft_nd(std::vector<std::complex<double>>& data, const GridSpec& g, int sign) {
    const int n = g.points_per_axis;
    std::vector<std::complex<double>> line(n);
    std::size_t stride = 1;
    for (int axis = g.dim - 1; axis >= 0; --axis) {
        const std::size_t block = stride * n;
        const std::size_t n_blocks = data.size() / block;
        for (std::size_t b = 0; b < n_blocks; ++b) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t base = b * block + off;
                for (int i = 0; i < n; ++i) line[i] = data[base + i * stride];
                fft_radix2(line.data(), n, sign);
                for (int i = 0; i < n; ++i) data[base + i * stride] = line[i];
            }
        }
        stride *= n;
    }
}

// (-1)^{k_1 + ... + k_N} for the flat DFT index: the phase shift between
// x-origin at -L and the DFT's index origin.
double alternating_sign(const GridSpec& g, std::size_t flat) {
    const int n = g.points_per_axis;
    int parity = 0;
    for (int axis = 0; axis < g.dim; ++axis) {
        parity += static_cast<int>(flat % n);
        flat /= n;
    }
    return (parity & 1) ? -1.0 : 1.0;
}

} // namespace

void GridSpec::validate() const {
    if (dim < 1) throw Error("grid: dim must be >= 1");
    if (!(half_extent > 0.0)) throw Error("grid: half_extent must be positive");
    if (points_per_axis < 8 || !is_power_of_two(points_per_axis))
        throw Error("grid: points_per_axis must be a power of two >= 8");
}

std::size_t GridSpec::total_points() const {
    std::size_t t = 1;
    for (int i = 0; i < dim; ++i) t *= static_cast<std::size_t>(points_per_axis);
    return t;
}

void GridSpec::unflatten(std::size_t flat, std::span<int> idx) const {
    for (int axis = dim - 1; axis >= 0; --axis) {
        idx[axis] = static_cast<int>(flat % points_per_axis);
        flat /= points_per_axis;
    }
}

std::vector<double> GridSpec::point(std::size_t flat) const {
    std::vector<int> idx(dim);
    unflatten(flat, idx);
    std::vector<double> x(dim);
    for (int a = 0; a < dim; ++a) x[a] = -half_extent + dx() * idx[a];
    return x;
}

std::vector<double> GridSpec::xi(std::size_t flat) const {
    std::vector<int> idx(dim);
    unflatten(flat, idx);
    std::vector<double> v(dim);
    for (int a = 0; a < dim; ++a) v[a] = dxi() * freq_index(idx[a]);
    return v;
}

double GridSpec::xi_norm2(std::size_t flat) const {
    std::vector<int> idx(dim);
    unflatten(flat, idx);
    double s = 0.0;
    for (int a = 0; a < dim; ++a) {
        const double c = dxi() * freq_index(idx[a]);
        s += c * c;
    }
    return s;
}

bool GridSpec::on_frequency_boundary(std::size_t flat) const {
    std::vector<int> idx(dim);
    unflatten(flat, idx);
    for (int a = 0; a < dim; ++a)
        if (idx[a] == points_per_axis / 2) return true;
    return false;
}

SpectralField transform_forward(std::span<const std::complex<double>> samples,
                                const GridSpec& grid) {
    grid.validate();
    if (samples.size() != grid.total_points())
        throw SizeMismatch("transform_forward: sample count " +
                           std::to_string(samples.size()) + " != grid size " +
                           std::to_string(grid.total_points()));

    SpectralField field{grid, {samples.begin(), samples.end()}};
    fft_nd(field.coeffs, grid, -1);

    // u_hat(xi_k) = (2 pi)^{-N} (2L/n)^N (-1)^{sum k_a} DFT[u]_k
    const double scale =
        std::pow(grid.half_extent / (M_PI * grid.points_per_axis), grid.dim);
    for (std::size_t p = 0; p < field.coeffs.size(); ++p)
        field.coeffs[p] *= scale * alternating_sign(grid, p);
    return field;
}

SpectralField transform_forward_real(std::span<const double> samples,
                                     const GridSpec& grid) {
    std::vector<std::complex<double>> c(samples.size());
    std::transform(samples.begin(), samples.end(), c.begin(),
                   [](double v) { return std::complex<double>(v, 0.0); });
    return transform_forward(c, grid);
}

std::vector<std::complex<double>> transform_inverse(const SpectralField& field) {
    const GridSpec& grid = field.grid;
    grid.validate();
    if (field.coeffs.size() != grid.total_points())
        throw SizeMismatch("transform_inverse: coefficient count mismatch");

    std::vector<std::complex<double>> data(field.coeffs.size());
    const double scale = std::pow(grid.dxi(), grid.dim);
    for (std::size_t p = 0; p < data.size(); ++p)
        data[p] = field.coeffs[p] * (scale * alternating_sign(grid, p));
    fft_nd(data, grid, +1);
    return data;
}

double l2_norm_physical(std::span<const std::complex<double>> samples,
                        const GridSpec& grid) {
    double s = 0.0;
    for (const auto& v : samples) s += std::norm(v);
    return std::sqrt(s * std::pow(grid.dx(), grid.dim));
}

double l2_norm_spectral(const SpectralField& field) {
    double s = 0.0;
    for (const auto& v : field.coeffs) s += std::norm(v);
    const double cell = std::pow(field.grid.dxi(), field.grid.dim);
    return std::sqrt(s * cell * std::pow(2.0 * M_PI, field.grid.dim));
}

std::vector<std::complex<double>> sample_physical(const InitialData& phi,
                                                  const GridSpec& grid) {
    grid.validate();
    const std::size_t n_total = grid.total_points();
    switch (phi.kind) {
        case InitialData::Kind::grid_samples:
            if (phi.values.size() != n_total)
                throw SizeMismatch("initial data samples do not match the grid");
            return phi.values;
        case InitialData::Kind::gaussian: {
            if (static_cast<int>(phi.center.size()) != grid.dim)
                throw DimensionMismatch("gaussian center has wrong dimension");
            std::vector<std::complex<double>> out(n_total);
            const double inv2w2 = 1.0 / (2.0 * phi.width * phi.width);
            for (std::size_t p = 0; p < n_total; ++p) {
                const auto x = grid.point(p);
                double q = 0.0;
                for (int a = 0; a < grid.dim; ++a) {
                    const double dx = x[a] - phi.center[a];
                    q += dx * dx;
                }
                out[p] = phi.amplitude * std::exp(-q * inv2w2);
            }
            return out;
        }
        case InitialData::Kind::fourier_coeffs: {
            if (phi.values.size() != n_total)
                throw SizeMismatch("initial coefficients do not match the grid");
            SpectralField f{grid, phi.values};
            return transform_inverse(f);
        }
    }
    throw Error("unreachable initial-data kind");
}

SpectralField initial_spectrum(const InitialData& phi, const GridSpec& grid) {
    grid.validate();
    const std::size_t n_total = grid.total_points();
    switch (phi.kind) {
        case InitialData::Kind::fourier_coeffs: {
            if (phi.values.size() != n_total)
                throw SizeMismatch("initial coefficients do not match the grid");
            return {grid, phi.values};
        }
        case InitialData::Kind::grid_samples:
            return transform_forward(phi.values, grid);
        case InitialData::Kind::gaussian: {
            if (static_cast<int>(phi.center.size()) != grid.dim)
                throw DimensionMismatch("gaussian center has wrong dimension");
            // hat(phi)(xi) = amplitude (2 pi)^{-N} (w sqrt(2 pi))^N
            //               e^{-w^2 |xi|^2 / 2} e^{-i c xi}
            SpectralField field{grid, std::vector<std::complex<double>>(n_total)};
            const double w2 = phi.width * phi.width;
            const double amp =
                phi.amplitude *
                std::pow(phi.width / std::sqrt(2.0 * M_PI), grid.dim);
            for (std::size_t p = 0; p < n_total; ++p) {
                const auto xi = grid.xi(p);
                double q = 0.0, phase = 0.0;
                for (int a = 0; a < grid.dim; ++a) {
                    q += xi[a] * xi[a];
                    phase -= phi.center[a] * xi[a];
                }
                field.coeffs[p] =
                    amp * std::exp(-0.5 * w2 * q) * std::polar(1.0, phase);
            }
            return field;
        }
    }
    throw Error("unreachable initial-data kind");
}

} // namespace subdiff
