#include "perbif/gridfn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perbif::gridfn {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

double periodic_mean(const std::vector<double>& f) {
    if (f.empty()) throw std::invalid_argument("periodic_mean: empty grid");
    double acc = 0.0;
    for (double x : f) acc += x;
    return acc / static_cast<double>(f.size());
}

void fft(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> x = a[i + j];
                const std::complex<double> y = a[i + j + len / 2] * w;
                a[i + j] = x + y;
                a[i + j + len / 2] = x - y;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (auto& x : a) x /= static_cast<double>(n);
    }
}

std::vector<double> spectral_derivative(const std::vector<double>& f, double period) {
    const std::size_t n = f.size();
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("spectral_derivative: size must be a power of two");
    }
    if (!(period > 0.0)) throw std::invalid_argument("spectral_derivative: period must be positive");
    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = f[i];
    fft(a, false);
    const double base = 2.0 * std::numbers::pi / period;
    for (std::size_t i = 0; i < n; ++i) {
        long k = static_cast<long>(i);
        if (i > n / 2) k -= static_cast<long>(n);
        if (i == n / 2) k = 0;  // Nyquist mode carries no derivative information for real data
        a[i] *= std::complex<double>(0.0, base * static_cast<double>(k));
    }
    fft(a, true);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real();
    return out;
}

namespace {

struct Cell {
    std::size_t i0, i1;
    double s;  // local coordinate in [0, 1)
    double h;  // cell width
};

Cell locate(std::size_t n, double period, double t) {
    const double h = period / static_cast<double>(n);
    double x = std::fmod(t, period);
    if (x < 0.0) x += period;
    std::size_t i0 = static_cast<std::size_t>(std::floor(x / h));
    if (i0 >= n) i0 = n - 1;
    return {i0, (i0 + 1) % n, x / h - static_cast<double>(i0), h};
}

}  // namespace

double hermite_value(const std::vector<double>& f, const std::vector<double>& df,
                     double period, double t) {
    if (f.size() != df.size() || f.empty()) {
        throw std::invalid_argument("hermite_value: mismatched sample arrays");
    }
    const Cell c = locate(f.size(), period, t);
    const double s = c.s, s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * f[c.i0] + h10 * c.h * df[c.i0] + h01 * f[c.i1] + h11 * c.h * df[c.i1];
}

double hermite_derivative(const std::vector<double>& f, const std::vector<double>& df,
                          double period, double t) {
    if (f.size() != df.size() || f.empty()) {
        throw std::invalid_argument("hermite_derivative: mismatched sample arrays");
    }
    const Cell c = locate(f.size(), period, t);
    const double s = c.s, s2 = s * s;
    const double d00 = (6 * s2 - 6 * s) / c.h;
    const double d10 = 3 * s2 - 4 * s + 1;
    const double d01 = (-6 * s2 + 6 * s) / c.h;
    const double d11 = 3 * s2 - 2 * s;
    return d00 * f[c.i0] + d10 * df[c.i0] + d01 * f[c.i1] + d11 * df[c.i1];
}

}  // namespace perbif::gridfn
