#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace perbif::gridfn {

/// Mean of samples on a uniform periodic grid; times the period this is the
/// trapezoidal integral, which converges spectrally for smooth periodic data.
double periodic_mean(const std::vector<double>& f);

/// In-place radix-2 complex FFT (size must be a power of two).
void fft(std::vector<std::complex<double>>& a, bool inverse);

/// Derivative of a smooth periodic function sampled uniformly over one period,
/// computed in Fourier space. Size must be a power of two.
std::vector<double> spectral_derivative(const std::vector<double>& f, double period);

/// Periodic cubic Hermite interpolation from uniform samples of a function and
/// its derivative. t may be any real number; it is folded into [0, period).
double hermite_value(const std::vector<double>& f, const std::vector<double>& df,
                     double period, double t);
double hermite_derivative(const std::vector<double>& f, const std::vector<double>& df,
                          double period, double t);

bool is_power_of_two(std::size_t n);

}  // namespace perbif::gridfn
