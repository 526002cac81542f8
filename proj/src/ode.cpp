#include "perbif/ode.hpp"

#include <cmath>

namespace perbif {

double odd_power(double u, double q) {
    if (u == 0.0) return 0.0;
    return std::pow(std::abs(u), q - 1.0) * u;
}

PhasePoint vector_field(const ProblemParams& p, const PhasePoint& x) {
    return {x.v, p.mu * (x.u - odd_power(x.u, p.q))};
}

double force_derivative(const ProblemParams& p, double u) {
    return p.mu * (1.0 - p.q * std::pow(std::abs(u), p.q - 1.0));
}

double potential(const ProblemParams& p, double u) {
    if (u < 0.0) throw std::domain_error("potential: u must be nonnegative");
    return p.mu * (std::pow(u, p.q + 1.0) / (p.q + 1.0) - 0.5 * u * u);
}

double energy(const ProblemParams& p, const PhasePoint& x) {
    return 0.5 * x.v * x.v + potential(p, x.u);
}

double amplitude_bound(const ProblemParams& p) {
    // exp(log1p((q-1)/2)/(q-1)) stays accurate as q -> 1+, where A_q -> sqrt(e).
    return std::exp(std::log1p(0.5 * (p.q - 1.0)) / (p.q - 1.0));
}

double center_energy(const ProblemParams& p) {
    return p.mu * (1.0 / (p.q + 1.0) - 0.5);
}

HomoclinicData homoclinic_data(const ProblemParams& p) {
    return {amplitude_bound(p), 0.5 * (p.q - 1.0) * std::sqrt(p.mu), -2.0 / (p.q - 1.0),
            center_energy(p), 0.0};
}

namespace {

// log cosh(x) without overflow.
double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace

double homoclinic_solution(const ProblemParams& p, double t) {
    const HomoclinicData h = homoclinic_data(p);
    return std::exp(std::log(h.amplitude) + h.exponent * log_cosh(h.decay_rate * t));
}

double homoclinic_derivative(const ProblemParams& p, double t) {
    const HomoclinicData h = homoclinic_data(p);
    return h.exponent * h.decay_rate * std::tanh(h.decay_rate * t) * homoclinic_solution(p, t);
}

double homoclinic_second_derivative(const ProblemParams& p, double t) {
    const HomoclinicData h = homoclinic_data(p);
    const double th = std::tanh(h.decay_rate * t);
    const double sech2 = (1.0 - th) * (1.0 + th);
    const double B2 = h.decay_rate * h.decay_rate;
    return homoclinic_solution(p, t) * B2 *
           (h.exponent * sech2 + h.exponent * h.exponent * th * th);
}

bool in_invariant_region(const ProblemParams& p, const PhasePoint& x) {
    if (!(x.u > 0.0) || !(x.u < amplitude_bound(p))) return false;
    return energy(p, x) < 0.0;
}

}  // namespace perbif
