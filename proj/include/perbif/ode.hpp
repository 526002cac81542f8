#pragma once

#include <stdexcept>

namespace perbif {

/// Parameters of the family u'' = mu (u - |u|^{q-1} u) with period T.
struct ProblemParams {
    double q;   ///< nonlinearity exponent, > 1
    double mu;  ///< coefficient of the restoring force, > 0
    double T;   ///< period, > 0

    ProblemParams(double q_, double mu_, double T_) : q(q_), mu(mu_), T(T_) {
        if (!(q > 1.0)) throw std::invalid_argument("ProblemParams: q must exceed 1");
        if (!(mu > 0.0)) throw std::invalid_argument("ProblemParams: mu must be positive");
        if (!(T > 0.0)) throw std::invalid_argument("ProblemParams: T must be positive");
    }
};

/// A point (u, u') of the planar phase space.
struct PhasePoint {
    double u = 0.0;
    double v = 0.0;
};

/// Closed-form data of the zero-energy orbit u(t) = A cosh(B t)^C and of the center (1, 0).
struct HomoclinicData {
    double amplitude;          ///< A = ((q+1)/2)^{1/(q-1)}, in (1, sqrt(e))
    double decay_rate;         ///< B = (q-1) sqrt(mu) / 2
    double exponent;           ///< C = -2/(q-1)
    double center_energy;      ///< H(1, 0) = mu (1/(q+1) - 1/2) < 0
    double homoclinic_energy;  ///< 0
};

/// Odd power |u|^{q-1} u, the globally C^1 extension of u^q.
double odd_power(double u, double q);

/// First-order system (u', v') = (v, mu (u - |u|^{q-1} u)).
PhasePoint vector_field(const ProblemParams& p, const PhasePoint& x);

/// d/du of the force term: mu (1 - q |u|^{q-1}).
double force_derivative(const ProblemParams& p, double u);

/// Potential V(u) = mu (u^{q+1}/(q+1) - u^2/2) for u >= 0, so V' = mu (u^q - u).
double potential(const ProblemParams& p, double u);

/// First integral H(u, v) = v^2/2 + V(u) for u >= 0.
double energy(const ProblemParams& p, const PhasePoint& x);

/// Sup-norm bound A_q = ((q+1)/2)^{1/(q-1)} on positive periodic solutions.
double amplitude_bound(const ProblemParams& p);

/// Energy of the center equilibrium (1, 0).
double center_energy(const ProblemParams& p);

HomoclinicData homoclinic_data(const ProblemParams& p);

/// Value of the zero-energy solution A cosh(B t)^C; evaluated through logs so
/// large |B t| and q near 1 do not overflow.
double homoclinic_solution(const ProblemParams& p, double t);
double homoclinic_derivative(const ProblemParams& p, double t);
double homoclinic_second_derivative(const ProblemParams& p, double t);

/// Strict interior test: 0 < u < A_q and H(u, v) < 0.
bool in_invariant_region(const ProblemParams& p, const PhasePoint& x);

}  // namespace perbif
