#pragma once

#include <optional>
#include <vector>

#include "perbif/ode.hpp"

namespace perbif {

/// Orbit energy, strictly between the center energy and the homoclinic energy 0.
struct EnergyLevel {
    double value;
};

struct TurningPoints {
    double u_minus;  ///< in (0, 1)
    double u_plus;   ///< in (1, A_q)
};

/// Solves V(u) = E on (0, 1) and (1, A_q) by bisection.
TurningPoints turning_points(const ProblemParams& p, EnergyLevel E);

/// Period of the closed orbit at energy E, by quadrature over the level set:
///
///   T(E) = sqrt(2) * integral du / sqrt(E - V(u))  over [u_minus, u_plus].
///
/// The substitution u = m + s sin(theta), m = (u_plus + u_minus)/2,
/// s = (u_plus - u_minus)/2 removes the inverse-square-root endpoint
/// singularities; the transformed integrand extends to a smooth function that
/// is even about both endpoints, so uniform-node trapezoid sums converge
/// spectrally. Nodes are doubled until successive estimates agree to 1e-12
/// relative; throws QuadratureError past the node cap.
double period(const ProblemParams& p, EnergyLevel E);

/// Energy sweep used for counting and for bracketing target periods.
struct PeriodScan {
    std::vector<double> energies;  ///< increasing, inside (E_center, 0)
    std::vector<double> periods;
    double min_period;
    /// Diagnostic only: false if a decreasing pair of samples was observed.
    /// Monotonicity of T(E) is not assumed anywhere.
    bool monotone;
};

PeriodScan scan_periods(const ProblemParams& p);

/// Finds an orbit with period T_target: scans T(E) over the energy grid and
/// refines the first bracketed crossing by bisection to |T(E) - T_target| <
/// 1e-10. Returns nullopt when every scanned period is >= T_target.
std::optional<EnergyLevel> orbit_for_period(const ProblemParams& p, double T_target);

}  // namespace perbif
