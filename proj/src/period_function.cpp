#include "perbif/period_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "perbif/errors.hpp"

namespace perbif {

namespace {

void check_energy(const ProblemParams& p, EnergyLevel E) {
    const double ec = center_energy(p);
    if (!(E.value > ec) || !(E.value < 0.0)) {
        throw std::domain_error("turning_points: energy must lie strictly in (E_center, 0)");
    }
}

// Bisection for V(u) = E on [lo, hi], where V - E changes sign.
double bisect_potential(const ProblemParams& p, double E, double lo, double hi, bool rising) {
    // rising: V - E goes from negative to positive as u increases.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double g = potential(p, mid) - E;
        if ((g > 0.0) == rising) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TurningPoints turning_points(const ProblemParams& p, EnergyLevel E) {
    check_energy(p, E);
    const double aq = amplitude_bound(p);
    // V decreases from 0 to E_center on (0, 1) and increases back to 0 on (1, A_q).
    const double um = bisect_potential(p, E.value, 0.0, 1.0, false);
    const double up = bisect_potential(p, E.value, 1.0, aq, true);
    return {um, up};
}

double period(const ProblemParams& p, EnergyLevel E) {
    check_energy(p, E);
    const auto [um, up] = turning_points(p, E);
    const double m = 0.5 * (up + um);
    const double s = 0.5 * (up - um);
    const double half_pi = 0.5 * std::numbers::pi;

    // Analytic endpoint limits: 2 sqrt(s / |V'(u_pm)|).
    const double dvm = p.mu * (std::pow(um, p.q) - um);
    const double dvp = p.mu * (std::pow(up, p.q) - up);
    const double g_lo = 2.0 * std::sqrt(s / std::abs(dvm));
    const double g_hi = 2.0 * std::sqrt(s / std::abs(dvp));

    auto integrand = [&](double theta) {
        const double sn = std::sin(theta);
        const double u = m + s * sn;
        const double d = E.value - potential(p, u);
        if (d <= 0.0) {
            // Roundoff at the very edge of the arc: fall back to the local
            // simple-turning-point form d ~ |V'| s (1 -+ sin theta).
            const double dv = (sn > 0.0) ? dvp : dvm;
            const double dd = std::abs(dv) * s * (1.0 - std::abs(sn));
            if (dd <= 0.0) return (sn > 0.0) ? g_hi : g_lo;
            return std::sqrt(2.0) * s * std::cos(theta) / std::sqrt(dd);
        }
        return std::sqrt(2.0) * s * std::cos(theta) / std::sqrt(d);
    };

    // Trapezoid with node doubling, reusing previous nodes.
    int n = 16;
    double h = (2.0 * half_pi) / n;
    double sum = 0.5 * (g_lo + g_hi);
    for (int j = 1; j < n; ++j) sum += integrand(-half_pi + j * h);
    double estimate = sum * h;
    double previous = 0.0;

    const int cap = 1 << 22;
    for (;;) {
        previous = estimate;
        for (int j = 0; j < n; ++j) sum += integrand(-half_pi + (j + 0.5) * h);
        n *= 2;
        h *= 0.5;
        estimate = sum * h;
        if (std::abs(estimate - previous) < 1e-12 * std::abs(estimate)) return estimate;
        if (n >= cap) {
            throw QuadratureError("period: quadrature did not converge", estimate, previous);
        }
    }
}

PeriodScan scan_periods(const ProblemParams& p) {
    const double ec = center_energy(p);
    // Grid in s = (E - E_center)/(-E_center), refined geometrically toward both
    // the center (s -> 0) and the homoclinic loop (s -> 1), where periods blow
    // up logarithmically.
    std::vector<double> ss;
    for (int i = 1; i <= 64; ++i) ss.push_back(0.1 * std::pow(1e-7 / 0.1, i / 64.0));
    for (int i = 0; i <= 256; ++i) ss.push_back(1.0 - 0.9 * std::pow(1e-10 / 0.9, i / 256.0));
    std::sort(ss.begin(), ss.end());

    PeriodScan scan;
    scan.min_period = std::numeric_limits<double>::infinity();
    scan.monotone = true;
    for (double s : ss) {
        const double E = ec * (1.0 - s);
        const double T = period(p, {E});
        if (!scan.periods.empty() && T < scan.periods.back()) scan.monotone = false;
        scan.energies.push_back(E);
        scan.periods.push_back(T);
        scan.min_period = std::min(scan.min_period, T);
    }
    return scan;
}

std::optional<EnergyLevel> orbit_for_period(const ProblemParams& p, double T_target) {
    if (!(T_target > 0.0)) throw std::invalid_argument("orbit_for_period: period must be positive");
    const PeriodScan scan = scan_periods(p);
    if (scan.min_period >= T_target) return std::nullopt;

    // First bracketed crossing of T(E) = T_target along increasing energy.
    std::size_t i = 0;
    bool found = false;
    for (; i + 1 < scan.periods.size(); ++i) {
        if ((scan.periods[i] - T_target) * (scan.periods[i + 1] - T_target) <= 0.0) {
            found = true;
            break;
        }
    }

    double lo, hi, T_lo;
    if (found) {
        lo = scan.energies[i];
        hi = scan.energies[i + 1];
        T_lo = scan.periods[i];
    } else {
        // Some period fell below the target but the grid never re-crossed it:
        // extend toward the homoclinic end, where periods diverge.
        lo = scan.energies.back();
        T_lo = scan.periods.back();
        double gap = -lo;
        for (;;) {
            gap *= 0.25;
            if (!(gap > 1e-290)) {
                throw SolverError("orbit_for_period: target period beyond representable orbits");
            }
            const double E = -gap;
            const double T = period(p, {E});
            if ((T_lo - T_target) * (T - T_target) <= 0.0) {
                hi = E;
                break;
            }
            lo = E;
            T_lo = T;
        }
    }

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double T = period(p, {mid});
        if (std::abs(T - T_target) < 1e-10) return EnergyLevel{mid};
        if ((T - T_target) * (T_lo - T_target) > 0.0) {
            lo = mid;
            T_lo = T;
        } else {
            hi = mid;
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double T = period(p, {mid});
    if (std::abs(T - T_target) < 1e-10) return EnergyLevel{mid};
    throw SolverError("orbit_for_period: bisection stalled before reaching tolerance");
}

}  // namespace perbif
