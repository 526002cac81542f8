#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "perbif/ode.hpp"

namespace perbif {

/// 2x2 matrix, used for flow derivatives.
struct Mat2 {
    double a11 = 1.0, a12 = 0.0;
    double a21 = 0.0, a22 = 1.0;
};

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    bool dense_output = false;
    long max_steps = 10'000'000;

    void validate() const;
};

/// Result of one integration: states at the accepted step times, optionally the
/// 2x2 flow derivative at those times, and optionally a piecewise-polynomial
/// continuous extension evaluable anywhere in [t_begin, t_end].
class Trajectory {
  public:
    const std::vector<double>& times() const { return times_; }
    std::size_t size() const { return times_.size(); }
    double t_begin() const { return times_.front(); }
    double t_end() const { return times_.back(); }

    PhasePoint state(std::size_t i) const;
    PhasePoint last_state() const { return state(size() - 1); }
    bool has_sensitivity() const { return dim_ == 6; }
    Mat2 sensitivity(std::size_t i) const;
    Mat2 last_sensitivity() const { return sensitivity(size() - 1); }

    bool has_dense() const { return !dense_.empty(); }
    PhasePoint state_at(double t) const;
    Mat2 sensitivity_at(double t) const;

  private:
    friend class DopriStepper;
    int dim_ = 2;
    std::vector<double> times_;
    std::vector<double> states_;  // dim_ values per node
    // Per accepted step: 5 interpolation coefficient vectors of length dim_.
    std::vector<double> dense_;
    std::vector<double> dense_t_;  // left endpoint per step
    std::vector<double> dense_h_;

    std::vector<double> eval_dense(double t) const;
};

/// Integrates the planar system from x0 over [t0, t1], t1 > t0, with an
/// embedded Dormand-Prince 5(4) pair. Deterministic: identical inputs give
/// identical trajectories.
Trajectory integrate(const ProblemParams& p, const PhasePoint& x0, double t0, double t1,
                     const IntegratorConfig& cfg = {});

/// Same, with the variational system integrated jointly (6 coupled equations);
/// the sensitivity starts at the identity at t0.
Trajectory integrate_with_variational(const ProblemParams& p, const PhasePoint& x0, double t0,
                                      double t1, const IntegratorConfig& cfg = {});

}  // namespace perbif
