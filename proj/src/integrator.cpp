#include "perbif/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "perbif/errors.hpp"

namespace perbif {

void IntegratorConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw std::invalid_argument("IntegratorConfig: tolerances must be positive");
    }
    if (!(max_step > 0.0)) throw std::invalid_argument("IntegratorConfig: max_step must be positive");
    if (max_steps <= 0) throw std::invalid_argument("IntegratorConfig: max_steps must be positive");
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
// Error coefficients b - bhat.
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
// Coefficients of the order-4 continuous extension.
constexpr double D1 = -12715105075.0 / 11282082432.0;
constexpr double D3 = 87487479700.0 / 32700410799.0;
constexpr double D4 = -10690763975.0 / 1880347072.0;
constexpr double D5 = 701980252875.0 / 199316789632.0;
constexpr double D6 = -1453857185.0 / 822651844.0;
constexpr double D7 = 69997945.0 / 29380423.0;

std::string fmt_time(double t) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", t);
    return buf;
}

}  // namespace

PhasePoint Trajectory::state(std::size_t i) const {
    return {states_[i * dim_], states_[i * dim_ + 1]};
}

Mat2 Trajectory::sensitivity(std::size_t i) const {
    if (dim_ != 6) throw std::logic_error("Trajectory: no sensitivity stored");
    const double* s = &states_[i * dim_];
    return {s[2], s[4], s[3], s[5]};
}

std::vector<double> Trajectory::eval_dense(double t) const {
    if (dense_.empty()) throw std::logic_error("Trajectory: dense output not stored");
    if (t < t_begin() - 1e-12 || t > t_end() + 1e-12) {
        throw std::out_of_range("Trajectory: time outside integration span");
    }
    // Locate the step whose interval contains t.
    const auto it = std::upper_bound(dense_t_.begin(), dense_t_.end(), t);
    std::size_t idx = (it == dense_t_.begin()) ? 0 : static_cast<std::size_t>(it - dense_t_.begin()) - 1;
    idx = std::min(idx, dense_t_.size() - 1);
    const double h = dense_h_[idx];
    const double th = std::clamp((t - dense_t_[idx]) / h, 0.0, 1.0);
    const double th1 = 1.0 - th;
    const double* c = &dense_[idx * 5 * dim_];
    std::vector<double> y(dim_);
    for (int i = 0; i < dim_; ++i) {
        const double c1 = c[i], c2 = c[dim_ + i], c3 = c[2 * dim_ + i], c4 = c[3 * dim_ + i],
                     c5 = c[4 * dim_ + i];
        y[i] = c1 + th * (c2 + th1 * (c3 + th * (c4 + th1 * c5)));
    }
    return y;
}

PhasePoint Trajectory::state_at(double t) const {
    const auto y = eval_dense(t);
    return {y[0], y[1]};
}

Mat2 Trajectory::sensitivity_at(double t) const {
    if (dim_ != 6) throw std::logic_error("Trajectory: no sensitivity stored");
    const auto y = eval_dense(t);
    return {y[2], y[4], y[3], y[5]};
}

// Generic stepper over a fixed-dimension right-hand side.
class DopriStepper {
  public:
    template <int N, typename RHS>
    static Trajectory run(RHS rhs, const double* y0, double t0, double t1,
                          const IntegratorConfig& cfg) {
        cfg.validate();
        if (!(t1 > t0)) throw std::invalid_argument("integrate: span must satisfy t1 > t0");
        Trajectory traj;
        traj.dim_ = N;

        double y[N], k1[N], k2[N], k3[N], k4[N], k5[N], k6[N], k7[N], ytmp[N], y1[N];
        for (int i = 0; i < N; ++i) y[i] = y0[i];
        check_finite<N>(y, t0);

        double t = t0;
        traj.times_.push_back(t);
        traj.states_.insert(traj.states_.end(), y, y + N);

        rhs(t, y, k1);
        double h = initial_step<N>(rhs, y, k1, t0, t1, cfg);

        long steps = 0;
        while (t < t1) {
            if (++steps > cfg.max_steps) {
                throw IntegrationError("integrate: step budget exceeded at t = " + fmt_time(t));
            }
            if (!(h > 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))) {
                throw IntegrationError("integrate: step size underflow at t = " + fmt_time(t));
            }
            bool last = false;
            if (t + h >= t1) {
                h = t1 - t;
                last = true;
            }

            for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * A21 * k1[i];
            rhs(t + C2 * h, ytmp, k2);
            for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
            rhs(t + C3 * h, ytmp, k3);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
            rhs(t + C4 * h, ytmp, k4);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
            rhs(t + C5 * h, ytmp, k5);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] +
                                      A65 * k5[i]);
            rhs(t + h, ytmp, k6);
            for (int i = 0; i < N; ++i)
                y1[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
            rhs(t + h, y1, k7);  // FSAL

            double err = 0.0;
            for (int i = 0; i < N; ++i) {
                const double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                                      E6 * k6[i] + E7 * k7[i]);
                const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
                const double r = e / sc;
                err += r * r;
            }
            err = std::sqrt(err / N);

            if (std::isfinite(err) && err <= 1.0) {
                if (cfg.dense_output) {
                    traj.dense_t_.push_back(t);
                    traj.dense_h_.push_back(h);
                    const std::size_t base = traj.dense_.size();
                    traj.dense_.resize(base + 5 * N);
                    double* c = &traj.dense_[base];
                    for (int i = 0; i < N; ++i) {
                        const double dy = y1[i] - y[i];
                        const double bspl = h * k1[i] - dy;
                        c[i] = y[i];
                        c[N + i] = dy;
                        c[2 * N + i] = bspl;
                        c[3 * N + i] = dy - h * k7[i] - bspl;
                        c[4 * N + i] = h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] +
                                            D6 * k6[i] + D7 * k7[i]);
                    }
                }
                t = last ? t1 : t + h;
                for (int i = 0; i < N; ++i) {
                    y[i] = y1[i];
                    k1[i] = k7[i];
                }
                check_finite<N>(y, t);
                traj.times_.push_back(t);
                traj.states_.insert(traj.states_.end(), y, y + N);

                const double fac = (err == 0.0) ? 4.0
                                                : std::clamp(0.9 * std::pow(err, -0.2), 0.25, 4.0);
                h = std::min(h * fac, cfg.max_step);
            } else if (std::isfinite(err)) {
                h *= std::max(0.25, 0.9 * std::pow(err, -0.2));
            } else {
                h *= 0.25;  // overflow in a stage; retry smaller until underflow reports
            }
        }
        return traj;
    }

  private:
    template <int N>
    static void check_finite(const double* y, double t) {
        for (int i = 0; i < N; ++i) {
            if (!std::isfinite(y[i])) {
                throw IntegrationError("integrate: non-finite state at t = " + fmt_time(t));
            }
        }
    }

    template <int N, typename RHS>
    static double initial_step(RHS& rhs, const double* y, const double* f, double t0, double t1,
                               const IntegratorConfig& cfg) {
        double dy = 0.0, df = 0.0;
        for (int i = 0; i < N; ++i) {
            const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y[i]);
            dy += (y[i] / sc) * (y[i] / sc);
            df += (f[i] / sc) * (f[i] / sc);
        }
        double h = (dy > 0.0 && df > 0.0) ? 0.01 * std::sqrt(dy / df) : (t1 - t0) / 100.0;
        (void)rhs;
        return std::min({h, (t1 - t0), cfg.max_step});
    }
};

Trajectory integrate(const ProblemParams& p, const PhasePoint& x0, double t0, double t1,
                     const IntegratorConfig& cfg) {
    const double y0[2] = {x0.u, x0.v};
    auto rhs = [&p](double /*t*/, const double* y, double* dy) {
        dy[0] = y[1];
        dy[1] = p.mu * (y[0] - odd_power(y[0], p.q));
    };
    return DopriStepper::run<2>(rhs, y0, t0, t1, cfg);
}

Trajectory integrate_with_variational(const ProblemParams& p, const PhasePoint& x0, double t0,
                                      double t1, const IntegratorConfig& cfg) {
    // Layout: u, v, s11, s21, s12, s22 where columns of S are d(u,v)/du0, d(u,v)/dv0.
    const double y0[6] = {x0.u, x0.v, 1.0, 0.0, 0.0, 1.0};
    auto rhs = [&p](double /*t*/, const double* y, double* dy) {
        const double j21 = force_derivative(p, y[0]);
        dy[0] = y[1];
        dy[1] = p.mu * (y[0] - odd_power(y[0], p.q));
        dy[2] = y[3];
        dy[3] = j21 * y[2];
        dy[4] = y[5];
        dy[5] = j21 * y[4];
    };
    return DopriStepper::run<6>(rhs, y0, t0, t1, cfg);
}

}  // namespace perbif
