#include "biotjkd/augmented.hpp"

#include <cmath>

namespace biotjkd {

AugmentedCoefficients augmented_coefficients(const PoleResidueModel& model,
                                             const MaterialParams& m) {
    DerivedConstants d = derived_constants(m);
    double rho_over_phi = to_d(m.rho_f / m.phi);
    AugmentedCoefficients c;
    c.inertial = rho_over_phi * to_d(model.alpha_inf);
    double rsum = 0;
    c.theta_couplings.reserve(model.order());
    for (std::size_t k = 0; k < model.order(); ++k) {
        double r = to_d(model.residues[k]);
        rsum += r;
        c.theta_couplings.emplace_back(to_d(model.poles[k]), rho_over_phi * r);
    }
    c.damping = to_d(d.eta / m.K0) + rho_over_phi * rsum;
    return c;
}

ScalarSignal::ScalarSignal(std::vector<double> samples, double step)
    : q(std::move(samples)), dt(step) {
    if (q.empty() || dt <= 0)
        throw InvalidRange("ScalarSignal: need samples and a positive step");
    if (q.front() != 0.0)
        throw InvalidRange("ScalarSignal: q(0) must be 0");
}

namespace {

// 1 - (e^x - 1)/x, stable near x = 0.
double one_minus_expm1_over(double x) {
    if (std::abs(x) < 1e-5)
        return -x / 2 - x * x / 6 - x * x * x / 24;
    return 1.0 - std::expm1(x) / x;
}

} // namespace

ThetaState step_theta(const ThetaState& state, double q_now, double q_next, double dt,
                      const std::vector<double>& poles) {
    if (!(dt > 0)) throw InvalidRange("step_theta: dt must be positive");
    ThetaState next = state;
    next.t = state.t + dt;
    double dq = q_next - q_now;
    for (std::size_t k = 0; k < poles.size(); ++k) {
        double x = poles[k] * dt;
        if (x == 0.0) continue; // p -> 0 limit: Theta stays where it is (0 for zero input)
        double em1 = std::expm1(x);
        next.theta[k] = (1.0 + em1) * state.theta[k] - em1 * q_now + dq * one_minus_expm1_over(x);
    }
    return next;
}

namespace {

struct GL12 {
    double x[12];
    double w[12];
    GL12() {
        const double pi = 3.14159265358979323846;
        const int n = 12;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            x[i] = t;
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GL12& gl12() {
    static const GL12 g;
    return g;
}

} // namespace

double convolution_oracle(const std::function<double(double)>& q,
                          const std::vector<double>& poles,
                          const std::vector<double>& residues, double t, double q_scale) {
    if (t <= 0) return 0.0;
    const auto& gl = gl12();
    double total = 0.0;
    for (std::size_t k = 0; k < poles.size(); ++k) {
        double p = poles[k];
        if (p == 0.0) continue;
        // kernel e^{p tau} is negligible beyond ~50/|p|
        double tau_max = std::min(t, 50.0 / (-p));
        double h = std::min(q_scale, 0.5 / (-p));
        int panels = std::max(1, static_cast<int>(std::ceil(tau_max / h)));
        h = tau_max / panels;
        double acc = 0.0;
        for (int pn = 0; pn < panels; ++pn) {
            double a = pn * h;
            for (int i = 0; i < 12; ++i) {
                double tau = a + 0.5 * h * (gl.x[i] + 1.0);
                acc += gl.w[i] * std::exp(p * tau) * q(t - tau);
            }
        }
        acc *= 0.5 * h;
        total += residues[k] * (-p) * acc;
    }
    return total;
}

double memory_term(const std::function<double(double)>& q, const PoleResidueModel& model,
                   const MaterialParams& m, double t, double dt, double q_scale) {
    DerivedConstants dc = derived_constants(m);
    std::vector<double> poles(model.order()), residues(model.order());
    double rsum = 0;
    for (std::size_t k = 0; k < model.order(); ++k) {
        poles[k] = to_d(model.poles[k]);
        residues[k] = to_d(model.residues[k]);
        rsum += residues[k];
    }
    double dqdt = (q(t + dt) - q(t - dt)) / (2 * dt);
    double conv = convolution_oracle(q, poles, residues, t, q_scale);
    return to_d(model.alpha_inf) * dqdt + (to_d(dc.a) + rsum) * q(t) - conv;
}

} // namespace biotjkd
