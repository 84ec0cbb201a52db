#ifndef BIOTJKD_AUGMENTED_HPP
#define BIOTJKD_AUGMENTED_HPP

#include "biotjkd/material.hpp"
#include "biotjkd/model.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace biotjkd {

// Coefficients of the memory-free replacement of the convolution term, in
// hardware precision (this layer backs a time stepper, not the fitters).
struct AugmentedCoefficients {
    double inertial;                                 // rho_f*alpha_inf/phi
    double damping;                                  // eta/K0 + (rho_f/phi)*sum r_k
    std::vector<std::pair<double, double>> theta_couplings; // (p_k, (rho_f/phi)*r_k)
};

AugmentedCoefficients augmented_coefficients(const PoleResidueModel& model,
                                             const MaterialParams& m);

// Relative fluid velocity sampled on a uniform time grid, q(0) = 0.
struct ScalarSignal {
    std::vector<double> q;
    double dt;

    ScalarSignal(std::vector<double> samples, double step);
    double duration() const { return dt * (q.size() - 1); }
};

// Auxiliary memory variables Theta_k, all zero at t = 0.
struct ThetaState {
    std::vector<double> theta;
    double t = 0;

    explicit ThetaState(std::size_t count) : theta(count, 0.0) {}
};

// One step of the exact exponential integrator for Theta' = p Theta - p q
// with q linear on the step.
ThetaState step_theta(const ThetaState& state, double q_now, double q_next, double dt,
                      const std::vector<double>& poles);

// sum_k r_k (-p_k) int_0^t e^{p_k tau} q(t - tau) dtau by composite
// Gauss-Legendre quadrature on the continuous signal; independent of
// step_theta. q_scale is the shortest time scale of q (panel width cap).
double convolution_oracle(const std::function<double(double)>& q,
                          const std::vector<double>& poles,
                          const std::vector<double>& residues, double t, double q_scale);

// Full approximated memory term
//   alpha_inf q'(t) + (a + sum r_k) q(t) - sum r_k (-p_k) e^{p_k t} * q
// with q' by central differences at step dt.
double memory_term(const std::function<double(double)>& q, const PoleResidueModel& model,
                   const MaterialParams& m, double t, double dt, double q_scale);

} // namespace biotjkd

#endif
