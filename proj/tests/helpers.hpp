#ifndef BIOTJKD_TEST_HELPERS_HPP
#define BIOTJKD_TEST_HELPERS_HPP

#include "biotjkd/model.hpp"

#include <cstdint>
#include <random>

namespace biotjkd::testing {

// Deterministic RNG for every generated case.
inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

// Random Stieltjes-rational model: distinct negative poles (separated by at
// least a factor 1.2 in magnitude), positive residues, offset in [1,5].
inline PoleResidueModel random_model(std::mt19937_64& rng, std::size_t order,
                                     double pole_lo = 1e-3, double pole_hi = 1e6,
                                     double res_hi = 1e3) {
    PoleResidueModel m;
    m.alpha_inf = Real(uniform(rng, 1.0, 5.0));
    while (m.poles.size() < order) {
        double cand = log_uniform(rng, pole_lo, pole_hi);
        bool ok = true;
        for (const auto& p : m.poles) {
            double ratio = cand / to_d(-p);
            if (ratio < 1.2 && ratio > 1.0 / 1.2) ok = false;
        }
        if (!ok) continue;
        m.poles.emplace_back(-cand);
        m.residues.emplace_back(log_uniform(rng, 1e-3, res_hi));
    }
    m.sort_by_pole_magnitude();
    return m;
}

// Samples (s_k = -i omega_k, model(s_k) - alpha_inf) for a synthetic model.
inline std::vector<std::pair<Complex, Complex>> synthetic_samples(const PoleResidueModel& m,
                                                                  const RVector& omegas) {
    std::vector<std::pair<Complex, Complex>> out;
    for (const auto& w : omegas) {
        Complex s(Real(0), -w);
        out.emplace_back(s, m.evaluate(s) - Complex(m.alpha_inf));
    }
    return out;
}

// Worst relative pole/residue discrepancy between two sorted models.
inline double model_discrepancy(const PoleResidueModel& a, const PoleResidueModel& b) {
    double worst = 0;
    for (std::size_t k = 0; k < a.order(); ++k) {
        worst = std::max(worst, to_d(abs(a.poles[k] - b.poles[k]) / abs(a.poles[k])));
        worst = std::max(worst, to_d(abs(a.residues[k] - b.residues[k]) / abs(a.residues[k])));
    }
    return worst;
}

} // namespace biotjkd::testing

#endif
