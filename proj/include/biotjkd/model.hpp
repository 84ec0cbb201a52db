#ifndef BIOTJKD_MODEL_HPP
#define BIOTJKD_MODEL_HPP

#include "biotjkd/complex.hpp"
#include "biotjkd/sampling.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace biotjkd {

// alpha_inf + sum_k r_k/(s - p_k) with r_k > 0, p_k < 0; poles sorted by
// ascending magnitude. The central output of both fitting approaches.
struct PoleResidueModel {
    Real alpha_inf;
    RVector poles;
    RVector residues;
    std::string material_label;
    std::string approach;       // "pade" or "stieltjes"
    GridScheme grid_scheme = GridScheme::log;
    double grid_lo = 0, grid_hi = 0;
    unsigned digits = 0;

    std::size_t order() const { return poles.size(); }

    Complex evaluate(const Complex& s) const {
        Complex v(alpha_inf);
        for (std::size_t k = 0; k < poles.size(); ++k)
            v += Complex(residues[k]) / (s - Complex(poles[k]));
        return v;
    }

    // Value at s=0: alpha_inf + sum r_k/(-p_k).
    Real at_zero() const {
        Real v = alpha_inf;
        for (std::size_t k = 0; k < poles.size(); ++k)
            v += residues[k] / (-poles[k]);
        return v;
    }

    // Parameters rounded to 64-bit, evaluated in hardware arithmetic.
    std::complex<double> evaluate_double(std::complex<double> s) const {
        std::complex<double> v(to_d(alpha_inf), 0.0);
        for (std::size_t k = 0; k < poles.size(); ++k)
            v += to_d(residues[k]) / (s - std::complex<double>(to_d(poles[k]), 0.0));
        return v;
    }

    void sort_by_pole_magnitude();
};

struct FitReport {
    std::map<std::string, double> cond_log10; // keys among A, B, S1, S2
    std::vector<double> node_residuals;       // relative, per interpolation node
    double max_rel_err = -1;                  // filled by rel_err_profile
    double median_rel_err = -1;
    unsigned digits = 0;
    double wall_time_s = 0;
};

} // namespace biotjkd

#endif
