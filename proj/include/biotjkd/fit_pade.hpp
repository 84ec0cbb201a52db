#ifndef BIOTJKD_FIT_PADE_HPP
#define BIOTJKD_FIT_PADE_HPP

#include "biotjkd/linalg.hpp"
#include "biotjkd/material.hpp"
#include "biotjkd/model.hpp"

#include <utility>
#include <vector>

namespace biotjkd {

// One interpolation constraint: node s_k = -i*omega_k and v_k = D^J(s_k) - alpha_inf.
using SampleList = std::vector<std::pair<Complex, Complex>>;

// (M-1)/M rational interpolant of the offset-free data, denominator constant
// term normalized to one.
struct RationalCoeffs {
    RVector num; // a_0 .. a_{M-1}
    RVector den; // b_1 .. b_M

    Complex evaluate(const Complex& s) const;
    CVector denominator_poly() const; // 1, b_1, ..., b_M
};

struct PadeSystem {
    Matrix A;  // M x 2M complex
    CVector d; // right-hand side, length M
};

PadeSystem assemble_system(const SampleList& samples);

// Stacks [Re(A); Im(A)] and solves the 2M x 2M real system.
RationalCoeffs solve_coefficients(const PadeSystem& sys);

// Denominator roots and residues num(p)/den'(p). The returned model has
// alpha_inf = 0; the caller attaches the offset. Throws ComplexPole when a
// root leaves the real axis (precision exhausted for this data set) and
// RepeatedPole on clustered roots.
PoleResidueModel partial_fractions(const RationalCoeffs& rc);

struct FitOptions {
    unsigned digits = 90;
    bool compute_cond = true;
};

// Approach 1 end to end: samples from the material, linear solve, partial
// fractions. Grid length fixes the model order M.
std::pair<PoleResidueModel, FitReport> fit_pade(const MaterialParams& m, const SampleGrid& grid,
                                                const FitOptions& opt);

// Shared by both fitters.
SampleList build_samples(const MaterialParams& m, const SampleGrid& grid);
std::vector<double> node_residuals(const PoleResidueModel& model, const MaterialParams& m,
                                   const SampleGrid& grid);

} // namespace biotjkd

#endif
