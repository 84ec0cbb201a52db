#ifndef BIOTJKD_FIT_STIELTJES_HPP
#define BIOTJKD_FIT_STIELTJES_HPP

#include "biotjkd/fit_pade.hpp"

namespace biotjkd {

// Two-sided residue interpolation data. u, z are the theorem-side variables;
// s and v are what the assembly actually consumes.
struct InterpolationData {
    CVector s; // -i*omega_k
    CVector u; // 1/s_k
    CVector v; // D^J(s_k) - alpha_inf
    CVector z; // -1/s_k
};

InterpolationData build_interpolation_data(const MaterialParams& m, const SampleGrid& grid);

struct StieltjesPencil {
    Matrix S1;     // Hermitian
    Matrix S2;     // Hermitian, positive definite for resolvable data
    CVector c_plus; // row (v_1, ..., v_M)
};

// Data matrices in the s variable:
//   (S1)_ij = (-s_j v_j + conj(s_i) conj(v_i)) / (conj(s_i) - s_j)
//   (S2)_ij = (-v_j + conj(v_i)) / (s_j - conj(s_i))
StieltjesPencil assemble_s1_s2(const InterpolationData& data);

// Generalized eigenproblem S1 V = S2 V L with V* S2 V = I; poles -L_kk,
// residues |c_plus . V(:,k)|^2. alpha_inf = 0 on return, attached by caller.
PoleResidueModel extract_poles_residues(const StieltjesPencil& pencil);

// Approach 2 end to end.
std::pair<PoleResidueModel, FitReport> fit_stieltjes(const MaterialParams& m,
                                                     const SampleGrid& grid,
                                                     const FitOptions& opt);

} // namespace biotjkd

#endif
