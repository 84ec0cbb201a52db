#ifndef BIOTJKD_MATERIAL_HPP
#define BIOTJKD_MATERIAL_HPP

#include "biotjkd/complex.hpp"
#include "biotjkd/errors.hpp"
#include "biotjkd/matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace biotjkd {

// Physical parameters of one principal direction, SI units.
struct MaterialParams {
    Real rho_f;     // fluid density, kg/m^3
    Real phi;       // porosity
    Real alpha_inf; // infinite-frequency tortuosity
    Real K0;        // static permeability, m^2
    Real nu;        // kinematic viscosity, m^2/s
    Real Lambda;    // structure constant, m
    std::string label;

    void validate() const;
};

struct DerivedConstants {
    Real eta;       // dynamic viscosity rho_f*nu
    Real a;         // eta*phi/(rho_f*K0), 1/s
    Real C1;        // 4*alpha_inf^2*K0^2/(nu*phi^2*Lambda^2), s
    Real D_at_zero; // alpha_inf + 2*(alpha_inf/Lambda)^2*K0/phi
    Real D_at_inf;  // alpha_inf
};

DerivedConstants derived_constants(const MaterialParams& m);

// Dynamic tortuosity T^J(omega) for omega > 0, principal square root.
Complex jkd_tortuosity(const MaterialParams& m, const Real& omega);

// Shifted Stieltjes form D^J(s) = alpha_inf + a*C1/(1 + sqrt(1 + s*C1)).
// Analytic off the cut (-inf, -1/C1]; the removable singularity at s=0 is
// handled by the algebraic form itself. Throws BranchCutEvaluation on the cut.
Complex d_function(const MaterialParams& m, const Complex& s);

// Low-frequency Biot tortuosity alpha_inf + a/(-i*omega).
Complex low_freq_tortuosity(const MaterialParams& m, const Real& omega);

// Built-in Table-style registry S1..S5.
const std::vector<std::string>& material_labels();
MaterialParams material_by_label(const std::string& label);

// Flat key-value file: label, rho_f, phi, alpha_inf, K0, nu, Lambda.
MaterialParams material_from_file(const std::string& path);

// Drained frame description for the undrained moduli computation.
struct ElasticFrame {
    Matrix c;      // 6x6 symmetric drained stiffness, Pa (real entries)
    Real kappa_s;  // solid bulk modulus, Pa
    Real kappa_f;  // fluid bulk modulus, Pa
    Real phi;      // porosity
};

struct UndrainedModuli {
    Matrix c_u;               // 6x6 symmetric
    Real M;                   // Biot modulus, Pa
    std::array<Real, 6> a;    // coupling coefficients
    Real kappa_bar;
};

UndrainedModuli undrained_moduli(const ElasticFrame& f);

} // namespace biotjkd

#endif
