#include "biotjkd/fit_pade.hpp"

#include <chrono>

namespace biotjkd {

Complex RationalCoeffs::evaluate(const Complex& s) const {
    Complex n(0), d(0);
    for (std::size_t i = num.size(); i-- > 0;) n = n * s + Complex(num[i]);
    for (std::size_t i = den.size(); i-- > 0;) d = d * s + Complex(den[i]);
    d = d * s + Complex(1);
    return n / d;
}

CVector RationalCoeffs::denominator_poly() const {
    CVector c(den.size() + 1);
    c[0] = Complex(1);
    for (std::size_t i = 0; i < den.size(); ++i) c[i + 1] = Complex(den[i]);
    return c;
}

SampleList build_samples(const MaterialParams& m, const SampleGrid& grid) {
    SampleList samples;
    samples.reserve(grid.size());
    for (const Real& omega : grid.omegas) {
        Complex s(Real(0), -omega);
        samples.emplace_back(s, d_function(m, s) - Complex(m.alpha_inf));
    }
    return samples;
}

PadeSystem assemble_system(const SampleList& samples) {
    const std::size_t M = samples.size();
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (samples[i].first == samples[j].first)
                throw DuplicateNode("assemble_system: repeated node at indices " +
                                    std::to_string(j) + "," + std::to_string(i));

    PadeSystem sys;
    sys.A = Matrix(M, 2 * M);
    sys.d.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        const Complex& s = samples[k].first;
        const Complex& v = samples[k].second;
        Complex pw(1);
        for (std::size_t j = 0; j < M; ++j) {
            sys.A(k, j) = pw;
            pw *= s;
        }
        pw = s;
        for (std::size_t j = 0; j < M; ++j) {
            sys.A(k, M + j) = -v * pw;
            pw *= s;
        }
        sys.d[k] = v;
    }
    return sys;
}

RationalCoeffs solve_coefficients(const PadeSystem& sys) {
    const std::size_t M = sys.A.rows();
    Matrix B(2 * M, 2 * M);
    CVector rhs(2 * M);
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = 0; j < 2 * M; ++j) {
            B(i, j) = Complex(sys.A(i, j).re);
            B(M + i, j) = Complex(sys.A(i, j).im);
        }
        rhs[i] = Complex(sys.d[i].re);
        rhs[M + i] = Complex(sys.d[i].im);
    }
    CVector x = solve_linear(B, rhs);
    RationalCoeffs rc;
    rc.num.resize(M);
    rc.den.resize(M);
    for (std::size_t j = 0; j < M; ++j) {
        rc.num[j] = x[j].re;
        rc.den[j] = x[M + j].re;
    }
    return rc;
}

PoleResidueModel partial_fractions(const RationalCoeffs& rc) {
    const std::size_t M = rc.den.size();
    CVector roots = poly_roots(rc.denominator_poly());
    const Real tol = pow10_neg(current_digits() / 2);

    PoleResidueModel model;
    model.alpha_inf = 0;
    model.poles.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        if (abs(roots[k].im) > tol * abs(roots[k]))
            throw ComplexPole(
                "partial_fractions: denominator root " + std::to_string(k) +
                " has nonvanishing imaginary part; Stieltjes structure lost. "
                "Increase --digits well above the log10 condition number of the system.");
        model.poles[k] = roots[k].re;
    }
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Real gap = abs(model.poles[i] - model.poles[j]);
            Real scale = abs(model.poles[i]) > abs(model.poles[j]) ? abs(model.poles[i])
                                                                   : abs(model.poles[j]);
            if (gap <= tol * scale)
                throw RepeatedPole("partial_fractions: poles " + std::to_string(j) + " and " +
                                   std::to_string(i) + " coincide to working tolerance");
        }

    // r_j = num(p_j) / den'(p_j), simple poles.
    model.residues.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        const Real& p = model.poles[k];
        Real n(0);
        for (std::size_t i = rc.num.size(); i-- > 0;) n = n * p + rc.num[i];
        Real d(0); // derivative of 1 + b_1 s + ... + b_M s^M
        for (std::size_t i = M; i-- > 0;) d = d * p + rc.den[i] * static_cast<int>(i + 1);
        model.residues[k] = n / d;
    }
    model.sort_by_pole_magnitude();
    return model;
}

std::vector<double> node_residuals(const PoleResidueModel& model, const MaterialParams& m,
                                   const SampleGrid& grid) {
    std::vector<double> res;
    res.reserve(grid.size());
    for (const Real& omega : grid.omegas) {
        Complex s(Real(0), -omega);
        Complex ref = d_function(m, s);
        res.push_back(to_d(abs(model.evaluate(s) - ref) / abs(ref)));
    }
    return res;
}

std::pair<PoleResidueModel, FitReport> fit_pade(const MaterialParams& m, const SampleGrid& grid,
                                                const FitOptions& opt) {
    auto t_start = std::chrono::steady_clock::now();
    ScopedPrecision scope(opt.digits);

    SampleList samples = build_samples(m, grid);
    PadeSystem sys = assemble_system(samples);

    FitReport report;
    report.digits = opt.digits;
    if (opt.compute_cond) {
        report.cond_log10["A"] = to_d(cond2_log10(sys.A));
        const std::size_t M = sys.A.rows();
        Matrix B(2 * M, 2 * M);
        for (std::size_t i = 0; i < M; ++i)
            for (std::size_t j = 0; j < 2 * M; ++j) {
                B(i, j) = Complex(sys.A(i, j).re);
                B(M + i, j) = Complex(sys.A(i, j).im);
            }
        report.cond_log10["B"] = to_d(cond2_log10(B));
    }

    RationalCoeffs rc = solve_coefficients(sys);
    PoleResidueModel model = partial_fractions(rc);
    model.alpha_inf = m.alpha_inf;
    model.material_label = m.label;
    model.approach = "pade";
    model.grid_scheme = grid.scheme;
    model.grid_lo = to_d(grid.omega_min);
    model.grid_hi = to_d(grid.omega_max);
    model.digits = opt.digits;

    report.node_residuals = node_residuals(model, m, grid);
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return {std::move(model), std::move(report)};
}

} // namespace biotjkd
