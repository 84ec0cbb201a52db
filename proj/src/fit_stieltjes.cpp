#include "biotjkd/fit_stieltjes.hpp"

#include <chrono>

namespace biotjkd {

InterpolationData build_interpolation_data(const MaterialParams& m, const SampleGrid& grid) {
    InterpolationData d;
    const std::size_t M = grid.size();
    d.s.resize(M);
    d.u.resize(M);
    d.v.resize(M);
    d.z.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        Complex s(Real(0), -grid.omegas[k]);
        d.s[k] = s;
        d.u[k] = Complex(1) / s;
        d.v[k] = d_function(m, s) - Complex(m.alpha_inf);
        d.z[k] = Complex(-1) / s;
    }
    return d;
}

StieltjesPencil assemble_s1_s2(const InterpolationData& data) {
    const std::size_t M = data.s.size();
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (data.s[i] == data.s[j])
                throw DuplicateNode("assemble_s1_s2: repeated node");

    StieltjesPencil p;
    p.S1 = Matrix(M, M);
    p.S2 = Matrix(M, M);
    p.c_plus = data.v;
    for (std::size_t i = 0; i < M; ++i) {
        Complex si_c = conj(data.s[i]);
        Complex vi_c = conj(data.v[i]);
        for (std::size_t j = 0; j < M; ++j) {
            const Complex& sj = data.s[j];
            const Complex& vj = data.v[j];
            p.S1(i, j) = (-(sj * vj) + si_c * vi_c) / (si_c - sj);
            p.S2(i, j) = (-vj + vi_c) / (sj - si_c);
        }
    }
    // The construction is Hermitian entrywise up to roundoff; make it exact.
    for (std::size_t i = 0; i < M; ++i) {
        p.S1(i, i).im = 0;
        p.S2(i, i).im = 0;
        for (std::size_t j = i + 1; j < M; ++j) {
            p.S1(j, i) = conj(p.S1(i, j));
            p.S2(j, i) = conj(p.S2(i, j));
        }
    }
    return p;
}

PoleResidueModel extract_poles_residues(const StieltjesPencil& pencil) {
    const std::size_t M = pencil.S1.rows();
    GenEigResult ge;
    try {
        ge = generalized_hermitian_eig(pencil.S1, pencil.S2);
    } catch (const NotPositiveDefinite& e) {
        throw NotPositiveDefinite(
            std::string("extract_poles_residues: S2 is not numerically positive definite; "
                        "the data are not Stieltjes-resolvable at this precision (") +
                e.what() + ")",
            e.pivot_index);
    }

    PoleResidueModel model;
    model.alpha_inf = 0;
    model.poles.resize(M);
    model.residues.resize(M);
    for (std::size_t k = 0; k < M; ++k) {
        model.poles[k] = -ge.eigenvalues[k];
        Complex proj(0);
        for (std::size_t i = 0; i < M; ++i)
            proj += pencil.c_plus[i] * ge.vectors(i, k);
        model.residues[k] = norm(proj);
    }
    model.sort_by_pole_magnitude();
    return model;
}

std::pair<PoleResidueModel, FitReport> fit_stieltjes(const MaterialParams& m,
                                                     const SampleGrid& grid,
                                                     const FitOptions& opt) {
    auto t_start = std::chrono::steady_clock::now();
    ScopedPrecision scope(opt.digits);

    InterpolationData data = build_interpolation_data(m, grid);
    StieltjesPencil pencil = assemble_s1_s2(data);

    FitReport report;
    report.digits = opt.digits;
    if (opt.compute_cond) {
        report.cond_log10["S1"] = to_d(cond2_log10(pencil.S1));
        report.cond_log10["S2"] = to_d(cond2_log10(pencil.S2));
    }

    PoleResidueModel model = extract_poles_residues(pencil);
    model.alpha_inf = m.alpha_inf;
    model.material_label = m.label;
    model.approach = "stieltjes";
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
