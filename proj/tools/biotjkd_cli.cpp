#include "biotjkd/augmented.hpp"
#include "biotjkd/fit_pade.hpp"
#include "biotjkd/fit_stieltjes.hpp"
#include "biotjkd/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

namespace {

using namespace biotjkd;

struct CommonOpts {
    std::string material = "S1";
    std::string grid = "log";
    std::size_t M = 10;
    unsigned digits = 90;
    std::string band = "1e-3:2e6";
    bool json_out = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_json = true) {
    cmd->add_option("--material", o.material, "S1..S5 or a key-value parameter file");
    cmd->add_option("--grid", o.grid, "equal|log")->check(CLI::IsMember({"equal", "log"}));
    cmd->add_option("-M,--order", o.M, "number of interpolation nodes / poles");
    cmd->add_option("--digits", o.digits, "working precision in decimal digits (>= 30)");
    cmd->add_option("--band", o.band, "frequency band lo:hi (1/s)");
    if (with_json) cmd->add_flag("--json", o.json_out, "machine-readable JSON output");
}

std::pair<double, double> parse_band(const std::string& band) {
    auto colon = band.find(':');
    if (colon == std::string::npos)
        throw ParseError("band must be lo:hi, got '" + band + "'");
    return {std::stod(band.substr(0, colon)), std::stod(band.substr(colon + 1))};
}

MaterialParams load_material(const std::string& name) {
    if (name.find('/') != std::string::npos || name.find('.') != std::string::npos)
        return material_from_file(name);
    return material_by_label(name);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot open output file '" + path + "'");
    return file;
}

void print_model(std::ostream& out, const PoleResidueModel& model, const FitReport& report) {
    out << "# " << model.material_label << " approach=" << model.approach
        << " grid=" << to_string(model.grid_scheme) << " M=" << model.order()
        << " digits=" << model.digits << "\n";
    out << "# alpha_inf = " << to_d(model.alpha_inf) << ", D_est(0) = " << to_d(model.at_zero())
        << "\n";
    for (const auto& [k, v] : report.cond_log10) out << "# cond_log10(" << k << ") = " << v << "\n";
    double worst = 0;
    for (double r : report.node_residuals) worst = std::max(worst, r);
    out << "# max node residual = " << worst << ", wall time = " << report.wall_time_s << " s\n";
    out << "k,pole,residue\n";
    for (std::size_t k = 0; k < model.order(); ++k)
        out << k + 1 << "," << to_d(model.poles[k]) << "," << to_d(model.residues[k]) << "\n";
}

double pairwise_discrepancy(const PoleResidueModel& a, const PoleResidueModel& b) {
    double worst = 0;
    for (std::size_t k = 0; k < a.order(); ++k) {
        worst = std::max(worst, to_d(abs(a.poles[k] - b.poles[k]) / abs(a.poles[k])));
        worst = std::max(worst, to_d(abs(a.residues[k] - b.residues[k]) / abs(a.residues[k])));
    }
    return worst;
}

int run_fit(const CommonOpts& o, const std::string& approach, const std::string& out_path) {
    MaterialParams m = load_material(o.material);
    ScopedPrecision scope(o.digits);
    auto [lo, hi] = parse_band(o.band);
    SampleGrid grid = make_grid(grid_scheme_from_string(o.grid), o.M, Real(lo), Real(hi));
    FitOptions opt{o.digits, true};

    std::vector<std::pair<PoleResidueModel, FitReport>> fits;
    if (approach == "pade" || approach == "both") fits.push_back(fit_pade(m, grid, opt));
    if (approach == "stieltjes" || approach == "both") fits.push_back(fit_stieltjes(m, grid, opt));
    for (auto& [model, report] : fits) attach_rel_err(report, m, model);

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    if (o.json_out) {
        nlohmann::json j = nlohmann::json::array();
        for (auto& [model, report] : fits)
            j.push_back(nlohmann::json::parse(export_model(model, report)));
        if (fits.size() == 2) {
            nlohmann::json extra;
            extra["pairwise_max_rel_discrepancy"] =
                pairwise_discrepancy(fits[0].first, fits[1].first);
            j.push_back(extra);
        }
        out << j.dump(2) << "\n";
    } else {
        for (auto& [model, report] : fits) print_model(out, model, report);
        if (fits.size() == 2)
            out << "# pairwise max relative pole/residue discrepancy = "
                << pairwise_discrepancy(fits[0].first, fits[1].first) << "\n";
    }
    return 0;
}

int run_rel_err(const CommonOpts& o, const std::string& approach, const std::string& out_path) {
    MaterialParams m = load_material(o.material);
    ScopedPrecision scope(o.digits);
    auto [lo, hi] = parse_band(o.band);
    SampleGrid grid = make_grid(grid_scheme_from_string(o.grid), o.M, Real(lo), Real(hi));
    FitOptions opt{o.digits, false};
    auto [model, report] = approach == "stieltjes" ? fit_stieltjes(m, grid, opt)
                                                   : fit_pade(m, grid, opt);
    auto profile = rel_err_profile(m, model, dense_band(lo, hi));
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "omega,rel_err\n";
    for (const auto& p : profile) out << p.omega << "," << p.rel_err << "\n";
    return 0;
}

int run_cond_report(const CommonOpts& o, const std::string& out_path) {
    MaterialParams m = load_material(o.material);
    ScopedPrecision scope(o.digits);
    auto [lo, hi] = parse_band(o.band);
    SampleGrid grid = make_grid(grid_scheme_from_string(o.grid), o.M, Real(lo), Real(hi));

    SampleList samples = build_samples(m, grid);
    PadeSystem sys = assemble_system(samples);
    const std::size_t M = o.M;
    Matrix B(2 * M, 2 * M);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < 2 * M; ++j) {
            B(i, j) = Complex(sys.A(i, j).re);
            B(M + i, j) = Complex(sys.A(i, j).im);
        }
    StieltjesPencil pencil = assemble_s1_s2(build_interpolation_data(m, grid));

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    nlohmann::json j;
    j["material"] = m.label;
    j["grid"] = o.grid;
    j["M"] = M;
    j["digits"] = o.digits;
    j["cond_log10"] = {{"A", to_d(cond2_log10(sys.A))},
                       {"B", to_d(cond2_log10(B))},
                       {"S1", to_d(cond2_log10(pencil.S1))},
                       {"S2", to_d(cond2_log10(pencil.S2))}};
    if (o.json_out) {
        out << j.dump(2) << "\n";
    } else {
        out << "# " << m.label << " " << o.grid << " M=" << M << " digits=" << o.digits << "\n";
        for (const auto& [k, v] : j["cond_log10"].items())
            out << "cond_log10(" << k << ") = " << v.get<double>() << "\n";
    }
    return 0;
}

int run_verify_kernel(const CommonOpts& o, double f0, double dt, double duration,
                      const std::string& out_path) {
    MaterialParams m = load_material(o.material);
    ScopedPrecision scope(o.digits);
    auto [lo, hi] = parse_band(o.band);
    SampleGrid grid = make_grid(grid_scheme_from_string(o.grid), o.M, Real(lo), Real(hi));
    auto [model, report] = fit_stieltjes(m, grid, FitOptions{o.digits, false});

    AugmentedCoefficients coeffs = augmented_coefficients(model, m);
    std::vector<double> poles, weights, residues;
    for (auto [p, w] : coeffs.theta_couplings) {
        poles.push_back(p);
        weights.push_back(w);
    }
    for (const auto& r : model.residues) residues.push_back(to_d(r));
    double rho_over_phi = to_d(m.rho_f / m.phi);

    RickerSource src(f0);
    auto q = [&](double t) { return ricker(src, t); };
    const int steps = static_cast<int>(std::llround(duration / dt));
    const int stride = std::max(1, steps / 200);

    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "t,theta_sum,oracle,abs_diff\n";
    ThetaState state(poles.size());
    for (int n = 0; n < steps; ++n) {
        state = step_theta(state, q(n * dt), q((n + 1) * dt), dt, poles);
        if ((n + 1) % stride != 0 && n + 1 != steps) continue;
        double theta_sum = 0;
        for (std::size_t k = 0; k < poles.size(); ++k) theta_sum += weights[k] * state.theta[k];
        double oracle =
            rho_over_phi * convolution_oracle(q, poles, residues, state.t, 1.0 / (40 * f0));
        out << state.t << "," << theta_sum << "," << oracle << "," << std::abs(theta_sum - oracle)
            << "\n";
    }
    return 0;
}

int run_spectrum(double f0, const std::string& band, std::size_t points,
                 const std::string& out_path) {
    auto [lo, hi] = parse_band(band);
    RickerSource src(f0);
    auto omegas = dense_band(lo, hi, points);
    auto F = ricker_spectrum(src, omegas);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    out << "omega,re,im\n";
    for (std::size_t i = 0; i < omegas.size(); ++i)
        out << omegas[i] << "," << F[i].real() << "," << F[i].imag() << "\n";
    return 0;
}

int run_export_tables(unsigned digits, const std::string& band, const std::string& out_path) {
    auto [lo, hi] = parse_band(band);
    std::ofstream file;
    std::ostream& out = open_output(file, out_path);
    for (const auto& label : material_labels()) {
        out << "# material " << label << "\n";
        export_condition_table(out, material_by_label(label), digits, lo, hi);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pole-residue fits of the JKD dynamic tortuosity and the augmented Biot-JKD "
                 "coefficients"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string approach = "both";
    std::string out_path;
    double f0 = 1e5, dt = 1e-9, duration = 4e-5;
    std::size_t spectrum_points = 200;

    auto* fit = app.add_subcommand("fit", "fit a pole-residue model");
    add_common(fit, o);
    fit->add_option("--approach", approach, "pade|stieltjes|both")
        ->check(CLI::IsMember({"pade", "stieltjes", "both"}));
    fit->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* rel = app.add_subcommand("rel-err", "relative-error profile over the dense band");
    add_common(rel, o, false);
    rel->add_option("--approach", approach, "pade|stieltjes")
        ->check(CLI::IsMember({"pade", "stieltjes"}));
    rel->add_option("-o,--output", out_path, "output CSV (default stdout)");

    auto* cond = app.add_subcommand("cond-report", "condition numbers of A, B, S1, S2");
    add_common(cond, o);
    cond->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify-kernel",
                                      "auxiliary-ODE trajectory against the convolution oracle");
    add_common(verify, o, false);
    verify->add_option("--f0", f0, "Ricker central frequency (1/s)");
    verify->add_option("--dt", dt, "time step (s)");
    verify->add_option("--duration", duration, "simulated time span (s)");
    verify->add_option("-o,--output", out_path, "output CSV (default stdout)");

    auto* spec = app.add_subcommand("spectrum", "Fourier transform of the Ricker source");
    spec->add_option("--f0", f0, "Ricker central frequency (1/s)");
    spec->add_option("--band", o.band, "frequency band lo:hi");
    spec->add_option("-n,--points", spectrum_points, "number of output frequencies");
    spec->add_option("-o,--output", out_path, "output CSV (default stdout)");

    auto* tables = app.add_subcommand("export-tables", "condition-number tables for S1..S5");
    tables->add_option("--digits", o.digits, "working precision in decimal digits");
    tables->add_option("--band", o.band, "frequency band lo:hi");
    tables->add_option("-o,--output", out_path, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit->parsed()) return run_fit(o, approach, out_path);
        if (rel->parsed()) return run_rel_err(o, approach, out_path);
        if (cond->parsed()) return run_cond_report(o, out_path);
        if (verify->parsed()) return run_verify_kernel(o, f0, dt, duration, out_path);
        if (spec->parsed()) return run_spectrum(f0, o.band, spectrum_points, out_path);
        if (tables->parsed()) return run_export_tables(o.digits, o.band, out_path);
    } catch (const biotjkd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
