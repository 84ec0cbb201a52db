#include "biotjkd/report.hpp"

#include "biotjkd/fit_pade.hpp"
#include "biotjkd/fit_stieltjes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace biotjkd {

using nlohmann::json;

std::vector<double> dense_band(double lo, double hi, std::size_t count) {
    std::vector<double> pts(count);
    double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i)
        pts[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (count - 1));
    pts.front() = lo;
    pts.back() = hi;
    return pts;
}

std::vector<RelErrPoint> rel_err_profile(const MaterialParams& m, const PoleResidueModel& model,
                                         const std::vector<double>& eval_omegas) {
    ScopedPrecision scope(50); // reference accuracy; comparison happens in doubles
    std::vector<RelErrPoint> out;
    out.reserve(eval_omegas.size());
    for (double omega : eval_omegas) {
        Complex s(Real(0), Real(-omega));
        std::complex<double> ref = to_cd(d_function(m, s));
        std::complex<double> est = model.evaluate_double({0.0, -omega});
        out.push_back({omega, std::abs(ref - est) / std::abs(ref)});
    }
    return out;
}

void attach_rel_err(FitReport& report, const MaterialParams& m, const PoleResidueModel& model) {
    auto profile = rel_err_profile(m, model, dense_band(model.grid_lo, model.grid_hi));
    std::vector<double> errs;
    errs.reserve(profile.size());
    for (const auto& p : profile) errs.push_back(p.rel_err);
    report.max_rel_err = *std::max_element(errs.begin(), errs.end());
    std::nth_element(errs.begin(), errs.begin() + errs.size() / 2, errs.end());
    report.median_rel_err = errs[errs.size() / 2];
}

namespace {

std::string dec(const Real& v, unsigned digits) {
    return v.str(digits, std::ios_base::scientific);
}

} // namespace

std::string export_model(const PoleResidueModel& model, const FitReport& report,
                         bool full_precision) {
    json j;
    j["schema_version"] = 1;
    j["material"] = model.material_label;
    j["approach"] = model.approach;
    j["grid"] = {{"scheme", to_string(model.grid_scheme)},
                 {"M", model.order()},
                 {"lo", model.grid_lo},
                 {"hi", model.grid_hi}};
    j["digits"] = model.digits;
    j["alpha_inf"] = to_d(model.alpha_inf);
    j["poles"] = json::array();
    j["residues"] = json::array();
    for (const auto& p : model.poles) j["poles"].push_back(to_d(p));
    for (const auto& r : model.residues) j["residues"].push_back(to_d(r));
    if (full_precision) {
        unsigned d = model.digits ? model.digits : current_digits();
        json fp;
        fp["alpha_inf"] = dec(model.alpha_inf, d);
        fp["poles"] = json::array();
        fp["residues"] = json::array();
        for (const auto& p : model.poles) fp["poles"].push_back(dec(p, d));
        for (const auto& r : model.residues) fp["residues"].push_back(dec(r, d));
        j["full_precision"] = fp;
    }
    json diag;
    diag["cond_log10"] = json::object();
    for (const auto& [k, v] : report.cond_log10) diag["cond_log10"][k] = v;
    if (report.max_rel_err >= 0) diag["max_rel_err"] = report.max_rel_err;
    if (report.median_rel_err >= 0) diag["median_rel_err"] = report.median_rel_err;
    diag["node_residuals"] = report.node_residuals;
    diag["wall_time_s"] = report.wall_time_s;
    j["diagnostics"] = diag;
    return j.dump(2);
}

void export_model_file(const PoleResidueModel& model, const FitReport& report,
                       const std::string& path, bool full_precision) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << export_model(model, report, full_precision) << "\n";
}

ImportedModel import_model(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key)) throw ParseError(std::string("model file missing field '") + key + "'");
        return j.at(key);
    };
    if (need("schema_version").get<int>() != 1)
        throw SchemaMismatch("unsupported schema_version " + need("schema_version").dump());

    ImportedModel im;
    PoleResidueModel& m = im.model;
    m.material_label = need("material").get<std::string>();
    m.approach = need("approach").get<std::string>();
    const json& grid = need("grid");
    for (const char* k : {"scheme", "M", "lo", "hi"})
        if (!grid.contains(k)) throw ParseError(std::string("model file missing field 'grid.") + k + "'");
    m.grid_scheme = grid_scheme_from_string(grid.at("scheme").get<std::string>());
    m.grid_lo = grid.at("lo").get<double>();
    m.grid_hi = grid.at("hi").get<double>();
    m.digits = need("digits").get<unsigned>();

    ScopedPrecision scope(m.digits + 10);
    if (j.contains("full_precision")) {
        const json& fp = j.at("full_precision");
        m.alpha_inf = Real(fp.at("alpha_inf").get<std::string>());
        for (const auto& p : fp.at("poles")) m.poles.emplace_back(p.get<std::string>());
        for (const auto& r : fp.at("residues")) m.residues.emplace_back(r.get<std::string>());
    } else {
        m.alpha_inf = Real(need("alpha_inf").get<double>());
        for (const auto& p : need("poles")) m.poles.emplace_back(p.get<double>());
        for (const auto& r : need("residues")) m.residues.emplace_back(r.get<double>());
    }
    if (m.poles.size() != m.residues.size() || m.poles.size() != grid.at("M").get<std::size_t>())
        throw SchemaMismatch("model file pole/residue counts disagree with grid.M");

    im.report.digits = m.digits;
    if (j.contains("diagnostics")) {
        const json& d = j.at("diagnostics");
        if (d.contains("cond_log10"))
            for (const auto& [k, v] : d.at("cond_log10").items())
                im.report.cond_log10[k] = v.get<double>();
        if (d.contains("max_rel_err")) im.report.max_rel_err = d.at("max_rel_err").get<double>();
        if (d.contains("median_rel_err"))
            im.report.median_rel_err = d.at("median_rel_err").get<double>();
        if (d.contains("node_residuals"))
            im.report.node_residuals = d.at("node_residuals").get<std::vector<double>>();
    }
    return im;
}

ImportedModel import_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return import_model(ss.str());
}

void export_condition_table(std::ostream& out, const MaterialParams& m, unsigned digits,
                            double lo, double hi) {
    ScopedPrecision scope(digits);
    const std::size_t orders[2] = {8, 14};
    const GridScheme schemes[2] = {GridScheme::equal, GridScheme::log};

    // columns: (M=8,equal), (M=8,log), (M=14,equal), (M=14,log)
    double vals[4][4];
    int col = 0;
    for (std::size_t M : orders)
        for (GridScheme sch : schemes) {
            SampleGrid grid = make_grid(sch, M, Real(lo), Real(hi));
            SampleList samples = build_samples(m, grid);
            PadeSystem sys = assemble_system(samples);
            Matrix B(2 * M, 2 * M);
            for (std::size_t i = 0; i < M; ++i)
                for (std::size_t j = 0; j < 2 * M; ++j) {
                    B(i, j) = Complex(sys.A(i, j).re);
                    B(M + i, j) = Complex(sys.A(i, j).im);
                }
            StieltjesPencil pencil = assemble_s1_s2(build_interpolation_data(m, grid));
            vals[0][col] = to_d(cond2_log10(sys.A));
            vals[1][col] = to_d(cond2_log10(B));
            vals[2][col] = to_d(cond2_log10(pencil.S1));
            vals[3][col] = to_d(cond2_log10(pencil.S2));
            ++col;
        }

    const char* rows[4] = {"A", "B", "S1", "S2"};
    out << "matrix,M8_equal,M8_log,M14_equal,M14_log\n";
    for (int r = 0; r < 4; ++r) {
        out << rows[r];
        for (int c = 0; c < 4; ++c) out << "," << vals[r][c];
        out << "\n";
    }
}

} // namespace biotjkd
