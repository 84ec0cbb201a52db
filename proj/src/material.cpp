#include "biotjkd/material.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace biotjkd {

void MaterialParams::validate() const {
    auto positive = [](const Real& v, const char* name) {
        if (!(v > 0))
            throw InvalidRange(std::string("material parameter ") + name + " must be positive");
    };
    positive(rho_f, "rho_f");
    positive(phi, "phi");
    positive(alpha_inf, "alpha_inf");
    positive(K0, "K0");
    positive(nu, "nu");
    positive(Lambda, "Lambda");
    if (!(phi < 1))
        throw InvalidRange("material parameter phi must lie in (0,1)");
}

DerivedConstants derived_constants(const MaterialParams& m) {
    DerivedConstants d;
    d.eta = m.rho_f * m.nu;
    d.a = d.eta * m.phi / (m.rho_f * m.K0);
    Real r = m.alpha_inf * m.K0 / (m.phi * m.Lambda);
    d.C1 = 4 * r * r / m.nu;
    Real q = m.alpha_inf / m.Lambda;
    d.D_at_zero = m.alpha_inf + 2 * q * q * m.K0 / m.phi;
    d.D_at_inf = m.alpha_inf;
    return d;
}

Complex d_function(const MaterialParams& m, const Complex& s) {
    DerivedConstants d = derived_constants(m);
    if (s.im == 0 && s.re * d.C1 <= -1)
        throw BranchCutEvaluation("d_function: s on the branch cut (-inf, -1/C1]");
    // alpha_inf + a*(sqrt(1+s*C1)-1)/s, written cancellation-free; the s=0
    // limit a*C1/2 comes out of the same expression.
    Complex root = sqrt(Complex(1) + s * d.C1);
    return Complex(m.alpha_inf) + (d.a * d.C1) / (Complex(1) + root);
}

Complex jkd_tortuosity(const MaterialParams& m, const Real& omega) {
    if (!(omega > 0))
        throw InvalidRange("jkd_tortuosity: omega must be positive");
    DerivedConstants d = derived_constants(m);
    // T(omega) = alpha_inf + (i*a/omega)*sqrt(1 - i*C1*omega)
    Complex root = sqrt(Complex(Real(1), -d.C1 * omega));
    Complex scale = Complex(Real(0), d.a / omega);
    return Complex(m.alpha_inf) + scale * root;
}

Complex low_freq_tortuosity(const MaterialParams& m, const Real& omega) {
    if (!(omega > 0))
        throw InvalidRange("low_freq_tortuosity: omega must be positive");
    DerivedConstants d = derived_constants(m);
    // a/(-i*omega) = i*a/omega
    return {Real(m.alpha_inf), d.a / omega};
}

namespace {

struct MaterialSpec {
    const char* rho_f;
    const char* phi;
    const char* alpha_inf;
    const char* K0;
    const char* Lambda;
};

const std::map<std::string, MaterialSpec>& registry() {
    // Kinematic viscosity is 1e-3/rho_f for every entry (water-like pore fluid).
    static const std::map<std::string, MaterialSpec> table = {
        {"S1", {"1000", "0.8", "1.1", "3e-8", "2.454e-5"}},
        {"S2", {"1040", "0.2", "3.6", "1e-13", "3.790e-6"}},
        {"S3", {"1040", "0.2", "2.0", "6e-13", "6.930e-6"}},
        {"S4", {"1040", "0.2", "2.0", "6e-13", "2.190e-7"}},
        {"S5", {"1040", "0.2", "3.6", "1e-13", "1.20e-7"}},
    };
    return table;
}

} // namespace

const std::vector<std::string>& material_labels() {
    static const std::vector<std::string> labels = {"S1", "S2", "S3", "S4", "S5"};
    return labels;
}

MaterialParams material_by_label(const std::string& label) {
    auto it = registry().find(label);
    if (it == registry().end()) {
        std::string known;
        for (const auto& l : material_labels()) known += (known.empty() ? "" : ", ") + l;
        throw ParseError("unknown material '" + label + "'; known materials: " + known);
    }
    const MaterialSpec& s = it->second;
    MaterialParams m;
    m.rho_f = Real(s.rho_f);
    m.phi = Real(s.phi);
    m.alpha_inf = Real(s.alpha_inf);
    m.K0 = Real(s.K0);
    m.nu = Real("1e-3") / m.rho_f;
    m.Lambda = Real(s.Lambda);
    m.label = label;
    m.validate();
    return m;
}

MaterialParams material_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open material file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key, value;
        if (ls >> key >> value) kv[key] = value;
    }
    MaterialParams m;
    auto want = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ParseError(std::string("material file missing key '") + key + "'");
        return it->second;
    };
    m.label = want("label");
    m.rho_f = Real(want("rho_f"));
    m.phi = Real(want("phi"));
    m.alpha_inf = Real(want("alpha_inf"));
    m.K0 = Real(want("K0"));
    m.nu = Real(want("nu"));
    m.Lambda = Real(want("Lambda"));
    m.validate();
    return m;
}

UndrainedModuli undrained_moduli(const ElasticFrame& f) {
    UndrainedModuli u;
    u.kappa_bar = (f.c(0, 0).re + f.c(1, 1).re + f.c(2, 2).re +
                   2 * f.c(0, 1).re + 2 * f.c(0, 2).re + 2 * f.c(1, 2).re) / 9;
    // a_i as printed: row sums for i<=3, column sums for i>=4.
    for (std::size_t i = 0; i < 3; ++i) {
        Real sum(0);
        for (std::size_t k = 0; k < 3; ++k) sum += f.c(i, k).re;
        u.a[i] = 1 - sum / (3 * f.kappa_s);
    }
    for (std::size_t i = 3; i < 6; ++i) {
        Real sum(0);
        for (std::size_t k = 0; k < 3; ++k) sum += f.c(k, i).re;
        u.a[i] = -sum / (3 * f.kappa_s);
    }
    Real denom = 1 - u.kappa_bar / f.kappa_s - f.phi * (1 - f.kappa_s / f.kappa_f);
    if (!(denom > 0))
        throw DegenerateModulus("undrained_moduli: nonpositive denominator in Biot modulus M");
    u.M = f.kappa_s / denom;
    u.c_u = Matrix(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            u.c_u(i, j) = Complex(f.c(i, j).re + u.M * u.a[i] * u.a[j]);
    return u;
}

} // namespace biotjkd
