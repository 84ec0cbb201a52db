#include "biotjkd/sampling.hpp"

#include <cmath>

namespace biotjkd {

std::string to_string(GridScheme s) {
    return s == GridScheme::equal ? "equal" : "log";
}

GridScheme grid_scheme_from_string(const std::string& s) {
    if (s == "equal") return GridScheme::equal;
    if (s == "log") return GridScheme::log;
    throw ParseError("unknown grid scheme '" + s + "' (expected equal|log)");
}

SampleGrid make_grid(GridScheme scheme, std::size_t count, const Real& omega_min,
                     const Real& omega_max) {
    if (!(omega_min > 0) || !(omega_min < omega_max))
        throw InvalidRange("make_grid: need 0 < omega_min < omega_max");
    if (count < 2)
        throw InvalidRange("make_grid: need at least 2 nodes");

    SampleGrid g;
    g.scheme = scheme;
    g.omega_min = omega_min;
    g.omega_max = omega_max;
    g.omegas.resize(count);
    const int last = static_cast<int>(count) - 1;
    if (scheme == GridScheme::equal) {
        Real step = (omega_max - omega_min) / last;
        for (int k = 0; k <= last; ++k) g.omegas[k] = omega_min + step * k;
    } else {
        Real lmin = log(omega_min), lmax = log(omega_max);
        Real step = (lmax - lmin) / last;
        for (int k = 0; k <= last; ++k) g.omegas[k] = exp(lmin + step * k);
    }
    g.omegas.front() = omega_min;
    g.omegas.back() = omega_max;
    return g;
}

double ricker(const RickerSource& src, double t) {
    if (t < 0 || t > 2 * src.t0) return 0.0;
    const double pi = 3.14159265358979323846;
    double u = pi * src.f0 * (t - src.t0);
    double u2 = u * u;
    return (2 * u2 - 1) * std::exp(-u2);
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1], by Newton on P_16.
struct GaussLegendre16 {
    double x[16];
    double w[16];
    GaussLegendre16() {
        const double pi = 3.14159265358979323846;
        const int n = 16;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            x[i] = t;
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussLegendre16& gl16() {
    static const GaussLegendre16 g;
    return g;
}

} // namespace

std::vector<std::complex<double>> ricker_spectrum(const RickerSource& src,
                                                  const std::vector<double>& omegas) {
    const int panels = 64;
    const double T = 2 * src.t0;
    const double h = T / panels;
    const auto& gl = gl16();

    std::vector<std::complex<double>> F(omegas.size(), {0.0, 0.0});
    for (std::size_t j = 0; j < omegas.size(); ++j) {
        double omega = omegas[j];
        std::complex<double> acc{0.0, 0.0};
        for (int p = 0; p < panels; ++p) {
            double a = p * h;
            for (int i = 0; i < 16; ++i) {
                double t = a + 0.5 * h * (gl.x[i] + 1.0);
                double g = ricker(src, t);
                acc += gl.w[i] * g * std::complex<double>(std::cos(omega * t), std::sin(omega * t));
            }
        }
        F[j] = acc * (0.5 * h);
    }
    return F;
}

} // namespace biotjkd
