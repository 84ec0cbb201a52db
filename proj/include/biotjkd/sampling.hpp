#ifndef BIOTJKD_SAMPLING_HPP
#define BIOTJKD_SAMPLING_HPP

#include "biotjkd/complex.hpp"
#include "biotjkd/errors.hpp"

#include <complex>
#include <string>
#include <vector>

namespace biotjkd {

enum class GridScheme { equal, log };

std::string to_string(GridScheme s);
GridScheme grid_scheme_from_string(const std::string& s);

struct SampleGrid {
    RVector omegas; // strictly increasing, positive
    GridScheme scheme;
    Real omega_min;
    Real omega_max;

    std::size_t size() const { return omegas.size(); }
};

// equal: arithmetic progression; log: geometric progression. Endpoints exact.
SampleGrid make_grid(GridScheme scheme, std::size_t count, const Real& omega_min,
                     const Real& omega_max);

struct RickerSource {
    double f0; // central frequency, 1/s
    double t0; // time shift, always 1/f0

    explicit RickerSource(double central_frequency)
        : f0(central_frequency), t0(1.0 / central_frequency) {
        if (!(central_frequency > 0))
            throw InvalidRange("RickerSource: f0 must be positive");
    }
};

// (2 pi^2 f0^2 (t-t0)^2 - 1) exp(-pi^2 f0^2 (t-t0)^2) on [0, 2 t0], else 0.
double ricker(const RickerSource& src, double t);

// Fourier transform of the truncated signal, F(omega) = int_0^{2 t0} g(t) e^{i omega t} dt,
// composite Gauss-Legendre over 64 panels.
std::vector<std::complex<double>> ricker_spectrum(const RickerSource& src,
                                                  const std::vector<double>& omegas);

} // namespace biotjkd

#endif
