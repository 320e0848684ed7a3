#pragma once

#include <array>
#include <boost/math/differentiation/autodiff.hpp>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mollow {

struct DriveParams {
    double omega_rabi = 0.0;   // Omega, Hz
    double detuning = 0.0;     // Delta = omega_L - omega_eg, Hz
    double gamma = 0.0;        // Gamma, Hz
    double omega_laser = 0.0;  // omega_L, Hz

    double generalized_rabi() const { return std::hypot(omega_rabi, detuning); }
};

void validate(const DriveParams& d);

struct SecularComponents {
    double A0 = 0, Aplus = 0, Aminus = 0;
    double Gamma0 = 0, GammaPlus = 0, GammaMinus = 0;
};

SecularComponents secular_components(const DriveParams& d);

// Spectral density in 1/Hz. The *_offset forms take x = omega - omega_L and
// are templated so callers can evaluate in extended precision.
template <class R>
R spectrum_exact_offset(R x, R omega, R delta, R gamma) {
    using std::atan;
    const R pi = 4 * atan(R(1));
    const R x2 = x * x, d2 = delta * delta, o2 = omega * omega, g2 = gamma * gamma;
    const R a = d2 + o2 - x2;
    const R X0 = 16 * a * a * x2;
    const R b = 2 * d2 + o2;
    const R X2 = 4 * (6 * x2 * x2 - 2 * (3 * d2 - o2) * x2 + b * b);
    const R X4 = 8 * d2 + 4 * o2 + 9 * x2;
    const R den = X0 + g2 * (X2 + g2 * (X4 + g2));
    return gamma / pi * (2 * g2 + o2 + 2 * x2) / (g2 + 2 * o2 + 4 * d2) * 4 * gamma * o2 * o2 / den;
}

template <class R>
R spectrum_secular_offset(R x, R omega, R delta, R gamma) {
    using std::atan;
    using std::sqrt;
    const R pi = 4 * atan(R(1));
    const R o2 = omega * omega, d2 = delta * delta;
    const R r2 = o2 + d2;
    const R rabi = sqrt(r2);
    const R A0 = o2 * o2 * o2 / (4 * r2 * (r2 + d2) * (r2 + d2));
    const R Apm = o2 * o2 / (8 * r2 * (r2 + d2));
    const R G0 = gamma * (o2 + 2 * d2) / (2 * r2);
    const R Gpm = gamma * (3 * o2 + 2 * d2) / (4 * r2);
    const R xp = x - rabi, xm = x + rabi;
    return gamma / pi *
           (G0 * A0 / (x * x + G0 * G0) + Gpm * Apm / (xp * xp + Gpm * Gpm) +
            Gpm * Apm / (xm * xm + Gpm * Gpm));
}

double spectrum_exact(double omega, const DriveParams& d);
double spectrum_secular(double omega, const DriveParams& d);

// Sideband offsets omega_pm - omega_L from the (Gamma/Omega_R)^4 series.
template <class R>
std::pair<R, R> sideband_offsets_series(R omega, R delta, R gamma) {
    using std::sqrt;
    const R rabi = sqrt(omega * omega + delta * delta);
    const R g = gamma / rabi;
    if (!(g < R(1))) throw std::domain_error("sideband series: Gamma/Omega_R >= 1");
    const R y2 = (delta / omega) * (delta / omega);
    const R g2 = g * g;
    const R f = 1 - (4 + y2) / (8 * (1 + y2)) * g2 -
                (70 + 8 * y2 + y2 * y2) / (128 * (1 + y2) * (1 + y2)) * g2 * g2;
    return {rabi * f, -rabi * f};
}

// (omega_+, omega_-) absolute, Hz.
std::pair<double, double> sideband_positions_series(const DriveParams& d);

struct PeaksUnresolved : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maxima of the exact spectrum as offsets from omega_L, ordered (+, 0, -).
// Sign of the derivative is bracketed on a grid of `grid` points over
// [-2 Omega_R, 2 Omega_R], then bisected until the bracket is below
// rel_tol * Omega_R.
template <class R>
std::array<R, 3> find_peak_offsets(R omega, R delta, R gamma, R rel_tol = R(1e-12), int grid = 1000) {
    using std::abs;
    using std::sqrt;
    if (!(gamma < omega)) throw PeaksUnresolved("peaks unresolved: Omega must exceed Gamma");
    const R rabi = sqrt(omega * omega + delta * delta);
    // Exact first derivative; a finite difference cannot resolve the flat top.
    auto slope_positive = [&](R x) {
        using F = boost::math::differentiation::autodiff_v1::detail::fvar<R, 1>;
        return spectrum_exact_offset<F>(F(x, true), F(omega, false), F(delta, false), F(gamma, false))
                   .derivative(1) > 0;
    };
    std::array<R, 3> lo{}, hi{};
    int found = 0;
    const R x0 = -2 * rabi;
    const R dx = 4 * rabi / R(grid - 1);
    bool prev = slope_positive(x0);
    for (int i = 1; i < grid; ++i) {
        const R x = x0 + dx * R(i);
        const bool cur = slope_positive(x);
        if (prev && !cur) {
            if (found == 3) throw PeaksUnresolved("peaks unresolved: more than three maxima");
            lo[found] = x - dx;
            hi[found] = x;
            ++found;
        }
        prev = cur;
    }
    if (found != 3) throw PeaksUnresolved("peaks unresolved: found fewer than three maxima");
    const R tol = rel_tol * rabi;
    std::array<R, 3> peaks{};
    for (int k = 0; k < 3; ++k) {
        R a = lo[k], b = hi[k];
        while (b - a > tol) {
            const R m = (a + b) / 2;
            if (slope_positive(m))
                a = m;
            else
                b = m;
        }
        peaks[k] = (a + b) / 2;
    }
    return {peaks[2], peaks[1], peaks[0]};
}

// (omega_+, omega_0, omega_-) absolute, Hz.
std::array<double, 3> find_peaks_numeric(const DriveParams& d, double rel_tol = 1e-12);

}  // namespace mollow
