#include "mollow/spectrum.hpp"

#include <stdexcept>

namespace mollow {

void validate(const DriveParams& d) {
    if (!(d.omega_rabi > 0.0)) throw std::invalid_argument("DriveParams: Omega must be > 0");
    if (!(d.gamma > 0.0)) throw std::invalid_argument("DriveParams: Gamma must be > 0");
    if (!(d.omega_laser > 0.0)) throw std::invalid_argument("DriveParams: omega_L must be > 0");
}

SecularComponents secular_components(const DriveParams& d) {
    validate(d);
    const double o2 = d.omega_rabi * d.omega_rabi;
    const double d2 = d.detuning * d.detuning;
    const double r2 = o2 + d2;
    SecularComponents s;
    s.A0 = o2 * o2 * o2 / (4.0 * r2 * (r2 + d2) * (r2 + d2));
    s.Aplus = s.Aminus = o2 * o2 / (8.0 * r2 * (r2 + d2));
    s.Gamma0 = d.gamma * (o2 + 2.0 * d2) / (2.0 * r2);
    s.GammaPlus = s.GammaMinus = d.gamma * (3.0 * o2 + 2.0 * d2) / (4.0 * r2);
    return s;
}

double spectrum_exact(double omega, const DriveParams& d) {
    validate(d);
    return spectrum_exact_offset<double>(omega - d.omega_laser, d.omega_rabi, d.detuning, d.gamma);
}

double spectrum_secular(double omega, const DriveParams& d) {
    validate(d);
    return spectrum_secular_offset<double>(omega - d.omega_laser, d.omega_rabi, d.detuning, d.gamma);
}

std::pair<double, double> sideband_positions_series(const DriveParams& d) {
    validate(d);
    auto [p, m] = sideband_offsets_series<double>(d.omega_rabi, d.detuning, d.gamma);
    return {d.omega_laser + p, d.omega_laser + m};
}

std::array<double, 3> find_peaks_numeric(const DriveParams& d, double rel_tol) {
    validate(d);
    auto x = find_peak_offsets<double>(d.omega_rabi, d.detuning, d.gamma, rel_tol);
    return {d.omega_laser + x[0], d.omega_laser + x[1], d.omega_laser + x[2]};
}

}  // namespace mollow
