#include "mollow/dressed.hpp"

#include <cmath>
#include <stdexcept>

namespace mollow {

double MixingAngle::cos2() const { return std::cos(2.0 * theta); }
double MixingAngle::sin2() const { return std::sin(2.0 * theta); }

double generalized_rabi(double omega, double delta) {
    if (!(omega > 0.0)) throw std::invalid_argument("generalized_rabi: Omega must be > 0");
    return std::hypot(omega, delta);
}

MixingAngle mixing_angle(double omega, double delta) {
    if (!(omega > 0.0)) throw std::invalid_argument("mixing_angle: Omega must be > 0");
    // atan2(sin 2theta, cos 2theta) lands in (0, pi) because Omega > 0.
    return {0.5 * std::atan2(omega, -delta)};
}

std::pair<double, double> quasi_energies(int n, double omega_laser, double omega_eg, double omega,
                                         double delta) {
    if (n < 0) throw std::invalid_argument("quasi_energies: n must be >= 0");
    const double base = (n + 0.5) * omega_laser + 0.5 * omega_eg;
    const double half = 0.5 * generalized_rabi(omega, delta);
    return {base + half, base - half};
}

DressedLevel dressed_level(Branch b, int n, double omega_laser, double omega_eg, double omega,
                           double delta) {
    const auto th = mixing_angle(omega, delta).theta;
    const auto [ep, em] = quasi_energies(n, omega_laser, omega_eg, omega, delta);
    DressedLevel l;
    l.branch = b;
    l.n_photons = n;
    if (b == Branch::plus) {
        l.energy = ep;
        l.c_e = std::cos(th);
        l.c_g = std::sin(th);
    } else {
        l.energy = em;
        l.c_e = -std::sin(th);
        l.c_g = std::cos(th);
    }
    return l;
}

double match_classical(int n, double field_per_photon) {
    if (n < 0) throw std::invalid_argument("match_classical: n must be >= 0");
    return 2.0 * std::sqrt(n + 1.0) * field_per_photon;
}

double match_quantum(int n, double classical_field) {
    if (n < 0) throw std::invalid_argument("match_quantum: n must be >= 0");
    return classical_field / (2.0 * std::sqrt(n + 1.0));
}

}  // namespace mollow
