#pragma once

#include <utility>

namespace mollow {

// cos 2theta = -Delta/Omega_R, sin 2theta = Omega/Omega_R, theta in (0, pi/2).
struct MixingAngle {
    double theta = 0.0;
    double cos2() const;
    double sin2() const;
};

enum class Branch { plus, minus };

struct DressedLevel {
    Branch branch = Branch::plus;
    int n_photons = 0;
    double energy = 0.0;  // Hz
    double c_e = 0.0;     // amplitude on |e, n>
    double c_g = 0.0;     // amplitude on |g, n+1>
};

double generalized_rabi(double omega, double delta);
MixingAngle mixing_angle(double omega, double delta);

// (E_+, E_-), Hz.
std::pair<double, double> quasi_energies(int n, double omega_laser, double omega_eg, double omega,
                                         double delta);

DressedLevel dressed_level(Branch b, int n, double omega_laser, double omega_eg, double omega,
                           double delta);

// Quantum single-photon field -> classical amplitude and back.
double match_classical(int n, double field_per_photon);
double match_quantum(int n, double classical_field);

}  // namespace mollow
