#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mollow {

// One-sigma value. Units are implied by the call site.
struct UncertainValue {
    double value = 0.0;
    double sigma = 0.0;

    UncertainValue() = default;
    UncertainValue(double v, double s = 0.0);
};

// value = sum c_i x_i, sigma added in quadrature (independent sources).
UncertainValue combine_linear(const std::vector<std::pair<double, UncertainValue>>& terms);

// Worst-case variant: sigma = sum |c_i| sigma_i.
UncertainValue combine_worst_case(const std::vector<std::pair<double, UncertainValue>>& terms);

// Energies are ordinary frequencies (E/h) in Hz throughout.
struct PhysicalConstants {
    double alpha = 7.2973525693e-3;           // CODATA 2018
    int Z = 1;
    double m_freq = 1.235589963816689e20;     // m_e c^2 / h in Hz
    int charge_sign = -1;                     // q = -|q|

    // SI values, used only for field-strength conversions.
    double c_light = 299792458.0;
    double e_charge = 1.602176634e-19;
    double h_planck = 6.62607015e-34;

    double z_alpha() const { return Z * alpha; }
    // (Z alpha)^2 m: the atomic energy unit, Hz.
    double atomic_energy() const { return z_alpha() * z_alpha() * m_freq; }
    // a_B = 1/(Z alpha m) in metres.
    double bohr_radius_m() const;
    double hbar() const;
};

// (3/8)(Z alpha)^2 m, Hz.
double resonance_frequency(const PhysicalConstants& c);

// Flat key=value parsing. '#' starts a comment, blank lines are skipped.
// Throws std::runtime_error with the offending line number on malformed input.
std::map<std::string, std::string> parse_key_values(const std::string& text);
std::map<std::string, std::string> load_key_values(const std::string& path);

double parse_double(const std::string& key, const std::string& text);
UncertainValue parse_uncertain(const std::string& key, const std::string& text);

// Applies alpha, Z, m_freq, c_light, e_charge, h_planck. Unknown keys are
// left for other modules; see apply_overrides in hydrogen.hpp.
PhysicalConstants constants_from(const std::map<std::string, std::string>& kv,
                                 PhysicalConstants base = {});

}  // namespace mollow
