#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "mollow/constants.hpp"

namespace mollow {

// Upper fine-structure level of the driven 1S_{1/2} - 2P_j transition.
enum class J { half, three_half };

int two_j(J j);
std::string to_string(J j);
J parse_j(const std::string& s);  // "1/2" or "3/2"

struct HydrogenLevel {
    int n = 1;
    int l = 0;
    int two_j = 1;
    int two_m = 1;
};

// m - (Z alpha)^2 m/(2 n^2) - ((Z alpha)^4 m/n^3)(1/(2j+1) - 3/(8n)), Hz.
double dirac_energy(int n, int two_j, const PhysicalConstants& c);

enum class Axis { x, y, z };

// <bra| x^i |ket> in units of 1/(Z alpha m). Only 1S_{1/2} bras and
// 2P_{1/2}, 2P_{3/2} kets are supported.
std::complex<double> dipole_element(Axis axis, const HydrogenLevel& bra, const HydrogenLevel& ket);
double dipole_z(const HydrogenLevel& bra, const HydrogenLevel& ket);

// <1S| z |2P, m=0> without spin: (2^7/3^5) sqrt 2.
double dipole_spinless_z();
// |<1S|z|2P,m=0>|^2 = 2^15/3^10.
double dipole_spinless_z_squared();

// <1S_{1/2}, 1/2| z |2P_j, 1/2>.
double transition_dipole_z(J j);

// (2^8/3^8) alpha (Z alpha)^4 m, Hz.
double decay_rate_lowest_order(const PhysicalConstants& c);

// Measured inputs. Lamb shifts and widths in Hz.
struct HydrogenData {
    UncertainValue lamb_1s{8172811e3, 32e3};
    UncertainValue lamb_2p_half{-12835.99e3, 0.08e3};
    UncertainValue lamb_2p_three_half{12517.46e3, 0.08e3};
    // 99.70942(1) MHz as usually quoted; the unrounded 99.709416 MHz is used.
    UncertainValue gamma_half{99.709416e6, 10.0};
    UncertainValue gamma_three_half{99.709416e6, 10.0};
    double e_hfs = 0.0;  // optional additive shift on transition frequencies
};

HydrogenData hydrogen_data_from(const std::map<std::string, std::string>& kv, HydrogenData base = {});

struct TransitionSpec {
    J j = J::half;
    UncertainValue lamb_1s;
    UncertainValue lamb_2p;
    UncertainValue gamma;
    double e_hfs = 0.0;

    // L_2P - L_1S.
    UncertainValue lamb_bare() const;
};

TransitionSpec transition(J j, const HydrogenData& data = {});

// Nonrelativistic Schroedinger level -(Z alpha)^2 m/(2 n^2), Hz.
double schroedinger_energy(int n, const PhysicalConstants& c);

// t_n(E) = sqrt(E_n/E) on the principal branch; for E_n/E on the negative
// real axis the root has positive imaginary part.
std::complex<double> t_of_energy(int n, std::complex<double> energy, const PhysicalConstants& c);
std::complex<double> zeta_of_t(int n, std::complex<double> t, const PhysicalConstants& c);

}  // namespace mollow
