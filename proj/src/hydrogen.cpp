#include "mollow/hydrogen.hpp"

#include <cmath>
#include <stdexcept>

namespace mollow {

int two_j(J j) { return j == J::half ? 1 : 3; }

std::string to_string(J j) { return j == J::half ? "1/2" : "3/2"; }

J parse_j(const std::string& s) {
    if (s == "1/2" || s == "0.5") return J::half;
    if (s == "3/2" || s == "1.5") return J::three_half;
    throw std::invalid_argument("j must be 1/2 or 3/2, got: " + s);
}

double dirac_energy(int n, int tj, const PhysicalConstants& c) {
    if (n < 1 || tj < 1 || tj % 2 == 0 || tj > 2 * n - 1)
        throw std::invalid_argument("dirac_energy: invalid quantum numbers");
    const double za2 = c.z_alpha() * c.z_alpha();
    const double nn = n;
    return c.m_freq - za2 * c.m_freq / (2.0 * nn * nn) -
           za2 * za2 * c.m_freq / (nn * nn * nn) * (1.0 / (tj + 1.0) - 3.0 / (8.0 * nn));
}

namespace {

// Radial integral <R_1S| r |R_2P> = (2^7/3^5) sqrt 6.
const double kRadial = 128.0 / 243.0 * std::sqrt(6.0);

// <Y00| x^i/r |Y1,ml> (Condon-Shortley phases).
std::complex<double> angular(Axis a, int ml) {
    const double s6 = 1.0 / std::sqrt(6.0);
    switch (a) {
        case Axis::z: return ml == 0 ? 1.0 / std::sqrt(3.0) : 0.0;
        case Axis::x: return ml == 1 ? -s6 : (ml == -1 ? s6 : 0.0);
        case Axis::y: return (ml == 1 || ml == -1) ? std::complex<double>(0.0, -s6) : 0.0;
    }
    return 0.0;
}

// <1 ml, 1/2 ms | j m> for l = 1; two_* arguments are doubled.
double clebsch(int tj, int tm, int tms) {
    const double m = tm / 2.0;
    if (tj == 3) return tms > 0 ? std::sqrt((1.5 + m) / 3.0) : std::sqrt((1.5 - m) / 3.0);
    return tms > 0 ? -std::sqrt((1.5 - m) / 3.0) : std::sqrt((1.5 + m) / 3.0);
}

void check_levels(const HydrogenLevel& bra, const HydrogenLevel& ket) {
    if (bra.n != 1 || bra.l != 0 || bra.two_j != 1 || std::abs(bra.two_m) != 1)
        throw std::invalid_argument("dipole: bra must be 1S_{1/2}");
    if (ket.n != 2 || ket.l != 1 || (ket.two_j != 1 && ket.two_j != 3) ||
        std::abs(ket.two_m) > ket.two_j || (ket.two_m % 2) == 0)
        throw std::invalid_argument("dipole: ket must be 2P_{1/2} or 2P_{3/2}");
}

}  // namespace

std::complex<double> dipole_element(Axis axis, const HydrogenLevel& bra, const HydrogenLevel& ket) {
    check_levels(bra, ket);
    // Spin is conserved by x^i: the spin projection of the ket must equal bra.two_m.
    const int tms = bra.two_m;
    const int tml = ket.two_m - tms;
    if (std::abs(tml) > 2) return 0.0;
    return kRadial * clebsch(ket.two_j, ket.two_m, tms) * angular(axis, tml / 2);
}

double dipole_z(const HydrogenLevel& bra, const HydrogenLevel& ket) {
    return dipole_element(Axis::z, bra, ket).real();
}

double dipole_spinless_z() { return 128.0 / 243.0 * std::sqrt(2.0); }

double dipole_spinless_z_squared() { return 32768.0 / 59049.0; }

double transition_dipole_z(J j) {
    return dipole_z({1, 0, 1, 1}, {2, 1, two_j(j), 1});
}

double decay_rate_lowest_order(const PhysicalConstants& c) {
    const double za = c.z_alpha();
    return 256.0 / 6561.0 * c.alpha * za * za * za * za * c.m_freq;
}

HydrogenData hydrogen_data_from(const std::map<std::string, std::string>& kv, HydrogenData base) {
    for (const auto& [k, v] : kv) {
        if (k == "lamb_1s")
            base.lamb_1s = parse_uncertain(k, v);
        else if (k == "lamb_2p_half")
            base.lamb_2p_half = parse_uncertain(k, v);
        else if (k == "lamb_2p_three_half")
            base.lamb_2p_three_half = parse_uncertain(k, v);
        else if (k == "gamma_half")
            base.gamma_half = parse_uncertain(k, v);
        else if (k == "gamma_three_half")
            base.gamma_three_half = parse_uncertain(k, v);
        else if (k == "e_hfs")
            base.e_hfs = parse_double(k, v);
    }
    if (!(base.gamma_half.value > 0.0) || !(base.gamma_three_half.value > 0.0))
        throw std::runtime_error("config: decay widths must be > 0");
    return base;
}

UncertainValue TransitionSpec::lamb_bare() const {
    return combine_linear({{1.0, lamb_2p}, {-1.0, lamb_1s}});
}

TransitionSpec transition(J j, const HydrogenData& data) {
    TransitionSpec t;
    t.j = j;
    t.lamb_1s = data.lamb_1s;
    t.lamb_2p = j == J::half ? data.lamb_2p_half : data.lamb_2p_three_half;
    t.gamma = j == J::half ? data.gamma_half : data.gamma_three_half;
    t.e_hfs = data.e_hfs;
    return t;
}

double schroedinger_energy(int n, const PhysicalConstants& c) {
    if (n < 1) throw std::invalid_argument("schroedinger_energy: n must be >= 1");
    return -c.atomic_energy() / (2.0 * n * n);
}

std::complex<double> t_of_energy(int n, std::complex<double> energy, const PhysicalConstants& c) {
    if (energy == 0.0) throw std::invalid_argument("t_of_energy: E = 0");
    std::complex<double> ratio = schroedinger_energy(n, c) / energy;
    // Pin the negative real axis to the upper side so sqrt returns +i.
    if (ratio.imag() == 0.0) ratio = {ratio.real(), 0.0};
    return std::sqrt(ratio);
}

std::complex<double> zeta_of_t(int n, std::complex<double> t, const PhysicalConstants& c) {
    return schroedinger_energy(n, c) / (t * t);
}

}  // namespace mollow
