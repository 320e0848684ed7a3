#include "mollow/corrections.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mollow {

std::string to_string(ChannelId id) {
    switch (id) {
        case ChannelId::REL: return "REL";
        case ChannelId::LAMB: return "LAMB";
        case ChannelId::BS: return "BS";
        case ChannelId::OR: return "OR";
        case ChannelId::R_DIPOLE: return "R_DIPOLE";
        case ChannelId::FIELD: return "FIELD";
        case ChannelId::CTERM: return "CTERM";
        case ChannelId::TDM: return "TDM";
        case ChannelId::SECULAR: return "SECULAR";
    }
    return "?";
}

double summed_detuning_shift(double omega, double delta, double p) {
    const double a = std::hypot(omega, delta - p);
    const double b = std::hypot(omega, delta);
    return p * (p - 2.0 * delta) / (a + b);
}

double summed_rabi_shift(double omega, double delta, double rho) {
    const double a = std::hypot(omega * (1.0 + rho), delta);
    const double b = std::hypot(omega, delta);
    return omega * omega * rho * (2.0 + rho) / (a + b);
}

double first_order_detuning_shift(double omega, double delta, double p) {
    return -delta / std::hypot(omega, delta) * p;
}

double first_order_rabi_shift(double omega, double delta, double rho) {
    return omega * omega / std::hypot(omega, delta) * rho;
}

CorrectionChannel detuning_channel(ChannelId id, UncertainValue p, const DriveParams& d) {
    CorrectionChannel ch;
    ch.id = id;
    ch.kind = ChannelKind::detuning;
    ch.parameter = p;
    const double shift = summed_detuning_shift(d.omega_rabi, d.detuning, p.value);
    const double slope = -(d.detuning - p.value) / std::hypot(d.omega_rabi, d.detuning - p.value);
    ch.shift_plus = {shift, std::abs(slope) * p.sigma};
    ch.first_order = first_order_detuning_shift(d.omega_rabi, d.detuning, p.value);
    return ch;
}

CorrectionChannel rabi_channel(ChannelId id, UncertainValue rho, const DriveParams& d) {
    CorrectionChannel ch;
    ch.id = id;
    ch.kind = ChannelKind::rabi;
    ch.parameter = rho;
    const double shift = summed_rabi_shift(d.omega_rabi, d.detuning, rho.value);
    const double o2 = d.omega_rabi * d.omega_rabi;
    const double slope = o2 * (1.0 + rho.value) / std::hypot(d.omega_rabi * (1.0 + rho.value), d.detuning);
    ch.shift_plus = {shift, std::abs(slope) * rho.sigma};
    ch.first_order = first_order_rabi_shift(d.omega_rabi, d.detuning, rho.value);
    return ch;
}

// ---- detuning-type channels ----------------------------------------------

UncertainValue relativistic_energy(J j, const PhysicalConstants& c) {
    // Dirac minus Schroedinger transition energy; only the (Z alpha)^4 term survives.
    const double za2 = c.z_alpha() * c.z_alpha();
    const double rel_2p = -za2 * za2 * c.m_freq / 8.0 * (1.0 / (two_j(j) + 1.0) - 3.0 / 16.0);
    const double rel_1s = -za2 * za2 * c.m_freq * (0.5 - 3.0 / 8.0);
    const double e = rel_2p - rel_1s;
    return {e, za2 * std::abs(e)};
}

CorrectionChannel relativistic_detuning(J j, const DriveParams& d, const PhysicalConstants& c) {
    validate(d);
    auto ch = detuning_channel(ChannelId::REL, relativistic_energy(j, c), d);
    ch.in_aggregate = false;
    return ch;
}

CorrectionChannel bare_lamb(const TransitionSpec& t, const DriveParams& d) {
    validate(d);
    return detuning_channel(ChannelId::LAMB, t.lamb_bare(), d);
}

double bloch_siegert_coefficient(const PhysicalConstants& c) { return 0.25 / resonance_frequency(c); }

CorrectionChannel bloch_siegert(const DriveParams& d, const PhysicalConstants& c) {
    validate(d);
    const double p = bloch_siegert_coefficient(c) * d.omega_rabi * d.omega_rabi;
    const double small = std::max(std::abs(d.detuning), d.omega_rabi) / d.omega_laser;
    auto ch = detuning_channel(ChannelId::BS, {p, std::abs(p) * small}, d);
    ch.valid = small < 1e-2;
    return ch;
}

double bloch_siegert_exact_shift(const DriveParams& d) {
    validate(d);
    const double rabi = d.generalized_rabi();
    const double r = rabi / d.omega_laser;
    const double c2 = -d.detuning / rabi;
    const double c4 = 2.0 * c2 * c2 - 1.0;
    const double e_plus = d.omega_rabi * d.omega_rabi / d.omega_laser * (8.0 * c2 - r * (3.0 + c4)) /
                          (64.0 - 16.0 * r * r);
    return 2.0 * e_plus;
}

double bloch_siegert_exact_shift_alt(const DriveParams& d) {
    validate(d);
    const double o2 = d.omega_rabi * d.omega_rabi, d2 = d.detuning * d.detuning;
    const double wl = d.omega_laser;
    const double e_plus = 0.125 * o2 / d.generalized_rabi() * (2.0 * d2 + o2 + 4.0 * d.detuning * wl) /
                          (d2 + o2 - 4.0 * wl * wl);
    return 2.0 * e_plus;
}

OffResonantConstant off_resonant_constant(const PhysicalConstants& c, green::PoleConvention conv) {
    using green::PoleMethod;
    const double wg = schroedinger_energy(1, c);
    const double wr = resonance_frequency(c);
    const double energies[4] = {wg, wg + 2.0 * wr, wg - wr, wg + wr};

    OffResonantConstant r;
    r.convention = conv;
    auto evaluate = [&](bool conjugate) {
        for (int i = 0; i < 4; ++i) {
            const int n = i < 2 ? 2 : 1;
            auto t = t_of_energy(n, energies[i], c);
            if (conjugate) t = std::conj(t);
            r.t[i] = t;
            r.elements[i] = n == 2 ? green::reduced_matrix_e_t(t, PoleMethod::analytic, conv)
                                   : green::reduced_matrix_g_t(t, PoleMethod::analytic, conv);
        }
        r.D_atomic = (r.elements[2] + r.elements[3] - r.elements[0] - r.elements[1]) /
                     (4.0 * green::kDipoleSquared);
    };
    evaluate(false);
    if (!(r.D_atomic.imag() < 0.0)) {
        evaluate(true);
        r.branch_conjugated = true;
        if (!(r.D_atomic.imag() < 0.0))
            throw std::runtime_error("off_resonant: no branch gives Im(D) < 0");
    }
    r.D = r.D_atomic / c.atomic_energy();
    const std::complex<double> dw = r.D * wr;
    // Adopted uncertainty of the published constant, in units of 1/omega_R.
    r.D_omega_r = {{dw.real(), 3e-4}, {dw.imag(), 6e-6}};
    return r;
}

OffResonantResult off_resonant(const DriveParams& d, const PhysicalConstants& c, green::PoleConvention conv) {
    validate(d);
    OffResonantResult r;
    r.constant = off_resonant_constant(c, conv);
    const double wr = resonance_frequency(c);
    const double o2 = d.omega_rabi * d.omega_rabi;
    const UncertainValue p{r.constant.D_omega_r.re.value / wr * o2, r.constant.D_omega_r.re.sigma / wr * o2};
    r.channel = detuning_channel(ChannelId::OR, p, d);
    r.channel.valid = std::max(d.omega_rabi, std::abs(d.detuning)) / wr < 1e-2;
    r.ionization = std::abs(r.constant.D.imag()) * o2;
    return r;
}

// ---- Rabi-type channels ----------------------------------------------------

UncertainValue relativistic_dipole(J j, const PhysicalConstants& c) {
    const double za2 = c.z_alpha() * c.z_alpha();
    const double ln2 = std::numbers::ln2, ln3 = std::log(3.0);
    const double e = j == J::half ? za2 * (13.0 / 32.0 + 1.5 * ln2 - ln3)
                                  : za2 * (31.0 / 96.0 + 1.25 * ln2 - 0.75 * ln3);
    return {-e, za2 * std::abs(e)};
}

UncertainValue field_configuration(const PhysicalConstants& c) {
    const double za2 = c.z_alpha() * c.z_alpha();
    const double f = za2 / 16.0;
    return {-f, za2 * f};
}

namespace {

// <1S| z x^2 |2P,0> / <1S| z |2P,0> in a_B^2: radial r^3 over r moments
// times the angular ratio <Y00| cos sin^2 cos^2phi |Y10> / <Y00| cos |Y10>.
double zx2_ratio() {
    // int r^{n} e^{-3r/2} dr = n!/(3/2)^{n+1}; radial ratio = 6!/4! (2/3)^2.
    const double radial = 720.0 / 24.0 * (4.0 / 9.0);
    const double angular = (std::sqrt(3.0) / 15.0) * std::sqrt(3.0);
    return radial * angular;
}

}  // namespace

double field_configuration_multipole(const PhysicalConstants& c) {
    const double k = 0.375 * c.z_alpha();  // omega_R/c in units of 1/a_B
    return zx2_ratio() * k * k / 6.0;
}

double field_configuration_naive(const PhysicalConstants& c) {
    const double k = 0.375 * c.z_alpha();
    return zx2_ratio() * k * k / 2.0;
}

UncertainValue c_term(J, const PhysicalConstants& c, bool include_estimate) {
    const double za2 = c.z_alpha() * c.z_alpha();
    const double pref = c.alpha * za2 * 5.0 / (4.0 * std::numbers::pi);
    if (pref == 0.0) return {0.0, 0.0};
    const double log_term = std::log(1.0 / za2);
    if (!include_estimate) return {pref * log_term, 0.0};
    return {pref * (log_term - 2.0), pref * 2.0};
}

double tdm_log_coefficient() {
    return (4.0 / 3.0 * std::log(4.0 / 3.0) + 131.0 / 36.0) / std::numbers::pi;
}

double tdm_constant_coefficient(J j) { return -(j == J::half ? 9.2 : 9.3) / std::numbers::pi; }

UncertainValue tdm_radiative(J j, const PhysicalConstants& c) {
    const double za2 = c.z_alpha() * c.z_alpha();
    const double unit = c.alpha * za2;
    if (unit == 0.0) return {0.0, 0.0};
    const double log_term = std::log(1.0 / za2);
    const double nlog_sigma = (j == J::half ? 1.8 : 1.9) / std::numbers::pi;
    return {unit * (tdm_log_coefficient() * log_term + tdm_constant_coefficient(j)), unit * nlog_sigma};
}

UncertainValue secular_correction(const DriveParams& d) {
    validate(d);
    const double g = d.gamma / d.omega_rabi;
    const double s = 0.5 * g * g;
    const double dropped = std::abs(secular_correction_full(d) - s) + g * g * g * g;
    return {s, dropped};
}

double secular_correction_full(const DriveParams& d) {
    validate(d);
    const double y2 = (d.detuning / d.omega_rabi) * (d.detuning / d.omega_rabi);
    const double g = d.gamma / d.omega_rabi;
    return (4.0 + y2) / (8.0 * (1.0 + y2)) * g * g;
}

double imaginary_sideband_width(const DriveParams& d, std::complex<double> D) {
    validate(d);
    return std::abs(d.detuning) / d.generalized_rabi() * std::abs(D.imag()) * d.omega_rabi * d.omega_rabi;
}

}  // namespace mollow
