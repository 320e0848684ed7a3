#pragma once

#include <complex>
#include <string>

#include "mollow/constants.hpp"
#include "mollow/green.hpp"
#include "mollow/hydrogen.hpp"
#include "mollow/spectrum.hpp"

namespace mollow {

enum class ChannelId { REL, LAMB, BS, OR, R_DIPOLE, FIELD, CTERM, TDM, SECULAR };
enum class ChannelKind { detuning, rabi };

std::string to_string(ChannelId id);

struct CorrectionChannel {
    ChannelId id = ChannelId::LAMB;
    ChannelKind kind = ChannelKind::detuning;
    // Detuning type: displacement p in Hz (Delta -> Delta - p).
    // Rabi type: relative modification rho (Omega -> Omega (1 + rho)).
    UncertainValue parameter;
    UncertainValue shift_plus;  // summed shift of omega_+, Hz
    double first_order = 0.0;   // first-order shift of omega_+, Hz
    bool in_aggregate = true;
    bool valid = true;          // false when the channel's small-parameter assumption fails

    UncertainValue shift_minus() const { return {-shift_plus.value, shift_plus.sigma}; }
};

// sqrt(Omega^2 + (Delta - p)^2) - sqrt(Omega^2 + Delta^2), cancellation-free.
double summed_detuning_shift(double omega, double delta, double p);
// sqrt(Omega^2 (1 + rho)^2 + Delta^2) - sqrt(Omega^2 + Delta^2), cancellation-free.
double summed_rabi_shift(double omega, double delta, double rho);
double first_order_detuning_shift(double omega, double delta, double p);
double first_order_rabi_shift(double omega, double delta, double rho);

CorrectionChannel detuning_channel(ChannelId id, UncertainValue p, const DriveParams& d);
CorrectionChannel rabi_channel(ChannelId id, UncertainValue rho, const DriveParams& d);

// E_rel^(j): order (Z alpha)^4 part of E(2P_j) - E(1S_{1/2}), Hz.
UncertainValue relativistic_energy(J j, const PhysicalConstants& c = {});
CorrectionChannel relativistic_detuning(J j, const DriveParams& d, const PhysicalConstants& c = {});

CorrectionChannel bare_lamb(const TransitionSpec& t, const DriveParams& d);

// B = 1/(4 omega_R), 1/Hz.
double bloch_siegert_coefficient(const PhysicalConstants& c = {});
CorrectionChannel bloch_siegert(const DriveParams& d, const PhysicalConstants& c = {});
// 2 Delta E_+ from the unexpanded counter-rotating result (both printed forms).
double bloch_siegert_exact_shift(const DriveParams& d);
double bloch_siegert_exact_shift_alt(const DriveParams& d);

struct ComplexUncertain {
    UncertainValue re, im;
    std::complex<double> value() const { return {re.value, im.value}; }
};

struct OffResonantConstant {
    std::complex<double> D;           // 1/Hz
    ComplexUncertain D_omega_r;       // D * omega_R with adopted uncertainty
    std::complex<double> D_atomic;    // D * (Z alpha)^2 m
    std::complex<double> t[4];        // t_2P(E1), t_2P(E2), t_1S(E3), t_1S(E4)
    std::complex<double> elements[4]; // M_e(E1), M_e(E2), M_g(E3), M_g(E4), atomic units
    bool branch_conjugated = false;
    green::PoleConvention convention = green::PoleConvention::exclude_resonant;
};

// Evaluated at the approximated energies E1 -> w_g, E2 -> w_g + 2 w_R,
// E3 -> w_g - w_R, E4 -> w_g + w_R. The default convention reproduces the
// published constant; exact_limit gives the analytic reduced-Green limit.
OffResonantConstant off_resonant_constant(
    const PhysicalConstants& c = {},
    green::PoleConvention conv = green::PoleConvention::exclude_resonant);

struct OffResonantResult {
    CorrectionChannel channel;
    OffResonantConstant constant;
    double ionization = 0.0;  // |D_I| Omega^2, Hz
};

OffResonantResult off_resonant(const DriveParams& d, const PhysicalConstants& c = {},
                               green::PoleConvention conv = green::PoleConvention::exclude_resonant);

// Rabi-type parameters; the returned value is rho itself.
UncertainValue relativistic_dipole(J j, const PhysicalConstants& c = {});
UncertainValue field_configuration(const PhysicalConstants& c = {});
// Relative correction from <1S| z x^2 |2P>/<1S| z |2P> * k^2/6 with
// k = (3/8)(Z alpha)^2 m; equals (Z alpha)^2/16.
double field_configuration_multipole(const PhysicalConstants& c = {});
// The same ratio with a (kx)^2/2 weight; differs from the above.
double field_configuration_naive(const PhysicalConstants& c = {});

// C_j with the (-2 +- 2) nonlogarithmic estimate; rho = -C_j.
UncertainValue c_term(J j, const PhysicalConstants& c = {}, bool include_estimate = true);
// A_j; rho = +A_j.
UncertainValue tdm_radiative(J j, const PhysicalConstants& c = {});
// Log coefficient c1 and constant c2 of A_j in units of alpha (Z alpha)^2.
double tdm_log_coefficient();
double tdm_constant_coefficient(J j);

// S = (Gamma/Omega)^2/2; rho = -S.
UncertainValue secular_correction(const DriveParams& d);
// (4 + y^2)/(8 (1 + y^2)) (Gamma/Omega)^2.
double secular_correction_full(const DriveParams& d);

// (Delta/Omega_R) |D_I| Omega^2, Hz.
double imaginary_sideband_width(const DriveParams& d, std::complex<double> D);

}  // namespace mollow
