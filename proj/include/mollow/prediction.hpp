#pragma once

#include <complex>
#include <vector>

#include "mollow/constants.hpp"
#include "mollow/corrections.hpp"
#include "mollow/hydrogen.hpp"
#include "mollow/spectrum.hpp"

namespace mollow {

// Omega = h Gamma_j, Delta = (Delta/Gamma) Gamma_j, omega_L = omega_R + Delta.
DriveParams drive_for(const TransitionSpec& t, double h, double delta_over_gamma,
                      const PhysicalConstants& c = {});

struct CorrectionBreakdown {
    TransitionSpec transition;
    DriveParams drive;
    std::vector<CorrectionChannel> channels;  // REL first; REL is not aggregated
    UncertainValue delta_rad;                 // Hz
    UncertainValue omega_hat_rad;             // dimensionless
    UncertainValue omega_c;                   // Hz, sigma in quadrature
    double omega_c_sigma_worst = 0.0;         // Hz, linear sum of |partial| sigma
    UncertainValue omega_no_c;                // Hz, C_j set to exactly zero
    double bare = 0.0;                        // sqrt(Omega^2 + Delta^2), Hz
    double first_order_shift = 0.0;           // sum of first-order channel shifts of omega_+
    std::complex<double> D;                   // 1/Hz
    double ionization = 0.0;                  // Hz
    double imaginary_width = 0.0;             // Hz
    double theta_corr = 0.0;                  // corrected mixing angle

    const CorrectionChannel& channel(ChannelId id) const;
};

struct AggregateOptions {
    bool include_c_term = true;
    // Multiplies every channel parameter; used by series-consistency checks.
    double parameter_scale = 1.0;
    green::PoleConvention convention = green::PoleConvention::exclude_resonant;
};

CorrectionBreakdown aggregate(const TransitionSpec& t, const DriveParams& d, const PhysicalConstants& c = {},
                              const AggregateOptions& opt = {});

// Omega_C with C_j := 0.
UncertainValue prediction_without_c(const TransitionSpec& t, const DriveParams& d,
                                    const PhysicalConstants& c = {});

// Omega_C - sqrt(Omega^2 + Delta^2).
UncertainValue headline_shift(const CorrectionBreakdown& b);

struct TableRow {
    ChannelId id;
    J j;
    UncertainValue shift_khz;  // summed shift of omega_+
};

// Eight rows per transition (LAMB, BS, OR, R_DIPOLE, FIELD, CTERM, TDM, SECULAR),
// j = 1/2 first.
std::vector<TableRow> table_one(double h, double delta_over_gamma, const HydrogenData& data = {},
                                const PhysicalConstants& c = {});

// h per unit standing-wave field amplitude, (V/m)^-1.
double h_coefficient(const TransitionSpec& t, const PhysicalConstants& c = {});
double h_from_field(const TransitionSpec& t, double e_sw, const PhysicalConstants& c = {});

}  // namespace mollow
