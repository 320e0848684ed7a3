#include "mollow/prediction.hpp"

#include <cmath>
#include <stdexcept>

namespace mollow {

DriveParams drive_for(const TransitionSpec& t, double h, double delta_over_gamma, const PhysicalConstants& c) {
    if (!(h > 0.0)) throw std::invalid_argument("drive_for: h must be positive");
    DriveParams d;
    d.gamma = t.gamma.value;
    d.omega_rabi = h * d.gamma;
    d.detuning = delta_over_gamma * d.gamma;
    d.omega_laser = resonance_frequency(c) + d.detuning;
    validate(d);
    return d;
}

const CorrectionChannel& CorrectionBreakdown::channel(ChannelId id) const {
    for (const auto& ch : channels)
        if (ch.id == id) return ch;
    throw std::out_of_range("breakdown has no channel " + to_string(id));
}

namespace {

UncertainValue scaled(UncertainValue v, double s) { return {v.value * s, v.sigma * s}; }

CorrectionChannel rebuild(const CorrectionChannel& ch, double s, const DriveParams& d) {
    auto out = ch.kind == ChannelKind::detuning ? detuning_channel(ch.id, scaled(ch.parameter, s), d)
                                                : rabi_channel(ch.id, scaled(ch.parameter, s), d);
    out.in_aggregate = ch.in_aggregate;
    out.valid = ch.valid;
    return out;
}

struct OmegaC {
    UncertainValue value;
    double worst = 0.0;
};

OmegaC corrected_rabi(const DriveParams& d, const std::vector<CorrectionChannel>& chs, double delta_rad,
                      double omega_hat) {
    const double o = d.omega_rabi * (1.0 + omega_hat);
    const double dd = d.detuning - delta_rad;
    const double oc = std::hypot(o, dd);
    const double d_det = -dd / oc;             // dOmega_C/dp
    const double d_rabi = d.omega_rabi * o / oc;  // dOmega_C/drho
    std::vector<std::pair<double, UncertainValue>> terms;
    for (const auto& ch : chs) {
        if (!ch.in_aggregate) continue;
        terms.push_back({ch.kind == ChannelKind::detuning ? d_det : d_rabi, {0.0, ch.parameter.sigma}});
    }
    OmegaC r;
    r.value = {oc, combine_linear(terms).sigma};
    r.worst = combine_worst_case(terms).sigma;
    return r;
}

}  // namespace

CorrectionBreakdown aggregate(const TransitionSpec& t, const DriveParams& d, const PhysicalConstants& c,
                              const AggregateOptions& opt) {
    validate(d);
    CorrectionBreakdown b;
    b.transition = t;
    b.drive = d;
    b.bare = d.generalized_rabi();

    const auto orr = off_resonant(d, c, opt.convention);
    b.D = orr.constant.D;
    b.ionization = orr.ionization;
    b.imaginary_width = imaginary_sideband_width(d, b.D);

    const UncertainValue cj = opt.include_c_term ? c_term(t.j, c) : UncertainValue{0.0, 0.0};
    const UncertainValue s = secular_correction(d);

    std::vector<CorrectionChannel> raw;
    raw.push_back(relativistic_detuning(t.j, d, c));
    raw.push_back(bare_lamb(t, d));
    raw.push_back(bloch_siegert(d, c));
    raw.push_back(orr.channel);
    raw.push_back(rabi_channel(ChannelId::R_DIPOLE, relativistic_dipole(t.j, c), d));
    raw.push_back(rabi_channel(ChannelId::FIELD, field_configuration(c), d));
    raw.push_back(rabi_channel(ChannelId::CTERM, {-cj.value, cj.sigma}, d));
    raw.push_back(rabi_channel(ChannelId::TDM, tdm_radiative(t.j, c), d));
    auto sec = rabi_channel(ChannelId::SECULAR, {-s.value, s.sigma}, d);
    sec.valid = std::abs(d.detuning) < 0.1 * d.omega_rabi;
    raw.push_back(sec);

    for (const auto& ch : raw)
        b.channels.push_back(opt.parameter_scale == 1.0 ? ch : rebuild(ch, opt.parameter_scale, d));

    std::vector<std::pair<double, UncertainValue>> det, rabi;
    for (const auto& ch : b.channels) {
        if (!ch.in_aggregate) continue;
        (ch.kind == ChannelKind::detuning ? det : rabi).push_back({1.0, ch.parameter});
        b.first_order_shift += ch.first_order;
    }
    b.delta_rad = combine_linear(det);
    b.omega_hat_rad = combine_linear(rabi);

    const auto oc = corrected_rabi(d, b.channels, b.delta_rad.value, b.omega_hat_rad.value);
    b.omega_c = oc.value;
    b.omega_c_sigma_worst = oc.worst;
    b.theta_corr = 0.5 * std::atan2(d.omega_rabi * (1.0 + b.omega_hat_rad.value), -(d.detuning - b.delta_rad.value));

    if (opt.include_c_term) {
        auto no_c = b.channels;
        for (auto& ch : no_c)
            if (ch.id == ChannelId::CTERM) ch.parameter = {0.0, 0.0};
        const double hat = b.omega_hat_rad.value - b.channel(ChannelId::CTERM).parameter.value;
        b.omega_no_c = corrected_rabi(d, no_c, b.delta_rad.value, hat).value;
    } else {
        b.omega_no_c = b.omega_c;
    }
    return b;
}

UncertainValue prediction_without_c(const TransitionSpec& t, const DriveParams& d, const PhysicalConstants& c) {
    AggregateOptions opt;
    opt.include_c_term = false;
    return aggregate(t, d, c, opt).omega_c;
}

UncertainValue headline_shift(const CorrectionBreakdown& b) {
    return {b.omega_c.value - b.bare, b.omega_c.sigma};
}

std::vector<TableRow> table_one(double h, double delta_over_gamma, const HydrogenData& data,
                                const PhysicalConstants& c) {
    static constexpr ChannelId kRows[] = {ChannelId::LAMB,  ChannelId::BS,    ChannelId::OR,
                                          ChannelId::R_DIPOLE, ChannelId::FIELD, ChannelId::CTERM,
                                          ChannelId::TDM,   ChannelId::SECULAR};
    std::vector<TableRow> rows;
    for (J j : {J::half, J::three_half}) {
        const auto t = transition(j, data);
        const auto b = aggregate(t, drive_for(t, h, delta_over_gamma, c), c);
        for (ChannelId id : kRows) {
            const auto& s = b.channel(id).shift_plus;
            rows.push_back({id, j, {s.value * 1e-3, s.sigma * 1e-3}});
        }
    }
    return rows;
}

double h_coefficient(const TransitionSpec& t, const PhysicalConstants& c) {
    const double dipole = std::abs(transition_dipole_z(t.j)) * c.e_charge * c.bohr_radius_m();
    return dipole / (c.hbar() * t.gamma.value);
}

double h_from_field(const TransitionSpec& t, double e_sw, const PhysicalConstants& c) {
    if (e_sw < 0.0) throw std::invalid_argument("h_from_field: field amplitude must be non-negative");
    return h_coefficient(t, c) * e_sw;
}

}  // namespace mollow
