#include "mollow/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mollow {

UncertainValue::UncertainValue(double v, double s) : value(v), sigma(std::abs(s)) {}

UncertainValue combine_linear(const std::vector<std::pair<double, UncertainValue>>& terms) {
    double v = 0.0, var = 0.0;
    for (const auto& [c, x] : terms) {
        v += c * x.value;
        const double s = c * x.sigma;
        var += s * s;
    }
    return {v, std::sqrt(var)};
}

UncertainValue combine_worst_case(const std::vector<std::pair<double, UncertainValue>>& terms) {
    double v = 0.0, s = 0.0;
    for (const auto& [c, x] : terms) {
        v += c * x.value;
        s += std::abs(c * x.sigma);
    }
    return {v, s};
}

double PhysicalConstants::bohr_radius_m() const {
    return c_light / (2.0 * std::numbers::pi * z_alpha() * m_freq);
}

double PhysicalConstants::hbar() const { return h_planck / (2.0 * std::numbers::pi); }

double resonance_frequency(const PhysicalConstants& c) { return 0.375 * c.atomic_energy(); }

PhysicalConstants constants_from(const std::map<std::string, std::string>& kv,
                                 PhysicalConstants base) {
    for (const auto& [k, v] : kv) {
        if (k == "alpha")
            base.alpha = parse_double(k, v);
        else if (k == "Z")
            base.Z = static_cast<int>(parse_double(k, v));
        else if (k == "m_freq")
            base.m_freq = parse_double(k, v);
        else if (k == "c_light")
            base.c_light = parse_double(k, v);
        else if (k == "e_charge")
            base.e_charge = parse_double(k, v);
        else if (k == "h_planck")
            base.h_planck = parse_double(k, v);
    }
    if (base.Z < 1) throw std::runtime_error("config: Z must be a positive integer");
    if (!(base.alpha >= 0.0)) throw std::runtime_error("config: alpha must be >= 0");
    if (!(base.m_freq > 0.0)) throw std::runtime_error("config: m_freq must be > 0");
    return base;
}

}  // namespace mollow
