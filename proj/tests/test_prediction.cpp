#include <doctest.h>

#include <cmath>

#include "mollow/prediction.hpp"

using namespace mollow;

namespace {

const PhysicalConstants kC;

CorrectionBreakdown standard(J j, AggregateOptions opt = {}) {
    const auto t = transition(j);
    return aggregate(t, drive_for(t, 1000.0, 50.0, kC), kC, opt);
}

}  // namespace

TEST_CASE("drive_for maps h and Delta/Gamma onto the adopted width") {
    const auto t = transition(J::half);
    const auto d = drive_for(t, 1000.0, 50.0, kC);
    CHECK(d.omega_rabi == doctest::Approx(1000.0 * t.gamma.value));
    CHECK(d.detuning == doctest::Approx(50.0 * t.gamma.value));
    CHECK(d.omega_laser == doctest::Approx(resonance_frequency(kC) + d.detuning));
    CHECK_THROWS_AS(drive_for(t, 0.0, 50.0, kC), std::invalid_argument);
    CHECK_THROWS_AS(drive_for(t, -1.0, 50.0, kC), std::invalid_argument);
}

TEST_CASE("aggregate parameters for j = 1/2") {
    const auto b = standard(J::half);
    CHECK(b.bare == doctest::Approx(99.833975e9).epsilon(0.5e3 / 99.833975e9));
    CHECK(b.delta_rad.value == doctest::Approx(-8.175249e9).epsilon(1e3 / 8.175249e9));
    CHECK(b.delta_rad.sigma == doctest::Approx(33e3).epsilon(0.05));
    CHECK(b.omega_hat_rad.value == doctest::Approx(-19.78e-6).epsilon(0.01e-6 / 19.78e-6));
    CHECK(b.channels.front().id == ChannelId::REL);
    CHECK_FALSE(b.channels.front().in_aggregate);
    CHECK(b.channels.size() == 9);
}

TEST_CASE("headline predictions") {
    const auto h = standard(J::half), t = standard(J::three_half);
    CHECK(std::abs(h.omega_c.value - 100.572258e9) < 6e4);
    CHECK(std::abs(t.omega_c.value - 100.568846e9) < 6e4);
    // Independent sources in quadrature; the linear sum is the quoted 60 kHz scale.
    CHECK(h.omega_c.sigma == doctest::Approx(37899.9).epsilon(1e-5));
    CHECK(t.omega_c.sigma == doctest::Approx(38623.2).epsilon(1e-5));
    CHECK(h.omega_c_sigma_worst == doctest::Approx(60e3).epsilon(0.05));
    CHECK(t.omega_c_sigma_worst == doctest::Approx(60e3).epsilon(0.05));
    CHECK(std::abs(headline_shift(h).value - 738.282e6) < 6e4);
    CHECK(std::abs(headline_shift(t).value - 734.871e6) < 6e4);
    CHECK(headline_shift(h).value == doctest::Approx(738.282e6).epsilon(1e3 / 738.282e6));
    CHECK(headline_shift(t).value == doctest::Approx(734.871e6).epsilon(1e3 / 734.871e6));
}

TEST_CASE("C-term is discernible") {
    for (J j : {J::half, J::three_half}) {
        const auto b = standard(j);
        const auto t = transition(j);
        const auto noc = prediction_without_c(t, b.drive, kC);
        CHECK(noc.value == doctest::Approx(b.omega_no_c.value).epsilon(1e-15));
        CHECK(std::abs(b.omega_c.value - noc.value) > b.omega_c.sigma + noc.sigma);
    }
    CHECK(std::abs(standard(J::half).omega_no_c.value - 100.572377e9) < 3e4);
    CHECK(std::abs(standard(J::three_half).omega_no_c.value - 100.568966e9) < 3e4);
    const auto b = standard(J::half);
    CHECK(b.omega_no_c.sigma == doctest::Approx(22405.0).epsilon(1e-4));
    CHECK(b.omega_c_sigma_worst - b.channel(ChannelId::CTERM).shift_plus.sigma ==
          doctest::Approx(27e3).epsilon(0.05));
}

TEST_CASE("all channels zeroed gives zero headline shift") {
    AggregateOptions opt;
    opt.parameter_scale = 0.0;
    const auto b = standard(J::half, opt);
    CHECK(headline_shift(b).value == 0.0);
    CHECK(b.omega_c.sigma == 0.0);
}

TEST_CASE("first-order consistency under parameter scaling") {
    // Residual of (summed - first order) scales as s^2.
    std::vector<double> res;
    for (double s : {1.0, 0.5, 0.25}) {
        AggregateOptions opt;
        opt.parameter_scale = s;
        const auto b = standard(J::half, opt);
        res.push_back(headline_shift(b).value - b.first_order_shift);
    }
    CHECK(res[0] / res[1] == doctest::Approx(4.0).epsilon(0.05));
    CHECK(res[1] / res[2] == doctest::Approx(4.0).epsilon(0.05));
    // Linear-in-s part is exactly the first-order sum.
    AggregateOptions half;
    half.parameter_scale = 0.5;
    CHECK(standard(J::half, half).first_order_shift == doctest::Approx(0.5 * standard(J::half).first_order_shift));
}

TEST_CASE("corrected mixing angle") {
    for (J j : {J::half, J::three_half}) {
        const auto b = standard(j);
        const double o = b.drive.omega_rabi * (1 + b.omega_hat_rad.value);
        const double dd = b.drive.detuning - b.delta_rad.value;
        CHECK(std::tan(2 * b.theta_corr) == doctest::Approx(-o / dd).epsilon(1e-12));
        CHECK(std::cos(2 * b.theta_corr) == doctest::Approx(-dd / b.omega_c.value).epsilon(1e-12));
        CHECK(b.theta_corr > 0.0);
        CHECK(b.theta_corr < std::acos(0.0));
    }
}

TEST_CASE("intensity-dependent displacements grow quadratically in h") {
    const auto t = transition(J::half);
    auto disp = [&](double h) {
        const auto d = drive_for(t, h, 50.0, kC);
        return bloch_siegert(d, kC).parameter.value + off_resonant(d, kC).channel.parameter.value;
    };
    double prev = 0.0;
    for (double h : {100.0, 200.0, 400.0, 800.0}) {
        const double v = disp(h);
        CHECK(std::abs(v) > std::abs(prev));
        if (prev != 0.0) CHECK(v / prev == doctest::Approx(4.0).epsilon(1e-12));
        prev = v;
    }
}

TEST_CASE("field coefficient") {
    const auto h = transition(J::half), t = transition(J::three_half);
    CHECK(h_coefficient(h, kC) == doctest::Approx(346.783e-6).epsilon(0.5e-9 / 346.783e-6));
    CHECK(h_coefficient(t, kC) == doctest::Approx(490.425e-6).epsilon(0.5e-9 / 490.425e-6));
    CHECK(h_from_field(h, 0.0, kC) == 0.0);
    CHECK(h_from_field(h, 2.0, kC) == doctest::Approx(2 * h_coefficient(h, kC)));
    CHECK_THROWS_AS(h_from_field(h, -1.0, kC), std::invalid_argument);
}

TEST_CASE("table layout and resonant drive") {
    const auto rows = table_one(1000.0, 50.0);
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].id == ChannelId::LAMB);
    CHECK(rows[0].j == J::half);
    CHECK(rows[8].j == J::three_half);
    CHECK(rows[7].id == ChannelId::SECULAR);

    const auto t = transition(J::half);
    const auto b = aggregate(t, drive_for(t, 1000.0, 0.0, kC), kC);
    for (ChannelId id : {ChannelId::LAMB, ChannelId::BS, ChannelId::OR})
        CHECK(b.channel(id).first_order == 0.0);
    CHECK(b.channel(ChannelId::LAMB).shift_plus.value > 0.0);
}

TEST_CASE("unknown channel lookup throws") {
    auto b = standard(J::half);
    b.channels.pop_back();
    CHECK_THROWS_AS(b.channel(ChannelId::SECULAR), std::out_of_range);
}
