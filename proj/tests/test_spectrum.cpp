#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "mollow/spectrum.hpp"

using namespace mollow;
using mp50 = boost::multiprecision::cpp_bin_float_50;

namespace {
DriveParams drive(double omega, double delta, double gamma) { return {omega, delta, gamma, 1e6}; }
}  // namespace

TEST_CASE("exact spectrum reference values") {
    // Extended-precision references.
    CHECK(spectrum_exact_offset(10.0, 10.0, 0.0, 1.0) == doctest::Approx(0.052948278018932593).epsilon(1e-14));
    CHECK(spectrum_exact_offset(7.3, 10.0, 4.0, 1.0) == doctest::Approx(0.0028518460375341334).epsilon(1e-14));
    CHECK(spectrum_secular_offset(7.3, 10.0, 4.0, 1.0) == doctest::Approx(0.0019555775869078114).epsilon(1e-14));
}

TEST_CASE("absolute-frequency wrappers use the laser frequency as origin") {
    const auto d = drive(10, 4, 1);
    CHECK(spectrum_exact(d.omega_laser + 7.3, d) == doctest::Approx(spectrum_exact_offset(7.3, 10.0, 4.0, 1.0)));
    CHECK(spectrum_secular(d.omega_laser + 7.3, d) ==
          doctest::Approx(spectrum_secular_offset(7.3, 10.0, 4.0, 1.0)));
}

TEST_CASE("zero-detuning parity holds to rounding") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng) * 10.0;
        const double a = spectrum_exact_offset(x, 10.0, 0.0, 0.7);
        const double b = spectrum_exact_offset(-x, 10.0, 0.0, 0.7);
        CHECK(a == b);
        CHECK(spectrum_secular_offset(x, 10.0, 0.0, 0.7) ==
              doctest::Approx(spectrum_secular_offset(-x, 10.0, 0.0, 0.7)).epsilon(1e-14));
    }
}

TEST_CASE("exact spectrum is non-negative") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double om = 0.1 + 20 * std::abs(u(rng)), de = 20 * u(rng), ga = 0.05 + 3 * std::abs(u(rng));
        const double x = 60 * u(rng);
        CHECK(spectrum_exact_offset(x, om, de, ga) >= 0.0);
    }
}

TEST_CASE("secular components") {
    const auto s0 = secular_components(drive(3.0, 0.0, 2.0));
    CHECK(s0.A0 == 0.25);
    CHECK(s0.Aplus == 0.125);
    CHECK(s0.Aminus == 0.125);
    CHECK(s0.Gamma0 == 1.0);
    CHECK(s0.GammaPlus == 1.5);
    CHECK(s0.GammaMinus == 1.5);

    const auto s1 = secular_components(drive(1.0, 1.0, 1.0));
    CHECK(s1.A0 == doctest::Approx(1.0 / 72.0).epsilon(1e-15));
    CHECK(s1.Aplus == doctest::Approx(0.020833333333333332).epsilon(1e-15));
    CHECK(s1.Gamma0 == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(s1.GammaPlus == doctest::Approx(0.625).epsilon(1e-15));

    const auto big = secular_components(drive(1.0, 1e6, 1.0));
    CHECK(big.Aplus < 1e-20);
    CHECK(big.Gamma0 == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("secular and exact central values at zero detuning") {
    const double g = 1.0, om = 1e3;
    const double central = spectrum_secular_offset(0.0, om, 0.0, g);
    // Central Lorentzian dominates: (Gamma/pi) A0/Gamma0 with A0 = 1/4, Gamma0 = Gamma/2.
    CHECK(central == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-6));
    const double side_exact = spectrum_exact_offset(om, om, 0.0, g);
    const double side_sec = spectrum_secular_offset(om, om, 0.0, g);
    CHECK(std::abs(side_exact / side_sec - 1.0) < 10.0 * g / om);
}

TEST_CASE("secular limit: max deviation scales with Gamma/Omega_R") {
    const double g = 1.0, om = 1e3;
    double max_exact = 0, max_dev = 0;
    for (int i = 0; i <= 20000; ++i) {
        const double x = -2.0 * om + 4.0 * om * i / 20000.0;
        const double e = spectrum_exact_offset(x, om, 0.3 * om, g);
        max_exact = std::max(max_exact, e);
        max_dev = std::max(max_dev, std::abs(e - spectrum_secular_offset(x, om, 0.3 * om, g)));
    }
    CHECK(max_dev <= 10.0 * (g / std::hypot(om, 0.3 * om)) * max_exact);
}

TEST_CASE("invalid drive parameters are rejected") {
    CHECK_THROWS_AS(spectrum_exact(0.0, drive(0.0, 1.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_exact(0.0, drive(1.0, 1.0, 0.0)), std::invalid_argument);
    CHECK_NOTHROW(spectrum_exact(1e6, drive(0.5, 0.0, 1.0)));
}

TEST_CASE("sideband series") {
    const auto [p, m] = sideband_offsets_series(10.0, 3.0, 0.0);
    CHECK(p == std::hypot(10.0, 3.0));
    CHECK(m == -p);
    const auto [p0, m0] = sideband_offsets_series(1.0, 0.0, 0.1);
    CHECK(p0 == doctest::Approx(1.0 - 0.5e-2 - 35.0 / 64.0 * 1e-4).epsilon(1e-15));
    CHECK(m0 == -p0);
    CHECK_THROWS_AS(sideband_offsets_series(1.0, 0.0, 1.0), std::domain_error);
    const auto d = drive(10, 3, 0.2);
    const auto [ap, am] = sideband_positions_series(d);
    CHECK(ap - d.omega_laser == doctest::Approx(sideband_offsets_series(10.0, 3.0, 0.2).first));
    CHECK(am - d.omega_laser == doctest::Approx(sideband_offsets_series(10.0, 3.0, 0.2).second));
}

TEST_CASE("numeric peaks") {
    const auto pk = find_peak_offsets<double>(1.0, 0.0, 0.1);
    CHECK(pk[0] == doctest::Approx(-pk[2]).epsilon(1e-10));
    CHECK(std::abs(pk[1]) < 1e-12);
    CHECK(pk[0] < 1.0);  // pulled towards the centre
    CHECK(pk[0] > 0.9);

    // In double precision the series bound at Gamma/Omega = 1e-3 sits below
    // one ulp; the 50-digit test below covers it. Here: bisection tolerance.
    const auto tight = find_peak_offsets<double>(1.0, 0.0, 1e-3);
    const double series = sideband_offsets_series(1.0, 0.0, 1e-3).first;
    CHECK(std::abs(tight[0] - series) <= 2e-12);

    CHECK_THROWS_AS(find_peak_offsets<double>(1.0, 0.0, 2.0), PeaksUnresolved);
    const auto d = drive(1.0, 0.0, 0.1);
    const auto abs_pk = find_peaks_numeric(d);
    CHECK(abs_pk[0] - d.omega_laser == doctest::Approx(pk[0]).epsilon(1e-9));
}

TEST_CASE("peak-finder residual against series follows a sixth-power law") {
    // Slope over [1e-3, 1e-1] at two detunings; 50-digit arithmetic resolves
    // residuals of order 1e-18 at the small end.
    for (double y : {0.0, 1.0}) {
        std::vector<double> lx, ly;
        for (double g : {1e-1, 3e-2, 1e-2, 3e-3, 1e-3}) {
            const mp50 om = 1, de = mp50(y);
            const mp50 rabi = sqrt(om * om + de * de);
            const mp50 gam = mp50(g) * rabi;
            const auto pk = find_peak_offsets<mp50>(om, de, gam, mp50(1e-30), 1000);
            const auto ser = sideband_offsets_series<mp50>(om, de, gam);
            const mp50 res = abs(pk[0] - ser.first) / rabi;
            CHECK(res <= 10 * pow(mp50(g), 6));
            lx.push_back(std::log(g));
            ly.push_back(std::log(static_cast<double>(res)));
        }
        const size_t n = lx.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) sx += lx[i], sy += ly[i], sxx += lx[i] * lx[i], sxy += lx[i] * ly[i];
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CAPTURE(y);
        CHECK(slope >= 5.5);
    }
}
