#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "mollow/green.hpp"
#include "mollow/hydrogen.hpp"

using namespace mollow;
using namespace mollow::green;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
const cplx kI(0.0, 1.0);
}  // namespace

TEST_CASE("phi reference values") {
    CHECK(phi(1, 1.0) == cplx(1.0));
    CHECK(phi(2, 1.0) == cplx(1.0));
    CHECK(rel(phi(1, 0.3), 0.85745089943937328) < 1e-13);
    CHECK(rel(phi(2, 0.8), 1.0323099814278315) < 1e-13);
    // |z| = 1 here; evaluated through the transformed series.
    const cplx t = kI / std::sqrt(2.0);
    const cplx z = std::pow((1.0 - t) / (1.0 + t), 2);
    CHECK(std::abs(z) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel(phi(2, t), cplx(0.5199875631577931, 0.0195138558850557)) < 1e-12);
}

TEST_CASE("phi against a direct term-by-term sum") {
    const int n = 1;
    const double t = 0.3;
    const long double b = -n * t, z = std::pow((1 - t) / (1 + t), 2);
    long double s = 0, zk = 1;
    for (int k = 0; k < 400; ++k, zk *= z) s += zk / (b + k);
    CHECK(rel(phi(n, t), static_cast<double>(b * s)) < 1e-13);
}

TEST_CASE("phi signals bound-state poles") {
    CHECK_THROWS_AS(phi(1, 2.0), GreenError);
    CHECK_THROWS_AS(phi(2, 0.5), GreenError);
    CHECK_THROWS_AS(unreduced_matrix_g(1.0), GreenError);
    try {
        phi(1, 3.0);
        FAIL("expected a pole");
    } catch (const GreenError& e) {
        CHECK(e.kind == GreenError::Kind::pole);
    }
}

TEST_CASE("unreduced elements: extended-precision references") {
    const double ts[] = {0.13, 0.37, 0.8, 1.3, 2.7};
    const double g[] = {0.033802926932334378, 0.27494790865722906, 1.3546248383203081, 4.5062467844796642,
                        0.16262953411603322};
    const double e[] = {2.4663754265833905, 22.46418218073054, 182.69340304444544, 201.10024764267808,
                        -323.56618486807919};
    for (int i = 0; i < 5; ++i) {
        CAPTURE(ts[i]);
        CHECK(rel(unreduced_matrix_g(ts[i]), g[i]) < 1e-12);
        CHECK(rel(unreduced_matrix_e(ts[i]), e[i]) < 1e-12);
    }
    CHECK(rel(unreduced_matrix_e(kI / std::sqrt(2.0)), cplx(-54.192024888644763, 0.5223438288476026)) < 1e-12);
}

TEST_CASE("radial parts recombine with angular weights 1/3 and 4/15") {
    CHECK(rel(unreduced_radial_e_l0(0.8), 387.164750585492) < 1e-12);
    CHECK(rel(unreduced_radial_e_l2(0.8), 201.14432318480541) < 1e-12);
    for (cplx t : {cplx(0.3), cplx(0.8), cplx(1.7), cplx(2.4), kI / std::sqrt(2.0), cplx(0.6, 0.3)}) {
        const cplx sum = kAngL0 * unreduced_radial_e_l0(t) + kAngL2 * unreduced_radial_e_l2(t);
        CHECK(rel(sum, unreduced_matrix_e(t)) < 1e-12);
    }
    CHECK(kAngL2Standard == doctest::Approx(2.5 * kAngL2));
    // The all-components weighting gives a different element.
    const cplx standard = kAngL0 * unreduced_radial_e_l0(0.8) + kAngL2Standard * unreduced_radial_e_l2(0.8);
    CHECK(rel(standard, unreduced_matrix_e(0.8)) > 0.1);
}

TEST_CASE("real t below threshold gives real elements") {
    for (double t : {0.2, 0.45, 0.55, 0.9, 1.4, 1.95, 2.05, 2.9}) {
        CHECK(std::abs(unreduced_matrix_g(t).imag()) <= 1e-12 * std::abs(unreduced_matrix_g(t)));
        CHECK(std::abs(reduced_matrix_g_t(t).imag()) <= 1e-12 * std::abs(reduced_matrix_g_t(t)));
        CHECK(std::abs(reduced_matrix_e_t(t).imag()) <= 1e-12 * std::abs(reduced_matrix_e_t(t)));
    }
}

TEST_CASE("reduced elements: references") {
    CHECK(rel(reduced_matrix_g_t(2.0 / std::sqrt(7.0)), 0.45802432728328069) < 1e-12);
    CHECK(rel(reduced_matrix_e_t(kI / std::sqrt(2.0)), cplx(-53.452119612235905, 0.5223438288476026)) < 1e-12);
    CHECK(rel(reduced_matrix_g_t(kPoleG), 3.101493947384494) < 1e-11);
    CHECK(rel(reduced_matrix_e_t(kPoleE), 42.495153423637799) < 1e-11);
    // Away from the pole: unreduced minus the explicit single-state subtraction.
    const double t = 1.3;
    const cplx sub = kDipoleSquared * 8.0 * t * t / (4.0 - t * t);
    CHECK(rel(reduced_matrix_g_t(t), unreduced_matrix_g(t) - sub) < 1e-13);
}

TEST_CASE("pole limit: analytic and Richardson paths agree") {
    const cplx ag = reduced_matrix_g_t(kPoleG, PoleMethod::analytic);
    const cplx rg = reduced_matrix_g_t(kPoleG, PoleMethod::richardson);
    const cplx ae = reduced_matrix_e_t(kPoleE, PoleMethod::analytic);
    const cplx re = reduced_matrix_e_t(kPoleE, PoleMethod::richardson);
    CHECK(rel(rg, ag) < 1e-6);
    CHECK(rel(re, ae) < 1e-6);
}

TEST_CASE("pole cancellation: reduced elements vary by O(eps)") {
    for (double eps : {1e-3, 1e-4, 1e-5}) {
        for (int s : {-1, 1}) {
            const cplx dg = reduced_matrix_g_t(kPoleG + s * eps) - reduced_matrix_g_t(kPoleG);
            const cplx de = reduced_matrix_e_t(kPoleE + s * eps) - reduced_matrix_e_t(kPoleE);
            CAPTURE(eps);
            CHECK(std::abs(dg) < 10.0 * eps * std::abs(reduced_matrix_g_t(kPoleG)));
            CHECK(std::abs(de) < 10.0 * eps * std::abs(reduced_matrix_e_t(kPoleE)));
        }
    }
}

TEST_CASE("unreduced elements diverge with the dipole residue") {
    // Residues in t of the single-state terms 8 t^2 |d|^2/(4 - t^2) and
    // 8 t^2 |d|^2/(1 - 4 t^2): -4 t0 |d|^2 and -t0 |d|^2. What is left of
    // eps * Mbar is eps times the finite reduced element.
    const double res_g = -4.0 * kPoleG * kDipoleSquared, res_e = -kPoleE * kDipoleSquared;
    const double fin_g = std::abs(reduced_matrix_g_t(kPoleG)), fin_e = std::abs(reduced_matrix_e_t(kPoleE));
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        CAPTURE(eps);
        CHECK(std::abs(eps * unreduced_matrix_g(kPoleG + eps) - res_g) < 2.0 * eps * fin_g);
        CHECK(std::abs(eps * unreduced_matrix_e(kPoleE + eps) - res_e) < 2.0 * eps * fin_e);
    }
}

TEST_CASE("exact-limit and resonant-exclusion conventions") {
    const cplx ex = reduced_matrix_g_t(kPoleG, PoleMethod::analytic, PoleConvention::exact_limit);
    const cplx drop = reduced_matrix_g_t(kPoleG, PoleMethod::analytic, PoleConvention::exclude_resonant);
    CHECK(std::abs(ex - drop) > 0.01);
    // Off the pole both conventions coincide.
    CHECK(reduced_matrix_g_t(1.7, PoleMethod::analytic, PoleConvention::exclude_resonant) ==
          reduced_matrix_g_t(1.7, PoleMethod::analytic, PoleConvention::exact_limit));
}

TEST_CASE("zeta-based wrappers") {
    const PhysicalConstants c;
    const double t = 0.8;
    const cplx zeta = zeta_of_t(1, t, c);
    CHECK(rel(reduced_matrix_g(zeta, c), reduced_matrix_g_t(t)) < 1e-13);
    const cplx ze = zeta_of_t(2, t, c);
    CHECK(rel(reduced_matrix_e(ze, c), reduced_matrix_e_t(t)) < 1e-13);
    const auto m = matrix_element(ElementKind::unreduced_g, t);
    CHECK(m.value == unreduced_matrix_g(t));
    CHECK(m.kind == ElementKind::unreduced_g);
    // a_B^2/(atomic energy) in m^2/Hz.
    const double a = c.bohr_radius_m();
    CHECK(std::abs(m.si_value(c) - m.value * a * a / c.atomic_energy()) <= 1e-15 * std::abs(m.si_value(c)));
}

TEST_CASE("oracle agrees with closed forms off the poles") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    int n = 0;
    while (n < 20) {
        const double t = u(rng);
        if (std::abs(t - 1.0) < 0.1 || std::abs(t - 0.5) < 0.05 || std::abs(t - 2.0) < 0.05 ||
            std::abs(t - 1.5) < 0.05 || std::abs(t - 2.5) < 0.05)
            continue;
        CAPTURE(t);
        CHECK(rel(oracle_matrix_g(t), unreduced_matrix_g(t)) < 1e-8);
        CHECK(rel(oracle_matrix_e(t), unreduced_matrix_e(t)) < 1e-8);
        ++n;
    }
    const cplx ti = kI / std::sqrt(2.0);
    CHECK(rel(oracle_matrix_e(ti), unreduced_matrix_e(ti)) < 1e-6);
}

TEST_CASE("oracle convergence improves with k_max") {
    const cplx nu = 2.0 * 0.8;
    const cplx ref = unreduced_radial_e_l0(0.8);
    double prev = 1e300;
    for (int k : {5, 20, 80, 320}) {
        const auto r = radial_green_partial(0, OracleState::p2_weighted, nu, k);
        const double err = rel(r.value, ref);
        CHECK(err <= prev);
        prev = err;
    }
    CHECK(prev < 1e-8);
    CHECK_THROWS_AS(radial_green_oracle(0, OracleState::p2_weighted, nu, 3), GreenError);
    CHECK_THROWS_AS(radial_green_partial(1, OracleState::p2_weighted, nu, 10), GreenError);
    CHECK_THROWS_AS(radial_green_partial(0, OracleState::p2_weighted, nu, 0), GreenError);
}

TEST_CASE("single Laguerre term against the hypergeometric closed form") {
    for (double t : {0.3, 0.8, 1.7}) {
        for (int k : {0, 1, 4, 12}) {
            // (k+1) 2F1(-k, 5; 2; x) as a terminating sum.
            const long double x = 2.0L / (1.0L + t);
            long double term = 1, sum = 1;
            for (int j = 0; j < k; ++j) {
                term *= (-k + j) * (5.0L + j) / ((2.0L + j) * (j + 1.0L)) * x;
                sum += term;
            }
            const double closed = static_cast<double>(768.0L * std::pow((long double)t, 5) /
                                                      std::pow(1.0L + t, 5) * (k + 1) * sum);
            const cplx v = laguerre_moment(4, 1, (1.0 + t) / (2.0 * t), 1.0 / t, k);
            CAPTURE(t);
            CAPTURE(k);
            CHECK(std::abs(v - closed) <= 1e-11 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST_CASE("oracle term diverges at the bound-state index") {
    // nu = l + 1 + k exactly.
    CHECK_THROWS_AS(radial_green_partial(0, OracleState::p2_weighted, 3.0, 10), GreenError);
}
