#include "mollow/green.hpp"

#include <boost/math/differentiation/autodiff.hpp>
#include <cmath>

#include "mollow/hydrogen.hpp"

namespace mollow::green {

namespace {

using lreal = long double;
using lc = std::complex<lreal>;

lc widen(cplx z) { return {z.real(), z.imag()}; }
cplx narrow(lc z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

constexpr lreal kD2 = 32768.0L / 59049.0L;

template <class T>
T horner(const T& t, std::initializer_list<lreal> high_to_low) {
    T r = T(0);
    for (lreal c : high_to_low) r = r * t + T(c);
    return r;
}

template <class T>
T ipow(const T& x, int n) {
    T r = T(1);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

template <class T>
T zvar(const T& t) {
    const T q = (T(1) - t) / (T(1) + t);
    return q * q;
}

// M-bar = Q(t) + P(t) Phi(n, t) for each element.
template <class T>
T Qg(const T& t) {
    const T X = horner(t, {38, 26, 19, -19, -12, 12, 3, -3});
    return T(2) * t * t * X / (T(3) * ipow(t - T(1), 5) * ipow(t + T(1), 4));
}
template <class T>
T Pg(const T& t) {
    return T(-256) * ipow(t, 9) / (T(3) * ipow(t - T(1), 5) * ipow(t + T(1), 5));
}
template <class T>
T Qe(const T& t) {
    const T X = horner(t, {6739, -1702, -231, -1420, -262, 1944, -402, -1140, 435, 270, -135});
    return T(16) * t * t * X / (T(15) * ipow(t - T(1), 7) * ipow(t + T(1), 5));
}
template <class T>
T Pe(const T& t) {
    return T(-16384) * ipow(t, 11) * (T(23) * t * t - T(7)) /
           (T(15) * ipow(t - T(1), 7) * ipow(t + T(1), 7));
}
template <class T>
T Q0(const T& t) {
    const T X = horner(t, {257, -2, 148, -294, 18, 258, -84, -90, 45});
    return T(16) * t * t * X / (T(3) * ipow(t - T(1), 6) * ipow(t + T(1), 4));
}
template <class T>
T P0(const T& t) {
    return T(-16384) * ipow(t, 11) / (T(3) * ipow(t * t - T(1), 6));
}
template <class T>
T Q2(const T& t) {
    const T X = horner(t, {4733, -1274, -37, -700, -34, 768, -174, -420, 165, 90, -45});
    return T(16) * t * t * X / (T(3) * ipow(t - T(1), 7) * ipow(t + T(1), 5));
}
template <class T>
T P2(const T& t) {
    return T(-65536) * ipow(t, 11) * (T(4) * t * t - T(1)) / (T(3) * ipow(t * t - T(1), 7));
}

void check_t(lc t) {
    if (std::abs(t - lc(1)) < 1e-9L)
        throw GreenError(GreenError::Kind::pole, "closed form singular at t = 1");
    if (std::abs(t + lc(1)) < 1e-9L)
        throw GreenError(GreenError::Kind::pole, "closed form singular at t = -1");
    if (std::abs(t) < 1e-12L) throw GreenError(GreenError::Kind::domain, "t = 0");
}

// Bound-state pole of Phi(n, .) when n t is a positive integer.
void check_phi_pole(int n, lc t, int skip) {
    const lc nt = lreal(n) * t;
    const lreal k = std::round(nt.real());
    if (k >= 1 && static_cast<int>(k) != skip && std::abs(nt - lc(k)) < 1e-13L * std::max(1.0L, k))
        throw GreenError(GreenError::Kind::pole,
                         "Phi(" + std::to_string(n) + ", t) has a pole at n t = " + std::to_string(int(k)));
}

constexpr int kMaxTerms = 2000000;
constexpr lreal kSeriesTol = 1e-21L;

// b * sum_k z^k/(b + k), optionally skipping index `skip`.
lc phi_lerch(int n, lc t, int skip) {
    const lc b = -lreal(n) * t;
    const lc z = zvar(t);
    lc sum = 0, zk = 1;
    int small = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        if (k != skip) {
            const lc term = zk / (b + lreal(k));
            sum += term;
            if (std::abs(term) <= kSeriesTol * std::abs(sum)) {
                if (++small >= 3) return b * sum;
            } else {
                small = 0;
            }
        }
        zk *= z;
    }
    throw GreenError(GreenError::Kind::no_convergence, "Phi series did not converge");
}

// Pfaff: 2F1(1, b; b+1; z) = (1-z)^{-1} 2F1(1, 1; b+1; z/(z-1)).
lc phi_pfaff(int n, lc t) {
    const lc b = -lreal(n) * t;
    const lc z = zvar(t);
    const lc w = z / (z - lc(1));
    lc sum = 0, term = 1;
    int small = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        sum += term;
        if (std::abs(term) <= kSeriesTol * std::abs(sum)) {
            if (++small >= 3) return sum / (lc(1) - z);
        } else {
            small = 0;
        }
        term *= lreal(k + 1) / (b + lreal(1 + k)) * w;
    }
    throw GreenError(GreenError::Kind::no_convergence, "Phi (Pfaff) series did not converge");
}

lc phi_l(int n, lc t) {
    if (std::abs(t - lc(1)) == 0.0L) return 1;
    if (std::abs(t + lc(1)) < 1e-12L) throw GreenError(GreenError::Kind::domain, "Phi: t = -1");
    check_phi_pole(n, t, -1);
    const lc z = zvar(t);
    const lreal az = std::abs(z);
    const lreal aw = std::abs(z / (z - lc(1)));
    if (az >= 0.999L && aw >= 0.999L)
        throw GreenError(GreenError::Kind::no_convergence, "Phi: t outside the implemented domain");
    return az <= aw ? phi_lerch(n, t, -1) : phi_pfaff(n, t);
}

lc mbar_g(lc t) {
    check_t(t);
    return Qg(t) + Pg(t) * phi_l(1, t);
}
lc mbar_e(lc t) {
    check_t(t);
    return Qe(t) + Pe(t) * phi_l(2, t);
}

struct PoleData {
    int n;
    lreal t0;
    int k;  // resonant Phi index, n t0
};

constexpr PoleData kGPole{1, 2.0L, 2};
constexpr PoleData kEPole{2, 0.5L, 1};

// N(t) with [resonant Phi term + explicit subtraction] = N(t)/(t0 - t).
template <class T>
T numerator_g(const T& t) {
    const lreal t0 = kGPole.t0;
    return -t * Pg(t) * ipow(zvar(t), 2) - T(2 * kD2 * t0 * t0) * t * t / (T(t0) + t);
}
template <class T>
T numerator_e(const T& t) {
    const lreal t0 = kEPole.t0;
    return -t * Pe(t) * zvar(t) - T(2 * kD2 * 4 * t0 * t0) * t * t / (T(t0) + t);
}

// Explicit subtraction |d|^2/(E_pole - zeta) in the t variable.
lc subtraction(const PoleData& p, lc t) {
    const lreal nn = p.n * p.n;
    return kD2 * lreal(2) * nn * t * t * p.t0 * p.t0 / ((lc(p.t0) - t) * (lc(p.t0) + t));
}

template <class F>
lc bracket_limit(F numerator, const PoleData& p, lc t) {
    using namespace boost::math::differentiation;
    const auto x = make_fvar<lreal, 3>(p.t0);
    const auto nv = numerator(x);
    const lc dt = t - lc(p.t0);
    const lreal d1 = nv.derivative(1), d2 = nv.derivative(2), d3 = nv.derivative(3);
    // N(t)/(t0 - t) = -(N' + N'' dt/2 + N''' dt^2/6 + ...)
    return -(lc(d1) + lc(d2) * dt / lreal(2) + lc(d3) * dt * dt / lreal(6));
}

bool at_pole(const PoleData& p, lc t) { return std::abs(t - lc(p.t0)) < 1e-12L; }

template <class FQ, class FP, class FN>
lc reduced_analytic(const PoleData& p, lc t, FQ q, FP pf, FN numerator) {
    const lc rest = q(t) + pf(t) * phi_lerch(p.n, t, p.k);
    lc bracket;
    if (std::abs(t - lc(p.t0)) < 1e-6L)
        bracket = bracket_limit(numerator, p, t);
    else
        bracket = numerator(t) / (lc(p.t0) - t);
    return rest + bracket;
}

template <class FM>
lc reduced_richardson(const PoleData& p, FM mbar) {
    constexpr int kLevels = 4;
    lc table[kLevels];
    lreal eps = 1e-4L;
    for (int i = 0; i < kLevels; ++i, eps /= 10) {
        const lc tp(p.t0 + eps), tm(p.t0 - eps);
        table[i] = ((mbar(tp) - subtraction(p, tp)) + (mbar(tm) - subtraction(p, tm))) / lreal(2);
    }
    // Neville in eps^2 with step ratio 100.
    for (int j = 1; j < kLevels; ++j) {
        const lreal f = std::pow(100.0L, j) - 1;
        for (int i = kLevels - 1; i >= j; --i) table[i] = table[i] + (table[i] - table[i - 1]) / f;
    }
    return table[kLevels - 1];
}

lc reduced_g(lc t, PoleMethod m, PoleConvention c) {
    const PoleData& p = kGPole;
    if (at_pole(p, t)) {
        if (c == PoleConvention::exclude_resonant)
            return Qg(lc(p.t0)) + Pg(lc(p.t0)) * phi_lerch(p.n, lc(p.t0), p.k);
        if (m == PoleMethod::richardson) return reduced_richardson(p, mbar_g);
    }
    if (std::abs(t - lc(p.t0)) < 0.25L) {
        check_t(t);
        return reduced_analytic(p, t, Qg<lc>, Pg<lc>, [](const auto& x) { return numerator_g(x); });
    }
    return mbar_g(t) - subtraction(p, t);
}

lc reduced_e(lc t, PoleMethod m, PoleConvention c) {
    const PoleData& p = kEPole;
    if (at_pole(p, t)) {
        if (c == PoleConvention::exclude_resonant)
            return Qe(lc(p.t0)) + Pe(lc(p.t0)) * phi_lerch(p.n, lc(p.t0), p.k);
        if (m == PoleMethod::richardson) return reduced_richardson(p, mbar_e);
    }
    if (std::abs(t - lc(p.t0)) < 0.2L) {
        check_t(t);
        return reduced_analytic(p, t, Qe<lc>, Pe<lc>, [](const auto& x) { return numerator_e(x); });
    }
    return mbar_e(t) - subtraction(p, t);
}

}  // namespace

cplx phi(int n, cplx t) {
    if (n < 1) throw GreenError(GreenError::Kind::domain, "Phi: n must be >= 1");
    return narrow(phi_l(n, widen(t)));
}

cplx phi_excluding(int n, cplx t, int k) {
    if (n < 1 || k < 1) throw GreenError(GreenError::Kind::domain, "phi_excluding: n, k must be >= 1");
    const lc tl = widen(t);
    check_phi_pole(n, tl, k);
    if (std::abs(zvar(tl)) >= 0.999L)
        throw GreenError(GreenError::Kind::no_convergence, "phi_excluding: |z| >= 1");
    return narrow(phi_lerch(n, tl, k));
}

cplx unreduced_matrix_g(cplx t) { return narrow(mbar_g(widen(t))); }
cplx unreduced_matrix_e(cplx t) { return narrow(mbar_e(widen(t))); }

cplx unreduced_radial_e_l0(cplx t) {
    const lc tl = widen(t);
    check_t(tl);
    return narrow(Q0(tl) + P0(tl) * phi_l(2, tl));
}

cplx unreduced_radial_e_l2(cplx t) {
    const lc tl = widen(t);
    check_t(tl);
    return narrow(Q2(tl) + P2(tl) * phi_l(2, tl));
}

cplx reduced_matrix_g_t(cplx t, PoleMethod m, PoleConvention c) { return narrow(reduced_g(widen(t), m, c)); }
cplx reduced_matrix_e_t(cplx t, PoleMethod m, PoleConvention c) { return narrow(reduced_e(widen(t), m, c)); }

cplx reduced_matrix_g(cplx zeta_hz, const PhysicalConstants& c, PoleMethod m) {
    return reduced_matrix_g_t(t_of_energy(1, zeta_hz, c), m);
}

cplx reduced_matrix_e(cplx zeta_hz, const PhysicalConstants& c, PoleMethod m) {
    return reduced_matrix_e_t(t_of_energy(2, zeta_hz, c), m);
}

cplx GreenMatrixElement::si_value(const PhysicalConstants& c) const {
    const double a = c.bohr_radius_m();
    return value * (a * a / c.atomic_energy());
}

GreenMatrixElement matrix_element(ElementKind kind, cplx t, PoleMethod m) {
    switch (kind) {
        case ElementKind::unreduced_g: return {unreduced_matrix_g(t), kind, t};
        case ElementKind::unreduced_e: return {unreduced_matrix_e(t), kind, t};
        case ElementKind::reduced_g: return {reduced_matrix_g_t(t, m), kind, t};
        case ElementKind::reduced_e: return {reduced_matrix_e_t(t, m), kind, t};
    }
    throw GreenError(GreenError::Kind::domain, "unknown element kind");
}

}  // namespace mollow::green
