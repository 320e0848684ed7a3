#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <vector>

#include "mollow/green.hpp"

namespace mollow::green {

namespace {

using lreal = long double;
using lc = std::complex<lreal>;
using mpc = boost::multiprecision::cpp_complex_100;

struct OracleParams {
    int gamma;       // power of r in the single-radius integral
    int mu;          // Laguerre order 2l+1
    int d;           // gamma - mu
    lreal norm;      // radial normalisation constant of the weighting state
    lreal beta;      // exponent of the weighting state
    int nu_scale;    // nu = nu_scale * t
};

OracleParams params(int l, OracleState s) {
    if (s == OracleState::s1_weighted) {
        if (l != 1) throw GreenError(GreenError::Kind::domain, "oracle: 1S weighting needs l = 1");
        return {4, 3, 1, 2.0L, 1.0L, 1};
    }
    if (l != 0 && l != 2) throw GreenError(GreenError::Kind::domain, "oracle: 2P weighting needs l = 0 or 2");
    const int g = 4 + l;
    return {g, 2 * l + 1, g - 2 * l - 1, 1.0L / (2.0L * std::sqrt(6.0L)), 0.5L, 2};
}

lreal factorial(int n) {
    lreal f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

lreal binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Coefficients a_j of (1 + rho w)^{-(gamma+1)}, generated on demand.
template <class C>
struct BinomialSeries {
    int gamma;
    C rho;
    std::vector<C> a;
    BinomialSeries(int g, C r) : gamma(g), rho(r), a{C(1)} {}
    const C& at(int j) {
        while (static_cast<int>(a.size()) <= j) {
            const int i = static_cast<int>(a.size());
            a.push_back(a.back() * C(-(gamma + i)) / C(i) * rho);
        }
        return a[j];
    }
};

// Coefficient of w^k in (1-w)^d (1 + rho w)^{-(gamma+1)}.
template <class C>
C moment_coefficient(BinomialSeries<C>& s, int d, int k) {
    C sum = C(0);
    for (int i = 0; i <= std::min(d, k); ++i) {
        const lreal b = binom(d, i) * ((i % 2) ? -1 : 1);
        sum += C(b) * s.at(k - i);
    }
    return sum;
}

OracleResult direct_sum(int l, const OracleParams& p, lc nu, int k_max) {
    const lc lam = lc(p.beta) + lreal(1) / nu;
    const lc c = lreal(2) / nu;
    const lc rho = (c - lam) / lam;
    const lc pref = p.norm * factorial(p.gamma) * std::pow(lam, lreal(-(p.gamma + 1)));
    BinomialSeries<lc> series(p.gamma, rho);
    lc sum = 0;
    lreal fact_ratio = 1.0L / factorial(2 * l + 1);  // k!/(2l+1+k)!
    lreal last = 0, prev = 0;
    OracleResult r;
    int small = 0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) fact_ratio *= lreal(k) / lreal(k + 2 * l + 1);
        const lc den = lreal(l + 1 + k) - nu;
        if (std::abs(den) < 1e-14L) throw GreenError(GreenError::Kind::pole, "oracle: bound-state pole");
        const lc J = pref * moment_coefficient(series, p.d, k);
        const lc term = fact_ratio / den * J * J;
        sum += term;
        prev = last;
        last = std::abs(term);
        r.terms = k + 1;
        if (last <= 1e-22L * std::abs(sum) && k > 8) {
            if (++small >= 4) break;
        } else {
            small = 0;
        }
    }
    const lc total = lreal(2) * std::pow(lreal(2) / nu, lreal(2 * l + 1)) * sum;
    const lreal q = prev > 0 ? last / prev : 1;
    r.tail_estimate = (q < 1) ? static_cast<double>(last * q / (1 - q) / std::abs(sum)) : 1.0;
    r.value = {static_cast<double>(total.real()), static_cast<double>(total.imag())};
    return r;
}

mpc to_mp(lc z) { return mpc(z.real(), z.imag()); }

// Euler-Knopp: sum_k q^k f(k) = 1/(1-q) sum_n (q/(1-q))^n Delta^n f(0).
OracleResult euler_sum(int l, const OracleParams& p, lc nu_l, int k_max) {
    const mpc nu = to_mp(nu_l);
    const mpc one(1);
    const mpc lam = (p.nu_scale == 1 ? one : one / mpc(2)) + one / nu;
    const mpc c = mpc(2) / nu;
    const mpc rho = (c - lam) / lam;
    const mpc q = rho * rho;
    const mpc ratio = q / (one - q);
    OracleResult r;
    if (abs(ratio) >= 0.9) {
        r.value = {NAN, NAN};
        r.tail_estimate = 1.0;
        return r;
    }
    const int n_terms = std::min(k_max, 220);
    // Normalisation in full precision: 2 for 1S, 1/(2 sqrt 6) for 2P.
    const mpc norm = p.nu_scale == 1 ? mpc(2) : one / (mpc(2) * sqrt(mpc(6)));
    const mpc pref = norm * mpc(static_cast<double>(factorial(p.gamma))) / pow(lam, p.gamma + 1);

    // a'_j = (-1)^j (gamma+1)_j / j!, i.e. the binomial series at rho = 1.
    BinomialSeries<mpc> unit(p.gamma, one);
    const mpc inv_rho = one / rho;
    std::vector<mpc> f(n_terms + 1);
    mpc fact_ratio = one;
    for (int i = 2; i <= 2 * l + 1; ++i) fact_ratio /= i;
    for (int k = 0; k <= n_terms; ++k) {
        if (k > 0) fact_ratio *= mpc(k) / mpc(k + 2 * l + 1);
        mpc b(0);
        mpc rp = one;
        for (int i = 0; i <= std::min(p.d, k); ++i) {
            const lreal bc = binom(p.d, i) * ((i % 2) ? -1 : 1);
            b += mpc(static_cast<double>(bc)) * unit.at(k - i) * rp;
            rp *= inv_rho;
        }
        const mpc J = pref * b;
        const mpc den = mpc(l + 1 + k) - nu;
        if (abs(den) < 1e-30) throw GreenError(GreenError::Kind::pole, "oracle: bound-state pole");
        f[k] = fact_ratio / den * J * J;
    }
    mpc sum(0), rn = one;
    double last = 0;
    for (int n = 0; n <= n_terms; ++n) {
        const mpc term = rn * f[0];
        sum += term;
        last = static_cast<double>(abs(term));
        for (int i = 0; i + 1 < static_cast<int>(f.size()) - n; ++i) f[i] = f[i + 1] - f[i];
        rn *= ratio;
    }
    sum /= (one - q);
    const mpc total = mpc(2) * pow(mpc(2) / nu, 2 * l + 1) * sum;
    r.terms = n_terms + 1;
    r.tail_estimate = last / static_cast<double>(abs(sum * (one - q)));
    r.value = {static_cast<double>(total.real()), static_cast<double>(total.imag())};
    return r;
}

}  // namespace

OracleResult radial_green_partial(int l, OracleState s, cplx nu, int k_max) {
    if (k_max < 1) throw GreenError(GreenError::Kind::domain, "oracle: k_max must be >= 1");
    const OracleParams p = params(l, s);
    const lc nul(nu.real(), nu.imag());
    const lc lam = lc(p.beta) + lreal(1) / nul;
    const lc rho = (lreal(2) / nul - lam) / lam;
    OracleResult r = std::norm(rho) < 0.95L ? direct_sum(l, p, nul, k_max) : euler_sum(l, p, nul, k_max);
    r.converged = r.tail_estimate <= 1e-13;
    return r;
}

OracleResult radial_green_oracle(int l, OracleState s, cplx nu, int k_max, double tol) {
    OracleResult r = radial_green_partial(l, s, nu, k_max);
    r.converged = r.tail_estimate <= tol;
    if (!r.converged)
        throw GreenError(GreenError::Kind::no_convergence,
                         "oracle not converged: tail estimate " + std::to_string(r.tail_estimate));
    return r;
}

cplx oracle_matrix_g(cplx t, int k_max) {
    return (1.0 / 3.0) * radial_green_oracle(1, OracleState::s1_weighted, t, k_max).value;
}

cplx oracle_matrix_e(cplx t, int k_max) {
    const cplx nu = 2.0 * t;
    return kAngL0 * radial_green_oracle(0, OracleState::p2_weighted, nu, k_max).value +
           kAngL2 * radial_green_oracle(2, OracleState::p2_weighted, nu, k_max).value;
}

cplx laguerre_moment(int gamma, int mu, cplx lambda, cplx c, int k) {
    if (gamma < mu || k < 0) throw GreenError(GreenError::Kind::domain, "laguerre_moment: need gamma >= mu, k >= 0");
    const lc lam(lambda.real(), lambda.imag()), cl(c.real(), c.imag());
    const lc rho = (cl - lam) / lam;
    BinomialSeries<lc> s(gamma, rho);
    const lc v = factorial(gamma) * std::pow(lam, lreal(-(gamma + 1))) * moment_coefficient(s, gamma - mu, k);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace mollow::green
