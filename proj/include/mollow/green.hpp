#pragma once

// Second-order Schroedinger-Coulomb matrix elements <g|z G z|g> and
// <e|z G z|e> for g = 1S, e = 2P(m=0), parameterised by t with
// zeta = -1/(2 n^2 t^2). Everything here is in atomic units: energy
// (Z alpha)^2 m, length a_B, so matrix elements are in a_B^2/((Z alpha)^2 m).

#include <complex>
#include <stdexcept>

#include "mollow/constants.hpp"

namespace mollow::green {

using cplx = std::complex<double>;

struct GreenError : std::runtime_error {
    enum class Kind { pole, no_convergence, domain };
    Kind kind;
    GreenError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// |<1S|z|2P,m=0>|^2 in atomic units.
constexpr double kDipoleSquared = 32768.0 / 59049.0;

// Resonant poles of the reduced elements: t_1S = 2 for M_g (2P intermediate),
// t_2P = 1/2 for M_e (1S intermediate).
constexpr double kPoleG = 2.0;
constexpr double kPoleE = 0.5;

// 2F1(1, -n t; 1 - n t; ((1-t)/(1+t))^2).
cplx phi(int n, cplx t);
// Same series with the k-th term removed (k >= 1).
cplx phi_excluding(int n, cplx t, int k);

cplx unreduced_matrix_g(cplx t);
cplx unreduced_matrix_e(cplx t);
// Radial parts of the 2P element for l = 0 and l = 2 intermediate states.
cplx unreduced_radial_e_l0(cplx t);
cplx unreduced_radial_e_l2(cplx t);

// Angular weights of <e|z G z|e> and of the all-components sum.
constexpr double kAngL0 = 1.0 / 3.0;
constexpr double kAngL2 = 4.0 / 15.0;
constexpr double kAngL2Standard = 2.0 / 3.0;

enum class PoleMethod { analytic, richardson };

// How the reduced element is evaluated exactly at its resonant pole.
//  exact_limit:      limit t -> t0 of M-bar minus the explicit subtraction.
//  exclude_resonant: drop the resonant term of the Phi series and the
//                    subtraction together (value at t0 only).
enum class PoleConvention { exact_limit, exclude_resonant };

cplx reduced_matrix_g_t(cplx t, PoleMethod m = PoleMethod::analytic,
                        PoleConvention c = PoleConvention::exact_limit);
cplx reduced_matrix_e_t(cplx t, PoleMethod m = PoleMethod::analytic,
                        PoleConvention c = PoleConvention::exact_limit);

// zeta in Hz (nonrelativistic binding-scale energy); result in atomic units.
cplx reduced_matrix_g(cplx zeta_hz, const PhysicalConstants& c, PoleMethod m = PoleMethod::analytic);
cplx reduced_matrix_e(cplx zeta_hz, const PhysicalConstants& c, PoleMethod m = PoleMethod::analytic);

enum class ElementKind { unreduced_g, unreduced_e, reduced_g, reduced_e };

struct GreenMatrixElement {
    cplx value;
    ElementKind kind;
    cplx t;

    // a_B^2/((Z alpha)^2 m) -> m^2/Hz.
    cplx si_value(const PhysicalConstants& c) const;
};

GreenMatrixElement matrix_element(ElementKind kind, cplx t, PoleMethod m = PoleMethod::analytic);

// ---- Laguerre-sum oracle -------------------------------------------------

enum class OracleState { s1_weighted, p2_weighted };

struct OracleResult {
    cplx value;
    double tail_estimate = 0.0;  // relative
    int terms = 0;
    bool converged = false;
};

// Radial integral of r1^3 r2^3 R(r1) R(r2) g_l(r1, r2, nu) summed over the
// Laguerre index up to k_max. 1S weighting requires l = 1, 2P weighting
// l in {0, 2}. For |((1-t)/(1+t))^2| close to 1 the series is resummed with
// the Euler-Knopp transform in 100-digit arithmetic.
OracleResult radial_green_partial(int l, OracleState s, cplx nu, int k_max);
// Throws GreenError(no_convergence) if the tail estimate exceeds tol.
OracleResult radial_green_oracle(int l, OracleState s, cplx nu, int k_max, double tol = 1e-13);

// Oracle versions of the full elements built from the radial parts.
cplx oracle_matrix_g(cplx t, int k_max = 10000);
cplx oracle_matrix_e(cplx t, int k_max = 10000);

// int_0^inf r^gamma exp(-lambda r) L_k^mu(c r) dr via generating-function
// coefficients (stable for large k).
cplx laguerre_moment(int gamma, int mu, cplx lambda, cplx c, int k);

}  // namespace mollow::green
