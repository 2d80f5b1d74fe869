#ifndef QTHETA_SHINTANI_HPP
#define QTHETA_SHINTANI_HPP

#include <complex>
#include <string>
#include <vector>

#include "qtheta/errors.hpp"
#include "qtheta/quadfield.hpp"

namespace qtheta::shintani {

using Complex = std::complex<double>;
using quadfield::Rat;

/// Parameters of the two-variable cone zeta function
///   zeta(s, a, x) = sum_{m,n >= 0} [(x1+m+(x2+n)a1)(x1+m+(x2+n)a2)]^{-s}.
struct ShintaniParams {
    double a1, a2; // positive ray slopes (a unit and its conjugate in applications)
    double x1, x2; // cone cell point
    ShintaniParams(double a1, double a2, double x1, double x2);
    ShintaniParams swapped() const { return {a2, a1, x1, x2}; }
    double z() const { return (1.0 - x1) + a1 * (1.0 - x2); }
    double v() const { return (1.0 - x1) + a2 * (1.0 - x2); }
};

/// Contour knobs shared by the double-integral evaluators. Zero fields request
/// defaults derived from the parameters.
struct ContourOptions {
    double t_radius = 0.0;
    double u_radius = 0.0;
    double tmax = 0.0;
    double tolerance = 1e-9;
};

double bernoulli_poly(int n, double x); // B1 or B2

/// Li_n(z) for z <= 0: power series on |z| <= 1/2, else the integral
/// recursion Li_n(z) = Li_n(-1/2) + int_{-1/2}^z Li_{n-1}(t)/t dt.
double polylog(int n, double z);

/// log Gamma on Re z > 0 (Lanczos), used by the contour prefactor.
Complex log_gamma(Complex z);

/// Prefactor P(s) = -4 pi^2 (1 + e^{2 pi i s}) / Gamma(1-s)^2 linking the
/// double contour integral to zeta: contour = P(s) zeta(s,a,x).
Complex prefactor(Complex s);
/// d^j/ds^j P at s = 0, j <= 8.
Complex prefactor_deriv0(int j);

/// Reference double sum, Re s > 1.02: inner index collapsed through
/// binomial Hurwitz expansions, outer tail by Euler-Maclaurin.
Complex zeta_direct(Complex s, const ShintaniParams& p, double tol = 1e-10);

/// Nested Hankel evaluation of zeta(s,a,x) near s = 0 and on Re s > 1.
/// Throws PoleError at s in 1/2 + Z where the prefactor vanishes.
Complex zeta_contour(Complex s, const ShintaniParams& p, ContourOptions opts = {});

/// zeta(0,a,x) in closed Bernoulli form.
double zeta_value0(const ShintaniParams& p);
/// Exact-rational variant at a = (eps, eps^sigma) for a unit eps of norm 1.
Rat zeta_value0_exact(const quadfield::QuadElem& eps, const Rat& x1, const Rat& x2);

/// Loop integral over I(lambda,1) of u^m log(u)^r du, closed form.
Complex contour_lemma_log1(int m, int r);

/// lim_{lambda->0} int_lambda^1 log(u)^r / (a1 + a2 u) du
///   = (1/a2) (-1)^{r+1} r! Li_{r+1}(-a2/a1).
double contour_lemma_polylog(int r, double a1, double a2);

/// Raw double contour integral of [g(t,tu)+g(tu,t)] log(-t)^p log(u)^q /(t u);
/// `part` selects both kernel orderings (0), g(t,tu) only (1), g(tu,t) only (2).
Complex I_pq_quadrature(int p, int q, const ShintaniParams& p_s, int part = 0,
                        ContourOptions opts = {});

// ---- derivative ledger ----------------------------------------------------

enum class GenKind { LogG2, LogH, BernB2x1, BernB1B1, BernB2x2, Polylog, LogNorm, RootOfUnity };

struct LedgerTerm {
    GenKind kind;
    std::string key; // identifies the generator instance; merge key
    Complex coeff;
    Complex generator;
    int pi_power = 0; // largest power of 2 pi i carried by coeff
    bool region_fallback = false;
};

struct DerivLedger {
    Complex value{0.0, 0.0};
    std::vector<LedgerTerm> terms;

    Complex reconstruct() const;
    double residual() const; // |value - reconstruct| / max(1, |value|)
    int max_pi_power() const;
    void add(GenKind kind, std::string key, Complex coeff, Complex gen, int pi_power,
             bool fallback = false);
    /// Append scale * other; pi powers shift by extra_pi_power.
    void merge(const DerivLedger& other, Complex scale, int extra_pi_power = 0);
    void normalize(); // merge equal keys, drop negligible terms, sort by key
};

/// A_{p,q}: double contour of g(t,tu) log(-t)^p log(u)^q /(t u), expressed as
/// closed log G2 / Bernoulli-polylog terms plus, for p,q >= 1, a numerically
/// integrated tail flagged as a region fallback.
DerivLedger A_pq(int p, int q, const ShintaniParams& p_s, ContourOptions opts = {});
/// B_{p,q} = A_{p,q} with the ray slopes swapped (kernel orderings exchanged).
DerivLedger B_pq(int p, int q, const ShintaniParams& p_s, ContourOptions opts = {});

/// m-th s-derivative of zeta at 0 through the Taylor recurrence
///   zeta^(m)(0) = (I_m(0) - sum_{b<m} C(m,b) P^(m-b)(0) zeta^(b)(0)) / P(0).
DerivLedger zeta_deriv_m(int m, const ShintaniParams& p_s, ContourOptions opts = {});

/// First derivative with the classical closed-form ledger (two log G2 terms
/// plus the B2(x1)-weighted slope correction); value from zeta_deriv_m(1).
DerivLedger zeta_deriv0(const ShintaniParams& p_s, ContourOptions opts = {});

} // namespace qtheta::shintani

#endif
