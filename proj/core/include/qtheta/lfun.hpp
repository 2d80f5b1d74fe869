#ifndef QTHETA_LFUN_HPP
#define QTHETA_LFUN_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qtheta/quadfield.hpp"
#include "qtheta/shintani.hpp"

namespace qtheta::lfun {

using Complex = std::complex<double>;
using quadfield::ClassData;
using quadfield::ConeRegion;
using shintani::ContourOptions;
using shintani::DerivLedger;

/// One partial L-value L_S(s,g) = N(f a_i)^{-s} sum_{x in R(g)} zeta(s,(eps,eps'),x).
struct PartialLValue {
    std::string g;
    Complex s;
    Complex value;
    ConeRegion region;
    bool empty_region = false;
};

PartialLValue partial_L(Complex s, const std::string& g, const ClassData& data,
                        ContourOptions opts = {});

/// log T(g) = sum_{R(g)} zeta'(0,x) - log N(f a_i) * zeta(0,x)  (derivative path).
Complex log_T_invariant(const std::string& g, const ClassData& data,
                        ContourOptions opts = {});
Complex T_invariant(const std::string& g, const ClassData& data,
                    ContourOptions opts = {});

/// m-th derivative at 0 of L_S(chi,s) = sum_g chi(g) L_S(s,g), as a ledger.
DerivLedger L_chi_deriv(int m, const quadfield::Character& chi, const ClassData& data,
                        ContourOptions opts = {});

/// X_f(g) through both routes of the defining identity.
struct XInvariant {
    std::string g;
    std::string nu_g; // label of [nu]^+_f g
    Complex primary;   // T(g) / T([nu]g)
    Complex secondary; // prod over R(g) of 1/(S2(z,(1,eps)) S2(z^sigma,(1,eps^sigma)))
    double difference; // |primary - secondary| / |primary|
};

XInvariant X_invariant(const std::string& g, const ClassData& data,
                       ContourOptions opts = {});

/// Ledger for L_S^(m)(0,g) - L_S^(m)(0,[nu]g). The Bernoulli-tagged terms must
/// cancel exactly (checked at rational level and numerically); a failure
/// raises ConsistencyError.
DerivLedger L_diff_m(int m, const std::string& g, const ClassData& data,
                     ContourOptions opts = {});

/// Minimal integer polynomial probe: smallest degree, then smallest height,
/// accepting |p(value)| < 1e-11 ||p||_2 in extended precision. The tight
/// threshold keeps the expected number of lattice coincidences below one
/// over the full degree-4, height-50 search. Heuristic recognition only.
struct PolyHit {
    std::vector<long> coeffs; // c0 + c1 x + ... + cd x^d, cd > 0
    int degree = 0;
    long height = 0;
    std::string str() const;
};

std::optional<PolyHit> recognize_algebraic(double value, int deg_bound = 4,
                                           long height_bound = 50);

/// One-point calibration of the Barnes normalising constants: log_rho is the
/// combined log(rho(1,a1) rho(1,a2)) making the closed first-derivative
/// formula exact at the reference point.
struct RhoCalibration {
    double a1 = 0.0, a2 = 0.0;
    Complex log_rho{0.0, 0.0};
    double ref_x1 = 0.0, ref_x2 = 0.0;
};

RhoCalibration calibrate_rho(double a1, double a2, double x1, double x2,
                             ContourOptions opts = {});
/// Closed-formula zeta'(0) using a calibration (gamma2 products minus log_rho).
Complex zeta_deriv0_closed(const RhoCalibration& cal, double x1, double x2);

} // namespace qtheta::lfun

#endif
