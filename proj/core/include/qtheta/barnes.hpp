#ifndef QTHETA_BARNES_HPP
#define QTHETA_BARNES_HPP

#include <complex>
#include <vector>

#include "qtheta/contour.hpp"
#include "qtheta/errors.hpp"

namespace qtheta::barnes {

using Complex = std::complex<double>;

struct PeriodPair {
    double w1, w2;
    PeriodPair(double w1, double w2) : w1(w1), w2(w2) {
        if (!(w1 > 0.0) || !(w2 > 0.0))
            throw DomainError("PeriodPair: both periods must be positive");
    }
};

/// Immutable table of Gamma^{(j)}(1), j = 0..m, from the
/// exponential-of-series recurrence on log Gamma(1+x).
class GammaDerivTable {
public:
    explicit GammaDerivTable(int m);
    double operator()(int j) const { return vals_.at(static_cast<std::size_t>(j)); }
    int order() const { return static_cast<int>(vals_.size()) - 1; }

private:
    std::vector<double> vals_;
};

/// Shared table, large enough for every pipeline use (m = 12).
const GammaDerivTable& gamma_derivs();

/// Hurwitz zeta sum_{n>=0} (x + n omega)^{-s}, Euler-Maclaurin continuation.
Complex hurwitz_zeta(Complex s, double x, double omega = 1.0);

/// r-th s-derivative at s = 0 of zeta_1(s,z,omega) = sum_{n>=0}(z+n omega)^{-s},
/// via Hankel quadrature on the log(-t)-power integrands.
Complex zeta1_sderiv(int r, Complex z, double omega, double tol = 1e-11);

/// Same for the Barnes double zeta zeta_2(s,z,(omega_1,omega_2)).
Complex zeta2_sderiv(int r, Complex z, const PeriodPair& w, double tol = 1e-11);

/// Dispatcher matching the spec surface (level 1 uses w.w1 as the period).
Complex zeta_sderiv(int level, int r, Complex z, const PeriodPair& w);

/// log Gamma_1^r(z, omega) := zeta_1^{(r)}(0, z, omega).
Complex log_gamma1_r(int r, Complex z, double omega);

/// log Gamma_2^r(z, omega) := zeta_2^{(r)}(0, z, omega), normalising constant 0.
Complex log_gamma2_r(int r, Complex z, const PeriodPair& w);

/// log G_1^r: single-period analogue of log G_2^r (used by the periodicity
/// ladders), (1/2 pi i) x Hankel integral of e^{-zt} log(-t)^r / ((1-e^{-omega t}) t).
Complex log_G1_r(int r, Complex z, double omega, double tol = 1e-11);

/// log G_2^r: direct Hankel integral with kernel
/// e^{-zt} log(-t)^r / ((1-e^{-omega_1 t})(1-e^{-omega_2 t}) t), prefactor 1/(2 pi i).
/// Change of basis: log Gamma_2^r = sum_j A_{rj} log G_2^{r-j},
/// A_{ij} = (-1)^j C(i,j) Gamma^{(j)}(1).
Complex log_G2_r(int r, Complex z, const PeriodPair& w, double tol = 1e-11,
                 double radius_override = 0.0);

/// Double sine S_2(z) = Gamma_2(w1+w2-z) / Gamma_2(z); direct formula for
/// 0 < Re z < w1 + w2, extended elsewhere by the functional equations.
Complex double_sine(Complex z, const PeriodPair& w);

} // namespace qtheta::barnes

#endif
