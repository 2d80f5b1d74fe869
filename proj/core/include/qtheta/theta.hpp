#ifndef QTHETA_THETA_HPP
#define QTHETA_THETA_HPP

#include <complex>
#include <functional>
#include <utility>

#include "qtheta/barnes.hpp"
#include "qtheta/hkernel.hpp"

namespace qtheta::theta {

using Complex = std::complex<double>;

struct Pseudolattice {
    double w1, w2;
    bool ratio_irrational = false; // advisory only
    Pseudolattice(double w1, double w2, bool irr = false)
        : w1(w1), w2(w2), ratio_irrational(irr) {
        if (!(w1 > 0.0) || !(w2 > 0.0))
            throw DomainError("Pseudolattice: periods must be positive");
    }
};

/// Automorphy factor system A_l(v) built from two meromorphic factor
/// functions. Factors report singularities by throwing PoleError.
struct PeriodCocycle {
    std::function<Complex(Complex)> f; // step by w1
    std::function<Complex(Complex)> g; // step by w2
    Pseudolattice lattice;
};

/// A_{(n,m)}(v) with A_{(1,0)} = f(v), A_{(0,1)} = g(v); negative steps via
/// the inverse relation A_{-l}(v) = A_l(v - l)^{-1}.
Complex cocycle_eval(const PeriodCocycle& c, int n, int m, Complex v);

/// Relative residual of the cocycle law A_{l1+l2}(v) = A_{l1}(v+l2) A_{l2}(v).
double cocycle_residual(const PeriodCocycle& c, std::pair<int, int> l1,
                        std::pair<int, int> l2, Complex v);

/// Factor system of the double sine: f(v) = 1/(2 sin(pi v / w2)),
/// g(v) = 1/(2 sin(pi v / w1)), so that S_2(v + l) = A_l(v) S_2(v).
PeriodCocycle double_sine_cocycle(const barnes::PeriodPair& w);

/// G-ratio: G_2^r(z,(1,eps)) / G_2^r(1+eps-z,(1,eps)).
Complex bold_G(int r, Complex z, double eps);

/// H-ratio with explicit periods: exp(log_H(z) - log_H(1+eps-z)); both
/// evaluations must be inside the proven half-plane.
Complex bold_H_general(int r, int k, Complex z, Complex v,
                       const barnes::PeriodPair& omega, double lambda1,
                       double lambda2, double eps);

/// H-ratio at the arithmetic parameters omega = (1,eps), lam = (1,eps_sigma).
/// z = (1+eps)/2 returns 1 exactly (numerator equals denominator); every
/// other z sits outside the proven region for these deformation directions
/// (w1 = lam1 = 1) and raises the corresponding error.
Complex bold_H(int r, int k, Complex z, Complex v, double eps, double eps_sigma);

} // namespace qtheta::theta

#endif
