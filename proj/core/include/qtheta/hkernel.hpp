#ifndef QTHETA_HKERNEL_HPP
#define QTHETA_HKERNEL_HPP

#include <complex>
#include <vector>

#include "qtheta/barnes.hpp"
#include "qtheta/contour.hpp"
#include "qtheta/errors.hpp"

namespace qtheta::hkernel {

using Complex = std::complex<double>;

/*
 * Parameters of the deformation kernel
 *   g(t,u) = e^{zt} e^{(|lam|-v)tu} / ((1-e^{t(w1+u lam1)})(1-e^{t(w2+u lam2)}))
 *          - e^{zt} / ((1-e^{t w1})(1-e^{t w2})),      |lam| = lam1 + lam2.
 * The deformation directions lam may vanish (the kernel is then identically
 * zero), so they are held as plain reals rather than a positive period pair.
 */
struct KernelParams {
    Complex z;
    Complex v;
    barnes::PeriodPair omega;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double u_radius = 0.0; // r_u; 0 requests the default (midpoint to first pole)

    [[nodiscard]] double pole_radius() const; // smallest |u|-pole modulus, inf if lam = 0
    [[nodiscard]] double effective_u_radius() const;
    void validate() const; // w_i > |lam_i|, r_u below the first pole
};

Complex gothic_g(Complex t, Complex u, const KernelParams& p);

/// N-th Taylor coefficient at u = 0 of u -> [g + reference term] e^{-tz}
/// (z-independent), by the trapezoidal Cauchy integral on |u| = r_u.
Complex coeff_C(int N, Complex t, const KernelParams& p, double tol = 1e-12);

/// Taylor coefficients 1..maxN in one pass over the same trapezoid nodes.
std::vector<Complex> coeff_C_block(int maxN, Complex t, const KernelParams& p,
                                   double tol = 1e-12);

/// (-1)^k sum_{N>=1} C_N(t)/N^k, truncated once the geometric bound
/// r_u^{-N}/(1 - 1/r_u) * sup|kernel| certifies the tail below tol.
Complex tail_sum_J(int k, Complex t, const KernelParams& p, double tol = 1e-12);

/// Convergence bound of the proven half-plane: r_u |lam1+lam2-v| + w1 + w2.
double region_bound(const KernelParams& p);

/// log H^{q,k} = (1/2 pi i) Hankel integral of
///   e^{(|w|-z)t} * tail_sum_J(k,t) * log(-t)^q / t.
/// Requires Re z > region_bound(p); anywhere else raises RegionError.
Complex log_H(int q, int k, const KernelParams& p, double tol = 1e-9);

} // namespace qtheta::hkernel

#endif
