#ifndef QTHETA_CONTOUR_HPP
#define QTHETA_CONTOUR_HPP

#include <complex>
#include <functional>
#include <limits>

#include "qtheta/errors.hpp"

namespace qtheta::contour {

using Complex = std::complex<double>;

/*
 * Hankel-type contour I(lambda_c, r): from r in along the positive real
 * axis to lambda_c, once anticlockwise around the origin on the circle
 * |t| = lambda_c, and back out to r.
 *
 * Branch convention for log(-t): arg(-t) increases continuously from -pi
 * on the inbound ray to +pi on the outbound ray, so
 *     inbound:   log(-t) = ln t - i pi        (t > 0)
 *     circle:    log(-t) = ln lambda_c + i theta,  theta in (-pi, pi)
 *     outbound:  log(-t) = ln t + i pi.
 * On the circle t = lambda_c * exp(i(theta + pi)).
 *
 * This makes outbound - inbound = 2 pi i, the jump every closed form in
 * the appendix lemmas requires.
 */
struct HankelContour {
    double radius = 0.5;                                       // lambda_c
    double outer_limit = std::numeric_limits<double>::infinity();
    double truncation = 40.0;       // T_max used when outer_limit is infinite
    double tolerance = 1e-10;       // absolute quadrature tolerance
    double decay_rate = 1.0;        // exponential decay bound on the outbound ray

    [[nodiscard]] double effective_outer() const {
        return std::isinf(outer_limit) ? truncation : outer_limit;
    }
};

/// Integrand on the contour: receives t and the branch-correct log(-t).
using Integrand = std::function<Complex(Complex t, Complex log_minus_t)>;

/// Half the distance to the nearest nonzero pole t = 2 pi i k / omega_j of
/// 1/((1 - e^{+-omega_1 t})(1 - e^{+-omega_2 t})).
double pole_safe_radius(double omega1, double omega2);

/// Contour integral of f over I(lambda_c, r). Returns the raw integral
/// (no 1/(2 pi i) prefactor).
Complex hankel_quadrature(const Integrand& f, const HankelContour& c);

/// T_max such that bound * exp(-decay * T) * (log T + pi)^log_power < tol / 10.
double suggested_truncation(double decay, double tol, double bound = 1.0,
                            int log_power = 0);

/// Adaptive Gauss-Kronrod integration of a complex-valued function on [a, b].
/// Exposed for reuse by the elementary real-axis integrals.
Complex integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                     double tol);

} // namespace qtheta::contour

#endif
