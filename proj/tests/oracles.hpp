// Slow, independent reference implementations used only by the test suites.
// These deliberately avoid the contour machinery: series plus Euler-Maclaurin
// continuation, differentiated numerically in s.
#ifndef QTHETA_TESTS_ORACLES_HPP
#define QTHETA_TESTS_ORACLES_HPP

#include <complex>

#include "qtheta/barnes.hpp"

namespace oracles {

using Complex = std::complex<double>;

// zeta_1(s, z, w) = w^{-s} zeta_H(s, z/w)
inline Complex zeta1(Complex s, double z, double w) {
    return std::exp(-s * std::log(w)) * qtheta::barnes::hurwitz_zeta(s, z / w, 1.0);
}

// zeta_2(s, z, (w1,w2)) = sum_{m<M} zeta_1(s, z + m w1, w2) + Euler-Maclaurin
// tail in m. Valid for s away from {1, 2}; the k = 1 tail term is replaced by
// its limit at s = 0 (s zeta_H(s+1, Y) -> 1).
inline Complex zeta2_em(Complex s, double z, double w1, double w2, int M = 60) {
    using qtheta::barnes::hurwitz_zeta;
    static const double b2k[8] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                                  5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    Complex head = 0.0;
    for (int m = 0; m < M; ++m) head += zeta1(s, z + m * w1, w2);
    const double Y = (z + M * w1) / w1;
    const double lw1 = std::log(w1);
    Complex tail = std::exp((1.0 - s) * lw1) / (w2 * (s - 1.0)) * hurwitz_zeta(s - 1.0, Y) +
                   0.5 * std::exp(-s * lw1) * hurwitz_zeta(s, Y);
    double fact = 2.0;
    for (int k = 1; k <= 8; ++k) {
        if (k > 1) fact *= (2 * k - 1) * (2 * k);
        Complex poch = 1.0;
        for (int j = 0; j < 2 * k - 1; ++j) poch *= s + static_cast<double>(j);
        if (k == 1 && std::abs(s) < 1e-8) {
            // s zeta_H(s+1, Y) = 1 - s psi(Y) + O(s^2); asymptotic digamma is
            // ample at Y >= 60.
            const double psi = std::log(Y) - 1.0 / (2.0 * Y) - 1.0 / (12.0 * Y * Y) +
                               1.0 / (120.0 * std::pow(Y, 4));
            tail += b2k[0] / 2.0 * w2 / w1 * (1.0 - s * (lw1 + psi));
            continue;
        }
        tail += b2k[k - 1] / fact * poch * std::pow(w2, 2 * k - 1) *
                std::exp(-(s + static_cast<double>(2 * k - 1)) * lw1) *
                hurwitz_zeta(s + 2.0 * static_cast<double>(k) - 1.0, Y);
    }
    return head + tail;
}

// r-th s-derivative at 0 of a function analytic near 0, r <= 3.
// r = 1 uses the complex step; r = 2, 3 use Richardson-extrapolated central
// differences (good to ~1e-9 for the zeta-type functions here).
template <typename F>
Complex sderiv_at0(const F& f, int r) {
    if (r == 0) return f(Complex(0.0, 0.0));
    if (r == 1) {
        const double h = 1e-100;
        const Complex v = f(Complex(0.0, h));
        return Complex(v.imag() / h, 0.0);
    }
    auto stencil = [&f, r](double h) -> Complex {
        if (r == 2)
            return (f(Complex(h, 0)) - 2.0 * f(Complex(0, 0)) + f(Complex(-h, 0))) / (h * h);
        return (f(Complex(2 * h, 0)) - 2.0 * f(Complex(h, 0)) + 2.0 * f(Complex(-h, 0)) -
                f(Complex(-2 * h, 0))) /
               (2.0 * h * h * h);
    };
    const double h = 1e-2;
    const Complex a = stencil(h), b = stencil(h / 2.0);
    return (4.0 * b - a) / 3.0;
}

} // namespace oracles

#endif
