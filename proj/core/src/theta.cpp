#include "qtheta/theta.hpp"

#include <cmath>

namespace qtheta::theta {

namespace {

Complex partial_product(const std::function<Complex(Complex)>& fac, Complex v,
                        double step, int n) {
    Complex acc = 1.0;
    if (n >= 0) {
        for (int r = 0; r < n; ++r) acc *= fac(v + static_cast<double>(r) * step);
    } else {
        for (int r = 1; r <= -n; ++r) acc /= fac(v - static_cast<double>(r) * step);
    }
    return acc;
}

} // namespace

Complex cocycle_eval(const PeriodCocycle& c, int n, int m, Complex v) {
    // A_{(n,m)}(v) = A_{(n,0)}(v + m w2) * A_{(0,m)}(v)
    const Complex a1 =
        partial_product(c.f, v + static_cast<double>(m) * c.lattice.w2, c.lattice.w1, n);
    const Complex a2 = partial_product(c.g, v, c.lattice.w2, m);
    return a1 * a2;
}

double cocycle_residual(const PeriodCocycle& c, std::pair<int, int> l1,
                        std::pair<int, int> l2, Complex v) {
    const Complex sum = cocycle_eval(c, l1.first + l2.first, l1.second + l2.second, v);
    if (std::abs(sum) < 1e-300)
        throw PoleError("cocycle_residual: combined factor vanishes", v);
    const Complex shift(v.real() + l2.first * c.lattice.w1 + l2.second * c.lattice.w2,
                        v.imag());
    const Complex split = cocycle_eval(c, l1.first, l1.second, shift) *
                          cocycle_eval(c, l2.first, l2.second, v);
    return std::abs(sum - split) / std::abs(sum);
}

PeriodCocycle double_sine_cocycle(const barnes::PeriodPair& w) {
    auto factor = [](double period) {
        return [period](Complex v) -> Complex {
            const Complex s = std::sin(M_PI * v / period);
            if (std::abs(s) < 1e-13)
                throw PoleError("double-sine factor at a sin zero", v);
            return 1.0 / (2.0 * s);
        };
    };
    return PeriodCocycle{factor(w.w2), factor(w.w1), Pseudolattice(w.w1, w.w2)};
}

Complex bold_G(int r, Complex z, double eps) {
    if (!(eps > 1.0)) throw DomainError("bold_G: eps must exceed 1");
    const barnes::PeriodPair w{1.0, eps};
    const Complex mirror = Complex(1.0 + eps, 0.0) - z;
    if (std::abs(z - mirror) < 1e-15) return 1.0; // fixed point of the ratio
    return std::exp(barnes::log_G2_r(r, z, w) - barnes::log_G2_r(r, mirror, w));
}

Complex bold_H_general(int r, int k, Complex z, Complex v,
                       const barnes::PeriodPair& omega, double lambda1,
                       double lambda2, double eps) {
    const Complex mirror = Complex(1.0 + eps, 0.0) - z;
    if (std::abs(z - mirror) < 1e-15) return 1.0;
    hkernel::KernelParams num{z, v, omega, lambda1, lambda2};
    hkernel::KernelParams den{mirror, v, omega, lambda1, lambda2};
    return std::exp(hkernel::log_H(r, k, num) - hkernel::log_H(r, k, den));
}

Complex bold_H(int r, int k, Complex z, Complex v, double eps, double eps_sigma) {
    if (!(eps > 1.0) || !(eps_sigma > 0.0))
        throw DomainError("bold_H: need eps > 1 and eps_sigma > 0");
    return bold_H_general(r, k, z, v, {1.0, eps}, 1.0, eps_sigma, eps);
}

} // namespace qtheta::theta
