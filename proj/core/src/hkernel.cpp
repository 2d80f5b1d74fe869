#include "qtheta/hkernel.hpp"

#include <algorithm>
#include <cmath>

namespace qtheta::hkernel {

namespace {

// Kernel with the e^{zt} factor stripped: depends on (t, u, v, w, lam) only.
Complex stripped_kernel(Complex t, Complex u, const KernelParams& p) {
    const Complex lam_sum(p.lambda1 + p.lambda2, 0.0);
    const Complex e1 = 1.0 - std::exp(t * (p.omega.w1 + u * p.lambda1));
    const Complex e2 = 1.0 - std::exp(t * (p.omega.w2 + u * p.lambda2));
    if (std::abs(e1) < 1e-13 || std::abs(e2) < 1e-13)
        throw PoleError("kernel denominator vanishes", u);
    return std::exp((lam_sum - p.v) * t * u) / (e1 * e2);
}

Complex reference_term(Complex t, const KernelParams& p) {
    const Complex e1 = 1.0 - std::exp(t * p.omega.w1);
    const Complex e2 = 1.0 - std::exp(t * p.omega.w2);
    if (std::abs(e1) < 1e-13 || std::abs(e2) < 1e-13)
        throw PoleError("reference denominator vanishes", t);
    return 1.0 / (e1 * e2);
}

} // namespace

double KernelParams::pole_radius() const {
    double r = std::numeric_limits<double>::infinity();
    if (lambda1 != 0.0) r = std::min(r, omega.w1 / std::abs(lambda1));
    if (lambda2 != 0.0) r = std::min(r, omega.w2 / std::abs(lambda2));
    return r;
}

double KernelParams::effective_u_radius() const {
    if (u_radius > 0.0) return u_radius;
    const double pr = pole_radius();
    if (std::isinf(pr)) return 2.0;
    return 0.5 * (1.0 + pr);
}

void KernelParams::validate() const {
    if (!(omega.w1 > std::abs(lambda1)) || !(omega.w2 > std::abs(lambda2)))
        throw DomainError("KernelParams: need w_i > |lam_i|");
    const double r = effective_u_radius();
    if (!(r > 1.0)) throw DomainError("KernelParams: u radius must exceed 1");
    if (!(r < pole_radius()))
        throw DataError("KernelParams: u radius encloses a kernel pole");
}

Complex gothic_g(Complex t, Complex u, const KernelParams& p) {
    return std::exp(p.z * t) * (stripped_kernel(t, u, p) - reference_term(t, p));
}

std::vector<Complex> coeff_C_block(int maxN, Complex t, const KernelParams& p,
                                   double tol) {
    if (maxN < 1) throw DomainError("coeff_C_block: maxN must be >= 1");
    p.validate();
    const double r = p.effective_u_radius();
    std::vector<Complex> prev;
    for (int M = 64; M <= 16384; M *= 2) {
        std::vector<Complex> acc(static_cast<std::size_t>(maxN), Complex(0.0, 0.0));
        for (int j = 0; j < M; ++j) {
            const double th = 2.0 * M_PI * j / M;
            const Complex u = r * std::exp(Complex(0.0, th));
            const Complex h = stripped_kernel(t, u, p);
            for (int N = 1; N <= maxN; ++N)
                acc[static_cast<std::size_t>(N - 1)] +=
                    h * std::exp(Complex(0.0, -N * th));
        }
        for (int N = 1; N <= maxN; ++N)
            acc[static_cast<std::size_t>(N - 1)] /= static_cast<double>(M) * std::pow(r, N);
        if (!prev.empty()) {
            double diff = 0.0;
            for (int N = 0; N < maxN; ++N)
                diff = std::max(diff, std::abs(acc[static_cast<std::size_t>(N)] -
                                               prev[static_cast<std::size_t>(N)]));
            if (diff < tol) return acc;
        }
        prev = std::move(acc);
    }
    throw TruncationError("coeff_C_block: trapezoid failed to converge");
}

Complex coeff_C(int N, Complex t, const KernelParams& p, double tol) {
    if (N < 0) throw DomainError("coeff_C: N must be >= 0");
    if (N == 0) return reference_term(t, p); // C_0 = 1/((1-e^{t w1})(1-e^{t w2}))
    if (p.lambda1 == 0.0 && p.lambda2 == 0.0 && p.v == Complex(0.0, 0.0)) return 0.0;
    return coeff_C_block(N, t, p, tol)[static_cast<std::size_t>(N - 1)];
}

Complex tail_sum_J(int k, Complex t, const KernelParams& p, double tol) {
    if (k < 1) throw DomainError("tail_sum_J: k must be >= 1");
    if (p.lambda1 == 0.0 && p.lambda2 == 0.0 && p.v == Complex(0.0, 0.0)) return 0.0;
    p.validate();
    const double r = p.effective_u_radius();
    // sup of the stripped kernel on |u| = r bounds |C_N| r^N.
    double sup = 0.0;
    for (int j = 0; j < 32; ++j) {
        const Complex u = r * std::exp(Complex(0.0, 2.0 * M_PI * j / 32.0));
        sup = std::max(sup, std::abs(stripped_kernel(t, u, p)));
    }
    int nstar = 1;
    while (sup * std::pow(r, -nstar) / (1.0 - 1.0 / r) > tol) {
        ++nstar;
        if (nstar > 2000)
            throw TruncationError("tail_sum_J: geometric bound will not certify");
    }
    const std::vector<Complex> c = coeff_C_block(nstar, t, p, 0.1 * tol);
    Complex acc = 0.0;
    for (int N = nstar; N >= 1; --N)
        acc += c[static_cast<std::size_t>(N - 1)] / std::pow(static_cast<double>(N), k);
    return (k % 2 == 0) ? acc : -acc;
}

double region_bound(const KernelParams& p) {
    return p.effective_u_radius() * std::abs(Complex(p.lambda1 + p.lambda2, 0.0) - p.v) +
           p.omega.w1 + p.omega.w2;
}

Complex log_H(int q, int k, const KernelParams& p, double tol) {
    if (q < 0 || k < 1) throw DomainError("log_H: need q >= 0, k >= 1");
    if (p.lambda1 == 0.0 && p.lambda2 == 0.0 && p.v == Complex(0.0, 0.0)) return 0.0;
    p.validate();
    const double bound = region_bound(p);
    if (!(p.z.real() > bound))
        throw RegionError("log_H: Re z inside the unproven region (bound " +
                          std::to_string(bound) + ")");
    const double wsum = p.omega.w1 + p.omega.w2;
    const double r = p.effective_u_radius();

    contour::HankelContour c;
    // Keep the circle clear of the t-poles of the kernel on |u| = r.
    const double tp1 = 2.0 * M_PI / (p.omega.w1 + r * std::abs(p.lambda1));
    const double tp2 = 2.0 * M_PI / (p.omega.w2 + r * std::abs(p.lambda2));
    c.radius = 0.4 * std::min(tp1, tp2);
    c.tolerance = tol;
    c.decay_rate = p.z.real() - bound;
    c.truncation = contour::suggested_truncation(c.decay_rate, tol, 10.0, q);

    auto f = [&](Complex t, Complex lmt) -> Complex {
        Complex lp = 1.0;
        for (int j = 0; j < q; ++j) lp *= lmt;
        return std::exp((wsum - p.z) * t) * tail_sum_J(k, t, p, 0.01 * tol) * lp / t;
    };
    return contour::hankel_quadrature(f, c) / Complex(0.0, 2.0 * M_PI);
}

} // namespace qtheta::hkernel
