#include "qtheta/shintani.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qtheta/contour.hpp"
#include "shintani_detail.hpp"

namespace qtheta::shintani {

namespace {

const Complex kTwoPiI(0.0, 2.0 * M_PI);

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double ipow(double b, int e) {
    double r = 1.0;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

Complex cpow(Complex b, int e) {
    Complex r = 1.0;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

double binom(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

} // namespace

ShintaniParams::ShintaniParams(double a1, double a2, double x1, double x2)
    : a1(a1), a2(a2), x1(x1), x2(x2) {
    if (!(a1 > 0.0) || !(a2 > 0.0))
        throw DomainError("ShintaniParams: ray slopes must be positive");
    if (!(x1 + x2 * a1 > 0.0) || !(x1 + x2 * a2 > 0.0))
        throw DomainError("ShintaniParams: need x1 + x2 a_i > 0");
}

double bernoulli_poly(int n, double x) {
    if (n == 1) return x - 0.5;
    if (n == 2) return x * x - x + 1.0 / 6.0;
    throw DomainError("bernoulli_poly: degree must be 1 or 2");
}

double polylog(int n, double z) {
    if (n < 1) throw DomainError("polylog: order must be >= 1");
    if (z > 0.0) throw DomainError("polylog: argument must be <= 0");
    if (z == 0.0) return 0.0;
    if (n == 1) return -std::log1p(-z);
    if (z >= -0.5) {
        double acc = 0.0, zk = 1.0;
        for (int k = 1; k < 200; ++k) {
            zk *= z;
            const double term = zk / ipow(static_cast<double>(k), n);
            acc += term;
            if (std::abs(term) < 1e-17 * (std::abs(acc) + 1e-30)) break;
        }
        return acc;
    }
    const double base = polylog(n, -0.5);
    const Complex tail = contour::integrate_gk(
        [n](double t) { return Complex(polylog(n - 1, t) / t, 0.0); }, -0.5, z, 1e-12);
    return base + tail.real();
}

Complex log_gamma(Complex z) {
    static const double c[9] = {0.99999999999980993,     676.5203681218851,
                                -1259.1392167224028,     771.32342877765313,
                                -176.61502916214059,     12.507343278686905,
                                -0.13857109526572012,    9.9843695780195716e-6,
                                1.5056327351493116e-7};
    if (z.real() < 0.5)
        return std::log(M_PI / std::sin(M_PI * z)) - log_gamma(1.0 - z);
    z -= 1.0;
    Complex x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    const Complex t = z + 7.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex prefactor(Complex s) {
    return -4.0 * M_PI * M_PI * (1.0 + std::exp(kTwoPiI * s)) *
           std::exp(-2.0 * log_gamma(1.0 - s));
}

Complex prefactor_deriv0(int j) {
    if (j < 0 || j > 8) throw DomainError("prefactor_deriv0: order must be in 0..8");
    constexpr int K = 12;
    // series of 1 + e^{2 pi i s}
    std::vector<Complex> a(K + 1, 0.0);
    a[0] = 2.0;
    for (int k = 1; k <= K; ++k) a[k] = cpow(kTwoPiI, k) / factorial(k);
    // series of Gamma(1-s)^{-2} = exp(-2[gamma s + sum_{k>=2} zeta(k) s^k / k])
    std::vector<Complex> h(K + 1, 0.0);
    h[1] = -2.0 * 0.57721566490153286060651209;
    for (int k = 2; k <= K; ++k) h[k] = -2.0 * std::riemann_zeta(k) / k;
    std::vector<Complex> b(K + 1, 0.0);
    b[0] = 1.0;
    for (int n = 1; n <= K; ++n) {
        Complex acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += static_cast<double>(k) * h[k] * b[n - k];
        b[n] = acc / static_cast<double>(n);
    }
    Complex cj = 0.0;
    for (int k = 0; k <= j; ++k) cj += a[k] * b[j - k];
    return -4.0 * M_PI * M_PI * cj * factorial(j);
}

// ---- reference double sum --------------------------------------------------

namespace {

// Derivatives 0..K at y of h(y) = ((y+c1)(y+c2))^{-s}, via the log-derivative
// recurrence h^{(k)} = sum_j C(k-1,j) h^{(j)} (ln h)^{(k-j)}.
void pow_derivs(Complex s, double c1, double c2, double y, int K,
                std::vector<Complex>& out) {
    const double u1 = 1.0 / (y + c1), u2 = 1.0 / (y + c2);
    std::vector<Complex> fd(K + 1, 0.0);
    for (int k = 1; k <= K; ++k)
        fd[k] = -s * ((k % 2 == 1) ? 1.0 : -1.0) * factorial(k - 1) *
                (ipow(u1, k) + ipow(u2, k));
    out.assign(K + 1, 0.0);
    out[0] = std::exp(-s * (std::log(y + c1) + std::log(y + c2)));
    for (int k = 1; k <= K; ++k) {
        Complex acc = 0.0;
        for (int j = 0; j < k; ++j) acc += binom(k - 1, j) * out[j] * fd[k - j];
        out[k] = acc;
    }
}

Complex em_row_sum(Complex s, double c1, double c2, double tol) {
    const int M = 28;
    Complex acc = 0.0;
    for (int m = 0; m < M; ++m)
        acc += std::exp(-s * (std::log(m + c1) + std::log(m + c2)));
    const double L = M + std::min(c1, c2);
    auto h = [&](double y) {
        return std::exp(-s * (std::log(y + c1) + std::log(y + c2)));
    };
    double W = 5.0;
    while (std::abs(h(M + L * std::expm1(W))) * L * std::exp(W) > 1e-18 && W < 400.0)
        W += 5.0;
    const Complex integral = contour::integrate_gk(
        [&](double w) {
            const double y = M + L * std::expm1(w);
            return h(y) * L * std::exp(w);
        },
        0.0, W, 0.02 * tol);
    std::vector<Complex> d;
    pow_derivs(s, c1, c2, static_cast<double>(M), 5, d);
    return acc + integral + 0.5 * d[0] - d[1] / 12.0 + d[3] / 720.0 - d[5] / 30240.0;
}

} // namespace

Complex zeta_direct(Complex s, const ShintaniParams& p, double tol) {
    if (!(s.real() > 1.02))
        throw DomainError("zeta_direct: requires Re s > 1.02");
    auto row = [&](double n) {
        const double c1 = p.x1 + (p.x2 + n) * p.a1;
        const double c2 = p.x1 + (p.x2 + n) * p.a2;
        return em_row_sum(s, c1, c2, tol);
    };
    const int N = 24;
    Complex acc = 0.0;
    for (int n = 0; n < N; ++n) acc += row(n);
    // outer tail by Euler-Maclaurin with numeric derivatives of the row sum
    const double L = N + p.x2 + 1.0;
    auto decayed = [&](double w) {
        const double n = N + L * std::expm1(w);
        return row(n) * L * std::exp(w);
    };
    double W = 5.0;
    while (std::abs(decayed(W)) > 1e-16 && W < 400.0) W += 5.0;
    const Complex integral = contour::integrate_gk(decayed, 0.0, W, 0.05 * tol);
    const double hstep = 0.25;
    const Complex f1 = row(N + hstep), fm1 = row(N - hstep);
    const Complex f2 = row(N + 2.0 * hstep), fm2 = row(N - 2.0 * hstep);
    const Complex fp = (8.0 * (f1 - fm1) - (f2 - fm2)) / (12.0 * hstep);
    const Complex fppp = (f2 - 2.0 * f1 + 2.0 * fm1 - fm2) / (2.0 * hstep * hstep * hstep);
    return acc + integral + 0.5 * row(N) - fp / 12.0 + fppp / 720.0;
}

// ---- nested contour machinery ----------------------------------------------

namespace {

struct ConeKernel {
    double a1, a2, z, v;

    // e^E / ((1 - e^{w1})(1 - e^{w2})) with the growing exponentials folded
    // into a single combined exponent so large |t| never overflows
    static Complex stable(Complex E, Complex w1, Complex w2) {
        Complex expo = E;
        double sgn = 1.0;
        Complex d1, d2;
        if (w1.real() > 0.0) {
            expo -= w1;
            sgn = -sgn;
            d1 = 1.0 - std::exp(-w1);
        } else {
            d1 = 1.0 - std::exp(w1);
        }
        if (w2.real() > 0.0) {
            expo -= w2;
            sgn = -sgn;
            d2 = 1.0 - std::exp(-w2);
        } else {
            d2 = 1.0 - std::exp(w2);
        }
        if (std::abs(d1) < 1e-13 || std::abs(d2) < 1e-13)
            throw PoleError("cone kernel pole", w1);
        return sgn * std::exp(expo) / (d1 * d2);
    }

    Complex g12(Complex t, Complex u) const {
        return stable(t * (z + v * u), t * (1.0 + u), t * (a1 + a2 * u));
    }
    Complex g21(Complex t, Complex u) const {
        return stable(t * (v + z * u), t * (1.0 + u), t * (a2 + a1 * u));
    }
    // reference coefficients at u = 0
    Complex c0_12(Complex t) const { return stable(t * z, t, t * a1); }
    Complex c0_21(Complex t) const { return stable(t * v, t, t * a2); }
};

} // namespace

namespace detail {

double pole_bound(const ShintaniParams& p, int part) {
    const double ratio = p.a1 / p.a2;
    if (part == 1) return std::min(1.0, ratio);
    if (part == 2) return std::min(1.0, 1.0 / ratio);
    return std::min({1.0, ratio, 1.0 / ratio});
}

Complex double_contour(const ShintaniParams& ps, int part, bool subtract_c0,
                       const std::function<Complex(Complex)>& wt,
                       const std::function<Complex(Complex)>& wu, double decay,
                       int log_power, const ContourOptions& opts) {
    const ConeKernel K{ps.a1, ps.a2, ps.z(), ps.v()};
    const double pole_r = pole_bound(ps, part);
    const double ru = opts.u_radius > 0.0 ? opts.u_radius : 0.5 * pole_r;
    if (!(ru > 0.0) || !(ru < pole_r) || !(ru < 1.0))
        throw DomainError("double_contour: u radius must sit inside the first kernel pole");
    const double rt =
        opts.t_radius > 0.0 ? opts.t_radius : std::min(0.6, M_PI / (ps.a1 + ps.a2 + 2.0));

    contour::HankelContour cu;
    cu.radius = ru;
    cu.outer_limit = 1.0;
    cu.tolerance = 0.1 * opts.tolerance;

    contour::HankelContour ct;
    ct.radius = rt;
    ct.tolerance = opts.tolerance;
    ct.decay_rate = std::max(decay, 1e-3);
    ct.truncation =
        opts.tmax > 0.0
            ? opts.tmax
            : std::clamp(contour::suggested_truncation(ct.decay_rate, opts.tolerance,
                                                       10.0, log_power),
                         30.0, 700.0);

    auto outer = [&](Complex t, Complex lmt) -> Complex {
        auto fu = [&](Complex u, Complex lmu) -> Complex {
            const Complex logu = lmu + Complex(0.0, M_PI);
            Complex k = 0.0;
            if (part == 0 || part == 1) {
                k += K.g12(t, u);
                if (subtract_c0) k -= K.c0_12(t);
            }
            if (part == 0 || part == 2) {
                k += K.g21(t, u);
                if (subtract_c0) k -= K.c0_21(t);
            }
            return wu(logu) * k / u;
        };
        return wt(lmt) * contour::hankel_quadrature(fu, cu) / t;
    };
    return contour::hankel_quadrature(outer, ct);
}

double cone_decay(const ShintaniParams& ps, int part, double ru) {
    // On the outbound t-ray the kernels decay like e^{-(z'+u v')t} (first
    // ordering) and e^{-(v'+u z')t} (second), z' = x1+a1 x2, v' = x1+a2 x2;
    // minimise Re over the u-contour, |u| <= ru.
    const double zp = ps.x1 + ps.a1 * ps.x2;
    const double vp = ps.x1 + ps.a2 * ps.x2;
    double d = 0.0;
    if (part == 1)
        d = zp - ru * vp;
    else if (part == 2)
        d = vp - ru * zp;
    else
        d = std::min(zp - ru * vp, vp - ru * zp);
    return std::max(0.9 * d, 1e-3);
}

} // namespace detail

Complex zeta_contour(Complex s, const ShintaniParams& p, ContourOptions opts) {
    // At integer s >= 1 the representation degenerates to 0/0: Gamma(1-s)
    // poles kill the prefactor while u^s turns single-valued and the u-loop
    // vanishes. Integer s >= 2 lies in the sum's domain; s = 1 is the pole.
    const double srnd = std::round(s.real());
    if (std::abs(s.imag()) < 1e-9 && std::abs(s.real() - srnd) < 1e-9 && srnd >= 1.0) {
        if (srnd == 1.0)
            throw PoleError("zeta_contour: pole at s = 1", s);
        return zeta_direct(Complex(srnd, 0.0), p, 0.1 * opts.tolerance);
    }
    const Complex wheel = 1.0 + std::exp(kTwoPiI * s);
    if (std::abs(wheel) < 1e-8)
        throw PoleError("zeta_contour: prefactor vanishes at s in 1/2 + Z", s);
    const double ru =
        opts.u_radius > 0.0 ? opts.u_radius : 0.5 * detail::pole_bound(p, 0);
    const double decay = detail::cone_decay(p, 0, ru);
    if (opts.tmax <= 0.0) {
        double T = 40.0;
        for (int i = 0; i < 4; ++i)
            T = (std::log(10.0 / opts.tolerance) +
                 2.0 * std::max(0.0, s.real()) * std::log(T + 3.0)) /
                decay;
        opts.tmax = std::clamp(T + 10.0, 30.0, 700.0);
    }
    auto wt = [s](Complex lmt) { return std::exp(2.0 * s * lmt); };
    auto wu = [s](Complex logu) { return std::exp(s * logu); };
    const Complex raw = detail::double_contour(p, 0, false, wt, wu, decay, 0, opts);
    return raw / prefactor(s);
}

Complex I_pq_quadrature(int p, int q, const ShintaniParams& p_s, int part,
                        ContourOptions opts) {
    if (p < 0 || q < 0) throw DomainError("I_pq_quadrature: orders must be >= 0");
    const double ru =
        opts.u_radius > 0.0 ? opts.u_radius : 0.5 * detail::pole_bound(p_s, part);
    const double decay = detail::cone_decay(p_s, part, ru);
    auto wt = [p](Complex lmt) { return cpow(lmt, p); };
    auto wu = [q](Complex logu) { return cpow(logu, q); };
    return detail::double_contour(p_s, part, false, wt, wu, decay, p, opts);
}

double zeta_value0(const ShintaniParams& p) {
    return 0.25 * (1.0 / p.a1 + 1.0 / p.a2) * bernoulli_poly(2, p.x1) +
           bernoulli_poly(1, p.x1) * bernoulli_poly(1, p.x2) +
           0.25 * (p.a1 + p.a2) * bernoulli_poly(2, p.x2);
}

Rat zeta_value0_exact(const quadfield::QuadElem& eps, const Rat& x1, const Rat& x2) {
    if (!eps.is_totally_positive())
        throw DomainError("zeta_value0_exact: slopes must be totally positive");
    const Rat tr = eps.trace();
    const Rat nrm = eps.norm();
    using quadfield::bernoulli_poly_exact;
    return Rat(1, 4) * (tr / nrm) * bernoulli_poly_exact(2, x1) +
           bernoulli_poly_exact(1, x1) * bernoulli_poly_exact(1, x2) +
           Rat(1, 4) * tr * bernoulli_poly_exact(2, x2);
}

Complex contour_lemma_log1(int m, int r) {
    if (r < 0) throw DomainError("contour_lemma_log1: r must be >= 0");
    if (m == -1) return cpow(kTwoPiI, r + 1) / static_cast<double>(r + 1);
    Complex acc = 0.0;
    for (int k = 0; k < r; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        acc += sign * (factorial(r) / factorial(r - k)) * cpow(kTwoPiI, r - k) /
               ipow(static_cast<double>(m + 1), k + 1);
    }
    return acc;
}

double contour_lemma_polylog(int r, double a1, double a2) {
    if (r < 0) throw DomainError("contour_lemma_polylog: r must be >= 0");
    if (!(a1 > 0.0) || !(a2 > 0.0))
        throw DomainError("contour_lemma_polylog: coefficients must be positive");
    const double sign = (r % 2 == 0) ? -1.0 : 1.0; // (-1)^{r+1}
    return sign * factorial(r) * polylog(r + 1, -a2 / a1) / a2;
}

} // namespace qtheta::shintani
