#include "qtheta/barnes.hpp"

#include <cmath>

namespace qtheta::barnes {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// B_{2k}, k = 1..15.
constexpr double kBern2k[15] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
    8553103.0 / 6.0, -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};

double binom(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r *= static_cast<double>(n - k + j) / j;
    return r;
}

} // namespace

GammaDerivTable::GammaDerivTable(int m) {
    if (m < 0 || m > 40) throw DomainError("GammaDerivTable: order out of range");
    // log Gamma(1+x) = -gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k
    std::vector<double> a(static_cast<std::size_t>(m) + 1, 0.0);
    if (m >= 1) a[1] = -kEulerGamma;
    for (int k = 2; k <= m; ++k)
        a[static_cast<std::size_t>(k)] =
            ((k % 2 == 0) ? 1.0 : -1.0) * std::riemann_zeta(static_cast<double>(k)) / k;
    // b = exp(a) as a power series: n b_n = sum_{k=1}^n k a_k b_{n-k}
    std::vector<double> b(static_cast<std::size_t>(m) + 1, 0.0);
    b[0] = 1.0;
    for (int n = 1; n <= m; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k)
            acc += k * a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
        b[static_cast<std::size_t>(n)] = acc / n;
    }
    vals_.resize(static_cast<std::size_t>(m) + 1);
    double fact = 1.0;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) fact *= j;
        vals_[static_cast<std::size_t>(j)] = fact * b[static_cast<std::size_t>(j)];
    }
}

const GammaDerivTable& gamma_derivs() {
    static const GammaDerivTable table(12);
    return table;
}

Complex hurwitz_zeta(Complex s, double x, double omega) {
    if (!(x > 0.0) || !(omega > 0.0))
        throw DomainError("hurwitz_zeta: x and omega must be positive");
    if (std::abs(s - 1.0) < 1e-14)
        throw PoleError("hurwitz_zeta: pole at s = 1", Complex(1.0, 0.0));
    // sum (x + n omega)^{-s} = omega^{-s} zeta_H(s, x/omega)
    const double a0 = x / omega;
    const Complex scale = std::exp(-s * std::log(omega));

    const int N = std::max(0, static_cast<int>(std::ceil(
                                  std::max(18.0, 1.6 * std::abs(s)) - a0)));
    Complex head = 0.0;
    for (int n = 0; n < N; ++n) head += std::exp(-s * std::log(a0 + n));
    const double A = a0 + N;
    const Complex la = std::log(Complex(A, 0.0));
    Complex tail = std::exp((1.0 - s) * la) / (s - 1.0) + 0.5 * std::exp(-s * la);
    // sum_k B_{2k}/(2k)! * (s)_{2k-1} * A^{-s-2k+1}
    Complex poch = s;              // (s)_1
    double fact = 2.0;             // (2k)!
    for (int k = 1; k <= 12; ++k) {
        if (k > 1) {
            poch *= (s + static_cast<double>(2 * k - 3)) * (s + static_cast<double>(2 * k - 2));
            fact *= (2 * k - 1) * (2 * k);
        }
        // No early exit: under complex-step differentiation every term is
        // O(|s|) and a magnitude test would drop the series that carries the
        // derivative. Twelve terms always suffice at a + N >= 18.
        tail += kBern2k[k - 1] / fact * poch *
                std::exp(-(s + static_cast<double>(2 * k - 1)) * la);
    }
    return scale * (head + tail);
}

namespace {

// (1/2 pi i) * Hankel integral of e^{-zt} log(-t)^r / (D(t) t) with
// D(t) = prod_i (1 - e^{-omega_i t}). These are the raw log-power moments;
// the zeta s-derivatives are binomial combinations of them (see log_G2_r).
Complex log_moment(int r, Complex z, const std::vector<double>& omegas, double tol,
                   double radius_override) {
    if (r < 0) throw DomainError("log moment: order must be >= 0");
    if (!(z.real() > 0.0))
        throw DomainError("log moment: need Re z > 0 for ray convergence");
    double wmax = 0.0;
    for (double w : omegas) {
        if (!(w > 0.0)) throw DomainError("log moment: periods must be positive");
        wmax = std::max(wmax, w);
    }
    contour::HankelContour c;
    c.radius = (radius_override > 0.0) ? radius_override : 0.8 * M_PI / wmax;
    c.tolerance = tol;
    c.decay_rate = z.real();
    c.truncation = contour::suggested_truncation(z.real(), tol, 10.0, r);

    auto f = [&](Complex t, Complex lmt) -> Complex {
        Complex den = t;
        for (double w : omegas) den *= (1.0 - std::exp(-w * t));
        Complex lp = 1.0;
        for (int j = 0; j < r; ++j) lp *= lmt;
        return std::exp(-z * t) * lp / den;
    };
    const Complex raw = contour::hankel_quadrature(f, c);
    return raw / Complex(0.0, 2.0 * M_PI);
}

Complex moments_to_sderiv(int r, const std::vector<Complex>& lg) {
    // zeta^{(r)}(0) = sum_m C(r,m) (-1)^m Gamma^{(m)}(1) lg[r-m]
    const GammaDerivTable& gd = gamma_derivs();
    Complex acc = 0.0;
    for (int m = 0; m <= r; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        acc += binom(r, m) * sign * gd(m) * lg[static_cast<std::size_t>(r - m)];
    }
    return acc;
}

} // namespace

Complex log_G1_r(int r, Complex z, double omega, double tol) {
    return log_moment(r, z, {omega}, tol, 0.0);
}

Complex log_G2_r(int r, Complex z, const PeriodPair& w, double tol,
                 double radius_override) {
    return log_moment(r, z, {w.w1, w.w2}, tol, radius_override);
}

Complex zeta1_sderiv(int r, Complex z, double omega, double tol) {
    std::vector<Complex> lg(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j)
        lg[static_cast<std::size_t>(j)] = log_G1_r(j, z, omega, tol);
    return moments_to_sderiv(r, lg);
}

Complex zeta2_sderiv(int r, Complex z, const PeriodPair& w, double tol) {
    std::vector<Complex> lg(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j)
        lg[static_cast<std::size_t>(j)] = log_G2_r(j, z, w, tol);
    return moments_to_sderiv(r, lg);
}

Complex zeta_sderiv(int level, int r, Complex z, const PeriodPair& w) {
    if (level == 1) return zeta1_sderiv(r, z, w.w1);
    if (level == 2) return zeta2_sderiv(r, z, w);
    throw DomainError("zeta_sderiv: level must be 1 or 2");
}

Complex log_gamma1_r(int r, Complex z, double omega) { return zeta1_sderiv(r, z, omega); }

Complex log_gamma2_r(int r, Complex z, const PeriodPair& w) { return zeta2_sderiv(r, z, w); }

Complex double_sine(Complex z, const PeriodPair& w) {
    const double tot = w.w1 + w.w2;
    // Shift into the strip 0 < Re z < w1 + w2 with
    //   S_2(z + w1) = S_2(z) / (2 sin(pi z / w2)),
    //   S_2(z - w1) = S_2(z) * 2 sin(pi (z - w1) / w2).
    Complex factor_log = 0.0;
    double sign = 1.0;
    Complex zz = z;
    int guard = 0;
    while (zz.real() >= tot) {
        zz -= w.w1;
        const Complex s = 2.0 * std::sin(M_PI * zz / w.w2);
        if (std::abs(s) < 1e-13)
            throw PoleError("double_sine: argument hits a pole or zero", z);
        factor_log -= std::log(s);
        if (++guard > 4000) throw DomainError("double_sine: argument too far from strip");
    }
    while (zz.real() <= 0.0) {
        const Complex s = 2.0 * std::sin(M_PI * zz / w.w2);
        if (std::abs(s) < 1e-13)
            throw PoleError("double_sine: argument hits a pole or zero", z);
        factor_log += std::log(s);
        zz += w.w1;
        if (++guard > 4000) throw DomainError("double_sine: argument too far from strip");
    }
    (void)sign;
    const Complex num = log_gamma2_r(1, tot - zz, w);
    const Complex den = log_gamma2_r(1, zz, w);
    return std::exp(num - den + factor_log);
}

} // namespace qtheta::barnes
