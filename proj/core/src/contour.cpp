#include "qtheta/contour.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qtheta::contour {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    Complex value;
    double error;
};

PanelResult gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fc = f(c);
    if (!std::isfinite(fc.real()) || !std::isfinite(fc.imag()))
        throw EvaluationError("integrand not finite at t = " + std::to_string(c));
    Complex resk = kWgk[7] * fc;
    Complex resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        Complex f1 = f(c - x), f2 = f(c + x);
        if (!std::isfinite(std::abs(f1)) || !std::isfinite(std::abs(f2)))
            throw EvaluationError("integrand not finite inside panel");
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    return {resk * h, std::abs(resk - resg) * std::abs(h)};
}

Complex adaptive(const std::function<Complex(double)>& f, double a, double b,
                 double tol, int max_depth = 48) {
    struct Interval {
        double a, b, err;
        Complex val;
        int depth;
    };
    PanelResult top = gk15(f, a, b);
    std::vector<Interval> work{{a, b, top.error, top.value, 0}};
    Complex total = top.value;
    double total_err = top.error;
    while (total_err > tol) {
        // split the worst interval
        auto worst =
            std::max_element(work.begin(), work.end(),
                             [](const Interval& u, const Interval& v) { return u.err < v.err; });
        if (worst->depth >= max_depth)
            throw TruncationError("adaptive quadrature failed to converge");
        Interval iv = *worst;
        work.erase(worst);
        const double mid = 0.5 * (iv.a + iv.b);
        PanelResult left = gk15(f, iv.a, mid);
        PanelResult right = gk15(f, mid, iv.b);
        total += left.value + right.value - iv.val;
        total_err += left.error + right.error - iv.err;
        work.push_back({iv.a, mid, left.error, left.value, iv.depth + 1});
        work.push_back({mid, iv.b, right.error, right.value, iv.depth + 1});
        if (work.size() > 20000)
            throw TruncationError("adaptive quadrature: too many panels");
    }
    return total;
}

} // namespace

double pole_safe_radius(double omega1, double omega2) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw DomainError("pole_safe_radius: periods must be positive");
    return M_PI / std::max(omega1, omega2);
}

Complex integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                     double tol) {
    return adaptive(f, a, b, tol);
}

double suggested_truncation(double decay, double tol, double bound, int log_power) {
    if (!(decay > 0.0)) throw DomainError("suggested_truncation: decay must be positive");
    double T = 10.0;
    for (int i = 0; i < 60; ++i) {
        double lhs = bound * std::exp(-decay * T) *
                     std::pow(std::log(T) + M_PI, log_power);
        if (lhs < tol / 10.0) break;
        T *= 1.3;
    }
    return T;
}

Complex hankel_quadrature(const Integrand& f, const HankelContour& c) {
    if (!(c.radius > 0.0)) throw DomainError("hankel_quadrature: radius must be positive");
    const double R = c.effective_outer();
    if (R <= c.radius)
        throw DomainError("hankel_quadrature: outer limit inside the circle");

    // Outbound minus inbound ray, integrated together so that the
    // single-valued part cancels exactly.
    auto ray = [&f](double t) -> Complex {
        const Complex lt = std::log(t);
        return f(Complex(t, 0.0), lt + Complex(0.0, M_PI)) -
               f(Complex(t, 0.0), lt - Complex(0.0, M_PI));
    };
    Complex rays = adaptive(ray, c.radius, R, 0.5 * c.tolerance);

    if (std::isinf(c.outer_limit)) {
        // Certify the discarded tail with the caller-supplied decay rate.
        const double at_T = std::abs(ray(R));
        if (at_T / c.decay_rate > c.tolerance)
            throw TruncationError("hankel_quadrature: tail beyond T_max not below tolerance");
    }

    auto circle = [&f, &c](double theta) -> Complex {
        const Complex t = c.radius * std::exp(Complex(0.0, theta + M_PI));
        const Complex lt(std::log(c.radius), theta);
        return f(t, lt) * Complex(0.0, 1.0) * t; // dt = i t dtheta
    };
    // Uniform composite panels on the circle, doubled until stable.
    Complex circ_prev, circ;
    int panels = 8;
    for (int pass = 0;; ++pass, panels *= 2) {
        Complex acc = 0.0;
        const double h = 2.0 * M_PI / panels;
        for (int i = 0; i < panels; ++i)
            acc += gk15(circle, -M_PI + i * h, -M_PI + (i + 1) * h).value;
        circ_prev = circ;
        circ = acc;
        if (pass > 0 && std::abs(circ - circ_prev) < 0.5 * c.tolerance) break;
        if (panels > 4096)
            throw TruncationError("hankel_quadrature: circle leg failed to converge");
    }

    return rays + circ;
}

} // namespace qtheta::contour
