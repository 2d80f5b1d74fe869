#include <doctest.h>

#include <cmath>
#include <complex>

#include "qtheta/contour.hpp"

using qtheta::contour::Complex;
using qtheta::contour::HankelContour;
using qtheta::contour::hankel_quadrature;

namespace {

const double kPi = M_PI;
const Complex kTwoPiI(0.0, 2.0 * kPi);

Complex cpow_int(Complex base, int n) {
    Complex r = 1.0;
    for (int i = 0; i < std::abs(n); ++i) r *= base;
    return n >= 0 ? r : 1.0 / r;
}

// Closed form for the loop integral of u^m log^q u over the keyhole from 1
// back to 1, with log u = log(-u) + i pi (arg u runs 0 -> 2 pi):
//   m = -1:  (2 pi i)^{q+1} / (q+1)
//   else:    sum_{j=0}^{q-1} (-1)^j q!/(q-j)! (2 pi i)^{q-j} / (m+1)^{j+1}
Complex loop_log_power(int q, int m) {
    if (m == -1) return cpow_int(kTwoPiI, q + 1) / static_cast<double>(q + 1);
    Complex acc = 0.0;
    double coef = 1.0; // q!/(q-j)! with alternating sign
    for (int j = 0; j <= q - 1; ++j) {
        if (j > 0) coef *= -(q - j + 1);
        acc += coef * cpow_int(kTwoPiI, q - j) / cpow_int(Complex(m + 1, 0.0), j + 1);
    }
    return acc;
}

Complex eval_loop(int q, int m, double radius) {
    HankelContour c;
    c.radius = radius;
    c.outer_limit = 1.0;
    c.tolerance = 1e-12;
    auto f = [q, m](Complex u, Complex lmu) -> Complex {
        const Complex lu = lmu + Complex(0.0, kPi);
        Complex lp = 1.0;
        for (int j = 0; j < q; ++j) lp *= lu;
        return lp * cpow_int(u, m);
    };
    return hankel_quadrature(f, c);
}

} // namespace

TEST_CASE("residue of 1/t") {
    HankelContour c;
    c.radius = 0.4;
    c.outer_limit = 3.0;
    c.tolerance = 1e-12;
    auto f = [](Complex t, Complex) -> Complex { return 1.0 / t; };
    const Complex v = hankel_quadrature(f, c);
    CHECK(std::abs(v - kTwoPiI) < 1e-11);
}

TEST_CASE("branch-independent integrands cancel on the rays") {
    HankelContour c;
    c.radius = 0.3;
    c.outer_limit = 20.0;
    c.tolerance = 1e-12;
    for (double z : {0.5, 1.7}) {
        auto f = [z](Complex t, Complex) -> Complex { return std::exp(-z * t) / t; };
        CHECK(std::abs(hankel_quadrature(f, c) - kTwoPiI) < 1e-10);
    }
}

TEST_CASE("log-power loop integrals match closed forms") {
    for (int m = -2; m <= 2; ++m) {
        for (int q = 0; q <= 3; ++q) {
            const Complex got = eval_loop(q, m, 0.35);
            const Complex want = loop_log_power(q, m);
            CAPTURE(m);
            CAPTURE(q);
            CHECK(std::abs(got - want) < 1e-10);
        }
    }
}

TEST_CASE("loop integrals are radius independent") {
    for (double r : {0.15, 0.5, 0.8}) {
        CHECK(std::abs(eval_loop(2, -1, r) - loop_log_power(2, -1)) < 1e-10);
        CHECK(std::abs(eval_loop(3, 1, r) - loop_log_power(3, 1)) < 1e-10);
    }
}

TEST_CASE("pole crossing the circle radius is rejected by the caller guard") {
    // 1/(1 - e^{-t}) has poles at 2 pi i k; pole_safe_radius keeps the circle
    // below half the first pole modulus.
    const double r = qtheta::contour::pole_safe_radius(1.0, 2.0);
    CHECK(r == doctest::Approx(kPi / 2.0));
    CHECK_THROWS_AS(qtheta::contour::pole_safe_radius(-1.0, 2.0), qtheta::DomainError);
}

TEST_CASE("tail certification rejects slow decay") {
    HankelContour c;
    c.radius = 0.4;
    c.truncation = 30.0;
    c.tolerance = 1e-12;
    c.decay_rate = 1.0;
    // The branch jump of log(-t)/t^2 decays only algebraically.
    auto f = [](Complex t, Complex lmt) -> Complex { return lmt / (t * t); };
    CHECK_THROWS_AS(hankel_quadrature(f, c), qtheta::TruncationError);
}

TEST_CASE("log(-t) jump integral") {
    // (1/2 pi i) loop of log(-t)/t over I(r, 1) = log at the two endpoints'
    // mean: closed form from the m=-1, q=1 case.
    const Complex got = eval_loop(0, -1, 0.25); // loop of 1/u, log u absent
    CHECK(std::abs(got - kTwoPiI) < 1e-11);
}
