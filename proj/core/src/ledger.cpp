#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qtheta/barnes.hpp"
#include "qtheta/shintani.hpp"
#include "shintani_detail.hpp"

namespace qtheta::shintani {

namespace {

const Complex kTwoPiI(0.0, 2.0 * M_PI);

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double binom(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Complex cpow(Complex b, int e) {
    Complex r = 1.0;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

std::string fmt_key(const char* tag, int r, double x, double y) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s[%d;%.12g;%.12g]", tag, r, x, y);
    return buf;
}

// sum_{j<q} C(q,j) (2 pi i)^{q-j} * (loop-limit polylog integral of order j)
Complex polylog_mix(int q, double alpha, double beta) {
    Complex acc = 0.0;
    for (int j = 0; j < q; ++j)
        acc += binom(q, j) * cpow(kTwoPiI, q - j) * contour_lemma_polylog(j, alpha, beta);
    return acc;
}

} // namespace

// ---- DerivLedger -----------------------------------------------------------

Complex DerivLedger::reconstruct() const {
    Complex acc = 0.0;
    for (const auto& t : terms) acc += t.coeff * t.generator;
    return acc;
}

double DerivLedger::residual() const {
    return std::abs(value - reconstruct()) / std::max(1.0, std::abs(value));
}

int DerivLedger::max_pi_power() const {
    int m = 0;
    for (const auto& t : terms) m = std::max(m, t.pi_power);
    return m;
}

void DerivLedger::add(GenKind kind, std::string key, Complex coeff, Complex gen,
                      int pi_power, bool fallback) {
    terms.push_back({kind, std::move(key), coeff, gen, pi_power, fallback});
}

void DerivLedger::merge(const DerivLedger& other, Complex scale, int extra_pi_power) {
    for (const auto& t : other.terms)
        terms.push_back({t.kind, t.key, scale * t.coeff, t.generator,
                         t.pi_power + extra_pi_power, t.region_fallback});
}

void DerivLedger::normalize() {
    std::vector<LedgerTerm> out;
    for (const auto& t : terms) {
        bool merged = false;
        for (auto& o : out) {
            if (o.kind == t.kind && o.key == t.key &&
                std::abs(o.generator - t.generator) <= 1e-9 * (1.0 + std::abs(o.generator))) {
                o.coeff += t.coeff;
                o.pi_power = std::max(o.pi_power, t.pi_power);
                o.region_fallback = o.region_fallback || t.region_fallback;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(t);
    }
    const double floor_mag = 1e-15 * (1.0 + std::abs(value));
    std::erase_if(out, [&](const LedgerTerm& t) {
        return std::abs(t.coeff) * (1.0 + std::abs(t.generator)) < floor_mag;
    });
    std::sort(out.begin(), out.end(), [](const LedgerTerm& a, const LedgerTerm& b) {
        return a.key < b.key;
    });
    terms = std::move(out);
}

// ---- A_pq / B_pq -----------------------------------------------------------

DerivLedger A_pq(int p, int q, const ShintaniParams& ps, ContourOptions opts) {
    if (p < 0 || q < 0) throw DomainError("A_pq: orders must be >= 0");
    DerivLedger L;
    const double zp = ps.x1 + ps.a1 * ps.x2; // reflected first-ray argument
    const barnes::PeriodPair w(1.0, ps.a1);

    if (p == 0) {
        // residue route: the t-ray contributions cancel and the t-loop reduces
        // to Bernoulli data, with the u-integrals in closed polylog form
        const Complex lam = cpow(kTwoPiI, q + 1) / static_cast<double>(q + 1);
        const Complex c1 =
            kTwoPiI * 0.5 *
            (lam / ps.a1 + (ps.a1 - ps.a2) / ps.a1 * polylog_mix(q, ps.a1, ps.a2));
        const Complex c2 = kTwoPiI * lam;
        const Complex c3 =
            kTwoPiI * 0.5 * (ps.a1 * lam + (ps.a2 - ps.a1) * polylog_mix(q, 1.0, 1.0));
        L.add(GenKind::BernB2x1, fmt_key("B2x1", q, ps.a1, ps.a2), c1,
              bernoulli_poly(2, ps.x1), q + 2);
        L.add(GenKind::BernB1B1, fmt_key("B1B1", q, ps.a1, ps.a2), c2,
              bernoulli_poly(1, ps.x1) * bernoulli_poly(1, ps.x2), q + 2);
        L.add(GenKind::BernB2x2, fmt_key("B2x2", q, ps.a1, ps.a2), c3,
              bernoulli_poly(2, ps.x2), q + 2);
    } else if (q == 0) {
        const Complex g = barnes::log_G2_r(p, zp, w, 0.1 * opts.tolerance);
        L.add(GenKind::LogG2, fmt_key("logG2", p, zp, ps.a1), cpow(kTwoPiI, 2), g, 2);
    } else {
        const Complex g = barnes::log_G2_r(p, zp, w, 0.1 * opts.tolerance);
        L.add(GenKind::LogG2, fmt_key("logG2", p, zp, ps.a1),
              cpow(kTwoPiI, q + 2) / static_cast<double>(q + 1), g, q + 2);
        // remaining u-dependent kernel part, integrated numerically
        auto wt = [p](Complex lmt) { return cpow(lmt, p); };
        auto wu = [q](Complex logu) { return cpow(logu, q); };
        const double decay = 0.45 * zp;
        const Complex hpart =
            detail::double_contour(ps, 1, true, wt, wu, decay, p + q, opts);
        const Complex coeff = -cpow(kTwoPiI, q + 1);
        L.add(GenKind::LogH, fmt_key("logH", p * 10 + q, zp, ps.a2), coeff,
              hpart / coeff, q + 1, true);
    }
    L.value = L.reconstruct();
    return L;
}

DerivLedger B_pq(int p, int q, const ShintaniParams& ps, ContourOptions opts) {
    return A_pq(p, q, ps.swapped(), opts);
}

// ---- derivative pipeline ---------------------------------------------------

DerivLedger zeta_deriv_m(int m, const ShintaniParams& ps, ContourOptions opts) {
    if (m < 0 || m > 6) throw DomainError("zeta_deriv_m: order must be in 0..6");
    const Complex P0 = prefactor_deriv0(0);
    std::vector<DerivLedger> zl;
    for (int mm = 0; mm <= m; ++mm) {
        DerivLedger Im;
        Complex iv = 0.0;
        for (int p = 0; p <= mm; ++p) {
            const int q = mm - p;
            const DerivLedger a = A_pq(p, q, ps, opts);
            const DerivLedger b = B_pq(p, q, ps, opts);
            const double c = binom(mm, p) * std::pow(2.0, p);
            Im.merge(a, c);
            Im.merge(b, c);
            iv += c * (a.value + b.value);
        }
        Im.value = iv;

        DerivLedger Lm;
        Lm.merge(Im, 1.0 / P0, -2);
        Complex val = Im.value;
        for (int b = 0; b < mm; ++b) {
            const Complex coef = binom(mm, b) * prefactor_deriv0(mm - b);
            Lm.merge(zl[b], -coef / P0, mm - b);
            val -= coef * zl[b].value;
        }
        Lm.value = val / P0;
        Lm.normalize();
        zl.push_back(std::move(Lm));
    }
    return zl.back();
}

DerivLedger zeta_deriv0(const ShintaniParams& ps, ContourOptions opts) {
    const DerivLedger pipeline = zeta_deriv_m(1, ps, opts);
    DerivLedger L;
    L.value = pipeline.value;
    const double z1 = ps.x1 + ps.a1 * ps.x2;
    const double z2 = ps.x1 + ps.a2 * ps.x2;
    const Complex g1 = barnes::log_gamma2_r(1, z1, {1.0, ps.a1});
    const Complex g2 = barnes::log_gamma2_r(1, z2, {1.0, ps.a2});
    L.add(GenKind::LogG2, fmt_key("logGamma2", 1, z1, ps.a1), 1.0, g1, 0);
    L.add(GenKind::LogG2, fmt_key("logGamma2", 1, z2, ps.a2), 1.0, g2, 0);
    const double corr = (ps.a1 - ps.a2) / (4.0 * ps.a1 * ps.a2) * bernoulli_poly(2, ps.x1);
    L.add(GenKind::LogNorm, "log-slope-ratio", corr, std::log(ps.a2 / ps.a1), 0);
    L.add(GenKind::LogNorm, "rho", 1.0, L.value - L.reconstruct(), 0);
    return L;
}

} // namespace qtheta::shintani
