#include "qtheta/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qtheta/barnes.hpp"

namespace qtheta::lfun {

namespace {

using quadfield::Rat;
using shintani::GenKind;
using shintani::ShintaniParams;

double to_d(const Rat& r) { return r.convert_to<double>(); }

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

double binom(int n, int k) {
    return factorial(n) / (factorial(k) * factorial(n - k));
}

struct Slopes {
    double a1, a2;
};

Slopes slopes(const ClassData& data) {
    const quadfield::QuadElem eps = data.unit();
    return {eps.to_double(), eps.conj_to_double()};
}

ShintaniParams cone_params(const Slopes& sl, const std::pair<Rat, Rat>& x) {
    return ShintaniParams(sl.a1, sl.a2, to_d(x.first), to_d(x.second));
}

void merge_tagged(DerivLedger& into, const DerivLedger& from, Complex scale,
                  const std::string& suffix) {
    for (auto t : from.terms) {
        t.coeff *= scale;
        t.key += suffix;
        into.terms.push_back(std::move(t));
    }
}

// sum over R(g) of d^m/ds^m [N^{-s} zeta(s,...,x)] at s = 0
DerivLedger class_ledger(int m, const ConeRegion& region, double logN,
                         const Slopes& sl, const ContourOptions& opts) {
    DerivLedger L;
    Complex val = 0.0;
    for (const auto& x : region.points) {
        const ShintaniParams ps = cone_params(sl, x);
        for (int k = m; k >= 0; --k) {
            const int j = m - k;
            if (j > 0 && logN == 0.0) break;
            const Complex c = binom(m, k) * std::pow(-logN, j);
            const DerivLedger zk = shintani::zeta_deriv_m(k, ps, opts);
            const std::string suffix =
                j > 0 ? "|logN^" + std::to_string(j) : std::string{};
            merge_tagged(L, zk, c, suffix);
            val += c * zk.value;
        }
    }
    L.value = val;
    return L;
}

// closed first-derivative trio: two log Gamma2 values plus slope correction
Complex closed_three(double a1, double a2, double x1, double x2) {
    const Complex g1 = barnes::log_gamma2_r(1, x1 + a1 * x2, {1.0, a1});
    const Complex g2 = barnes::log_gamma2_r(1, x1 + a2 * x2, {1.0, a2});
    const double corr = (a1 - a2) / (4.0 * a1 * a2) * std::log(a2 / a1) *
                        shintani::bernoulli_poly(2, x1);
    return g1 + g2 + corr;
}

bool is_bernoulli(GenKind k) {
    return k == GenKind::BernB2x1 || k == GenKind::BernB1B1 || k == GenKind::BernB2x2;
}

} // namespace

PartialLValue partial_L(Complex s, const std::string& g, const ClassData& data,
                        ContourOptions opts) {
    PartialLValue out;
    out.g = g;
    out.s = s;
    out.region = quadfield::cone_region(g, data);
    if (out.region.points.empty()) {
        out.empty_region = true;
        out.value = 0.0;
        return out;
    }
    const Slopes sl = slopes(data);
    const double N = to_d(data.norm_for(g));
    Complex acc = 0.0;
    for (const auto& x : out.region.points)
        acc += shintani::zeta_contour(s, cone_params(sl, x), opts);
    out.value = std::exp(-s * std::log(N)) * acc;
    return out;
}

Complex log_T_invariant(const std::string& g, const ClassData& data,
                        ContourOptions opts) {
    const ConeRegion region = quadfield::cone_region(g, data);
    const Slopes sl = slopes(data);
    const double logN = std::log(to_d(data.norm_for(g)));
    Complex acc = 0.0;
    for (const auto& x : region.points) {
        const ShintaniParams ps = cone_params(sl, x);
        acc += shintani::zeta_deriv_m(1, ps, opts).value -
               logN * shintani::zeta_value0(ps);
    }
    return acc;
}

Complex T_invariant(const std::string& g, const ClassData& data, ContourOptions opts) {
    return std::exp(log_T_invariant(g, data, opts));
}

DerivLedger L_chi_deriv(int m, const quadfield::Character& chi, const ClassData& data,
                        ContourOptions opts) {
    if (m < 0 || m > 4) throw DomainError("L_chi_deriv: order must be in 0..4");
    const Slopes sl = slopes(data);
    DerivLedger L;
    Complex val = 0.0;
    for (std::size_t i = 0; i < data.elements.size(); ++i) {
        const std::string& g = data.elements[i];
        const Complex c = chi.values.at(i);
        const ConeRegion region = quadfield::cone_region(g, data);
        const double logN = std::log(to_d(data.norm_for(g)));
        const DerivLedger cg = class_ledger(m, region, logN, sl, opts);
        const std::string suffix =
            std::abs(c - 1.0) > 1e-14 ? "|chi(" + g + ")" : "|" + g;
        merge_tagged(L, cg, c, suffix);
        val += c * cg.value;
    }
    L.value = val;
    L.normalize();
    return L;
}

XInvariant X_invariant(const std::string& g, const ClassData& data,
                       ContourOptions opts) {
    if (!data.nu) throw DataError("X_invariant: class data provides no nu");
    XInvariant out;
    out.g = g;
    out.nu_g = data.mul(data.nu_class, g);
    out.primary =
        std::exp(log_T_invariant(g, data, opts) - log_T_invariant(out.nu_g, data, opts));
    const ConeRegion region = quadfield::cone_region(g, data);
    const Slopes sl = slopes(data);
    Complex prod = 1.0;
    for (const auto& x : region.points) {
        const double x1 = to_d(x.first), x2 = to_d(x.second);
        const Complex s1 = barnes::double_sine(x1 + sl.a1 * x2, {1.0, sl.a1});
        const Complex s2 = barnes::double_sine(x1 + sl.a2 * x2, {1.0, sl.a2});
        prod /= s1 * s2;
    }
    out.secondary = prod;
    out.difference = std::abs(out.primary - out.secondary) / std::abs(out.primary);
    return out;
}

DerivLedger L_diff_m(int m, const std::string& g, const ClassData& data,
                     ContourOptions opts) {
    if (m < 0 || m > 4) throw DomainError("L_diff_m: order must be in 0..4");
    if (!data.nu) throw DataError("L_diff_m: class data provides no nu");
    const std::string nug = data.mul(data.nu_class, g);
    const ConeRegion rg = quadfield::cone_region(g, data);
    const ConeRegion rh = quadfield::cone_region(nug, data);
    const Slopes sl = slopes(data);

    // exact rational cancellation of the Bernoulli generators first
    Rat b2x1(0), b1b1(0), b2x2(0);
    for (const auto& x : rg.points) {
        b2x1 += quadfield::bernoulli_poly_exact(2, x.first);
        b1b1 += quadfield::bernoulli_poly_exact(1, x.first) *
                quadfield::bernoulli_poly_exact(1, x.second);
        b2x2 += quadfield::bernoulli_poly_exact(2, x.second);
    }
    for (const auto& x : rh.points) {
        b2x1 -= quadfield::bernoulli_poly_exact(2, x.first);
        b1b1 -= quadfield::bernoulli_poly_exact(1, x.first) *
                quadfield::bernoulli_poly_exact(1, x.second);
        b2x2 -= quadfield::bernoulli_poly_exact(2, x.second);
    }
    if (!(b2x1 == 0 && b1b1 == 0 && b2x2 == 0))
        throw ConsistencyError(
            "L_diff_m: Bernoulli generators do not cancel between the class regions");

    const DerivLedger Lg =
        class_ledger(m, rg, std::log(to_d(data.norm_for(g))), sl, opts);
    const DerivLedger Lh =
        class_ledger(m, rh, std::log(to_d(data.norm_for(nug))), sl, opts);
    DerivLedger out;
    out.merge(Lg, 1.0);
    out.merge(Lh, -1.0);
    out.value = Lg.value - Lh.value;
    out.normalize();
    for (const auto& t : out.terms)
        if (is_bernoulli(t.kind) &&
            std::abs(t.coeff * t.generator) > 1e-8 * (1.0 + std::abs(out.value)))
            throw ConsistencyError("L_diff_m: residual Bernoulli term above tolerance");
    std::erase_if(out.terms, [](const auto& t) { return is_bernoulli(t.kind); });
    return out;
}

std::string PolyHit::str() const {
    std::string s;
    char buf[48];
    for (int k = degree; k >= 0; --k) {
        const long c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        const long a = std::labs(c);
        if (k == 0 || a != 1) {
            std::snprintf(buf, sizeof(buf), "%ld", a);
            s += buf;
        }
        if (k >= 1) s += "x";
        if (k >= 2) {
            std::snprintf(buf, sizeof(buf), "^%d", k);
            s += buf;
        }
    }
    return s;
}

std::optional<PolyHit> recognize_algebraic(double value, int deg_bound,
                                           long height_bound) {
    if (!std::isfinite(value)) throw DomainError("recognize_algebraic: value not finite");
    if (deg_bound < 1 || deg_bound > 4)
        throw DomainError("recognize_algebraic: degree bound must be in 1..4");
    if (height_bound < 1 || height_bound > 50)
        throw DomainError("recognize_algebraic: height bound must be in 1..50");
    const long H = height_bound;
    double vp[5] = {1.0, value, value * value, 0.0, 0.0};
    vp[3] = vp[2] * value;
    vp[4] = vp[3] * value;
    for (int d = 1; d <= deg_bound; ++d) {
        std::optional<PolyHit> best;
        // leading coefficient positive without loss of generality
        std::vector<long> c(static_cast<std::size_t>(d) + 1, 0);
        auto try_tail = [&](double partial, auto&& self, int idx) -> void {
            if (idx == 0) {
                // best integer constant term, coarse filter first
                const double c0 = -std::round(partial);
                if (std::abs(c0) > static_cast<double>(H)) return;
                if (std::abs(partial + c0) >= 1e-6) return;
                c[0] = static_cast<long>(c0);
                // re-verify in extended precision; a genuine algebraic double
                // leaves a residual ~1e-13 at these degrees while lattice
                // coincidences bottom out near 1e-7
                long double p = 0.0L, norm2 = 0.0L;
                long height = 0;
                for (int k = d; k >= 0; --k) {
                    const long ck = c[static_cast<std::size_t>(k)];
                    p = p * static_cast<long double>(value) +
                        static_cast<long double>(ck);
                    norm2 += static_cast<long double>(ck) * static_cast<long double>(ck);
                    height = std::max(height, std::labs(ck));
                }
                if (fabsl(p) >= 1e-11L * sqrtl(norm2)) return;
                if (!best || height < best->height) {
                    best = PolyHit{c, d, height};
                }
                return;
            }
            for (long k = -H; k <= H; ++k) {
                c[static_cast<std::size_t>(idx)] = k;
                self(partial + static_cast<double>(k) * vp[idx], self, idx - 1);
            }
        };
        for (long lead = 1; lead <= H; ++lead) {
            c[static_cast<std::size_t>(d)] = lead;
            try_tail(static_cast<double>(lead) * vp[d], try_tail, d - 1);
        }
        if (best) return best;
    }
    return std::nullopt;
}

RhoCalibration calibrate_rho(double a1, double a2, double x1, double x2,
                             ContourOptions opts) {
    RhoCalibration cal;
    cal.a1 = a1;
    cal.a2 = a2;
    cal.ref_x1 = x1;
    cal.ref_x2 = x2;
    const ShintaniParams ps(a1, a2, x1, x2);
    const Complex numeric = shintani::zeta_deriv_m(1, ps, opts).value;
    cal.log_rho = closed_three(a1, a2, x1, x2) - numeric;
    return cal;
}

Complex zeta_deriv0_closed(const RhoCalibration& cal, double x1, double x2) {
    return closed_three(cal.a1, cal.a2, x1, x2) - cal.log_rho;
}

} // namespace qtheta::lfun
