#include "run.hpp"

#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numbers>

#include "qtheta/barnes.hpp"
#include "qtheta/contour.hpp"
#include "qtheta/lfun.hpp"
#include "qtheta/quadfield.hpp"
#include "qtheta/shintani.hpp"
#include "qtheta/theta.hpp"
#include "report.hpp"

namespace qtheta::cli {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

shintani::ContourOptions make_opts(const RunConfig& c) {
    shintani::ContourOptions o;
    o.tolerance = c.tol;
    o.t_radius = c.contour_radius;
    o.tmax = c.tmax;
    return o;
}

std::string fmt(const char* pattern, ...) {
    char buf[160];
    va_list ap;
    va_start(ap, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, ap);
    va_end(ap);
    return buf;
}

struct Check {
    std::string name;
    double measured;
    double tolerance;
    bool pass;
};

void add_check(std::vector<Check>& v, std::string name, double measured, double tol) {
    v.push_back({std::move(name), measured, tol, measured < tol});
}

// ---- verification suites ---------------------------------------------------

// loop integral of u^m log(u)^r du against its closed form
void suite_lemma_log1(std::vector<Check>& out) {
    for (int m = -2; m <= 2; ++m) {
        for (int r = 0; r <= 3; ++r) {
            const Complex closed = shintani::contour_lemma_log1(m, r);
            contour::HankelContour c;
            c.radius = 0.4;
            c.outer_limit = 1.0;
            c.tolerance = 1e-12;
            const Complex quad = contour::hankel_quadrature(
                [&](Complex u, Complex lmu) {
                    const Complex lu = lmu + Complex(0.0, kPi);
                    return std::pow(u, m) * (r == 0 ? Complex(1.0) : std::pow(lu, r));
                },
                c);
            add_check(out, fmt("lemma-log1 m=%d r=%d", m, r), std::abs(closed - quad),
                      1e-8);
        }
    }
}

// int_0^1 log(u)^r / (a1 + a2 u) du against the polylog closed form
void suite_lemma_polylog(std::vector<Check>& out) {
    const double pairs[3][2] = {{1.0, 1.0}, {1.0, 2.618}, {2.0, 1.0}};
    for (int r = 0; r <= 3; ++r) {
        for (const auto& a : pairs) {
            const double closed = shintani::contour_lemma_polylog(r, a[0], a[1]);
            const Complex quad = contour::integrate_gk(
                [&](double w) {
                    const double u = std::exp(-w);
                    return Complex(std::pow(-w, r) * u / (a[0] + a[1] * u));
                },
                0.0, 60.0, 1e-11);
            add_check(out, fmt("lemma-polylog r=%d a=(%g,%g)", r, a[0], a[1]),
                      std::abs(closed - quad.real()), 1e-7);
        }
    }
}

// normalization and the two step relations of the double sine
void suite_double_sine(std::vector<Check>& out) {
    const double pairs[3][2] = {
        {1.0, 1.0}, {1.0, std::sqrt(2.0)}, {1.0, (3.0 + std::sqrt(5.0)) / 2.0}};
    for (const auto& p : pairs) {
        const barnes::PeriodPair w(p[0], p[1]);
        const Complex mid = barnes::double_sine(Complex((w.w1 + w.w2) / 2.0), w);
        add_check(out, fmt("double-sine norm w=(%g,%g)", w.w1, w.w2),
                  std::abs(mid - 1.0), 1e-6);
        for (double z : {0.3, 0.7, 1.1}) {
            const Complex s0 = barnes::double_sine(Complex(z), w);
            const Complex up1 = barnes::double_sine(Complex(z + w.w1), w);
            const Complex up2 = barnes::double_sine(Complex(z + w.w2), w);
            add_check(out, fmt("double-sine step-w1 w=(%g,%g) z=%g", w.w1, w.w2, z),
                      std::abs(up1 * 2.0 * std::sin(kPi * z / w.w2) / s0 - 1.0), 1e-6);
            add_check(out, fmt("double-sine step-w2 w=(%g,%g) z=%g", w.w1, w.w2, z),
                      std::abs(up2 * 2.0 * std::sin(kPi * z / w.w1) / s0 - 1.0), 1e-6);
        }
    }
}

// composition law of the double-sine automorphy factors
void suite_cocycle(std::vector<Check>& out) {
    const theta::PeriodCocycle c =
        theta::double_sine_cocycle(barnes::PeriodPair(1.0, std::sqrt(2.0)));
    const Complex vs[3] = {{0.3, 0.2}, {-0.7, 0.1}, {1.9, -0.3}};
    const int steps[3][4] = {{1, 0, 0, 1}, {2, -1, -1, 3}, {0, -2, 3, 1}};
    for (const auto& v : vs) {
        for (const auto& l : steps) {
            const double res =
                theta::cocycle_residual(c, {l[0], l[1]}, {l[2], l[3]}, v);
            add_check(out,
                      fmt("cocycle l1=(%d,%d) l2=(%d,%d) v=%g%+gi", l[0], l[1], l[2],
                          l[3], v.real(), v.imag()),
                      res, 1e-10);
        }
    }
}

// contour continuation against the direct double sum on Re s > 1
void suite_continuation(std::vector<Check>& out, const shintani::ContourOptions& opts) {
    const shintani::ShintaniParams sets[2] = {
        {2.6180339887498949, 0.38196601125010515, 0.2, 0.2}, {1.0, 2.5, 0.4, 0.3}};
    const Complex svals[3] = {{1.3, 0.0}, {1.7, 0.4}, {2.4, 0.0}};
    for (int i = 0; i < 2; ++i) {
        for (const Complex& s : svals) {
            const Complex zc = shintani::zeta_contour(s, sets[i], opts);
            const Complex zd = shintani::zeta_direct(s, sets[i]);
            add_check(out,
                      fmt("continuation set=%d s=%g%+gi", i, s.real(), s.imag()),
                      std::abs(zc - zd) / std::abs(zd), 1e-6);
        }
        const Complex z0 = shintani::zeta_contour(Complex(0.0), sets[i], opts);
        add_check(out, fmt("continuation set=%d s=0 closed form", i),
                  std::abs(z0 - shintani::zeta_value0(sets[i])), 1e-8);
    }
}

// ---- commands --------------------------------------------------------------

Json checks_json(const std::vector<Check>& checks, bool& all_pass) {
    Json arr = Json::array();
    int passed = 0;
    for (const auto& c : checks) {
        arr.push_back(Json{{"measured", c.measured},
                           {"name", c.name},
                           {"pass", c.pass},
                           {"tolerance", c.tolerance}});
        if (c.pass) ++passed;
    }
    all_pass = passed == static_cast<int>(checks.size());
    return Json{{"checks", arr},
                {"failed", static_cast<int>(checks.size()) - passed},
                {"passed", passed}};
}

Json eval_cmd(const RunConfig& c) {
    const auto opts = make_opts(c);
    Json out;
    out["command"] = "eval";
    out["function"] = c.fn;
    Json inputs;
    inputs["tolerance"] = c.tol;
    if (c.fn == "double-sine") {
        const barnes::PeriodPair w(c.omega.at(0), c.omega.at(1));
        const Complex z(c.z, c.zi);
        const Complex val = barnes::double_sine(z, w);
        inputs["omega"] = Json::array({w.w1, w.w2});
        inputs["z"] = complex_json(z);
        out["value"] = complex_json(val);
        const Complex up1 = barnes::double_sine(z + w.w1, w);
        const Complex up2 = barnes::double_sine(z + w.w2, w);
        out["residual_step_w1"] = std::abs(up1 * 2.0 * std::sin(kPi * z / w.w2) / val - 1.0);
        out["residual_step_w2"] = std::abs(up2 * 2.0 * std::sin(kPi * z / w.w1) / val - 1.0);
    } else if (c.fn == "log-gamma2") {
        const barnes::PeriodPair w(c.omega.at(0), c.omega.at(1));
        inputs["omega"] = Json::array({w.w1, w.w2});
        inputs["r"] = c.r;
        inputs["z"] = complex_json(Complex(c.z, c.zi));
        out["value"] = complex_json(barnes::log_gamma2_r(c.r, Complex(c.z, c.zi), w));
    } else if (c.fn == "zeta" || c.fn == "zeta0" || c.fn == "zeta-deriv") {
        const shintani::ShintaniParams ps(c.a1, c.a2, c.x1, c.x2);
        inputs["a"] = Json::array({c.a1, c.a2});
        inputs["x"] = Json::array({c.x1, c.x2});
        if (c.fn == "zeta") {
            const Complex s(c.s, c.si);
            inputs["s"] = complex_json(s);
            out["value"] = complex_json(shintani::zeta_contour(s, ps, opts));
        } else if (c.fn == "zeta0") {
            out["value"] = complex_json(Complex(shintani::zeta_value0(ps)));
        } else {
            inputs["m"] = c.m;
            const shintani::DerivLedger L = shintani::zeta_deriv_m(c.m, ps, opts);
            out["ledger"] = ledger_to_json(L);
            out["value"] = complex_json(L.value);
        }
    } else {
        throw ConfigError("eval: unknown function '" + c.fn + "'");
    }
    out["inputs"] = inputs;
    return out;
}

Json verify_cmd(const RunConfig& c, bool& all_pass) {
    const auto opts = make_opts(c);
    std::vector<Check> checks;
    bool known = false;
    auto want = [&](const char* name) {
        const bool hit = c.suite == name || c.suite == "all";
        known = known || c.suite == name;
        return hit;
    };
    if (want("lemma-log1")) suite_lemma_log1(checks);
    if (want("lemma-polylog")) suite_lemma_polylog(checks);
    if (want("double-sine")) suite_double_sine(checks);
    if (want("cocycle")) suite_cocycle(checks);
    if (want("continuation")) suite_continuation(checks, opts);
    if (!known && c.suite != "all")
        throw ConfigError("verify: unknown suite '" + c.suite + "'");
    Json out = checks_json(checks, all_pass);
    out["command"] = "verify";
    out["suite"] = c.suite;
    return out;
}

Json lseries_cmd(const RunConfig& c) {
    if (c.class_data.empty()) throw ConfigError("lseries: --class-data is required");
    const quadfield::ClassData data = [&] {
        try {
            return quadfield::load_class_data(c.class_data);
        } catch (const DataError& e) {
            throw ConfigError(e.what());
        }
    }();
    const auto opts = make_opts(c);
    Json chars = Json::array();
    bool matched = false;
    for (const auto& chi : data.characters) {
        if (!c.chi.empty() && chi.label != c.chi) continue;
        matched = true;
        const shintani::DerivLedger L = lfun::L_chi_deriv(c.m, chi, data, opts);
        chars.push_back(Json{{"label", chi.label}, {"ledger", ledger_to_json(L)}});
    }
    if (!matched) throw ConfigError("lseries: unknown character '" + c.chi + "'");
    Json logT;
    for (const auto& g : data.elements)
        logT[g] = complex_json(lfun::log_T_invariant(g, data, opts));
    return Json{{"D", data.D},
                {"characters", chars},
                {"command", "lseries"},
                {"inputs", Json{{"class_data", c.class_data}, {"m", c.m},
                                {"tolerance", c.tol}}},
                {"log_T", logT}};
}

Json invariants_cmd(const RunConfig& c) {
    if (c.class_data.empty())
        throw ConfigError("invariants: --class-data is required");
    const quadfield::ClassData data = [&] {
        try {
            return quadfield::load_class_data(c.class_data);
        } catch (const DataError& e) {
            throw ConfigError(e.what());
        }
    }();
    const auto opts = make_opts(c);
    const std::string g = c.g.empty() ? data.elements.at(0) : c.g;
    try {
        data.index_of(g);
    } catch (const DataError&) {
        throw ConfigError("invariants: unknown class '" + g + "'");
    }
    Json out;
    out["command"] = "invariants";
    out["D"] = data.D;
    out["g"] = g;
    out["inputs"] = Json{{"class_data", c.class_data}, {"tolerance", c.tol}};
    const Complex logT = lfun::log_T_invariant(g, data, opts);
    out["T"] = complex_json(std::exp(logT));
    out["log_T"] = complex_json(logT);
    if (data.nu) {
        const lfun::XInvariant X = lfun::X_invariant(g, data, opts);
        out["X"] = Json{{"difference", X.difference},
                        {"nu_g", X.nu_g},
                        {"primary", complex_json(X.primary)},
                        {"secondary", complex_json(X.secondary)}};
    }
    return out;
}

Json recognize_cmd(const RunConfig& c) {
    Json out;
    out["command"] = "recognize";
    out["inputs"] = Json{{"degree_bound", c.deg_bound},
                         {"height_bound", c.height_bound},
                         {"value", c.value}};
    const auto hit = lfun::recognize_algebraic(c.value, c.deg_bound, c.height_bound);
    if (hit) {
        Json coeffs = Json::array();
        for (long ck : hit->coeffs) coeffs.push_back(ck);
        out["hit"] = Json{{"coeffs", coeffs},
                          {"degree", hit->degree},
                          {"height", hit->height},
                          {"polynomial", hit->str()}};
    } else {
        out["hit"] = nullptr;
    }
    return out;
}

} // namespace

RunResult run(const RunConfig& cfg) {
    try {
        if (cfg.format != "json" && cfg.format != "csv")
            throw ConfigError("unknown format '" + cfg.format + "'");
        if (!(cfg.tol > 0.0)) throw ConfigError("--tol must be positive");
        Json report;
        bool all_pass = true;
        if (cfg.command == "eval") report = eval_cmd(cfg);
        else if (cfg.command == "verify") report = verify_cmd(cfg, all_pass);
        else if (cfg.command == "lseries") report = lseries_cmd(cfg);
        else if (cfg.command == "invariants") report = invariants_cmd(cfg);
        else if (cfg.command == "recognize") report = recognize_cmd(cfg);
        else throw ConfigError("unknown command '" + cfg.command + "'");
        const std::string doc =
            cfg.format == "json" ? dump17(report) + "\n" : to_csv(report);
        return {all_pass ? 0 : 1, doc};
    } catch (const ConfigError& e) {
        return {2, dump17(Json{{"error", e.what()}, {"exit", 2}}) + "\n"};
    } catch (const Error& e) {
        return {1, dump17(Json{{"error", e.what()}, {"exit", 1}}) + "\n"};
    } catch (const std::exception& e) {
        return {1, dump17(Json{{"error", e.what()}, {"exit", 1}}) + "\n"};
    }
}

} // namespace qtheta::cli
