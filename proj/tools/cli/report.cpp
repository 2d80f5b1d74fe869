#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace qtheta::cli {

namespace {

void fmt_double(std::string& out, double d) {
    if (!std::isfinite(d)) {
        out += "null";
        return;
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    out += buf;
    // keep the token a valid JSON number
    bool plain = true;
    for (const char* p = buf; *p; ++p)
        if (*p == '.' || *p == 'e' || *p == 'E') plain = false;
    if (plain) out += ".0";
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad1(static_cast<std::size_t>((depth + 1) * indent), ' ');
    const std::string pad(static_cast<std::size_t>(depth * indent), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                out += Json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                dump_rec(v, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float:
            fmt_double(out, j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

void csv_value(std::string& out, const Json& v) {
    if (v.is_number_float()) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
        out += buf;
    } else if (v.is_string()) {
        out += v.get<std::string>();
    } else {
        out += v.dump();
    }
}

} // namespace

Json complex_json(std::complex<double> z) {
    return Json{{"im", z.imag()}, {"re", z.real()}};
}

std::complex<double> complex_from(const Json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

const char* kind_name(shintani::GenKind k) {
    using shintani::GenKind;
    switch (k) {
        case GenKind::LogG2: return "logG2";
        case GenKind::LogH: return "logH";
        case GenKind::BernB2x1: return "bernB2x1";
        case GenKind::BernB1B1: return "bernB1B1";
        case GenKind::BernB2x2: return "bernB2x2";
        case GenKind::Polylog: return "polylog";
        case GenKind::LogNorm: return "logNorm";
        case GenKind::RootOfUnity: return "rootOfUnity";
    }
    throw DataError("kind_name: unknown generator kind");
}

shintani::GenKind kind_from(const std::string& name) {
    using shintani::GenKind;
    for (GenKind k : {GenKind::LogG2, GenKind::LogH, GenKind::BernB2x1,
                      GenKind::BernB1B1, GenKind::BernB2x2, GenKind::Polylog,
                      GenKind::LogNorm, GenKind::RootOfUnity})
        if (name == kind_name(k)) return k;
    throw DataError("kind_from: unknown generator kind '" + name + "'");
}

Json ledger_to_json(const shintani::DerivLedger& L) {
    Json terms = Json::array();
    for (const auto& t : L.terms) {
        terms.push_back(Json{{"coeff", complex_json(t.coeff)},
                             {"generator", complex_json(t.generator)},
                             {"key", t.key},
                             {"kind", kind_name(t.kind)},
                             {"pi_power", t.pi_power},
                             {"region_fallback", t.region_fallback}});
    }
    return Json{{"max_pi_power", L.max_pi_power()},
                {"residual", L.residual()},
                {"terms", terms},
                {"value", complex_json(L.value)}};
}

shintani::DerivLedger ledger_from_json(const Json& j) {
    shintani::DerivLedger L;
    L.value = complex_from(j.at("value"));
    for (const auto& t : j.at("terms")) {
        L.add(kind_from(t.at("kind").get<std::string>()),
              t.at("key").get<std::string>(), complex_from(t.at("coeff")),
              complex_from(t.at("generator")), t.at("pi_power").get<int>(),
              t.at("region_fallback").get<bool>());
    }
    return L;
}

std::string dump17(const Json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

std::string to_csv(const Json& report) {
    std::string out;
    if (report.contains("checks")) {
        out += "name,measured,tolerance,pass\n";
        for (const auto& c : report.at("checks")) {
            out += c.at("name").get<std::string>();
            out += ",";
            csv_value(out, c.at("measured"));
            out += ",";
            csv_value(out, c.at("tolerance"));
            out += ",";
            out += c.at("pass").get<bool>() ? "true" : "false";
            out += "\n";
        }
        return out;
    }
    out += "key,value\n";
    const Json flat = report.flatten();
    for (auto it = flat.begin(); it != flat.end(); ++it) {
        out += it.key();
        out += ",";
        csv_value(out, it.value());
        out += "\n";
    }
    return out;
}

} // namespace qtheta::cli
