#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtheta/quadfield.hpp"

namespace qtheta::quadfield {

namespace {

using nlohmann::json;

Rat parse_rat(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw DataError("malformed rational '" + s + "'");
    }
}

Rat parse_rat(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw DataError("rational must be an integer or a \"p/q\" string");
}

QuadElem parse_quad(const json& j, long D) {
    if (!j.is_array() || j.size() != 3)
        throw DataError("field element must be a 3-array [a, b, c]");
    Int v[3];
    for (int i = 0; i < 3; ++i) {
        if (j[i].is_string())
            v[i] = Int(j[i].get<std::string>());
        else if (j[i].is_number_integer())
            v[i] = Int(j[i].get<long long>());
        else
            throw DataError("field element entries must be integers");
    }
    return QuadElem(v[0], v[1], v[2], D);
}

// Character values: a rational string ("1", "-1"), "i"/"-i", or "e(p/q)"
// meaning exp(2 pi i p/q).
Complex parse_unit_value(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_string()) throw DataError("character value must be a string or number");
    const std::string s = j.get<std::string>();
    if (s == "i") return Complex(0.0, 1.0);
    if (s == "-i") return Complex(0.0, -1.0);
    if (s.size() > 3 && s.substr(0, 2) == "e(" && s.back() == ')') {
        const Rat r = parse_rat(s.substr(2, s.size() - 3));
        const double phase = 2.0 * M_PI * numerator(r).convert_to<double>() /
                             denominator(r).convert_to<double>();
        return std::polar(1.0, phase);
    }
    const Rat r = parse_rat(s);
    return Complex(numerator(r).convert_to<double>() /
                       denominator(r).convert_to<double>(),
                   0.0);
}

int element_order(const std::vector<std::vector<int>>& table, int g) {
    int cur = g, ord = 1;
    while (cur != 0) {
        cur = table[cur][g];
        ++ord;
        if (ord > static_cast<int>(table.size()))
            throw DataError("group table is not a group: unbounded element order");
    }
    return ord;
}

} // namespace

ClassData parse_class_data(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw DataError(std::string("class data is not valid JSON: ") + e.what());
    }
    ClassData d;
    if (!doc.contains("D") || !doc["D"].is_number_integer())
        throw DataError("missing integer field 'D'");
    d.D = doc["D"].get<long>();
    if (d.D <= 1 || !is_squarefree(d.D))
        throw DataError("'D' must be squarefree and > 1");

    if (!doc.contains("ideals") || !doc["ideals"].is_array() || doc["ideals"].empty())
        throw DataError("missing non-empty array 'ideals'");
    for (const auto& j : doc["ideals"]) {
        IdealLattice L;
        L.label = j.at("label").get<std::string>();
        L.alpha = parse_quad(j.at("alpha"), d.D);
        L.beta = parse_quad(j.at("beta"), d.D);
        const Rat det = L.alpha.rational_part() * L.beta.surd_part() -
                        L.alpha.surd_part() * L.beta.rational_part();
        if (det == 0)
            throw DataError("ideal '" + L.label + "' has a degenerate basis");
        d.ideals.push_back(L);
    }

    const auto& grp = doc.at("group");
    d.elements = grp.at("elements").get<std::vector<std::string>>();
    if (d.elements.empty()) throw DataError("group has no elements");
    const int n = static_cast<int>(d.elements.size());
    const auto& tab = grp.at("table");
    if (!tab.is_array() || static_cast<int>(tab.size()) != n)
        throw DataError("group table must be a square array over the elements");
    for (const auto& row : tab) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw DataError("group table must be a square array over the elements");
        std::vector<int> r;
        for (const auto& cell : row) {
            const std::string lab = cell.get<std::string>();
            int idx = -1;
            for (int i = 0; i < n; ++i)
                if (d.elements[i] == lab) idx = i;
            if (idx < 0) throw DataError("group table entry '" + lab + "' unknown");
            r.push_back(idx);
        }
        d.table.push_back(r);
    }
    for (int i = 0; i < n; ++i) {
        if (d.table[0][i] != i || d.table[i][0] != i)
            throw DataError("first group element must act as the identity");
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            seen_row[d.table[i][j]] = true;
            seen_col[d.table[j][i]] = true;
        }
        for (int j = 0; j < n; ++j)
            if (!seen_row[j] || !seen_col[j])
                throw DataError("group table rows and columns must be permutations");
    }

    int max_order = 1;
    for (int i = 0; i < n; ++i) max_order = std::max(max_order, element_order(d.table, i));

    if (doc.contains("characters")) {
        for (const auto& j : doc["characters"]) {
            Character chi;
            chi.label = j.at("label").get<std::string>();
            for (const auto& v : j.at("values")) chi.values.push_back(parse_unit_value(v));
            if (static_cast<int>(chi.values.size()) != n)
                throw DataError("character '" + chi.label +
                                "' has the wrong number of values");
            for (int i = 0; i < n; ++i) {
                if (std::abs(std::abs(chi.values[i]) - 1.0) > 1e-12)
                    throw DataError("character '" + chi.label + "' value off the unit circle");
                Complex pw = 1.0;
                for (int k = 0; k < max_order; ++k) pw *= chi.values[i];
                if (std::abs(pw - 1.0) > 1e-10)
                    throw DataError("character '" + chi.label +
                                    "' value is not a root of unity of the group exponent");
                for (int k = 0; k < n; ++k) {
                    const Complex lhs = chi.values[d.table[i][k]];
                    const Complex rhs = chi.values[i] * chi.values[k];
                    if (std::abs(lhs - rhs) > 1e-12)
                        throw DataError("character '" + chi.label + "' is not multiplicative");
                }
            }
            d.characters.push_back(chi);
        }
    }

    if (!doc.contains("norms") || !doc["norms"].is_object())
        throw DataError("missing object field 'norms'");
    for (const auto& [label, val] : doc["norms"].items()) {
        bool known = false;
        for (const auto& L : d.ideals)
            if (L.label == label) known = true;
        if (!known) throw DataError("norm given for unknown ideal '" + label + "'");
        const Rat nv = parse_rat(val);
        if (!(nv > 0)) throw DataError("ideal norm must be positive");
        d.norms[label] = nv;
    }

    if (doc.contains("nu")) {
        d.nu = parse_quad(doc["nu"], d.D);
        if (!d.nu->is_totally_positive())
            throw DataError("'nu' must be totally positive");
        if (doc.contains("nu_class")) {
            d.nu_class = doc["nu_class"].get<std::string>();
            d.index_of(d.nu_class);
        }
    }

    if (doc.contains("ideal_of")) {
        for (const auto& [g, label] : doc["ideal_of"].items()) {
            d.index_of(g);
            bool known = false;
            for (const auto& L : d.ideals)
                if (L.label == label.get<std::string>()) known = true;
            if (!known)
                throw DataError("class '" + g + "' assigned to unknown ideal");
            d.ideal_of[g] = label.get<std::string>();
        }
    } else if (d.ideals.size() == 1) {
        for (const auto& g : d.elements) d.ideal_of[g] = d.ideals[0].label;
    }
    for (const auto& g : d.elements)
        if (d.ideal_of.find(g) == d.ideal_of.end())
            throw DataError("class '" + g + "' has no ideal representative");

    if (doc.contains("cone_points")) {
        for (const auto& [g, pts] : doc["cone_points"].items()) {
            d.index_of(g);
            std::vector<std::pair<Rat, Rat>> v;
            for (const auto& p : pts) {
                if (!p.is_array() || p.size() != 2)
                    throw DataError("cone point must be a pair");
                v.emplace_back(parse_rat(p[0]), parse_rat(p[1]));
            }
            d.cone_points[g] = v;
        }
        for (const auto& g : d.elements)
            if (d.cone_points.find(g) == d.cone_points.end())
                throw DataError("cone point assignment missing class '" + g + "'");
    }

    return d;
}

ClassData load_class_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open class data file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_class_data(ss.str());
}

} // namespace qtheta::quadfield
