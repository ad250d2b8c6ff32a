#include "jacksep/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jacksep {

namespace {

using nlohmann::json;

json rational_json(const rational& r) { return json(r.str()); }

rational rational_from(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational encoded as a string");
    return rational::parse(j.get<std::string>());
}

json mu_json(const partition& mu) {
    json arr = json::array();
    for (long p : mu.parts()) arr.push_back(p);
    return arr;
}

partition mu_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a partition encoded as an array");
    std::vector<long> parts;
    for (const auto& e : j) parts.push_back(e.get<long>());
    return partition(parts);
}

// Terms in reverse-lexicographic partition order (largest first).
template <typename Map>
std::vector<std::pair<partition, rational>> sorted_terms(const Map& terms) {
    std::vector<std::pair<partition, rational>> flat(terms.begin(), terms.end());
    std::sort(flat.begin(), flat.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    return flat;
}

json basis_poly_json(const char* basis, std::size_t nvars,
                     const std::vector<std::pair<partition, rational>>& terms) {
    json out = json::object();
    out["basis"] = basis;
    out["nvars"] = nvars;
    json arr = json::array();
    for (const auto& [mu, c] : terms) {
        json term = json::object();
        term["coeff"] = rational_json(c);
        term["mu"] = mu_json(mu);
        arr.push_back(std::move(term));
    }
    out["terms"] = std::move(arr);
    return out;
}

}  // namespace

std::string sym_poly_to_json(const sym_poly& p) {
    return basis_poly_json("monomial", p.nvars(), sorted_terms(p.terms())).dump();
}

sym_poly sym_poly_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("basis").get<std::string>() != "monomial")
        throw std::invalid_argument("sym_poly_from_json: expected monomial basis");
    sym_poly out(j.at("nvars").get<std::size_t>());
    for (const auto& term : j.at("terms")) out.add(mu_from(term.at("mu")), rational_from(term.at("coeff")));
    return out;
}

std::string elementary_map_to_json(const std::map<partition, rational>& emap, std::size_t nvars) {
    std::map<partition, rational> nonzero;
    for (const auto& [mu, c] : emap)
        if (!c.is_zero()) nonzero.emplace(mu, c);
    return basis_poly_json("elementary", nvars, sorted_terms(nonzero)).dump();
}

std::map<partition, rational> elementary_map_from_json(const std::string& text,
                                                       std::size_t& nvars_out) {
    json j = json::parse(text);
    if (j.at("basis").get<std::string>() != "elementary")
        throw std::invalid_argument("elementary_map_from_json: expected elementary basis");
    nvars_out = j.at("nvars").get<std::size_t>();
    std::map<partition, rational> out;
    for (const auto& term : j.at("terms"))
        out[mu_from(term.at("mu"))] += rational_from(term.at("coeff"));
    return out;
}

std::string uni_poly_to_json(const uni_poly& f) {
    json out = json::object();
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(rational_json(c));
    out["coeffs"] = std::move(arr);
    return out.dump();
}

uni_poly uni_poly_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from(c));
    return uni_poly(std::move(coeffs));
}

std::string coeff_table_to_json(const coeff_table& t) {
    json out = json::object();
    std::vector<std::pair<std::pair<long, long>, rational>> flat(t.entries.begin(),
                                                                 t.entries.end());
    std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
        const long ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.first < b.first.first;
    });
    json arr = json::array();
    for (const auto& [mn, v] : flat) {
        json e = json::object();
        e["m"] = mn.first;
        e["n"] = mn.second;
        e["value"] = rational_json(v);
        arr.push_back(std::move(e));
    }
    out["entries"] = std::move(arr);
    out["g"] = rational_json(t.g);
    out["kind"] = t.kind == table_kind::c_table ? "c" : "a";
    out["r1"] = t.r1;
    out["r2"] = t.r2;
    return out.dump();
}

coeff_table coeff_table_from_json(const std::string& text) {
    json j = json::parse(text);
    coeff_table out;
    out.r1 = j.at("r1").get<long>();
    out.r2 = j.at("r2").get<long>();
    out.g = rational_from(j.at("g"));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "c")
        out.kind = table_kind::c_table;
    else if (kind == "a")
        out.kind = table_kind::a_table;
    else
        throw std::invalid_argument("coeff_table_from_json: unknown kind");
    for (const auto& e : j.at("entries")) {
        rational v = rational_from(e.at("value"));
        if (!v.is_zero())
            out.entries.emplace(std::make_pair(e.at("m").get<long>(), e.at("n").get<long>()), v);
    }
    return out;
}

std::string suite_report_to_json(const suite_report& r) {
    json out = json::object();
    out["cases_passed"] = r.cases_passed;
    out["cases_run"] = r.cases_run;
    json failures = json::array();
    for (const auto& f : r.failures) {
        json e = json::object();
        e["actual"] = f.actual;
        e["case_id"] = f.case_id;
        e["expected"] = f.expected;
        failures.push_back(std::move(e));
    }
    out["failures"] = std::move(failures);
    json skipped = json::array();
    for (const auto& s : r.skipped) {
        json e = json::object();
        e["case_id"] = s.case_id;
        e["reason"] = s.reason;
        skipped.push_back(std::move(e));
    }
    out["skipped"] = std::move(skipped);
    out["suite"] = r.suite;
    out["wall_time_ms"] = r.wall_time_ms;
    return out.dump();
}

}  // namespace jacksep
