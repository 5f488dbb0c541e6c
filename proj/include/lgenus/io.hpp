#pragma once

/**
 * @file io.hpp
 * @brief Report assembly and serialization.
 *
 * Everything numeric is rendered in the canonical exact text form ("num/den",
 * denominator omitted when 1); no decimal rendering exists. Reports are
 * emitted as JSON with a fixed field order or as CSV with one row per
 * coefficient / grid cell, so identical inputs produce byte-identical output.
 */

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgenus/charclass.hpp"
#include "lgenus/errors.hpp"
#include "lgenus/hodge.hpp"
#include "lgenus/rational.hpp"
#include "lgenus/singularities.hpp"

namespace lgenus {

using Json = nlohmann::ordered_json;

/// Top-level result record shared by every command.
/// status is "pass", "fail", or "error"; failures lists (grid point, witness)
/// records when a check fails.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::array();
    std::string status = "pass";
    Json failures = Json::array();

    Json to_json() const {
        Json j;
        j["schema_version"] = "1";
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["status"] = status;
        j["failures"] = failures;
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    /// Header row from the keys of the first result row, then one CSV row per
    /// result. Non-scalar fields are serialized compactly; cells containing
    /// separators are quoted.
    std::string to_csv() const {
        std::ostringstream os;
        if (results.empty()) return "";
        const Json& first = results.front();
        bool head = true;
        for (auto it = first.begin(); it != first.end(); ++it) {
            if (!head) os << ",";
            head = false;
            os << csv_cell(it.key());
        }
        os << "\n";
        for (const Json& row : results) {
            bool cell = true;
            for (auto it = first.begin(); it != first.end(); ++it) {
                if (!cell) os << ",";
                cell = false;
                auto found = row.find(it.key());
                if (found == row.end()) continue;
                if (found->is_string()) os << csv_cell(found->get<std::string>());
                else os << csv_cell(found->dump());
            }
            os << "\n";
        }
        return os.str();
    }

    static std::string csv_cell(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += "\"";
        return out;
    }
};

inline Json rationals_to_json(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const Rational& v : values) arr.push_back(v.to_string());
    return arr;
}

inline Json to_json(const DegreePoly& p) {
    Json j;
    j["arity"] = p.arity();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exponents"] = e;
        t["coefficient"] = c.to_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["text"] = p.to_string();
    return j;
}

inline Json to_json(const SpectralPairSet& sp) {
    Json j;
    j["n"] = sp.n();
    Json pairs = Json::array();
    for (const auto& e : sp.entries()) {
        Json p;
        p["alpha"] = e.alpha.to_string();
        p["weight"] = e.weight;
        p["mult"] = e.mult;
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

/// Reads the spectral-pair file format: a top-level "n" plus an array of
/// {"alpha": "num/den", "weight": int, "mult": int} objects.
inline SpectralPairSet read_spectral_pairs(std::istream& in) {
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw invalid_input(std::string("spectral pair file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("pairs") || !j["pairs"].is_array())
        throw invalid_input("spectral pair file needs a top-level \"n\" and a \"pairs\" array");
    unsigned n = j["n"].get<unsigned>();
    std::vector<SpectralPairSet::Entry> entries;
    for (const Json& p : j["pairs"]) {
        if (!p.contains("alpha") || !p.contains("weight") || !p.contains("mult"))
            throw invalid_input("spectral pair entries need alpha, weight, and mult");
        entries.push_back({Rational::from_string(p["alpha"].get<std::string>()),
                           p["weight"].get<int>(), p["mult"].get<long long>()});
    }
    return SpectralPairSet(n, std::move(entries));
}

inline SpectralPairSet read_spectral_pairs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open spectral pair file: " + path);
    return read_spectral_pairs(in);
}

inline Json to_json(const SectorTable& t) {
    auto table = [](const std::map<std::pair<int, int>, long long>& m) {
        Json arr = Json::array();
        for (const auto& [key, dim] : m) {
            Json e;
            e["p"] = key.first;
            e["weight"] = key.second;
            e["dim"] = dim;
            arr.push_back(std::move(e));
        }
        return arr;
    };
    Json j;
    j["n"] = t.n;
    j["total_dimension"] = t.total_dimension;
    j["unipotent"] = table(t.unipotent);
    j["nonunipotent"] = table(t.nonunipotent);
    j["primitive_unipotent"] = table(t.primitive_unipotent);
    j["primitive_nonunipotent"] = table(t.primitive_nonunipotent);
    return j;
}

inline Json to_json(const HodgeNumbers& h) {
    Json j;
    j["n"] = h.n;
    j["d"] = h.d;
    Json arr = Json::array();
    for (const BigInt& v : h.primitive) arr.push_back(v.get_str());
    j["primitive"] = std::move(arr);
    return j;
}

inline Json to_json(const PositivityReport& rep) {
    Json j;
    j["m"] = rep.m;
    if (!rep.degrees.empty()) j["degrees"] = rep.degrees;
    j["coefficients"] = rationals_to_json(rep.coefficients);
    j["pass"] = rep.pass;
    if (rep.first_failing_j) {
        j["first_failing_j"] = *rep.first_failing_j;
        j["failing_coefficient"] = rep.failing_coefficient->to_string();
    }
    if (rep.side_condition_applicable) j["side_condition_holds"] = rep.side_condition_holds;
    return j;
}

inline Json to_json(const LClassComparison& cmp) {
    Json j;
    j["n"] = cmp.n;
    j["d"] = cmp.d;
    j["L0_smooth"] = cmp.smooth_l0.to_string();
    j["L0_constant"] = cmp.constant_l0.to_string();
    j["L0_intersection"] = cmp.intersection_l0.to_string();
    j["constant_minus_intersection"] = cmp.constant_minus_intersection;
    j["smooth_minus_constant"] = cmp.smooth_minus_constant;
    j["smooth_minus_intersection"] = cmp.smooth_minus_intersection;
    Json upper = Json::object();
    for (const auto& [jj, v] : cmp.upper_classes)
        upper["L_" + std::to_string(jj)] = v.to_string();
    j["upper_classes"] = std::move(upper);
    return j;
}

} // namespace lgenus
