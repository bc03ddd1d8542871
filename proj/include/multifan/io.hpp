#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "errors.hpp"
#include "fan.hpp"
#include "rational.hpp"

namespace multifan {

inline constexpr int kFormatVersion = 1;

/**
 * On-disk form of a multi-fan: the fan itself (cycle, coloring, optional
 * apex marking) plus optional polarization vector and seed defaults that
 * commands pick up when the command line does not override them.
 */
struct FanDocument {
    MultiFan fan;
    std::optional<RationalVector> polarization;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& where)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    raise(errc::invalid_input,
          where + " must be a rational string \"p/q\" or an integer");
}

inline RationalVector json_vector(const nlohmann::json& j, int expected,
                                  const std::string& where)
{
    if (!j.is_array() || static_cast<int>(j.size()) != expected)
        raise(errc::invalid_input,
              where + " must be an array of length " + std::to_string(expected));
    RationalVector v;
    for (const auto& x : j) v.push_back(json_rational(x, where + " entry"));
    return v;
}

inline const nlohmann::json& json_field(const nlohmann::json& j,
                                        const std::string& key)
{
    auto it = j.find(key);
    if (it == j.end())
        raise(errc::invalid_input, "missing required field \"" + key + "\"");
    return *it;
}

}  // namespace detail

inline nlohmann::json fan_to_json(const MultiFan& fan)
{
    nlohmann::json j;
    j["format_version"] = kFormatVersion;
    j["n"] = fan.n();
    j["m"] = fan.m();
    j["cycle"] = nlohmann::json::array();
    for (auto& [s, w] : fan.cycle().weights()) {
        nlohmann::json term;
        term["simplex"] = s;
        term["weight"] = format_rational(w);
        j["cycle"].push_back(std::move(term));
    }
    j["lambda"] = nlohmann::json::array();
    for (int v = 1; v <= fan.m(); ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : fan.coloring().value(v)) row.push_back(format_rational(x));
        j["lambda"].push_back(std::move(row));
    }
    if (fan.apices()) j["apexes"] = {fan.apices()->first, fan.apices()->second};
    return j;
}

inline nlohmann::json document_to_json(const FanDocument& doc)
{
    nlohmann::json j = fan_to_json(doc.fan);
    if (doc.polarization) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : *doc.polarization) row.push_back(format_rational(x));
        j["polarization"] = std::move(row);
    }
    if (doc.seed) j["seed"] = *doc.seed;
    return j;
}

inline FanDocument document_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        raise(errc::invalid_input, "document root must be a JSON object");
    const auto& version = detail::json_field(j, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
        raise(errc::invalid_input, "unsupported format_version");

    const auto& jn = detail::json_field(j, "n");
    const auto& jm = detail::json_field(j, "m");
    if (!jn.is_number_integer() || !jm.is_number_integer() || jn.get<int>() < 0 ||
        jm.get<int>() < 0)
        raise(errc::invalid_input, "n and m must be non-negative integers");
    const int n = jn.get<int>();
    const int m = jm.get<int>();

    SimplicialChain cycle(m, n);
    const auto& jcycle = detail::json_field(j, "cycle");
    if (!jcycle.is_array())
        raise(errc::invalid_input, "\"cycle\" must be an array of weighted simplices");
    for (const auto& term : jcycle) {
        if (!term.is_object())
            raise(errc::invalid_input, "cycle entries must be objects");
        const auto& js = detail::json_field(term, "simplex");
        if (!js.is_array())
            raise(errc::invalid_input, "\"simplex\" must be an integer array");
        Simplex s;
        for (const auto& x : js) {
            if (!x.is_number_integer())
                raise(errc::invalid_input, "simplex vertices must be integers");
            s.push_back(x.get<int>());
        }
        cycle.add(s, detail::json_rational(detail::json_field(term, "weight"),
                                           "cycle weight"));
    }

    const auto& jlambda = detail::json_field(j, "lambda");
    if (!jlambda.is_array() || static_cast<int>(jlambda.size()) != m)
        raise(errc::invalid_input, "\"lambda\" must list one value per vertex");
    std::vector<RationalVector> values;
    for (int v = 0; v < m; ++v)
        values.push_back(
            detail::json_vector(jlambda[v], n, "lambda[" + std::to_string(v) + "]"));

    std::optional<std::pair<int, int>> apices;
    if (auto it = j.find("apexes"); it != j.end()) {
        if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
            !(*it)[1].is_number_integer())
            raise(errc::invalid_input, "\"apexes\" must be a pair of vertex indices");
        apices = std::make_pair((*it)[0].get<int>(), (*it)[1].get<int>());
    }

    FanDocument doc{
        MultiFan(std::move(cycle), CharacteristicFunction(n, std::move(values)),
                 apices),
        std::nullopt, std::nullopt};

    if (auto it = j.find("polarization"); it != j.end())
        doc.polarization = detail::json_vector(*it, n, "polarization");
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned() && !it->is_number_integer())
            raise(errc::invalid_input, "\"seed\" must be an integer");
        doc.seed = it->get<std::uint64_t>();
    }
    return doc;
}

inline FanDocument document_from_string(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(errc::invalid_input, std::string("malformed JSON: ") + e.what());
    }
    return document_from_json(j);
}

inline std::string document_to_string(const FanDocument& doc)
{
    return document_to_json(doc).dump(2) + "\n";
}

inline FanDocument load_document(const std::string& path)
{
    std::ifstream in(path);
    if (!in) raise(errc::invalid_input, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return document_from_string(buffer.str());
}

inline void save_document(const FanDocument& doc, const std::string& path)
{
    std::ofstream out(path);
    if (!out) raise(errc::invalid_input, "cannot write file: " + path);
    out << document_to_string(doc);
}

/// Structured error payload used by the CLI's JSON mode.
inline nlohmann::json error_to_json(const FanError& e)
{
    return {{"error", {{"code", errc_name(e.code())}, {"message", e.message()}}}};
}

}  // namespace multifan
