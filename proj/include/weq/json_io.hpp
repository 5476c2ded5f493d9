#pragma once

/**
 * @file json_io.hpp
 * @brief JSON report serialization.
 *
 * All reports share the versioned `schema` key. Numbers are serialized as
 * decimal strings so arbitrary-precision values survive every JSON reader.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "weq/cover.hpp"
#include "weq/dsl.hpp"
#include "weq/equations.hpp"
#include "weq/nielsen.hpp"
#include "weq/periodicity.hpp"

namespace weq {

using Json = nlohmann::ordered_json;

inline constexpr const char* json_schema = "weqpoly/1";

inline std::string to_string(const Int& v) { return v.str(); }

inline Json json_length_type(const LengthType& L) {
    Json a = Json::array();
    for (auto l : L) a.push_back(std::to_string(l));
    return a;
}

inline Json json_morphism(const Morphism& h, const NameTable& names) {
    Json imgs = Json::object();
    for (std::size_t i = 0; i < h.images.size(); ++i) imgs[names.name_of(i)] = h.images[i].to_text();
    Json j;
    j["images"] = std::move(imgs);
    j["text"] = morphism_to_text(h, names);
    return j;
}

inline Json json_matrix(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json json_subspace(const Subspace& s) {
    Json j;
    j["relation"] = s.to_string();
    Json coeffs = Json::array();
    for (auto c : s.equation) coeffs.push_back(std::to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Json json_cover(const Cover& c) {
    Json j;
    j["mode"] = c.mode == CoverMode::minimal ? "minimal" : "naive";
    j["minor"] = Json{{"k", std::to_string(c.minor_k + 1)}, {"l", std::to_string(c.minor_l + 1)}};
    Json subs = Json::array();
    for (const auto& e : c.entries) {
        Json s = json_subspace(e.subspace);
        s["p"] = e.p.to_string();
        s["q"] = e.q.to_string();
        subs.push_back(std::move(s));
    }
    j["subspaces"] = std::move(subs);
    j["count"] = std::to_string(c.entries.size());
    return j;
}

inline const char* step_kind_name(ElementaryTransformation::Kind k) {
    return k == ElementaryTransformation::Kind::regular ? "regular" : "singular";
}

inline Json decomposition_to_json(const Decomposition& d, const NameTable& names) {
    Json j;
    Json erased = Json::array();
    for (auto x : d.erased) erased.push_back(names.name_of(x));
    j["erased"] = std::move(erased);
    Json steps = Json::array();
    for (const auto& s : d.steps) {
        steps.push_back(Json{{"kind", step_kind_name(s.kind)},
                             {"target", names.name_of(s.target)},
                             {"source", names.name_of(s.source)}});
    }
    j["steps"] = std::move(steps);
    Json theta = Json::object();
    for (std::size_t i = 0; i < d.theta.images.size(); ++i)
        theta[names.name_of(i)] = d.theta.images[i].to_text();
    j["theta"] = std::move(theta);
    return j;
}

inline Decomposition decomposition_from_json(const Json& j, const NameTable& names) {
    Decomposition d;
    d.n = names.size();
    for (const auto& name : j.at("erased")) {
        auto idx = names.index_of(name.get<std::string>());
        if (!idx) throw parse_error("unknown name in decomposition", 1, 1);
        d.erased.insert(*idx);
    }
    for (const auto& s : j.at("steps")) {
        ElementaryTransformation t{};
        t.kind = s.at("kind").get<std::string>() == "regular" ? ElementaryTransformation::Kind::regular
                                                              : ElementaryTransformation::Kind::singular;
        auto target = names.index_of(s.at("target").get<std::string>());
        auto source = names.index_of(s.at("source").get<std::string>());
        if (!target || !source) throw parse_error("unknown name in decomposition step", 1, 1);
        t.target = *target;
        t.source = *source;
        d.steps.push_back(t);
    }
    d.theta.images.resize(names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
        d.theta.images[i] = parse_word(j.at("theta").at(names.name_of(i)).get<std::string>());
    return d;
}

inline Json json_grouped_form(const GroupedForm& g) {
    Json j;
    j["multiplier"] = g.multiplier.to_string();
    Json terms = Json::array();
    for (const auto& t : g.terms)
        terms.push_back(Json{{"slope", std::to_string(t.slope)}, {"coefficient", t.coeff.to_string()}});
    j["terms"] = std::move(terms);
    Json ks = Json::array();
    for (auto k : g.k_set) ks.push_back(std::to_string(k));
    j["k_set"] = std::move(ks);
    return j;
}

} // namespace weq
