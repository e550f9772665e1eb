#pragma once

#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vancoh/errors.hpp"
#include "vancoh/jordan.hpp"
#include "vancoh/milnor.hpp"

namespace vancoh {

using Json = nlohmann::json;

namespace jsondetail {

// `key` is the JSON member to look up; `path`, when the member sits inside
// an array element, is the fuller name used in error messages.
inline const Json& require(const Json& j, const std::string& key, const std::string& path = {}) {
    const std::string& where = path.empty() ? key : path;
    if (!j.is_object()) throw SchemaError(where, "parent is not an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where, "missing");
    return *it;
}

inline long long require_int(const Json& j, const std::string& key,
                             const std::string& path = {}) {
    const std::string& where = path.empty() ? key : path;
    const Json& v = require(j, key, where);
    if (!v.is_number_integer())
        throw SchemaError(where, "must be an integer (floats are rejected)");
    return v.get<long long>();
}

inline long long require_positive(const Json& j, const std::string& key,
                                  const std::string& path = {}) {
    const std::string& where = path.empty() ? key : path;
    const long long v = require_int(j, key, where);
    if (v < 1) throw SchemaError(where, "must be a positive integer");
    return v;
}

inline bool require_bool(const Json& j, const std::string& key, const std::string& path = {}) {
    const std::string& where = path.empty() ? key : path;
    const Json& v = require(j, key, where);
    if (!v.is_boolean()) throw SchemaError(where, "must be a boolean");
    return v.get<bool>();
}

inline std::string require_string(const Json& j, const std::string& key,
                                  const std::string& path = {}) {
    const std::string& where = path.empty() ? key : path;
    const Json& v = require(j, key, where);
    if (!v.is_string()) throw SchemaError(where, "must be a string");
    return v.get<std::string>();
}

inline std::vector<long long> require_positive_array(const Json& j, const std::string& key,
                                                     const std::string& path = {}) {
    const std::string& where = path.empty() ? key : path;
    const Json& v = require(j, key, where);
    if (!v.is_array() || v.empty()) throw SchemaError(where, "must be a nonempty array");
    std::vector<long long> out;
    for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<long long>() < 1)
            throw SchemaError(where, "entries must be positive integers");
        out.push_back(x.get<long long>());
    }
    return out;
}

inline Rat rat_from_json(const Json& v, const std::string& field) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    throw SchemaError(field, "rationals must be integers or \"p/q\" strings, never floats");
}

}  // namespace jsondetail

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("file", "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw SchemaError("file", "malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

inline ConeSingularityInput parse_cone_input(const Json& j) {
    using namespace jsondetail;
    const long long n = require_positive(j, "n");
    if (j.contains("explicit")) {
        const Json& x = require(j, "explicit");
        const long long e = require_positive(x, "e", "explicit.e");
        const long long d = require_positive(x, "d", "explicit.d");
        const long long chi_u = require_int(x, "chi_u", "explicit.chi_u");
        const long long m = require_positive(x, "m", "explicit.m");
        return ConeSingularityInput::with_explicit(static_cast<int>(n), e, d, chi_u,
                                                   static_cast<int>(m));
    }
    auto mult = require_positive_array(j, "multiplicities");
    auto deg = require_positive_array(j, "degrees");
    if (mult.size() != deg.size())
        throw SchemaError("degrees", "must have the same length as multiplicities");
    return ConeSingularityInput::smooth(static_cast<int>(n), std::move(mult), std::move(deg));
}

inline SncLinkInput parse_snc_link_input(const Json& j) {
    using namespace jsondetail;
    const long long n = require_positive(j, "n");
    if (n < 2) throw SchemaError("n", "must be >= 2 for the link case");
    auto mult = require_positive_array(j, "multiplicities");
    const bool rhm = require_bool(j, "rational_homology_manifold");
    return SncLinkInput(static_cast<int>(n), std::move(mult), rhm);
}

inline ResolutionGraph parse_jordan_input(const Json& j) {
    using namespace jsondetail;
    ResolutionGraph g;
    g.target_order = require_positive(j, "eigenvalue_order");

    const Json& comps = require(j, "components");
    if (!comps.is_array() || comps.empty())
        throw SchemaError("components", "must be a nonempty array");
    std::map<std::string, int> comp_index;
    for (const auto& c : comps) {
        ResolutionGraph::Component component;
        component.name = require_string(c, "name", "components[].name");
        component.multiplicity = require_positive(c, "multiplicity", "components[].multiplicity");
        component.exceptional = require_bool(c, "exceptional", "components[].exceptional");
        if (comp_index.count(component.name))
            throw SchemaError("components[].name", "duplicate name '" + component.name + "'");
        comp_index[component.name] = static_cast<int>(g.components.size());
        g.components.push_back(std::move(component));
    }

    auto comp_list = [&](const Json& v, const std::string& field) {
        if (!v.is_array() || v.empty()) throw SchemaError(field, "must be a nonempty array");
        std::vector<int> out;
        for (const auto& x : v) {
            if (!x.is_string()) throw SchemaError(field, "entries must be component names");
            auto it = comp_index.find(x.get<std::string>());
            if (it == comp_index.end())
                throw SchemaError(field, "unknown component '" + x.get<std::string>() + "'");
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end())
            throw SchemaError(field, "repeated component");
        return out;
    };

    auto matrix_from_json = [&](const Json& v, const std::string& field) {
        if (!v.is_array() || v.empty()) throw SchemaError(field, "must be a nonempty 2d array");
        const size_t rows = v.size();
        size_t cols = 0;
        std::vector<Rat> entries;
        for (const auto& row : v) {
            if (!row.is_array() || row.empty()) throw SchemaError(field, "rows must be nonempty arrays");
            if (cols == 0)
                cols = row.size();
            else if (row.size() != cols)
                throw SchemaError(field, "ragged rows");
            for (const auto& x : row) entries.push_back(rat_from_json(x, field));
        }
        return RatMatrix(rows, cols, std::move(entries));
    };

    const Json& strata = require(j, "strata");
    if (!strata.is_array()) throw SchemaError("strata", "must be an array");
    for (const auto& s : strata) {
        ResolutionGraph::Stratum st;
        st.comps = comp_list(require(s, "components", "strata[].components"), "strata[].components");
        st.connected_components = 1;
        if (s.contains("connected_components")) {
            const long long cc = require_int(s, "connected_components", "strata[].connected_components");
            if (cc < 0) throw SchemaError("strata[].connected_components", "must be >= 0");
            st.connected_components = static_cast<int>(cc);
        }
        if (s.contains("label")) st.label = require_string(s, "label", "strata[].label");
        if (s.contains("cohomology")) {
            const Json& coh = s.at("cohomology");
            if (!coh.is_array()) throw SchemaError("strata[].cohomology", "must be an array");
            std::vector<long long> dims;
            for (const auto& x : coh) {
                if (!x.is_number_integer() || x.get<long long>() < 0)
                    throw SchemaError("strata[].cohomology", "dims must be nonnegative integers");
                dims.push_back(x.get<long long>());
            }
            st.cohomology = std::move(dims);
        }
        g.strata.push_back(std::move(st));
    }

    if (j.contains("gysin")) {
        const Json& blocks = j.at("gysin");
        if (!blocks.is_array()) throw SchemaError("gysin", "must be an array");
        for (const auto& b : blocks) {
            ResolutionGraph::GysinBlock gb;
            gb.pair = comp_list(require(b, "pair", "gysin[].pair"), "gysin[].pair");
            if (gb.pair.size() != 2) throw SchemaError("gysin[].pair", "must name two components");
            const std::string single = require_string(b, "single", "gysin[].single");
            auto it = comp_index.find(single);
            if (it == comp_index.end())
                throw SchemaError("gysin[].single", "unknown component '" + single + "'");
            gb.single = it->second;
            gb.classes = matrix_from_json(require(b, "classes", "gysin[].classes"), "gysin[].classes");
            g.gysin.push_back(std::move(gb));
        }
    }

    if (j.contains("restrictions")) {
        const Json& blocks = j.at("restrictions");
        if (!blocks.is_array()) throw SchemaError("restrictions", "must be an array");
        for (const auto& b : blocks) {
            auto from = comp_list(require(b, "from", "restrictions[].from"), "restrictions[].from");
            auto to = comp_list(require(b, "to", "restrictions[].to"), "restrictions[].to");
            g.explicit_restrictions[{std::move(from), std::move(to)}] =
                matrix_from_json(require(b, "matrix", "restrictions[].matrix"), "restrictions[].matrix");
        }
    }

    g.validate();
    return g;
}

struct ParsedInput {
    std::string mode;
    std::variant<ConeSingularityInput, SncLinkInput, ResolutionGraph> value;
};

inline ParsedInput parse_input(const Json& j) {
    const std::string mode = jsondetail::require_string(j, "mode");
    if (mode == "cone") return {mode, parse_cone_input(j)};
    if (mode == "snc_link") return {mode, parse_snc_link_input(j)};
    if (mode == "jordan") return {mode, parse_jordan_input(j)};
    throw SchemaError("mode", "must be one of \"cone\", \"snc_link\", \"jordan\"");
}

}  // namespace vancoh
