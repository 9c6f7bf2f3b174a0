#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "vcw/core.hpp"

namespace vcw {

using json = nlohmann::ordered_json;

namespace detail {

// nlohmann silently collapses duplicate object keys, so uniqueness has to
// be checked during the parse, not after.
inline json parse_checked(const std::string& text) {
    std::vector<std::set<std::string>> keys;
    json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
        if (event == json::parse_event_t::object_start) {
            keys.emplace_back();
        } else if (event == json::parse_event_t::object_end) {
            keys.pop_back();
        } else if (event == json::parse_event_t::key) {
            const auto k = parsed.get<std::string>();
            if (!keys.back().insert(k).second)
                throw ParseError("duplicate member name \"" + k + "\"");
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace detail

// Interchange format: {"universe": [name, ...], "sets": {name: [element, ...], ...}}.
// Element and member order are preserved from the document.
inline SetFamily parse_family(const std::string& text, const Limits& lim = {}) {
    const json doc = detail::parse_checked(text);
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (!doc.contains("universe") || !doc["universe"].is_array())
        throw ParseError("missing \"universe\" array");
    if (!doc.contains("sets") || !doc["sets"].is_object())
        throw ParseError("missing \"sets\" object");

    std::vector<std::string> names;
    for (const auto& v : doc["universe"]) {
        if (!v.is_string()) throw ParseError("element names must be strings");
        names.push_back(v.get<std::string>());
    }

    SetFamily fam;
    fam.universe = Universe(std::move(names));
    for (const auto& [name, elems] : doc["sets"].items()) {
        if (!elems.is_array()) throw ParseError("set \"" + name + "\" must be an array");
        Bitset mask = fam.universe.empty_mask();
        for (const auto& e : elems) {
            if (!e.is_string()) throw ParseError("set \"" + name + "\" must list element names");
            mask.set(fam.universe.index_of(e.get<std::string>()));
        }
        fam.members.push_back({name, std::move(mask)});
    }
    fam.check_limits(lim);
    return fam;
}

inline json family_to_json(const SetFamily& fam) {
    json doc;
    doc["universe"] = fam.universe.names();
    json sets = json::object();
    for (const auto& m : fam.members) {
        json elems = json::array();
        for (std::size_t i = 0; i < fam.universe.size(); ++i)
            if (m.mask.test(i)) elems.push_back(fam.universe.name(i));
        sets[m.name] = std::move(elems);
    }
    doc["sets"] = std::move(sets);
    return doc;
}

// Orders travel as a JSON list of element names, least first.
inline LinearOrder parse_order(const std::string& text, const Universe& u) {
    const json doc = detail::parse_checked(text);
    if (!doc.is_array()) throw ParseError("an order must be a JSON array of element names");
    LinearOrder order;
    for (const auto& v : doc) {
        if (!v.is_string()) throw ParseError("an order must list element names");
        order.permutation.push_back(u.index_of(v.get<std::string>()));
    }
    order.validate(u.size());
    return order;
}

inline json order_to_json(const LinearOrder& order, const Universe& u) {
    json arr = json::array();
    for (std::size_t idx : order.permutation) arr.push_back(u.name(idx));
    return arr;
}

inline json mask_to_names(const Bitset& mask, const Universe& u) {
    json arr = json::array();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (mask.test(i)) arr.push_back(u.name(i));
    return arr;
}

} // namespace vcw
