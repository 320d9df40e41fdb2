#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "tiresense/error.hpp"

namespace tiresense::io::detail {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string(what) + ": malformed JSON (" + e.what() + ")");
    }
}

inline void require_object(const Json& j, std::string_view what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + ": expected a JSON object");
}

inline void reject_unknown_keys(const Json& j, std::initializer_list<std::string_view> allowed, std::string_view what) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (auto k : allowed) known = known || item.key() == k;
        if (!known) throw SchemaError(std::string(what) + ": unknown field '" + item.key() + "'");
    }
}

inline void check_version(const Json& j, std::string_view expected, std::string_view what) {
    const auto it = j.find("schema_version");
    if (it == j.end() || !it->is_string()) throw SchemaError(std::string(what) + ": missing schema_version");
    if (it->get<std::string>() != expected) {
        throw SchemaError(std::string(what) + ": schema_version '" + it->get<std::string>() + "', expected '" +
                          std::string(expected) + "'");
    }
}

inline const Json& field(const Json& j, std::string_view key, std::string_view what) {
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string(what) + ": missing field '" + std::string(key) + "'");
    return *it;
}

inline double number(const Json& j, std::string_view key, std::string_view what) {
    const Json& v = field(j, key, what);
    if (!v.is_number()) throw SchemaError(std::string(what) + ": field '" + std::string(key) + "' must be a number");
    return v.get<double>();
}

inline double number_or(const Json& j, std::string_view key, double fallback, std::string_view what) {
    return j.contains(key) ? number(j, key, what) : fallback;
}

}  // namespace tiresense::io::detail
