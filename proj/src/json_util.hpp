#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "multivend/errors.hpp"

// Strict accessors shared by the scenario and study file parsers. Every
// schema failure is reported as ParseError with the offending path.

namespace multivend::jsonutil {

using nlohmann::json;

inline void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
}

inline void expect_array(const json& j, const std::string& where) {
    if (!j.is_array()) {
        throw ParseError(where + ": expected an array");
    }
}

// Rejects keys outside `known`; missing keys are the caller's concern.
inline void check_keys(const json& obj, const std::string& where,
                       std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ParseError(where + ": unknown key \"" + key + "\"");
        }
    }
}

inline const json& require(const json& obj, const char* key,
                           const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing key \"" + key + "\"");
    }
    return *it;
}

inline std::string get_string(const json& j, const std::string& where) {
    if (!j.is_string()) {
        throw ParseError(where + ": expected a string");
    }
    return j.get<std::string>();
}

inline std::int64_t get_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        throw ParseError(where + ": expected an integer");
    }
    return j.get<std::int64_t>();
}

inline double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    return j.get<double>();
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace multivend::jsonutil
