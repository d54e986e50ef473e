#ifndef KSTAB_JSON_UTIL_HPP
#define KSTAB_JSON_UTIL_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "kstab/error.hpp"
#include "kstab/rational.hpp"

namespace kstab::detail {

using json = nlohmann::json;

inline json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

inline std::string child(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

inline std::string index(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

inline const json& require(const json& obj, std::string_view key, const std::string& path) {
    if (!obj.is_object()) throw Error(ErrorKind::ParseError, (path.empty() ? "<root>" : path) + ": expected an object");
    auto it = obj.find(std::string(key));
    if (it == obj.end()) throw Error(ErrorKind::ParseError, child(path, key) + ": missing field");
    return *it;
}

inline Rat rat_from_json(const json& j, const std::string& path) {
    try {
        if (j.is_string()) return parse_rat(j.get<std::string>());
        if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float()) return parse_rat(j.dump());
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    throw Error(ErrorKind::ParseError, path + ": expected a rational (\"p/q\" or integer)");
}

inline Vec vec_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, path + ": expected an array");
    Vec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rat_from_json(j[i], index(path, i)));
    return out;
}

inline long long int_from_json(const json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) throw Error(ErrorKind::ParseError, path + ": expected an integer");
    return j.get<long long>();
}

inline json rat_to_json(const Rat& x) { return json{{"exact", to_string(x)}, {"decimal", to_double(x)}}; }

inline json vec_to_json(std::span<const Rat> v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rat_to_json(x));
    return arr;
}

}  // namespace kstab::detail

#endif
