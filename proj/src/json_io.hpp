#pragma once

// JSON plumbing shared by the serializers and the corpus manifest. Kept out
// of the public headers so callers never see the JSON library.

#include <initializer_list>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "skewring/deciders.hpp"

namespace skewring::jsonio {

// std::map-backed objects: keys come out sorted, so dumps are canonical.
using json = nlohmann::json;

json parse(std::string_view text, std::string_view what);

// Throws Error(Parse) naming the first key of `obj` not in `allowed`.
void allow_only(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where);
const json& field(const json& obj, std::string_view key, std::string_view where);
std::uint64_t get_uint(const json& obj, std::string_view key, std::string_view where);
std::int64_t get_int(const json& obj, std::string_view key, std::string_view where);
std::string get_string(const json& obj, std::string_view key, std::string_view where);
bool get_bool(const json& obj, std::string_view key, std::string_view where, bool fallback);
void expect_schema(const json& obj, std::string_view schema);

// Indented like dump(2), but arrays of scalars stay on one line. Ends with a
// newline.
std::string dump_pretty(const json& value);

json envelope_to_json(const Envelope& envelope);
Envelope envelope_from_json(const json& obj);
PropertyId property_from_json(const json& value);

}  // namespace skewring::jsonio
