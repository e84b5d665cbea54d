#include "json_io.hpp"

#include <algorithm>

namespace skewring::jsonio {

namespace {

std::string in(std::string_view where) { return where.empty() ? "" : " in " + std::string(where); }

void dump_into(const json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(key).dump() + ": ";
      dump_into(value, depth + 1, out);
    }
    out += "\n" + close + "}";
    return;
  }
  const bool flat = std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
  if (v.is_array() && !v.empty() && !flat) {
    out += "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ",\n";
      out += pad;
      dump_into(v[k], depth + 1, out);
    }
    out += "\n" + close + "]";
    return;
  }
  out += v.dump();
}

}  // namespace

std::string dump_pretty(const json& value) {
  std::string out;
  dump_into(value, 0, out);
  return out + "\n";
}

json parse(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string(what) + " is not valid JSON: " + e.what());
  }
}

void allow_only(const json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) fail(ErrorKind::Parse, "expected an object" + in(where));
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || a == key;
    if (!known) fail(ErrorKind::Parse, "unknown field '" + key + "'" + in(where));
  }
}

const json& field(const json& obj, std::string_view key, std::string_view where) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(ErrorKind::Parse, "missing field '" + std::string(key) + "'" + in(where));
  return *it;
}

std::uint64_t get_uint(const json& obj, std::string_view key, std::string_view where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_unsigned()) {
    fail(ErrorKind::Parse, "field '" + std::string(key) + "' must be a nonnegative integer" + in(where));
  }
  return v.get<std::uint64_t>();
}

std::int64_t get_int(const json& obj, std::string_view key, std::string_view where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) {
    fail(ErrorKind::Parse, "field '" + std::string(key) + "' must be an integer" + in(where));
  }
  return v.get<std::int64_t>();
}

std::string get_string(const json& obj, std::string_view key, std::string_view where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) fail(ErrorKind::Parse, "field '" + std::string(key) + "' must be a string" + in(where));
  return v.get<std::string>();
}

bool get_bool(const json& obj, std::string_view key, std::string_view where, bool fallback) {
  const auto it = obj.find(std::string(key));
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) fail(ErrorKind::Parse, "field '" + std::string(key) + "' must be a boolean" + in(where));
  return it->get<bool>();
}

void expect_schema(const json& obj, std::string_view schema) {
  if (!obj.is_object()) fail(ErrorKind::Parse, "document must be a JSON object");
  const std::string found = get_string(obj, "schema", "document");
  if (found != schema) {
    fail(ErrorKind::Parse, "unsupported schema '" + found + "', expected '" + std::string(schema) + "'");
  }
}

json envelope_to_json(const Envelope& e) {
  switch (e.kind) {
    case EnvelopeKind::Exhaustive:
      return {{"kind", "exhaustive"}};
    case EnvelopeKind::Degree:
      return {{"kind", "degree"}, {"degree", e.degree}};
    case EnvelopeKind::Window:
      return {{"kind", "window"}, {"m", e.window.m}, {"n", e.window.n}, {"t", e.window.t}, {"s", e.window.s}};
    case EnvelopeKind::Truncation:
      return {{"kind", "truncation"}, {"order", e.order}, {"min_exp", e.min_exp}, {"free", e.free}};
  }
  return {};
}

Envelope envelope_from_json(const json& obj) {
  const std::string where = "envelope";
  const std::string kind = get_string(obj, "kind", where);
  if (kind == "exhaustive") {
    allow_only(obj, {"kind"}, where);
    return Envelope::exhaustive();
  }
  if (kind == "degree") {
    allow_only(obj, {"kind", "degree"}, where);
    return Envelope::degree_bound(get_uint(obj, "degree", where));
  }
  if (kind == "window") {
    allow_only(obj, {"kind", "m", "n", "t", "s"}, where);
    return Envelope::laurent_window({get_uint(obj, "m", where), get_uint(obj, "n", where),
                                     get_uint(obj, "t", where), get_uint(obj, "s", where)});
  }
  if (kind == "truncation") {
    allow_only(obj, {"kind", "order", "min_exp", "free"}, where);
    const auto min_exp = obj.contains("min_exp") ? get_int(obj, "min_exp", where) : 0;
    if (min_exp != 0 && min_exp != -1) fail(ErrorKind::Parse, "truncation min_exp must be 0 or -1");
    Envelope e = Envelope::truncation(get_uint(obj, "order", where), min_exp == -1);
    if (obj.contains("free")) e.free = get_uint(obj, "free", where);
    return e;
  }
  fail(ErrorKind::Parse, "unknown envelope kind '" + kind + "'");
}

PropertyId property_from_json(const json& value) {
  if (!value.is_string()) fail(ErrorKind::Parse, "property must be a string");
  const auto id = property_from_name(value.get<std::string>());
  if (!id) fail(ErrorKind::Parse, "unknown property '" + value.get<std::string>() + "'");
  return *id;
}

}  // namespace skewring::jsonio
