#include "skewring/serialize.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "json_io.hpp"
#include "skewring/skew_poly.hpp"

namespace skewring {

using jsonio::json;

namespace {

constexpr std::string_view kRingSchema = "skewring.ring/1";
constexpr std::string_view kVerdictSchema = "skewring.verdict/1";

// Element reference: a label string or an index. Indices are range-checked
// here only when `check_range`; verdict witnesses leave that to replay so the
// error names the witness.
Index element_ref(const FiniteRing& R, const json& v, std::string_view where, bool check_range = true) {
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    const auto found = R.find_label(text);
    if (!found) fail(ErrorKind::Parse, "unknown element '" + text + "' in " + std::string(where));
    return *found;
  }
  if (v.is_number_unsigned()) {
    const auto raw = v.get<std::uint64_t>();
    if (check_range && raw >= R.size()) {
      fail(ErrorKind::InvalidArgument, "element index " + std::to_string(raw) + " in " + std::string(where) +
                                           " is outside the ring of size " + std::to_string(R.size()));
    }
    if (raw > UINT32_MAX) fail(ErrorKind::InvalidArgument, "element index out of range in " + std::string(where));
    return static_cast<Index>(raw);
  }
  fail(ErrorKind::Parse, "elements in " + std::string(where) + " must be labels or indices");
}

std::vector<Index> element_list(const FiniteRing& R, const json& v, std::string_view where) {
  if (!v.is_array()) fail(ErrorKind::Parse, std::string(where) + " must be an array");
  std::vector<Index> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(element_ref(R, e, where));
  return out;
}

// rows x cols table of indices below `bound`, flattened row-major.
std::vector<Index> index_table(const json& v, std::size_t rows, std::size_t cols, std::size_t bound,
                               std::string_view where) {
  auto bad = [&](const std::string& why) { fail(ErrorKind::Parse, std::string(where) + ": " + why); };
  if (!v.is_array() || v.size() != rows) bad("expected " + std::to_string(rows) + " rows");
  std::vector<Index> out;
  out.reserve(rows * cols);
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols) bad("expected rows of length " + std::to_string(cols));
    for (const auto& x : row) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= bound) {
        bad("entries must be indices below " + std::to_string(bound));
      }
      out.push_back(static_cast<Index>(x.get<std::uint64_t>()));
    }
  }
  return out;
}

std::vector<std::string> label_list(const json& obj, std::size_t n, std::string_view where) {
  std::vector<std::string> labels;
  if (!obj.contains("labels")) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
  }
  const json& v = obj.at("labels");
  if (!v.is_array() || v.size() != n) {
    fail(ErrorKind::Parse, std::string(where) + ": labels must list " + std::to_string(n) + " strings");
  }
  for (const auto& l : v) {
    if (!l.is_string()) fail(ErrorKind::Parse, std::string(where) + ": labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

std::size_t square_side(const json& obj, std::string_view key, std::string_view where) {
  const json& t = jsonio::field(obj, key, where);
  if (!t.is_array() || t.empty()) fail(ErrorKind::Parse, std::string(where) + ": " + std::string(key) + " must be a nonempty table");
  return t.size();
}

Endomorphism builtin_endomorphism(const FiniteRing& R, const std::string& name) {
  if (name == "identity") return identity_endomorphism(R);
  if (name == "zero") return zero_endomorphism(R);
  if (name == "negation") return negation_endomorphism(R);
  if (name == "swap") return swap_endomorphism(R);
  if (name == "negate_second_component") return negate_second_component(R);
  if (name == "frobenius") return frobenius(R);
  fail(ErrorKind::Parse, "unknown builtin endomorphism '" + name + "'");
}

Endomorphism endomorphism_from_json(const FiniteRing& R, const json& v) {
  if (v.is_string()) return builtin_endomorphism(R, v.get<std::string>());
  if (v.is_array()) {
    auto images = element_list(R, v, "endomorphism");
    if (images.size() != R.size()) {
      fail(ErrorKind::Parse, "endomorphism lists " + std::to_string(images.size()) + " images for a ring of size " +
                                 std::to_string(R.size()));
    }
    return table_endomorphism(R, std::move(images));
  }
  if (v.is_object()) {
    jsonio::allow_only(v, {"images", "label"}, "endomorphism");
    auto images = element_list(R, jsonio::field(v, "images", "endomorphism"), "endomorphism");
    if (images.size() != R.size()) {
      fail(ErrorKind::Parse, "endomorphism lists " + std::to_string(images.size()) + " images for a ring of size " +
                                 std::to_string(R.size()));
    }
    const std::string label = v.contains("label") ? jsonio::get_string(v, "label", "endomorphism") : "images";
    return table_endomorphism(R, std::move(images), label);
  }
  fail(ErrorKind::Parse, "endomorphism must be a builtin name, an image list or an object");
}

struct Built {
  FiniteRing ring;
  std::optional<Endomorphism> endo;
};

Built build(const json& doc, const RingLimits& limits, bool top);

Built finish(const json& doc, FiniteRing ring, std::optional<Endomorphism> inherited) {
  if (doc.contains("label")) {
    ring = ring.with_label(jsonio::get_string(doc, "label", "ring"));
    if (inherited) {
      std::vector<Index> images(inherited->images().begin(), inherited->images().end());
      inherited = table_endomorphism(ring, std::move(images), inherited->label());
    }
  }
  if (doc.contains("endomorphism")) return {ring, endomorphism_from_json(ring, doc.at("endomorphism"))};
  return {ring, std::move(inherited)};
}

Built build(const json& doc, const RingLimits& limits, bool top) {
  if (!doc.is_object()) fail(ErrorKind::Parse, "a ring description must be an object");
  const std::string kind = jsonio::get_string(doc, "kind", "ring");
  auto allow = [&](std::initializer_list<std::string_view> extra) {
    std::vector<std::string_view> keys{"kind", "label", "endomorphism"};
    if (top) keys.push_back("schema");
    keys.insert(keys.end(), extra.begin(), extra.end());
    for (const auto& [key, value] : doc.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail(ErrorKind::Parse, "unknown field '" + key + "' in " + kind + " ring");
      }
    }
  };

  if (kind == "zmod") {
    allow({"n"});
    const auto n = jsonio::get_uint(doc, "n", "zmod ring");
    if (n > limits.size_cap) {
      fail(ErrorKind::SizeCap, "Z" + std::to_string(n) + " exceeds the size cap of " + std::to_string(limits.size_cap));
    }
    return finish(doc, make_zmod(n, limits), std::nullopt);
  }
  if (kind == "galois_field") {
    allow({"p", "k"});
    const auto p = jsonio::get_uint(doc, "p", "galois_field ring");
    const auto k = jsonio::get_uint(doc, "k", "galois_field ring");
    if (p > 65536 || k > 64) fail(ErrorKind::SizeCap, "galois field parameters exceed the size cap");
    return finish(doc, make_galois_field(static_cast<unsigned>(p), static_cast<unsigned>(k), limits), std::nullopt);
  }
  if (kind == "product") {
    allow({"factors"});
    const json& factors = jsonio::field(doc, "factors", "product ring");
    if (!factors.is_array() || factors.size() != 2) fail(ErrorKind::Parse, "product ring needs exactly two factors");
    const Built a = build(factors[0], limits, false), b = build(factors[1], limits, false);
    FiniteRing P = make_direct_product(a.ring, b.ring, limits);
    std::optional<Endomorphism> endo;
    if (a.endo || b.endo) {
      endo = product_endomorphism(P, a.endo ? *a.endo : identity_endomorphism(a.ring),
                                  b.endo ? *b.endo : identity_endomorphism(b.ring));
    }
    return finish(doc, P, std::move(endo));
  }
  if (kind == "trivial_extension") {
    allow({"base", "module"});
    const Built base = build(jsonio::field(doc, "base", "trivial_extension ring"), limits, false);
    if (base.endo) {
      fail(ErrorKind::Parse, "an endomorphism of a trivial-extension base is not lifted; give it on the extension");
    }
    const json& mod = jsonio::field(doc, "module", "trivial_extension ring");
    const std::size_t n = base.ring.size();
    if (mod.is_string()) {
      if (mod.get<std::string>() != "regular") fail(ErrorKind::Parse, "module must be \"regular\" or a table object");
      return finish(doc, make_trivial_extension(Bimodule::regular(base.ring), limits), std::nullopt);
    }
    jsonio::allow_only(mod, {"add", "left", "right", "labels"}, "module");
    const std::size_t m = square_side(mod, "add", "module");
    if (m > limits.size_cap) fail(ErrorKind::SizeCap, "module exceeds the size cap");
    auto add = index_table(mod.at("add"), m, m, m, "module add");
    auto left = index_table(jsonio::field(mod, "left", "module"), n, m, m, "module left action");
    auto right = index_table(jsonio::field(mod, "right", "module"), m, n, m, "module right action");
    const auto M = Bimodule::from_tables(base.ring, std::move(add), std::move(left), std::move(right),
                                         label_list(mod, m, "module"));
    return finish(doc, make_trivial_extension(M, limits), std::nullopt);
  }
  if (kind == "table") {
    allow({"add", "mul", "labels"});
    const std::size_t n = square_side(doc, "add", "table ring");
    if (n > limits.size_cap) {
      fail(ErrorKind::SizeCap, "table of size " + std::to_string(n) + " exceeds the size cap of " +
                                   std::to_string(limits.size_cap));
    }
    auto add = index_table(doc.at("add"), n, n, n, "add table");
    auto mul = index_table(jsonio::field(doc, "mul", "table ring"), n, n, n, "mul table");
    return finish(doc, make_table_ring(std::move(add), std::move(mul), label_list(doc, n, "table ring"), "table", limits),
                  std::nullopt);
  }
  if (kind == "quotient") {
    allow({"base", "ideal"});
    const Built base = build(jsonio::field(doc, "base", "quotient ring"), limits, false);
    const auto members = element_list(base.ring, jsonio::field(doc, "ideal", "quotient ring"), "ideal");
    const Ideal I = Ideal::from_members(base.ring, members);
    Quotient Q = make_quotient(I);
    std::optional<Endomorphism> endo;
    if (base.endo) endo = induced_endomorphism(*base.endo, I, Q);
    return finish(doc, Q.ring, std::move(endo));
  }
  fail(ErrorKind::Parse, "unknown ring kind '" + kind + "'");
}

json ring_json(const Endomorphism& alpha) {
  const FiniteRing& R = alpha.ring();
  const std::size_t n = R.size();
  json add = json::array(), mul = json::array();
  for (Index a = 0; a < n; ++a) {
    json ra = json::array(), rm = json::array();
    for (Index b = 0; b < n; ++b) {
      ra.push_back(R.add(a, b));
      rm.push_back(R.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  json images = json::array();
  for (Index x : alpha.images()) images.push_back(x);
  return {{"kind", "table"},
          {"label", R.label()},
          {"labels", R.element_labels()},
          {"add", std::move(add)},
          {"mul", std::move(mul)},
          {"endomorphism", {{"images", std::move(images)}, {"label", alpha.label()}}}};
}

std::string_view kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Elements: return "elements";
    case WitnessKind::Polynomial: return "polynomial";
    case WitnessKind::Laurent: return "laurent";
    case WitnessKind::Series: return "series";
  }
  return "elements";
}

WitnessKind kind_from(const std::string& s) {
  if (s == "elements") return WitnessKind::Elements;
  if (s == "polynomial") return WitnessKind::Polynomial;
  if (s == "laurent") return WitnessKind::Laurent;
  if (s == "series") return WitnessKind::Series;
  fail(ErrorKind::Parse, "unknown witness kind '" + s + "'");
}

std::string label_text(const FiniteRing& R, Index a) {
  return a < R.size() ? R.element_label(a) : "#" + std::to_string(a);
}

// Coefficient window as "c0 + c1*x + ...", exponents starting at min_exp.
std::string window_text(const Endomorphism& alpha, std::int64_t min_exp, const std::vector<Index>& c) {
  const FiniteRing& R = alpha.ring();
  if (std::any_of(c.begin(), c.end(), [&](Index a) { return a >= R.size(); })) {
    std::string out = "[";
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? " " : "") + label_text(R, c[k]);
    return out + "] from x^" + std::to_string(min_exp);
  }
  const SkewPolyRing ctx(alpha);
  if (min_exp >= 0) {
    std::vector<Index> padded(static_cast<std::size_t>(min_exp), R.zero());
    padded.insert(padded.end(), c.begin(), c.end());
    return ctx.render(ctx.poly(std::move(padded)));
  }
  return ctx.render(ctx.laurent(min_exp, c));
}

// Inverse of window_text for well-formed witnesses.
std::pair<std::int64_t, std::vector<Index>> parse_window(const Endomorphism& alpha, const std::string& text,
                                                         WitnessKind kind) {
  const SkewPolyRing ctx(alpha);
  std::int64_t min_exp = 0;
  std::vector<Index> c;
  try {
    c = ctx.parse_poly(text).coeffs();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse || text.find("^-") == std::string::npos) throw;
    if (!alpha.is_automorphism()) fail(ErrorKind::Parse, "negative exponents need an automorphism: " + text);
    const auto L = ctx.parse_laurent(text);
    min_exp = L.min_exp();
    c = L.coeffs();
  }
  if (kind != WitnessKind::Polynomial) {
    const FiniteRing& R = alpha.ring();
    std::size_t lead = 0;
    while (lead < c.size() && R.is_zero(c[lead])) ++lead;
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    min_exp += static_cast<std::int64_t>(lead);
  }
  return {min_exp, std::move(c)};
}

}  // namespace

Endomorphism parse_ring_document(std::string_view text, RingLimits limits) {
  const json doc = jsonio::parse(text, "ring document");
  jsonio::expect_schema(doc, kRingSchema);
  Built b = build(doc, limits, true);
  if (b.endo) return *b.endo;
  return identity_endomorphism(b.ring);
}

std::string ring_document(const Endomorphism& alpha) {
  json doc = ring_json(alpha);
  doc["schema"] = kRingSchema;
  return jsonio::dump_pretty(doc);
}

std::string verdict_record(const Endomorphism& alpha, const Verdict& v) {
  const FiniteRing& R = alpha.ring();
  json doc = {{"schema", kVerdictSchema},
              {"property", property_name(v.property)},
              {"envelope", jsonio::envelope_to_json(v.envelope)},
              {"outcome", v.holds ? "holds" : "fails"},
              {"ring_label", v.ring_label},
              {"endomorphism_label", v.endo_label},
              {"ring", ring_json(alpha)}};
  if (v.witness) {
    const Witness& w = *v.witness;
    json wj = {{"kind", kind_name(w.kind)}};
    if (w.kind == WitnessKind::Elements) {
      json elems = json::array();
      for (Index a : w.elements) elems.push_back(label_text(R, a));
      wj["elements"] = std::move(elems);
    } else {
      wj["p"] = window_text(alpha, w.p_min_exp, w.p);
      wj["q"] = window_text(alpha, w.q_min_exp, w.q);
      wj["pair"] = {w.i, w.j};
      wj["twist"] = w.twist;
      if (w.middle) wj["middle"] = label_text(R, *w.middle);
    }
    if (w.offending) wj["offending"] = label_text(R, *w.offending);
    doc["witness"] = std::move(wj);
  }
  return jsonio::dump_pretty(doc);
}

VerdictRecord parse_verdict_record(std::string_view text, RingLimits limits) {
  const json doc = jsonio::parse(text, "verdict record");
  jsonio::expect_schema(doc, kVerdictSchema);
  jsonio::allow_only(doc, {"schema", "property", "envelope", "outcome", "ring_label", "endomorphism_label", "ring", "witness"},
                     "verdict record");
  json ring = jsonio::field(doc, "ring", "verdict record");
  if (!ring.is_object()) fail(ErrorKind::Parse, "verdict ring must be an object");
  Built b = build(ring, limits, false);
  Endomorphism alpha = b.endo ? *b.endo : identity_endomorphism(b.ring);
  const FiniteRing& R = alpha.ring();

  Verdict v;
  v.property = jsonio::property_from_json(jsonio::field(doc, "property", "verdict record"));
  v.envelope = jsonio::envelope_from_json(jsonio::field(doc, "envelope", "verdict record"));
  const std::string outcome = jsonio::get_string(doc, "outcome", "verdict record");
  if (outcome != "holds" && outcome != "fails") fail(ErrorKind::Parse, "outcome must be \"holds\" or \"fails\"");
  v.holds = outcome == "holds";
  v.ring_label = doc.contains("ring_label") ? jsonio::get_string(doc, "ring_label", "verdict record") : R.label();
  v.endo_label = doc.contains("endomorphism_label") ? jsonio::get_string(doc, "endomorphism_label", "verdict record")
                                                    : alpha.label();
  if (doc.contains("witness")) {
    const json& wj = doc.at("witness");
    jsonio::allow_only(wj, {"kind", "elements", "p", "q", "pair", "twist", "middle", "offending"}, "witness");
    Witness w;
    w.kind = kind_from(jsonio::get_string(wj, "kind", "witness"));
    auto ref = [&](const json& x) { return element_ref(R, x, "witness", false); };
    if (w.kind == WitnessKind::Elements) {
      const json& elems = jsonio::field(wj, "elements", "witness");
      if (!elems.is_array()) fail(ErrorKind::Parse, "witness elements must be an array");
      for (const auto& e : elems) w.elements.push_back(ref(e));
    } else {
      std::tie(w.p_min_exp, w.p) = parse_window(alpha, jsonio::get_string(wj, "p", "witness"), w.kind);
      std::tie(w.q_min_exp, w.q) = parse_window(alpha, jsonio::get_string(wj, "q", "witness"), w.kind);
      const json& pair = jsonio::field(wj, "pair", "witness");
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
        fail(ErrorKind::Parse, "witness pair must be two integers");
      }
      w.i = pair[0].get<std::int64_t>();
      w.j = pair[1].get<std::int64_t>();
      w.twist = jsonio::get_int(wj, "twist", "witness");
      if (wj.contains("middle")) w.middle = ref(wj.at("middle"));
    }
    if (wj.contains("offending")) w.offending = ref(wj.at("offending"));
    v.witness = std::move(w);
  }
  return {std::move(alpha), std::move(v)};
}

std::string describe_structure(const Endomorphism& alpha) {
  const FiniteRing& R = alpha.ring();
  std::ostringstream out;
  out << "size " << R.size() << ", " << (R.is_unital() ? "unital" : "non-unital") << ", "
      << (alpha.is_automorphism() ? "automorphism" : "non-injective endomorphism") << ", orbit ("
      << alpha.orbit().preperiod << "," << alpha.orbit().period << ")";
  return out.str();
}

std::string render_verdict(const Endomorphism& alpha, const Verdict& v) {
  const FiniteRing& R = alpha.ring();
  std::ostringstream out;
  out << property_name(v.property) << " over " << v.ring_label << " with " << v.endo_label << "\n";
  out << "envelope: " << v.envelope.describe() << "\n";
  out << "outcome: " << (v.holds ? "holds" : "fails") << "\n";
  if (!v.witness) return out.str();
  const Witness& w = *v.witness;
  if (w.kind == WitnessKind::Elements) {
    out << "elements:";
    for (Index a : w.elements) out << " " << label_text(R, a);
    if (w.elements.empty()) out << " (none)";
    out << "\n";
  } else {
    out << "p = " << window_text(alpha, w.p_min_exp, w.p) << "\n";
    out << "q = " << window_text(alpha, w.q_min_exp, w.q) << "\n";
    out << "pair (i, j) = (" << w.i << ", " << w.j << ")";
    if (w.middle) out << ", r = " << label_text(R, *w.middle);
    out << ", twist " << w.twist << "\n";
  }
  if (w.offending) out << "offending value: " << label_text(R, *w.offending) << "\n";
  return out.str();
}

}  // namespace skewring
