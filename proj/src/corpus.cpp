#include "skewring/corpus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "json_io.hpp"

namespace skewring {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

void require_odd_prime(unsigned p, std::string_view what) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::string(what) + ": " + std::to_string(p) + " is not prime");
  if (p == 2) {
    fail(ErrorKind::InvalidArgument,
         std::string(what) + ": over Z2 the sign flip is the identity map, so the example degenerates");
  }
}

// Ring on pairs (a, b) over Z_p, index a * p + b, componentwise addition.
FiniteRing pair_ring(unsigned p, const std::function<std::pair<unsigned, unsigned>(
                                     unsigned, unsigned, unsigned, unsigned)>& product,
                     std::string label) {
  const std::size_t n = std::size_t{p} * p;
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) {
      const std::size_t x = a * p + b;
      labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (unsigned c = 0; c < p; ++c) {
        for (unsigned d = 0; d < p; ++d) {
          const std::size_t y = c * p + d;
          add[x * n + y] = static_cast<Index>(((a + c) % p) * p + (b + d) % p);
          const auto [u, v] = product(a, b, c, d);
          mul[x * n + y] = static_cast<Index>((u % p) * p + v % p);
        }
      }
    }
  }
  return make_table_ring(std::move(add), std::move(mul), std::move(labels), std::move(label));
}

std::string status_word(HarnessRow::Status s) {
  switch (s) {
    case HarnessRow::Status::Pass: return "PASS";
    case HarnessRow::Status::Fail: return "FAIL";
    case HarnessRow::Status::Skipped: return "SKIP";
  }
  return "";
}

std::string outcome_word(bool holds) { return holds ? "holds" : "fails"; }

std::size_t envelope_reach(const Envelope& e) {
  switch (e.kind) {
    case EnvelopeKind::Exhaustive: return 0;
    case EnvelopeKind::Degree: return e.degree;
    case EnvelopeKind::Window: return std::max(e.window.m + e.window.n, e.window.t + e.window.s);
    case EnvelopeKind::Truncation: return e.free == 0 ? 0 : e.free - 1;
  }
  return 0;
}

std::string check_name(PropertyId id, const Envelope& e) {
  return std::string(property_name(id)) + " [" + e.describe() + "]";
}

// Lazily computed verdicts for one ring and map. A budget refusal is cached
// as an absent verdict.
class VerdictCache {
 public:
  VerdictCache(Endomorphism alpha, SearchOptions options) : alpha_(std::move(alpha)), options_(options) {}

  const std::optional<Verdict>& get(PropertyId id, const Envelope& env) {
    const auto key = std::make_pair(std::string(property_name(id)), env.describe());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::optional<Verdict> v;
    try {
      v = check_property(alpha_, id, env, options_);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Budget) throw;
    }
    return cache_.emplace(key, std::move(v)).first->second;
  }

  std::optional<bool> holds(PropertyId id, const Envelope& env) {
    const auto& v = get(id, env);
    if (!v) return std::nullopt;
    return v->holds;
  }

  const Endomorphism& alpha() const { return alpha_; }

 private:
  Endomorphism alpha_;
  SearchOptions options_;
  std::map<std::pair<std::string, std::string>, std::optional<Verdict>> cache_;
};

std::string verdict_word(const std::optional<bool>& v) {
  if (!v) return "over budget";
  return outcome_word(*v);
}

}  // namespace

// Builders ---------------------------------------------------------------------------

Endomorphism build_example1() {
  const auto z2 = make_zmod(2);
  return swap_endomorphism(make_direct_product(z2, z2));
}

Endomorphism build_example2_quotient() {
  const auto z4 = make_zmod(4);
  return negate_second_component(make_trivial_extension(Bimodule::regular(z4)));
}

Endomorphism build_example3_analogue() {
  const auto z5 = make_zmod(5);
  const auto T = make_trivial_extension(Bimodule::regular(z5));
  std::vector<Index> images(T.size());
  for (Index x = 0; x < T.size(); ++x) {
    const Index a = x / 5, s = x % 5;
    images[x] = a * 5 + (3 * s) % 5;
  }
  return table_endomorphism(T, std::move(images), "(a,s)->(a,3s)");
}

Endomorphism build_example4(unsigned p) {
  require_odd_prime(p, "example4");
  const auto R = pair_ring(
      p, [p](unsigned a, unsigned, unsigned c, unsigned d) { return std::make_pair(a * c % p, a * d % p); },
      "UpperRow(Z" + std::to_string(p) + ")");
  std::vector<Index> images(R.size());
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) images[a * p + b] = static_cast<Index>(a * p + (p - b) % p);
  }
  return table_endomorphism(R, std::move(images), "(a,b)->(a,-b)");
}

std::pair<Endomorphism, Endomorphism> build_example5(unsigned p) {
  require_odd_prime(p, "example5");
  const auto R1 = pair_ring(
      p, [p](unsigned a, unsigned b, unsigned, unsigned d) { return std::make_pair(a * d % p, b * d % p); },
      "RightColumn(Z" + std::to_string(p) + ")");
  std::vector<Index> images(R1.size());
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) images[a * p + b] = static_cast<Index>(((p - a) % p) * p + b);
  }
  auto alpha1 = table_endomorphism(R1, std::move(images), "(a,b)->(-a,b)");

  std::vector<Index> add(std::size_t{p} * p), mul(std::size_t{p} * p, 0);
  for (unsigned a = 0; a < p; ++a) {
    for (unsigned b = 0; b < p; ++b) add[a * p + b] = (a + b) % p;
  }
  std::vector<std::string> labels(p);
  for (unsigned a = 0; a < p; ++a) labels[a] = std::to_string(a);
  const auto R2 = make_table_ring(std::move(add), std::move(mul), std::move(labels),
                                  "NullCorner(Z" + std::to_string(p) + ")");
  return {std::move(alpha1), negation_endomorphism(R2)};
}

Endomorphism build_field_frobenius(unsigned p, unsigned k) { return frobenius(make_galois_field(p, k)); }

// Manifest ---------------------------------------------------------------------------

std::vector<CorpusEntry> load_corpus(std::string_view manifest_text) {
  using jsonio::json;
  const json doc = jsonio::parse(manifest_text, "corpus manifest");
  jsonio::expect_schema(doc, "skewring.corpus/1");
  jsonio::allow_only(doc, {"schema", "entries"}, "corpus manifest");
  const json& entries = jsonio::field(doc, "entries", "corpus manifest");
  if (!entries.is_array()) fail(ErrorKind::Parse, "entries must be an array");

  std::vector<CorpusEntry> out;
  for (const json& e : entries) {
    const std::string name = jsonio::get_string(e, "name", "corpus entry");
    const std::string where = "corpus entry " + name;
    jsonio::allow_only(e, {"name", "builder", "params", "exploratory", "expect"}, where);
    const std::string builder = jsonio::get_string(e, "builder", where);
    const json params = e.contains("params") ? e.at("params") : json::object();
    jsonio::allow_only(params, {"p", "k"}, where + " params");
    auto param = [&](std::string_view key, unsigned fallback) {
      return params.contains(std::string(key))
                 ? static_cast<unsigned>(jsonio::get_uint(params, key, where))
                 : fallback;
    };

    std::optional<Endomorphism> endo;
    if (builder == "example1") {
      endo = build_example1();
    } else if (builder == "example2_quotient") {
      endo = build_example2_quotient();
    } else if (builder == "example3_analogue") {
      endo = build_example3_analogue();
    } else if (builder == "example4") {
      endo = build_example4(param("p", 3));
    } else if (builder == "example5_r1") {
      endo = build_example5(param("p", 3)).first;
    } else if (builder == "example5_r2") {
      endo = build_example5(param("p", 3)).second;
    } else if (builder == "field_frobenius") {
      endo = build_field_frobenius(param("p", 2), param("k", 2));
    } else {
      fail(ErrorKind::Parse, "unknown builder '" + builder + "' in " + where);
    }

    CorpusEntry entry{name, *endo, jsonio::get_bool(e, "exploratory", where, false), {}};
    if (e.contains("expect")) {
      for (const json& x : e.at("expect")) {
        jsonio::allow_only(x, {"property", "envelope", "outcome", "provenance"}, where + " expectation");
        Expectation ex;
        ex.property = jsonio::property_from_json(jsonio::field(x, "property", where));
        ex.envelope = jsonio::envelope_from_json(jsonio::field(x, "envelope", where));
        const std::string outcome = jsonio::get_string(x, "outcome", where);
        if (outcome != "holds" && outcome != "fails") {
          fail(ErrorKind::Parse, "outcome must be 'holds' or 'fails' in " + where);
        }
        ex.holds = outcome == "holds";
        ex.provenance = jsonio::get_string(x, "provenance", where);
        if (ex.provenance != "published" && ex.provenance != "trivial" && ex.provenance != "derived") {
          fail(ErrorKind::Parse, "provenance must be published, trivial or derived in " + where);
        }
        entry.expected.push_back(std::move(ex));
      }
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].name == out[i - 1].name) fail(ErrorKind::Parse, "duplicate corpus entry " + out[i].name);
  }
  return out;
}

std::vector<CorpusEntry> default_corpus() { return load_corpus(default_manifest()); }

// Report -----------------------------------------------------------------------------

bool HarnessReport::passed() const { return count(HarnessRow::Status::Fail) == 0; }

std::size_t HarnessReport::count(HarnessRow::Status status) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const HarnessRow& r) { return r.status == status; }));
}

void HarnessReport::append(HarnessReport other) {
  rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
              std::make_move_iterator(other.rows.end()));
}

std::string HarnessReport::render() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << status_word(r.status) << "  " << r.entry << "  " << r.check;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
  }
  out << count(HarnessRow::Status::Pass) << " passed, " << count(HarnessRow::Status::Fail) << " failed, "
      << count(HarnessRow::Status::Skipped) << " skipped\n";
  return out.str();
}

// Harness ----------------------------------------------------------------------------

HarnessReport run_expectations(const CorpusEntry& entry, std::size_t max_degree,
                               const SearchOptions& options) {
  HarnessReport report;
  for (const auto& ex : entry.expected) {
    HarnessRow row{entry.name, "expect " + check_name(ex.property, ex.envelope), HarnessRow::Status::Pass, ""};
    if (envelope_reach(ex.envelope) > max_degree) {
      row.status = HarnessRow::Status::Skipped;
      row.detail = "beyond degree " + std::to_string(max_degree);
      report.rows.push_back(std::move(row));
      continue;
    }
    try {
      const Verdict v = check_property(entry.endo, ex.property, ex.envelope, options);
      if (v.holds != ex.holds) {
        row.status = HarnessRow::Status::Fail;
        row.detail = "expected " + outcome_word(ex.holds) + " (" + ex.provenance + "), got " + outcome_word(v.holds);
      } else if (!v.holds) {
        const auto r = replay(entry.endo, v);
        row.status = r.reproduced ? HarnessRow::Status::Pass : HarnessRow::Status::Fail;
        row.detail = outcome_word(v.holds) + " (" + ex.provenance + "); witness replay: " + r.detail;
      } else {
        row.detail = outcome_word(v.holds) + " (" + ex.provenance + ")";
      }
    } catch (const Error& e) {
      row.status = HarnessRow::Status::Fail;
      row.detail = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

HarnessReport run_theorem1_transport(const CorpusEntry& entry, std::uint64_t seed, std::size_t degree,
                                     const SearchOptions& options) {
  const FiniteRing& R = entry.ring();
  std::vector<Index> perm(R.size());
  std::iota(perm.begin(), perm.end(), Index{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto [S, sigma] = relabel(R, perm);
  const Endomorphism beta = transport(sigma, entry.endo);

  HarnessReport report;
  const Envelope env = Envelope::degree_bound(degree);
  for (PropertyId id : {PropertyId::AlphaSkewArmendariz, PropertyId::AlphaArmendariz,
                        PropertyId::QAlphaArmendariz, PropertyId::QAlphaSkewArmendariz}) {
    HarnessRow row{entry.name, "transport seed " + std::to_string(seed) + " " + check_name(id, env),
                   HarnessRow::Status::Pass, ""};
    try {
      const Verdict a = check_property(entry.endo, id, env, options);
      const Verdict b = check_property(beta, id, env, options);
      if (a.holds != b.holds || !(a.envelope == b.envelope)) {
        row.status = HarnessRow::Status::Fail;
        row.detail = "original " + outcome_word(a.holds) + ", transported " + outcome_word(b.holds);
      } else if (!a.holds) {
        // Move the original witness along sigma and replay it over S.
        Verdict moved = a;
        Witness& w = *moved.witness;
        for (auto& c : w.p) c = sigma(c);
        for (auto& c : w.q) c = sigma(c);
        if (w.middle) w.middle = sigma(*w.middle);
        if (w.offending) w.offending = sigma(*w.offending);
        const auto r = replay(beta, moved);
        row.status = r.reproduced ? HarnessRow::Status::Pass : HarnessRow::Status::Fail;
        row.detail = "both fail; moved witness " + std::string(r.reproduced ? "replays" : "does not replay: ") +
                     (r.reproduced ? "" : r.detail);
      } else {
        row.detail = "both hold";
      }
    } catch (const Error& e) {
      row.status = e.kind() == ErrorKind::Budget ? HarnessRow::Status::Skipped : HarnessRow::Status::Fail;
      row.detail = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

HarnessReport run_prop2_product(const CorpusEntry& first, const CorpusEntry& second, std::size_t degree,
                                const SearchOptions& options) {
  HarnessReport report;
  const std::string name = first.name + " x " + second.name;
  const FiniteRing product = make_direct_product(first.ring(), second.ring());
  const Endomorphism alpha = product_endomorphism(product, first.endo, second.endo);
  const Envelope env = Envelope::degree_bound(degree);
  for (PropertyId id : {PropertyId::AlphaArmendariz, PropertyId::AlphaSkewArmendariz}) {
    HarnessRow row{name, "product " + check_name(id, env), HarnessRow::Status::Pass, ""};
    try {
      const bool a = check_property(first.endo, id, env, options).holds;
      const bool b = check_property(second.endo, id, env, options).holds;
      if (!a || !b) {
        row.detail = "vacuous: factors " + outcome_word(a) + ", " + outcome_word(b);
      } else {
        const Verdict v = check_property(alpha, id, env, options);
        row.status = v.holds ? HarnessRow::Status::Pass : HarnessRow::Status::Fail;
        row.detail = "factors hold, product " + outcome_word(v.holds);
      }
    } catch (const Error& e) {
      row.status = e.kind() == ErrorKind::Budget ? HarnessRow::Status::Skipped : HarnessRow::Status::Fail;
      row.detail = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

HarnessReport run_laurent_consistency(const CorpusEntry& entry, std::size_t degree,
                                      const SearchOptions& options) {
  HarnessReport report;
  if (!entry.endo.is_automorphism()) {
    report.rows.push_back({entry.name, "laurent consistency", HarnessRow::Status::Skipped,
                           "map is not invertible"});
    return report;
  }
  if (degree == 0) fail(ErrorKind::InvalidArgument, "laurent consistency needs degree >= 1");

  // p' in the window maps to x p', q' to q' x: a bijection onto degree <= d
  // that preserves both the hypothesis and the vanishing of each conclusion.
  auto compare = [&](const std::string& check, const std::function<Verdict()>& plain,
                     const std::function<Verdict()>& laurent) {
    HarnessRow row{entry.name, check, HarnessRow::Status::Pass, ""};
    try {
      const Verdict a = plain();
      const Verdict b = laurent();
      row.status = a.holds == b.holds ? HarnessRow::Status::Pass : HarnessRow::Status::Fail;
      row.detail = "plain " + outcome_word(a.holds) + ", laurent " + outcome_word(b.holds);
    } catch (const Error& e) {
      row.status = e.kind() == ErrorKind::Budget ? HarnessRow::Status::Skipped : HarnessRow::Status::Fail;
      row.detail = e.what();
    }
    report.rows.push_back(std::move(row));
  };
  const LaurentWindow w{1, degree - 1, 1, degree - 1};
  compare("plain degree " + std::to_string(degree) + " vs laurent window (1," + std::to_string(degree - 1) +
              ",1," + std::to_string(degree - 1) + ")",
          [&] { return check_armendariz_family(entry.endo, degree, PropertyId::QAlphaSkewArmendariz, options); },
          [&] { return check_laurent_q_alpha_skew(entry.endo, w, options); });
  compare("power series vs laurent power series at N = " + std::to_string(degree + 1),
          [&] { return check_powerseries_q_alpha_skew(entry.endo, degree + 1, false, options); },
          [&] { return check_powerseries_q_alpha_skew(entry.endo, degree + 1, true, options); });
  return report;
}

HarnessReport run_implication_matrix(std::span<const CorpusEntry> entries, std::size_t degree,
                                     const SearchOptions& options) {
  HarnessReport report;
  const Envelope env = Envelope::degree_bound(degree);
  const Envelope all = Envelope::exhaustive();
  using P = PropertyId;

  for (const auto& entry : entries) {
    VerdictCache cache(entry.endo, options);
    const Endomorphism& alpha = entry.endo;
    const bool injective = alpha.is_injective();
    const bool keeps_one = alpha.preserves_one().value_or(false);

    struct Condition {
      std::string text;
      std::function<std::optional<bool>()> eval;
    };
    auto prop = [&](P id, const Envelope& e) {
      return Condition{std::string(property_name(id)), [&cache, id, e] { return cache.holds(id, e); }};
    };
    auto fact = [](std::string text, bool value) {
      return Condition{std::move(text), [value] { return std::optional<bool>(value); }};
    };
    struct Row {
      std::string name;
      std::vector<Condition> hypotheses;
      P conclusion;
      Envelope envelope;
    };
    const std::vector<Row> rows = {
        {"rigid => reduced", {prop(P::Rigid, all)}, P::Reduced, all},
        {"reduced => q-alpha-skew", {prop(P::Reduced, all)}, P::QAlphaSkewArmendariz, env},
        {"rigid => q-alpha-skew", {prop(P::Rigid, all)}, P::QAlphaSkewArmendariz, env},
        {"semicommutative, alpha-skew, alpha(1) = 1 => q-alpha-skew",
         {prop(P::Semicommutative, all), fact("alpha(1) = 1", keeps_one), prop(P::AlphaSkewArmendariz, env)},
         P::QAlphaSkewArmendariz,
         env},
        {"semicommutative, alpha-armendariz, unital => q-alpha-skew",
         {prop(P::Semicommutative, all), fact("unital", entry.ring().is_unital()),
          prop(P::AlphaArmendariz, env)},
         P::QAlphaSkewArmendariz,
         env},
        {"semicommutative, alpha-armendariz, unital => q-alpha",
         {prop(P::Semicommutative, all), fact("unital", entry.ring().is_unital()),
          prop(P::AlphaArmendariz, env)},
         P::QAlphaArmendariz,
         env},
        {"domain, alpha injective => q-alpha-skew",
         {prop(P::Domain, all), fact("alpha injective", injective)},
         P::QAlphaSkewArmendariz,
         env},
        {"domain, alpha injective => q-alpha",
         {prop(P::Domain, all), fact("alpha injective", injective)},
         P::QAlphaArmendariz,
         env},
        {"alpha-skew, alpha surjective => q-alpha-skew",
         {fact("alpha surjective", alpha.is_surjective()), prop(P::AlphaSkewArmendariz, env)},
         P::QAlphaSkewArmendariz,
         env},
        {"alpha-armendariz, alpha surjective => q-alpha-skew",
         {fact("alpha surjective", alpha.is_surjective()), prop(P::AlphaArmendariz, env)},
         P::QAlphaSkewArmendariz,
         env},
    };

    for (const auto& row : rows) {
      HarnessRow out{entry.name, "implication " + row.name, HarnessRow::Status::Pass, ""};
      bool established = true, vacuous = false;
      std::string why;
      for (const auto& h : row.hypotheses) {
        const auto value = h.eval();
        if (!value) {
          established = false;
          why = h.text + " is over budget";
          break;
        }
        if (!*value) {
          vacuous = true;
          why = h.text + " fails";
          break;
        }
      }
      if (vacuous) {
        out.detail = "vacuous, " + why;
      } else if (!established) {
        out.status = HarnessRow::Status::Skipped;
        out.detail = "not established, " + why;
      } else {
        const auto concl = cache.holds(row.conclusion, row.envelope);
        if (!concl) {
          out.status = HarnessRow::Status::Skipped;
          out.detail = "conclusion over budget";
        } else if (*concl) {
          out.detail = "hypotheses hold, conclusion holds";
        } else {
          out.status = HarnessRow::Status::Fail;
          out.detail = "hypotheses hold, conclusion " + verdict_word(concl);
        }
      }
      report.rows.push_back(std::move(out));
    }
    if (alpha.is_automorphism() && degree >= 1) report.append(run_laurent_consistency(entry, degree, options));
  }
  return report;
}

HarnessReport run_lemma1(const CorpusEntry& entry, const SearchOptions& options) {
  HarnessReport report;
  HarnessRow row{entry.name, "coefficient chains of degree <= 1 triples", HarnessRow::Status::Pass, ""};
  const Verdict gate = check_armendariz_family(entry.endo, 1, PropertyId::AlphaSkewArmendariz, options);
  if (!gate.holds) {
    row.status = HarnessRow::Status::Skipped;
    row.detail = "alpha-skew-armendariz fails at degree 1";
    report.rows.push_back(std::move(row));
    return report;
  }
  const FiniteRing& R = entry.ring();
  const Endomorphism& alpha = entry.endo;
  const SkewPolyRing ctx(alpha);
  const std::size_t n = R.size();
  const Index zero = R.zero();

  // Nonzero polynomials c0 + c1 x, as coefficient pairs.
  std::vector<std::array<Index, 2>> polys;
  for (Index c0 = 0; c0 < n; ++c0) {
    for (Index c1 = 0; c1 < n; ++c1) {
      if (c0 != zero || c1 != zero) polys.push_back({c0, c1});
    }
  }
  const auto a1 = alpha.power_map(1);
  const auto a2 = alpha.power_map(2);
  std::uint64_t zero_products = 0;
  for (const auto& p1 : polys) {
    for (const auto& p2 : polys) {
      // P1 P2 = e0 + e1 x + e2 x^2
      const Index e0 = R.mul(p1[0], p2[0]);
      const Index e1 = R.add(R.mul(p1[0], p2[1]), R.mul(p1[1], a1[p2[0]]));
      const Index e2 = R.mul(p1[1], a1[p2[1]]);
      for (const auto& p3 : polys) {
        // (P1 P2) P3, coefficient k: sum of e_i alpha^i(f_j).
        const Index f0 = p3[0], f1 = p3[1];
        if (R.mul(e0, f0) != zero) continue;
        if (R.add(R.mul(e0, f1), R.mul(e1, a1[f0])) != zero) continue;
        if (R.add(R.mul(e1, a1[f1]), R.mul(e2, a2[f0])) != zero) continue;
        if (R.mul(e2, a2[f1]) != zero) continue;
        ++zero_products;
        const std::array<SkewPoly, 3> trio{ctx.poly({p1[0], p1[1]}), ctx.poly({p2[0], p2[1]}),
                                           ctx.poly({p3[0], p3[1]})};
        for (std::size_t i1 = 0; i1 <= *trio[0].degree(); ++i1) {
          for (std::size_t i2 = 0; i2 <= *trio[1].degree(); ++i2) {
            for (std::size_t i3 = 0; i3 <= *trio[2].degree(); ++i3) {
              const std::array<std::size_t, 3> idx{i1, i2, i3};
              const Index value = lemma1_chain(ctx, trio, idx);
              if (value != zero) {
                row.status = HarnessRow::Status::Fail;
                row.detail = "P1 = " + ctx.render(trio[0]) + ", P2 = " + ctx.render(trio[1]) +
                             ", P3 = " + ctx.render(trio[2]) + ": chain (" + std::to_string(i1) + "," +
                             std::to_string(i2) + "," + std::to_string(i3) + ") = " + R.element_label(value);
                report.rows.push_back(std::move(row));
                return report;
              }
            }
          }
        }
      }
    }
  }
  row.detail = std::to_string(zero_products) + " zero products, every chain zero";
  report.rows.push_back(std::move(row));
  return report;
}

HarnessReport run_corpus(std::span<const CorpusEntry> corpus, std::span<const std::string> names,
                         std::size_t degree, const SearchOptions& options) {
  std::vector<CorpusEntry> selected;
  if (names.empty()) {
    selected.assign(corpus.begin(), corpus.end());
  } else {
    for (const auto& name : names) {
      const auto it = std::find_if(corpus.begin(), corpus.end(),
                                   [&](const CorpusEntry& e) { return e.name == name; });
      if (it == corpus.end()) fail(ErrorKind::InvalidArgument, "unknown corpus entry '" + name + "'");
      selected.push_back(*it);
    }
  }
  HarnessReport report;
  for (const auto& entry : selected) report.append(run_expectations(entry, degree, options));
  report.append(run_implication_matrix(selected, degree, options));
  return report;
}

}  // namespace skewring
