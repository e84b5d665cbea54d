// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion reports its wall time; those with a time
// limit fail when they exceed it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewring/corpus.hpp"
#include "skewring/deciders.hpp"
#include "skewring/skew_poly.hpp"

using namespace skewring;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  std::optional<double> limit_s;
  std::function<Outcome()> run;
};

// Collects failure notes; `ok` stays true only while every expectation holds.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok_ = false;
    if (notes_ < 5) out_ << (notes_ ? "; " : "") << what;
    ++notes_;
  }
  Outcome finish(const std::string& summary) const {
    if (ok_) return {true, summary};
    std::ostringstream s;
    s << summary << " | " << notes_ << " problem(s): " << out_.str();
    return {false, s.str()};
  }

 private:
  bool ok_ = true;
  int notes_ = 0;
  std::ostringstream out_;
};

// Criteria 3 and 5 cover the 25-element entry at degree 2 (25^6 pairs), which
// the library's default budget of 1e8 tuples would skip.
const SearchOptions kWideBudget{1'000'000'000, 0};

Index label(const FiniteRing& R, const char* text) {
  const auto found = R.find_label(text);
  if (!found) throw Error(ErrorKind::InvalidArgument, std::string("no element ") + text);
  return *found;
}

// Every polynomial (zero included) with at most `len` coefficients.
std::vector<std::vector<Index>> all_coeff_tuples(std::size_t n, std::size_t len) {
  std::vector<std::vector<Index>> out;
  std::size_t count = 1;
  for (std::size_t k = 0; k < len; ++k) count *= n;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Index> c(len);
    std::size_t rest = code;
    for (std::size_t k = 0; k < len; ++k) {
      c[k] = static_cast<Index>(rest % n);
      rest /= n;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string fail_rows(const HarnessReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    if (row.status == HarnessRow::Status::Fail) out += (out.empty() ? "" : "; ") + row.entry + ": " + row.check;
  }
  return out;
}

// A polynomial-witness failure: p R[x] q = 0 on every r x^k, and the
// recorded conclusion value a_i r alpha^twist(b_j) is nonzero.
bool sandwich_witness_holds(const Endomorphism& alpha, const Witness& w, std::string& why) {
  const SkewPolyRing ctx(alpha);
  const FiniteRing& R = alpha.ring();
  const auto P = ctx.poly(w.p), Q = ctx.poly(w.q);
  for (Index r = 0; r < R.size(); ++r) {
    for (std::size_t k = 0; k < alpha.orbit().envelope(); ++k) {
      if (!ctx.sandwich(P, r, k, Q).is_zero()) {
        why = "sandwich nonzero at r = " + R.element_label(r) + ", k = " + std::to_string(k);
        return false;
      }
    }
  }
  if (!w.middle || !w.offending) {
    why = "witness lacks a middle factor or value";
    return false;
  }
  const Index a = P.coeff(static_cast<std::size_t>(w.i), R.zero());
  const Index b = Q.coeff(static_cast<std::size_t>(w.j), R.zero());
  const Index value = R.mul(R.mul(a, *w.middle), alpha.apply_power(w.twist, b));
  if (R.is_zero(value) || value != *w.offending) {
    why = "conclusion value " + R.element_label(value) + " does not match";
    return false;
  }
  return true;
}

Outcome example_two() {
  Tally t;
  const Endomorphism alpha = build_example2_quotient();
  const FiniteRing& R = alpha.ring();
  t.expect(R.size() == 16, "ring size");

  const Verdict v = check_armendariz_family(alpha, 1, PropertyId::QAlphaSkewArmendariz);
  t.expect(!v.holds && v.witness, "decider does not report a failure at degree 1");
  std::string why;
  std::string found;
  if (v.witness) {
    t.expect(replay(alpha, v).reproduced, "decider witness does not replay");
    t.expect(sandwich_witness_holds(alpha, *v.witness, why), "decider witness: " + why);
    const SkewPolyRing ctx(alpha);
    found = ctx.render(ctx.poly(v.witness->p)) + " / " + ctx.render(ctx.poly(v.witness->q)) + " -> " +
            R.element_label(*v.witness->offending);
  }

  // The witness recorded with the construction: p = q = (2,0) + (2,1)x.
  Witness w;
  w.kind = WitnessKind::Polynomial;
  w.p = w.q = {label(R, "(2,0)"), label(R, "(2,1)")};
  w.i = 0;
  w.j = 1;
  w.middle = label(R, "(1,0)");
  w.twist = 0;
  w.offending = label(R, "(0,2)");
  const SkewPolyRing ctx(alpha);
  const auto P = ctx.poly(w.p);
  std::size_t zero_sandwiches = 0;
  for (Index r = 0; r < R.size(); ++r) {
    for (std::size_t k = 0; k < 2; ++k) zero_sandwiches += ctx.sandwich(P, r, k, P).is_zero() ? 1 : 0;
  }
  t.expect(zero_sandwiches == 32, "published p: " + std::to_string(zero_sandwiches) + "/32 sandwiches vanish");
  t.expect(sandwich_witness_holds(alpha, w, why), "published witness: " + why);
  Verdict published = v;
  published.holds = false;
  published.witness = w;
  t.expect(replay(alpha, published).reproduced, "published witness does not replay");
  return t.finish("least witness " + found + "; published witness (2,0) + (2,1)*x -> (0,2) confirmed, 32/32 sandwiches zero");
}

Outcome example_one() {
  Tally t;
  const Endomorphism alpha = build_example1();
  t.expect(check_property(alpha, PropertyId::Reduced, Envelope::exhaustive()).holds, "reduced fails");
  for (std::size_t d : {1u, 2u}) {
    const Verdict v = check_armendariz_family(alpha, d, PropertyId::AlphaSkewArmendariz);
    t.expect(!v.holds, "alpha-skew holds at degree " + std::to_string(d));
    t.expect(v.holds || replay(alpha, v).reproduced, "alpha-skew witness at degree " + std::to_string(d) + " does not replay");
  }
  for (std::size_t d : {1u, 2u}) {
    const Verdict v = check_armendariz_family(alpha, d, PropertyId::QAlphaSkewArmendariz);
    t.expect(v.holds, "q-alpha-skew fails at degree " + std::to_string(d));
  }
  return t.finish("reduced holds; alpha-skew fails at d = 1, 2 with replayable witnesses; q-alpha-skew holds up to d = 2");
}

Outcome implication_matrix(const std::vector<CorpusEntry>& corpus) {
  const HarnessReport r = run_implication_matrix(corpus, 2, kWideBudget);
  std::ostringstream s;
  s << r.count(HarnessRow::Status::Pass) << " rows pass, " << r.count(HarnessRow::Status::Fail) << " violations, "
    << r.count(HarnessRow::Status::Skipped) << " skipped (budget)";
  if (!r.passed()) s << " | " << fail_rows(r);
  return {r.passed(), s.str()};
}

Outcome transport(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::size_t runs = 0, rows = 0;
  for (const auto& e : corpus) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const HarnessReport r = run_theorem1_transport(e, seed, 1);
      ++runs;
      rows += r.rows.size();
      t.expect(r.passed(), e.name + " seed " + std::to_string(seed) + ": " + fail_rows(r));
      t.expect(r.count(HarnessRow::Status::Skipped) == 0, e.name + " seed " + std::to_string(seed) + " skipped");
    }
  }
  return t.finish(std::to_string(runs) + " relabelings, " + std::to_string(rows) + " verdict comparisons at d = 1");
}

Outcome laurent_consistency(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::size_t entries = 0, pass = 0, skipped = 0;
  std::string skipped_names;
  for (const auto& e : corpus) {
    if (!e.endo.is_automorphism()) continue;
    ++entries;
    const HarnessReport r = run_laurent_consistency(e, 2, kWideBudget);
    pass += r.count(HarnessRow::Status::Pass);
    t.expect(r.passed(), e.name + ": " + fail_rows(r));
    for (const auto& row : r.rows) {
      if (row.status != HarnessRow::Status::Skipped) continue;
      ++skipped;
      skipped_names += (skipped_names.empty() ? "" : ", ") + e.name + " (" + row.check + ")";
    }
  }
  // A skipped comparison is not an agreement.
  t.expect(skipped == 0, "not decided within the tuple budget: " + skipped_names);
  return t.finish(std::to_string(entries) + " invertible entries, " + std::to_string(pass) +
                  " comparisons agree at d = 2 / window (1,1,1,1) / N = 3");
}

Outcome oracle_equivalence(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::size_t compared = 0, agreed = 0;
  std::vector<Endomorphism> rings;
  for (const auto& e : corpus) {
    if (e.ring().size() <= 4) rings.push_back(e.endo);
  }
  rings.push_back(zero_endomorphism(make_zmod(4)));
  for (const auto& alpha : rings) {
    const SkewPolyRing ctx(alpha);
    const std::size_t n = alpha.ring().size();
    const auto pq = all_coeff_tuples(n, 2);
    const auto hs = all_coeff_tuples(n, alpha.orbit().envelope() + 1);
    std::vector<SkewPoly> H;
    H.reserve(hs.size());
    for (const auto& h : hs) H.push_back(ctx.poly(h));
    for (const auto& pc : pq) {
      const auto P = ctx.poly(pc);
      for (const auto& qc : pq) {
        const auto Q = ctx.poly(qc);
        bool brute = true;
        for (const auto& h : H) {
          if (!ctx.mul(ctx.mul(P, h), Q).is_zero()) {
            brute = false;
            break;
          }
        }
        ++compared;
        const bool fast = forall_sandwich_zero(ctx, P, Q);
        agreed += fast == brute ? 1 : 0;
        t.expect(fast == brute, alpha.ring().label() + ": " + ctx.render(P) + " / " + ctx.render(Q));
      }
    }
  }
  return t.finish(std::to_string(agreed) + "/" + std::to_string(compared) + " pairs agree over " +
                  std::to_string(rings.size()) + " rings");
}

Outcome arithmetic_laws(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::vector<Endomorphism> small;
  for (const auto& e : corpus) {
    if (e.ring().size() <= 4) small.push_back(e.endo);
  }
  small.push_back(zero_endomorphism(make_zmod(4)));
  small.push_back(identity_endomorphism(make_zmod(2)));
  std::size_t triples = 0;
  for (const auto& alpha : small) {
    const SkewPolyRing ctx(alpha);
    std::vector<SkewPoly> polys;
    for (const auto& c : all_coeff_tuples(alpha.ring().size(), 2)) polys.push_back(ctx.poly(c));
    for (const auto& a : polys) {
      for (const auto& b : polys) {
        const auto ab = ctx.mul(a, b);
        for (const auto& c : polys) {
          ++triples;
          t.expect(ctx.mul(ab, c) == ctx.mul(a, ctx.mul(b, c)), alpha.ring().label() + ": associativity");
          t.expect(ctx.mul(a, ctx.add(b, c)) == ctx.add(ab, ctx.mul(a, c)), alpha.ring().label() + ": left distributivity");
          t.expect(ctx.mul(ctx.add(a, b), c) == ctx.add(ctx.mul(a, c), ctx.mul(b, c)),
                   alpha.ring().label() + ": right distributivity");
        }
      }
    }
  }

  std::mt19937_64 rng(20240611);
  std::size_t mismatches = 0;
  std::vector<Endomorphism> ids;
  for (const auto& e : corpus) ids.push_back(identity_endomorphism(e.ring()));
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto& alpha = ids[static_cast<std::size_t>(trial) % ids.size()];
    const FiniteRing& R = alpha.ring();
    const SkewPolyRing ctx(alpha);
    std::uniform_int_distribution<Index> coeff(0, static_cast<Index>(R.size() - 1));
    std::uniform_int_distribution<std::size_t> len(0, 4);
    std::vector<Index> a(len(rng)), b(len(rng));
    for (auto& x : a) x = coeff(rng);
    for (auto& x : b) x = coeff(rng);
    std::vector<Index> conv(a.size() + b.size(), R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] = R.add(conv[i + j], R.mul(a[i], b[j]));
    }
    if (ctx.mul(ctx.poly(a), ctx.poly(b)) != ctx.poly(conv)) ++mismatches;
  }
  t.expect(mismatches == 0, std::to_string(mismatches) + " identity-map products differ from convolution");
  return t.finish(std::to_string(triples) + " degree <= 1 triples over " + std::to_string(small.size()) +
                  " rings; 10000 identity-map products, " + std::to_string(mismatches) + " mismatches");
}

Outcome lemma_chains(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::string covered;
  for (const auto& e : corpus) {
    if (!check_armendariz_family(e.endo, 1, PropertyId::AlphaSkewArmendariz).holds) continue;
    const HarnessReport r = run_lemma1(e);
    t.expect(r.passed(), e.name + ": " + fail_rows(r));
    t.expect(r.count(HarnessRow::Status::Skipped) == 0, e.name + " skipped");
    covered += (covered.empty() ? "" : ", ") + e.name;
  }
  t.expect(!covered.empty(), "no entry passes alpha-skew at d = 1");
  return t.finish("chains vanish on " + covered);
}

}  // namespace

int main() {
  const std::vector<CorpusEntry> corpus = default_corpus();
  const std::vector<Criterion> criteria = {
      {1, "example 2 reproduction", 10.0, example_two},
      {2, "example 1 reproduction", 5.0, example_one},
      {3, "implication matrix at d = 2", 120.0, [&] { return implication_matrix(corpus); }},
      {4, "transport along 20 relabelings per entry", 120.0, [&] { return transport(corpus); }},
      {5, "plain vs Laurent consistency", std::nullopt, [&] { return laurent_consistency(corpus); }},
      {6, "sandwich quantifier vs brute-force oracle", std::nullopt, [&] { return oracle_equivalence(corpus); }},
      {7, "skew arithmetic laws", std::nullopt, [&] { return arithmetic_laws(corpus); }},
      {8, "coefficient chains of zero products", std::nullopt, [&] { return lemma_chains(corpus); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s && secs > *c.limit_s) {
      o.ok = false;
      o.detail += " | took longer than " + std::to_string(static_cast<int>(*c.limit_s)) + " s";
    }
    std::printf("%s criterion %d (%s) [%.2f s]: %s\n", o.ok ? "PASS" : "FAIL", c.number, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
