#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skewring/corpus.hpp"

using namespace skewring;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const CorpusEntry& entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const auto& e : corpus) {
    if (e.name == name) return e;
  }
  throw std::runtime_error("no entry " + name);
}

std::string failures(const HarnessReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    if (row.status == HarnessRow::Status::Fail) out += row.entry + ": " + row.check + ": " + row.detail + "\n";
  }
  return out;
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::Io;
}

}  // namespace

TEST(Builders, SizesAndMaps) {
  EXPECT_EQ(build_example1().ring().size(), 4u);
  EXPECT_EQ(build_example2_quotient().ring().size(), 16u);
  EXPECT_EQ(build_example3_analogue().ring().size(), 25u);
  EXPECT_EQ(build_example4(3).ring().size(), 9u);
  EXPECT_EQ(build_example4(5).ring().size(), 25u);
  const auto [r1, r2] = build_example5(3);
  EXPECT_EQ(r1.ring().size(), 9u);
  EXPECT_EQ(r2.ring().size(), 3u);
  EXPECT_FALSE(r1.ring().is_unital());
  EXPECT_EQ(build_field_frobenius(3, 2).ring().size(), 9u);
  // the analogue map (a, s) -> (a, 3s) has order 4 on Z5
  EXPECT_EQ(build_example3_analogue().orbit(), (Orbit{0, 4}));
}

TEST(Builders, RejectCharacteristicTwoAndComposites) {
  EXPECT_EQ(error_kind_of([] { build_example4(2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(error_kind_of([] { build_example5(2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(error_kind_of([] { build_example4(9); }), ErrorKind::InvalidArgument);
}

TEST(Manifest, BuiltInCopyMatchesDataFile) {
  EXPECT_EQ(default_manifest(), read(SKEWRING_DATA_DIR "/corpus_manifest.json"));
}

TEST(Manifest, EntriesAreSortedByName) {
  const auto corpus = default_corpus();
  std::vector<std::string> names;
  for (const auto& e : corpus) names.push_back(e.name);
  EXPECT_EQ(names, (std::vector<std::string>{"example1", "example2", "example3_analogue", "example4", "example5_r1",
                                             "example5_r2", "gf4_frobenius", "gf9_frobenius"}));
  EXPECT_TRUE(entry(corpus, "example3_analogue").exploratory);
  EXPECT_FALSE(entry(corpus, "example2").exploratory);
}

TEST(Manifest, MalformedDocuments) {
  const char* duplicate = R"({"schema": "skewring.corpus/1", "entries": [
      {"name": "a", "builder": "example1"}, {"name": "a", "builder": "example1"}]})";
  EXPECT_EQ(error_kind_of([&] { load_corpus(duplicate); }), ErrorKind::Parse);
  const char* builder = R"({"schema": "skewring.corpus/1", "entries": [{"name": "a", "builder": "nope"}]})";
  EXPECT_EQ(error_kind_of([&] { load_corpus(builder); }), ErrorKind::Parse);
  const char* schema = R"({"schema": "skewring.corpus/2", "entries": []})";
  EXPECT_EQ(error_kind_of([&] { load_corpus(schema); }), ErrorKind::Parse);
  const char* field = R"({"schema": "skewring.corpus/1", "entries": [{"name": "a", "builder": "example1", "x": 1}]})";
  EXPECT_EQ(error_kind_of([&] { load_corpus(field); }), ErrorKind::Parse);
  const char* outcome = R"({"schema": "skewring.corpus/1", "entries": [{"name": "a", "builder": "example1",
      "expect": [{"property": "reduced", "envelope": {"kind": "exhaustive"}, "outcome": "maybe",
                  "provenance": "derived"}]}]})";
  EXPECT_EQ(error_kind_of([&] { load_corpus(outcome); }), ErrorKind::Parse);
  EXPECT_EQ(error_kind_of([] { load_corpus("{"); }), ErrorKind::Parse);
}

TEST(Expectations, EveryEntryReproduces) {
  for (const auto& e : default_corpus()) {
    const HarnessReport r = run_expectations(e, 2);
    EXPECT_TRUE(r.passed()) << failures(r);
    EXPECT_EQ(r.count(HarnessRow::Status::Skipped), 0u) << e.name;
  }
}

TEST(Expectations, WrongExpectationIsReported) {
  auto corpus = default_corpus();
  CorpusEntry e = entry(corpus, "example1");
  e.expected = {Expectation{PropertyId::Reduced, Envelope::exhaustive(), false, "derived"}};
  const HarnessReport r = run_expectations(e, 2);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.count(HarnessRow::Status::Fail), 1u);
}

TEST(Expectations, DegreeAboveLimitIsSkipped) {
  const auto corpus = default_corpus();
  const HarnessReport r = run_expectations(entry(corpus, "example1"), 1);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.count(HarnessRow::Status::Skipped), 0u);
}

TEST(Transport, SeededRelabelingsPreserveVerdicts) {
  const auto corpus = default_corpus();
  for (const char* name : {"example1", "example2", "gf4_frobenius", "example5_r1"}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const HarnessReport r = run_theorem1_transport(entry(corpus, name), seed, 1);
      EXPECT_TRUE(r.passed()) << failures(r);
    }
  }
}

TEST(Product, ExampleFiveFactors) {
  const auto corpus = default_corpus();
  const HarnessReport r = run_prop2_product(entry(corpus, "example5_r2"), entry(corpus, "example5_r2"), 1);
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_GT(r.count(HarnessRow::Status::Pass), 0u);
}

TEST(ImplicationMatrix, NoViolationsAtDegreeTwo) {
  const auto corpus = default_corpus();
  const HarnessReport r = run_implication_matrix(corpus, 2);
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_GT(r.count(HarnessRow::Status::Pass), 50u);
}

TEST(Consistency, PlainAgainstLaurent) {
  const auto corpus = default_corpus();
  for (const auto& e : corpus) {
    if (!e.endo.is_automorphism() || e.ring().size() > 16) continue;
    const HarnessReport r = run_laurent_consistency(e, 1);
    EXPECT_TRUE(r.passed()) << failures(r);
  }
  EXPECT_EQ(error_kind_of([&] { run_laurent_consistency(entry(corpus, "example1"), 0); }),
            ErrorKind::InvalidArgument);
}

TEST(CoefficientChains, VanishOnZeroProducts) {
  const auto corpus = default_corpus();
  for (const char* name : {"example5_r2", "gf4_frobenius"}) {
    const HarnessReport r = run_lemma1(entry(corpus, name));
    EXPECT_TRUE(r.passed()) << failures(r);
  }
}

TEST(RunCorpus, UnknownNameIsRejected) {
  const auto corpus = default_corpus();
  const std::vector<std::string> names = {"missing"};
  EXPECT_EQ(error_kind_of([&] { run_corpus(corpus, names, 1); }), ErrorKind::InvalidArgument);
}

TEST(RunCorpus, DeterministicReport) {
  const auto corpus = default_corpus();
  const std::vector<std::string> names = {"example2", "example1"};
  const auto a = run_corpus(corpus, names, 1).render();
  const auto b = run_corpus(corpus, names, 1).render();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("example1"), std::string::npos);
}
