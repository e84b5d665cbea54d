#pragma once

// Named finite rings with endomorphisms, their recorded expectations, and the
// harness that cross-checks decider outputs against each other: transport
// along isomorphisms, direct products, the implication matrix, plain versus
// Laurent agreement, and the coefficient-chain lemma.
//
// Expectations live in a manifest (JSON, schema "skewring.corpus/1"); the
// library embeds a default copy. Each expectation carries a provenance value:
// "published" for outcomes stated with the original construction, "trivial"
// for immediate consequences, "derived" for outcomes computed here.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewring/deciders.hpp"
#include "skewring/ring.hpp"

namespace skewring {

struct Expectation {
  PropertyId property = PropertyId::Reduced;
  Envelope envelope;
  bool holds = true;
  std::string provenance;
};

struct CorpusEntry {
  std::string name;
  Endomorphism endo;
  bool exploratory = false;
  std::vector<Expectation> expected;

  const FiniteRing& ring() const noexcept { return endo.ring(); }
};

// Builders ---------------------------------------------------------------------

// Z2 + Z2 with the coordinate swap.
Endomorphism build_example1();
// T(Z4, Z4) with (a, b) -> (a, -b).
Endomorphism build_example2_quotient();
// T(Z5, Z5) with (a, s) -> (a, 3s); 3 inverts 2 mod 5.
Endomorphism build_example3_analogue();
// {(a, b)} over Z_p with (a, b)(c, d) = (ac, ad) and (a, b) -> (a, -b).
// p = 2 is rejected: the map would be the identity.
Endomorphism build_example4(unsigned p = 3);
// R1 = {(a, b)} with (a, b)(c, d) = (ad, bd), (a, b) -> (-a, b);
// R2 = {d} with zero multiplication, d -> -d. p = 2 is rejected.
std::pair<Endomorphism, Endomorphism> build_example5(unsigned p = 3);
// GF(p^k) with x -> x^p.
Endomorphism build_field_frobenius(unsigned p = 2, unsigned k = 2);

// Manifest ---------------------------------------------------------------------

// The manifest compiled into the library.
std::string_view default_manifest();
// Builds every entry listed in a manifest document. Throws Error(Parse) on a
// malformed document.
std::vector<CorpusEntry> load_corpus(std::string_view manifest_text);
std::vector<CorpusEntry> default_corpus();

// Harness ----------------------------------------------------------------------

struct HarnessRow {
  std::string entry;
  std::string check;
  enum class Status { Pass, Fail, Skipped } status = Status::Pass;
  std::string detail;
};

struct HarnessReport {
  std::vector<HarnessRow> rows;

  bool passed() const;
  std::size_t count(HarnessRow::Status status) const;
  void append(HarnessReport other);
  std::string render() const;
};

// Runs every expectation of `entry` whose envelope is within degree
// `max_degree` (element-level ones always run); others are reported skipped.
HarnessReport run_expectations(const CorpusEntry& entry, std::size_t max_degree,
                               const SearchOptions& options = {});

// Relabels the carrier by a permutation drawn from `seed` and compares the
// verdicts of alpha-skew, alpha-Armendariz, q-alpha and q-alpha-skew at
// `degree` between (R, alpha) and (S, sigma alpha sigma^-1). The original
// witness, moved along sigma, must also replay over S.
HarnessReport run_theorem1_transport(const CorpusEntry& entry, std::uint64_t seed, std::size_t degree,
                                     const SearchOptions& options = {});

// When both factors pass alpha-Armendariz (resp. alpha-skew) at `degree`, the
// product ring with the componentwise map must pass as well.
HarnessReport run_prop2_product(const CorpusEntry& first, const CorpusEntry& second, std::size_t degree,
                                const SearchOptions& options = {});

// Evaluates each implication row whose hypothesis the deciders establish at
// `degree` and requires the conclusion at the same bound. Rows whose
// hypothesis could not be decided within the budget are reported skipped.
// For invertible maps it also requires plain/Laurent agreement.
HarnessReport run_implication_matrix(std::span<const CorpusEntry> entries, std::size_t degree,
                                     const SearchOptions& options = {});

// Plain q-alpha-skew at degree d against Laurent q-alpha-skew on the window
// (1, d-1, 1, d-1), and plain against Laurent power series at order d + 1.
// Requires d >= 1 and an invertible map.
HarnessReport run_laurent_consistency(const CorpusEntry& entry, std::size_t degree,
                                      const SearchOptions& options = {});

// For an entry passing alpha-skew at degree 1: every triple of nonzero
// polynomials of degree <= 1 with P1 P2 P3 = 0 has all coefficient chains zero.
HarnessReport run_lemma1(const CorpusEntry& entry, const SearchOptions& options = {});

// The corpus command: expectations plus the implication matrix for the
// selected entries (all when `names` is empty). Throws Error(InvalidArgument)
// for an unknown entry name.
HarnessReport run_corpus(std::span<const CorpusEntry> corpus, std::span<const std::string> names,
                         std::size_t degree, const SearchOptions& options = {});

}  // namespace skewring
