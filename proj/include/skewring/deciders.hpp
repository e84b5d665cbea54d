#pragma once

// Decision procedures for element-level ring predicates and for the
// Armendariz family of polynomial conditions over R[x; alpha].
//
// Polynomial-level checks are exhaustive over a bounded envelope (a degree
// bound, a Laurent exponent window or a truncation order). A verdict either
// states that the condition holds for every pair inside the envelope, or
// carries the least violating pair in the fixed enumeration order together
// with the coefficient pair and the nonzero value that break the conclusion.
//
// Enumeration order: pairs (p, q) are ordered by (top exponent of p, top
// exponent of q, coefficients of p from the lowest exponent up, coefficients
// of q likewise), comparing element indices. Zero polynomials are skipped.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewring/ring.hpp"
#include "skewring/skew_poly.hpp"

namespace skewring {

enum class PropertyId {
  Reduced,
  Domain,
  Commutative,
  Semicommutative,
  Reversible,
  Symmetric,
  Rigid,
  Armendariz,
  AlphaArmendariz,
  AlphaSkewArmendariz,
  QuasiArmendariz,
  QAlphaArmendariz,
  QAlphaSkewArmendariz,
  AlphaQuasiArmendariz,
  LaurentQAlphaSkew,
  PowerSeriesQAlphaSkew,
  LaurentPowerSeriesQAlphaSkew,
};

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::Reduced,
    PropertyId::Domain,
    PropertyId::Commutative,
    PropertyId::Semicommutative,
    PropertyId::Reversible,
    PropertyId::Symmetric,
    PropertyId::Rigid,
    PropertyId::Armendariz,
    PropertyId::AlphaArmendariz,
    PropertyId::AlphaSkewArmendariz,
    PropertyId::QuasiArmendariz,
    PropertyId::QAlphaArmendariz,
    PropertyId::QAlphaSkewArmendariz,
    PropertyId::AlphaQuasiArmendariz,
    PropertyId::LaurentQAlphaSkew,
    PropertyId::PowerSeriesQAlphaSkew,
    PropertyId::LaurentPowerSeriesQAlphaSkew,
};

std::string_view property_name(PropertyId id);
std::optional<PropertyId> property_from_name(std::string_view name);
bool is_element_level(PropertyId id);

// Exponent window of R[x, x^-1; alpha]: p = sum a_i x^i with -m <= i <= n,
// q = sum b_j x^j with -t <= j <= s.
struct LaurentWindow {
  std::size_t m = 0, n = 0, t = 0, s = 0;
  friend bool operator==(const LaurentWindow&, const LaurentWindow&) = default;
};

enum class EnvelopeKind { Exhaustive, Degree, Window, Truncation };

struct Envelope {
  EnvelopeKind kind = EnvelopeKind::Exhaustive;
  std::size_t degree = 0;   // Degree: deg p, deg q <= degree
  LaurentWindow window;     // Window
  std::size_t order = 0;    // Truncation: coefficients per series
  std::int64_t min_exp = 0; // Truncation: lowest exponent (0 or -1)
  std::size_t free = 0;     // Truncation: leading coefficients left free (<= order)

  static Envelope exhaustive() { return {}; }
  static Envelope degree_bound(std::size_t d) {
    Envelope e;
    e.kind = EnvelopeKind::Degree;
    e.degree = d;
    return e;
  }
  static Envelope laurent_window(LaurentWindow w) {
    Envelope e;
    e.kind = EnvelopeKind::Window;
    e.window = w;
    return e;
  }
  static Envelope truncation(std::size_t order, bool laurent) {
    Envelope e;
    e.kind = EnvelopeKind::Truncation;
    e.order = order;
    e.free = order;
    e.min_exp = laurent ? -1 : 0;
    return e;
  }
  std::string describe() const;
  friend bool operator==(const Envelope&, const Envelope&) = default;
};

enum class WitnessKind { Elements, Polynomial, Laurent, Series };

struct Witness {
  WitnessKind kind = WitnessKind::Elements;
  // Element-level predicates: the violating elements, in the order the
  // predicate names them (a; a, b; a, b, r; ...).
  std::vector<Index> elements;
  // Polynomial-level: coefficient windows, position k holding the
  // coefficient of x^(min_exp + k).
  std::vector<Index> p, q;
  std::int64_t p_min_exp = 0, q_min_exp = 0;
  // Violated conclusion: exponents (i, j), optional middle factor r and the
  // power of alpha applied to b_j.
  std::int64_t i = 0, j = 0;
  std::optional<Index> middle;
  std::int64_t twist = 0;
  // The nonzero value a_i [r] alpha^twist(b_j), or for element predicates
  // the nonzero element certifying the failure (absent when there is none,
  // e.g. the zero ring failing to be a domain).
  std::optional<Index> offending;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  PropertyId property = PropertyId::Reduced;
  Envelope envelope;
  bool holds = true;
  std::optional<Witness> witness;
  std::string ring_label;
  std::string endo_label;
};

struct SearchOptions {
  std::uint64_t tuple_budget = 100'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Element-level predicates -----------------------------------------------------

Verdict is_reduced(const FiniteRing& ring);
Verdict is_domain(const FiniteRing& ring);
Verdict is_commutative(const FiniteRing& ring);
Verdict is_semicommutative(const FiniteRing& ring);
Verdict is_reversible(const FiniteRing& ring);
Verdict is_symmetric(const FiniteRing& ring);
Verdict is_rigid(const Endomorphism& alpha);

// Sandwich quantifiers ---------------------------------------------------------

// p h q = 0 for every h in R[x; alpha]. Checked on the monomials r x^k with
// r in R and 0 <= k < preperiod + period, which suffices because h -> p h q
// is additive and the sandwich depends on k only through alpha^(i+k).
bool forall_sandwich_zero(const SkewPolyRing& ctx, const SkewPoly& p, const SkewPoly& q);
// Over R[x, x^-1; alpha]: k ranges over one period.
bool forall_sandwich_zero_laurent(const SkewPolyRing& ctx, const LaurentSkewPoly& p,
                                  const LaurentSkewPoly& q);
// Over truncated series: every coefficient that the truncated product
// p (r x^k) q determines must vanish.
bool forall_sandwich_zero_series(const SkewPolyRing& ctx, const TruncatedSkewSeries& p,
                                 const TruncatedSkewSeries& q);

// Polynomial-level deciders ----------------------------------------------------

// Size of the searched pair space, saturating at UINT64_MAX.
std::uint64_t search_space(std::size_t ring_size, const Envelope& envelope);

Verdict check_armendariz_family(const Endomorphism& alpha, std::size_t degree, PropertyId variant,
                                const SearchOptions& options = {});
Verdict check_laurent_q_alpha_skew(const Endomorphism& alpha, LaurentWindow window,
                                   const SearchOptions& options = {});
// N coefficients per series starting at exponent 0, or at -1 when `laurent`.
// `free` (default N) limits the coefficients that are enumerated; the rest
// are held at zero.
Verdict check_powerseries_q_alpha_skew(const Endomorphism& alpha, std::size_t order, bool laurent,
                                       const SearchOptions& options = {},
                                       std::optional<std::size_t> free = std::nullopt);

// Dispatches on the property; element-level properties ignore the envelope.
Verdict check_property(const Endomorphism& alpha, PropertyId property, const Envelope& envelope,
                       const SearchOptions& options = {});

// a_{i1} alpha^{i1}(a_{i2}) alpha^{i1+i2}(a_{i3}) ... for coefficients
// a_{ik} of polys[k].
Index lemma1_chain(const SkewPolyRing& ctx, std::span<const SkewPoly> polys,
                   std::span<const std::size_t> indices);

// Witness replay ---------------------------------------------------------------

struct ReplayResult {
  bool reproduced = false;
  std::string detail;
};

// Recomputes the witness through the skew-polynomial arithmetic: the
// hypothesis must evaluate to zero and the recorded violation must be the
// recorded nonzero value. Throws Error(InvalidArgument) when the witness
// refers to elements outside the ring.
ReplayResult replay(const Endomorphism& alpha, const Verdict& verdict);

}  // namespace skewring
