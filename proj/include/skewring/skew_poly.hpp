#pragma once

// Arithmetic in R[x; alpha], R[x, x^-1; alpha] and truncated R[[x; alpha]] /
// R[[x, x^-1; alpha]] over a validated ring and endomorphism.
//
// Multiplication follows the monomial law (a x^i)(b x^j) = a alpha^i(b) x^(i+j).
// Values are normalized on construction, so structural equality is
// mathematical equality.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewring/ring.hpp"

namespace skewring {

class SkewPolyRing;

class SkewPoly {
 public:
  RingId ring_id() const noexcept { return ring_; }
  EndoId endo_id() const noexcept { return endo_; }
  // Position k is the coefficient of x^k; empty for the zero polynomial.
  const std::vector<Index>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  // Coefficient of x^k, zero beyond the degree.
  Index coeff(std::size_t k, Index zero) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

 private:
  friend class SkewPolyRing;
  RingId ring_ = 0;
  EndoId endo_ = 0;
  std::vector<Index> coeffs_;
};

class LaurentSkewPoly {
 public:
  RingId ring_id() const noexcept { return ring_; }
  EndoId endo_id() const noexcept { return endo_; }
  // Position k is the coefficient of x^(min_exp + k). For the zero
  // polynomial coeffs is empty and min_exp is 0.
  std::int64_t min_exp() const noexcept { return min_exp_; }
  const std::vector<Index>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t max_exp() const noexcept { return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  friend bool operator==(const LaurentSkewPoly&, const LaurentSkewPoly&) = default;

 private:
  friend class SkewPolyRing;
  RingId ring_ = 0;
  EndoId endo_ = 0;
  std::int64_t min_exp_ = 0;
  std::vector<Index> coeffs_;
};

// A series known exactly for exponents min_exp <= k < order. Coefficients at
// or above `order` are unknown, not zero.
class TruncatedSkewSeries {
 public:
  RingId ring_id() const noexcept { return ring_; }
  EndoId endo_id() const noexcept { return endo_; }
  std::int64_t min_exp() const noexcept { return min_exp_; }
  std::int64_t order() const noexcept { return order_; }
  // Length order - min_exp; position k is the coefficient of x^(min_exp + k).
  const std::vector<Index>& coeffs() const noexcept { return coeffs_; }
  Index coeff_at(std::int64_t exponent) const { return coeffs_.at(static_cast<std::size_t>(exponent - min_exp_)); }
  friend bool operator==(const TruncatedSkewSeries&, const TruncatedSkewSeries&) = default;

 private:
  friend class SkewPolyRing;
  RingId ring_ = 0;
  EndoId endo_ = 0;
  std::int64_t min_exp_ = 0;
  std::int64_t order_ = 0;
  std::vector<Index> coeffs_;
};

// The arithmetic context: a ring with an endomorphism. Every value it
// produces is tagged with both ids, and operations reject values built over
// a different pair.
class SkewPolyRing {
 public:
  explicit SkewPolyRing(Endomorphism alpha);

  const FiniteRing& ring() const noexcept { return alpha_.ring(); }
  const Endomorphism& alpha() const noexcept { return alpha_; }

  // R[x; alpha] ---------------------------------------------------------------
  SkewPoly poly(std::vector<Index> coeffs) const;
  SkewPoly zero() const { return poly({}); }
  SkewPoly monomial(Index coefficient, std::size_t exponent) const;

  SkewPoly add(const SkewPoly& p, const SkewPoly& q) const;
  SkewPoly neg(const SkewPoly& p) const;
  SkewPoly sub(const SkewPoly& p, const SkewPoly& q) const { return add(p, neg(q)); }
  // Coefficient of x^k in pq is the sum over i + j = k of a_i alpha^i(b_j).
  SkewPoly mul(const SkewPoly& p, const SkewPoly& q) const;
  // p (r x^k) q
  SkewPoly sandwich(const SkewPoly& p, Index r, std::size_t k, const SkewPoly& q) const;

  // R[x, x^-1; alpha]; alpha must be an automorphism ---------------------------
  LaurentSkewPoly laurent(std::int64_t min_exp, std::vector<Index> coeffs) const;
  LaurentSkewPoly laurent(const SkewPoly& p) const { return laurent(0, p.coeffs()); }
  LaurentSkewPoly laurent_monomial(Index coefficient, std::int64_t exponent) const;
  LaurentSkewPoly laurent_add(const LaurentSkewPoly& p, const LaurentSkewPoly& q) const;
  LaurentSkewPoly laurent_mul(const LaurentSkewPoly& p, const LaurentSkewPoly& q) const;
  // Back to R[x; alpha] when no negative exponent remains.
  std::optional<SkewPoly> to_poly(const LaurentSkewPoly& p) const;

  // Truncated series ----------------------------------------------------------
  // coeffs must have length order - min_exp. Negative min_exp requires an
  // automorphism.
  TruncatedSkewSeries series(std::int64_t min_exp, std::int64_t order, std::vector<Index> coeffs) const;
  // The truncation of p to exponents below `order`.
  TruncatedSkewSeries series(const SkewPoly& p, std::int64_t order) const;
  TruncatedSkewSeries series(const LaurentSkewPoly& p, std::int64_t min_exp, std::int64_t order) const;
  TruncatedSkewSeries series_add(const TruncatedSkewSeries& p, const TruncatedSkewSeries& q) const;
  // Exact below min(order_p + min_q, order_q + min_p); for plain series this
  // is the smaller of the two orders.
  TruncatedSkewSeries truncated_mul(const TruncatedSkewSeries& p, const TruncatedSkewSeries& q) const;
  bool is_zero(const TruncatedSkewSeries& p) const;

  // Text ----------------------------------------------------------------------
  // "c0 + c1*x + c2*x^2" with ring labels; zero terms are omitted and the zero
  // polynomial renders as "0".
  std::string render(const SkewPoly& p) const;
  std::string render(const LaurentSkewPoly& p) const;
  // Appends " + O(x^N)".
  std::string render(const TruncatedSkewSeries& p) const;
  SkewPoly parse_poly(std::string_view text) const;
  LaurentSkewPoly parse_laurent(std::string_view text) const;

 private:
  void check(RingId ring, EndoId endo) const;
  void require_automorphism() const;
  std::vector<Index> normalize_tail(std::vector<Index> coeffs) const;

  Endomorphism alpha_;
};

}  // namespace skewring
