#include "skewring/skew_poly.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

namespace skewring {

namespace {

struct Term {
  Index coefficient;
  std::int64_t exponent;
};

std::string term_text(const std::string& label, std::int64_t exponent) {
  if (exponent == 0) return label;
  if (exponent == 1) return label + "*x";
  return label + "*x^" + std::to_string(exponent);
}

std::vector<Term> parse_terms(const FiniteRing& ring, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) fail(ErrorKind::Parse, "empty polynomial text");
  std::vector<Term> terms;
  while (true) {
    const auto cut = text.find(" + ");
    std::string_view term = trim(text.substr(0, cut));
    std::int64_t exponent = 0;
    std::string_view label = term;
    const auto star = term.rfind("*x");
    if (star != std::string_view::npos) {
      label = term.substr(0, star);
      std::string_view rest = term.substr(star + 2);
      if (rest.empty()) {
        exponent = 1;
      } else if (rest.front() == '^') {
        rest.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
        if (ec != std::errc() || ptr != rest.data() + rest.size()) {
          fail(ErrorKind::Parse, "bad exponent in term '" + std::string(term) + "'");
        }
      } else {
        fail(ErrorKind::Parse, "bad term '" + std::string(term) + "'");
      }
    }
    const auto index = ring.find_label(label);
    if (!index) fail(ErrorKind::Parse, "unknown element label '" + std::string(label) + "'");
    terms.push_back({*index, exponent});
    if (cut == std::string_view::npos) break;
    text = text.substr(cut + 3);
  }
  return terms;
}

}  // namespace

SkewPolyRing::SkewPolyRing(Endomorphism alpha) : alpha_(std::move(alpha)) {}

void SkewPolyRing::check(RingId ring, EndoId endo) const {
  if (ring != this->ring().id() || endo != alpha_.id()) {
    fail(ErrorKind::Mismatch, "value belongs to a different ring or endomorphism");
  }
}

void SkewPolyRing::require_automorphism() const {
  if (!alpha_.is_automorphism()) {
    fail(ErrorKind::InvalidArgument, "negative exponents need an invertible endomorphism");
  }
}

std::vector<Index> SkewPolyRing::normalize_tail(std::vector<Index> coeffs) const {
  const auto& R = ring();
  for (Index c : coeffs) {
    if (c >= R.size()) fail(ErrorKind::InvalidArgument, "coefficient index " + std::to_string(c) + " out of range");
  }
  while (!coeffs.empty() && R.is_zero(coeffs.back())) coeffs.pop_back();
  return coeffs;
}

// R[x; alpha] -----------------------------------------------------------------

SkewPoly SkewPolyRing::poly(std::vector<Index> coeffs) const {
  SkewPoly p;
  p.ring_ = ring().id();
  p.endo_ = alpha_.id();
  p.coeffs_ = normalize_tail(std::move(coeffs));
  return p;
}

SkewPoly SkewPolyRing::monomial(Index coefficient, std::size_t exponent) const {
  std::vector<Index> coeffs(exponent + 1, ring().zero());
  coeffs[exponent] = coefficient;
  return poly(std::move(coeffs));
}

SkewPoly SkewPolyRing::add(const SkewPoly& p, const SkewPoly& q) const {
  check(p.ring_, p.endo_);
  check(q.ring_, q.endo_);
  const auto& R = ring();
  std::vector<Index> out(std::max(p.coeffs_.size(), q.coeffs_.size()), R.zero());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = R.add(p.coeff(k, R.zero()), q.coeff(k, R.zero()));
  return poly(std::move(out));
}

SkewPoly SkewPolyRing::neg(const SkewPoly& p) const {
  check(p.ring_, p.endo_);
  std::vector<Index> out(p.coeffs_);
  for (auto& c : out) c = ring().neg(c);
  return poly(std::move(out));
}

SkewPoly SkewPolyRing::mul(const SkewPoly& p, const SkewPoly& q) const {
  check(p.ring_, p.endo_);
  check(q.ring_, q.endo_);
  if (p.is_zero() || q.is_zero()) return zero();
  const auto& R = ring();
  std::vector<Index> out(p.coeffs_.size() + q.coeffs_.size() - 1, R.zero());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    const auto twist = alpha_.power_map(static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] = R.add(out[i + j], R.mul(p.coeffs_[i], twist[q.coeffs_[j]]));
    }
  }
  return poly(std::move(out));
}

SkewPoly SkewPolyRing::sandwich(const SkewPoly& p, Index r, std::size_t k, const SkewPoly& q) const {
  return mul(mul(p, monomial(r, k)), q);
}

// R[x, x^-1; alpha] ------------------------------------------------------------

LaurentSkewPoly SkewPolyRing::laurent(std::int64_t min_exp, std::vector<Index> coeffs) const {
  require_automorphism();
  const auto& R = ring();
  coeffs = normalize_tail(std::move(coeffs));
  std::size_t lead = 0;
  while (lead < coeffs.size() && R.is_zero(coeffs[lead])) ++lead;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  LaurentSkewPoly p;
  p.ring_ = R.id();
  p.endo_ = alpha_.id();
  p.min_exp_ = coeffs.empty() ? 0 : min_exp + static_cast<std::int64_t>(lead);
  p.coeffs_ = std::move(coeffs);
  return p;
}

LaurentSkewPoly SkewPolyRing::laurent_monomial(Index coefficient, std::int64_t exponent) const {
  return laurent(exponent, {coefficient});
}

LaurentSkewPoly SkewPolyRing::laurent_add(const LaurentSkewPoly& p, const LaurentSkewPoly& q) const {
  check(p.ring_, p.endo_);
  check(q.ring_, q.endo_);
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const auto& R = ring();
  const std::int64_t lo = std::min(p.min_exp_, q.min_exp_);
  const std::int64_t hi = std::max(p.max_exp(), q.max_exp());
  std::vector<Index> out(static_cast<std::size_t>(hi - lo + 1), R.zero());
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
    auto& slot = out[static_cast<std::size_t>(p.min_exp_ - lo) + k];
    slot = R.add(slot, p.coeffs_[k]);
  }
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) {
    auto& slot = out[static_cast<std::size_t>(q.min_exp_ - lo) + k];
    slot = R.add(slot, q.coeffs_[k]);
  }
  return laurent(lo, std::move(out));
}

LaurentSkewPoly SkewPolyRing::laurent_mul(const LaurentSkewPoly& p, const LaurentSkewPoly& q) const {
  check(p.ring_, p.endo_);
  check(q.ring_, q.endo_);
  require_automorphism();
  if (p.is_zero() || q.is_zero()) return laurent(0, {});
  const auto& R = ring();
  std::vector<Index> out(p.coeffs_.size() + q.coeffs_.size() - 1, R.zero());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    const auto twist = alpha_.power_map(p.min_exp_ + static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      out[i + j] = R.add(out[i + j], R.mul(p.coeffs_[i], twist[q.coeffs_[j]]));
    }
  }
  return laurent(p.min_exp_ + q.min_exp_, std::move(out));
}

std::optional<SkewPoly> SkewPolyRing::to_poly(const LaurentSkewPoly& p) const {
  check(p.ring_, p.endo_);
  if (p.is_zero()) return zero();
  if (p.min_exp_ < 0) return std::nullopt;
  std::vector<Index> coeffs(static_cast<std::size_t>(p.min_exp_), ring().zero());
  coeffs.insert(coeffs.end(), p.coeffs_.begin(), p.coeffs_.end());
  return poly(std::move(coeffs));
}

// Truncated series ---------------------------------------------------------------

TruncatedSkewSeries SkewPolyRing::series(std::int64_t min_exp, std::int64_t order,
                                         std::vector<Index> coeffs) const {
  if (order < min_exp) fail(ErrorKind::InvalidArgument, "truncation order below the lowest exponent");
  if (coeffs.size() != static_cast<std::size_t>(order - min_exp)) {
    fail(ErrorKind::InvalidArgument, "series needs order - min_exp coefficients");
  }
  if (min_exp < 0) require_automorphism();
  for (Index c : coeffs) {
    if (c >= ring().size()) fail(ErrorKind::InvalidArgument, "coefficient index out of range");
  }
  TruncatedSkewSeries s;
  s.ring_ = ring().id();
  s.endo_ = alpha_.id();
  s.min_exp_ = min_exp;
  s.order_ = order;
  s.coeffs_ = std::move(coeffs);
  return s;
}

TruncatedSkewSeries SkewPolyRing::series(const SkewPoly& p, std::int64_t order) const {
  check(p.ring_, p.endo_);
  if (order < 0) fail(ErrorKind::InvalidArgument, "negative truncation order");
  std::vector<Index> coeffs(static_cast<std::size_t>(order), ring().zero());
  for (std::size_t k = 0; k < coeffs.size() && k < p.coeffs_.size(); ++k) coeffs[k] = p.coeffs_[k];
  return series(0, order, std::move(coeffs));
}

TruncatedSkewSeries SkewPolyRing::series(const LaurentSkewPoly& p, std::int64_t min_exp,
                                         std::int64_t order) const {
  check(p.ring_, p.endo_);
  if (!p.is_zero() && p.min_exp_ < min_exp) {
    fail(ErrorKind::InvalidArgument, "Laurent polynomial has terms below the series window");
  }
  std::vector<Index> coeffs(static_cast<std::size_t>(order - min_exp), ring().zero());
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
    const std::int64_t e = p.min_exp_ + static_cast<std::int64_t>(k);
    if (e < order) coeffs[static_cast<std::size_t>(e - min_exp)] = p.coeffs_[k];
  }
  return series(min_exp, order, std::move(coeffs));
}

TruncatedSkewSeries SkewPolyRing::series_add(const TruncatedSkewSeries& p,
                                             const TruncatedSkewSeries& q) const {
  check(p.ring_, p.endo_);
  check(q.ring_, q.endo_);
  const auto& R = ring();
  const std::int64_t lo = std::min(p.min_exp_, q.min_exp_);
  const std::int64_t order = std::min(p.order_, q.order_);
  std::vector<Index> out(static_cast<std::size_t>(std::max<std::int64_t>(order - lo, 0)), R.zero());
  for (std::int64_t e = lo; e < order; ++e) {
    const Index a = e >= p.min_exp_ ? p.coeff_at(e) : R.zero();
    const Index b = e >= q.min_exp_ ? q.coeff_at(e) : R.zero();
    out[static_cast<std::size_t>(e - lo)] = R.add(a, b);
  }
  return series(lo, std::max(order, lo), std::move(out));
}

TruncatedSkewSeries SkewPolyRing::truncated_mul(const TruncatedSkewSeries& p,
                                                const TruncatedSkewSeries& q) const {
  check(p.ring_, p.endo_);
  check(q.ring_, q.endo_);
  const auto& R = ring();
  const std::int64_t lo = p.min_exp_ + q.min_exp_;
  const std::int64_t order = std::max(lo, std::min(p.order_ + q.min_exp_, q.order_ + p.min_exp_));
  std::vector<Index> out(static_cast<std::size_t>(order - lo), R.zero());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    const std::int64_t ei = p.min_exp_ + static_cast<std::int64_t>(i);
    const auto twist = alpha_.power_map(ei);
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
      const std::int64_t e = ei + q.min_exp_ + static_cast<std::int64_t>(j);
      if (e >= order) break;
      auto& slot = out[static_cast<std::size_t>(e - lo)];
      slot = R.add(slot, R.mul(p.coeffs_[i], twist[q.coeffs_[j]]));
    }
  }
  return series(lo, order, std::move(out));
}

bool SkewPolyRing::is_zero(const TruncatedSkewSeries& p) const {
  check(p.ring_, p.endo_);
  return std::all_of(p.coeffs_.begin(), p.coeffs_.end(), [&](Index c) { return ring().is_zero(c); });
}

// Text ---------------------------------------------------------------------------

namespace {

std::string render_terms(const FiniteRing& R, std::int64_t min_exp, const std::vector<Index>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (R.is_zero(coeffs[k])) continue;
    if (!out.empty()) out += " + ";
    out += term_text(R.element_label(coeffs[k]), min_exp + static_cast<std::int64_t>(k));
  }
  return out.empty() ? R.element_label(R.zero()) : out;
}

}  // namespace

std::string SkewPolyRing::render(const SkewPoly& p) const {
  check(p.ring_, p.endo_);
  return render_terms(ring(), 0, p.coeffs_);
}

std::string SkewPolyRing::render(const LaurentSkewPoly& p) const {
  check(p.ring_, p.endo_);
  return render_terms(ring(), p.min_exp_, p.coeffs_);
}

std::string SkewPolyRing::render(const TruncatedSkewSeries& p) const {
  check(p.ring_, p.endo_);
  return render_terms(ring(), p.min_exp_, p.coeffs_) + " + O(x^" + std::to_string(p.order_) + ")";
}

SkewPoly SkewPolyRing::parse_poly(std::string_view text) const {
  const auto& R = ring();
  std::vector<Index> coeffs;
  for (const auto& t : parse_terms(R, text)) {
    if (t.exponent < 0) fail(ErrorKind::Parse, "negative exponent in an ordinary skew polynomial");
    const auto k = static_cast<std::size_t>(t.exponent);
    if (k >= coeffs.size()) coeffs.resize(k + 1, R.zero());
    coeffs[k] = R.add(coeffs[k], t.coefficient);
  }
  return poly(std::move(coeffs));
}

LaurentSkewPoly SkewPolyRing::parse_laurent(std::string_view text) const {
  auto result = laurent(0, {});
  for (const auto& t : parse_terms(ring(), text)) {
    result = laurent_add(result, laurent_monomial(t.coefficient, t.exponent));
  }
  return result;
}

}  // namespace skewring
