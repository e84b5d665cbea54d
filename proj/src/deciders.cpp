#include "skewring/deciders.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace skewring {

namespace {

struct PropertyInfo {
  PropertyId id;
  std::string_view name;
};

constexpr std::array<PropertyInfo, 17> kPropertyNames{{
    {PropertyId::Reduced, "reduced"},
    {PropertyId::Domain, "domain"},
    {PropertyId::Commutative, "commutative"},
    {PropertyId::Semicommutative, "semicommutative"},
    {PropertyId::Reversible, "reversible"},
    {PropertyId::Symmetric, "symmetric"},
    {PropertyId::Rigid, "rigid"},
    {PropertyId::Armendariz, "armendariz"},
    {PropertyId::AlphaArmendariz, "alpha-armendariz"},
    {PropertyId::AlphaSkewArmendariz, "alpha-skew-armendariz"},
    {PropertyId::QuasiArmendariz, "quasi-armendariz"},
    {PropertyId::QAlphaArmendariz, "q-alpha-armendariz"},
    {PropertyId::QAlphaSkewArmendariz, "q-alpha-skew-armendariz"},
    {PropertyId::AlphaQuasiArmendariz, "alpha-quasi-armendariz"},
    {PropertyId::LaurentQAlphaSkew, "laurent-q-alpha-skew"},
    {PropertyId::PowerSeriesQAlphaSkew, "powerseries-q-alpha-skew"},
    {PropertyId::LaurentPowerSeriesQAlphaSkew, "laurent-powerseries-q-alpha-skew"},
}};

// What a polynomial-level property assumes and what it concludes.
enum class Hypothesis { Product, Sandwich };
enum class Conclusion {
  Plain,        // a_i b_j
  Skew,         // a_i alpha^i(b_j)
  QuasiPlain,   // a_i R b_j
  QuasiSkew,    // a_i R alpha^i(b_j)
  QuasiTwists,  // a_i R alpha^t(b_j), every t in the orbit envelope
};

struct Variant {
  Hypothesis hypothesis;
  Conclusion conclusion;
  bool identity_alpha;
};

Variant variant_of(PropertyId id) {
  switch (id) {
    case PropertyId::Armendariz: return {Hypothesis::Product, Conclusion::Plain, true};
    case PropertyId::AlphaArmendariz: return {Hypothesis::Product, Conclusion::Plain, false};
    case PropertyId::AlphaSkewArmendariz: return {Hypothesis::Product, Conclusion::Skew, false};
    case PropertyId::QuasiArmendariz: return {Hypothesis::Sandwich, Conclusion::QuasiPlain, true};
    case PropertyId::QAlphaArmendariz: return {Hypothesis::Sandwich, Conclusion::QuasiPlain, false};
    case PropertyId::QAlphaSkewArmendariz:
    case PropertyId::LaurentQAlphaSkew:
    case PropertyId::PowerSeriesQAlphaSkew:
    case PropertyId::LaurentPowerSeriesQAlphaSkew:
      return {Hypothesis::Sandwich, Conclusion::QuasiSkew, false};
    case PropertyId::AlphaQuasiArmendariz:
      return {Hypothesis::Sandwich, Conclusion::QuasiTwists, false};
    default:
      fail(ErrorKind::InvalidArgument,
           std::string(property_name(id)) + " is not a polynomial-level property");
  }
}

bool is_quasi(Conclusion c) {
  return c == Conclusion::QuasiPlain || c == Conclusion::QuasiSkew || c == Conclusion::QuasiTwists;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

Verdict element_verdict(PropertyId id, const FiniteRing& R, std::string endo_label = "") {
  Verdict v;
  v.property = id;
  v.envelope = Envelope::exhaustive();
  v.ring_label = R.label();
  v.endo_label = std::move(endo_label);
  return v;
}

void set_element_witness(Verdict& v, std::vector<Index> elements, std::optional<Index> offending) {
  v.holds = false;
  Witness w;
  w.kind = WitnessKind::Elements;
  w.elements = std::move(elements);
  w.offending = offending;
  v.witness = std::move(w);
}

// Shape of the searched windows. Position k of p holds the coefficient of
// x^(p_min + k); likewise for q.
struct Layout {
  WitnessKind kind = WitnessKind::Polynomial;
  std::int64_t p_min = 0, q_min = 0;
  std::size_t lp = 0, lq = 0;
  // Relative coefficients of p h q that must vanish, and the bound on
  // relative pairs i' + j' whose conclusion is checked. Exact products use
  // lp + lq - 1; truncated series use the truncation order.
  std::size_t limit = 0;
};

struct Hit {
  std::size_t ip = 0, jq = 0;
  std::optional<Index> middle;
  std::int64_t twist = 0;
  Index value = 0;
};

// Evaluates one (p, q) pair against a variant using flat tables. All state is
// read-only after construction; callers pass per-thread scratch.
class Kernel {
 public:
  Kernel(const Endomorphism& alpha, Variant variant, Layout layout)
      : alpha_(alpha), variant_(variant), layout_(layout) {
    const FiniteRing& R = alpha_.ring();
    n_ = R.size();
    zero_ = R.zero();
    add_ = R.add_table().data();
    mul_ = R.mul_table().data();
    envelope_ = alpha_.orbit().envelope();

    for (std::size_t ip = 0; ip < layout_.lp; ++ip) {
      const std::int64_t i = layout_.p_min + static_cast<std::int64_t>(ip);
      pow_i_.push_back(alpha_.power_map(i).data());
      for (std::size_t k = 0; k < envelope_; ++k) {
        pow_ik_.push_back(alpha_.power_map(i + static_cast<std::int64_t>(k)).data());
      }
    }
    for (std::size_t t = 0; t < envelope_; ++t) {
      pow_t_.push_back(alpha_.power_map(static_cast<std::int64_t>(t)).data());
    }
    if (is_quasi(variant_.conclusion)) {
      first_middle_.assign(n_ * n_, static_cast<Index>(n_));
      for (Index a = 0; a < n_; ++a) {
        for (Index b = 0; b < n_; ++b) {
          for (Index r = 0; r < n_; ++r) {
            if (mul(mul(a, r), b) != zero_) {
              first_middle_[a * n_ + b] = r;
              break;
            }
          }
        }
      }
    }
    // Sandwich middles: zero contributes nothing; the identity, tried first,
    // rejects most pairs at once.
    if (auto one = R.one(); one && *one != zero_) middles_.push_back(*one);
    for (Index r = 0; r < n_; ++r) {
      if (r != zero_ && (!R.one() || r != *R.one())) middles_.push_back(r);
    }
  }

  const Layout& layout() const { return layout_; }

  std::optional<Hit> examine(const Index* a, const Index* b, std::vector<Index>& scratch) const {
    auto hit = violation(a, b);
    if (!hit) return std::nullopt;
    const bool hyp = variant_.hypothesis == Hypothesis::Product ? product_vanishes(a, b)
                                                               : sandwiches_vanish(a, b, scratch);
    if (!hyp) return std::nullopt;
    return hit;
  }

 private:
  Index mul(Index a, Index b) const { return mul_[a * n_ + b]; }
  Index add(Index a, Index b) const { return add_[a * n_ + b]; }

  // Least (i, j) [then least t, r] breaking the conclusion.
  std::optional<Hit> violation(const Index* a, const Index* b) const {
    for (std::size_t ip = 0; ip < layout_.lp; ++ip) {
      if (a[ip] == zero_) continue;
      for (std::size_t jq = 0; jq < layout_.lq && ip + jq < layout_.limit; ++jq) {
        if (b[jq] == zero_) continue;
        const std::int64_t i = layout_.p_min + static_cast<std::int64_t>(ip);
        switch (variant_.conclusion) {
          case Conclusion::Plain: {
            const Index v = mul(a[ip], b[jq]);
            if (v != zero_) return Hit{ip, jq, std::nullopt, 0, v};
            break;
          }
          case Conclusion::Skew: {
            const Index v = mul(a[ip], pow_i_[ip][b[jq]]);
            if (v != zero_) return Hit{ip, jq, std::nullopt, i, v};
            break;
          }
          case Conclusion::QuasiPlain:
          case Conclusion::QuasiSkew: {
            const bool skew = variant_.conclusion == Conclusion::QuasiSkew;
            const Index bb = skew ? pow_i_[ip][b[jq]] : b[jq];
            const Index r = first_middle_[a[ip] * n_ + bb];
            if (r != n_) return Hit{ip, jq, r, skew ? i : 0, mul(mul(a[ip], r), bb)};
            break;
          }
          case Conclusion::QuasiTwists: {
            for (std::size_t t = 0; t < envelope_; ++t) {
              const Index bb = pow_t_[t][b[jq]];
              const Index r = first_middle_[a[ip] * n_ + bb];
              if (r != n_) {
                return Hit{ip, jq, r, static_cast<std::int64_t>(t), mul(mul(a[ip], r), bb)};
              }
            }
            break;
          }
        }
      }
    }
    return std::nullopt;
  }

  bool product_vanishes(const Index* a, const Index* b) const {
    for (std::size_t c = 0; c < layout_.limit; ++c) {
      Index acc = zero_;
      const std::size_t lo = c + 1 > layout_.lq ? c + 1 - layout_.lq : 0;
      const std::size_t hi = std::min(c, layout_.lp - 1);
      for (std::size_t ip = lo; ip <= hi; ++ip) {
        const Index x = a[ip], y = b[c - ip];
        if (x == zero_ || y == zero_) continue;
        acc = add(acc, mul(x, pow_i_[ip][y]));
      }
      if (acc != zero_) return false;
    }
    return true;
  }

  // p (r x^k) q has relative coefficient c equal to
  // sum over i' + j' = c of a_i alpha^i(r) alpha^(i+k)(b_j).
  bool sandwiches_vanish(const Index* a, const Index* b, std::vector<Index>& ar) const {
    ar.resize(layout_.lp);
    for (Index r : middles_) {
      for (std::size_t ip = 0; ip < layout_.lp; ++ip) {
        ar[ip] = a[ip] == zero_ ? zero_ : mul(a[ip], pow_i_[ip][r]);
      }
      for (std::size_t k = 0; k < envelope_; ++k) {
        for (std::size_t c = 0; c < layout_.limit; ++c) {
          Index acc = zero_;
          const std::size_t lo = c + 1 > layout_.lq ? c + 1 - layout_.lq : 0;
          const std::size_t hi = std::min(c, layout_.lp - 1);
          for (std::size_t ip = lo; ip <= hi; ++ip) {
            const Index x = ar[ip], y = b[c - ip];
            if (x == zero_ || y == zero_) continue;
            acc = add(acc, mul(x, pow_ik_[ip * envelope_ + k][y]));
          }
          if (acc != zero_) return false;
        }
      }
    }
    return true;
  }

  Endomorphism alpha_;
  Variant variant_;
  Layout layout_;
  std::size_t n_ = 0;
  Index zero_ = 0;
  const Index* add_ = nullptr;
  const Index* mul_ = nullptr;
  std::size_t envelope_ = 1;
  std::vector<const Index*> pow_i_, pow_ik_, pow_t_;
  std::vector<Index> first_middle_;
  std::vector<Index> middles_;
};

// Tuples whose highest nonzero position is `top`, numbered in lexicographic
// order with position 0 most significant.
class TupleCodec {
 public:
  TupleCodec(const FiniteRing& R, std::size_t len) : n_(R.size()), zero_(R.zero()), len_(len) {
    for (Index a = 0; a < n_; ++a) {
      if (a != zero_) nonzero_.push_back(a);
    }
  }
  std::uint64_t count(std::size_t top) const { return sat_mul(sat_pow(n_, top), nonzero_.size()); }
  void decode(std::uint64_t u, std::size_t top, Index* out) const {
    for (std::size_t pos = top + 1; pos < len_; ++pos) out[pos] = zero_;
    out[top] = nonzero_[u % nonzero_.size()];
    u /= nonzero_.size();
    for (std::size_t pos = top; pos-- > 0;) {
      out[pos] = static_cast<Index>(u % n_);
      u /= n_;
    }
  }

 private:
  std::size_t n_;
  Index zero_;
  std::size_t len_;
  std::vector<Index> nonzero_;
};

struct Found {
  std::vector<Index> p, q;
  Hit hit;
};

unsigned worker_count(const SearchOptions& options) {
  unsigned t = options.threads;
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return t;
}

// Least violating pair within the class (top_p, top_q), or nothing.
std::optional<Found> search_class(const Kernel& K, const TupleCodec& pc, const TupleCodec& qc,
                                  std::size_t top_p, std::size_t top_q, unsigned threads) {
  const Layout& L = K.layout();
  const std::uint64_t np = pc.count(top_p), nq = qc.count(top_q);

  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Found> {
    std::vector<Index> p(L.lp), q(L.lq), scratch;
    for (std::uint64_t u = begin; u < end; ++u) {
      pc.decode(u, top_p, p.data());
      for (std::uint64_t v = 0; v < nq; ++v) {
        qc.decode(v, top_q, q.data());
        if (auto hit = K.examine(p.data(), q.data(), scratch)) return Found{p, q, *hit};
      }
    }
    return std::nullopt;
  };

  if (threads <= 1 || sat_mul(np, nq) < 4096 || np < 2) return scan(0, np);

  // Chunks of p are claimed in increasing order; once a chunk holds a
  // witness, later chunks are skipped and earlier ones still finish, so the
  // least witness wins regardless of scheduling.
  const std::uint64_t chunks = std::min<std::uint64_t>(np, std::uint64_t{threads} * 16);
  const std::uint64_t chunk_size = (np + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::vector<std::optional<Found>> results(chunks);

  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks || c > best.load()) return;
      const std::uint64_t begin = c * chunk_size;
      const std::uint64_t end = std::min(np, begin + chunk_size);
      if (begin >= end) continue;
      if (auto f = scan(begin, end)) {
        results[c] = std::move(f);
        std::uint64_t cur = best.load();
        while (c < cur && !best.compare_exchange_weak(cur, c)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

void guard_budget(std::size_t ring_size, const Envelope& env, const SearchOptions& options) {
  const std::uint64_t space = search_space(ring_size, env);
  if (space > options.tuple_budget) {
    fail(ErrorKind::Budget, "search space of " +
                                (space == std::numeric_limits<std::uint64_t>::max()
                                     ? std::string("more than 2^64")
                                     : std::to_string(space)) +
                                " pairs over " + env.describe() + " exceeds the tuple budget of " +
                                std::to_string(options.tuple_budget));
  }
}

// Drops zero coefficients above the top term, and for Laurent and series
// windows also below the lowest one, so witnesses match their parsed text.
void trim_window(const FiniteRing& R, std::vector<Index>& c, std::int64_t& min_exp, bool trim_low) {
  while (!c.empty() && R.is_zero(c.back())) c.pop_back();
  if (!trim_low) return;
  std::size_t lead = 0;
  while (lead < c.size() && R.is_zero(c[lead])) ++lead;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
  min_exp += static_cast<std::int64_t>(lead);
}

Verdict run_search(const Endomorphism& alpha, PropertyId id, const Envelope& env, Layout layout,
                   const SearchOptions& options) {
  const Variant variant = variant_of(id);
  const FiniteRing& R = alpha.ring();
  guard_budget(R.size(), env, options);
  const Endomorphism beta = variant.identity_alpha ? identity_endomorphism(R) : alpha;

  Verdict v;
  v.property = id;
  v.envelope = env;
  v.ring_label = R.label();
  v.endo_label = beta.label();
  if (R.size() < 2 || layout.lp == 0 || layout.lq == 0) return v;

  const Kernel K(beta, variant, layout);
  const TupleCodec pc(R, layout.lp), qc(R, layout.lq);
  const unsigned threads = worker_count(options);
  for (std::size_t tp = 0; tp < layout.lp; ++tp) {
    for (std::size_t tq = 0; tq < layout.lq; ++tq) {
      auto found = search_class(K, pc, qc, tp, tq, threads);
      if (!found) continue;
      Witness w;
      w.kind = layout.kind;
      w.p = std::move(found->p);
      w.q = std::move(found->q);
      w.p_min_exp = layout.p_min;
      w.q_min_exp = layout.q_min;
      w.i = layout.p_min + static_cast<std::int64_t>(found->hit.ip);
      w.j = layout.q_min + static_cast<std::int64_t>(found->hit.jq);
      w.middle = found->hit.middle;
      w.twist = found->hit.twist;
      w.offending = found->hit.value;
      trim_window(R, w.p, w.p_min_exp, layout.kind != WitnessKind::Polynomial);
      trim_window(R, w.q, w.q_min_exp, layout.kind != WitnessKind::Polynomial);
      v.holds = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

void require_automorphism(const Endomorphism& alpha, PropertyId id) {
  if (!alpha.is_automorphism()) {
    fail(ErrorKind::InvalidArgument,
         std::string(property_name(id)) + " needs an automorphism; " + alpha.label() +
             " is not injective");
  }
}

std::string label_of(const FiniteRing& R, Index a) { return R.element_label(a); }

}  // namespace

// Names ------------------------------------------------------------------------

std::string_view property_name(PropertyId id) {
  for (const auto& info : kPropertyNames) {
    if (info.id == id) return info.name;
  }
  return "unknown";
}

std::optional<PropertyId> property_from_name(std::string_view name) {
  for (const auto& info : kPropertyNames) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

bool is_element_level(PropertyId id) {
  switch (id) {
    case PropertyId::Reduced:
    case PropertyId::Domain:
    case PropertyId::Commutative:
    case PropertyId::Semicommutative:
    case PropertyId::Reversible:
    case PropertyId::Symmetric:
    case PropertyId::Rigid:
      return true;
    default:
      return false;
  }
}

std::string Envelope::describe() const {
  switch (kind) {
    case EnvelopeKind::Exhaustive:
      return "all elements";
    case EnvelopeKind::Degree:
      return "degree <= " + std::to_string(degree);
    case EnvelopeKind::Window:
      return "exponents p in [-" + std::to_string(window.m) + ", " + std::to_string(window.n) +
             "], q in [-" + std::to_string(window.t) + ", " + std::to_string(window.s) + "]";
    case EnvelopeKind::Truncation: {
      std::string out = "truncated at " + std::to_string(order) + " coefficients from x^" +
                        std::to_string(min_exp);
      if (free != order) out += ", first " + std::to_string(free) + " free";
      return out;
    }
  }
  return "";
}

// Element-level ------------------------------------------------------------------

Verdict is_reduced(const FiniteRing& R) {
  Verdict v = element_verdict(PropertyId::Reduced, R);
  for (Index a = 0; a < R.size(); ++a) {
    if (!R.is_zero(a) && R.is_zero(R.mul(a, a))) {
      set_element_witness(v, {a}, a);
      break;
    }
  }
  return v;
}

Verdict is_domain(const FiniteRing& R) {
  Verdict v = element_verdict(PropertyId::Domain, R);
  if (R.size() == 1) {
    set_element_witness(v, {}, std::nullopt);
    return v;
  }
  for (Index a = 0; a < R.size() && v.holds; ++a) {
    if (R.is_zero(a)) continue;
    for (Index b = 0; b < R.size(); ++b) {
      if (!R.is_zero(b) && R.is_zero(R.mul(a, b))) {
        set_element_witness(v, {a, b}, std::nullopt);
        break;
      }
    }
  }
  return v;
}

Verdict is_commutative(const FiniteRing& R) {
  Verdict v = element_verdict(PropertyId::Commutative, R);
  for (Index a = 0; a < R.size() && v.holds; ++a) {
    for (Index b = 0; b < R.size(); ++b) {
      const Index diff = R.sub(R.mul(a, b), R.mul(b, a));
      if (!R.is_zero(diff)) {
        set_element_witness(v, {a, b}, diff);
        break;
      }
    }
  }
  return v;
}

Verdict is_semicommutative(const FiniteRing& R) {
  Verdict v = element_verdict(PropertyId::Semicommutative, R);
  for (Index a = 0; a < R.size(); ++a) {
    for (Index b = 0; b < R.size(); ++b) {
      if (!R.is_zero(R.mul(a, b))) continue;
      for (Index r = 0; r < R.size(); ++r) {
        const Index arb = R.mul(R.mul(a, r), b);
        if (!R.is_zero(arb)) {
          set_element_witness(v, {a, b, r}, arb);
          return v;
        }
      }
    }
  }
  return v;
}

Verdict is_reversible(const FiniteRing& R) {
  Verdict v = element_verdict(PropertyId::Reversible, R);
  for (Index a = 0; a < R.size(); ++a) {
    for (Index b = 0; b < R.size(); ++b) {
      const Index ba = R.mul(b, a);
      if (R.is_zero(R.mul(a, b)) && !R.is_zero(ba)) {
        set_element_witness(v, {a, b}, ba);
        return v;
      }
    }
  }
  return v;
}

// abc = 0 implies bac = 0.
Verdict is_symmetric(const FiniteRing& R) {
  Verdict v = element_verdict(PropertyId::Symmetric, R);
  for (Index a = 0; a < R.size(); ++a) {
    for (Index b = 0; b < R.size(); ++b) {
      const Index ab = R.mul(a, b), ba = R.mul(b, a);
      for (Index c = 0; c < R.size(); ++c) {
        const Index bac = R.mul(ba, c);
        if (R.is_zero(R.mul(ab, c)) && !R.is_zero(bac)) {
          set_element_witness(v, {a, b, c}, bac);
          return v;
        }
      }
    }
  }
  return v;
}

Verdict is_rigid(const Endomorphism& alpha) {
  const FiniteRing& R = alpha.ring();
  Verdict v = element_verdict(PropertyId::Rigid, R, alpha.label());
  for (Index r = 0; r < R.size(); ++r) {
    if (!R.is_zero(r) && R.is_zero(R.mul(r, alpha(r)))) {
      set_element_witness(v, {r}, r);
      break;
    }
  }
  return v;
}

// Sandwich quantifiers -------------------------------------------------------------

bool forall_sandwich_zero(const SkewPolyRing& ctx, const SkewPoly& p, const SkewPoly& q) {
  const FiniteRing& R = ctx.ring();
  const std::size_t ks = ctx.alpha().orbit().envelope();
  for (Index r = 0; r < R.size(); ++r) {
    for (std::size_t k = 0; k < ks; ++k) {
      if (!ctx.sandwich(p, r, k, q).is_zero()) return false;
    }
  }
  return true;
}

bool forall_sandwich_zero_laurent(const SkewPolyRing& ctx, const LaurentSkewPoly& p,
                                  const LaurentSkewPoly& q) {
  const FiniteRing& R = ctx.ring();
  const std::size_t period = ctx.alpha().orbit().period;
  for (Index r = 0; r < R.size(); ++r) {
    for (std::size_t k = 0; k < period; ++k) {
      const auto h = ctx.laurent_monomial(r, static_cast<std::int64_t>(k));
      if (!ctx.laurent_mul(ctx.laurent_mul(p, h), q).is_zero()) return false;
    }
  }
  return true;
}

bool forall_sandwich_zero_series(const SkewPolyRing& ctx, const TruncatedSkewSeries& p,
                                 const TruncatedSkewSeries& q) {
  const FiniteRing& R = ctx.ring();
  const std::int64_t span_p = p.order() - p.min_exp();
  const std::int64_t span_q = q.order() - q.min_exp();
  // Monomials beyond the orbit envelope repeat earlier sandwiches; the range
  // also covers every exponent below the truncation order.
  const std::int64_t ks = std::max<std::int64_t>(
      static_cast<std::int64_t>(ctx.alpha().orbit().envelope()), std::max(span_p, span_q));
  for (Index r = 0; r < R.size(); ++r) {
    for (std::int64_t k = 0; k < ks; ++k) {
      // Exact enough that the product's truncation is set by p and q alone.
      const auto h = ctx.series(ctx.monomial(r, static_cast<std::size_t>(k)),
                                k + 1 + span_p + span_q);
      if (!ctx.is_zero(ctx.truncated_mul(ctx.truncated_mul(p, h), q))) return false;
    }
  }
  return true;
}

// Polynomial-level -------------------------------------------------------------------

std::uint64_t search_space(std::size_t n, const Envelope& env) {
  switch (env.kind) {
    case EnvelopeKind::Exhaustive:
      return sat_pow(n, 3);
    case EnvelopeKind::Degree:
      return sat_pow(n, 2 * (env.degree + 1));
    case EnvelopeKind::Window: {
      const auto& w = env.window;
      return sat_pow(n, w.m + w.n + w.t + w.s + 2);
    }
    case EnvelopeKind::Truncation:
      return sat_pow(n, 2 * env.free);
  }
  return 0;
}

Verdict check_armendariz_family(const Endomorphism& alpha, std::size_t degree, PropertyId variant,
                                const SearchOptions& options) {
  switch (variant) {
    case PropertyId::Armendariz:
    case PropertyId::AlphaArmendariz:
    case PropertyId::AlphaSkewArmendariz:
    case PropertyId::QuasiArmendariz:
    case PropertyId::QAlphaArmendariz:
    case PropertyId::QAlphaSkewArmendariz:
    case PropertyId::AlphaQuasiArmendariz:
      break;
    default:
      fail(ErrorKind::InvalidArgument,
           std::string(property_name(variant)) + " is not decided over a degree bound");
  }
  Layout L;
  L.kind = WitnessKind::Polynomial;
  L.lp = L.lq = degree + 1;
  L.limit = 2 * degree + 1;
  return run_search(alpha, variant, Envelope::degree_bound(degree), L, options);
}

Verdict check_laurent_q_alpha_skew(const Endomorphism& alpha, LaurentWindow window,
                                   const SearchOptions& options) {
  require_automorphism(alpha, PropertyId::LaurentQAlphaSkew);
  Layout L;
  L.kind = WitnessKind::Laurent;
  L.p_min = -static_cast<std::int64_t>(window.m);
  L.q_min = -static_cast<std::int64_t>(window.t);
  L.lp = window.m + window.n + 1;
  L.lq = window.t + window.s + 1;
  L.limit = L.lp + L.lq - 1;
  return run_search(alpha, PropertyId::LaurentQAlphaSkew, Envelope::laurent_window(window), L,
                    options);
}

Verdict check_powerseries_q_alpha_skew(const Endomorphism& alpha, std::size_t order, bool laurent,
                                       const SearchOptions& options,
                                       std::optional<std::size_t> free) {
  const PropertyId id =
      laurent ? PropertyId::LaurentPowerSeriesQAlphaSkew : PropertyId::PowerSeriesQAlphaSkew;
  if (order == 0) fail(ErrorKind::InvalidArgument, "truncation order must be at least 1");
  if (laurent) require_automorphism(alpha, id);
  Envelope env = Envelope::truncation(order, laurent);
  env.free = free.value_or(order);
  if (env.free == 0 || env.free > order) {
    fail(ErrorKind::InvalidArgument, "free coefficients must lie in [1, " + std::to_string(order) + "]");
  }
  Layout L;
  L.kind = WitnessKind::Series;
  L.p_min = L.q_min = env.min_exp;
  L.lp = L.lq = env.free;
  L.limit = order;
  return run_search(alpha, id, env, L, options);
}

Verdict check_property(const Endomorphism& alpha, PropertyId property, const Envelope& envelope,
                       const SearchOptions& options) {
  const FiniteRing& R = alpha.ring();
  switch (property) {
    case PropertyId::Reduced: return is_reduced(R);
    case PropertyId::Domain: return is_domain(R);
    case PropertyId::Commutative: return is_commutative(R);
    case PropertyId::Semicommutative: return is_semicommutative(R);
    case PropertyId::Reversible: return is_reversible(R);
    case PropertyId::Symmetric: return is_symmetric(R);
    case PropertyId::Rigid: return is_rigid(alpha);
    case PropertyId::LaurentQAlphaSkew:
      if (envelope.kind != EnvelopeKind::Window) {
        fail(ErrorKind::InvalidArgument, "laurent-q-alpha-skew needs an exponent window");
      }
      return check_laurent_q_alpha_skew(alpha, envelope.window, options);
    case PropertyId::PowerSeriesQAlphaSkew:
    case PropertyId::LaurentPowerSeriesQAlphaSkew: {
      const bool laurent = property == PropertyId::LaurentPowerSeriesQAlphaSkew;
      if (envelope.kind != EnvelopeKind::Truncation || envelope.min_exp != (laurent ? -1 : 0)) {
        fail(ErrorKind::InvalidArgument,
             std::string(property_name(property)) + " needs a truncation order");
      }
      return check_powerseries_q_alpha_skew(alpha, envelope.order, laurent, options,
                                            envelope.free);
    }
    default:
      if (envelope.kind != EnvelopeKind::Degree) {
        fail(ErrorKind::InvalidArgument,
             std::string(property_name(property)) + " needs a degree bound");
      }
      return check_armendariz_family(alpha, envelope.degree, property, options);
  }
}

Index lemma1_chain(const SkewPolyRing& ctx, std::span<const SkewPoly> polys,
                   std::span<const std::size_t> indices) {
  if (polys.size() != indices.size() || polys.empty()) {
    fail(ErrorKind::InvalidArgument, "chain needs one index per polynomial");
  }
  const FiniteRing& R = ctx.ring();
  Index value = R.zero();
  std::int64_t shift = 0;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto deg = polys[k].degree();
    if (!deg || indices[k] > *deg) {
      fail(ErrorKind::InvalidArgument, "chain index " + std::to_string(indices[k]) +
                                           " exceeds the degree of polynomial " + std::to_string(k + 1));
    }
    const Index c = ctx.alpha().apply_power(shift, polys[k].coeffs()[indices[k]]);
    value = k == 0 ? c : R.mul(value, c);
    shift += static_cast<std::int64_t>(indices[k]);
  }
  return value;
}

// Replay -----------------------------------------------------------------------------

namespace {

ReplayResult replay_elements(const Endomorphism& alpha, const Verdict& v) {
  const FiniteRing& R = alpha.ring();
  const Witness& w = *v.witness;
  auto need = [&](std::size_t count) {
    if (w.elements.size() != count) {
      fail(ErrorKind::InvalidArgument, "witness for " + std::string(property_name(v.property)) +
                                           " needs " + std::to_string(count) + " elements");
    }
  };
  auto nonzero_as_recorded = [&](Index value, const std::string& what) -> ReplayResult {
    if (R.is_zero(value)) return {false, what + " is zero"};
    if (w.offending != value) {
      return {false, what + " is " + label_of(R, value) + ", recorded " +
                         (w.offending ? label_of(R, *w.offending) : std::string("nothing"))};
    }
    return {true, what + " = " + label_of(R, value)};
  };
  const auto& e = w.elements;
  switch (v.property) {
    case PropertyId::Reduced: {
      need(1);
      if (!R.is_zero(R.mul(e[0], e[0]))) return {false, "a^2 is not zero"};
      return nonzero_as_recorded(e[0], "a");
    }
    case PropertyId::Rigid: {
      need(1);
      if (!R.is_zero(R.mul(e[0], alpha(e[0])))) return {false, "a alpha(a) is not zero"};
      return nonzero_as_recorded(e[0], "a");
    }
    case PropertyId::Domain: {
      if (e.empty()) {
        if (R.size() == 1) return {true, "the zero ring is not a domain"};
        return {false, "empty witness on a nonzero ring"};
      }
      need(2);
      if (R.is_zero(e[0]) || R.is_zero(e[1])) return {false, "a zero divisor pair must be nonzero"};
      if (!R.is_zero(R.mul(e[0], e[1]))) return {false, "ab is not zero"};
      if (w.offending) return {false, "no offending value is recorded for domain"};
      return {true, "ab = 0 with a, b nonzero"};
    }
    case PropertyId::Commutative: {
      need(2);
      return nonzero_as_recorded(R.sub(R.mul(e[0], e[1]), R.mul(e[1], e[0])), "ab - ba");
    }
    case PropertyId::Semicommutative: {
      need(3);
      if (!R.is_zero(R.mul(e[0], e[1]))) return {false, "ab is not zero"};
      return nonzero_as_recorded(R.mul(R.mul(e[0], e[2]), e[1]), "arb");
    }
    case PropertyId::Reversible: {
      need(2);
      if (!R.is_zero(R.mul(e[0], e[1]))) return {false, "ab is not zero"};
      return nonzero_as_recorded(R.mul(e[1], e[0]), "ba");
    }
    case PropertyId::Symmetric: {
      need(3);
      if (!R.is_zero(R.mul(R.mul(e[0], e[1]), e[2]))) return {false, "abc is not zero"};
      return nonzero_as_recorded(R.mul(R.mul(e[1], e[0]), e[2]), "bac");
    }
    default:
      break;
  }
  return {false, "not an element-level property"};
}

ReplayResult replay_polynomial(const Endomorphism& alpha, const Verdict& v) {
  const Variant variant = variant_of(v.property);
  const FiniteRing& R = alpha.ring();
  const Endomorphism beta = variant.identity_alpha ? identity_endomorphism(R) : alpha;
  const SkewPolyRing ctx(beta);
  const Witness& w = *v.witness;
  const Envelope& env = v.envelope;

  auto expect_kind = [&](WitnessKind kind) {
    if (w.kind != kind) fail(ErrorKind::InvalidArgument, "witness kind does not match the envelope");
  };
  auto inside = [](std::int64_t lo, std::size_t len, std::int64_t min, std::int64_t max) {
    return lo >= min && lo + static_cast<std::int64_t>(len) - 1 <= max;
  };

  bool hypothesis = false;
  Index a = R.zero(), b = R.zero();
  switch (env.kind) {
    case EnvelopeKind::Degree: {
      expect_kind(WitnessKind::Polynomial);
      const auto d = static_cast<std::int64_t>(env.degree);
      if (!inside(w.p_min_exp, w.p.size(), 0, d) || !inside(w.q_min_exp, w.q.size(), 0, d)) {
        return {false, "p or q lies outside degree <= " + std::to_string(env.degree)};
      }
      std::vector<Index> pc(static_cast<std::size_t>(w.p_min_exp), R.zero());
      std::vector<Index> qc(static_cast<std::size_t>(w.q_min_exp), R.zero());
      pc.insert(pc.end(), w.p.begin(), w.p.end());
      qc.insert(qc.end(), w.q.begin(), w.q.end());
      const SkewPoly P = ctx.poly(pc), Q = ctx.poly(qc);
      if (P.is_zero() || Q.is_zero()) return {false, "p and q must be nonzero"};
      if (w.i < 0 || w.j < 0 || w.i > d || w.j > d) return {false, "pair outside the degree bound"};
      hypothesis = variant.hypothesis == Hypothesis::Product ? ctx.mul(P, Q).is_zero()
                                                             : forall_sandwich_zero(ctx, P, Q);
      a = P.coeff(static_cast<std::size_t>(w.i), R.zero());
      b = Q.coeff(static_cast<std::size_t>(w.j), R.zero());
      break;
    }
    case EnvelopeKind::Window: {
      expect_kind(WitnessKind::Laurent);
      if (!alpha.is_automorphism()) return {false, "Laurent witness over a non-invertible map"};
      const auto& win = env.window;
      const auto m = static_cast<std::int64_t>(win.m), n = static_cast<std::int64_t>(win.n);
      const auto t = static_cast<std::int64_t>(win.t), s = static_cast<std::int64_t>(win.s);
      if (!inside(w.p_min_exp, w.p.size(), -m, n) || !inside(w.q_min_exp, w.q.size(), -t, s)) {
        return {false, "p or q lies outside the exponent window"};
      }
      if (w.i < -m || w.i > n || w.j < -t || w.j > s) return {false, "pair outside the window"};
      const auto P = ctx.laurent(w.p_min_exp, w.p), Q = ctx.laurent(w.q_min_exp, w.q);
      if (P.is_zero() || Q.is_zero()) return {false, "p and q must be nonzero"};
      hypothesis = forall_sandwich_zero_laurent(ctx, P, Q);
      auto coeff = [&](const LaurentSkewPoly& X, std::int64_t e) {
        if (X.is_zero() || e < X.min_exp() || e > X.max_exp()) return R.zero();
        return X.coeffs()[static_cast<std::size_t>(e - X.min_exp())];
      };
      a = coeff(P, w.i);
      b = coeff(Q, w.j);
      break;
    }
    case EnvelopeKind::Truncation: {
      expect_kind(WitnessKind::Series);
      const std::int64_t lo = env.min_exp;
      const auto N = static_cast<std::int64_t>(env.order);
      const auto hi = lo + static_cast<std::int64_t>(env.free) - 1;
      if (!inside(w.p_min_exp, w.p.size(), lo, hi) || !inside(w.q_min_exp, w.q.size(), lo, hi)) {
        return {false, "p or q has coefficients outside the free window"};
      }
      if (w.i < lo || w.j < lo || (w.i - lo) + (w.j - lo) >= N) {
        return {false, "pair is not determined at this truncation"};
      }
      auto pad = [&](std::int64_t first, const std::vector<Index>& c) {
        std::vector<Index> out(static_cast<std::size_t>(N), R.zero());
        for (std::size_t k = 0; k < c.size(); ++k) {
          out[static_cast<std::size_t>(first - lo) + k] = c[k];
        }
        return out;
      };
      const auto pc = pad(w.p_min_exp, w.p), qc = pad(w.q_min_exp, w.q);
      auto all_zero = [&](const std::vector<Index>& c) {
        return std::all_of(c.begin(), c.end(), [&](Index x) { return R.is_zero(x); });
      };
      if (all_zero(pc) || all_zero(qc)) return {false, "p and q must be nonzero"};
      const auto P = ctx.series(lo, lo + N, pc), Q = ctx.series(lo, lo + N, qc);
      hypothesis = forall_sandwich_zero_series(ctx, P, Q);
      a = P.coeff_at(w.i);
      b = Q.coeff_at(w.j);
      break;
    }
    case EnvelopeKind::Exhaustive:
      return {false, "polynomial property with an element envelope"};
  }
  if (!hypothesis) return {false, "hypothesis does not vanish for the recorded p, q"};

  switch (variant.conclusion) {
    case Conclusion::Plain:
      if (w.twist != 0) return {false, "twist must be 0"};
      break;
    case Conclusion::Skew:
    case Conclusion::QuasiSkew:
      if (w.twist != w.i) return {false, "twist must equal i"};
      break;
    case Conclusion::QuasiPlain:
      if (w.twist != 0) return {false, "twist must be 0"};
      break;
    case Conclusion::QuasiTwists:
      if (w.twist < 0 || w.twist >= static_cast<std::int64_t>(beta.orbit().envelope())) {
        return {false, "twist outside the orbit envelope"};
      }
      break;
  }
  if (is_quasi(variant.conclusion) != w.middle.has_value()) {
    return {false, is_quasi(variant.conclusion) ? "missing middle factor r"
                                                : "unexpected middle factor r"};
  }
  const Index twisted = beta.apply_power(w.twist, b);
  const Index value = w.middle ? R.mul(R.mul(a, *w.middle), twisted) : R.mul(a, twisted);
  if (R.is_zero(value)) return {false, "the recorded conclusion value is zero"};
  if (w.offending != value) {
    return {false, "conclusion value is " + label_of(R, value) + ", recorded " +
                       (w.offending ? label_of(R, *w.offending) : std::string("nothing"))};
  }
  return {true, "hypothesis vanishes; conclusion value " + label_of(R, value)};
}

}  // namespace

ReplayResult replay(const Endomorphism& alpha, const Verdict& verdict) {
  const FiniteRing& R = alpha.ring();
  if (verdict.holds) {
    if (verdict.witness) return {false, "a holding verdict carries no witness"};
    const Verdict again = check_property(alpha, verdict.property, verdict.envelope);
    if (again.holds) return {true, "holds again over " + verdict.envelope.describe()};
    return {false, "rerun fails over " + verdict.envelope.describe()};
  }
  if (!verdict.witness) return {false, "failing verdict without a witness"};
  const Witness& w = *verdict.witness;
  auto in_range = [&](Index a) {
    if (a >= R.size()) {
      fail(ErrorKind::InvalidArgument, "witness element index " + std::to_string(a) +
                                           " is outside the ring of size " + std::to_string(R.size()));
    }
  };
  for (Index a : w.elements) in_range(a);
  for (Index a : w.p) in_range(a);
  for (Index a : w.q) in_range(a);
  if (w.middle) in_range(*w.middle);
  if (w.offending) in_range(*w.offending);

  if (is_element_level(verdict.property)) {
    if (w.kind != WitnessKind::Elements) {
      fail(ErrorKind::InvalidArgument, "element-level verdict with a polynomial witness");
    }
    return replay_elements(alpha, verdict);
  }
  return replay_polynomial(alpha, verdict);
}

}  // namespace skewring
