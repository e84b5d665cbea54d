#include "skewring/ring.hpp"

#include <atomic>
#include <map>
#include <numeric>
#include <sstream>

namespace skewring {

namespace {

std::atomic<std::uint64_t> next_id{1};

std::uint64_t fresh_id() { return next_id.fetch_add(1, std::memory_order_relaxed); }

std::string triple_text(const std::vector<std::string>& labels, Index a, Index b, Index c) {
  return "(" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")";
}

void check_cap(std::size_t n, const RingLimits& limits) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "a ring needs at least one element");
  if (n > limits.size_cap) {
    fail(ErrorKind::SizeCap, "ring of " + std::to_string(n) + " elements exceeds the size cap of " +
                                 std::to_string(limits.size_cap));
  }
}

void check_table(std::span<const Index> table, std::size_t rows, std::size_t cols,
                 std::size_t range, const char* what) {
  if (table.size() != rows * cols) {
    fail(ErrorKind::InvalidArgument, std::string(what) + " table has " +
                                         std::to_string(table.size()) + " entries, expected " +
                                         std::to_string(rows * cols));
  }
  for (Index v : table) {
    if (v >= range) {
      fail(ErrorKind::InvalidArgument,
           std::string(what) + " table entry " + std::to_string(v) + " is out of range");
    }
  }
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    fail(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " element labels, got " +
                                         std::to_string(labels.size()));
  }
  std::map<std::string_view, Index> seen;
  for (Index i = 0; i < n; ++i) {
    const auto& l = labels[i];
    if (l.empty()) fail(ErrorKind::InvalidArgument, "element labels must be non-empty");
    if (l.find(" + ") != std::string::npos || l.find("*x") != std::string::npos ||
        l.find('"') != std::string::npos) {
      fail(ErrorKind::InvalidArgument, "element label '" + l + "' collides with polynomial syntax");
    }
    if (!seen.emplace(l, i).second) {
      fail(ErrorKind::InvalidArgument, "duplicate element label '" + l + "'");
    }
  }
}

}  // namespace

// FiniteRing -----------------------------------------------------------------

FiniteRing FiniteRing::from_tables(std::vector<Index> add, std::vector<Index> mul,
                                   std::vector<std::string> element_labels, std::string label,
                                   RingLimits limits) {
  std::size_t n = 0;
  while (n * n < add.size()) ++n;
  if (n * n != add.size()) fail(ErrorKind::InvalidArgument, "addition table is not square");
  check_cap(n, limits);
  check_table(add, n, n, n, "addition");
  check_table(mul, n, n, n, "multiplication");
  if (element_labels.empty()) element_labels = default_labels(n);
  check_labels(element_labels, n);
  const auto& L = element_labels;
  auto A = [&](Index a, Index b) { return add[a * n + b]; };
  auto M = [&](Index a, Index b) { return mul[a * n + b]; };

  std::optional<Index> zero;
  for (Index z = 0; z < n && !zero; ++z) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = A(z, a) == a && A(a, z) == a;
    if (ok) zero = z;
  }
  if (!zero) fail(ErrorKind::AxiomViolation, "addition has no identity element");

  std::vector<Index> neg(n);
  for (Index a = 0; a < n; ++a) {
    bool found = false;
    for (Index b = 0; b < n && !found; ++b) {
      if (A(a, b) == *zero) {
        neg[a] = b;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::AxiomViolation, "element " + L[a] + " has no additive inverse");
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) {
        fail(ErrorKind::AxiomViolation,
             "addition is not commutative at (" + L[a] + ", " + L[b] + ")");
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) {
          fail(ErrorKind::AxiomViolation,
               "addition is not associative at " + triple_text(L, a, b, c));
        }
        if (M(M(a, b), c) != M(a, M(b, c))) {
          fail(ErrorKind::AxiomViolation,
               "multiplication is not associative at " + triple_text(L, a, b, c) + ": (ab)c = " +
                   L[M(M(a, b), c)] + ", a(bc) = " + L[M(a, M(b, c))]);
        }
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) {
          fail(ErrorKind::AxiomViolation,
               "left distributivity fails at " + triple_text(L, a, b, c));
        }
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) {
          fail(ErrorKind::AxiomViolation,
               "right distributivity fails at " + triple_text(L, a, b, c));
        }
      }
    }
  }
  std::optional<Index> one;
  for (Index e = 0; e < n && !one; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = M(e, a) == a && M(a, e) == a;
    if (ok) one = e;
  }

  auto d = std::make_shared<Data>();
  d->id = fresh_id();
  d->n = n;
  d->add = std::move(add);
  d->mul = std::move(mul);
  d->neg = std::move(neg);
  d->zero = *zero;
  d->one = one;
  d->labels = std::move(element_labels);
  d->label = std::move(label);
  return FiniteRing(std::move(d));
}

RingElement FiniteRing::element(Index index) const {
  if (index >= size()) {
    fail(ErrorKind::InvalidArgument, "element index " + std::to_string(index) +
                                         " out of range for ring of size " + std::to_string(size()));
  }
  return {id(), index};
}

Index FiniteRing::index_of(RingElement e) const {
  if (e.ring != id()) fail(ErrorKind::Mismatch, "element belongs to a different ring");
  return e.index;
}

RingElement FiniteRing::add(RingElement a, RingElement b) const {
  return {id(), add(index_of(a), index_of(b))};
}
RingElement FiniteRing::mul(RingElement a, RingElement b) const {
  return {id(), mul(index_of(a), index_of(b))};
}
RingElement FiniteRing::neg(RingElement a) const { return {id(), neg(index_of(a))}; }

std::optional<Index> FiniteRing::find_label(std::string_view text) const {
  for (Index i = 0; i < size(); ++i) {
    if (d_->labels[i] == text) return i;
  }
  return std::nullopt;
}

FiniteRing FiniteRing::with_pair_shape(PairShape shape) const {
  auto d = std::make_shared<Data>(*d_);
  d->pair = shape;
  return FiniteRing(std::move(d));
}

FiniteRing FiniteRing::with_label(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return FiniteRing(std::move(d));
}

// Endomorphism ---------------------------------------------------------------

Endomorphism Endomorphism::from_images(const FiniteRing& ring, std::vector<Index> images,
                                       std::string label) {
  const std::size_t n = ring.size();
  if (images.size() != n) {
    fail(ErrorKind::InvalidArgument, "endomorphism needs " + std::to_string(n) + " images, got " +
                                         std::to_string(images.size()));
  }
  for (Index v : images) {
    if (v >= n) fail(ErrorKind::InvalidArgument, "image index " + std::to_string(v) + " out of range");
  }
  const auto& L = ring.element_labels();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (images[ring.add(a, b)] != ring.add(images[a], images[b])) {
        fail(ErrorKind::AxiomViolation,
             "map is not additive at (" + L[a] + ", " + L[b] + ")");
      }
      if (images[ring.mul(a, b)] != ring.mul(images[a], images[b])) {
        fail(ErrorKind::AxiomViolation, "map is not multiplicative at (" + L[a] + ", " + L[b] +
                                            "): image of product " + L[images[ring.mul(a, b)]] +
                                            ", product of images " +
                                            L[ring.mul(images[a], images[b])]);
      }
    }
  }
  std::vector<char> hit(n, 0);
  for (Index v : images) hit[v] = 1;
  const bool injective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  std::optional<bool> preserves_one;
  if (auto one = ring.one()) preserves_one = images[*one] == *one;

  // Orbit of alpha in the monoid of self-maps: alpha^0, alpha^1, ... until a
  // map repeats.
  std::map<std::vector<Index>, std::size_t> seen;
  std::vector<Index> powers;
  std::vector<Index> current(n);
  std::iota(current.begin(), current.end(), Index{0});
  Orbit orbit;
  for (std::size_t e = 0;; ++e) {
    auto [it, inserted] = seen.emplace(current, e);
    if (!inserted) {
      orbit.preperiod = it->second;
      orbit.period = e - it->second;
      break;
    }
    powers.insert(powers.end(), current.begin(), current.end());
    for (auto& v : current) v = images[v];
  }

  auto d = std::make_shared<Data>(Data{.id = fresh_id(),
                                       .ring = ring,
                                       .images = std::move(images),
                                       .injective = injective,
                                       .preserves_one = preserves_one,
                                       .orbit = orbit,
                                       .powers = std::move(powers),
                                       .label = std::move(label)});
  return Endomorphism(std::move(d));
}

std::size_t Endomorphism::reduce_exponent(std::int64_t e) const {
  const auto t = static_cast<std::int64_t>(d_->orbit.preperiod);
  const auto p = static_cast<std::int64_t>(d_->orbit.period);
  if (e < 0) {
    if (!d_->injective) {
      fail(ErrorKind::InvalidArgument, "negative powers need an automorphism");
    }
    return static_cast<std::size_t>(((e % p) + p) % p);
  }
  if (e < t + p) return static_cast<std::size_t>(e);
  return static_cast<std::size_t>(t + (e - t) % p);
}

std::span<const Index> Endomorphism::power_map(std::int64_t e) const {
  const std::size_t n = d_->ring.size();
  return std::span<const Index>(d_->powers).subspan(reduce_exponent(e) * n, n);
}

Endomorphism Endomorphism::inverse() const {
  if (!is_automorphism()) fail(ErrorKind::InvalidArgument, "endomorphism is not invertible");
  return Endomorphism::from_images(ring(),
                                   std::vector<Index>(power_map(-1).begin(), power_map(-1).end()),
                                   label() + "^-1");
}

Orbit endo_orbit(const Endomorphism& alpha) { return alpha.orbit(); }

// RingIsomorphism ------------------------------------------------------------

RingIsomorphism RingIsomorphism::from_images(const FiniteRing& domain, const FiniteRing& codomain,
                                             std::vector<Index> images) {
  const std::size_t n = domain.size();
  if (codomain.size() != n || images.size() != n) {
    fail(ErrorKind::Mismatch, "isomorphism between rings of different sizes");
  }
  std::vector<char> hit(n, 0);
  for (Index v : images) {
    if (v >= n || hit[v]) fail(ErrorKind::AxiomViolation, "isomorphism images are not a bijection");
    hit[v] = 1;
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (images[domain.add(a, b)] != codomain.add(images[a], images[b]) ||
          images[domain.mul(a, b)] != codomain.mul(images[a], images[b])) {
        fail(ErrorKind::AxiomViolation, "map does not preserve the ring operations at (" +
                                            domain.element_label(a) + ", " +
                                            domain.element_label(b) + ")");
      }
    }
  }
  if (images[domain.zero()] != codomain.zero()) {
    fail(ErrorKind::AxiomViolation, "isomorphism does not map zero to zero");
  }
  if (domain.one() && codomain.one() && images[*domain.one()] != *codomain.one()) {
    fail(ErrorKind::AxiomViolation, "isomorphism does not map one to one");
  }
  return RingIsomorphism(domain, codomain, std::move(images));
}

RingIsomorphism RingIsomorphism::inverse() const {
  std::vector<Index> inv(images_.size());
  for (Index a = 0; a < images_.size(); ++a) inv[images_[a]] = a;
  return RingIsomorphism(codomain_, domain_, std::move(inv));
}

Endomorphism transport(const RingIsomorphism& sigma, const Endomorphism& alpha) {
  if (!alpha.ring().same_as(sigma.domain())) {
    fail(ErrorKind::Mismatch, "endomorphism is not defined on the isomorphism's domain");
  }
  const auto inv = sigma.inverse();
  std::vector<Index> images(sigma.codomain().size());
  for (Index s = 0; s < images.size(); ++s) images[s] = sigma(alpha(inv(s)));
  return Endomorphism::from_images(sigma.codomain(), std::move(images), alpha.label());
}

std::pair<FiniteRing, RingIsomorphism> relabel(const FiniteRing& ring, std::span<const Index> perm) {
  const std::size_t n = ring.size();
  if (perm.size() != n) fail(ErrorKind::InvalidArgument, "relabeling has the wrong length");
  std::vector<Index> inv(n, static_cast<Index>(n));
  for (Index a = 0; a < n; ++a) {
    if (perm[a] >= n || inv[perm[a]] != n) {
      fail(ErrorKind::InvalidArgument, "relabeling is not a permutation");
    }
    inv[perm[a]] = a;
  }
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Index s = 0; s < n; ++s) {
    labels[s] = ring.element_label(inv[s]);
    for (Index t = 0; t < n; ++t) {
      add[s * n + t] = perm[ring.add(inv[s], inv[t])];
      mul[s * n + t] = perm[ring.mul(inv[s], inv[t])];
    }
  }
  auto relabeled = FiniteRing::from_tables(std::move(add), std::move(mul), std::move(labels),
                                           ring.label() + " (relabeled)", {n});
  auto sigma = RingIsomorphism::from_images(ring, relabeled, {perm.begin(), perm.end()});
  return {relabeled, sigma};
}

// Ideal ----------------------------------------------------------------------

Ideal Ideal::from_members(const FiniteRing& ring, std::span<const Index> members) {
  const std::size_t n = ring.size();
  std::vector<char> in(n, 0);
  for (Index m : members) {
    if (m >= n) fail(ErrorKind::InvalidArgument, "ideal member " + std::to_string(m) + " out of range");
    in[m] = 1;
  }
  if (!in[ring.zero()]) fail(ErrorKind::AxiomViolation, "ideal does not contain zero");
  for (Index i = 0; i < n; ++i) {
    if (!in[i]) continue;
    if (!in[ring.neg(i)]) {
      fail(ErrorKind::AxiomViolation, "ideal is not closed under negation at " + ring.element_label(i));
    }
    for (Index j = 0; j < n; ++j) {
      if (in[j] && !in[ring.add(i, j)]) {
        fail(ErrorKind::AxiomViolation, "ideal is not closed under addition at (" +
                                            ring.element_label(i) + ", " + ring.element_label(j) + ")");
      }
      // j ranges over all of R here.
      if (!in[ring.mul(j, i)] || !in[ring.mul(i, j)]) {
        fail(ErrorKind::AxiomViolation, "ideal does not absorb multiplication by " +
                                            ring.element_label(j) + " at " + ring.element_label(i));
      }
    }
  }
  return Ideal(ring, std::move(in));
}

Ideal Ideal::zero(const FiniteRing& ring) {
  const Index z = ring.zero();
  return from_members(ring, std::span<const Index>(&z, 1));
}

Ideal Ideal::whole(const FiniteRing& ring) {
  std::vector<Index> all(ring.size());
  std::iota(all.begin(), all.end(), Index{0});
  return from_members(ring, all);
}

std::size_t Ideal::size() const noexcept {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), char{1}));
}

// Bimodule -------------------------------------------------------------------

Bimodule Bimodule::from_tables(const FiniteRing& ring, std::vector<Index> add,
                               std::vector<Index> left_action, std::vector<Index> right_action,
                               std::vector<std::string> labels) {
  std::size_t m = 0;
  while (m * m < add.size()) ++m;
  if (m == 0 || m * m != add.size()) fail(ErrorKind::InvalidArgument, "module addition table is not square");
  const std::size_t n = ring.size();
  check_table(add, m, m, m, "module addition");
  check_table(left_action, n, m, m, "left action");
  check_table(right_action, m, n, m, "right action");
  if (labels.empty()) labels = default_labels(m);
  check_labels(labels, m);

  Bimodule M(ring);
  M.m_ = m;
  M.add_ = std::move(add);
  M.left_ = std::move(left_action);
  M.right_ = std::move(right_action);
  M.labels_ = std::move(labels);

  std::optional<Index> zero;
  for (Index z = 0; z < m && !zero; ++z) {
    bool ok = true;
    for (Index a = 0; a < m && ok; ++a) ok = M.add(z, a) == a && M.add(a, z) == a;
    if (ok) zero = z;
  }
  if (!zero) fail(ErrorKind::AxiomViolation, "module addition has no identity");
  M.zero_ = *zero;
  M.neg_.assign(m, 0);
  for (Index a = 0; a < m; ++a) {
    bool found = false;
    for (Index b = 0; b < m && !found; ++b) {
      if (M.add(a, b) == *zero) {
        M.neg_[a] = b;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::AxiomViolation, "module element " + M.labels_[a] + " has no inverse");
  }
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      if (M.add(a, b) != M.add(b, a)) fail(ErrorKind::AxiomViolation, "module addition is not commutative");
      for (Index c = 0; c < m; ++c) {
        if (M.add(M.add(a, b), c) != M.add(a, M.add(b, c))) {
          fail(ErrorKind::AxiomViolation, "module addition is not associative");
        }
      }
    }
  }
  for (Index r = 0; r < n; ++r) {
    for (Index s = 0; s < n; ++s) {
      for (Index x = 0; x < m; ++x) {
        if (M.left(ring.add(r, s), x) != M.add(M.left(r, x), M.left(s, x)) ||
            M.right(x, ring.add(r, s)) != M.add(M.right(x, r), M.right(x, s))) {
          fail(ErrorKind::AxiomViolation, "module action is not additive in the ring argument");
        }
        if (M.left(ring.mul(r, s), x) != M.left(r, M.left(s, x))) {
          fail(ErrorKind::AxiomViolation, "left action is not associative");
        }
        if (M.right(x, ring.mul(r, s)) != M.right(M.right(x, r), s)) {
          fail(ErrorKind::AxiomViolation, "right action is not associative");
        }
        if (M.right(M.left(r, x), s) != M.left(r, M.right(x, s))) {
          fail(ErrorKind::AxiomViolation, "left and right actions do not commute");
        }
      }
    }
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) {
        if (M.left(r, M.add(x, y)) != M.add(M.left(r, x), M.left(r, y)) ||
            M.right(M.add(x, y), r) != M.add(M.right(x, r), M.right(y, r))) {
          fail(ErrorKind::AxiomViolation, "module action is not additive in the module argument");
        }
      }
    }
  }
  return M;
}

Bimodule Bimodule::regular(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  std::vector<Index> right(n * n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) right[a * n + b] = ring.mul(a, b);
  }
  auto add = std::vector<Index>(ring.add_table().begin(), ring.add_table().end());
  auto mul = std::vector<Index>(ring.mul_table().begin(), ring.mul_table().end());
  auto module = from_tables(ring, std::move(add), std::move(mul), std::move(right), ring.element_labels());
  module.name_ = ring.label();
  return module;
}

// Constructors ---------------------------------------------------------------

FiniteRing make_zmod(std::size_t n, RingLimits limits) {
  check_cap(n, limits);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  }
  return FiniteRing::from_tables(std::move(add), std::move(mul), default_labels(n),
                                 "Z" + std::to_string(n), limits);
}

FiniteRing make_direct_product(const FiniteRing& first, const FiniteRing& second, RingLimits limits) {
  const std::size_t n1 = first.size(), n2 = second.size();
  check_cap(n1 * n2, limits);
  const std::size_t n = n1 * n2;
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Index a1 = 0; a1 < n1; ++a1) {
    for (Index a2 = 0; a2 < n2; ++a2) {
      const Index a = static_cast<Index>(a1 * n2 + a2);
      labels[a] = "(" + first.element_label(a1) + "," + second.element_label(a2) + ")";
      for (Index b1 = 0; b1 < n1; ++b1) {
        for (Index b2 = 0; b2 < n2; ++b2) {
          const Index b = static_cast<Index>(b1 * n2 + b2);
          add[a * n + b] = static_cast<Index>(first.add(a1, b1) * n2 + second.add(a2, b2));
          mul[a * n + b] = static_cast<Index>(first.mul(a1, b1) * n2 + second.mul(a2, b2));
        }
      }
    }
  }
  auto ring = FiniteRing::from_tables(std::move(add), std::move(mul), std::move(labels),
                                      first.label() + "+" + second.label(), limits);
  return ring.with_pair_shape({n1, n2, first.id(), second.id(), true});
}

FiniteRing make_trivial_extension(const Bimodule& module, RingLimits limits) {
  const auto& R = module.ring();
  const std::size_t n1 = R.size(), m = module.size();
  check_cap(n1 * m, limits);
  const std::size_t n = n1 * m;
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (Index r1 = 0; r1 < n1; ++r1) {
    for (Index m1 = 0; m1 < m; ++m1) {
      const Index a = static_cast<Index>(r1 * m + m1);
      labels[a] = "(" + R.element_label(r1) + "," + module.label(m1) + ")";
      for (Index r2 = 0; r2 < n1; ++r2) {
        for (Index m2 = 0; m2 < m; ++m2) {
          const Index b = static_cast<Index>(r2 * m + m2);
          add[a * n + b] = static_cast<Index>(R.add(r1, r2) * m + module.add(m1, m2));
          // (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2)
          mul[a * n + b] = static_cast<Index>(
              R.mul(r1, r2) * m + module.add(module.left(r1, m2), module.right(m1, r2)));
        }
      }
    }
  }
  auto ring = FiniteRing::from_tables(std::move(add), std::move(mul), std::move(labels),
                                      "T(" + R.label() + "," + module.name() + ")", limits);
  return ring.with_pair_shape({n1, m, R.id(), 0, false});
}

Quotient make_quotient(const Ideal& ideal) {
  const auto& R = ideal.ring();
  const std::size_t n = R.size();
  std::vector<Index> projection(n, static_cast<Index>(n));
  std::vector<Index> representative;
  for (Index a = 0; a < n; ++a) {
    if (projection[a] != n) continue;
    const auto c = static_cast<Index>(representative.size());
    representative.push_back(a);
    for (Index i = 0; i < n; ++i) {
      if (ideal.contains(i)) projection[R.add(a, i)] = c;
    }
  }
  const std::size_t k = representative.size();
  std::vector<Index> add(k * k), mul(k * k);
  std::vector<std::string> labels(k);
  for (Index c = 0; c < k; ++c) {
    const Index a = representative[c];
    labels[c] = k == n ? R.element_label(a) : "[" + R.element_label(a) + "]";
    for (Index e = 0; e < k; ++e) {
      const Index b = representative[e];
      add[c * k + e] = projection[R.add(a, b)];
      mul[c * k + e] = projection[R.mul(a, b)];
    }
  }
  auto ring = FiniteRing::from_tables(std::move(add), std::move(mul), std::move(labels),
                                      R.label() + "/I", {n});
  if (R.pair_shape() && k == n) ring = ring.with_pair_shape(*R.pair_shape());
  return Quotient{std::move(ring), std::move(projection), std::move(representative)};
}

FiniteRing make_table_ring(std::vector<Index> add, std::vector<Index> mul,
                           std::vector<std::string> labels, std::string label, RingLimits limits) {
  return FiniteRing::from_tables(std::move(add), std::move(mul), std::move(labels), std::move(label),
                                 limits);
}

// Maps -----------------------------------------------------------------------

Endomorphism table_endomorphism(const FiniteRing& ring, std::vector<Index> images, std::string label) {
  return Endomorphism::from_images(ring, std::move(images), std::move(label));
}

Endomorphism identity_endomorphism(const FiniteRing& ring) {
  std::vector<Index> images(ring.size());
  std::iota(images.begin(), images.end(), Index{0});
  return Endomorphism::from_images(ring, std::move(images), "identity");
}

Endomorphism zero_endomorphism(const FiniteRing& ring) {
  return Endomorphism::from_images(ring, std::vector<Index>(ring.size(), ring.zero()), "zero");
}

Endomorphism negation_endomorphism(const FiniteRing& ring) {
  std::vector<Index> images(ring.size());
  for (Index a = 0; a < images.size(); ++a) images[a] = ring.neg(a);
  return Endomorphism::from_images(ring, std::move(images), "negation");
}

Endomorphism swap_endomorphism(const FiniteRing& ring) {
  const auto& shape = ring.pair_shape();
  if (!shape || !shape->is_direct_product || shape->first_size != shape->second_size) {
    fail(ErrorKind::InvalidArgument, "swap needs a direct product of two rings of equal size");
  }
  const std::size_t m = shape->second_size;
  std::vector<Index> images(ring.size());
  for (Index a = 0; a < images.size(); ++a) {
    images[a] = static_cast<Index>((a % m) * m + a / m);
  }
  return Endomorphism::from_images(ring, std::move(images), "swap");
}

Endomorphism negate_second_component(const FiniteRing& ring) {
  const auto& shape = ring.pair_shape();
  if (!shape) fail(ErrorKind::InvalidArgument, "negate_second_component needs a ring of pairs");
  const std::size_t m = shape->second_size;
  // The second component's negation is read off the ring's own negation,
  // which acts componentwise: -(0, s) = (0, -s).
  std::vector<Index> images(ring.size());
  for (Index a = 0; a < images.size(); ++a) {
    const Index first = static_cast<Index>(a / m);
    const Index neg_second = static_cast<Index>(ring.neg(static_cast<Index>(a % m)) % m);
    images[a] = static_cast<Index>(first * m + neg_second);
  }
  return Endomorphism::from_images(ring, std::move(images), "negate_second_component");
}

Endomorphism frobenius(const FiniteRing& ring) {
  const auto one = ring.one();
  if (!one) fail(ErrorKind::InvalidArgument, "frobenius needs a ring with identity");
  std::size_t c = 1;
  for (Index acc = *one; acc != ring.zero(); acc = ring.add(acc, *one)) ++c;
  if (ring.size() == 1) c = 1;
  for (std::size_t f = 2; f * f <= c; ++f) {
    if (c % f == 0) fail(ErrorKind::InvalidArgument, "frobenius needs prime characteristic");
  }
  if (c < 2) {
    return Endomorphism::from_images(ring, std::vector<Index>(1, 0), "frobenius");
  }
  std::vector<Index> images(ring.size());
  for (Index a = 0; a < images.size(); ++a) {
    Index power = a;
    for (std::size_t i = 1; i < c; ++i) power = ring.mul(power, a);
    images[a] = power;
  }
  return Endomorphism::from_images(ring, std::move(images), "frobenius");
}

Endomorphism product_endomorphism(const FiniteRing& product, const Endomorphism& first,
                                  const Endomorphism& second) {
  const auto& shape = product.pair_shape();
  if (!shape || !shape->is_direct_product || shape->first_ring != first.ring().id() ||
      shape->second_ring != second.ring().id()) {
    fail(ErrorKind::Mismatch, "ring is not the direct product of the endomorphisms' rings");
  }
  const std::size_t m = shape->second_size;
  std::vector<Index> images(product.size());
  for (Index a = 0; a < images.size(); ++a) {
    images[a] = static_cast<Index>(first(static_cast<Index>(a / m)) * m + second(static_cast<Index>(a % m)));
  }
  return Endomorphism::from_images(product, std::move(images),
                                   "(" + first.label() + "," + second.label() + ")");
}

Endomorphism induced_endomorphism(const Endomorphism& alpha, const Ideal& ideal,
                                  const Quotient& quotient) {
  const auto& R = alpha.ring();
  if (!R.same_as(ideal.ring())) fail(ErrorKind::Mismatch, "ideal and endomorphism live on different rings");
  if (quotient.projection.size() != R.size()) fail(ErrorKind::Mismatch, "quotient does not match the ring");
  for (Index i = 0; i < R.size(); ++i) {
    if (ideal.contains(i) && !ideal.contains(alpha(i))) {
      fail(ErrorKind::InvalidArgument, "endomorphism does not map the ideal into itself (at " +
                                           R.element_label(i) + ")");
    }
  }
  std::vector<Index> images(quotient.representative.size());
  for (Index c = 0; c < images.size(); ++c) {
    images[c] = quotient.projection[alpha(quotient.representative[c])];
  }
  return Endomorphism::from_images(quotient.ring, std::move(images), alpha.label());
}

}  // namespace skewring
