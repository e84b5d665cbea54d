#pragma once

// Finite rings given by explicit operation tables, together with the maps
// between them: endomorphisms, isomorphisms, ideals and bimodules.
//
// Elements are dense indices into the tables. Every structure is validated
// exhaustively when it is built and is immutable afterwards, so copies are
// cheap (shared table storage) and safe to read from several threads.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewring/error.hpp"

namespace skewring {

using Index = std::uint32_t;
using RingId = std::uint64_t;
using EndoId = std::uint64_t;

struct RingLimits {
  std::size_t size_cap = 256;
};

// An element tagged with the ring it belongs to. The table accessors on
// FiniteRing take bare indices for speed; this type is what crosses API
// boundaries where mixing rings would be a bug.
struct RingElement {
  RingId ring = 0;
  Index index = 0;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

// Records that a ring's carrier is a set of pairs (first, second), flattened
// as first * second_size + second. Set by direct products and trivial
// extensions; the pair-aware builtin maps (swap, negate_second_component)
// need it.
struct PairShape {
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  RingId first_ring = 0;
  RingId second_ring = 0;  // 0 when the second factor is a bimodule
  bool is_direct_product = false;
};

class FiniteRing {
 public:
  // Validates the tables (abelian group, associativity, both distributive
  // laws) and locates zero and, when it exists, the two-sided identity.
  // Throws Error(AxiomViolation) naming the first violating triple.
  static FiniteRing from_tables(std::vector<Index> add, std::vector<Index> mul,
                                std::vector<std::string> element_labels, std::string label,
                                RingLimits limits = {});

  RingId id() const noexcept { return d_->id; }
  std::size_t size() const noexcept { return d_->n; }
  Index zero() const noexcept { return d_->zero; }
  std::optional<Index> one() const noexcept { return d_->one; }
  bool is_unital() const noexcept { return d_->one.has_value(); }
  const std::string& label() const noexcept { return d_->label; }

  Index add(Index a, Index b) const noexcept { return d_->add[a * d_->n + b]; }
  Index mul(Index a, Index b) const noexcept { return d_->mul[a * d_->n + b]; }
  Index neg(Index a) const noexcept { return d_->neg[a]; }
  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }
  bool is_zero(Index a) const noexcept { return a == d_->zero; }

  // Checked variants for tagged elements.
  RingElement element(Index index) const;
  RingElement add(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  Index index_of(RingElement e) const;

  std::span<const Index> add_table() const noexcept { return d_->add; }
  std::span<const Index> mul_table() const noexcept { return d_->mul; }
  const std::vector<std::string>& element_labels() const noexcept { return d_->labels; }
  const std::string& element_label(Index a) const { return d_->labels.at(a); }
  std::optional<Index> find_label(std::string_view text) const;

  const std::optional<PairShape>& pair_shape() const noexcept { return d_->pair; }

  // Returns a copy sharing the tables but with a different pair shape; used by
  // the product and trivial-extension constructors.
  FiniteRing with_pair_shape(PairShape shape) const;
  // Same tables under a different display name.
  FiniteRing with_label(std::string label) const;

  bool same_as(const FiniteRing& other) const noexcept { return id() == other.id(); }

 private:
  struct Data {
    RingId id = 0;
    std::size_t n = 0;
    std::vector<Index> add, mul, neg;
    Index zero = 0;
    std::optional<Index> one;
    std::vector<std::string> labels;
    std::string label;
    std::optional<PairShape> pair;
  };
  explicit FiniteRing(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

struct Orbit {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  std::size_t envelope() const noexcept { return preperiod + period; }
  friend bool operator==(const Orbit&, const Orbit&) = default;
};

class Endomorphism {
 public:
  // Validates additivity and multiplicativity over every pair; throws
  // Error(AxiomViolation) with the first violating pair.
  static Endomorphism from_images(const FiniteRing& ring, std::vector<Index> images,
                                  std::string label);

  EndoId id() const noexcept { return d_->id; }
  const FiniteRing& ring() const noexcept { return d_->ring; }
  const std::string& label() const noexcept { return d_->label; }

  Index operator()(Index a) const noexcept { return d_->images[a]; }
  std::span<const Index> images() const noexcept { return d_->images; }

  bool is_injective() const noexcept { return d_->injective; }
  bool is_surjective() const noexcept { return d_->injective; }  // finite carrier
  bool is_automorphism() const noexcept { return d_->injective; }
  bool is_identity() const noexcept { return d_->orbit == Orbit{0, 1}; }
  // Empty for rings without identity.
  std::optional<bool> preserves_one() const noexcept { return d_->preserves_one; }
  const Orbit& orbit() const noexcept { return d_->orbit; }

  // Exponent of the stored power equal to alpha^e. Negative exponents require
  // an automorphism.
  std::size_t reduce_exponent(std::int64_t e) const;
  // alpha^e as a map; e may be negative for automorphisms.
  std::span<const Index> power_map(std::int64_t e) const;
  Index apply_power(std::int64_t e, Index a) const { return power_map(e)[a]; }

  // Stored powers alpha^0 .. alpha^(envelope-1), row-major.
  std::span<const Index> power_table() const noexcept { return d_->powers; }

  Endomorphism inverse() const;

  friend bool same_map(const Endomorphism& a, const Endomorphism& b) {
    return a.ring().same_as(b.ring()) && std::equal(a.images().begin(), a.images().end(),
                                                    b.images().begin(), b.images().end());
  }

 private:
  struct Data {
    EndoId id = 0;
    FiniteRing ring;
    std::vector<Index> images;
    bool injective = false;
    std::optional<bool> preserves_one;
    Orbit orbit;
    std::vector<Index> powers;
    std::string label;
  };
  explicit Endomorphism(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class RingIsomorphism {
 public:
  static RingIsomorphism from_images(const FiniteRing& domain, const FiniteRing& codomain,
                                     std::vector<Index> images);

  const FiniteRing& domain() const noexcept { return domain_; }
  const FiniteRing& codomain() const noexcept { return codomain_; }
  Index operator()(Index a) const noexcept { return images_[a]; }
  std::span<const Index> images() const noexcept { return images_; }
  RingIsomorphism inverse() const;

 private:
  RingIsomorphism(FiniteRing d, FiniteRing c, std::vector<Index> images)
      : domain_(std::move(d)), codomain_(std::move(c)), images_(std::move(images)) {}
  FiniteRing domain_;
  FiniteRing codomain_;
  std::vector<Index> images_;
};

class Ideal {
 public:
  static Ideal from_members(const FiniteRing& ring, std::span<const Index> members);
  static Ideal zero(const FiniteRing& ring);
  static Ideal whole(const FiniteRing& ring);

  const FiniteRing& ring() const noexcept { return ring_; }
  bool contains(Index a) const noexcept { return member_[a] != 0; }
  std::size_t size() const noexcept;

 private:
  Ideal(FiniteRing ring, std::vector<char> member) : ring_(std::move(ring)), member_(std::move(member)) {}
  FiniteRing ring_;
  std::vector<char> member_;
};

// An R-R bimodule given by tables over its own carrier of size m.
class Bimodule {
 public:
  static Bimodule from_tables(const FiniteRing& ring, std::vector<Index> add,
                              std::vector<Index> left_action, std::vector<Index> right_action,
                              std::vector<std::string> labels);
  // R as a bimodule over itself.
  static Bimodule regular(const FiniteRing& ring);

  const FiniteRing& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return m_; }
  Index zero() const noexcept { return zero_; }
  Index add(Index a, Index b) const noexcept { return add_[a * m_ + b]; }
  Index neg(Index a) const noexcept { return neg_[a]; }
  Index left(Index r, Index m) const noexcept { return left_[r * m_ + m]; }
  Index right(Index m, Index r) const noexcept { return right_[m * ring_.size() + r]; }
  const std::string& label(Index a) const { return labels_.at(a); }
  // Display name used in trivial-extension labels: the ring's label for the
  // regular bimodule, "M" otherwise.
  const std::string& name() const noexcept { return name_; }

 private:
  explicit Bimodule(FiniteRing ring) : ring_(std::move(ring)) {}
  std::string name_ = "M";
  FiniteRing ring_;
  std::size_t m_ = 0;
  std::vector<Index> add_, neg_, left_, right_;
  Index zero_ = 0;
  std::vector<std::string> labels_;
};

struct Quotient {
  FiniteRing ring;
  // projection[a] = index of the coset a + I in `ring`.
  std::vector<Index> projection;
  // representative[c] = least index of R lying in coset c.
  std::vector<Index> representative;
};

// Constructors ---------------------------------------------------------------

FiniteRing make_zmod(std::size_t n, RingLimits limits = {});
FiniteRing make_direct_product(const FiniteRing& first, const FiniteRing& second,
                               RingLimits limits = {});
FiniteRing make_trivial_extension(const Bimodule& module, RingLimits limits = {});
Quotient make_quotient(const Ideal& ideal);
FiniteRing make_table_ring(std::vector<Index> add, std::vector<Index> mul,
                           std::vector<std::string> labels, std::string label = "table",
                           RingLimits limits = {});

// Monic irreducible polynomial of degree k over Z_p used for GF(p^k): the
// least coefficient tuple (c_0, ..., c_{k-1}) in lexicographic order.
// Returned low-to-high, including the leading 1.
std::vector<unsigned> galois_modulus(unsigned p, unsigned k);
// GF(p^k); the element with base-p digits c_0 c_1 ... (c_0 least
// significant) is the residue of c_0 + c_1 t + ... .
FiniteRing make_galois_field(unsigned p, unsigned k, RingLimits limits = {});

// Maps -----------------------------------------------------------------------

Endomorphism table_endomorphism(const FiniteRing& ring, std::vector<Index> images,
                                std::string label = "images");
Endomorphism identity_endomorphism(const FiniteRing& ring);
Endomorphism zero_endomorphism(const FiniteRing& ring);
Endomorphism negation_endomorphism(const FiniteRing& ring);
Endomorphism swap_endomorphism(const FiniteRing& ring);
Endomorphism negate_second_component(const FiniteRing& ring);
// x -> x^c with c the additive order of the identity; requires a unital ring
// of prime characteristic.
Endomorphism frobenius(const FiniteRing& ring);

Endomorphism product_endomorphism(const FiniteRing& product, const Endomorphism& first,
                                  const Endomorphism& second);
Endomorphism induced_endomorphism(const Endomorphism& alpha, const Ideal& ideal,
                                  const Quotient& quotient);

Orbit endo_orbit(const Endomorphism& alpha);

// sigma . alpha . sigma^-1 over sigma's codomain.
Endomorphism transport(const RingIsomorphism& sigma, const Endomorphism& alpha);

// Relabels the carrier of `ring` by the permutation `perm` (old index ->
// new index) and returns the relabeled ring with the isomorphism onto it.
std::pair<FiniteRing, RingIsomorphism> relabel(const FiniteRing& ring,
                                               std::span<const Index> perm);

}  // namespace skewring
