#pragma once

// Text formats: ring-definition documents (schema "skewring.ring/1"),
// verdict records (schema "skewring.verdict/1") and the human-readable
// verdict rendering.
//
// A ring document selects a constructor by "kind":
//   zmod {n}, galois_field {p, k}, product {factors: [doc, doc]},
//   trivial_extension {base: doc, module: "regular" | {add, left, right, labels}},
//   table {add, mul, labels}, quotient {base: doc, ideal: [elements]}
// plus optional "label" and "endomorphism". The endomorphism is a builtin
// name (identity, zero, negation, swap, negate_second_component, frobenius),
// an image list, or {"images": [...], "label": "..."}. Elements may be given
// by label or by index. Without an explicit endomorphism, a product combines
// its factors' maps and a quotient inherits its base's map; otherwise the
// identity is used.
//
// Verdict records embed the ring as a table document, so a record replays
// without the file it came from. Records are written with sorted keys and are
// byte-identical across runs.

#include <string>
#include <string_view>

#include "skewring/deciders.hpp"
#include "skewring/ring.hpp"

namespace skewring {

Endomorphism parse_ring_document(std::string_view text, RingLimits limits = {});
// Canonical table form of the ring and map.
std::string ring_document(const Endomorphism& alpha);

struct VerdictRecord {
  Endomorphism alpha;
  Verdict verdict;
};

std::string verdict_record(const Endomorphism& alpha, const Verdict& verdict);
VerdictRecord parse_verdict_record(std::string_view text, RingLimits limits = {});

// "size 4, unital, automorphism, orbit (0,2)"
std::string describe_structure(const Endomorphism& alpha);
std::string render_verdict(const Endomorphism& alpha, const Verdict& verdict);

}  // namespace skewring
