#include <string>
#include <vector>

#include "skewring/ring.hpp"

namespace skewring {

namespace {

using Poly = std::vector<unsigned>;  // low-to-high coefficients mod p

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inverse_mod(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

// Remainder of f modulo a nonzero g over Z_p.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  trim(f);
  const unsigned lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const unsigned factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly from_digits(unsigned value, unsigned p, unsigned len) {
  Poly f(len);
  for (unsigned i = 0; i < len; ++i) {
    f[i] = value % p;
    value /= p;
  }
  return f;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1 .. k/2.
  for (unsigned deg = 1; 2 * deg <= k; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = from_digits(low, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::string element_name(const Poly& digits) {
  std::string out;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const unsigned c = digits[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<unsigned> galois_modulus(unsigned p, unsigned k) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorKind::InvalidArgument, "field degree must be at least 1");
  unsigned count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  // Candidates (c_0, ..., c_{k-1}) in lexicographic order, c_0 most
  // significant.
  for (unsigned v = 0; v < count; ++v) {
    Poly f(k + 1, 0);
    unsigned rest = v;
    for (unsigned i = k; i-- > 0;) {
      f[i] = rest % p;
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FiniteRing make_galois_field(unsigned p, unsigned k, RingLimits limits) {
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (k == 0) fail(ErrorKind::InvalidArgument, "field degree must be at least 1");
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    if (n > limits.size_cap) {
      fail(ErrorKind::SizeCap, "GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                   ") exceeds the size cap of " + std::to_string(limits.size_cap));
    }
  }
  const Poly modulus = galois_modulus(p, k);
  auto index_of = [&](const Poly& f) {
    unsigned v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = v * p + f[i];
    return static_cast<Index>(v);
  };
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (unsigned a = 0; a < n; ++a) {
    const Poly fa = from_digits(a, p, k);
    labels[a] = element_name(fa);
    for (unsigned b = 0; b < n; ++b) {
      const Poly fb = from_digits(b, p, k);
      Poly sum(k), prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i) sum[i] = (fa[i] + fb[i]) % p;
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
      }
      Poly r = poly_mod(prod, modulus, p);
      r.resize(k, 0);
      add[a * n + b] = index_of(sum);
      mul[a * n + b] = index_of(r);
    }
  }
  std::string label = "GF(" + std::to_string(n) + ")";
  if (k > 1) {
    label += " mod " + element_name(Poly(modulus.begin(), modulus.end()));
  }
  return FiniteRing::from_tables(std::move(add), std::move(mul), std::move(labels), label, limits);
}

}  // namespace skewring
