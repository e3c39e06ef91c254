#include "gscope/ff2m.hpp"

#include <bit>
#include <string>

#include "gscope/errors.hpp"

namespace gscope::ff2m {

namespace {

unsigned degree_of(std::uint32_t poly) { return static_cast<unsigned>(std::bit_width(poly)) - 1; }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const unsigned db = degree_of(b);
  while (a != 0 && degree_of(a) >= db) {
    a ^= b << (degree_of(a) - db);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const unsigned d = degree_of(poly);
  if (d == 1) return true;
  // Trial division by every polynomial of degree 1..d/2.
  for (std::uint32_t g = 2; degree_of(g) <= d / 2; ++g) {
    if (poly_mod(poly, g) == 0) return false;
  }
  return true;
}

std::uint32_t default_modulus(unsigned m) {
  if (m < 1 || m > kMaxDegree || m % 2 == 0) {
    throw DomainError("field degree m must be odd with 1 <= m <= 15, got " + std::to_string(m));
  }
  for (std::uint32_t f = (1u << m) | 1u; f < (1u << (m + 1)); f += 2) {
    if (is_irreducible(f)) return f;
  }
  throw InternalError("no irreducible polynomial of degree " + std::to_string(m));
}

FieldParams::FieldParams(unsigned m) : FieldParams(m, default_modulus(m)) {}

FieldParams::FieldParams(unsigned m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > kMaxDegree || m % 2 == 0) {
    throw DomainError("field degree m must be odd with 1 <= m <= 15, got " + std::to_string(m));
  }
  if (modulus == 0 || degree_of(modulus) != m) {
    throw DomainError("modulus " + std::to_string(modulus) + " does not have degree " + std::to_string(m));
  }
  if (!is_irreducible(modulus)) {
    throw DomainError("modulus " + std::to_string(modulus) + " is reducible over GF(2)");
  }
}

Field::Field(FieldParams params) : params_(params) {
  const std::uint64_t group_order = params_.size() - 1;
  for (std::uint32_t b = 1; b < params_.size(); ++b) {
    if (multiplicative_order({b}) == group_order) {
      primitive_ = {b};
      return;
    }
  }
  throw InternalError("no primitive element found");
}

void Field::check(FieldElement a) const {
  if (!contains(a)) {
    throw UsageError("element " + std::to_string(a.bits) + " is not in GF(2^" + std::to_string(params_.m()) + ")");
  }
}

FieldElement Field::element(std::uint32_t bits) const {
  FieldElement e{bits};
  check(e);
  return e;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {a.bits ^ b.bits};
}

std::uint32_t Field::mul_bits(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t top = params_.size();
  const std::uint32_t mod = params_.modulus();
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= mod;
  }
  return r;
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul_bits(a.bits, b.bits)};
}

FieldElement Field::pow(FieldElement a, std::int64_t k) const {
  check(a);
  if (a.bits == 0) {
    if (k < 0) throw DomainError("zero has no inverse in GF(2^m)");
    return k == 0 ? one() : zero();
  }
  const std::int64_t group_order = static_cast<std::int64_t>(params_.size()) - 1;
  std::int64_t e = k % group_order;
  if (e < 0) e += group_order;
  std::uint32_t base = a.bits;
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul_bits(result, base);
    base = mul_bits(base, base);
    e >>= 1;
  }
  return {result};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.bits == 0) throw DomainError("zero has no inverse in GF(2^m)");
  return pow(a, -1);
}

FieldElement Field::theta(FieldElement x) const {
  check(x);
  std::uint32_t r = x.bits;
  for (unsigned i = 0; i < params_.n() + 1; ++i) r = mul_bits(r, r);
  return {r};
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
  check(a);
  if (a.bits == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t k = 1;
  std::uint32_t x = a.bits;
  while (x != 1) {
    x = mul_bits(x, a.bits);
    ++k;
  }
  return k;
}

}  // namespace gscope::ff2m
