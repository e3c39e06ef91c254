#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gscope/errors.hpp"
#include "gscope/ff2m.hpp"

using namespace gscope;
using ff2m::Field;
using ff2m::FieldElement;
using ff2m::FieldParams;

namespace {

// Schoolbook carry-less product followed by long division.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned m) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if (b >> i & 1) prod ^= std::uint64_t{a} << i;
  }
  for (int bit = 63; bit >= static_cast<int>(m); --bit) {
    if (prod >> bit & 1) prod ^= std::uint64_t{modulus} << (bit - m);
  }
  return static_cast<std::uint32_t>(prod);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t k, std::uint32_t modulus, unsigned m) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = slow_mul(r, a, modulus, m);
  return r;
}

bool slow_irreducible(std::uint32_t poly, unsigned m) {
  for (std::uint32_t d = 2; d < (1u << m); ++d) {
    unsigned deg = 31 - __builtin_clz(d);
    if (deg == 0 || 2 * deg > m) continue;
    std::uint64_t r = poly;
    for (int bit = m; bit >= static_cast<int>(deg); --bit) {
      if (r >> bit & 1) r ^= std::uint64_t{d} << (bit - deg);
    }
    if (r == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("default moduli are irreducible with a constant term") {
  for (unsigned m = 1; m <= 15; m += 2) {
    const std::uint32_t f = ff2m::default_modulus(m);
    CHECK((f >> m) == 1u);
    CHECK((f & 1) == 1);
    CHECK(slow_irreducible(f, m));
    CHECK(ff2m::is_irreducible(f));
  }
  CHECK(ff2m::default_modulus(3) == 0b1011);
  CHECK_FALSE(ff2m::is_irreducible(0b1111));  // (t+1)^3
}

TEST_CASE("field parameters are validated") {
  CHECK_THROWS_AS(FieldParams(0), DomainError);
  CHECK_THROWS_AS(FieldParams(4), DomainError);
  CHECK_THROWS_AS(FieldParams(17), DomainError);
  CHECK_THROWS_AS(FieldParams(3, 0b1111), DomainError);
  CHECK_THROWS_AS(FieldParams(3, 0b111), DomainError);
  CHECK_NOTHROW(FieldParams(3, 0b1101));
}

TEST_CASE("GF(8) worked examples") {
  const Field f{FieldParams(3)};
  const FieldElement t{0b010}, t2{0b100};
  CHECK(f.add(t, t2) == FieldElement{0b110});
  CHECK(f.mul(t, t2) == FieldElement{0b011});
  CHECK(f.theta(t) == FieldElement{0b110});
  CHECK(f.theta(f.zero()) == f.zero());
  CHECK(f.theta(f.one()) == f.one());
  CHECK(f.primitive_element() == t);
  CHECK(f.multiplicative_order(t) == 7);
}

TEST_CASE("primitive elements") {
  CHECK(Field{FieldParams(1)}.primitive_element() == FieldElement{1});
  for (unsigned m : {5u, 7u, 9u}) {
    const Field f{FieldParams(m)};
    const FieldElement g = f.primitive_element();
    CHECK(f.multiplicative_order(g) == (1u << m) - 1);
    std::uint32_t x = g.bits;
    std::uint64_t order = 1;
    while (x != 1) {
      x = slow_mul(x, g.bits, f.params().modulus(), m);
      ++order;
    }
    CHECK(order == (1u << m) - 1);
  }
}

TEST_CASE("field axioms, exhaustive for small m") {
  for (unsigned m : {1u, 3u, 5u, 7u}) {
    CAPTURE(m);
    const Field f{FieldParams(m)};
    const std::uint32_t q = f.size();
    const std::uint32_t mod = f.params().modulus();
    for (std::uint32_t a = 0; a < q; ++a) {
      const FieldElement x = f.element(a);
      CHECK(f.add(x, x) == f.zero());
      CHECK(f.add(x, f.zero()) == x);
      CHECK(f.mul(x, f.one()) == x);
      if (a != 0) {
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.pow(x, q - 1) == f.one());
        CHECK(f.pow(x, -1) == f.inv(x));
      }
      const FieldElement tx = f.theta(x);
      CHECK(tx.bits == slow_pow(a, f.params().theta_exp(), mod, m));
      CHECK(f.theta(tx) == f.mul(x, x));
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElement y = f.element(b);
        CHECK(f.mul(x, y).bits == slow_mul(a, b, mod, m));
        CHECK(f.mul(x, y) == f.mul(y, x));
        CHECK(f.theta(f.add(x, y)) == f.add(tx, f.theta(y)));
        CHECK(f.theta(f.mul(x, y)) == f.mul(tx, f.theta(y)));
      }
    }
  }
}

TEST_CASE("associativity and distributivity sampled in GF(32)") {
  const Field f{FieldParams(5)};
  for (std::uint32_t a = 0; a < 32; a += 3) {
    for (std::uint32_t b = 1; b < 32; b += 5) {
      for (std::uint32_t c = 2; c < 32; c += 7) {
        const FieldElement x{a}, y{b}, z{c};
        CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
        CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      }
    }
  }
}

TEST_CASE("elements outside the field are rejected") {
  const Field f{FieldParams(3)};
  CHECK_THROWS_AS(f.element(8), UsageError);
  CHECK_THROWS_AS(f.add(FieldElement{9}, f.one()), UsageError);
  CHECK_THROWS_AS(f.mul(f.one(), FieldElement{16}), UsageError);
  CHECK_THROWS_AS(f.theta(FieldElement{8}), UsageError);
  CHECK_THROWS_AS(f.inv(f.zero()), DomainError);
}
