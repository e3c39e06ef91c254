#pragma once

// Arithmetic in GF(2^m), m odd, with elements stored as polynomial-basis
// bitmasks.  Bit i of an element is the coefficient of t^i.

#include <compare>
#include <cstdint>

namespace gscope::ff2m {

constexpr unsigned kMaxDegree = 15;

struct FieldElement {
  std::uint32_t bits = 0;

  constexpr auto operator<=>(const FieldElement&) const = default;
};

/// True when `poly` (bitmask, degree = highest set bit) is irreducible over GF(2).
bool is_irreducible(std::uint32_t poly);

/// The fixed modulus used for GF(2^m): the least irreducible bitmask of
/// degree m with a nonzero constant term.
std::uint32_t default_modulus(unsigned m);

class FieldParams {
 public:
  explicit FieldParams(unsigned m);
  FieldParams(unsigned m, std::uint32_t modulus);

  unsigned m() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  unsigned n() const { return (m_ - 1) / 2; }
  /// Exponent of the twist x -> x^(2^(n+1)).
  std::uint32_t theta_exp() const { return std::uint32_t{1} << (n() + 1); }
  /// Number of field elements, q = 2^m.
  std::uint32_t size() const { return std::uint32_t{1} << m_; }

  bool operator==(const FieldParams&) const = default;

 private:
  unsigned m_;
  std::uint32_t modulus_;
};

class Field {
 public:
  explicit Field(FieldParams params);

  const FieldParams& params() const { return params_; }
  std::uint32_t size() const { return params_.size(); }

  /// Validated construction; bits outside the field are a usage error.
  FieldElement element(std::uint32_t bits) const;
  bool contains(FieldElement a) const { return a.bits < params_.size(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t k) const;
  FieldElement theta(FieldElement x) const;

  /// Least bitmask of multiplicative order exactly 2^m - 1.
  FieldElement primitive_element() const { return primitive_; }

  std::uint64_t multiplicative_order(FieldElement a) const;

  // Unchecked kernels for hot loops (inputs must already be field elements).
  std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;

 private:
  void check(FieldElement a) const;

  FieldParams params_;
  FieldElement primitive_;
};

}  // namespace gscope::ff2m
