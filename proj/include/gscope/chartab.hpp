#pragma once

// Character tables by the Dixon-Schneider method.  Every character value is
// held as a residue modulo a prime p ≡ 1 (mod exp G) with p > 2|G|; degrees
// and inner products are rational integers in [0, p) and are read off the
// canonical residue directly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gscope/caps.hpp"
#include "gscope/groups.hpp"

namespace gscope::chartab {

struct DixonContext {
  std::uint64_t p = 0;
  std::uint64_t e = 0;
  std::uint64_t omega = 0;  // element of order exactly e mod p

  bool operator==(const DixonContext&) const = default;
};

/// lcm of the element orders.
std::uint64_t exponent(const groups::ConjClasses& classes);

/// The (skip+1)-th smallest prime p ≡ 1 (mod e) with p > 2·order, together
/// with omega = g^((p-1)/e) for the least primitive root g.
DixonContext dixon_prime(std::uint64_t order, std::uint64_t e, unsigned skip = 0);

/// Validates a user-chosen prime against `order` and `e`; throws UsageError.
DixonContext make_context(std::uint64_t p, std::uint64_t order, std::uint64_t e);

/// a(i,j,k) = #{(x,y) in C_i x C_j : xy = z_k}, z_k the k-th representative.
class ClassMatrices {
 public:
  ClassMatrices(const groups::Group& group, const groups::ConjClasses& classes);

  std::size_t size() const { return r_; }
  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<std::uint64_t> a_;
};

inline ClassMatrices class_matrices(const groups::Group& group, const groups::ConjClasses& classes) {
  return ClassMatrices(group, classes);
}

class CharacterTable {
 public:
  CharacterTable(DixonContext context, groups::ConjClasses classes, std::uint64_t group_order,
                 std::vector<std::vector<std::uint64_t>> values, std::vector<std::uint64_t> degrees);

  const DixonContext& context() const { return context_; }
  const groups::ConjClasses& classes() const { return classes_; }
  std::uint64_t group_order() const { return order_; }
  std::size_t size() const { return degrees_.size(); }

  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  std::uint64_t degree(std::size_t chi) const { return degrees_[chi]; }
  std::uint64_t max_degree() const;
  /// Residue of χ on class k.
  std::uint64_t value(std::size_t chi, std::size_t k) const { return values_[chi][k]; }
  const std::vector<std::vector<std::uint64_t>>& values() const { return values_; }

  /// χ(g) = χ(g^-1) on every class.
  bool is_real(std::size_t chi) const;
  std::size_t linear_count() const;

  /// Throws InternalError unless both orthogonality relations, Σ d² = |G|,
  /// and 1 <= d <= sqrt|G| hold.
  void validate() const;

 private:
  DixonContext context_;
  groups::ConjClasses classes_;
  std::uint64_t order_;
  std::vector<std::vector<std::uint64_t>> values_;
  std::vector<std::uint64_t> degrees_;
};

/// Rows are sorted by degree, then by value tuple; the trivial character is
/// row 0.  Without `context` the least Dixon prime for the group is used.
CharacterTable character_table(const groups::Group& group, const groups::ConjClasses& classes,
                               std::optional<DixonContext> context = std::nullopt, const Caps& caps = {});

std::uint64_t total_character_degree(const CharacterTable& table);

}  // namespace gscope::chartab
