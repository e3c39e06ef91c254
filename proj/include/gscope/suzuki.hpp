#pragma once

// Sz(q), q = 2^(2n+1), as a group of 4x4 matrices over GF(q), its doubly
// transitive action on the q^2+1 ovoid points, and the maximal subgroups
// available at desk scale.
//
// Generators:
//   S(a,b)  lower unitriangular, S(a,b) S(c,d) = S(a+c, b+d+a^θ c)
//   M(λ)    diag(λ^(2^n+1), λ^(2^n), λ^(-2^n), λ^(-2^n-1))
//   τ       antidiagonal ones

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gscope/caps.hpp"
#include "gscope/ff2m.hpp"
#include "gscope/groups.hpp"

namespace gscope::suzuki {

struct SuzukiParams {
  explicit SuzukiParams(unsigned m);

  ff2m::FieldParams field;
  unsigned m;
  unsigned n;
  std::uint64_t q;
  std::uint64_t r;  // sqrt(2q) = 2^(n+1)
  std::uint64_t expected_order;
};

groups::Mat4 unipotent(const ff2m::Field& f, ff2m::FieldElement a, ff2m::FieldElement b);
groups::Mat4 torus(const ff2m::Field& f, ff2m::FieldElement lambda);
groups::Mat4 tau();

class SuzukiGroup {
 public:
  /// Builds and certifies Sz(2^m): order q^2(q^2+1)(q-1), q+3 classes, and
  /// element orders dividing one of 4, q-1, q-r+1, q+r+1.  A failed check is
  /// a ConstructionError.
  explicit SuzukiGroup(unsigned m, std::size_t cap = Caps{}.closure);

  const SuzukiParams& params() const { return params_; }
  const ff2m::Field& field() const { return field_; }
  const groups::Group& group() const { return group_; }
  const groups::ConjClasses& classes() const { return classes_; }

  /// Positions of S(t^i, 0) and S(0, t^i), i < m.
  const std::vector<std::size_t>& unipotent_generators() const { return unipotent_; }
  /// Position of M(λ0), λ0 the primitive element (the identity when q = 2).
  std::size_t torus_generator() const { return torus_; }
  std::size_t tau_generator() const { return tau_; }
  std::size_t max_element_order() const;

 private:
  SuzukiParams params_;
  ff2m::Field field_;
  groups::Group group_;
  groups::ConjClasses classes_;
  std::vector<std::size_t> unipotent_;
  std::size_t torus_ = 0;
  std::size_t tau_ = 0;
};

/// Permutation action on the orbit of the projective point <e1> (row vectors,
/// right action), which is fixed by every S(a,b) and M(λ).
class OvoidAction {
 public:
  explicit OvoidAction(const SuzukiGroup& sz, std::size_t cap = Caps{}.closure);

  const SuzukiGroup& source() const { return *sz_; }
  const groups::Group& group() const { return group_; }
  const groups::ConjClasses& classes() const { return classes_; }
  std::size_t degree() const { return points_.size(); }
  /// Matrix position -> permutation position (a group isomorphism).
  std::size_t to_perm(std::size_t matrix_index) const { return to_perm_[matrix_index]; }
  /// Normalized coordinate vectors of the ovoid points, in orbit order.
  const std::vector<std::array<std::uint32_t, 4>>& points() const { return points_; }
  /// Orbit size of the ordered pair (point 0, point 1).
  std::size_t pair_orbit_size() const;

 private:
  const SuzukiGroup* sz_;
  std::vector<std::array<std::uint32_t, 4>> points_;
  groups::Group group_;
  groups::ConjClasses classes_;
  std::vector<std::size_t> to_perm_;
};

enum class Maximal { Borel, Dihedral, TorusPlus, TorusMinus };

const char* maximal_name(Maximal which);
Maximal parse_maximal(const std::string& name);  // borel|dihedral|torus+|torus-
std::uint64_t maximal_expected_order(const SuzukiParams& params, Maximal which);

/// Generators (matrix positions) of a maximal subgroup.  The torus normalizers
/// take the first element, in element order, of order q ± r + 1.
std::vector<std::size_t> maximal_generators(const SuzukiGroup& sz, Maximal which);

/// Matrix-form embedding; the order (and for the Borel the class count q+2)
/// is certified.
groups::SubgroupEmbedding maximal_subgroup(const SuzukiGroup& sz, Maximal which);
/// Same subgroup inside the permutation form.
groups::SubgroupEmbedding maximal_subgroup(const OvoidAction& action, Maximal which);

groups::SubgroupEmbedding borel(const SuzukiGroup& sz);
groups::SubgroupEmbedding dihedral_max(const SuzukiGroup& sz);
groups::SubgroupEmbedding torus_normalizer(const SuzukiGroup& sz, int sign);

/// Total character degree of Sz(q0), q0 = 2^(2k+1), k >= 1:
/// 2^(k+1)(q0-1) - q0(q0-1) + q0^3.
std::int64_t sz_total_degree_formula(std::int64_t q0);

}  // namespace gscope::suzuki
