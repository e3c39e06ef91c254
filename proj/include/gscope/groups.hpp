#pragma once

// Finite groups by full enumeration.  Elements are stored as fixed-width
// arrays of 16-bit words (their canonical encoding): permutation images for
// permutation groups, 16 field bitmasks (row-major) for 4x4 matrix groups.
//
// Products follow the right-action convention: for permutations
// (x*y)[i] = y[x[i]], for matrices the ordinary matrix product acting on row
// vectors.  Conjugation is x^g = g^-1 x g.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gscope/caps.hpp"
#include "gscope/ff2m.hpp"

namespace gscope::groups {

using Word = std::uint16_t;
using Encoding = std::vector<Word>;

enum class Kind { Perm, Mat4 };

struct Perm {
  std::vector<Word> images;
};

struct Mat4 {
  std::array<ff2m::FieldElement, 16> entries{};

  ff2m::FieldElement& at(std::size_t row, std::size_t col) { return entries[4 * row + col]; }
  ff2m::FieldElement at(std::size_t row, std::size_t col) const { return entries[4 * row + col]; }
};

using GroupElement = std::variant<Perm, Mat4>;

/// Everything needed to multiply elements of one kind: the permutation degree
/// or the matrix field.
class Ambient {
 public:
  static Ambient permutations(std::size_t degree);
  static Ambient matrices(ff2m::FieldParams field);

  Kind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }
  const ff2m::Field& field() const;
  std::size_t width() const { return kind_ == Kind::Perm ? degree_ : 16; }

  /// Validates and encodes; rejects non-bijections, wrong sizes and singular
  /// matrices with a UsageError/DomainError describing the problem.
  Encoding encode(const GroupElement& element) const;
  GroupElement decode(std::span<const Word> words) const;

  void multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const;
  void invert(std::span<const Word> a, std::span<Word> out) const;
  Encoding identity() const;

  bool operator==(const Ambient& other) const;

 private:
  Ambient(Kind kind, std::size_t degree, std::optional<ff2m::Field> field)
      : kind_(kind), degree_(degree), field_(std::move(field)) {}

  Kind kind_;
  std::size_t degree_;
  std::optional<ff2m::Field> field_;
};

class Group {
 public:
  /// Breadth-first product closure.  Element 0 is the identity; later
  /// elements appear in the order x*g is first reached, scanning the frontier
  /// in order and the generators in the given order.
  static Group closure(Ambient ambient, const std::vector<Encoding>& generators,
                       std::size_t cap = Caps{}.closure);
  static Group closure(Ambient ambient, const std::vector<GroupElement>& generators,
                       std::size_t cap = Caps{}.closure);

  const Ambient& ambient() const { return ambient_; }
  std::size_t order() const { return inverse_.size(); }
  std::size_t width() const { return width_; }
  std::size_t identity() const { return 0; }

  std::span<const Word> element(std::size_t i) const {
    return {words_.data() + i * width_, width_};
  }
  GroupElement element_value(std::size_t i) const { return ambient_.decode(element(i)); }

  std::optional<std::size_t> find(std::span<const Word> words) const;
  /// Like find, but a missing element is a UsageError.
  std::size_t index_of(std::span<const Word> words) const;

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  /// g^-1 x g
  std::size_t conjugate(std::size_t x, std::size_t g) const;

  /// Generator positions, in the order given to closure (duplicates and the
  /// identity dropped).
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::vector<Encoding> generator_encodings() const;

  /// Canonical-encoding comparison of two elements.
  bool encoding_less(std::size_t a, std::size_t b) const;

 private:
  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view key) const { return std::hash<std::string_view>{}(key); }
  };
  struct KeyEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return a == b; }
  };

  explicit Group(Ambient ambient) : ambient_(std::move(ambient)), width_(ambient_.width()) {}

  std::string_view key(std::span<const Word> words) const {
    return {reinterpret_cast<const char*>(words.data()), words.size() * sizeof(Word)};
  }
  std::size_t lookup_product(std::size_t a, std::size_t b) const;
  void finish();

  Ambient ambient_;
  std::size_t width_;
  std::vector<Word> words_;
  std::unordered_map<std::string, std::uint32_t, KeyHash, KeyEq> index_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> table_;  // full Cayley table for small groups
};

struct ConjClasses {
  std::vector<std::size_t> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> class_of;       // element index -> class index
  std::vector<std::size_t> inverse_class;  // class of the representative's inverse
  std::vector<std::size_t> element_orders;

  std::size_t count() const { return reps.size(); }
};

/// Orbits under conjugation by the generators.  Representatives are the least
/// canonical encoding in each class; classes are ordered by (element order,
/// size, representative encoding), so the identity class is always first.
ConjClasses conjugacy_classes(const Group& group);

std::size_t element_order(const Group& group, std::size_t x);
std::size_t centralizer_order(const Group& group, const ConjClasses& classes, std::size_t x);

/// All g with subset^g = subset, by direct scan, in element order.
std::vector<std::size_t> normalizer(const Group& group, std::span<const std::size_t> subset);

/// Elements of the subgroup generated by `gens` (positions in `group`), in
/// closure order.
std::vector<std::size_t> generated_subgroup(const Group& group, std::span<const std::size_t> gens,
                                            std::size_t cap = Caps{}.closure);

/// A small generating set for the subgroup whose elements are `elements`,
/// picked greedily in the given order.
std::vector<std::size_t> generating_subset(const Group& group, std::span<const std::size_t> elements);

/// Elements of [G, G] (normal closure of the generator commutators).
std::vector<std::size_t> derived_subgroup(const Group& group);

bool is_abelian(const Group& group);
/// Short structural label: "1", "C<n>", "D<n>" (dihedral of order n), or "G<n>".
std::string structure_label(const Group& group);

/// H <= G with its own enumeration and classes, plus the class fusion map.
/// The parent group and classes must outlive the embedding.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(const Group& parent, const ConjClasses& parent_classes,
                    std::span<const std::size_t> gens, std::size_t cap = Caps{}.closure);

  const Group& parent() const { return *parent_; }
  const ConjClasses& parent_classes() const { return *parent_classes_; }
  const Group& sub() const { return sub_; }
  const ConjClasses& sub_classes() const { return sub_classes_; }
  std::size_t to_parent(std::size_t sub_index) const { return to_parent_[sub_index]; }
  /// Sub class index -> parent class index.
  const std::vector<std::size_t>& fusion() const { return fusion_; }
  /// Parent positions of the subgroup elements, sorted ascending.
  std::vector<std::size_t> parent_elements() const;
  /// Parent positions of the generators.
  const std::vector<std::size_t>& parent_generators() const { return gens_; }

 private:
  const Group* parent_;
  const ConjClasses* parent_classes_;
  std::vector<std::size_t> gens_;
  Group sub_;
  ConjClasses sub_classes_;
  std::vector<std::size_t> to_parent_;
  std::vector<std::size_t> fusion_;
};

SubgroupEmbedding subgroup_embed(const Group& parent, const ConjClasses& parent_classes,
                                 std::span<const std::size_t> gens, std::size_t cap = Caps{}.closure);

struct SubgroupClass {
  SubgroupEmbedding embedding;             // built from the representative
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> members;  // element sets of all conjugates, sorted
};

/// One entry per conjugacy class of subgroups ordered by (order, least
/// element-set encoding).  Element sets are sorted parent positions compared
/// lexicographically.
std::vector<SubgroupClass> all_subgroups(const Group& group, const ConjClasses& classes,
                                         std::size_t cap = Caps{}.lattice);

/// True when some conjugate in `small` is contained in the representative of `big`.
bool contained_up_to_conjugacy(const SubgroupClass& small, const SubgroupClass& big);

}  // namespace gscope::groups
