#include "gscope/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "gscope/errors.hpp"

namespace gscope::groups {

namespace {

constexpr std::size_t kCayleyTableLimit = 1024;

}  // namespace

// ---------------------------------------------------------------- Ambient

Ambient Ambient::permutations(std::size_t degree) {
  if (degree < 1 || degree > 65535) {
    throw UsageError("permutation degree must be in [1, 65535], got " + std::to_string(degree));
  }
  return Ambient(Kind::Perm, degree, std::nullopt);
}

Ambient Ambient::matrices(ff2m::FieldParams field) { return Ambient(Kind::Mat4, 4, ff2m::Field(field)); }

const ff2m::Field& Ambient::field() const {
  if (!field_) throw UsageError("permutation groups have no field");
  return *field_;
}

bool Ambient::operator==(const Ambient& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Perm) return degree_ == other.degree_;
  return field_->params() == other.field_->params();
}

Encoding Ambient::encode(const GroupElement& element) const {
  if (kind_ == Kind::Perm) {
    const auto* perm = std::get_if<Perm>(&element);
    if (perm == nullptr) throw UsageError("expected a permutation, got a matrix");
    if (perm->images.size() != degree_) {
      throw UsageError("permutation has " + std::to_string(perm->images.size()) + " images, expected " +
                       std::to_string(degree_));
    }
    std::vector<bool> hit(degree_, false);
    for (std::size_t i = 0; i < degree_; ++i) {
      const Word image = perm->images[i];
      if (image >= degree_) {
        throw UsageError("image " + std::to_string(image) + " at position " + std::to_string(i) +
                         " is out of range");
      }
      if (hit[image]) {
        throw UsageError("images are not a bijection: point " + std::to_string(image) + " repeated at position " +
                         std::to_string(i));
      }
      hit[image] = true;
    }
    return perm->images;
  }
  const auto* mat = std::get_if<Mat4>(&element);
  if (mat == nullptr) throw UsageError("expected a 4x4 matrix, got a permutation");
  Encoding words(16);
  for (std::size_t i = 0; i < 16; ++i) {
    if (!field_->contains(mat->entries[i])) {
      throw UsageError("matrix entry " + std::to_string(i) + " = " + std::to_string(mat->entries[i].bits) +
                       " is not a field element");
    }
    words[i] = static_cast<Word>(mat->entries[i].bits);
  }
  Encoding scratch(16);
  invert(words, scratch);  // throws on singular input
  return words;
}

GroupElement Ambient::decode(std::span<const Word> words) const {
  if (kind_ == Kind::Perm) return Perm{Encoding(words.begin(), words.end())};
  Mat4 m;
  for (std::size_t i = 0; i < 16; ++i) m.entries[i] = {words[i]};
  return m;
}

Encoding Ambient::identity() const {
  Encoding e(width());
  if (kind_ == Kind::Perm) {
    std::iota(e.begin(), e.end(), Word{0});
  } else {
    for (std::size_t i = 0; i < 4; ++i) e[5 * i] = 1;
  }
  return e;
}

void Ambient::multiply(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) const {
  if (kind_ == Kind::Perm) {
    for (std::size_t i = 0; i < degree_; ++i) out[i] = b[a[i]];
    return;
  }
  const ff2m::Field& f = *field_;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      std::uint32_t s = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        const std::uint32_t x = a[4 * i + k];
        const std::uint32_t y = b[4 * k + j];
        if (x != 0 && y != 0) s ^= f.mul_bits(x, y);
      }
      out[4 * i + j] = static_cast<Word>(s);
    }
  }
}

void Ambient::invert(std::span<const Word> a, std::span<Word> out) const {
  if (kind_ == Kind::Perm) {
    for (std::size_t i = 0; i < degree_; ++i) out[a[i]] = static_cast<Word>(i);
    return;
  }
  const ff2m::Field& f = *field_;
  std::array<std::uint32_t, 32> aug{};  // [A | I], 4 rows of 8
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) aug[8 * i + j] = a[4 * i + j];
    aug[8 * i + 4 + i] = 1;
  }
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && aug[8 * pivot + col] == 0) ++pivot;
    if (pivot == 4) throw DomainError("matrix is singular over GF(2^" + std::to_string(f.params().m()) + ")");
    if (pivot != col) {
      for (std::size_t j = 0; j < 8; ++j) std::swap(aug[8 * pivot + j], aug[8 * col + j]);
    }
    const std::uint32_t scale = f.inv({aug[8 * col + col]}).bits;
    for (std::size_t j = 0; j < 8; ++j) aug[8 * col + j] = f.mul_bits(aug[8 * col + j], scale);
    for (std::size_t row = 0; row < 4; ++row) {
      if (row == col || aug[8 * row + col] == 0) continue;
      const std::uint32_t factor = aug[8 * row + col];
      for (std::size_t j = 0; j < 8; ++j) aug[8 * row + j] ^= f.mul_bits(factor, aug[8 * col + j]);
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out[4 * i + j] = static_cast<Word>(aug[8 * i + 4 + j]);
  }
}

// ---------------------------------------------------------------- Group

Group Group::closure(Ambient ambient, const std::vector<GroupElement>& generators, std::size_t cap) {
  std::vector<Encoding> encoded;
  encoded.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    try {
      encoded.push_back(ambient.encode(generators[i]));
    } catch (const UsageError& e) {
      throw UsageError("generator " + std::to_string(i) + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("generator " + std::to_string(i) + ": " + e.what());
    }
  }
  return closure(std::move(ambient), encoded, cap);
}

Group Group::closure(Ambient ambient, const std::vector<Encoding>& generators, std::size_t cap) {
  if (cap < 1) throw UsageError("closure cap must be positive");
  Group g(std::move(ambient));
  const std::size_t w = g.width_;
  std::vector<Encoding> gens;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != w) {
      throw UsageError("generator " + std::to_string(i) + " has " + std::to_string(generators[i].size()) +
                       " words, expected " + std::to_string(w));
    }
    try {
      gens.push_back(g.ambient_.encode(g.ambient_.decode(generators[i])));
    } catch (const UsageError& e) {
      throw UsageError("generator " + std::to_string(i) + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("generator " + std::to_string(i) + ": " + e.what());
    }
  }

  const Encoding id = g.ambient_.identity();
  g.words_.insert(g.words_.end(), id.begin(), id.end());
  g.index_.emplace(std::string(g.key(id)), 0);

  Encoding product(w);
  for (std::size_t i = 0; i * w < g.words_.size(); ++i) {
    for (const Encoding& gen : gens) {
      g.ambient_.multiply(g.element(i), gen, product);
      if (g.index_.find(g.key(product)) != g.index_.end()) continue;
      const std::size_t next = g.words_.size() / w;
      if (next >= cap) {
        throw ResourceError("closure exceeded the cap of " + std::to_string(cap) + " elements");
      }
      g.words_.insert(g.words_.end(), product.begin(), product.end());
      g.index_.emplace(std::string(g.key(product)), static_cast<std::uint32_t>(next));
    }
  }

  for (const Encoding& gen : gens) {
    const std::size_t pos = g.index_.find(g.key(gen))->second;
    if (pos == 0) continue;
    if (std::find(g.generators_.begin(), g.generators_.end(), pos) == g.generators_.end()) {
      g.generators_.push_back(pos);
    }
  }
  g.finish();
  return g;
}

void Group::finish() {
  const std::size_t n = words_.size() / width_;
  inverse_.resize(n);
  Encoding scratch(width_);
  for (std::size_t i = 0; i < n; ++i) {
    ambient_.invert(element(i), scratch);
    inverse_[i] = index_.find(key(scratch))->second;
  }
  if (n <= kCayleyTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = static_cast<std::uint32_t>(lookup_product(a, b));
    }
  }
}

std::size_t Group::lookup_product(std::size_t a, std::size_t b) const {
  thread_local Encoding scratch;
  scratch.resize(width_);
  ambient_.multiply(element(a), element(b), scratch);
  const auto it = index_.find(key(scratch));
  if (it == index_.end()) throw InternalError("product left the group: closure is inconsistent");
  return it->second;
}

std::optional<std::size_t> Group::find(std::span<const Word> words) const {
  if (words.size() != width_) return std::nullopt;
  const auto it = index_.find(key(words));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::index_of(std::span<const Word> words) const {
  const auto pos = find(words);
  if (!pos) throw UsageError("element is not in the group");
  return *pos;
}

std::size_t Group::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * order() + b];
  return lookup_product(a, b);
}

std::size_t Group::conjugate(std::size_t x, std::size_t g) const { return mul(mul(inverse(g), x), g); }

std::vector<Encoding> Group::generator_encodings() const {
  std::vector<Encoding> out;
  for (std::size_t g : generators_) {
    const auto e = element(g);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

bool Group::encoding_less(std::size_t a, std::size_t b) const {
  const auto x = element(a);
  const auto y = element(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// ---------------------------------------------------------------- classes

std::size_t element_order(const Group& group, std::size_t x) {
  std::size_t k = 1;
  std::size_t y = x;
  while (y != group.identity()) {
    y = group.mul(y, x);
    ++k;
  }
  return k;
}

ConjClasses conjugacy_classes(const Group& group) {
  const std::size_t n = group.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnset);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (raw_class[start] != kUnset) continue;
    const std::size_t id = orbits.size();
    std::vector<std::size_t> orbit{start};
    raw_class[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t g : group.generators()) {
        const std::size_t y = group.conjugate(orbit[i], g);
        if (raw_class[y] == kUnset) {
          raw_class[y] = id;
          orbit.push_back(y);
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }

  struct Info {
    std::size_t order, size, rep, raw;
  };
  std::vector<Info> info;
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    std::size_t rep = orbits[c][0];
    for (std::size_t x : orbits[c]) {
      if (group.encoding_less(x, rep)) rep = x;
    }
    info.push_back({element_order(group, rep), orbits[c].size(), rep, c});
  }
  std::sort(info.begin(), info.end(), [&](const Info& a, const Info& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.size != b.size) return a.size < b.size;
    return group.encoding_less(a.rep, b.rep);
  });

  ConjClasses cc;
  std::vector<std::size_t> renumber(orbits.size());
  for (std::size_t c = 0; c < info.size(); ++c) {
    renumber[info[c].raw] = c;
    cc.reps.push_back(info[c].rep);
    cc.sizes.push_back(info[c].size);
    cc.element_orders.push_back(info[c].order);
  }
  cc.class_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) cc.class_of[x] = renumber[raw_class[x]];
  for (std::size_t c = 0; c < cc.count(); ++c) cc.inverse_class.push_back(cc.class_of[group.inverse(cc.reps[c])]);
  return cc;
}

std::size_t centralizer_order(const Group& group, const ConjClasses& classes, std::size_t x) {
  return group.order() / classes.sizes[classes.class_of[x]];
}

std::vector<std::size_t> normalizer(const Group& group, std::span<const std::size_t> subset) {
  std::vector<bool> in(group.order(), false);
  for (std::size_t s : subset) in[s] = true;
  std::vector<std::size_t> result;
  for (std::size_t g = 0; g < group.order(); ++g) {
    const bool keeps = std::all_of(subset.begin(), subset.end(), [&](std::size_t s) { return in[group.conjugate(s, g)]; });
    if (keeps) result.push_back(g);
  }
  return result;
}

std::vector<std::size_t> generated_subgroup(const Group& group, std::span<const std::size_t> gens, std::size_t cap) {
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> elems{group.identity()};
  seen[group.identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t g : gens) {
      const std::size_t y = group.mul(elems[i], g);
      if (seen[y]) continue;
      if (elems.size() >= cap) throw ResourceError("closure exceeded the cap of " + std::to_string(cap) + " elements");
      seen[y] = true;
      elems.push_back(y);
    }
  }
  return elems;
}

std::vector<std::size_t> generating_subset(const Group& group, std::span<const std::size_t> elements) {
  std::vector<std::size_t> gens;
  std::vector<bool> covered(group.order(), false);
  covered[group.identity()] = true;
  for (std::size_t e : elements) {
    if (covered[e]) continue;
    gens.push_back(e);
    for (std::size_t x : generated_subgroup(group, gens)) covered[x] = true;
  }
  return gens;
}

std::vector<std::size_t> derived_subgroup(const Group& group) {
  const auto& gens = group.generators();
  std::vector<std::size_t> dgens;
  for (std::size_t a : gens) {
    for (std::size_t b : gens) {
      const std::size_t c = group.mul(group.mul(group.inverse(a), group.inverse(b)), group.mul(a, b));
      if (c != group.identity()) dgens.push_back(c);
    }
  }
  std::vector<std::size_t> elems = generated_subgroup(group, dgens);
  // Normal closure: add conjugates of the current generators until stable.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<bool> in(group.order(), false);
    for (std::size_t x : elems) in[x] = true;
    const std::vector<std::size_t> current = dgens;
    for (std::size_t d : current) {
      for (std::size_t g : gens) {
        const std::size_t c = group.conjugate(d, g);
        if (!in[c]) {
          dgens.push_back(c);
          elems = generated_subgroup(group, dgens);
          for (std::size_t x : elems) in[x] = true;
          grew = true;
        }
      }
    }
  }
  return elems;
}

bool is_abelian(const Group& group) {
  const auto& gens = group.generators();
  for (std::size_t a : gens) {
    for (std::size_t b : gens) {
      if (group.mul(a, b) != group.mul(b, a)) return false;
    }
  }
  return true;
}

std::string structure_label(const Group& group) {
  const std::size_t n = group.order();
  if (n == 1) return "1";
  std::vector<std::size_t> orders(n);
  for (std::size_t x = 0; x < n; ++x) orders[x] = element_order(group, x);
  if (std::find(orders.begin(), orders.end(), n) != orders.end()) return "C" + std::to_string(n);
  if (n % 2 == 0 && n >= 4) {
    for (std::size_t x = 0; x < n; ++x) {
      if (orders[x] != n / 2) continue;
      std::vector<bool> in(n, false);
      for (std::size_t y : generated_subgroup(group, std::vector<std::size_t>{x})) in[y] = true;
      bool dihedral = true;
      for (std::size_t y = 0; y < n && dihedral; ++y) {
        if (!in[y] && orders[y] != 2) dihedral = false;
      }
      if (dihedral) return "D" + std::to_string(n);
      break;  // every cyclic subgroup of index 2 gives the same answer
    }
  }
  return "G" + std::to_string(n);
}

// ---------------------------------------------------------------- embeddings

namespace {

std::vector<Encoding> encodings_of(const Group& parent, std::span<const std::size_t> gens) {
  std::vector<Encoding> out;
  for (std::size_t g : gens) {
    if (g >= parent.order()) {
      throw UsageError("subgroup generator " + std::to_string(g) + " is not an element of the group");
    }
    const auto e = parent.element(g);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

}  // namespace

SubgroupEmbedding::SubgroupEmbedding(const Group& parent, const ConjClasses& parent_classes,
                                     std::span<const std::size_t> gens, std::size_t cap)
    : parent_(&parent),
      parent_classes_(&parent_classes),
      gens_(gens.begin(), gens.end()),
      sub_(Group::closure(parent.ambient(), encodings_of(parent, gens), cap)),
      sub_classes_(conjugacy_classes(sub_)) {
  to_parent_.resize(sub_.order());
  for (std::size_t i = 0; i < sub_.order(); ++i) to_parent_[i] = parent.index_of(sub_.element(i));
  for (std::size_t c = 0; c < sub_classes_.count(); ++c) {
    fusion_.push_back(parent_classes.class_of[to_parent_[sub_classes_.reps[c]]]);
  }
  for (std::size_t i = 0; i < sub_.order(); ++i) {
    if (parent_classes.class_of[to_parent_[i]] != fusion_[sub_classes_.class_of[i]]) {
      throw InternalError("class fusion is not well defined at subgroup element " + std::to_string(i));
    }
  }
}

std::vector<std::size_t> SubgroupEmbedding::parent_elements() const {
  std::vector<std::size_t> out = to_parent_;
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupEmbedding subgroup_embed(const Group& parent, const ConjClasses& parent_classes,
                                 std::span<const std::size_t> gens, std::size_t cap) {
  return SubgroupEmbedding(parent, parent_classes, gens, cap);
}

// ---------------------------------------------------------------- lattice

namespace {

using Bits = std::vector<std::uint64_t>;

struct Candidate {
  Bits bits;
  std::vector<std::size_t> gens;
};

Bits to_bits(std::size_t n, std::span<const std::size_t> elems) {
  Bits b((n + 63) / 64, 0);
  for (std::size_t x : elems) b[x / 64] |= std::uint64_t{1} << (x % 64);
  return b;
}

bool has(const Bits& b, std::size_t x) { return (b[x / 64] >> (x % 64)) & 1u; }

std::vector<std::size_t> from_bits(std::size_t n, const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (has(b, x)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<SubgroupClass> all_subgroups(const Group& group, const ConjClasses& classes, std::size_t cap) {
  const std::size_t n = group.order();
  if (n > cap) {
    throw ResourceError("subgroup enumeration needs |G| <= lattice cap of " + std::to_string(cap) + ", got " +
                        std::to_string(n));
  }

  std::vector<Candidate> subs;
  std::map<Bits, std::size_t> seen;
  auto add = [&](std::vector<std::size_t> gens) {
    Bits bits = to_bits(n, generated_subgroup(group, gens));
    auto [it, inserted] = seen.emplace(bits, subs.size());
    if (inserted) subs.push_back({std::move(bits), std::move(gens)});
    return it->second;
  };

  for (std::size_t g = 0; g < n; ++g) {
    add(g == group.identity() ? std::vector<std::size_t>{} : std::vector<std::size_t>{g});
  }
  // Joins <A, g> until no new subgroup appears; <A, g> depends only on the coset Ag.
  for (std::size_t a = 0; a < subs.size(); ++a) {
    Bits done = subs[a].bits;
    const std::vector<std::size_t> members = from_bits(n, subs[a].bits);
    for (std::size_t g = 0; g < n; ++g) {
      if (has(done, g)) continue;
      for (std::size_t x : members) {
        const std::size_t xg = group.mul(x, g);
        done[xg / 64] |= std::uint64_t{1} << (xg % 64);
      }
      std::vector<std::size_t> gens = subs[a].gens;
      gens.push_back(g);
      add(std::move(gens));
    }
  }

  // Conjugacy buckets via orbits under the generators.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> bucket(subs.size(), kUnset);
  std::vector<std::vector<std::size_t>> buckets;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (bucket[s] != kUnset) continue;
    std::vector<std::size_t> orbit{s};
    bucket[s] = buckets.size();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const std::vector<std::size_t> elems = from_bits(n, subs[orbit[i]].bits);
      for (std::size_t g : group.generators()) {
        std::vector<std::size_t> image;
        image.reserve(elems.size());
        for (std::size_t x : elems) image.push_back(group.conjugate(x, g));
        const auto it = seen.find(to_bits(n, image));
        if (it == seen.end()) throw InternalError("conjugate of a subgroup missing from the lattice");
        if (bucket[it->second] == kUnset) {
          bucket[it->second] = buckets.size();
          orbit.push_back(it->second);
        }
      }
    }
    buckets.push_back(std::move(orbit));
  }

  struct Entry {
    std::size_t order;
    std::vector<std::vector<std::size_t>> members;
  };
  std::vector<Entry> entries;
  for (const auto& b : buckets) {
    Entry e;
    for (std::size_t s : b) e.members.push_back(from_bits(n, subs[s].bits));
    std::sort(e.members.begin(), e.members.end());
    e.order = e.members.front().size();
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.order, a.members.front()) < std::tie(b.order, b.members.front());
  });

  std::vector<SubgroupClass> out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    const std::vector<std::size_t> gens = generating_subset(group, e.members.front());
    out.push_back(SubgroupClass{SubgroupEmbedding(group, classes, gens), e.order, std::move(e.members)});
  }
  return out;
}

bool contained_up_to_conjugacy(const SubgroupClass& small, const SubgroupClass& big) {
  const auto& host = big.members.front();
  for (const auto& member : small.members) {
    if (std::includes(host.begin(), host.end(), member.begin(), member.end())) return true;
  }
  return false;
}

}  // namespace gscope::groups
