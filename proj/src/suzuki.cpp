#include "gscope/suzuki.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "gscope/errors.hpp"

namespace gscope::suzuki {

using ff2m::FieldElement;
using groups::Encoding;
using groups::Mat4;

SuzukiParams::SuzukiParams(unsigned m_in) : field(m_in), m(m_in), n((m_in - 1) / 2) {
  q = std::uint64_t{1} << m;
  r = std::uint64_t{1} << (n + 1);
  if (r * r != 2 * q) throw InternalError("sqrt(2q) is not an integer");
  expected_order = q * q * (q * q + 1) * (q - 1);
}

Mat4 unipotent(const ff2m::Field& f, FieldElement a, FieldElement b) {
  const FieldElement ta = f.theta(a);
  const FieldElement tb = f.theta(b);
  Mat4 s;
  for (std::size_t i = 0; i < 4; ++i) s.at(i, i) = f.one();
  s.at(1, 0) = a;
  s.at(2, 0) = b;
  s.at(2, 1) = ta;
  // a^(2+θ) + ab + b^θ,  a^(1+θ) + b,  a
  s.at(3, 0) = f.add(f.add(f.mul(f.mul(a, a), ta), f.mul(a, b)), tb);
  s.at(3, 1) = f.add(f.mul(a, ta), b);
  s.at(3, 2) = a;
  return s;
}

Mat4 torus(const ff2m::Field& f, FieldElement lambda) {
  const std::int64_t e = std::int64_t{1} << f.params().n();
  Mat4 d;
  d.at(0, 0) = f.pow(lambda, e + 1);
  d.at(1, 1) = f.pow(lambda, e);
  d.at(2, 2) = f.pow(lambda, -e);
  d.at(3, 3) = f.pow(lambda, -e - 1);
  return d;
}

Mat4 tau() {
  Mat4 t;
  for (std::size_t i = 0; i < 4; ++i) t.at(i, 3 - i) = {1};
  return t;
}

namespace {

std::uint64_t position_of(const groups::Group& g, const Mat4& m) {
  return g.index_of(g.ambient().encode(m));
}

groups::Group build(const SuzukiParams& params, const ff2m::Field& f, std::size_t cap) {
  std::vector<groups::GroupElement> gens;
  for (unsigned i = 0; i < params.m; ++i) gens.emplace_back(unipotent(f, {1u << i}, f.zero()));
  for (unsigned i = 0; i < params.m; ++i) gens.emplace_back(unipotent(f, f.zero(), {1u << i}));
  gens.emplace_back(torus(f, f.primitive_element()));
  gens.emplace_back(tau());
  return groups::Group::closure(groups::Ambient::matrices(params.field), gens, cap);
}

}  // namespace

SuzukiGroup::SuzukiGroup(unsigned m, std::size_t cap)
    : params_(m), field_(params_.field), group_(build(params_, field_, cap)), classes_(groups::conjugacy_classes(group_)) {
  const auto& p = params_;
  if (group_.order() != p.expected_order) {
    throw ConstructionError("Sz(" + std::to_string(p.q) + ") closure has order " + std::to_string(group_.order()) +
                            ", expected " + std::to_string(p.expected_order));
  }
  if (classes_.count() != p.q + 3) {
    throw ConstructionError("Sz(" + std::to_string(p.q) + ") has " + std::to_string(classes_.count()) +
                            " classes, expected " + std::to_string(p.q + 3));
  }
  const std::uint64_t allowed[] = {4, p.q - 1, p.q - p.r + 1, p.q + p.r + 1};
  for (std::size_t o : classes_.element_orders) {
    const bool ok = std::any_of(std::begin(allowed), std::end(allowed), [&](std::uint64_t a) { return a % o == 0; });
    if (!ok) throw ConstructionError("element order " + std::to_string(o) + " is not allowed in a Suzuki group");
  }
  for (unsigned i = 0; i < p.m; ++i) unipotent_.push_back(position_of(group_, unipotent(field_, {1u << i}, field_.zero())));
  for (unsigned i = 0; i < p.m; ++i) unipotent_.push_back(position_of(group_, unipotent(field_, field_.zero(), {1u << i})));
  torus_ = position_of(group_, torus(field_, field_.primitive_element()));
  tau_ = position_of(group_, tau());
}

std::size_t SuzukiGroup::max_element_order() const {
  return *std::max_element(classes_.element_orders.begin(), classes_.element_orders.end());
}

// ---------------------------------------------------------------- ovoid

namespace {

using Point = std::array<std::uint32_t, 4>;

Point act(const ff2m::Field& f, const Point& v, std::span<const groups::Word> m) {
  Point out{};
  for (std::size_t j = 0; j < 4; ++j) {
    std::uint32_t s = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (v[k] != 0 && m[4 * k + j] != 0) s ^= f.mul_bits(v[k], m[4 * k + j]);
    }
    out[j] = s;
  }
  // Projective normalization: first nonzero coordinate becomes 1.
  const auto lead = std::find_if(out.begin(), out.end(), [](std::uint32_t x) { return x != 0; });
  const FieldElement scale = f.inv({*lead});
  for (auto& x : out) x = f.mul_bits(x, scale.bits);
  return out;
}

}  // namespace

OvoidAction::OvoidAction(const SuzukiGroup& sz, std::size_t cap)
    : sz_(&sz), group_(groups::Group::closure(groups::Ambient::permutations(1), std::vector<Encoding>{})) {
  const auto& G = sz.group();
  const auto& f = sz.field();
  std::map<Point, std::size_t> index;
  points_.push_back({1, 0, 0, 0});
  index.emplace(points_.front(), 0);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t g : G.generators()) {
      const Point p = act(f, points_[i], G.element(g));
      if (index.emplace(p, points_.size()).second) points_.push_back(p);
    }
  }
  const std::uint64_t expected = sz.params().q * sz.params().q + 1;
  if (points_.size() != expected) {
    throw ConstructionError("ovoid orbit has " + std::to_string(points_.size()) + " points, expected " +
                            std::to_string(expected));
  }

  const std::size_t deg = points_.size();
  auto image_of = [&](std::size_t g) {
    Encoding images(deg);
    for (std::size_t i = 0; i < deg; ++i) images[i] = static_cast<groups::Word>(index.at(act(f, points_[i], G.element(g))));
    return images;
  };
  std::vector<Encoding> gens;
  for (std::size_t g : G.generators()) gens.push_back(image_of(g));
  group_ = groups::Group::closure(groups::Ambient::permutations(deg), gens, cap);
  if (group_.order() != G.order()) {
    throw ConstructionError("ovoid action is not faithful: image order " + std::to_string(group_.order()) +
                            " vs " + std::to_string(G.order()));
  }
  to_perm_.resize(G.order());
  std::vector<bool> hit(G.order(), false);
  for (std::size_t x = 0; x < G.order(); ++x) {
    const std::size_t y = group_.index_of(image_of(x));
    if (hit[y]) throw ConstructionError("ovoid action is not injective");
    hit[y] = true;
    to_perm_[x] = y;
  }
  classes_ = groups::conjugacy_classes(group_);
}

std::size_t OvoidAction::pair_orbit_size() const {
  const std::size_t deg = degree();
  std::vector<bool> seen(deg * deg, false);
  std::vector<std::pair<std::size_t, std::size_t>> orbit{{0, 1}};
  seen[1] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t g : group_.generators()) {
      const auto img = group_.element(g);
      const std::size_t a = img[orbit[i].first];
      const std::size_t b = img[orbit[i].second];
      if (!seen[a * deg + b]) {
        seen[a * deg + b] = true;
        orbit.emplace_back(a, b);
      }
    }
  }
  return orbit.size();
}

// ---------------------------------------------------------------- maximal subgroups

const char* maximal_name(Maximal which) {
  switch (which) {
    case Maximal::Borel:
      return "borel";
    case Maximal::Dihedral:
      return "dihedral";
    case Maximal::TorusPlus:
      return "torus+";
    case Maximal::TorusMinus:
      return "torus-";
  }
  return "?";
}

Maximal parse_maximal(const std::string& name) {
  if (name == "borel") return Maximal::Borel;
  if (name == "dihedral") return Maximal::Dihedral;
  if (name == "torus+") return Maximal::TorusPlus;
  if (name == "torus-") return Maximal::TorusMinus;
  throw UsageError("unknown subgroup '" + name + "' (expected borel|dihedral|torus+|torus-)");
}

std::uint64_t maximal_expected_order(const SuzukiParams& p, Maximal which) {
  switch (which) {
    case Maximal::Borel:
      return p.q * p.q * (p.q - 1);
    case Maximal::Dihedral:
      return 2 * (p.q - 1);
    case Maximal::TorusPlus:
      return 4 * (p.q + p.r + 1);
    case Maximal::TorusMinus:
      return 4 * (p.q - p.r + 1);
  }
  return 0;
}

std::vector<std::size_t> maximal_generators(const SuzukiGroup& sz, Maximal which) {
  const auto& G = sz.group();
  const auto& p = sz.params();
  auto drop_identity = [&](std::vector<std::size_t> v) {
    std::erase(v, G.identity());
    return v;
  };
  switch (which) {
    case Maximal::Borel: {
      auto gens = sz.unipotent_generators();
      gens.push_back(sz.torus_generator());
      return drop_identity(gens);
    }
    case Maximal::Dihedral:
      return drop_identity({sz.torus_generator(), sz.tau_generator()});
    case Maximal::TorusPlus:
    case Maximal::TorusMinus: {
      const std::uint64_t target = which == Maximal::TorusPlus ? p.q + p.r + 1 : p.q - p.r + 1;
      if (target == 1) {
        throw DomainError("the torus q - sqrt(2q) + 1 is trivial for q = 2; its normalizer is not a maximal subgroup");
      }
      for (std::size_t x = 0; x < G.order(); ++x) {
        if (groups::element_order(G, x) != target) continue;
        const auto cyclic = groups::generated_subgroup(G, std::vector<std::size_t>{x});
        const auto norm = groups::normalizer(G, cyclic);
        return groups::generating_subset(G, norm);
      }
      throw InternalError("no element of order " + std::to_string(target) + " in Sz(" + std::to_string(p.q) + ")");
    }
  }
  return {};
}

namespace {

void certify(const SuzukiParams& p, Maximal which, const groups::SubgroupEmbedding& emb) {
  const std::uint64_t want = maximal_expected_order(p, which);
  if (emb.sub().order() != want) {
    throw ConstructionError(std::string(maximal_name(which)) + " subgroup has order " +
                            std::to_string(emb.sub().order()) + ", expected " + std::to_string(want));
  }
  if (which == Maximal::Borel && emb.sub_classes().count() != p.q + 2) {
    throw ConstructionError("borel subgroup has " + std::to_string(emb.sub_classes().count()) +
                            " classes, expected " + std::to_string(p.q + 2));
  }
}

}  // namespace

groups::SubgroupEmbedding maximal_subgroup(const SuzukiGroup& sz, Maximal which) {
  const auto gens = maximal_generators(sz, which);
  groups::SubgroupEmbedding emb(sz.group(), sz.classes(), gens);
  certify(sz.params(), which, emb);
  return emb;
}

groups::SubgroupEmbedding maximal_subgroup(const OvoidAction& action, Maximal which) {
  std::vector<std::size_t> gens;
  for (std::size_t g : maximal_generators(action.source(), which)) gens.push_back(action.to_perm(g));
  groups::SubgroupEmbedding emb(action.group(), action.classes(), gens);
  certify(action.source().params(), which, emb);
  return emb;
}

groups::SubgroupEmbedding borel(const SuzukiGroup& sz) { return maximal_subgroup(sz, Maximal::Borel); }
groups::SubgroupEmbedding dihedral_max(const SuzukiGroup& sz) { return maximal_subgroup(sz, Maximal::Dihedral); }
groups::SubgroupEmbedding torus_normalizer(const SuzukiGroup& sz, int sign) {
  if (sign != 1 && sign != -1) throw UsageError("torus sign must be +1 or -1");
  return maximal_subgroup(sz, sign > 0 ? Maximal::TorusPlus : Maximal::TorusMinus);
}

std::int64_t sz_total_degree_formula(std::int64_t q0) {
  // q0 = 2^(2k+1) with k >= 1, small enough that q0^3 fits.
  if (q0 < 8 || (q0 & (q0 - 1)) != 0) {
    throw DomainError("q0 must be an odd power of 2 with q0 >= 8, got " + std::to_string(q0));
  }
  const int e = std::countr_zero(static_cast<std::uint64_t>(q0));
  if (e % 2 == 0) throw DomainError("q0 must be an odd power of 2 with q0 >= 8, got " + std::to_string(q0));
  if (e > 19) throw DomainError("q0 = 2^" + std::to_string(e) + " is too large for 64-bit evaluation");
  const int k = (e - 1) / 2;
  return (std::int64_t{1} << (k + 1)) * (q0 - 1) - q0 * (q0 - 1) + q0 * q0 * q0;
}

}  // namespace gscope::suzuki
