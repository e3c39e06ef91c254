#pragma once

// Shared fixtures and brute-force oracles for the test binaries.  Oracles
// work on explicit element lists and plain integer arithmetic, never on the
// library's class matrices or character tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gscope/chartab.hpp"
#include "gscope/groups.hpp"
#include "gscope/io.hpp"

namespace support {

inline std::string corpus(const std::string& name) { return std::string(GSCOPE_CORPUS_DIR) + "/" + name + ".json"; }

inline gscope::groups::Group load(const std::string& name) { return gscope::io::parse_group_input(corpus(name)); }

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"s3", "c6", "d8", "q8", "a4", "d10", "c12", "d12", "f20",
                                              "f21", "s4", "sl2_3", "s3xs3", "a5", "s5"};
  return names;
}

using PermVec = std::vector<int>;

// (x*y)[i] = y[x[i]]
inline PermVec compose(const PermVec& x, const PermVec& y) {
  PermVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
  return out;
}

inline PermVec invert(const PermVec& x) {
  PermVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[x[i]] = static_cast<int>(i);
  return out;
}

/// Naive closure by repeated multiplication until no new products appear.
inline std::set<PermVec> naive_closure(const std::vector<PermVec>& gens, std::size_t degree) {
  PermVec id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);
  std::set<PermVec> all{id};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PermVec> snapshot(all.begin(), all.end());
    for (const auto& a : snapshot) {
      for (const auto& g : gens) {
        if (all.insert(compose(a, g)).second) grew = true;
      }
    }
  }
  return all;
}

/// Conjugacy class sizes by conjugating every element by every element.
inline std::multiset<std::size_t> naive_class_sizes(const std::set<PermVec>& g) {
  std::set<PermVec> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& x : g) {
    if (seen.count(x)) continue;
    std::set<PermVec> cls;
    for (const auto& y : g) cls.insert(compose(compose(invert(y), x), y));
    seen.insert(cls.begin(), cls.end());
    sizes.insert(cls.size());
  }
  return sizes;
}

/// (H, H) double cosets by explicit set construction.
inline std::size_t naive_double_cosets(const gscope::groups::Group& g, const std::vector<std::size_t>& h) {
  std::set<std::set<std::size_t>> cosets;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> c;
    for (std::size_t a : h) {
      for (std::size_t b : h) c.insert(g.mul(g.mul(a, x), b));
    }
    cosets.insert(c);
  }
  return cosets.size();
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// <χ↓H, ψ> as an element sum over H.
inline std::vector<std::vector<std::uint64_t>> naive_multiplicities(const gscope::chartab::CharacterTable& tG,
                                                                    const gscope::groups::SubgroupEmbedding& emb,
                                                                    const gscope::chartab::CharacterTable& tH) {
  const std::uint64_t p = tG.context().p;
  const auto& h = emb.sub();
  const auto& gcc = emb.parent_classes();
  const auto& hcc = emb.sub_classes();
  const std::uint64_t hinv = invmod(h.order() % p, p);
  std::vector<std::vector<std::uint64_t>> m(tG.size(), std::vector<std::uint64_t>(tH.size(), 0));
  for (std::size_t chi = 0; chi < tG.size(); ++chi) {
    for (std::size_t psi = 0; psi < tH.size(); ++psi) {
      std::uint64_t s = 0;
      for (std::size_t x = 0; x < h.order(); ++x) {
        const std::uint64_t a = tG.value(chi, gcc.class_of[emb.to_parent(x)]);
        const std::uint64_t b = tH.value(psi, hcc.class_of[h.inverse(x)]);
        s = (s + mulmod(a, b, p)) % p;
      }
      s = mulmod(s, hinv, p);
      m[chi][psi] = s;
    }
  }
  return m;
}

/// Commutativity of the algebra spanned by H-class sums, by multiplying the
/// sums in the group algebra.
inline bool naive_schur_commutes(const gscope::groups::Group& g, const std::vector<std::size_t>& h) {
  const std::size_t n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    std::set<std::size_t> orbit;
    for (std::size_t y : h) orbit.insert(g.conjugate(x, y));
    for (std::size_t z : orbit) label[z] = static_cast<int>(classes.size());
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  auto product = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::uint32_t> v(n, 0);
    for (std::size_t x : a) {
      for (std::size_t y : b) ++v[g.mul(x, y)];
    }
    return v;
  };
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (product(classes[i], classes[j]) != product(classes[j], classes[i])) return false;
    }
  }
  return true;
}

}  // namespace support
