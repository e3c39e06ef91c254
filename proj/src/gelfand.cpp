#include "gscope/gelfand.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "gscope/errors.hpp"
#include "modular.hpp"

namespace gscope::gelfand {

using modp::u64;

namespace {

std::atomic<std::size_t> g_bookkeeping_checks{0};

}  // namespace

std::size_t bookkeeping_checks() { return g_bookkeeping_checks.load(); }

MultiplicityMatrix::MultiplicityMatrix(std::vector<std::vector<std::uint64_t>> entries,
                                       std::vector<std::uint64_t> g_degrees, std::vector<std::uint64_t> h_degrees)
    : m_(std::move(entries)), g_degrees_(std::move(g_degrees)), h_degrees_(std::move(h_degrees)) {
  if (m_.size() != g_degrees_.size()) throw InternalError("multiplicity matrix row count mismatch");
  for (std::size_t chi = 0; chi < m_.size(); ++chi) {
    if (m_[chi].size() != h_degrees_.size()) throw InternalError("multiplicity matrix column count mismatch");
    std::uint64_t total = 0;
    for (std::size_t psi = 0; psi < h_degrees_.size(); ++psi) total += m_[chi][psi] * h_degrees_[psi];
    if (total != g_degrees_[chi]) {
      throw InternalError("degree bookkeeping fails on row " + std::to_string(chi) + ": " + std::to_string(total) +
                          " != " + std::to_string(g_degrees_[chi]));
    }
  }
  if (!m_.empty() && m_[0][0] != 1) throw InternalError("trivial character does not restrict to the trivial character");
  ++g_bookkeeping_checks;
}

std::uint64_t MultiplicityMatrix::max_entry() const {
  std::uint64_t best = 0;
  for (const auto& row : m_) {
    for (std::uint64_t x : row) best = std::max(best, x);
  }
  return best;
}

std::pair<std::size_t, std::size_t> MultiplicityMatrix::argmax() const {
  const std::uint64_t best = max_entry();
  for (std::size_t i = 0; i < m_.size(); ++i) {
    for (std::size_t j = 0; j < m_[i].size(); ++j) {
      if (m_[i][j] == best) return {i, j};
    }
  }
  return {0, 0};
}

MultiplicityMatrix restriction_multiplicities(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb,
                                              const chartab::CharacterTable& tH) {
  const u64 p = tG.context().p;
  if (tH.context().p != p) {
    throw UsageError("G and H tables use different primes (" + std::to_string(p) + " vs " +
                     std::to_string(tH.context().p) + "); recompute H at G's prime");
  }
  const auto& hc = emb.sub_classes();
  if (tH.group_order() != emb.sub().order() || tH.classes().count() != hc.count() ||
      tH.classes().sizes != hc.sizes) {
    throw UsageError("subgroup table does not belong to the embedded subgroup");
  }
  if (tG.group_order() != emb.parent().order() || tG.classes().count() != emb.parent_classes().count()) {
    throw UsageError("group table does not belong to the embedding's parent");
  }
  const auto& fusion = emb.fusion();
  if (fusion.size() != hc.count()) throw UsageError("class fusion is missing");

  const u64 inv_h = modp::inv(emb.sub().order() % p, p);
  std::vector<std::vector<std::uint64_t>> m(tG.size(), std::vector<std::uint64_t>(tH.size(), 0));
  for (std::size_t chi = 0; chi < tG.size(); ++chi) {
    for (std::size_t psi = 0; psi < tH.size(); ++psi) {
      u64 s = 0;
      for (std::size_t d = 0; d < hc.count(); ++d) {
        const u64 term = modp::mul(tG.value(chi, fusion[d]), tH.value(psi, hc.inverse_class[d]), p);
        s = modp::add(s, modp::mul(hc.sizes[d] % p, term, p), p);
      }
      const u64 value = modp::mul(s, inv_h, p);
      if (value > tG.degree(chi)) {
        throw InternalError("multiplicity residue " + std::to_string(value) + " exceeds deg χ; prime too small?");
      }
      m[chi][psi] = value;
    }
  }
  return MultiplicityMatrix(std::move(m), tG.degrees(), tH.degrees());
}

const char* method_name(Method m) { return m == Method::Full ? "full" : "filter"; }

SgpReport is_strong_gelfand(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb,
                            const chartab::CharacterTable& tH, bool force_full) {
  SgpReport report;
  report.filter.total_degree_h = chartab::total_character_degree(tH);
  report.filter.max_degree_g = tG.max_degree();
  report.filter.fired = report.filter.total_degree_h < report.filter.max_degree_g;
  if (report.filter.fired && !force_full) {
    report.verdict = false;
    report.method = Method::Filter;
    return report;
  }
  const MultiplicityMatrix m = restriction_multiplicities(tG, emb, tH);
  report.method = Method::Full;
  report.max_multiplicity = m.max_entry();
  report.verdict = *report.max_multiplicity <= 1;
  if (!report.verdict) report.witness = m.argmax();
  return report;
}

GelfandReport is_gelfand(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb,
                         const chartab::CharacterTable& tH) {
  const MultiplicityMatrix m = restriction_multiplicities(tG, emb, tH);
  GelfandReport report;
  for (std::size_t chi = 0; chi < m.rows(); ++chi) {
    const std::uint64_t x = m.at(chi, 0);
    report.max_multiplicity = std::max(report.max_multiplicity, x);
    report.rank += x * x;
  }
  report.verdict = report.max_multiplicity <= 1;
  return report;
}

// ---------------------------------------------------------------- oracles

namespace {

std::vector<std::size_t> h_class_labels(const groups::Group& group, std::span<const std::size_t> h_elements,
                                        std::size_t& count) {
  const auto gens = groups::generating_subset(group, h_elements);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(group.order(), kUnset);
  count = 0;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (label[x] != kUnset) continue;
    std::vector<std::size_t> orbit{x};
    label[x] = count;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t h : gens) {
        const std::size_t y = group.conjugate(orbit[i], h);
        if (label[y] == kUnset) {
          label[y] = count;
          orbit.push_back(y);
        }
      }
    }
    ++count;
  }
  return label;
}

void check_subset(const groups::Group& group, std::span<const std::size_t> h_elements) {
  for (std::size_t h : h_elements) {
    if (h >= group.order()) throw UsageError("subgroup element " + std::to_string(h) + " is not in the group");
  }
}

}  // namespace

bool schur_ring_commutes(const groups::Group& group, std::span<const std::size_t> h_elements, std::size_t cap) {
  if (group.order() > cap) {
    throw ResourceError("Schur-ring oracle needs |G| <= oracle cap of " + std::to_string(cap) + ", got " +
                        std::to_string(group.order()));
  }
  check_subset(group, h_elements);
  std::size_t count = 0;
  const auto label = h_class_labels(group, h_elements, count);
  std::vector<bool> done(count, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(group.order());
  for (std::size_t t = 0; t < group.order(); ++t) {
    if (done[label[t]]) continue;
    done[label[t]] = true;
    // Each a fixes b = a^-1 t, so counting (A, B) over a gives N_AB(t).
    for (std::size_t a = 0; a < group.order(); ++a) {
      const std::size_t b = group.mul(group.inverse(a), t);
      pairs[a] = {static_cast<std::uint32_t>(label[a]), static_cast<std::uint32_t>(label[b])};
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> swapped(pairs.size());
    std::transform(pairs.begin(), pairs.end(), swapped.begin(), [](auto pr) { return std::pair{pr.second, pr.first}; });
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    std::sort(swapped.begin(), swapped.end());
    if (sorted != swapped) return false;
  }
  return true;
}

std::size_t double_coset_count(const groups::Group& group, std::span<const std::size_t> h_elements, std::size_t cap) {
  if (group.order() > cap) {
    throw ResourceError("double-coset count needs |G| <= " + std::to_string(cap) + ", got " +
                        std::to_string(group.order()));
  }
  check_subset(group, h_elements);
  const auto gens = groups::generating_subset(group, h_elements);
  std::vector<bool> seen(group.order(), false);
  std::size_t count = 0;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    std::vector<std::size_t> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t h : gens) {
        for (std::size_t y : {group.mul(h, orbit[i]), group.mul(orbit[i], h)}) {
          if (!seen[y]) {
            seen[y] = true;
            orbit.push_back(y);
          }
        }
      }
    }
  }
  return count;
}

// ---------------------------------------------------------------- scans

namespace {

ScanEntry evaluate(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb, const ScanOptions& options) {
  const chartab::CharacterTable tH =
      chartab::character_table(emb.sub(), emb.sub_classes(), tG.context(), options.caps);
  ScanEntry entry;
  entry.order = emb.sub().order();
  entry.class_count = emb.sub_classes().count();
  entry.total_degree = chartab::total_character_degree(tH);
  entry.generators = emb.parent_generators();
  entry.report = is_strong_gelfand(tG, emb, tH, false);
  if (options.force_full) entry.full = is_strong_gelfand(tG, emb, tH, true);
  entry.verdict = entry.full ? entry.full->verdict : entry.report.verdict;
  return entry;
}

void audit(ScanResult& result) {
  for (const auto& c : result.containments) {
    if (!result.entries[c.big].verdict && result.entries[c.small].verdict) result.monotonicity_violations.push_back(c);
  }
  for (const auto& e : result.entries) {
    if (e.verdict) {
      ++result.yes_classes;
      result.yes_raw += e.conjugates;
    }
  }
}

}  // namespace

ScanResult sgp_scan(const groups::Group& group, const groups::ConjClasses& classes, const ScanOptions& options) {
  const auto lattice = groups::all_subgroups(group, classes, options.caps.lattice);
  const auto tG = chartab::character_table(group, classes, options.context, options.caps);

  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lattice[a].order > lattice[b].order; });

  ScanResult result;
  for (std::size_t idx : order) {
    const auto& cls = lattice[idx];
    ScanEntry entry = evaluate(tG, cls.embedding, options);
    entry.label = cls.order == group.order() ? "G" : groups::structure_label(cls.embedding.sub());
    entry.conjugates = cls.members.size();
    result.entries.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      const auto& small = lattice[order[i]];
      const auto& big = lattice[order[j]];
      if (i == j || big.order <= small.order || big.order % small.order != 0) continue;
      if (groups::contained_up_to_conjugacy(small, big)) result.containments.push_back({i, j});
    }
  }
  audit(result);
  return result;
}

ScanResult scan_subgroups(const chartab::CharacterTable& tG,
                          const std::vector<std::pair<std::string, const groups::SubgroupEmbedding*>>& subgroups,
                          const ScanOptions& options) {
  std::vector<std::size_t> order(subgroups.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return subgroups[a].second->sub().order() > subgroups[b].second->sub().order();
  });

  ScanResult result;
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t idx : order) {
    const auto& [name, emb] = subgroups[idx];
    ScanEntry entry = evaluate(tG, *emb, options);
    entry.label = name;
    result.entries.push_back(std::move(entry));
    sets.push_back(emb->parent_elements());
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j || sets[j].size() <= sets[i].size()) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        result.containments.push_back({i, j});
      }
    }
  }
  audit(result);
  return result;
}

}  // namespace gscope::gelfand
