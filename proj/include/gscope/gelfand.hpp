#pragma once

// Restriction multiplicities and the (strong) Gelfand predicates, with two
// independent oracles that never touch character tables: commutativity of the
// Schur ring spanned by H-conjugacy class sums, and double-coset counting.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gscope/caps.hpp"
#include "gscope/chartab.hpp"
#include "gscope/groups.hpp"

namespace gscope::gelfand {

/// m[χ][ψ] = <χ↓H, ψ> over Irr(G) x Irr(H), in table row order.
class MultiplicityMatrix {
 public:
  MultiplicityMatrix(std::vector<std::vector<std::uint64_t>> entries, std::vector<std::uint64_t> g_degrees,
                     std::vector<std::uint64_t> h_degrees);

  std::size_t rows() const { return m_.size(); }
  std::size_t cols() const { return h_degrees_.size(); }
  std::uint64_t at(std::size_t chi, std::size_t psi) const { return m_[chi][psi]; }
  const std::vector<std::vector<std::uint64_t>>& entries() const { return m_; }
  std::uint64_t max_entry() const;
  /// First (row-major) position holding max_entry().
  std::pair<std::size_t, std::size_t> argmax() const;

  bool operator==(const MultiplicityMatrix& other) const { return m_ == other.m_; }

 private:
  std::vector<std::vector<std::uint64_t>> m_;
  std::vector<std::uint64_t> g_degrees_;
  std::vector<std::uint64_t> h_degrees_;
};

/// Number of matrices that passed degree bookkeeping (Σ_ψ m·deg ψ = deg χ)
/// in this process; every constructed matrix is checked.
std::size_t bookkeeping_checks();

/// Both tables must share one Dixon prime (UsageError otherwise), and tH must
/// be the table of emb.sub() with emb.sub_classes().
MultiplicityMatrix restriction_multiplicities(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb,
                                              const chartab::CharacterTable& tH);

enum class Method { Full, Filter };
const char* method_name(Method m);

struct FilterDetail {
  std::uint64_t total_degree_h = 0;
  std::uint64_t max_degree_g = 0;
  bool fired = false;  // total_degree_h < max_degree_g
};

struct SgpReport {
  bool verdict = false;
  Method method = Method::Full;
  std::optional<std::uint64_t> max_multiplicity;            // present when the full matrix was computed
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (χ, ψ) with m >= 2, full method only
  FilterDetail filter;
};

/// Applies the total-character filter first unless `force_full`; otherwise
/// (or when the filter does not fire) decides from the full matrix.
SgpReport is_strong_gelfand(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb,
                            const chartab::CharacterTable& tH, bool force_full = false);

struct GelfandReport {
  bool verdict = false;
  std::uint64_t max_multiplicity = 0;  // max_χ <1_H↑G, χ>
  std::uint64_t rank = 0;              // Σ_χ <1_H↑G, χ>², the number of (H,H) double cosets
};

GelfandReport is_gelfand(const chartab::CharacterTable& tG, const groups::SubgroupEmbedding& emb,
                         const chartab::CharacterTable& tH);

/// N_AB(t) = N_BA(t) for all H-classes A, B and every H-class representative t.
bool schur_ring_commutes(const groups::Group& group, std::span<const std::size_t> h_elements,
                         std::size_t cap = Caps{}.oracle);

std::size_t double_coset_count(const groups::Group& group, std::span<const std::size_t> h_elements,
                               std::size_t cap = Caps{}.double_coset);

// ---------------------------------------------------------------- scans

struct ScanEntry {
  std::string label;      // structure label, or the maximal-family name
  std::size_t order = 0;
  std::size_t conjugates = 1;
  std::size_t class_count = 0;
  std::uint64_t total_degree = 0;
  std::vector<std::size_t> generators;  // parent positions
  SgpReport report;                     // with the filter
  std::optional<SgpReport> full;        // force-full, when requested
  bool verdict = false;
};

struct Containment {
  std::size_t small = 0;  // entry indices
  std::size_t big = 0;
};

struct ScanResult {
  std::vector<ScanEntry> entries;      // descending by order
  std::vector<Containment> containments;  // K <= H up to conjugacy, K != H
  std::vector<Containment> monotonicity_violations;
  std::size_t yes_classes = 0;
  std::size_t yes_raw = 0;  // counted with conjugates
};

struct ScanOptions {
  bool force_full = false;
  std::optional<chartab::DixonContext> context;
  Caps caps;
};

/// Full-lattice scan: every conjugacy class of subgroups, each verdict
/// computed independently, then the K <= H monotonicity audit.
ScanResult sgp_scan(const groups::Group& group, const groups::ConjClasses& classes, const ScanOptions& options = {});

/// Scan over given subgroups of one group (no lattice enumeration).
/// Containments are taken from element sets of the given embeddings.
ScanResult scan_subgroups(const chartab::CharacterTable& tG,
                          const std::vector<std::pair<std::string, const groups::SubgroupEmbedding*>>& subgroups,
                          const ScanOptions& options = {});

}  // namespace gscope::gelfand
