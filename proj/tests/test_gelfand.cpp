#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "gscope/chartab.hpp"
#include "gscope/errors.hpp"
#include "gscope/gelfand.hpp"
#include "gscope/suzuki.hpp"

using namespace gscope;
using gelfand::Method;

namespace {

struct Fixture {
  groups::Group g;
  groups::ConjClasses cc;
  chartab::CharacterTable t;

  explicit Fixture(const std::string& name)
      : g(support::load(name)), cc(groups::conjugacy_classes(g)), t(chartab::character_table(g, cc)) {}
};

std::size_t first_of_order(const groups::Group& g, std::size_t order) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (groups::element_order(g, x) == order) return x;
  }
  FAIL("no element of order " << order);
  return 0;
}

groups::SubgroupEmbedding cyclic(const Fixture& f, std::size_t order) {
  const std::vector<std::size_t> gens{first_of_order(f.g, order)};
  return groups::subgroup_embed(f.g, f.cc, gens);
}

chartab::CharacterTable table_of(const groups::SubgroupEmbedding& emb, const chartab::CharacterTable& tG) {
  return chartab::character_table(emb.sub(), emb.sub_classes(), tG.context());
}

std::vector<std::size_t> parent_set(const groups::SubgroupEmbedding& emb) { return emb.parent_elements(); }

std::vector<std::string> yes_labels(const gelfand::ScanResult& scan) {
  std::vector<std::string> out;
  for (const auto& e : scan.entries) {
    if (e.verdict) out.push_back(e.label);
  }
  return out;
}

groups::SubgroupEmbedding point_stabilizer(const Fixture& f) {
  const std::size_t last = f.g.width() - 1;
  std::vector<std::size_t> fixers;
  for (std::size_t x = 0; x < f.g.order(); ++x) {
    if (f.g.element(x)[last] == last) fixers.push_back(x);
  }
  return groups::subgroup_embed(f.g, f.cc, groups::generating_subset(f.g, fixers));
}

}  // namespace

TEST_CASE("restriction from S3 to A3") {
  const Fixture s3("s3");
  const auto a3 = cyclic(s3, 3);
  const auto tH = table_of(a3, s3.t);
  const auto m = gelfand::restriction_multiplicities(s3.t, a3, tH);
  CHECK(m.entries() == support::naive_multiplicities(s3.t, a3, tH));
  CHECK(m.entries()[0] == std::vector<std::uint64_t>{1, 0, 0});
  CHECK(m.entries()[2] == std::vector<std::uint64_t>{0, 1, 1});
  CHECK(m.max_entry() == 1);
}

TEST_CASE("restriction from F20 to C5") {
  const Fixture f20("f20");
  const auto c5 = cyclic(f20, 5);
  const auto tH = table_of(c5, f20.t);
  const auto m = gelfand::restriction_multiplicities(f20.t, c5, tH);
  CHECK(m.entries() == support::naive_multiplicities(f20.t, c5, tH));
  const std::size_t four = f20.t.size() - 1;
  REQUIRE(f20.t.degree(four) == 4);
  CHECK(m.entries()[four] == std::vector<std::uint64_t>{0, 1, 1, 1, 1});
}

TEST_CASE("restriction requires a shared prime") {
  const Fixture s3("s3");
  const auto a3 = cyclic(s3, 3);
  const auto other = chartab::character_table(a3.sub(), a3.sub_classes());
  CHECK(other.context().p != s3.t.context().p);
  CHECK_THROWS_AS(gelfand::restriction_multiplicities(s3.t, a3, other), UsageError);
}

TEST_CASE("degree bookkeeping is counted") {
  const std::size_t before = gelfand::bookkeeping_checks();
  const Fixture s4("s4");
  const auto h = point_stabilizer(s4);
  gelfand::restriction_multiplicities(s4.t, h, table_of(h, s4.t));
  CHECK(gelfand::bookkeeping_checks() == before + 1);
  CHECK_THROWS_AS(gelfand::MultiplicityMatrix({{1, 0}, {1, 0}}, {1, 2}, {1, 1}), InternalError);
}

TEST_CASE("strong Gelfand reports") {
  const Fixture f20("f20");
  const auto whole = groups::subgroup_embed(f20.g, f20.cc, f20.g.generators());
  const auto r_whole = gelfand::is_strong_gelfand(f20.t, whole, table_of(whole, f20.t));
  CHECK(r_whole.verdict);
  CHECK(r_whole.method == Method::Full);
  CHECK(r_whole.max_multiplicity == 1u);
  CHECK_FALSE(r_whole.witness);

  const auto c4 = cyclic(f20, 4);
  const auto r_c4 = gelfand::is_strong_gelfand(f20.t, c4, table_of(c4, f20.t));
  CHECK(r_c4.verdict);
  CHECK(r_c4.filter.total_degree_h == 4);
  CHECK(r_c4.filter.max_degree_g == 4);
  CHECK_FALSE(r_c4.filter.fired);

  const auto c2 = cyclic(f20, 2);
  const auto t_c2 = table_of(c2, f20.t);
  const auto r_c2 = gelfand::is_strong_gelfand(f20.t, c2, t_c2);
  CHECK_FALSE(r_c2.verdict);
  CHECK(r_c2.method == Method::Filter);
  CHECK(r_c2.filter.fired);
  CHECK_FALSE(r_c2.max_multiplicity);
  const auto r_c2_full = gelfand::is_strong_gelfand(f20.t, c2, t_c2, true);
  CHECK_FALSE(r_c2_full.verdict);
  CHECK(r_c2_full.method == Method::Full);
  REQUIRE(r_c2_full.witness);
  const auto naive = support::naive_multiplicities(f20.t, c2, t_c2);
  CHECK(naive[r_c2_full.witness->first][r_c2_full.witness->second] == *r_c2_full.max_multiplicity);
  CHECK(*r_c2_full.max_multiplicity >= 2);
}

TEST_CASE("Gelfand pairs") {
  const Fixture s3("s3");
  const auto c2 = cyclic(s3, 2);
  const auto r = gelfand::is_gelfand(s3.t, c2, table_of(c2, s3.t));
  CHECK(r.verdict);
  CHECK(r.max_multiplicity == 1);
  CHECK(r.rank == 2);

  const Fixture s4("s4");
  const auto c2s4 = cyclic(s4, 2);
  const auto r4 = gelfand::is_gelfand(s4.t, c2s4, table_of(c2s4, s4.t));
  CHECK(r4.rank == support::naive_double_cosets(s4.g, parent_set(c2s4)));
}

TEST_CASE("character-free oracles") {
  const Fixture f20("f20");
  std::vector<std::size_t> all(f20.g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(gelfand::schur_ring_commutes(f20.g, all));
  CHECK(gelfand::double_coset_count(f20.g, all) == 1);

  const auto c4 = parent_set(cyclic(f20, 4));
  const auto c2 = parent_set(cyclic(f20, 2));
  const auto c5 = parent_set(cyclic(f20, 5));
  CHECK(gelfand::schur_ring_commutes(f20.g, c4));
  CHECK_FALSE(gelfand::schur_ring_commutes(f20.g, c2));
  CHECK(gelfand::schur_ring_commutes(f20.g, c4) == support::naive_schur_commutes(f20.g, c4));
  CHECK(gelfand::schur_ring_commutes(f20.g, c2) == support::naive_schur_commutes(f20.g, c2));

  const std::size_t dc = gelfand::double_coset_count(f20.g, c5);
  CHECK(dc == support::naive_double_cosets(f20.g, c5));
  CHECK(dc == 4);
  const auto emb = cyclic(f20, 5);
  CHECK(gelfand::is_gelfand(f20.t, emb, table_of(emb, f20.t)).rank == dc);

  const Fixture s3("s3");
  CHECK(gelfand::double_coset_count(s3.g, parent_set(cyclic(s3, 2))) == 2);

  CHECK_THROWS_AS(gelfand::schur_ring_commutes(f20.g, c4, 10), ResourceError);
  CHECK_THROWS_AS(gelfand::double_coset_count(f20.g, c4, 10), ResourceError);
}

TEST_CASE("scan of Sz(2)") {
  const suzuki::SuzukiGroup sz(1);
  const auto scan = gelfand::sgp_scan(sz.group(), sz.classes());
  CHECK(scan.entries.size() == 6);
  CHECK(yes_labels(scan) == std::vector<std::string>{"G", "D10", "C5", "C4"});
  CHECK(scan.yes_classes == 4);
  CHECK(scan.yes_raw == 8);
  CHECK(scan.monotonicity_violations.empty());
  CHECK_FALSE(scan.containments.empty());
  for (std::size_t i = 1; i < scan.entries.size(); ++i) CHECK(scan.entries[i - 1].order >= scan.entries[i].order);
}

TEST_CASE("scan of S3 with force-full") {
  const Fixture s3("s3");
  gelfand::ScanOptions opts;
  opts.force_full = true;
  const auto scan = gelfand::sgp_scan(s3.g, s3.cc, opts);
  CHECK(yes_labels(scan) == std::vector<std::string>{"G", "C3", "C2"});
  for (const auto& e : scan.entries) {
    REQUIRE(e.full);
    CHECK(e.full->verdict == e.verdict);
  }
}

TEST_CASE("symmetric group branching") {
  for (const char* name : {"s3", "s4", "s5"}) {
    CAPTURE(name);
    const Fixture sn(name);
    const auto h = point_stabilizer(sn);
    CHECK(h.sub().order() * (sn.g.width()) == sn.g.order());
    const auto r = gelfand::is_strong_gelfand(sn.t, h, table_of(h, sn.t), true);
    CHECK(r.verdict);
    CHECK(r.max_multiplicity == 1u);
  }
}

TEST_CASE("maximal subgroups of Sz(8)") {
  const suzuki::SuzukiGroup sz(3);
  const auto tG = chartab::character_table(sz.group(), sz.classes());
  const auto b = suzuki::borel(sz);
  const auto tb = table_of(b, tG);
  const auto filtered = gelfand::is_strong_gelfand(tG, b, tb);
  CHECK_FALSE(filtered.verdict);
  CHECK(filtered.method == Method::Filter);
  CHECK(filtered.filter.total_degree_h == 42);
  CHECK(filtered.filter.max_degree_g == 91);
  const auto full = gelfand::is_strong_gelfand(tG, b, tb, true);
  CHECK_FALSE(full.verdict);
  REQUIRE(full.witness);
  CHECK(*full.max_multiplicity >= 2);
  const auto naive = support::naive_multiplicities(tG, b, tb);
  CHECK(naive == gelfand::restriction_multiplicities(tG, b, tb).entries());
}
