#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "gscope/chartab.hpp"
#include "gscope/errors.hpp"
#include "gscope/suzuki.hpp"

using namespace gscope;
using chartab::CharacterTable;
using support::mulmod;

namespace {

std::multiset<std::uint64_t> degree_set(const CharacterTable& t) { return {t.degrees().begin(), t.degrees().end()}; }

// χ evaluated element by element.
std::uint64_t chi_at(const CharacterTable& t, const groups::ConjClasses& cc, std::size_t chi, std::size_t x) {
  return t.value(chi, cc.class_of[x]);
}

/// Orthogonality and the class-function identities checked with sums over
/// group elements rather than classes.
void check_table_elementwise(const groups::Group& g, const groups::ConjClasses& cc, const CharacterTable& t) {
  const std::uint64_t p = t.context().p;
  const std::uint64_t n = g.order();
  REQUIRE(t.size() == cc.count());
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      std::uint64_t s = 0;
      for (std::size_t x = 0; x < n; ++x) s = (s + mulmod(chi_at(t, cc, a, x), chi_at(t, cc, b, g.inverse(x)), p)) % p;
      CHECK(s == (a == b ? n % p : 0));
    }
  }
  std::uint64_t sum_sq = 0;
  for (auto d : t.degrees()) sum_sq += d * d;
  CHECK(sum_sq == n);
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    CHECK(n % t.degree(chi) == 0);
    CHECK(t.value(chi, 0) == t.degree(chi));
    if (t.degree(chi) != 1) continue;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; y += 7) {
        CHECK(mulmod(chi_at(t, cc, chi, x), chi_at(t, cc, chi, y), p) == chi_at(t, cc, chi, g.mul(x, y)));
      }
    }
  }
}

/// Central characters ω(K_i) = |K_i| χ(g_i) / χ(1) multiply through structure
/// constants counted by brute force.
void check_central_characters(const groups::Group& g, const groups::ConjClasses& cc, const CharacterTable& t) {
  const std::uint64_t p = t.context().p;
  const std::size_t r = cc.count();
  std::vector<std::uint64_t> a(r * r * r, 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      const std::size_t z = g.mul(x, y);
      if (z == cc.reps[cc.class_of[z]]) ++a[(cc.class_of[x] * r + cc.class_of[y]) * r + cc.class_of[z]];
    }
  }
  const chartab::ClassMatrices cm(g, cc);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) CHECK(cm.at(i, j, k) == a[(i * r + j) * r + k]);
    }
  }
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    const std::uint64_t dinv = support::invmod(t.degree(chi) % p, p);
    std::vector<std::uint64_t> w(r);
    for (std::size_t k = 0; k < r; ++k) w[k] = mulmod(mulmod(cc.sizes[k] % p, t.value(chi, k), p), dinv, p);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        std::uint64_t rhs = 0;
        for (std::size_t k = 0; k < r; ++k) rhs = (rhs + mulmod(a[(i * r + j) * r + k] % p, w[k], p)) % p;
        CHECK(mulmod(w[i], w[j], p) == rhs);
      }
    }
  }
}

/// Frobenius-Schur indicator Σ χ(x²) / |G| is 1 exactly on real rows.
std::size_t real_rows_by_indicator(const groups::Group& g, const groups::ConjClasses& cc, const CharacterTable& t) {
  const std::uint64_t p = t.context().p;
  const std::uint64_t ninv = support::invmod(g.order() % p, p);
  std::size_t real = 0;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    std::uint64_t s = 0;
    for (std::size_t x = 0; x < g.order(); ++x) s = (s + chi_at(t, cc, chi, g.mul(x, x))) % p;
    const std::uint64_t nu = mulmod(s, ninv, p);
    CHECK((nu == 0 || nu == 1 || nu == p - 1));
    if (nu != 0) ++real;
    CHECK(t.is_real(chi) == (nu != 0));
  }
  return real;
}

std::size_t real_classes(const groups::ConjClasses& cc) {
  std::size_t n = 0;
  for (std::size_t k = 0; k < cc.count(); ++k) n += cc.inverse_class[k] == k;
  return n;
}

}  // namespace

TEST_CASE("Dixon primes") {
  CHECK(chartab::dixon_prime(6, 6).p == 13);
  CHECK(chartab::dixon_prime(20, 20).p == 41);
  CHECK(chartab::dixon_prime(2, 2).p == 5);
  for (std::uint64_t order : {6u, 20u, 24u, 120u, 448u, 29120u}) {
    for (std::uint64_t e : {2u, 6u, 12u, 28u, 60u, 1820u}) {
      std::uint64_t p = 2 * order + 1;
      while (!(support::trial_prime(p) && (p - 1) % e == 0)) ++p;
      const auto ctx = chartab::dixon_prime(order, e);
      CHECK(ctx.p == p);
      CHECK(support::powmod(ctx.omega, e, p) == 1);
      for (std::uint64_t d = 1; d < e; ++d) {
        if (e % d == 0) CHECK(support::powmod(ctx.omega, d, p) != 1);
      }
      CHECK(chartab::dixon_prime(order, e, 1).p > p);
    }
  }
  CHECK_THROWS_AS(chartab::make_context(12, 6, 6), UsageError);
  CHECK_THROWS_AS(chartab::make_context(7, 6, 6), UsageError);
  CHECK_THROWS_AS(chartab::make_context(17, 6, 6), UsageError);
  CHECK(chartab::make_context(19, 6, 6).p == 19);
}

TEST_CASE("identity class acts as the unit") {
  const auto g = support::load("s4");
  const auto cc = groups::conjugacy_classes(g);
  const chartab::ClassMatrices m(g, cc);
  for (std::size_t j = 0; j < cc.count(); ++j) {
    for (std::size_t k = 0; k < cc.count(); ++k) CHECK(m.at(0, j, k) == (j == k ? 1u : 0u));
  }
}

TEST_CASE("small tables") {
  struct Case {
    const char* name;
    std::multiset<std::uint64_t> degrees;
  };
  const std::vector<Case> cases{
      {"s3", {1, 1, 2}},
      {"c6", {1, 1, 1, 1, 1, 1}},
      {"d8", {1, 1, 1, 1, 2}},
      {"q8", {1, 1, 1, 1, 2}},
      {"a4", {1, 1, 1, 3}},
      {"d10", {1, 1, 2, 2}},
      {"d12", {1, 1, 1, 1, 2, 2}},
      {"f20", {1, 1, 1, 1, 4}},
      {"s4", {1, 1, 2, 3, 3}},
      {"sl2_3", {1, 1, 1, 2, 2, 2, 3}},
      {"f21", {1, 1, 1, 3, 3}},
      {"s3xs3", {1, 1, 1, 1, 2, 2, 2, 2, 4}},
      {"a5", {1, 3, 3, 4, 5}},
      {"s5", {1, 1, 4, 4, 5, 5, 6}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto g = support::load(c.name);
    const auto cc = groups::conjugacy_classes(g);
    const auto t = chartab::character_table(g, cc);
    CHECK(degree_set(t) == c.degrees);
    CHECK_NOTHROW(t.validate());
    CHECK(t.linear_count() == g.order() / groups::derived_subgroup(g).size());
    CHECK(real_rows_by_indicator(g, cc, t) == real_classes(cc));
    check_table_elementwise(g, cc, t);
    if (g.order() <= 24) check_central_characters(g, cc, t);
  }
}

TEST_CASE("S3 table layout") {
  const auto g = support::load("s3");
  const auto cc = groups::conjugacy_classes(g);
  const auto t = chartab::character_table(g, cc);
  CHECK(t.context().p == 13);
  const std::uint64_t m1 = 12;
  CHECK(t.values() == std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {1, m1, 1}, {2, 0, m1}});
  CHECK(t.max_degree() == 2);
  CHECK(chartab::total_character_degree(t) == 4);
}

TEST_CASE("tables at another admissible prime agree") {
  for (const char* name : {"s4", "f20", "sl2_3"}) {
    CAPTURE(name);
    const auto g = support::load(name);
    const auto cc = groups::conjugacy_classes(g);
    const auto e = chartab::exponent(cc);
    const auto t0 = chartab::character_table(g, cc, chartab::dixon_prime(g.order(), e, 0));
    const auto t1 = chartab::character_table(g, cc, chartab::dixon_prime(g.order(), e, 1));
    CHECK(t0.context().p != t1.context().p);
    CHECK(t0.degrees() == t1.degrees());
    for (std::size_t chi = 0; chi < t0.size(); ++chi) CHECK(t0.is_real(chi) == t1.is_real(chi));
    check_table_elementwise(g, cc, t1);
  }
}

TEST_CASE("input validation") {
  const auto g = support::load("s4");
  const auto cc = groups::conjugacy_classes(g);
  CHECK_THROWS_AS(chartab::character_table(g, cc, chartab::DixonContext{13, 12, 2}), UsageError);
  Caps tiny;
  tiny.table_order = 10;
  CHECK_THROWS_AS(chartab::character_table(g, cc, std::nullopt, tiny), ResourceError);
  Caps few;
  few.table_classes = 3;
  CHECK_THROWS_AS(chartab::character_table(g, cc, std::nullopt, few), ResourceError);
}

TEST_CASE("Sz(8) and its Borel subgroup") {
  const suzuki::SuzukiGroup sz(3);
  const auto t = chartab::character_table(sz.group(), sz.classes());
  CHECK(degree_set(t) == std::multiset<std::uint64_t>{1, 14, 14, 35, 35, 35, 64, 65, 65, 65, 91});
  CHECK(chartab::total_character_degree(t) == 484);
  CHECK(t.max_degree() == 91);
  CHECK(t.linear_count() == 1);
  CHECK_NOTHROW(t.validate());

  const auto b = suzuki::borel(sz);
  const auto tb = chartab::character_table(b.sub(), b.sub_classes(), t.context());
  CHECK(tb.size() == 10);
  CHECK(degree_set(tb) == std::multiset<std::uint64_t>{1, 1, 1, 1, 1, 1, 1, 7, 14, 14});
  CHECK(chartab::total_character_degree(tb) == 42);
  CHECK(tb.linear_count() == 7);
  CHECK(real_rows_by_indicator(b.sub(), b.sub_classes(), tb) == 2);
  check_table_elementwise(b.sub(), b.sub_classes(), tb);

  struct Small {
    suzuki::Maximal which;
    std::uint64_t total;
  };
  for (const Small s : {Small{suzuki::Maximal::Dihedral, 8}, Small{suzuki::Maximal::TorusPlus, 16},
                        Small{suzuki::Maximal::TorusMinus, 8}}) {
    const auto emb = suzuki::maximal_subgroup(sz, s.which);
    const auto th = chartab::character_table(emb.sub(), emb.sub_classes(), t.context());
    CHECK(chartab::total_character_degree(th) == s.total);
    check_table_elementwise(emb.sub(), emb.sub_classes(), th);
  }
}
