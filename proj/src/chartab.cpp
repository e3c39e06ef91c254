#include "gscope/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gscope/errors.hpp"
#include "modular.hpp"

namespace gscope::chartab {

using modp::Matrix;
using modp::u64;

std::uint64_t exponent(const groups::ConjClasses& classes) {
  std::uint64_t e = 1;
  for (std::size_t o : classes.element_orders) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

namespace {

u64 omega_for(u64 p, u64 e) { return modp::pow(modp::least_primitive_root(p), (p - 1) / e, p); }

}  // namespace

DixonContext dixon_prime(std::uint64_t order, std::uint64_t e, unsigned skip) {
  if (e == 0 || order == 0) throw UsageError("order and exponent must be positive");
  for (u64 p = e + 1;; p += e) {
    if (p <= 2 * order || !modp::is_prime(p)) continue;
    if (skip-- == 0) return {p, e, omega_for(p, e)};
  }
}

DixonContext make_context(std::uint64_t p, std::uint64_t order, std::uint64_t e) {
  if (!modp::is_prime(p)) throw UsageError("prime override " + std::to_string(p) + " is not prime");
  if (p <= 2 * order) {
    throw UsageError("prime override " + std::to_string(p) + " must exceed 2|G| = " + std::to_string(2 * order));
  }
  if ((p - 1) % e != 0) {
    throw UsageError("prime override " + std::to_string(p) + " is not 1 mod the exponent " + std::to_string(e));
  }
  return {p, e, omega_for(p, e)};
}

ClassMatrices::ClassMatrices(const groups::Group& group, const groups::ConjClasses& classes)
    : r_(classes.count()), a_(r_ * r_ * r_, 0) {
  for (std::size_t k = 0; k < r_; ++k) {
    const std::size_t z = classes.reps[k];
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t y = group.mul(group.inverse(x), z);
      ++a_[(classes.class_of[x] * r_ + classes.class_of[y]) * r_ + k];
    }
  }
}

CharacterTable::CharacterTable(DixonContext context, groups::ConjClasses classes, std::uint64_t group_order,
                               std::vector<std::vector<std::uint64_t>> values, std::vector<std::uint64_t> degrees)
    : context_(context),
      classes_(std::move(classes)),
      order_(group_order),
      values_(std::move(values)),
      degrees_(std::move(degrees)) {}

std::uint64_t CharacterTable::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

bool CharacterTable::is_real(std::size_t chi) const {
  for (std::size_t k = 0; k < classes_.count(); ++k) {
    if (values_[chi][k] != values_[chi][classes_.inverse_class[k]]) return false;
  }
  return true;
}

std::size_t CharacterTable::linear_count() const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), 1u));
}

void CharacterTable::validate() const {
  const u64 p = context_.p;
  const std::size_t r = classes_.count();
  if (values_.size() != r || degrees_.size() != r) {
    throw InternalError("character table has " + std::to_string(values_.size()) + " rows for " + std::to_string(r) +
                        " classes");
  }
  u64 sum_sq = 0;
  for (std::size_t chi = 0; chi < r; ++chi) {
    const u64 d = degrees_[chi];
    if (d < 1 || d * d > order_) throw InternalError("degree " + std::to_string(d) + " is out of range");
    if (values_[chi][0] != d % p) throw InternalError("degree does not match the identity-class value");
    sum_sq += d * d;
  }
  if (sum_sq != order_) {
    throw InternalError("sum of squared degrees is " + std::to_string(sum_sq) + ", not |G| = " + std::to_string(order_));
  }
  const u64 g = order_ % p;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      u64 s = 0;
      for (std::size_t k = 0; k < r; ++k) {
        const u64 term = modp::mul(values_[a][k], values_[b][classes_.inverse_class[k]], p);
        s = modp::add(s, modp::mul(classes_.sizes[k] % p, term, p), p);
      }
      if (s != (a == b ? g : 0)) throw InternalError("row orthogonality fails for rows " + std::to_string(a) + ", " + std::to_string(b));
    }
  }
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      u64 s = 0;
      for (std::size_t chi = 0; chi < r; ++chi) {
        s = modp::add(s, modp::mul(values_[chi][k], values_[chi][classes_.inverse_class[l]], p), p);
      }
      const u64 want = k == l ? modp::mul(g, modp::inv(classes_.sizes[k] % p, p), p) : 0;
      if (s != want) throw InternalError("column orthogonality fails for classes " + std::to_string(k) + ", " + std::to_string(l));
    }
  }
}

namespace {

struct Space {
  Matrix basis;  // rows, reduced echelon form
  std::vector<std::size_t> pivots;
};

// Splits `space` into eigenspaces of op; returns {space} when op is scalar on it.
std::vector<Space> split(const Space& space, const Matrix& op, u64 p) {
  const std::size_t d = space.basis.size();
  const std::size_t r = op.size();
  Matrix c(d, std::vector<u64>(d, 0));
  for (std::size_t l = 0; l < d; ++l) {
    const auto& b = space.basis[l];
    for (std::size_t i = 0; i < d; ++i) {
      const auto& row = op[space.pivots[i]];
      u64 s = 0;
      for (std::size_t k = 0; k < r; ++k) {
        if (b[k] != 0) s = modp::add(s, modp::mul(row[k], b[k], p), p);
      }
      c[i][l] = s;
    }
  }
  const auto roots = modp::distinct_roots(modp::charpoly(c, p), p);
  if (roots.size() == 1) return {space};

  std::vector<Space> pieces;
  std::size_t total = 0;
  for (u64 lambda : roots) {
    Matrix shifted = c;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = modp::sub(shifted[i][i], lambda, p);
    Space piece;
    for (const auto& x : modp::nullspace(shifted, p)) {
      std::vector<u64> v(r, 0);
      for (std::size_t l = 0; l < d; ++l) {
        if (x[l] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = modp::add(v[k], modp::mul(x[l], space.basis[l][k], p), p);
      }
      piece.basis.push_back(std::move(v));
    }
    piece.pivots = modp::rref(piece.basis, p);
    total += piece.basis.size();
    pieces.push_back(std::move(piece));
  }
  if (total != d) throw InternalError("class matrix is not diagonalizable modulo p on an eigenspace");
  return pieces;
}

u64 isqrt(u64 n) {
  u64 x = 0;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

}  // namespace

CharacterTable character_table(const groups::Group& group, const groups::ConjClasses& classes,
                               std::optional<DixonContext> context, const Caps& caps) {
  const u64 order = group.order();
  const std::size_t r = classes.count();
  if (order > caps.table_order) {
    throw ResourceError("character table needs |G| <= " + std::to_string(caps.table_order) + ", got " +
                        std::to_string(order));
  }
  if (r > caps.table_classes) {
    throw ResourceError("character table needs at most " + std::to_string(caps.table_classes) + " classes, got " +
                        std::to_string(r));
  }
  const u64 e = exponent(classes);
  DixonContext ctx = context ? *context : dixon_prime(order, e);
  if (context) {
    if (ctx.p <= 2 * order || (ctx.p - 1) % e != 0 || !modp::is_prime(ctx.p)) {
      throw UsageError("prime " + std::to_string(ctx.p) + " is not admissible for a group of order " +
                       std::to_string(order) + " and exponent " + std::to_string(e));
    }
  }
  const u64 p = ctx.p;

  const ClassMatrices a(group, classes);
  auto op_for = [&](std::size_t i) {
    Matrix m(r, std::vector<u64>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) m[j][k] = a.at(i, j, k) % p;
    }
    return m;
  };

  Space whole;
  whole.basis.assign(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) whole.basis[i][i] = 1;
  whole.pivots.resize(r);
  std::iota(whole.pivots.begin(), whole.pivots.end(), std::size_t{0});
  std::vector<Space> spaces{whole};

  auto unsplit = [&] {
    return std::any_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() > 1; });
  };
  auto apply = [&](const Matrix& op) {
    std::vector<Space> next;
    for (const Space& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, op, p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  };

  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < r && unsplit(); ++i) {
    ops.push_back(op_for(i));
    apply(ops.back());
  }
  for (std::size_t i = 0; i < r && unsplit(); ++i) {
    for (std::size_t j = i + 1; j < r && unsplit(); ++j) {
      Matrix sum = ops[i];
      for (std::size_t x = 0; x < r; ++x) {
        for (std::size_t y = 0; y < r; ++y) sum[x][y] = modp::add(sum[x][y], ops[j][x][y], p);
      }
      apply(sum);
    }
  }
  if (unsplit()) {
    throw InternalError("eigenspace splitting stalled (|G| = " + std::to_string(order) + ", p = " + std::to_string(p) +
                        ", " + std::to_string(spaces.size()) + " spaces)");
  }

  struct Row {
    u64 degree;
    std::vector<u64> values;
  };
  std::vector<Row> rows;
  for (const Space& s : spaces) {
    std::vector<u64> v = s.basis.front();
    if (v[0] == 0) throw InternalError("central character vanishes on the identity class");
    const u64 scale = modp::inv(v[0], p);
    for (auto& x : v) x = modp::mul(x, scale, p);
    // d^2 = |G| / Σ_k ω_k ω_k* / |C_k|
    u64 s_norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const u64 term = modp::mul(v[k], v[classes.inverse_class[k]], p);
      s_norm = modp::add(s_norm, modp::mul(term, modp::inv(classes.sizes[k] % p, p), p), p);
    }
    const u64 d2 = modp::mul(order % p, modp::inv(s_norm, p), p);
    const u64 d = isqrt(d2);
    if (d * d != d2 || d == 0) throw InternalError("recovered squared degree " + std::to_string(d2) + " is not a square");
    Row row{d, std::vector<u64>(r)};
    for (std::size_t k = 0; k < r; ++k) {
      row.values[k] = modp::mul(modp::mul(d % p, v[k], p), modp::inv(classes.sizes[k] % p, p), p);
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.values < y.values;
  });

  std::vector<std::vector<u64>> values;
  std::vector<u64> degrees;
  for (auto& row : rows) {
    degrees.push_back(row.degree);
    values.push_back(std::move(row.values));
  }
  CharacterTable table(ctx, classes, order, std::move(values), std::move(degrees));
  table.validate();
  return table;
}

std::uint64_t total_character_degree(const CharacterTable& table) {
  return std::accumulate(table.degrees().begin(), table.degrees().end(), std::uint64_t{0});
}

}  // namespace gscope::chartab
