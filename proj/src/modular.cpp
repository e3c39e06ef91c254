#include "modular.hpp"

#include <algorithm>
#include <utility>

#include "gscope/errors.hpp"

namespace gscope::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw InternalError("division by zero modulo p");
  return pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 least_primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](u64 l) { return pow(g, (p - 1) / l, p) != 1; })) return g;
  }
  throw InternalError("no primitive root");
}

// ---------------------------------------------------------------- polynomials

namespace {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t deg(const Poly& f) { return f.size() - 1; }

void make_monic(Poly& f, u64 p) {
  if (f.empty()) return;
  const u64 s = inv(f.back(), p);
  for (auto& c : f) c = mul(c, s, p);
}

Poly poly_mod(Poly a, const Poly& b, u64 p) {
  trim(a);
  const u64 lead_inv = inv(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    const u64 factor = mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(factor, b[i], p), p);
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = inv(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    const u64 factor = mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(factor, b[i], p), p);
    trim(a);
  }
  return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  r = poly_mod(r, m, p);
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, p);
  return a;
}

// f monic, squarefree, splitting into distinct linear factors over F_p.
void split(const Poly& f, u64 p, std::vector<u64>& roots) {
  if (f.size() <= 1) return;
  if (deg(f) == 1) {
    roots.push_back(sub(0, f[0], p));  // f = x + c
    return;
  }
  if (p == 2) {
    // x(x+1) is the only squarefree split polynomial of degree 2 here.
    roots.push_back(0);
    roots.push_back(1);
    return;
  }
  for (u64 a = 0; a < p; ++a) {
    Poly h = poly_powmod(Poly{a, 1}, (p - 1) / 2, f, p);
    if (h.empty()) h = {0};
    h[0] = sub(h[0], 1, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      split(g, p, roots);
      split(poly_div(f, g, p), p, roots);
      return;
    }
  }
  throw InternalError("polynomial splitting did not terminate");
}

}  // namespace

std::vector<u64> distinct_roots(const Poly& f_in, u64 p) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw InternalError("roots of the zero polynomial requested");
  make_monic(f, p);
  if (f.size() == 1) return {};
  // gcd(f, x^p - x) keeps one copy of each root in F_p.
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = sub(xp[1], 1, p);
  Poly g = poly_gcd(f, xp, p);
  if (g.empty()) g = f;  // x^p - x is divisible by f
  std::vector<u64> roots;
  split(g, p, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------- matrices

Poly charpoly(Matrix h, u64 p) {
  const std::size_t n = h.size();
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    const u64 pinv = inv(h[j + 1][j], p);
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h[k][j] == 0) continue;
      const u64 u = mul(h[k][j], pinv, p);
      for (std::size_t c = 0; c < n; ++c) h[k][c] = sub(h[k][c], mul(u, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = add(h[r][j + 1], mul(u, h[r][k], p), p);
    }
  }
  // polys[k] = charpoly of the leading k x k block.
  std::vector<Poly> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    Poly next(k + 2, 0);
    for (std::size_t i = 0; i <= k; ++i) {
      next[i + 1] = add(next[i + 1], polys[k][i], p);
      next[i] = sub(next[i], mul(h[k][k], polys[k][i], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mul(prod, h[i + 1][i], p);
      const u64 coef = mul(prod, h[i][k], p);
      for (std::size_t t = 0; t < polys[i].size(); ++t) next[t] = sub(next[t], mul(coef, polys[i][t], p), p);
    }
    polys[k + 1] = std::move(next);
  }
  return polys[n];
}

std::vector<std::size_t> rref(Matrix& a, u64 p) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 s = inv(a[r][c], p);
    for (auto& x : a[r]) x = mul(x, s, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

std::vector<std::vector<u64>> nullspace(Matrix a, u64 p) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  const auto pivots = rref(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, a[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace gscope::modp
