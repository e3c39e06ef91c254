#pragma once

// Arithmetic, polynomials and linear algebra over Z/p for word-sized primes.
// Internal to the library.

#include <cstdint>
#include <vector>

namespace gscope::modp {

using u64 = std::uint64_t;
/// Coefficients, lowest degree first; the zero polynomial is empty.
using Poly = std::vector<u64>;
using Matrix = std::vector<std::vector<u64>>;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);

bool is_prime(u64 n);
std::vector<u64> prime_factors(u64 n);
u64 least_primitive_root(u64 p);

/// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
Poly charpoly(Matrix a, u64 p);

/// Distinct roots in [0, p) of f, ascending.
std::vector<u64> distinct_roots(const Poly& f, u64 p);

/// Basis of {x : A x = 0}; A is rows x cols.
std::vector<std::vector<u64>> nullspace(Matrix a, u64 p);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, u64 p);

}  // namespace gscope::modp
