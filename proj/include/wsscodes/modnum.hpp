#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wsscodes/error.hpp"

namespace wss {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
inline u64 negmod(u64 a, u64 m) { return a == 0 ? 0 : m - a; }

/// Canonical representative of x in [0, m).
u64 reduce(i128 x, u64 m);
u64 powmod(u64 base, u128 exp, u64 m);
u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// An element of Z_m kept in canonical form [0, m).
class Residue {
 public:
  Residue(i128 x, u64 modulus);

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const { return {static_cast<i128>(negmod(value_, modulus_)), modulus_}; }
  Residue pow(u128 e) const { return {static_cast<i128>(powmod(value_, e, modulus_)), modulus_}; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void check_same(const Residue& o) const;

  u64 value_;
  u64 modulus_;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Legendre symbol (x/p). Throws for even or composite p.
int legendre(i128 x, u64 p);

Residue mod_inverse(const Residue& x);

/// d with n = d * s^2 and d square-free.
u64 squarefree_part(u64 n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Factorization of a product, given its factors separately; avoids overflow
/// when the product exceeds 64 bits.
std::vector<std::pair<u64, unsigned>> factorize_product(const std::vector<u64>& parts);

/// If m = p^k for a prime p, returns (p, k); otherwise (0, 0).
std::pair<u64, unsigned> prime_power_base(u64 m);

/// Some y with y^2 = a (mod p) for a quadratic residue a (Tonelli-Shanks).
u64 sqrt_mod(u64 a, u64 p);

/// Smallest quadratic non-residue modulo an odd prime.
u64 smallest_nonresidue(u64 p);

/// Order of an element of a finite group, by descent through the prime factors
/// of an exponent that is known to kill it. `pow(e)` must return whether the
/// element raised to e is the identity.
template <class IsIdentityAfterPow>
u64 order_by_descent(const std::vector<std::pair<u64, unsigned>>& exponent_factors,
                     IsIdentityAfterPow&& pow_is_one) {
  u128 order = 1;
  for (auto [q, k] : exponent_factors)
    for (unsigned i = 0; i < k; ++i) order *= q;
  if (!pow_is_one(order)) fail(Errc::invalid_argument, "group exponent does not annihilate element");
  for (auto [q, k] : exponent_factors) {
    for (unsigned i = 0; i < k; ++i) {
      if (order % q != 0 || !pow_is_one(order / q)) break;
      order /= q;
    }
  }
  if (order > static_cast<u128>(UINT64_MAX)) fail(Errc::bound_exceeded, "order exceeds 64 bits");
  return static_cast<u64>(order);
}

/// Least e > 0 with x^e = 1 in Z_m.
u64 multiplicative_order(const Residue& x);

}  // namespace wss
