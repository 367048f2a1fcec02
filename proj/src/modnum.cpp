#include "wsscodes/modnum.hpp"

#include <algorithm>
#include <map>

namespace wss {

u64 reduce(i128 x, u64 m) {
  require(m >= 1, "modulus must be positive");
  i128 r = x % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 powmod(u64 base, u128 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) { return a == 0 || b == 0 ? 0 : a / gcd(a, b) * b; }

Residue::Residue(i128 x, u64 modulus) : value_(0), modulus_(modulus) {
  require(modulus >= 2, "modulus must be at least 2");
  value_ = reduce(x, modulus);
}

void Residue::check_same(const Residue& o) const {
  if (modulus_ != o.modulus_)
    fail(Errc::invalid_argument, "residues with moduli " + std::to_string(modulus_) + " and " +
                                     std::to_string(o.modulus_) + " cannot be combined");
}

Residue Residue::operator+(const Residue& o) const {
  check_same(o);
  return {static_cast<i128>(addmod(value_, o.value_, modulus_)), modulus_};
}

Residue Residue::operator-(const Residue& o) const {
  check_same(o);
  return {static_cast<i128>(submod(value_, o.value_, modulus_)), modulus_};
}

Residue Residue::operator*(const Residue& o) const {
  check_same(o);
  return {static_cast<i128>(mulmod(value_, o.value_, modulus_)), modulus_};
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven deterministic set below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre(i128 x, u64 p) {
  if (p == 2 || p % 2 == 0 || !is_prime(p))
    fail(Errc::invalid_argument, "Legendre symbol needs an odd prime, got " + std::to_string(p));
  u64 r = reduce(x, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Residue mod_inverse(const Residue& x) {
  const u64 m = x.modulus();
  i128 old_r = x.value(), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1)
    fail(Errc::not_invertible,
         std::to_string(x.value()) + " is not invertible modulo " + std::to_string(m));
  return {old_s, m};
}

u64 squarefree_part(u64 n) {
  require(n >= 1, "squarefree_part needs n >= 1");
  u64 d = 1;
  for (auto [q, k] : factorize(n))
    if (k % 2 == 1) d *= q;
  return d;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n < 2) return out;
  auto take = [&](u64 q) {
    unsigned k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    if (k > 0) out.emplace_back(q, k);
  };
  take(2);
  take(3);
  for (u64 q = 5; q <= n / q; q += 6) {
    take(q);
    take(q + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::pair<u64, unsigned>> factorize_product(const std::vector<u64>& parts) {
  std::map<u64, unsigned> acc;
  for (u64 part : parts)
    for (auto [q, k] : factorize(part)) acc[q] += k;
  return {acc.begin(), acc.end()};
}

std::pair<u64, unsigned> prime_power_base(u64 m) {
  auto f = factorize(m);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre(a, p) != 1)
    fail(Errc::invalid_argument, std::to_string(a) + " is not a square modulo " + std::to_string(p));
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  const u64 z = smallest_nonresidue(p);
  u64 c = powmod(z, q, p);
  u64 x = powmod(a, (q + 1) / 2, p);
  u64 t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    for (u64 tt = t; tt != 1; tt = mulmod(tt, tt, p)) ++i;
    u64 b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

u64 smallest_nonresidue(u64 p) {
  for (u64 r = 2; r < p; ++r)
    if (legendre(r, p) == -1) return r;
  fail(Errc::invalid_argument, "no quadratic non-residue modulo " + std::to_string(p));
}

u64 multiplicative_order(const Residue& x) {
  const u64 m = x.modulus();
  if (gcd(x.value(), m) != 1)
    fail(Errc::not_invertible,
         std::to_string(x.value()) + " is not a unit modulo " + std::to_string(m));
  // phi(m) = prod q^(k-1) (q-1)
  std::vector<u64> parts;
  for (auto [q, k] : factorize(m)) {
    for (unsigned i = 1; i < k; ++i) parts.push_back(q);
    parts.push_back(q - 1);
  }
  return order_by_descent(factorize_product(parts),
                          [&](u128 e) { return powmod(x.value(), e, m) == 1 % m; });
}

}  // namespace wss
