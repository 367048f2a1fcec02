#include "wsscodes/quadpoly.hpp"

#include <algorithm>

namespace wss {

namespace {

u64 require_prime_modulus(const MonicQuadratic& f) {
  const u64 p = f.modulus();
  if (!is_prime(p)) fail(Errc::invalid_argument, f.to_string() + ": modulus is not prime");
  return p;
}

u64 require_odd_prime(u64 p) {
  if (p < 3 || !is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not an odd prime");
  return p;
}

}  // namespace

bool is_irreducible(const MonicQuadratic& f) {
  const u64 p = require_prime_modulus(f);
  return legendre(f.discriminant().value(), p) == -1;
}

u64 poly_order(const MonicQuadratic& f) {
  const u64 m = f.modulus();
  auto [p, k] = prime_power_base(m);
  if (p == 0) fail(Errc::invalid_argument, f.to_string() + ": modulus is not a prime power");
  if (f.a0_value() % p == 0)
    fail(Errc::not_invertible, f.to_string() + ": constant term is not a unit");
  // The unit group of Z_{p^k}[x]/(f) has exponent dividing p^k (p^2 - 1).
  QuadRing ring(f);
  const QElem x = ring.x();
  return order_by_descent(factorize_product({m, p - 1, p + 1}),
                          [&](u128 e) { return ring.is_one(ring.pow(x, e)); });
}

bool divides_x_pow_minus_one(const MonicQuadratic& f, u64 n) {
  QuadRing ring(f);
  return ring.is_one(ring.pow(ring.x(), n));
}

ZmPoly remainder_x_pow_minus_one(const MonicQuadratic& f, u64 n) {
  return ZmPoly::x_pow_minus_one(n, f.modulus()).divmod(ZmPoly::from(f)).remainder;
}

MonicQuadratic hensel_lift(const MonicQuadratic& h, u64 n) {
  const u64 p = require_prime_modulus(h);
  if (n == 0 || n % p == 0)
    fail(Errc::invalid_argument, "x^" + std::to_string(n) + " - 1 has repeated factors mod " +
                                     std::to_string(p) + "; use lift_double_root");
  if (h.discriminant().is_zero())
    fail(Errc::invalid_argument, h.to_string() + " has a repeated root; use lift_double_root");
  if (!divides_x_pow_minus_one(h, n))
    fail(Errc::invalid_argument, h.to_string() + " does not divide x^" + std::to_string(n) + " - 1");

  const u64 m = p * p;
  const MonicQuadratic lifted(h.a1_value(), h.a0_value(), m);
  const QuadRing big(lifted);
  const QElem xn = big.pow(big.x(), n);  // 1 + p*r
  if ((xn.c0 + m - 1) % p != 0 || xn.c1 % p != 0)
    fail(Errc::verification_failed, "x^n is not 1 mod p after lifting");
  const QElem r{submod(xn.c0, 1, m) / p, xn.c1 / p};

  const QuadRing small(h);
  const QElem dh{h.a1_value(), 2 % p};  // h' = 2x + a1
  const QElem df = small.mul(small.scalar(n % p), small.pow(small.x(), n - 1));
  const QElem delta = small.mul(small.mul(r, dh), small.inverse(df));

  const MonicQuadratic H(static_cast<i128>(h.a1_value()) + static_cast<i128>(p) * delta.c1,
                         static_cast<i128>(h.a0_value()) + static_cast<i128>(p) * delta.c0, m);
  if (!divides_x_pow_minus_one(H, n))
    fail(Errc::verification_failed, "Hensel lift " + H.to_string() + " does not divide x^" +
                                        std::to_string(n) + " - 1");
  return H;
}

std::vector<MonicQuadratic> lift_double_root(u64 p) {
  require_odd_prime(p);
  const u64 m = p * p;
  const ZmPoly target = ZmPoly::x_pow_minus_one(p, m);
  std::vector<MonicQuadratic> out;
  for (u64 a = p - 2; a < m; a += p) {
    for (u64 b = 1; b < m; b += p) {
      MonicQuadratic f(a, b, m);
      if (target.divmod(ZmPoly::from(f)).remainder.is_zero()) out.push_back(f);
    }
  }
  return out;
}

MonicQuadratic construct_reducible(u64 p, u64 D) {
  require_odd_prime(p);
  require(D >= 2, "construct_reducible needs D >= 2");
  require((p - 1) % D == 0, std::to_string(D) + " does not divide p-1 = " + std::to_string(p - 1));
  for (u64 beta = 2; beta < p; ++beta) {
    if (multiplicative_order(Residue(beta, p)) == D)
      return {-1 - static_cast<i128>(beta), static_cast<i128>(beta), p};
  }
  fail(Errc::verification_failed, "no element of order " + std::to_string(D) + " mod " + std::to_string(p));
}

Fp2Element find_alpha(u64 p) {
  require_odd_prime(p);
  require(p >= 7, "find_alpha needs p >= 7");
  const u64 r = smallest_nonresidue(p);
  const u64 minus_one = p - 1;
  for (u64 c1 = 1; c1 < p; ++c1) {
    const u64 rc1 = mulmod(r, mulmod(c1, c1, p), p);
    for (u64 c0 = 0; c0 < p; ++c0) {
      // alpha^(p+1) is the norm c0^2 - r c1^2
      if (submod(mulmod(c0, c0, p), rc1, p) != minus_one) continue;
      Fp2Element alpha = Fp2Element::canonical(c0, c1, p);
      if (alpha.pow(p + 1) != Fp2Element::canonical(minus_one, 0, p))
        fail(Errc::verification_failed, "norm shortcut disagrees with alpha^(p+1)");
      if (fp2_order(alpha) == 2 * p + 2) return alpha;
    }
  }
  fail(Errc::verification_failed, "no alpha of order 2p+2 in F_p^2 for p = " + std::to_string(p));
}

MonicQuadratic construct_irreducible(u64 p, u64 D) {
  require_odd_prime(p);
  const u64 full = 2 * p + 2;
  require(D >= 1 && full % D == 0, std::to_string(D) + " does not divide 2p+2 = " + std::to_string(full));
  const Fp2Element beta = find_alpha(p).pow(full / D);
  if (beta.in_base_field())
    fail(Errc::invalid_argument, "D = " + std::to_string(D) +
                                     " is degenerate: alpha^((2p+2)/D) lies in F_" + std::to_string(p));
  // (x - beta)(x - beta^p) = x^2 - tr(beta) x + N(beta)
  MonicQuadratic h(-static_cast<i128>(beta.trace().value()), beta.norm().value(), p);
  if (!is_irreducible(h) || poly_order(h) != D)
    fail(Errc::verification_failed, h.to_string() + " is not irreducible of order " + std::to_string(D));
  return h;
}

i128 signed_squarefree_part(i128 x) {
  if (x == 0) return 0;
  const i128 mag = x < 0 ? -x : x;
  if (mag > static_cast<i128>(UINT64_MAX)) fail(Errc::bound_exceeded, "discriminant exceeds 64 bits");
  const i128 d = squarefree_part(static_cast<u64>(mag));
  return x < 0 ? -d : d;
}

LiftResult LiftResult::make(const MonicQuadratic& h, u64 n) {
  MonicQuadratic H = hensel_lift(h, n);
  const i128 delta = H.integer_discriminant();
  return {h, H, n, delta, signed_squarefree_part(delta)};
}

}  // namespace wss
