#pragma once

#include <vector>

#include "wsscodes/fp2.hpp"
#include "wsscodes/polynomial.hpp"
#include "wsscodes/quadratic.hpp"

namespace wss {

/// True iff f has no root in F_p. The modulus must be an odd prime.
bool is_irreducible(const MonicQuadratic& f);

/// Least e with f | x^e - 1 over Z_m, for m a prime power. Requires f(0) to
/// be a unit.
u64 poly_order(const MonicQuadratic& f);

/// Whether f divides x^n - 1, checked by reducing x^n modulo f.
bool divides_x_pow_minus_one(const MonicQuadratic& f, u64 n);

/// (x^n - 1) mod f by dense long division.
ZmPoly remainder_x_pow_minus_one(const MonicQuadratic& f, u64 n);

/// The unique monic H over Z_{p^2} with H = h (mod p) and H | x^n - 1, for
/// h | x^n - 1 over F_p with gcd(n, p) = 1.
///
/// Uses one Newton step in F_p[x]/(h): write x^n - 1 = q*h + p*r over
/// Z_{p^2}; then H = h + p*delta with delta = r / q (mod h, p), and
/// q = (x^n - 1)' / h' (mod h). Throws when h has a repeated root or does not
/// divide x^n - 1.
MonicQuadratic hensel_lift(const MonicQuadratic& h, u64 n);

/// Every x^2+ax+b over Z_{p^2} with a = -2, b = 1 (mod p) dividing x^p - 1.
/// Exhaustive over the p^2 congruent candidates; sorted by (a, b).
std::vector<MonicQuadratic> lift_double_root(u64 p);

/// (x - 1)(x - beta) over F_p with beta the least element of order exactly D.
MonicQuadratic construct_reducible(u64 p, u64 D);

/// Least alpha (ordered by (c1, c0)) in the canonical F_{p^2} with
/// alpha^(p+1) = -1 and multiplicative order exactly 2p+2.
Fp2Element find_alpha(u64 p);

/// (x - beta)(x - beta^p) with beta = alpha^((2p+2)/D). Irreducible of order D.
/// Throws for D not dividing 2p+2, or when beta falls into F_p.
MonicQuadratic construct_irreducible(u64 p, u64 D);

/// Hensel lift together with the integer discriminant data attached to it.
struct LiftResult {
  MonicQuadratic h;
  MonicQuadratic H;
  u64 n;
  i128 delta;  // A^2 - 4B with A, B canonical in [0, p^2)
  i128 d;      // signed square-free part of delta; 0 iff delta = 0

  static LiftResult make(const MonicQuadratic& h, u64 n);
};

/// Signed square-free part: sign(x) * squarefree_part(|x|), 0 for 0.
i128 signed_squarefree_part(i128 x);

}  // namespace wss
