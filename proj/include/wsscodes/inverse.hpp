#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsscodes/quadratic.hpp"
#include "wsscodes/polynomial.hpp"

namespace wss {

enum class ConstructionCase { reducible, double_root, irreducible };

ConstructionCase parse_case(const std::string& s);
std::string to_string(ConstructionCase c);

/// What became of the "(x-1)^2 lifts to itself" guess for one prime.
struct DoubleRootFinding {
  u64 p;
  std::vector<MonicQuadratic> lifts;      // all lifts of (x-1)^2 dividing x^p - 1 mod p^2
  ZmPoly remainder_of_square;             // (x^p - 1) mod (x - 1)^2 over Z_{p^2}
  bool square_divides;                    // remainder is zero
  bool remainder_is_p_times_x_minus_1;
};

DoubleRootFinding double_root_finding(u64 p);

/// A verified recurrence X^2 + A X + B with k(p) = k(p^2) = D.
struct InverseCertificate {
  u64 p;
  ConstructionCase kind;
  u64 D;
  MonicQuadratic h;  // over F_p
  MonicQuadratic H;  // over Z_{p^2}
  i64 A;
  i64 B;
  i128 delta;  // A^2 - 4B > 0
  u64 d;       // square-free part of delta
  u64 k_p;
  u64 k_p2;
  std::optional<DoubleRootFinding> double_root;  // double_root case only
};

/// Smallest adjustment of the canonical lift (a, b) of H making A^2 - 4B > 0:
/// first A += p^2 (once), then B -= p^2 as often as needed.
std::pair<i64, i64> positive_discriminant_lift(const MonicQuadratic& H);

/// Builds h for the requested case, lifts it, picks (A, B), and re-verifies
/// both periods. D = 0 selects the case's default (p-1, p or 2p+2).
/// Throws verification_failed if the periods do not come out equal to D, or if
/// no lift exists in the double-root case.
InverseCertificate construct_certificate(u64 p, ConstructionCase kind, u64 D = 0);

}  // namespace wss
