#include "wsscodes/inverse.hpp"

#include "wsscodes/quadpoly.hpp"
#include "wsscodes/recurrence.hpp"

namespace wss {

ConstructionCase parse_case(const std::string& s) {
  if (s == "reducible") return ConstructionCase::reducible;
  if (s == "double_root" || s == "double-root") return ConstructionCase::double_root;
  if (s == "irreducible") return ConstructionCase::irreducible;
  fail(Errc::invalid_argument, "unknown construction case '" + s + "'");
}

std::string to_string(ConstructionCase c) {
  switch (c) {
    case ConstructionCase::reducible: return "reducible";
    case ConstructionCase::double_root: return "double_root";
    case ConstructionCase::irreducible: return "irreducible";
  }
  return "?";
}

DoubleRootFinding double_root_finding(u64 p) {
  const u64 m = p * p;
  const MonicQuadratic square(-2, 1, m);
  ZmPoly rem = remainder_x_pow_minus_one(square, p);
  const ZmPoly expected({m - p, p}, m);  // p(x - 1)
  const bool divides = rem.is_zero();
  const bool is_px = rem == expected;
  return {p, lift_double_root(p), std::move(rem), divides, is_px};
}

std::pair<i64, i64> positive_discriminant_lift(const MonicQuadratic& H) {
  const i128 m = H.modulus();
  i128 A = H.a1_value(), B = H.a0_value();
  if (A * A - 4 * B <= 0) A += m;
  while (A * A - 4 * B <= 0) B -= m;
  return {static_cast<i64>(A), static_cast<i64>(B)};
}

InverseCertificate construct_certificate(u64 p, ConstructionCase kind, u64 D) {
  if (p < 3 || !is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not an odd prime");
  const u64 m = p * p;
  std::optional<MonicQuadratic> h, H;
  std::optional<DoubleRootFinding> finding;
  switch (kind) {
    case ConstructionCase::reducible:
      if (D == 0) D = p - 1;
      h = construct_reducible(p, D);
      H = hensel_lift(*h, D);
      break;
    case ConstructionCase::irreducible:
      if (D == 0) D = 2 * p + 2;
      h = construct_irreducible(p, D);
      H = hensel_lift(*h, D);
      break;
    case ConstructionCase::double_root:
      if (D == 0) D = p;
      require(D == p, "the double-root case has D = p");
      h = MonicQuadratic(-2, 1, p);
      finding = double_root_finding(p);
      if (finding->lifts.empty())
        fail(Errc::verification_failed,
             "no quadratic congruent to (x-1)^2 mod " + std::to_string(p) + " divides x^" + std::to_string(p) +
                 " - 1 mod " + std::to_string(m) + "; the double-root construction has no lift at this prime");
      H = finding->lifts.front();
      break;
  }
  auto [A, B] = positive_discriminant_lift(*H);
  const RecurrenceSpec spec{A, B};
  const PeriodReport periods = wss_test(spec, p);
  if (periods.kp != D || periods.kp2 != D)
    fail(Errc::verification_failed, "certificate check failed: k(p) = " + std::to_string(periods.kp) +
                                        ", k(p^2) = " + std::to_string(periods.kp2) + ", expected both " +
                                        std::to_string(D));
  const i128 delta = spec.discriminant();
  return {p, kind, D, *h, *H, A, B, delta, squarefree_part(static_cast<u64>(delta)), periods.kp, periods.kp2,
          std::move(finding)};
}

}  // namespace wss
