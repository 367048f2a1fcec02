#include "doctest.h"
#include "oracles.hpp"
#include "wsscodes/codes.hpp"
#include "wsscodes/quadpoly.hpp"

using namespace wss;

namespace {

MonicQuadratic q(std::string_view s, u64 m = 0) { return parse_quadratic(s, m); }

std::map<u64, u64> full(const WeightDistribution& wd) {
  std::map<u64, u64> out;
  for (const auto& [w, c] : wd.counts)
    if (c) out[w] = c;
  return out;
}

}  // namespace

TEST_CASE("codes from check polynomials") {
  const CyclicCode c1 = code_from_check(q("x^2+x+5", 7));
  CHECK(c1.length() == 6);
  CHECK(c1.modulus() == 7);
  const CyclicCode c2 = code_from_check(q("x^2+29x+19", 49));
  CHECK(c2.length() == 6);
  CHECK(c2.prime() == 7);
  CHECK(c2.reduce_mod_p().check() == q("x^2+x+5", 7));
  CHECK_THROWS_AS(code_from_check(q("x^2+x+1", 9)), Error);
  CHECK(reciprocal(q("x^2+x+5", 7)) == q("x^2+3x+3", 7));
}

TEST_CASE("weight enumeration") {
  const auto wd = weight_distribution_enumerate(code_from_check(q("x^2+x+5", 7)));
  CHECK(wd.to_string() == "5:36,6:12");
  CHECK(wd.count(0) == 1);
  const auto wd2 = weight_distribution_enumerate(code_from_check(q("x^2+29x+19", 49)));
  CHECK(wd2.to_string() == "5:288,6:2112");
  CHECK(weight_distribution_enumerate(code_from_check(q("x^2+x+6", 7))).to_string() == "14:48");
  CHECK_THROWS_AS(weight_distribution_enumerate(code_from_check(q("x^2+29x+19", 49)), 1000), Error);

  // thread partitioning does not change the result
  const CyclicCode big = code_from_check(q("x^2+x+6", 7));
  CHECK(weight_distribution_enumerate(big, kDefaultBudget, 1) == weight_distribution_enumerate(big, kDefaultBudget, 3));

  // independent sequence-based enumeration
  for (u64 p : {5u, 7u})
    for (u64 m : {p, p * p})
      for (u64 a1 = 0; a1 < m; a1 += (m == p ? 1 : 3))
        for (u64 a0 = 1; a0 < m; a0 += (m == p ? 1 : 4)) {
          if (a0 % p == 0) continue;
          const MonicQuadratic h(a1, a0, m);
          const u64 n = poly_order(h);
          if (m != p && n % p == 0) continue;
          const auto wd3 = weight_distribution_enumerate(code_from_check(h));
          REQUIRE(full(wd3) == oracle::weights(a1, a0, m, n));
        }
}

TEST_CASE("weight distribution text") {
  const WeightDistribution wd = parse_weight_distribution("5:288,6:2112", 6, 49);
  CHECK(wd.count(0) == 1);
  CHECK(wd.total() == 2401);
  CHECK(wd.to_string() == "5:288,6:2112");
  CHECK_THROWS_AS(parse_weight_distribution("5:288,6:2111", 6, 49), Error);
  CHECK_THROWS_AS(parse_weight_distribution("5:x", 6, 49), Error);
}

TEST_CASE("closed forms") {
  const auto mds = mds_weight_distribution(6, 5, 7);
  CHECK(mds.to_string() == "5:36,6:12");
  CHECK(mds_weight_distribution(30, 29, 31).to_string() == "29:900,30:60");
  CHECK(theorem4_distribution(30, 31).second.to_string() == "29:28800,30:894720");
  CHECK(theorem4_distribution(6, 7).first.to_string() == "5:36,6:12");
  CHECK(shs_distribution(104, 103, 52).count(102) == 551616);
  CHECK(shs_distribution(28, 13, 7).to_string() == "24:1176,28:27384");
  CHECK(shs_distribution(484, 241, 121).count(480) == 7027680);
  CHECK(corollary2_distribution(16, 7, 8).to_string() == "14:48");
  CHECK(corollary2_distribution(36, 17, 9).to_string() == "32:144,36:144");
  CHECK(corollary2_distribution(28, 13, 7).to_string() == "24:84,28:84");
  CHECK(corollary1_divisibility(30, 31));
  CHECK(corollary1_divisibility(16, 31));
  CHECK(corollary1_divisibility(29, 31) == (32 * 933 % 3 == 0));
}

TEST_CASE("root ratio order") {
  CHECK(root_ratio_order(q("x^2+x+5", 7)) == 6);
  CHECK(root_ratio_order(q("x^2+x+6", 7)) == 8);
  CHECK(root_ratio_order(q("x^2+5x+1", 7)) == 1);
  // brute force over F_p for split polynomials
  for (u64 p : {7u, 11u, 13u})
    for (u64 r = 1; r < p; ++r)
      for (u64 s = 1; s < p; ++s) {
        const MonicQuadratic h(-static_cast<i64>(r + s), static_cast<i64>(r * s), p);
        REQUIRE(root_ratio_order(h) == oracle::order(s * oracle::inverse(r, p) % p, p));
      }
}

TEST_CASE("C(a,b) codes") {
  const u64 p = 7, m = 49;
  int tested = 0;
  for (u64 a = 1; a < m; ++a)
    for (u64 b = 1; b < m; ++b) {
      if (a % p == 0 || b % p == 0 || (a - b) % p == 0) continue;
      if (6 % oracle::order(a, m) != 0 || 6 % oracle::order(b, m) != 0) continue;
      const CyclicCode c = c_ab_code(Residue(a, m), Residue(b, m), 6);
      const auto wd = weight_distribution_enumerate(c);
      const u64 e = oracle::order(b * oracle::inverse(a, m) % m, m);
      REQUIRE(wd == shs_distribution(6, p, e));
      REQUIRE(full(wd) == oracle::weights(c.check().a1_value(), c.check().a0_value(), m, 6));
      const auto cls = classify(c, wd);
      if (e >= 6) CHECK(cls.is_projective);
      if (e == 6) CHECK(classify(c.reduce_mod_p(), weight_distribution_enumerate(c.reduce_mod_p())).is_mds);
      ++tested;
    }
  CHECK(tested > 10);
  CHECK_THROWS_AS(c_ab_code(Residue(2, 49), Residue(9, 49), 6), Error);
}

TEST_CASE("moments and reduction") {
  for (const char* s : {"x^2+29x+19 (mod 49)", "x^2+29x+48 (mod 49)", "x^2+x+5 (mod 7)", "x^2+24x+120 (mod 121)"}) {
    const CyclicCode c = code_from_check(q(s));
    const auto wd = weight_distribution_enumerate(c);
    CHECK(pless_moments(wd).ok());
    CHECK(wd.total() == c.modulus() * c.modulus());
    if (c.modulus() == c.prime()) continue;
    const CyclicCode cp = c.reduce_mod_p();
    const u64 p = c.prime(), n = c.length();
    for (u64 u = 0; u < c.modulus(); u += 5)
      for (u64 v = 0; v < c.modulus(); v += 3) {
        const auto w = c.codeword(u, v);
        const auto wp = cp.codeword(u % p, v % p);
        u64 weight = 0, weight_p = 0;
        for (u64 i = 0; i < n; ++i) {
          REQUIRE(w[i] % p == wp[i]);
          weight += w[i] != 0;
          weight_p += wp[i] != 0;
        }
        REQUIRE(weight >= weight_p);
      }
    CHECK(p_multiple_distribution(c) == weight_distribution_enumerate(cp));
  }
  WeightDistribution broken = parse_weight_distribution("5:36,6:12", 6, 7);
  broken.counts[5] = 35;
  CHECK_FALSE(pless_moments(broken).ok());
}

TEST_CASE("classification") {
  const CyclicCode c6 = code_from_check(q("x^2+x+5", 7));
  const auto r6 = classify(c6, weight_distribution_enumerate(c6));
  CHECK(r6.is_mds);
  CHECK(r6.label == "MDS");
  CHECK(r6.is_projective);

  const CyclicCode c16 = code_from_check(q("x^2+x+6", 7));
  const auto r16 = classify(c16, weight_distribution_enumerate(c16));
  CHECK(r16.is_nmds);
  CHECK(r16.label == "NMDS, 2-MDS");
  CHECK(r16.repetition_factor == 2);
  REQUIRE(r16.quotient);
  CHECK(r16.quotient->n == 8);
  CHECK(r16.quotient->d == 7);
  CHECK(r16.extremal);

  const CyclicCode c28 = code_from_recurrence({-2, -1}, 13);
  const auto r28 = classify(c28, weight_distribution_enumerate(c28));
  CHECK(r28.label == "4-MDS");
  CHECK(r28.repetition_factor == 4);
  REQUIRE(r28.quotient);
  CHECK(r28.quotient->n == 7);
  CHECK(r28.quotient->d == 6);
  CHECK(r28.quotient->is_mds);
  CHECK(r28.weight_law_ok);
}

TEST_CASE("one-weight NMDS construction") {
  const auto r7 = prop5_construct(7);
  CHECK(r7.wd.to_string() == "14:48");
  CHECK(prop5_construct(11).wd.to_string() == "22:120");
  CHECK(prop5_construct(19).wd.to_string() == "38:360");
  CHECK_THROWS_AS(prop5_construct(13), Error);
  CHECK_THROWS_AS(prop5_construct(3), Error);
}
