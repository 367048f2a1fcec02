#pragma once

#include <string>
#include <vector>

#include "wsscodes/modnum.hpp"
#include "wsscodes/quadratic.hpp"

namespace wss {

/// F_{n+2} = -A F_{n+1} - B F_n, characteristic polynomial X^2 + A X + B.
struct RecurrenceSpec {
  i64 A = 0;
  i64 B = 0;

  i64 trace() const { return -A; }
  i64 norm() const { return B; }
  i128 discriminant() const { return static_cast<i128>(A) * A - 4 * static_cast<i128>(B); }
  MonicQuadratic char_poly(u64 m) const { return {A, B, m}; }

  static RecurrenceSpec fibonacci() { return {-1, -1}; }
  /// The recurrence whose characteristic polynomial is f (over its modulus).
  static RecurrenceSpec from_char_poly(const MonicQuadratic& f);
};

inline constexpr const char* kUncheckedHypothesis =
    "p does not divide (eps_d - conj(eps_d))^2 h_d: NOT verified (class number not computed)";

struct PeriodReport {
  u64 p;
  u64 kp;
  u64 kp2;
  bool is_wss;  // kp == kp2
  std::string assumption_note = kUncheckedHypothesis;
};

/// F_0 .. F_{len-1} reduced mod m.
std::vector<u64> sequence(const RecurrenceSpec& spec, u64 m, i64 f0, i64 f1, std::size_t len);

/// F_n mod m from (F_0, F_1) = (0, 1), by 2x2 matrix power.
u64 term(const RecurrenceSpec& spec, u64 m, u128 n);

/// Least T > 0 returning the state (0, 1) to itself. Requires B invertible mod m.
u64 period(const RecurrenceSpec& spec, u64 m);

/// k(p), k(p^2) and the Wall-Sun-Sun verdict. k(p^2) is tested against
/// {k(p), p k(p)} only; anything else is reported as a verification failure.
PeriodReport wss_test(const RecurrenceSpec& spec, u64 p);

struct PRationalityVerdict {
  i64 d;
  u64 p;
  int symbol;     // (d/p)
  u64 index;      // p - (d/p)
  u64 term_mod_p2;
  bool p_rational;  // F_index != 0 mod p^2
  std::string assumption_note = kUncheckedHypothesis;
};

/// F_{p-(d/p)} != 0 (mod p^2) for the recurrence of the fundamental unit of d.
PRationalityVerdict fibonacci_prationality(u64 d, u64 p, u64 pell_bound);

/// sum of 1/k mod p over 1 <= k <= (p-1)/2 with k = i (mod d); i = d selects k = 0 (mod d).
Residue alpha_sum(u64 p, u64 d, u64 i);

struct AlphaCriterion {
  u64 p;
  std::vector<u64> alpha;  // alpha(1) .. alpha(5)
  u64 lhs;                 // alpha(1) + 2 alpha(5)
  u64 rhs;                 // alpha(4) - alpha(2)
  bool congruence_holds;   // the formula's claim: Q(sqrt 5) is not p-rational
};

/// The Q(sqrt 5) alpha-sum congruence, evaluated as written. p = 1 (mod 5).
AlphaCriterion q5_alpha_criterion(u64 p);

struct AlphaDiscrepancy {
  AlphaCriterion criterion;
  bool period_not_rational;     // k(p) == k(p^2) for Fibonacci
  bool fibonacci_not_rational;  // F_{p-1} == 0 mod p^2
};

struct AlphaScanReport {
  u64 p_max;
  u64 primes_checked;
  std::vector<AlphaDiscrepancy> discrepancies;
};

/// Compares the alpha-sum congruence with the period and Fibonacci criteria
/// for every prime p = 1 (mod 5) up to p_max.
AlphaScanReport alpha_crosscheck(u64 p_max);

}  // namespace wss
