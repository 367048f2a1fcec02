#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsscodes/quadratic.hpp"
#include "wsscodes/recurrence.hpp"

namespace wss {

inline constexpr u64 kDefaultBudget = 1'000'000'000;

/// Exact weight -> count histogram of a code over Z_m.
struct WeightDistribution {
  u64 n = 0;
  u64 m = 0;
  std::map<u64, u64> counts;

  u64 count(u64 w) const;
  u64 total() const;
  std::vector<u64> nonzero_weights() const;
  u64 min_nonzero_weight() const;

  /// "5:36,6:12", nonzero weights only, ascending.
  std::string to_string() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Parses the "w:count,..." form of a free rank-2 code: the nonzero counts
/// must add up to m^2 - 1, and weight 0 (the zero word) gets count 1.
WeightDistribution parse_weight_distribution(std::string_view text, u64 n, u64 m);

/// Two generator rows over Z_m; the code is {u*row0 + v*row1}.
struct GeneratorRows {
  u64 m;
  std::array<std::vector<u64>, 2> rows;

  std::size_t length() const { return rows[0].size(); }
};

/// A free rank-2 cyclic code over Z_p or Z_{p^2}. The generator rows are the
/// orbits of the states (1,0) and (0,1) under the recurrence whose
/// characteristic polynomial is the normalized reciprocal of the check
/// polynomial.
class CyclicCode {
 public:
  u64 modulus() const { return gen_.m; }
  u64 prime() const { return p_; }
  u64 length() const { return gen_.length(); }
  const MonicQuadratic& check() const { return check_; }
  const GeneratorRows& generator() const { return gen_; }
  const std::vector<u64>& row(int i) const { return gen_.rows.at(static_cast<std::size_t>(i)); }

  /// u*row0 + v*row1
  std::vector<u64> codeword(u64 u, u64 v) const;

  /// The code over F_p with check polynomial h mod p.
  CyclicCode reduce_mod_p() const;

 private:
  friend CyclicCode make_code(const MonicQuadratic&, u64, bool);
  CyclicCode(MonicQuadratic check, u64 p, GeneratorRows gen)
      : check_(check), p_(p), gen_(std::move(gen)) {}

  MonicQuadratic check_;
  u64 p_;
  GeneratorRows gen_;
};

/// Code of length n with check polynomial h. With enforce_coprime, lengths
/// divisible by p are refused over Z_{p^2} (free cyclic structure needs
/// gcd(n, p) = 1).
CyclicCode make_code(const MonicQuadratic& h, u64 n, bool enforce_coprime = true);

/// Length = order of h.
CyclicCode code_from_check(const MonicQuadratic& h);

/// Length = period of the recurrence mod m; check = reciprocal of its
/// characteristic polynomial, made monic.
CyclicCode code_from_recurrence(const RecurrenceSpec& spec, u64 m);

/// C(a, b): check polynomial (1 - a x)(1 - b x) / (ab) over Z_{p^2}, length n.
CyclicCode c_ab_code(const Residue& a, const Residue& b, u64 n);

/// Normalized reciprocal x^2 + (c1/c0) x + 1/c0 of x^2 + c1 x + c0.
MonicQuadratic reciprocal(const MonicQuadratic& f);

/// Full enumeration of the m^2 codewords, m^2 * n cell visits at most
/// `budget`. Work is split across `threads` workers (0 = hardware).
WeightDistribution weight_distribution_enumerate(const GeneratorRows& gen, u64 budget = kDefaultBudget,
                                                 unsigned threads = 0);
WeightDistribution weight_distribution_enumerate(const CyclicCode& code, u64 budget = kDefaultBudget,
                                                 unsigned threads = 0);

/// Distribution of the submodule {p*c} of a code over Z_{p^2}; it has p^2
/// elements over the p-letter alphabet pZ_{p^2} (so m = p) and must equal the
/// distribution of the code mod p.
WeightDistribution p_multiple_distribution(const CyclicCode& code, u64 budget = kDefaultBudget);

/// Weight enumerator of an [n, 2, n-1]_q MDS code.
WeightDistribution mds_weight_distribution(u64 n, u64 d, u64 q);

/// Two-weight MDS C1 over F_p and its lift C2 over Z_{p^2}, n <= p+1.
std::pair<WeightDistribution, WeightDistribution> theorem4_distribution(u64 n, u64 p);

/// C(a, b) over Z_{p^2} with e = ord(b/a): weights {n - n/e, n}.
WeightDistribution shs_distribution(u64 n, u64 p, u64 e);

/// The mod-p companion of shs_distribution.
WeightDistribution corollary2_distribution(u64 n, u64 p, u64 e);

/// (p - n + 1) | (p + 1)(p^2 - n + 1)
bool corollary1_divisibility(u64 n, u64 p);

/// Order of the ratio of the two roots of h over F_p (roots taken in F_p or
/// F_{p^2}); 1 for a double root.
u64 root_ratio_order(const MonicQuadratic& h);

/// Sum_w A_w = m^2 and sum_w w A_w = n m (m - 1); the latter holds whenever
/// no coordinate is identically zero.
struct MomentCheck {
  bool count_ok;
  bool first_moment_ok;
  u64 expected_first_moment;
  u128 actual_first_moment;
  bool ok() const { return count_ok && first_moment_ok; }
};
MomentCheck pless_moments(const WeightDistribution& wd);

struct QuotientParams {
  u64 n;
  u64 k;
  u64 d;
  bool is_mds;
};

struct ClassificationReport {
  u64 n;
  u64 m;
  u64 p;
  u64 min_distance;
  std::vector<u64> nonzero_weights;
  bool is_mds;
  bool is_amds;
  bool is_nmds;
  unsigned dual_distance;  // 1, 2 or 3 (meaning >= 3)
  bool is_projective;
  u64 repetition_factor;                   // 1 unless all column classes share one size > 1
  std::optional<u64> weight_difference_ell;  // largest p-coprime factor of w2 - w1, two-weight codes
  bool weight_law_ok;
  std::optional<QuotientParams> quotient;
  bool extremal;  // NMDS of length 2p + 2 over F_p
  std::string label;  // "MDS", "NMDS, 2-MDS", "4-MDS", ...
};

/// Min distance, MDS/AMDS/NMDS by definition, projectivity and repetition by
/// grouping proportional generator columns; the quotient code (one column per
/// class) is rebuilt and enumerated.
ClassificationReport classify(const CyclicCode& code, const WeightDistribution& wd,
                              u64 budget = kDefaultBudget);

struct Prop5Result {
  CyclicCode code;
  WeightDistribution wd;
  ClassificationReport report;
};

/// One-weight NMDS [2p+2, 2, 2p]_p from the irreducible construction, p = 3 (mod 4).
/// Every structural claim is checked; a failed check throws verification_failed.
Prop5Result prop5_construct(u64 p);

}  // namespace wss
