// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "wsscodes/codes.hpp"
#include "wsscodes/inverse.hpp"
#include "wsscodes/pell.hpp"
#include "wsscodes/quadpoly.hpp"
#include "wsscodes/recurrence.hpp"
#include "wsscodes/tables.hpp"

using namespace wss;

namespace {

// Every distribution computed anywhere in the run, for the moment check.
std::deque<WeightDistribution> g_distributions;

const WeightDistribution& keep(WeightDistribution wd) {
  g_distributions.push_back(std::move(wd));
  return g_distributions.back();
}

std::map<u64, u64> nonzero(const WeightDistribution& wd) {
  std::map<u64, u64> out;
  for (const auto& [w, c] : wd.counts)
    if (c) out[w] = c;
  return out;
}

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      std::printf("    criterion %d: FAILED %s\n", id_, what.c_str());
    }
  }
  void note(const std::string& s) { std::printf("    criterion %d: %s\n", id_, s.c_str()); }

  bool finish(const std::string& title, double seconds) const {
    std::printf("CRITERION %d: %s - %s (%zu checks, %zu failed, %.1fs)\n", id_, failures_ ? "FAIL" : "PASS",
                title.c_str(), checks_, failures_, seconds);
    std::fflush(stdout);
    return failures_ == 0;
  }

 private:
  int id_;
  std::size_t checks_ = 0, failures_ = 0;
};

std::string s(u64 x) { return std::to_string(x); }

const Table1Row& table1(u64 n, u64 d, u64 p) {
  for (const auto& r : table1_rows())
    if (r.n == n && r.d == d && r.p == p) return r;
  fail(Errc::invalid_argument, "no such Table 1 row");
}

u64 powmod_plain(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------

void small_table1_rows(Criterion& c) {
  for (auto [n, d, p] : {std::tuple<u64, u64, u64>{8, 24, 7}, {28, 8, 13}, {30, 8, 31}}) {
    const Table1Row& row = table1(n, d, p);
    const RecurrenceSpec spec = recurrence_from_unit(fundamental_unit(d));
    const CyclicCode c1 = code_from_recurrence(spec, p);
    const CyclicCode c2 = code_from_recurrence(spec, p * p);
    c.expect(c1.length() == n && c2.length() == n, "length of row (" + s(n) + "," + s(d) + "," + s(p) + ")");
    const auto& wd1 = keep(weight_distribution_enumerate(c1));
    const auto& wd2 = keep(weight_distribution_enumerate(c2));
    const std::string tag = "(" + s(n) + "," + s(d) + "," + s(p) + ")";
    c.expect(wd1.nonzero_weights() == std::vector<u64>{row.w1, row.w2}, tag + " weights");
    c.expect(wd1.count(row.w1) == row.a1 && wd1.count(row.w2) == row.a2, tag + " (a1,a2)");
    c.expect(wd2.count(row.w1) == row.A1 && wd2.count(row.w2) == row.A2, tag + " (A1,A2)");
    // independent enumeration
    c.expect(nonzero(wd1) == oracle::weights(c1.check().a1_value(), c1.check().a0_value(), p, n), tag + " C1 oracle");
    c.expect(nonzero(wd2) == oracle::weights(c2.check().a1_value(), c2.check().a0_value(), p * p, n),
             tag + " C2 oracle");
    c.note(tag + ": C1 " + wd1.to_string() + ", C2 " + wd2.to_string());
  }
}

void large_table1_rows(Criterion& c) {
  for (auto [n, d, p] : {std::tuple<u64, u64, u64>{104, 12, 103}, {484, 13, 241}, {174, 24, 523}}) {
    const Table1Row& row = table1(n, d, p);
    const std::string tag = "(" + s(n) + "," + s(d) + "," + s(p) + ")";
    const RecurrenceSpec spec = recurrence_from_unit(fundamental_unit(d));
    const PeriodReport pr = wss_test(spec, p);
    c.expect(pr.kp == n && pr.kp2 == n, tag + " k(p) = k(p^2) = n");
    const CyclicCode c1 = code_from_recurrence(spec, p);
    const auto& wd1 = keep(weight_distribution_enumerate(c1));
    c.expect(wd1.count(row.w1) == row.a1 && wd1.count(row.w2) == row.a2, tag + " (a1,a2) by enumeration");
    c.expect(nonzero(wd1) == oracle::weights(c1.check().a1_value(), c1.check().a0_value(), p, n), tag + " C1 oracle");

    const u64 e = root_ratio_order(c1.check());
    const auto& closed = keep(e == n ? theorem4_distribution(n, p).second : shs_distribution(n, p, e));
    c.expect(closed.count(row.w1) == row.A1, tag + " A1 = " + s(row.A1) + " from the closed form");
    const CyclicCode c2 = code_from_recurrence(spec, p * p);
    const auto& sub = keep(p_multiple_distribution(c2));
    c.expect(sub == wd1, tag + " pC2 sub-enumeration matches C1");
    c.note(tag + ": e = " + s(e) + ", C1 " + wd1.to_string() + ", C2 (closed form) " + closed.to_string());
  }
}

void tables_2_3(Criterion& c) {
  std::size_t rows = 0;
  for (int id : {2, 3}) {
    for (const auto& row : table23_rows(id)) {
      ++rows;
      const std::string tag = "table " + std::to_string(id) + " (" + s(row.n) + "," + s(row.d) + "," +
                              (row.symbol > 0 ? "+1" : "-1") + "," + s(row.p) + ")";
      const u64 p = row.p, m = p * p, n = row.n;
      const MonicQuadratic h = parse_quadratic(row.h, p);
      const MonicQuadratic H = parse_quadratic(row.H, m);
      // (i)
      c.expect(poly_order(h) == n && oracle::poly_order(h.a1_value(), h.a0_value(), p, m) == n, tag + " order of h");
      c.expect(legendre(h.discriminant().value(), p) == row.symbol, tag + " symbol");
      // (ii)
      c.expect(H.reduce(p) == h, tag + " H = h mod p");
      c.expect(oracle::divides_x_pow_minus_one(H.a1_value(), H.a0_value(), m, n), tag + " H | x^n - 1");
      c.expect(poly_order(H) == n && oracle::poly_order(H.a1_value(), H.a0_value(), m, m * m) == n,
               tag + " order of H");
      c.expect(hensel_lift(h, n) == H, tag + " H is the Hensel lift");
      // (iii)
      const i128 delta = H.integer_discriminant();
      const u64 sf = delta > 0 ? oracle::squarefree_part(static_cast<u64>(delta)) : 0;
      c.expect(delta > 0 && sf == row.d && signed_squarefree_part(delta) == static_cast<i128>(row.d),
               tag + " squarefree_part(disc H) = d");
      // (iv)
      const CyclicCode c1 = code_from_check(h);
      const auto& wd1 = keep(weight_distribution_enumerate(c1));
      std::vector<u64> freqs;
      for (u64 w : wd1.nonzero_weights()) freqs.push_back(wd1.count(w));
      c.expect(wd1.nonzero_weights() == row.weights && freqs == row.freqs, tag + " weights and frequencies");
      c.expect(nonzero(wd1) == oracle::weights(c1.check().a1_value(), c1.check().a0_value(), p, n), tag + " C1 oracle");
      // (v)
      const auto cls = classify(c1, wd1);
      c.expect(cls.label == row.cls, tag + " class " + row.cls + " (computed " + cls.label + ")");
    }
  }
  c.note(std::to_string(rows) + " rows checked (21 in the first table, 20 in the second)");

  // the harness reaches the same verdicts
  for (int id : {2, 3}) {
    const TableReport r = run_table(id);
    c.expect(r.all_passed(), "table harness " + std::to_string(id));
    c.note("harness table " + std::to_string(id) + ": " + s(r.count(Verdict::pass)) + " PASS, " +
           s(r.count(Verdict::convention)) + " CONVENTION (listed h differs from the canonical choice), " +
           s(r.count(Verdict::fail)) + " FAIL");
  }
}

void wss_verification(Criterion& c) {
  const PeriodReport a = wss_test({-2, -1}, 13);
  c.expect(a.is_wss && a.kp == 28 && a.kp2 == 28, "(8,13) -> 28");
  const PeriodReport b = wss_test({-2, -1}, 31);
  c.expect(b.is_wss && b.kp == 30 && b.kp2 == 30, "(8,31) -> 30");
  c.expect(oracle::period(-2, -1, 169, 169 * 169) == 28 && oracle::period(-2, -1, 961, 961 * 961) == 30,
           "oracle periods for d = 8");
  std::size_t primes = 0;
  for (u64 p : oracle::primes_up_to(1000)) {
    if (p <= 5) continue;
    ++primes;
    const PeriodReport r = wss_test(RecurrenceSpec::fibonacci(), p);
    const u64 kp = oracle::period(-1, -1, p, p * p);
    const u64 kp2 = oracle::period(-1, -1, p * p, p * p * p * p);
    c.expect(!r.is_wss && r.kp == kp && r.kp2 == kp2 && kp != kp2, "Fibonacci at p = " + s(p));
  }
  c.note("Fibonacci: k(p) != k(p^2) at all " + std::to_string(primes) + " primes 5 < p <= 1000");
}

void nmds_suite(Criterion& c) {
  for (u64 p : oracle::primes_up_to(47)) {
    if (p < 7) continue;
    const std::string tag = "p = " + s(p);
    const Table23Row* listed = nullptr;
    for (int id : {2, 3})
      for (const auto& row : table23_rows(id))
        if (row.p == p && row.n == 2 * p + 2) listed = &row;
    const Table1Row* listed1 = nullptr;
    for (const auto& row : table1_rows())
      if (row.p == p && row.n == 2 * p + 2) listed1 = &row;

    if (p % 4 == 3) {
      bool ok = true;
      try {
        const Prop5Result r = prop5_construct(p);
        keep(r.wd);
        const auto& q = *r.report.quotient;
        c.expect(r.code.length() == 2 * p + 2 && r.wd.to_string() == s(2 * p) + ":" + s(p * p - 1),
                 tag + " one-weight [2p+2,2,2p]");
        c.expect(r.report.is_nmds && r.report.extremal, tag + " NMDS, extremal");
        c.expect(r.report.repetition_factor == 2 && q.n == p + 1 && q.d == p && q.is_mds,
                 tag + " 2-fold repetition of [p+1,2,p]");
        // the quotient is one-weight with weight p: a simplex code
        c.expect(r.wd.nonzero_weights().size() == 1 && r.wd.nonzero_weights()[0] / 2 == q.d, tag + " simplex quotient");
        if (listed) c.expect(r.wd.nonzero_weights() == listed->weights && r.report.label == listed->cls, tag + " matches table");
      } catch (const Error& e) {
        ok = false;
        c.expect(false, tag + ": " + e.what());
      }
      if (ok) c.note(tag + " (3 mod 4): one-weight NMDS, 2-fold simplex repetition");
    } else {
      const CyclicCode code = code_from_check(construct_irreducible(p, 2 * p + 2));
      const auto& wd = keep(weight_distribution_enumerate(code));
      const auto r = classify(code, wd);
      c.expect(wd.nonzero_weights() == std::vector<u64>{2 * p - 2, 2 * p + 2}, tag + " weights {2p-2, 2p+2}");
      c.expect(r.repetition_factor == 4 && r.quotient && r.quotient->n == (p + 1) / 2 && r.quotient->is_mds &&
                   r.label == "4-MDS",
               tag + " 4-fold repetition of an MDS code");
      if (listed) {
        std::vector<u64> freqs;
        for (u64 w : wd.nonzero_weights()) freqs.push_back(wd.count(w));
        c.expect(wd.nonzero_weights() == listed->weights && freqs == listed->freqs && r.label == listed->cls,
                 tag + " matches table");
      }
      if (listed1)
        c.expect(wd.count(listed1->w1) == listed1->a1 && wd.count(listed1->w2) == listed1->a2,
                 tag + " matches the unit-recurrence table");
      c.note(tag + " (1 mod 4): " + wd.to_string() + ", " + r.label);
    }
  }
}

void oracle_equivalence(Criterion& c) {
  // (a)
  std::size_t a_cases = 0;
  for (u64 p : oracle::primes_up_to(19))
    for (u64 m : {p, p * p})
      for (i64 A = -10; A <= 10; ++A)
        for (i64 B = -10; B <= 10; ++B) {
          if (B % static_cast<i64>(p) == 0) continue;
          const RecurrenceSpec spec{A, B};
          const u64 k = period(spec, m);
          const u64 o = poly_order(spec.char_poly(m));
          const u64 brute = oracle::period(A, B, m, m * m);
          ++a_cases;
          if (k != o || k != brute)
            c.expect(false, "(a) A=" + std::to_string(A) + " B=" + std::to_string(B) + " m=" + s(m));
        }
  c.expect(true, "(a)");
  c.note("(a) period = poly_order = iteration on " + std::to_string(a_cases) + " cases");

  // (b)
  std::size_t b_cases = 0;
  std::set<std::tuple<u64, u64, u64>> triples;
  for (u64 p : {3u, 5u, 7u, 11u, 13u}) {
    for (u64 a1 = 0; a1 < p; ++a1)
      for (u64 a0 = 1; a0 < p; ++a0) {
        const MonicQuadratic h(a1, a0, p);
        const u64 e = root_ratio_order(h);
        if (e <= 1) continue;  // repeated root: no closed form
        const u64 n = poly_order(h);
        triples.insert({n, p, e});
        const auto& wd1 = keep(weight_distribution_enumerate(code_from_check(h)));
        const auto f1 = e == n ? theorem4_distribution(n, p).first : corollary2_distribution(n, p, e);
        const std::string tag = "(b) " + h.to_string();
        c.expect(wd1 == f1, tag + " over F_p");
        ++b_cases;
        if (n % p == 0) continue;
        const MonicQuadratic H = hensel_lift(h, n);
        const auto& wd2 = keep(weight_distribution_enumerate(code_from_check(H)));
        const auto f2 = e == n ? theorem4_distribution(n, p).second : shs_distribution(n, p, e);
        c.expect(wd2 == f2, tag + " over Z_{p^2}");
        ++b_cases;
      }
    // C(a,b) with a, b of order dividing p-1 in Z_{p^2}
    const u64 m = p * p;
    for (u64 a = 1; a < m; ++a)
      for (u64 b = 1; b < m; ++b) {
        if (a % p == 0 || b % p == 0 || (a + m - b) % p == 0) continue;
        if (powmod_plain(a, p - 1, m) != 1 || powmod_plain(b, p - 1, m) != 1) continue;
        const CyclicCode code = c_ab_code(Residue(a, m), Residue(b, m), p - 1);
        const u64 e = oracle::order(b * oracle::inverse(a, m) % m, m);
        const auto& wd = keep(weight_distribution_enumerate(code));
        c.expect(wd == shs_distribution(p - 1, p, e), "(b) C(" + s(a) + "," + s(b) + ") mod " + s(m));
        ++b_cases;
      }
  }
  c.note("(b) enumeration = closed form on " + std::to_string(b_cases) + " codes covering " +
         std::to_string(triples.size()) + " (n,p,e) triples");

  // (d)
  std::mt19937_64 rng(20240601);
  const auto primes = oracle::primes_up_to(31);
  std::size_t equal = 0;
  for (int i = 0; i < 10000; ++i) {
    const u64 p = primes[1 + rng() % (primes.size() - 1)];
    const i64 A = static_cast<i64>(rng() % 2000001) - 1000000;
    i64 B = static_cast<i64>(rng() % 2000001) - 1000000;
    if (B % static_cast<i64>(p) == 0) ++B;
    const u64 kp = oracle::period(A, B, p, p * p);
    const u64 kp2 = oracle::period(A, B, p * p, p * p * p * p);
    const PeriodReport r = wss_test({A, B}, p);
    c.expect(kp2 == kp || kp2 == p * kp, "(d) dichotomy for A=" + std::to_string(A) + " B=" + std::to_string(B));
    c.expect(r.kp == kp && r.kp2 == kp2, "(d) wss_test agrees with iteration");
    equal += kp == kp2;
  }
  c.note("(d) k(p^2) in {k(p), p k(p)} on 10000 random specs (" + std::to_string(equal) + " with equality)");
}

void moments(Criterion& c) {
  for (const auto& wd : g_distributions) {
    const MomentCheck mc = pless_moments(wd);
    c.expect(mc.ok(), "(c) moments of a code of length " + s(wd.n) + " over Z_" + s(wd.m));
  }
  c.note("(c) Pless moment identities on " + std::to_string(g_distributions.size()) + " distributions");
}

void discrepancies(Criterion& c) {
  for (u64 p : {3u, 5u, 7u}) {
    const DoubleRootFinding f = double_root_finding(p);
    const u64 m = p * p;
    // x^p mod (x - 1)^2 by iteration
    std::pair<u64, u64> x{1, 0};
    for (u64 k = 0; k < p; ++k) x = oracle::times_x(x, m - 2, 1, m);
    const bool oracle_remainder_is_px = (x.first + m - 1) % m == m - p && x.second == p;
    c.expect(!f.square_divides && f.remainder_is_p_times_x_minus_1 && oracle_remainder_is_px,
             "(x-1)^2 does not divide x^" + s(p) + "-1 mod " + s(m) + ", remainder p(x-1)");
    for (const auto& g : f.lifts) c.expect(!(g == MonicQuadratic(-2, 1, m)), "lift set excludes (x-1)^2");
    c.expect(f.lifts.size() == oracle::lifts(p - 2, 1, p, p).size(), "lift set is complete at p = " + s(p));
    const cmd::Document doc = cmd::construct(p, "double_root", 0, {});
    c.expect(doc.outcome == cmd::Outcome::discrepancy && doc.records.size() == 1 &&
                 doc.records[0].contains("double_root") &&
                 doc.records[0]["double_root"]["square_divides"] == false,
             "construct reports the double-root finding at p = " + s(p));
    c.note("p = " + s(p) + ": " + s(f.lifts.size()) + " lift(s) of (x-1)^2, remainder " +
           f.remainder_of_square.to_string() + "; construct exit status 3");
  }

  // alpha criterion against the period test, with an independent recount
  const cmd::Document doc = cmd::alpha_scan(10000);
  std::set<u64> reported;
  for (const auto& rec : doc.records) {
    c.expect(rec.contains("p") && rec.contains("alpha") && rec.contains("congruence_holds") &&
                 rec.contains("period_not_rational") && rec["agrees"] == false,
             "structured discrepancy record");
    reported.insert(rec["p"].get<u64>());
  }
  std::set<u64> expected;
  std::size_t checked = 0;
  for (u64 p : oracle::primes_up_to(10000)) {
    if (p % 5 != 1) continue;
    ++checked;
    u64 alpha[6] = {0, 0, 0, 0, 0, 0};
    for (u64 k = 1; k <= (p - 1) / 2; ++k) {
      const u64 cls = k % 5 == 0 ? 5 : k % 5;
      alpha[cls] = (alpha[cls] + powmod_plain(k, p - 2, p)) % p;
    }
    const bool congruence = (alpha[1] + 2 * alpha[5]) % p == (alpha[4] + p - alpha[2]) % p;
    // F_{p-1} mod p^2
    const u64 m = p * p;
    u64 f0 = 0, f1 = 1;
    for (u64 k = 0; k < p - 1; ++k) {
      const u64 f2 = (f0 + f1) % m;
      f0 = f1;
      f1 = f2;
    }
    const bool not_rational = f0 == 0;
    if (congruence != not_rational) expected.insert(p);
  }
  c.expect(reported == expected, "every disagreement is reported and nothing else");
  c.expect(doc.outcome == cmd::Outcome::discrepancy || expected.empty(), "scan raises the discrepancy flag");
  std::string list;
  for (u64 p : reported) list += (list.empty() ? "" : ", ") + s(p);
  c.note("alpha scan: " + std::to_string(checked) + " primes p = 1 (mod 5) up to 10^4, disagreement at p = {" + list +
         "}; scan exit status 3");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "Table 1 small rows: full enumeration over F_p and Z_{p^2}", small_table1_rows},
      {2, "Table 1 large rows: C1 enumeration, C2 closed form, pC2 subcheck", large_table1_rows},
      {3, "Tables 2-3: orders, lifts, d column, weights, class labels", tables_2_3},
      {4, "WSS verification and the Fibonacci scan", wss_verification},
      {5, "one-weight / two-weight NMDS suite for 7 <= p <= 47", nmds_suite},
      {6, "oracle equivalence (a) periods (b) closed forms (c) moments (d) dichotomy", oracle_equivalence},
      {7, "discrepancies are reported: double-root lifts and the alpha criterion", discrepancies},
  };
  bool all = true;
  for (const auto& e : entries) {
    Criterion c(e.id);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
      if (e.id == 6) moments(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = c.finish(e.title, dt) && all;
  }
  std::printf("ACCEPTANCE: %s\n", all ? "ALL PASS" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
