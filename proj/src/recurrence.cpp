#include "wsscodes/recurrence.hpp"

#include "wsscodes/pell.hpp"
#include "wsscodes/quadpoly.hpp"

namespace wss {

namespace {

struct Mat2 {
  u64 a, b, c, d;  // [[a b] [c d]]
};

Mat2 mat_mul(const Mat2& x, const Mat2& y, u64 m) {
  auto dot = [m](u64 p, u64 q, u64 r, u64 s) { return addmod(mulmod(p, q, m), mulmod(r, s, m), m); };
  return {dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c),
          dot(x.c, y.b, x.d, y.d)};
}

Mat2 mat_pow(Mat2 base, u128 e, u64 m) {
  Mat2 r{1 % m, 0, 0, 1 % m};
  while (e > 0) {
    if (e & 1) r = mat_mul(r, base, m);
    base = mat_mul(base, base, m);
    e >>= 1;
  }
  return r;
}

// (F_n, F_{n+1}) -> (F_{n+1}, F_{n+2})
Mat2 companion(const RecurrenceSpec& spec, u64 m) {
  return {0, 1 % m, reduce(-static_cast<i128>(spec.B), m), reduce(-static_cast<i128>(spec.A), m)};
}

bool is_identity(const Mat2& x, u64 m) { return x.a == 1 % m && x.b == 0 && x.c == 0 && x.d == 1 % m; }

void require_unit_norm(const RecurrenceSpec& spec, u64 m) {
  require(m >= 2, "modulus must be at least 2");
  if (gcd(reduce(spec.B, m), m) != 1)
    fail(Errc::not_invertible, "norm B = " + std::to_string(spec.B) + " is not invertible mod " +
                                   std::to_string(m) + "; the sequence need not be purely periodic");
}

u64 iterate_period(const RecurrenceSpec& spec, u64 m, u128 bound) {
  const u64 na = reduce(-static_cast<i128>(spec.A), m);
  const u64 nb = reduce(-static_cast<i128>(spec.B), m);
  const u64 one = 1 % m;
  u64 f0 = 0, f1 = one;
  for (u128 t = 1; t <= bound; ++t) {
    const u64 f2 = addmod(mulmod(na, f1, m), mulmod(nb, f0, m), m);
    f0 = f1;
    f1 = f2;
    if (f0 == 0 && f1 == one) return static_cast<u64>(t);
  }
  fail(Errc::verification_failed, "no period found within the bound");
}

void crosscheck(const RecurrenceSpec& spec, u64 m, u64 k) {
#ifdef WSSCODES_CROSSCHECK
  if (prime_power_base(m).first == 0) return;
  const u64 order = poly_order(spec.char_poly(m));
  if (order != k)
    fail(Errc::verification_failed, "period " + std::to_string(k) + " disagrees with polynomial order " +
                                        std::to_string(order) + " mod " + std::to_string(m));
#else
  (void)spec;
  (void)m;
  (void)k;
#endif
}

}  // namespace

RecurrenceSpec RecurrenceSpec::from_char_poly(const MonicQuadratic& f) {
  return {static_cast<i64>(f.a1_value()), static_cast<i64>(f.a0_value())};
}

std::vector<u64> sequence(const RecurrenceSpec& spec, u64 m, i64 f0, i64 f1, std::size_t len) {
  require(m >= 2, "modulus must be at least 2");
  const u64 na = reduce(-static_cast<i128>(spec.A), m);
  const u64 nb = reduce(-static_cast<i128>(spec.B), m);
  std::vector<u64> out;
  out.reserve(len);
  u64 x = reduce(f0, m), y = reduce(f1, m);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(x);
    const u64 z = addmod(mulmod(na, y, m), mulmod(nb, x, m), m);
    x = y;
    y = z;
  }
  return out;
}

u64 term(const RecurrenceSpec& spec, u64 m, u128 n) {
  require(m >= 2, "modulus must be at least 2");
  return mat_pow(companion(spec, m), n, m).b;
}

u64 period(const RecurrenceSpec& spec, u64 m) {
  require_unit_norm(spec, m);
  u64 k = 0;
  auto [p, e] = prime_power_base(m);
  if (p != 0 && e == 2) {
    const u64 kp = period(spec, p);
    const Mat2 M = companion(spec, m);
    if (is_identity(mat_pow(M, kp, m), m)) {
      k = kp;
    } else if (is_identity(mat_pow(M, static_cast<u128>(kp) * p, m), m)) {
      k = kp * p;
    } else {
      const u64 found = iterate_period(spec, m, static_cast<u128>(p) * (static_cast<u128>(m) - 1));
      fail(Errc::verification_failed, "dichotomy violated: k(p) = " + std::to_string(kp) +
                                          " but k(p^2) = " + std::to_string(found));
    }
  } else {
    k = iterate_period(spec, m, static_cast<u128>(m) * m);
  }
  crosscheck(spec, m, k);
  return k;
}

PeriodReport wss_test(const RecurrenceSpec& spec, u64 p) {
  if (!is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not prime");
  if (reduce(spec.B, p) == 0)
    fail(Errc::not_invertible, "p = " + std::to_string(p) + " divides the norm B");
  const u64 kp = period(spec, p);
  const u64 kp2 = period(spec, p * p);
  if (kp2 != kp && kp2 != kp * p)
    fail(Errc::verification_failed, "k(p^2) is neither k(p) nor p k(p)");
  return {p, kp, kp2, kp == kp2};
}

PRationalityVerdict fibonacci_prationality(u64 d, u64 p, u64 pell_bound) {
  if (p < 5 || !is_prime(p)) fail(Errc::invalid_argument, "p-rationality criterion needs a prime p >= 5");
  if (d % p == 0) fail(Errc::invalid_argument, "p = " + std::to_string(p) + " divides d");
  const RecurrenceSpec spec = recurrence_from_unit(fundamental_unit(d, pell_bound));
  const int symbol = legendre(static_cast<i128>(d), p);
  const u64 index = symbol == 1 ? p - 1 : p + 1;
  const u64 value = term(spec, p * p, index);
  return {static_cast<i64>(d), p, symbol, index, value, value != 0};
}

Residue alpha_sum(u64 p, u64 d, u64 i) {
  if (p < 3 || !is_prime(p)) fail(Errc::invalid_argument, "alpha_sum needs an odd prime");
  require(d >= 1 && i >= 1 && i <= d, "alpha_sum needs 0 < i <= d");
  Residue sum(0, p);
  const u64 cls = i % d;
  for (u64 k = (cls == 0 ? d : cls); k <= (p - 1) / 2; k += d) sum = sum + mod_inverse(Residue(k, p));
  return sum;
}

AlphaCriterion q5_alpha_criterion(u64 p) {
  if (!is_prime(p) || p % 5 != 1)
    fail(Errc::invalid_argument, "alpha criterion needs a prime p = 1 (mod 5), got " + std::to_string(p));
  AlphaCriterion c{p, {}, 0, 0, false};
  for (u64 i = 1; i <= 5; ++i) c.alpha.push_back(alpha_sum(p, 5, i).value());
  c.lhs = addmod(c.alpha[0], mulmod(2, c.alpha[4], p), p);
  c.rhs = submod(c.alpha[3], c.alpha[1], p);
  c.congruence_holds = c.lhs == c.rhs;
  return c;
}

AlphaScanReport alpha_crosscheck(u64 p_max) {
  AlphaScanReport report{p_max, 0, {}};
  const RecurrenceSpec fib = RecurrenceSpec::fibonacci();
  for (u64 p = 11; p <= p_max; p += 10) {
    if (!is_prime(p)) continue;
    ++report.primes_checked;
    AlphaCriterion c = q5_alpha_criterion(p);
    const bool by_period = wss_test(fib, p).is_wss;
    const bool by_fib = term(fib, p * p, p - 1) == 0;
    if (c.congruence_holds != by_period || c.congruence_holds != by_fib)
      report.discrepancies.push_back({std::move(c), by_period, by_fib});
  }
  return report;
}

}  // namespace wss
