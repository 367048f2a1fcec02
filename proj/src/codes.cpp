#include "wsscodes/codes.hpp"

#include <algorithm>
#include <charconv>
#include <thread>
#include <unordered_map>

#include "wsscodes/fp2.hpp"
#include "wsscodes/quadpoly.hpp"

namespace wss {

u64 WeightDistribution::count(u64 w) const {
  auto it = counts.find(w);
  return it == counts.end() ? 0 : it->second;
}

u64 WeightDistribution::total() const {
  u64 t = 0;
  for (auto [w, c] : counts) t += c;
  return t;
}

std::vector<u64> WeightDistribution::nonzero_weights() const {
  std::vector<u64> ws;
  for (auto [w, c] : counts)
    if (w != 0 && c != 0) ws.push_back(w);
  return ws;
}

u64 WeightDistribution::min_nonzero_weight() const {
  auto ws = nonzero_weights();
  return ws.empty() ? 0 : ws.front();
}

std::string WeightDistribution::to_string() const {
  std::string s;
  for (auto [w, c] : counts) {
    if (w == 0 || c == 0) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(w) + ":" + std::to_string(c);
  }
  return s;
}

WeightDistribution parse_weight_distribution(std::string_view text, u64 n, u64 m) {
  WeightDistribution wd{n, m, {}};
  u64 nonzero = 0;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos) fail(Errc::parse_error, "expected w:count in '" + std::string(item) + "'");
    u64 w = 0, c = 0;
    auto r1 = std::from_chars(item.data(), item.data() + colon, w);
    auto r2 = std::from_chars(item.data() + colon + 1, item.data() + item.size(), c);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != item.data() + colon ||
        r2.ptr != item.data() + item.size())
      fail(Errc::parse_error, "bad weight entry '" + std::string(item) + "'");
    if (w == 0 || w > n) fail(Errc::parse_error, "weight " + std::to_string(w) + " outside 1.." + std::to_string(n));
    wd.counts[w] += c;
    nonzero += c;
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (static_cast<u128>(nonzero) + 1 != static_cast<u128>(m) * m)
    fail(Errc::parse_error, "nonzero counts sum to " + std::to_string(nonzero) + ", expected m^2 - 1");
  wd.counts[0] = 1;
  return wd;
}

std::vector<u64> CyclicCode::codeword(u64 u, u64 v) const {
  const u64 m = modulus();
  std::vector<u64> c(length());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = addmod(mulmod(u % m, gen_.rows[0][i], m), mulmod(v % m, gen_.rows[1][i], m), m);
  return c;
}

CyclicCode CyclicCode::reduce_mod_p() const {
  if (modulus() == p_) return *this;
  GeneratorRows g{p_, gen_.rows};
  for (auto& row : g.rows)
    for (auto& x : row) x %= p_;
  return {check_.reduce(p_), p_, std::move(g)};
}

MonicQuadratic reciprocal(const MonicQuadratic& f) {
  const Residue inv = mod_inverse(f.a0());
  return {f.a1() * inv, inv};
}

CyclicCode make_code(const MonicQuadratic& h, u64 n, bool enforce_coprime) {
  const u64 m = h.modulus();
  auto [p, k] = prime_power_base(m);
  if (p == 0 || k > 2) fail(Errc::invalid_argument, "code modulus must be p or p^2, got " + std::to_string(m));
  if (h.a0_value() % p == 0) fail(Errc::not_invertible, h.to_string() + ": h(0) is not a unit");
  require(n >= 2, "code length must be at least 2");
  if (enforce_coprime && k == 2 && n % p == 0)
    fail(Errc::invalid_argument, "length " + std::to_string(n) + " is divisible by p = " + std::to_string(p) +
                                     "; free cyclic codes over Z_{p^2} here need gcd(n, p) = 1");
  if (!divides_x_pow_minus_one(h, n))
    fail(Errc::invalid_argument, h.to_string() + " does not divide x^" + std::to_string(n) + " - 1");
  const RecurrenceSpec spec = RecurrenceSpec::from_char_poly(reciprocal(h));
  GeneratorRows g{m, {sequence(spec, m, 1, 0, n), sequence(spec, m, 0, 1, n)}};
  return {h, p, std::move(g)};
}

CyclicCode code_from_check(const MonicQuadratic& h) { return make_code(h, poly_order(h)); }

CyclicCode code_from_recurrence(const RecurrenceSpec& spec, u64 m) {
  const u64 n = period(spec, m);
  return make_code(reciprocal(spec.char_poly(m)), n);
}

CyclicCode c_ab_code(const Residue& a, const Residue& b, u64 n) {
  require(a.modulus() == b.modulus(), "a and b must share a modulus");
  const u64 m = a.modulus();
  auto [p, k] = prime_power_base(m);
  if (p == 0 || k != 2) fail(Errc::invalid_argument, "C(a,b) lives over Z_{p^2}");
  const Residue ai = mod_inverse(a), bi = mod_inverse(b);
  if ((a.value() - b.value() + m) % p == 0)
    fail(Errc::invalid_argument, "a = b (mod p): C(a,b) would have p^3 codewords and is not free");
  require(n >= 2 && (p * (p - 1)) % n == 0, "C(a,b) needs n | p(p-1)");
  if (n % multiplicative_order(a) != 0 || n % multiplicative_order(b) != 0)
    fail(Errc::invalid_argument, "orders of a and b must divide n");
  return make_code(MonicQuadratic(-(ai + bi), ai * bi), n, false);
}

namespace {

template <class T>
void enumerate_range(const GeneratorRows& gen, u64 u_begin, u64 u_end, std::vector<u64>& hist) {
  const std::size_t n = gen.length();
  const T m = static_cast<T>(gen.m);
  std::vector<T> r0(n), r1(n), base(n), cur(n);
  for (std::size_t i = 0; i < n; ++i) {
    r0[i] = static_cast<T>(gen.rows[0][i]);
    r1[i] = static_cast<T>(gen.rows[1][i]);
    base[i] = static_cast<T>(mulmod(u_begin, gen.rows[0][i], gen.m));
  }
  for (u64 u = u_begin; u < u_end; ++u) {
    cur = base;
    for (u64 v = 0; v < gen.m; ++v) {
      std::size_t zeros = 0;
      if (v == 0) {
        for (std::size_t i = 0; i < n; ++i) zeros += cur[i] == 0;
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          T c = cur[i] + r1[i];
          c -= c >= m ? m : 0;
          cur[i] = c;
          zeros += c == 0;
        }
      }
      ++hist[n - zeros];
    }
    for (std::size_t i = 0; i < n; ++i) {
      T c = base[i] + r0[i];
      base[i] = c >= m ? c - m : c;
    }
  }
}

}  // namespace

WeightDistribution weight_distribution_enumerate(const GeneratorRows& gen, u64 budget, unsigned threads) {
  const u64 n = gen.length();
  const u64 m = gen.m;
  const u128 cost = static_cast<u128>(m) * m * n;
  if (cost > budget)
    fail(Errc::budget_exceeded, "enumeration needs " + std::to_string(static_cast<u64>(cost)) +
                                    " cell visits, budget is " + std::to_string(budget) +
                                    "; use the closed-form path");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<u64>(threads, m));

  std::vector<std::vector<u64>> hists(threads, std::vector<u64>(n + 1, 0));
  auto work = [&](unsigned t) {
    const u64 lo = m * t / threads, hi = m * (t + 1) / threads;
    if (m < (1ULL << 31))
      enumerate_range<std::uint32_t>(gen, lo, hi, hists[t]);
    else
      enumerate_range<u64>(gen, lo, hi, hists[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  WeightDistribution wd{n, m, {}};
  for (u64 w = 0; w <= n; ++w) {
    u64 c = 0;
    for (const auto& h : hists) c += h[w];
    if (c != 0) wd.counts[w] = c;
  }
  return wd;
}

WeightDistribution weight_distribution_enumerate(const CyclicCode& code, u64 budget, unsigned threads) {
  return weight_distribution_enumerate(code.generator(), budget, threads);
}

WeightDistribution p_multiple_distribution(const CyclicCode& code, u64 budget) {
  const u64 p = code.prime(), m = code.modulus();
  if (m != p * p) fail(Errc::invalid_argument, "p-multiple submodule needs a code over Z_{p^2}");
  // p*(u row0 + v row1) only depends on (u, v) mod p.
  GeneratorRows g{m, code.generator().rows};
  for (auto& row : g.rows)
    for (auto& x : row) x = mulmod(x, p, m);
  const u64 n = code.length();
  if (static_cast<u128>(p) * p * n > budget) fail(Errc::budget_exceeded, "p-multiple enumeration over budget");
  // the entries lie in pZ_{p^2}, a copy of F_p
  WeightDistribution wd{n, p, {}};
  for (u64 u = 0; u < p; ++u) {
    for (u64 v = 0; v < p; ++v) {
      u64 zeros = 0;
      for (std::size_t i = 0; i < n; ++i)
        zeros += addmod(mulmod(u, g.rows[0][i], m), mulmod(v, g.rows[1][i], m), m) == 0;
      ++wd.counts[n - zeros];
    }
  }
  return wd;
}

namespace {

u128 binom(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void put(WeightDistribution& wd, u64 w, i128 c) {
  if (c < 0) fail(Errc::verification_failed, "negative weight count");
  if (c > 0) wd.counts[w] += static_cast<u64>(c);
}

WeightDistribution two_weight(u64 n, u64 m, u64 w1, i128 a1, i128 a2) {
  WeightDistribution wd{n, m, {{0, 1}}};
  put(wd, w1, a1);
  put(wd, n, a2);
  if (wd.total() != m * m) fail(Errc::verification_failed, "closed form does not sum to m^2");
  return wd;
}

}  // namespace

WeightDistribution mds_weight_distribution(u64 n, u64 d, u64 q) {
  require(q >= 2 && n >= 2, "MDS weight enumerator needs q >= 2 and n >= 2");
  if (d != n - 1) fail(Errc::invalid_argument, "a dimension-2 MDS code has d = n - 1");
  WeightDistribution wd{n, q, {{0, 1}}};
  for (u64 w = d; w <= n; ++w) {
    i128 s = 0;
    for (u64 j = 0; j <= w - d; ++j) {
      i128 term = static_cast<i128>(binom(w - 1, j));
      for (u64 t = 0; t < w - d - j; ++t) term *= q;
      s += (j % 2 == 0) ? term : -term;
    }
    put(wd, w, static_cast<i128>(binom(n, w)) * (q - 1) * s);
  }
  if (wd.total() != q * q) fail(Errc::verification_failed, "MDS enumerator does not sum to q^2");
  return wd;
}

std::pair<WeightDistribution, WeightDistribution> theorem4_distribution(u64 n, u64 p) {
  require(n >= 2, "length must be at least 2");
  if (n > p + 1) fail(Errc::invalid_argument, "two-weight MDS formula needs n <= p + 1");
  const i128 P = p, N = n, P2 = P * P;
  return {two_weight(n, p, n - 1, N * (P - 1), (P - 1) * (P - N + 1)),
          two_weight(n, p * p, n - 1, N * (P2 - 1), (P2 - 1) * (P2 - N + 1))};
}

WeightDistribution shs_distribution(u64 n, u64 p, u64 e) {
  require(e >= 2, "e must be at least 2");
  if (n % e != 0) fail(Errc::invalid_argument, "e = " + std::to_string(e) + " does not divide n = " + std::to_string(n));
  const i128 P2 = static_cast<i128>(p) * p, E = e;
  return two_weight(n, p * p, n - n / e, E * (P2 - 1), (P2 - 1) * (P2 - E + 1));
}

WeightDistribution corollary2_distribution(u64 n, u64 p, u64 e) {
  require(e >= 2, "e must be at least 2");
  if (n % e != 0) fail(Errc::invalid_argument, "e = " + std::to_string(e) + " does not divide n = " + std::to_string(n));
  require(e <= p + 1, "e must be at most p + 1");
  const i128 P = p, E = e;
  return two_weight(n, p, n - n / e, E * (P - 1), (P - 1) * (P - E + 1));
}

bool corollary1_divisibility(u64 n, u64 p) {
  require(n >= 2 && n <= p + 1, "needs 2 <= n <= p + 1");
  const u128 divisor = p + 1 - n;
  const u128 value = static_cast<u128>(p + 1) * (static_cast<u128>(p) * p + 1 - n);
  return divisor == 0 ? value == 0 : value % divisor == 0;
}

u64 root_ratio_order(const MonicQuadratic& h) {
  const u64 p = h.modulus();
  if (p < 3 || !is_prime(p)) fail(Errc::invalid_argument, "root ratio needs an odd prime modulus");
  if (h.a0().is_zero()) fail(Errc::not_invertible, "zero root");
  const Residue disc = h.discriminant();
  if (disc.is_zero()) return 1;
  const Residue half = mod_inverse(Residue(2, p));
  const Residue minus_a1 = -h.a1();
  if (legendre(disc.value(), p) == 1) {
    const Residue s(sqrt_mod(disc.value(), p), p);
    const Residue r1 = (minus_a1 + s) * half, r2 = (minus_a1 - s) * half;
    return multiplicative_order(r2 * mod_inverse(r1));
  }
  // sqrt(disc) = t*w with w^2 = r
  const u64 r = smallest_nonresidue(p);
  const u64 t = sqrt_mod((disc * mod_inverse(Residue(r, p))).value(), p);
  const Fp2Element beta(minus_a1 * half, Residue(t, p) * half, Fp2Element::canonical_reduction(p));
  return fp2_order(beta.frobenius() * beta.inverse());
}

MomentCheck pless_moments(const WeightDistribution& wd) {
  u128 first = 0;
  for (auto [w, c] : wd.counts) first += static_cast<u128>(w) * c;
  const u64 expected = wd.n * wd.m * (wd.m - 1);
  return {wd.total() == wd.m * wd.m, first == expected, expected, first};
}

namespace {

struct ColumnClasses {
  bool has_zero_column = false;
  std::vector<std::size_t> representatives;  // first column of each class
  std::vector<u64> sizes;
};

// Columns u, v are proportional when u = lambda v for a unit lambda.
ColumnClasses column_classes(const GeneratorRows& g, u64 p) {
  const u64 m = g.m;
  ColumnClasses out;
  std::map<std::pair<u64, u64>, std::size_t> index;
  for (std::size_t i = 0; i < g.length(); ++i) {
    const u64 x = g.rows[0][i], y = g.rows[1][i];
    std::pair<u64, u64> key;
    if (x == 0 && y == 0) {
      out.has_zero_column = true;
      continue;
    }
    if (x % p != 0) {
      key = {1, mulmod(y, mod_inverse(Residue(x, m)).value(), m)};
    } else if (y % p != 0) {
      key = {mulmod(x, mod_inverse(Residue(y, m)).value(), m), 1};
    } else {
      key = {x + m, y + m};  // not unimodular: its own class, never merged with unit-scaled columns
    }
    auto [it, inserted] = index.emplace(key, out.sizes.size());
    if (inserted) {
      out.representatives.push_back(i);
      out.sizes.push_back(0);
    }
    ++out.sizes[it->second];
  }
  return out;
}

u64 strip_prime(u64 x, u64 p) {
  while (x != 0 && x % p == 0) x /= p;
  return x;
}

}  // namespace

ClassificationReport classify(const CyclicCode& code, const WeightDistribution& wd, u64 budget) {
  const u64 n = code.length(), m = code.modulus(), p = code.prime();
  if (wd.n != n || wd.m != m || wd.total() != m * m || wd.count(0) != 1)
    fail(Errc::invalid_argument, "weight distribution does not belong to this code");

  ClassificationReport r{};
  r.n = n;
  r.m = m;
  r.p = p;
  r.nonzero_weights = wd.nonzero_weights();
  r.min_distance = wd.min_nonzero_weight();
  r.is_mds = r.min_distance == n - 1;
  r.is_amds = r.min_distance == n - 2;

  const ColumnClasses classes = column_classes(code.generator(), p);
  const bool repeated = std::any_of(classes.sizes.begin(), classes.sizes.end(), [](u64 s) { return s > 1; });
  r.dual_distance = classes.has_zero_column ? 1 : repeated ? 2 : 3;
  r.is_nmds = r.is_amds && r.dual_distance == 2;
  r.is_projective = r.dual_distance == 3;

  r.repetition_factor = 1;
  if (!classes.has_zero_column && !classes.sizes.empty() &&
      std::all_of(classes.sizes.begin(), classes.sizes.end(), [&](u64 s) { return s == classes.sizes.front(); }))
    r.repetition_factor = classes.sizes.front();

  if (r.nonzero_weights.size() == 2) {
    const u64 ell = strip_prime(r.nonzero_weights[1] - r.nonzero_weights[0], p);
    r.weight_difference_ell = ell;
    r.weight_law_ok = ell == 1 || r.repetition_factor == ell;
  } else {
    r.weight_law_ok = true;
  }

  if (r.repetition_factor > 1) {
    const u64 ell = r.repetition_factor;
    GeneratorRows q{m, {}};
    for (int k = 0; k < 2; ++k)
      for (std::size_t i : classes.representatives) q.rows[k].push_back(code.generator().rows[k][i]);
    const WeightDistribution qwd = weight_distribution_enumerate(q, budget, 1);
    for (auto [w, c] : qwd.counts)
      if (wd.count(w * ell) != c)
        fail(Errc::verification_failed, "code is not an exact " + std::to_string(ell) + "-fold repetition");
    const u64 qd = qwd.min_nonzero_weight();
    r.quotient = QuotientParams{n / ell, 2, qd, qd == n / ell - 1};
  }

  r.extremal = r.is_nmds && m == p && n == 2 * p + 2;

  std::vector<std::string> parts;
  if (r.is_mds) parts.push_back("MDS");
  if (r.is_nmds) parts.push_back("NMDS");
  if (r.quotient && r.quotient->is_mds) parts.push_back(std::to_string(r.repetition_factor) + "-MDS");
  if (parts.empty()) parts.push_back(r.is_amds ? "AMDS" : "none");
  for (std::size_t i = 0; i < parts.size(); ++i) r.label += (i ? ", " : "") + parts[i];
  return r;
}

Prop5Result prop5_construct(u64 p) {
  if (!is_prime(p) || p % 4 != 3 || p <= 5)
    fail(Errc::invalid_argument, "one-weight NMDS construction needs a prime p = 3 (mod 4), p > 5");
  CyclicCode code = code_from_check(construct_irreducible(p, 2 * p + 2));
  WeightDistribution wd = weight_distribution_enumerate(code);
  ClassificationReport report = classify(code, wd);
  const bool ok = code.length() == 2 * p + 2 && report.nonzero_weights == std::vector<u64>{2 * p} &&
                  report.is_nmds && report.extremal && report.repetition_factor == 2 && report.quotient &&
                  report.quotient->n == p + 1 && report.quotient->d == p && report.quotient->is_mds;
  if (!ok)
    fail(Errc::verification_failed, "irreducible construction at p = " + std::to_string(p) +
                                        " is not a one-weight NMDS 2-fold simplex code");
  return {std::move(code), std::move(wd), std::move(report)};
}

}  // namespace wss
