#include "wsscodes/tables.hpp"

#include <cmath>

#include "wsscodes/quadpoly.hpp"

namespace wss {

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {28, 8, 13, 24, 28, 84, 84, 1176, 27384, 0, "IRR"},
      {30, 8, 31, 29, 30, 900, 60, 28800, 894720, 0, "RED"},
      {104, 12, 103, 102, 104, 5304, 5304, 551616, 111999264, 0, "IRR"},
      {484, 13, 241, 480, 484, 29040, 29040, 7027680, 3, 9, "IRR"},
      {8, 24, 7, 6, 8, 24, 24, 192, 2208, 0, "IRR"},
      {174, 24, 523, 172, 174, 45414, 228114, 23796936, 7, 10, "RED"},
  };
  return rows;
}

const std::vector<Table23Row>& table23_rows(int id) {
  static const std::vector<Table23Row> t2 = {
      {6, 85, +1, 7, {5, 6}, {36, 12}, "x^2+x+5", "x^2+29x+19", "MDS"},
      {16, 649, -1, 7, {14}, {48}, "x^2+x+6", "x^2+29x+48", "NMDS, 2-MDS"},
      {10, 3, +1, 11, {9, 10}, {100, 20}, "x^2+4x+6", "x^2+26x+94", "MDS"},
      {24, 6, -1, 11, {22}, {120}, "x^2+2x+10", "x^2+24x+120", "NMDS, 2-MDS"},
      {16, 426, +1, 17, {15, 16}, {256, 32}, "x^2+10x+6", "x^2+248x+40", "MDS"},
      {36, 193, -1, 17, {32, 36}, {144, 144}, "x^2+x+16", "x^2+103x+288", "4-MDS"},
      {40, 43081, -1, 19, {38}, {360}, "x^2+2x+18", "x^2+211x+360", "NMDS, 2-MDS"},
      {22, 381, +1, 23, {21, 22}, {484, 44}, "x^2+11x+11", "x^2+333x+195", "MDS"},
      {48, 697, -1, 23, {46}, {528}, "x^2+x+22", "x^2+70x+528", "NMDS, 2-MDS"},
      {28, 6821, +1, 29, {27, 28}, {784, 56}, "x^2+9x+19", "x^2+415x+425", "MDS"},
      {60, 46, -1, 29, {56, 60}, {420, 420}, "x^2+6x+28", "x^2+64x+840", "4-MDS"},
      {30, 915, +1, 31, {29, 30}, {900, 60}, "x^2+19x+11", "x^2+546x+414", "MDS"},
      {64, 384289, -1, 31, {62}, {960}, "x^2+3x+30", "x^2+623x+960", "NMDS, 2-MDS"},
      {36, 7619, +1, 37, {35, 36}, {1296, 72}, "x^2+23x+13", "x^2+874x+494", "MDS"},
      {76, 29321, -1, 37, {72, 76}, {684, 684}, "x^2+x+36", "x^2+519x+1368", "4-MDS"},
      {40, 1369205, +1, 41, {39, 40}, {1600, 80}, "x^2+23x+17", "x^2+1171x+509", "MDS"},
      {84, 1523449, -1, 41, {80, 84}, {840, 840}, "x^2+7x+40", "x^2+1237x+1680", "4-MDS"},
      {42, 2022, +1, 43, {41, 42}, {1764, 84}, "x^2+13x+29", "x^2+1260x+588", "MDS"},
      {88, 125563, -1, 43, {86}, {1848}, "x^2+x+42", "x^2+1420x+1848", "NMDS, 2-MDS"},
      {46, 2085, +1, 47, {45, 46}, {2116, 92}, "x^2+35x+11", "x^2+599x+1609", "MDS"},
      {96, 2554369, -1, 47, {94}, {2208}, "x^2+3x+46", "x^2+1601x+2208", "NMDS, 2-MDS"},
  };
  static const std::vector<Table23Row> t3 = {
      {52, 945867, +1, 53, {51, 52}, {2704, 104}, "x^2+38x+14", "x^2+1946x+862", "MDS"},
      {108, 200593, -1, 53, {104, 108}, {1404, 1404}, "x^2+x+52", "x^2+902x+2808", "4-MDS"},
      {58, 1849301, +1, 59, {57, 58}, {3364, 116}, "x^2+6x+52", "x^2+1363x+2117", "MDS"},
      {120, 5895841, -1, 59, {118}, {3480}, "x^2+12x+58", "x^2+2431x+3480", "NMDS, 2-MDS"},
      {60, 1210683, +1, 61, {59, 60}, {3600, 120}, "x^2+6x+54", "x^2+2202x+1518", "MDS"},
      {124, 782295, -1, 61, {120, 124}, {1860, 1860}, "x^2+2x+60", "x^2+3540x+3720", "4-MDS"},
      {66, 257765, +1, 67, {65, 66}, {4356, 132}, "x^2+53x+13", "x^2+1527x+2961", "MDS"},
      {136, 2916193, -1, 67, {134}, {4488}, "x^2+x+66", "x^2+3418x+4488", "NMDS, 2-MDS"},
      {70, 23218, +1, 71, {69, 70}, {4900, 140}, "x^2+57x+13", "x^2+1832x+3208", "MDS"},
      {144, 2429065, -1, 71, {142}, {5040}, "x^2+3x+70", "x^2+1565x+5040", "NMDS, 2-MDS"},
      {72, 917, +1, 73, {71, 72}, {5184, 144}, "x^2+39x+33", "x^2+769x+4559", "MDS"},
      {148, 27614737, -1, 73, {144, 148}, {2664, 2664}, "x^2+x+72", "x^2+5257x+5328", "4-MDS"},
      {78, 556413, +1, 79, {77, 78}, {6084, 156}, "x^2+18x+60", "x^2+3731x+2509", "MDS"},
      {160, 8784985, -1, 79, {158}, {6240}, "x^2+5x+78", "x^2+5930x+6240", "NMDS, 2-MDS"},
      {82, 8378, +1, 83, {81, 82}, {6724, 164}, "x^2+68x+14", "x^2+400x+6488", "MDS"},
      {168, 201961, -1, 83, {166}, {6888}, "x^2+x+82", "x^2+914x+6888", "NMDS, 2-MDS"},
      {88, 4121103, +1, 89, {87, 88}, {7744, 176}, "x^2+57x+31", "x^2+4062x+3858", "MDS"},
      {180, 2638645, -1, 89, {176, 180}, {3960, 3960}, "x^2+3x+88", "x^2+6500x+7920", "4-MDS"},
      {96, 28355, +1, 97, {95, 96}, {9216, 192}, "x^2+67x+29", "x^2+4044x+5364", "MDS"},
      {196, 18186729, -1, 97, {192, 196}, {4704, 4704}, "x^2+x+96", "x^2+4269x+9408", "4-MDS"},
  };
  if (id == 2) return t2;
  if (id == 3) return t3;
  fail(Errc::invalid_argument, "table id must be 2 or 3 here");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::convention: return "CONVENTION";
    case Verdict::approx: return "APPROX";
    case Verdict::info: return "INFO";
  }
  return "?";
}

Verdict TableRowResult::verdict() const {
  bool convention = false;
  for (const auto& f : fields) {
    if (f.verdict == Verdict::fail) return Verdict::fail;
    if (f.verdict == Verdict::convention) convention = true;
  }
  return convention ? Verdict::convention : Verdict::pass;
}

const FieldResult* TableRowResult::field(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name == name) return &f;
  return nullptr;
}

std::size_t TableReport::count(Verdict v) const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.verdict() == v;
  return c;
}

namespace {

std::string str(u64 x) { return std::to_string(x); }
std::string str(i128 x) {
  if (x < 0) return "-" + str(static_cast<u64>(-x));
  return str(static_cast<u64>(x));
}
std::string str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<u64>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + str(xs[i]);
  return s;
}

class RowBuilder {
 public:
  explicit RowBuilder(TableRowResult& r) : r_(r) {}

  void exact(const std::string& name, const std::string& expected, const std::string& computed) {
    r_.fields.push_back({name, expected, computed, expected == computed ? Verdict::pass : Verdict::fail});
  }
  void check(const std::string& name, bool ok, const std::string& computed) {
    r_.fields.push_back({name, "", computed, ok ? Verdict::pass : Verdict::fail});
  }
  void info(const std::string& name, const std::string& computed) {
    r_.fields.push_back({name, "", computed, Verdict::info});
  }
  void add(FieldResult f) { r_.fields.push_back(std::move(f)); }

  // Runs a step; a thrown library error becomes a failing field instead of
  // aborting the whole table.
  template <class F>
  void guarded(const std::string& name, F&& step) {
    try {
      step();
    } catch (const Error& e) {
      r_.fields.push_back({name, "", std::string("error: ") + e.what(), Verdict::fail});
    }
  }

 private:
  TableRowResult& r_;
};

// Z_{p^2} distribution: enumerated when affordable, otherwise the closed form
// backed by the enumeration of the p-multiple submodule.
struct RingDistribution {
  WeightDistribution wd;
  WeightDistribution closed;
  bool enumerated;
  bool consistent;  // enumeration == closed form, or p-multiples match C1
  std::string method;
};

RingDistribution ring_distribution(const CyclicCode& c2, const WeightDistribution& wd1, u64 e,
                                   const TableOptions& opt) {
  const u64 n = c2.length(), p = c2.prime();
  WeightDistribution closed = e == n ? theorem4_distribution(n, p).second : shs_distribution(n, p, e);
  const u128 cost = static_cast<u128>(c2.modulus()) * c2.modulus() * n;
  if (p <= opt.ring_enumeration_max_p && cost <= opt.budget) {
    WeightDistribution wd = weight_distribution_enumerate(c2, opt.budget);
    const bool same = wd == closed;
    return {std::move(wd), std::move(closed), true, same, "enumeration"};
  }
  const WeightDistribution sub = p_multiple_distribution(c2, opt.budget);
  const bool same = sub == wd1;
  WeightDistribution wd = closed;
  return {std::move(wd), std::move(closed), false, same, e == n ? "formula:two-weight-MDS" : "formula:ratio-order"};
}

std::string moments_text(const MomentCheck& mc) {
  return mc.ok() ? "ok" : "count_ok=" + str(mc.count_ok) + " first_moment_ok=" + str(mc.first_moment_ok);
}

}  // namespace

TableRowResult evaluate_table1_row(const Table1Row& row, const TableOptions& opt) {
  TableRowResult r{1, "(" + str(row.n) + "," + str(row.d) + "," + str(row.p) + ")", row.n, row.d, row.p, 0, {}};
  RowBuilder b(r);
  b.guarded("pipeline", [&] {
    const FundamentalUnit unit = fundamental_unit(row.d, opt.pell_bound);
    const RecurrenceSpec spec = recurrence_from_unit(unit);
    b.info("unit", "(" + str(unit.a) + "+" + str(unit.b) + "*sqrt(" + str(unit.d) + "))/2 norm " +
                       (unit.unit_norm > 0 ? "+1" : "-1"));
    const PeriodReport periods = wss_test(spec, row.p);
    b.exact("n", str(row.n), str(periods.kp));
    b.exact("k_p2", str(row.n), str(periods.kp2));
    b.exact("wss", "true", str(periods.is_wss));
    b.exact("poly", row.poly, is_irreducible(spec.char_poly(row.p)) ? "IRR" : "RED");

    const CyclicCode c1 = code_from_recurrence(spec, row.p);
    const WeightDistribution wd1 = weight_distribution_enumerate(c1, opt.budget);
    b.exact("weights", str(row.w1) + "," + str(row.w2), join(wd1.nonzero_weights()));
    b.exact("a1", str(row.a1), str(wd1.count(row.w1)));
    b.exact("a2", str(row.a2), str(wd1.count(row.w2)));
    b.check("moments_C1", pless_moments(wd1).ok(), moments_text(pless_moments(wd1)));
    b.info("class", classify(c1, wd1, opt.budget).label);

    const u64 e = root_ratio_order(c1.check());
    b.info("e", str(e));
    const CyclicCode c2 = code_from_recurrence(spec, row.p * row.p);
    const RingDistribution rd = ring_distribution(c2, wd1, e, opt);
    b.info("A_method", rd.method);
    b.check(rd.enumerated ? "C2_enumeration_vs_closed_form" : "pC2_subcheck", rd.consistent,
            rd.enumerated ? rd.wd.to_string() : "p-multiples match C1");
    b.exact("A1", str(row.A1), str(rd.wd.count(row.w1)));
    const u64 A2 = rd.wd.count(row.w2);
    if (row.A2_exponent == 0) {
      b.exact("A2", str(row.A2), str(A2));
    } else {
      const double scaled = static_cast<double>(A2) / std::pow(10.0, row.A2_exponent);
      const bool close = static_cast<u64>(std::floor(scaled)) == row.A2;
      b.add({"A2", "~" + str(row.A2) + "e" + std::to_string(row.A2_exponent), str(A2),
             close ? Verdict::approx : Verdict::fail});
    }
    b.check("moments_C2", pless_moments(rd.wd).ok(), moments_text(pless_moments(rd.wd)));
  });
  return r;
}

TableRowResult evaluate_table23_row(int table, const Table23Row& row, const TableOptions& opt) {
  TableRowResult r{table,
                   "(" + str(row.n) + "," + str(row.d) + "," + (row.symbol > 0 ? "+1" : "-1") + "," + str(row.p) + ")",
                   row.n, row.d, row.p, row.symbol, {}};
  RowBuilder b(r);
  b.guarded("pipeline", [&] {
    const u64 p = row.p, m = p * p, n = row.n;
    const MonicQuadratic h = parse_quadratic(row.h, p);
    const MonicQuadratic H = parse_quadratic(row.H, m);

    b.exact("order_h", str(n), str(poly_order(h)));
    b.exact("symbol", row.symbol > 0 ? "1" : "-1", std::to_string(legendre(h.discriminant().value(), p)));
    b.check("H_congruent_h", H.reduce(p) == h, H.reduce(p).body());
    b.check("H_divides_x^n-1", divides_x_pow_minus_one(H, n), str(divides_x_pow_minus_one(H, n)));
    b.exact("order_H", str(n), str(poly_order(H)));
    b.guarded("hensel_lift", [&] { b.exact("hensel_lift", H.body(), hensel_lift(h, n).body()); });
    b.exact("d", str(row.d), str(signed_squarefree_part(H.integer_discriminant())));
    b.info("delta", str(H.integer_discriminant()));

    const PeriodReport periods = wss_test(RecurrenceSpec::from_char_poly(H), p);
    b.exact("k_p", str(n), str(periods.kp));
    b.exact("k_p2", str(n), str(periods.kp2));

    // Our own canonical construction for the same (p, n); the listed h
    // depends on an unstated choice, so a different but equally valid h is
    // a convention difference.
    b.guarded("canonical_h", [&] {
      const MonicQuadratic mine = row.symbol > 0 ? construct_reducible(p, n) : construct_irreducible(p, n);
      const bool same_props = poly_order(mine) == n && is_irreducible(mine) == (row.symbol < 0);
      b.add({"canonical_h", h.body(), mine.body(),
             mine == h ? Verdict::pass : same_props ? Verdict::convention : Verdict::fail});
    });

    const CyclicCode c1 = code_from_check(h);
    const WeightDistribution wd1 = weight_distribution_enumerate(c1, opt.budget);
    b.exact("weights", join(row.weights), join(wd1.nonzero_weights()));
    std::vector<u64> freqs;
    for (u64 w : wd1.nonzero_weights()) freqs.push_back(wd1.count(w));
    b.exact("freqs", join(row.freqs), join(freqs));
    b.check("moments_C1", pless_moments(wd1).ok(), moments_text(pless_moments(wd1)));
    const ClassificationReport cls = classify(c1, wd1, opt.budget);
    b.exact("class", row.cls, cls.label);

    const u64 e = root_ratio_order(h);
    b.info("e", str(e));
    b.exact("C1_closed_form", wd1.to_string(),
            (e == n ? theorem4_distribution(n, p).first : corollary2_distribution(n, p, e)).to_string());
    const CyclicCode c2 = code_from_check(H);
    const RingDistribution rd = ring_distribution(c2, wd1, e, opt);
    b.info("A_method", rd.method);
    b.check(rd.enumerated ? "C2_enumeration_vs_closed_form" : "pC2_subcheck", rd.consistent,
            rd.enumerated ? rd.wd.to_string() : "p-multiples match C1");
    b.info("C2", rd.wd.to_string());
    b.info("A1", str(rd.wd.count(row.weights.front())));
    b.info("A2", row.weights.size() > 1 ? str(rd.wd.count(row.weights.back())) : "");
    b.info("poly", is_irreducible(h) ? "IRR" : "RED");
    b.check("moments_C2", pless_moments(rd.wd).ok(), moments_text(pless_moments(rd.wd)));
  });
  return r;
}

TableReport run_table(int id, const TableOptions& opt) {
  TableReport report{id, {}};
  if (id == 1) {
    for (const auto& row : table1_rows()) report.rows.push_back(evaluate_table1_row(row, opt));
  } else {
    for (const auto& row : table23_rows(id)) report.rows.push_back(evaluate_table23_row(id, row, opt));
  }
  return report;
}

}  // namespace wss
