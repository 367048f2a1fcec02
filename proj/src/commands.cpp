#include "commands.hpp"

#include <sstream>

#include "wsscodes/inverse.hpp"
#include "wsscodes/quadpoly.hpp"
#include "wsscodes/tables.hpp"

namespace wss::cmd {

namespace {

std::string str(i128 x) {
  if (x < 0) return "-" + std::to_string(static_cast<u64>(-x));
  return std::to_string(static_cast<u64>(x));
}

// i128 does not fit a JSON number in general; small values stay numeric.
Json big(i128 x) {
  if (x >= INT64_MIN && x <= INT64_MAX) return static_cast<i64>(x);
  return str(x);
}

// Table cells are kept as strings internally; integers go out as numbers.
Json cell(const std::string& s) {
  if (s.empty()) return nullptr;
  std::size_t pos = 0;
  try {
    const long long v = std::stoll(s, &pos);
    if (pos == s.size() && s.find_first_not_of("+-0123456789") == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_escape(v.get<std::string>());
  if (v.is_array() || v.is_object()) return csv_escape(v.dump());
  return v.dump();
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

u64 require_prime_or_square(u64 m) {
  const auto [p, e] = prime_power_base(m);
  if (e > 2 || p == 2) fail(Errc::invalid_argument, "modulus must be an odd prime p or p^2, got " + std::to_string(m));
  return p;
}

Json period_json(const PeriodReport& r) {
  return Json{{"p", r.p}, {"k_p", r.kp}, {"k_p2", r.kp2}, {"is_wss", r.is_wss}, {"assumption_note", r.assumption_note}};
}

std::string wss_line(const Json& rec) {
  std::string s;
  for (const auto& [k, v] : rec.items()) {
    if (k == "assumption_note") continue;
    s += (s.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s + " [" + rec["assumption_note"].get<std::string>() + "]";
}

Json distribution_json(const WeightDistribution& wd) {
  Json j = Json::object();
  for (const auto& [w, c] : wd.counts)
    if (w != 0) j[std::to_string(w)] = c;
  return j;
}

Json finding_json(const DoubleRootFinding& f) {
  Json lifts = Json::array();
  for (const auto& q : f.lifts) lifts.push_back(q.body());
  return Json{{"p", f.p},
              {"square", MonicQuadratic(-2, 1, f.p * f.p).to_string()},
              {"lifts", lifts},
              {"square_divides", f.square_divides},
              {"remainder_of_square", f.remainder_of_square.to_string()},
              {"remainder_is_p_times_x_minus_1", f.remainder_is_p_times_x_minus_1}};
}

std::string finding_text(const DoubleRootFinding& f) {
  std::string s = "double-root finding at p = " + std::to_string(f.p) + ": (x-1)^2 " +
                  (f.square_divides ? "divides" : "does NOT divide") + " x^" + std::to_string(f.p) + "-1 mod " +
                  std::to_string(f.p * f.p) + "; remainder " + f.remainder_of_square.to_string() +
                  (f.remainder_is_p_times_x_minus_1 ? " = p(x-1)" : "") + "; lifts of (x-1)^2: ";
  if (f.lifts.empty()) return s + "none";
  for (std::size_t i = 0; i < f.lifts.size(); ++i) s += (i ? ", " : "") + f.lifts[i].body();
  return s;
}

// Closed-form distribution of the code with check polynomial f over Z_p or
// Z_{p^2}, keyed on the order e of the root ratio of f mod p.
WeightDistribution closed_form(const MonicQuadratic& f, u64 n, u64 p) {
  const MonicQuadratic h = f.modulus() == p ? f : f.reduce(p);
  const u64 e = root_ratio_order(h);
  if (e <= 1) fail(Errc::invalid_argument, "no closed form for a repeated root");
  if (f.modulus() == p) return e == n ? theorem4_distribution(n, p).first : corollary2_distribution(n, p, e);
  return e == n ? theorem4_distribution(n, p).second : shs_distribution(n, p, e);
}

Json classification_json(const ClassificationReport& r) {
  Json q = nullptr;
  if (r.quotient) q = Json{{"n", r.quotient->n}, {"k", r.quotient->k}, {"d", r.quotient->d}, {"is_mds", r.quotient->is_mds}};
  return Json{{"n", r.n},
              {"m", r.m},
              {"p", r.p},
              {"min_distance", r.min_distance},
              {"weights", r.nonzero_weights},
              {"is_mds", r.is_mds},
              {"is_amds", r.is_amds},
              {"is_nmds", r.is_nmds},
              {"dual_distance", r.dual_distance},
              {"is_projective", r.is_projective},
              {"repetition_factor", r.repetition_factor},
              {"weight_difference_ell", r.weight_difference_ell ? Json(*r.weight_difference_ell) : Json(nullptr)},
              {"weight_law_ok", r.weight_law_ok},
              {"quotient", q},
              {"extremal", r.extremal},
              {"label", r.label}};
}

std::string params(u64 n, const std::vector<u64>& weights, u64 m) {
  std::string w;
  if (weights.size() == 1) {
    w = std::to_string(weights.front());
  } else {
    w = "{";
    for (std::size_t i = 0; i < weights.size(); ++i) w += (i ? "," : "") + std::to_string(weights[i]);
    w += "}";
  }
  return "[" + std::to_string(n) + ",2," + w + "]_" + std::to_string(m);
}

std::string classification_text(const ClassificationReport& r) {
  std::string s = params(r.n, r.nonzero_weights, r.m) + " " + r.label;
  if (r.repetition_factor > 1 && r.quotient)
    s += "; " + std::to_string(r.repetition_factor) + "-fold repetition of [" + std::to_string(r.quotient->n) + ",2," +
         std::to_string(r.quotient->d) + "]_" + std::to_string(r.m) + (r.quotient->is_mds ? " MDS" : "");
  s += "\nmin_distance: " + std::to_string(r.min_distance);
  s += "\ndual_distance: " + std::to_string(r.dual_distance) + (r.dual_distance >= 3 ? " (>= 3)" : "");
  s += "\nprojective: " + yes(r.is_projective);
  s += "\nmds: " + yes(r.is_mds) + ", amds: " + yes(r.is_amds) + ", nmds: " + yes(r.is_nmds);
  if (r.weight_difference_ell) s += "\nweight difference ell: " + std::to_string(*r.weight_difference_ell);
  s += "\nweight law: " + std::string(r.weight_law_ok ? "ok" : "VIOLATED");
  if (r.extremal) s += "\nextremal NMDS (n = 2p+2)";
  return s;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  fail(Errc::invalid_argument, "unknown format '" + s + "' (expected csv, json or text)");
}

std::string Document::render(Format f) const {
  std::string out;
  switch (f) {
    case Format::text:
      out = text;
      if (!out.empty() && out.back() != '\n') out += '\n';
      break;
    case Format::json:
      for (const auto& r : records) out += r.dump() + "\n";
      break;
    case Format::csv: {
      std::vector<std::string> cols = columns;
      if (cols.empty() && !records.empty())
        for (const auto& [k, v] : records.front().items()) cols.push_back(k);
      for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_escape(cols[i]);
      out += "\n";
      for (const auto& r : records) {
        for (std::size_t i = 0; i < cols.size(); ++i)
          out += (i ? "," : "") + (r.contains(cols[i]) ? csv_value(r[cols[i]]) : std::string());
        out += "\n";
      }
      break;
    }
  }
  return out;
}

Document period(i64 A, i64 B, u64 modulus) {
  if (modulus < 2) fail(Errc::invalid_argument, "modulus must be at least 2");
  const u64 k = wss::period(RecurrenceSpec{A, B}, modulus);
  Document doc;
  doc.records.push_back(Json{{"A", A}, {"B", B}, {"modulus", modulus}, {"period", k}});
  doc.text = std::to_string(k);
  return doc;
}

Document wss_by_d(u64 d, u64 p, const Options& opt) {
  if (!is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not prime");
  const FundamentalUnit unit = fundamental_unit(d, opt.pell_bound);
  const RecurrenceSpec spec = recurrence_from_unit(unit);
  const PeriodReport r = wss_test(spec, p);
  Json rec{{"p", p}, {"d", d}, {"A", spec.A}, {"B", spec.B}};
  Json pj = period_json(r);
  pj.erase("p");
  rec.update(pj);
  Document doc;
  doc.text = wss_line(rec);
  doc.records.push_back(std::move(rec));
  return doc;
}

Document wss_by_coeffs(i64 A, i64 B, u64 p) {
  if (!is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not prime");
  const RecurrenceSpec spec{A, B};
  const PeriodReport r = wss_test(spec, p);
  Json rec{{"p", p}, {"d", big(signed_squarefree_part(spec.discriminant()))}, {"A", A}, {"B", B}};
  Json pj = period_json(r);
  pj.erase("p");
  rec.update(pj);
  Document doc;
  doc.text = wss_line(rec);
  doc.records.push_back(std::move(rec));
  return doc;
}

Document double_root(u64 p) {
  if (p < 3 || !is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not an odd prime");
  const DoubleRootFinding f = double_root_finding(p);
  Document doc;
  doc.records.push_back(finding_json(f));
  doc.text = finding_text(f);
  doc.outcome = f.square_divides ? Outcome::pass : Outcome::discrepancy;
  doc.summary = f.square_divides ? "(x-1)^2 lifts to itself" : "discrepancy: (x-1)^2 does not lift to itself";
  return doc;
}

Document construct(u64 p, const std::string& kind_name, u64 D, const Options& opt) {
  const ConstructionCase kind = parse_case(kind_name);
  Document doc;
  if (kind == ConstructionCase::double_root) {
    if (p < 3 || !is_prime(p)) fail(Errc::invalid_argument, std::to_string(p) + " is not an odd prime");
    const DoubleRootFinding f = double_root_finding(p);
    if (f.lifts.empty()) {
      Json rec{{"p", p}, {"case", "double_root"}, {"D", D == 0 ? p : D}, {"certificate", nullptr}};
      rec["double_root"] = finding_json(f);
      doc.records.push_back(std::move(rec));
      doc.text = "no certificate: nothing congruent to (x-1)^2 mod " + std::to_string(p) + " divides x^" +
                 std::to_string(p) + "-1 mod " + std::to_string(p * p) + "\n" + finding_text(f);
      doc.outcome = Outcome::discrepancy;
      doc.summary = "discrepancy: the double-root construction has no lift at p = " + std::to_string(p);
      return doc;
    }
  }
  const InverseCertificate c = construct_certificate(p, kind, D);
  Json rec{{"p", c.p},
           {"case", to_string(c.kind)},
           {"D", c.D},
           {"h", c.h.to_string()},
           {"H", c.H.to_string()},
           {"A", c.A},
           {"B", c.B},
           {"delta", big(c.delta)},
           {"d", c.d},
           {"k_p", c.k_p},
           {"k_p2", c.k_p2}};
  std::string text = "p: " + std::to_string(c.p) + "\ncase: " + to_string(c.kind) + "\nD: " + std::to_string(c.D) +
                     "\nh: " + c.h.to_string() + "\nH: " + c.H.to_string() + "\nA: " + std::to_string(c.A) +
                     "\nB: " + std::to_string(c.B) + "\ndelta: " + str(c.delta) + "\nd: " + std::to_string(c.d) +
                     "\nk_p: " + std::to_string(c.k_p) + "\nk_p2: " + std::to_string(c.k_p2);

  // The code over F_p attached to the certificate, when it is cheap enough.
  const RecurrenceSpec spec{c.A, c.B};
  const u128 cost = static_cast<u128>(p) * p * c.D;
  if (c.kind != ConstructionCase::double_root && cost <= opt.budget) {
    const CyclicCode code = code_from_recurrence(spec, p);
    const WeightDistribution wd = weight_distribution_enumerate(code, opt.budget);
    const ClassificationReport cls = wss::classify(code, wd, opt.budget);
    const std::string code_params = params(cls.n, cls.nonzero_weights, cls.m);
    rec["code"] = code_params;
    rec["code_class"] = cls.label;
    text += "\ncode: " + code_params + " " + cls.label;
  }
  if (c.double_root) {
    rec["double_root"] = finding_json(*c.double_root);
    text += "\n" + finding_text(*c.double_root);
    if (!c.double_root->square_divides) {
      doc.outcome = Outcome::discrepancy;
      doc.summary = "discrepancy: certificate found, but (x-1)^2 itself does not lift";
    }
  }
  doc.records.push_back(std::move(rec));
  doc.text = std::move(text);
  return doc;
}

Document weights(const std::string& poly, u64 modulus, const std::string& method, const Options& opt) {
  if (method != "enumerate" && method != "formula" && method != "auto")
    fail(Errc::invalid_argument, "unknown method '" + method + "' (expected enumerate, formula or auto)");
  const MonicQuadratic f = parse_quadratic(poly, modulus);
  const u64 m = f.modulus();
  const u64 p = require_prime_or_square(m);
  const u64 n = poly_order(f);
  const CyclicCode code = code_from_check(f);
  const u128 cost = static_cast<u128>(m) * m * n;

  Document doc;
  Json rec{{"poly", f.to_string()}, {"modulus", m}, {"n", n}};
  WeightDistribution wd;
  std::string used;
  std::optional<bool> subcheck;
  if (method == "enumerate" || (method == "auto" && cost <= opt.budget)) {
    wd = weight_distribution_enumerate(code, opt.budget);
    used = "enumerate";
  } else {
    wd = closed_form(f, n, p);
    used = "formula";
    if (m != p) {
      const WeightDistribution sub = p_multiple_distribution(code, opt.budget);
      const WeightDistribution mod_p = weight_distribution_enumerate(code.reduce_mod_p(), opt.budget);
      subcheck = sub == mod_p;
    }
  }
  const MomentCheck mc = pless_moments(wd);
  rec["method"] = used;
  rec["distribution"] = wd.to_string();
  rec["weights"] = distribution_json(wd);
  rec["moments_ok"] = mc.ok();
  rec["pC2_subcheck"] = subcheck ? Json(*subcheck) : Json(nullptr);
  doc.records.push_back(std::move(rec));
  doc.text = wd.to_string();
  if (!mc.ok() || (subcheck && !*subcheck)) {
    doc.outcome = Outcome::fail;
    doc.summary = !mc.ok() ? "verification failed: moment identities" : "verification failed: pC2 subcheck";
  } else {
    doc.summary = "method " + used + (subcheck ? ", pC2 subcheck passed" : "");
  }
  return doc;
}

Document classify(const std::string& poly, u64 modulus, const Options& opt) {
  const MonicQuadratic f = parse_quadratic(poly, modulus);
  require_prime_or_square(f.modulus());
  const CyclicCode code = code_from_check(f);
  const WeightDistribution wd = weight_distribution_enumerate(code, opt.budget);
  const ClassificationReport r = wss::classify(code, wd, opt.budget);
  Json rec{{"poly", f.to_string()}};
  rec.update(classification_json(r));
  rec["distribution"] = wd.to_string();
  Document doc;
  doc.records.push_back(std::move(rec));
  doc.text = classification_text(r) + "\ndistribution: " + wd.to_string();
  if (!r.weight_law_ok) {
    doc.outcome = Outcome::fail;
    doc.summary = "verification failed: weight law";
  }
  return doc;
}

Document table(int id, const Options& opt) {
  if (id < 1 || id > 3) fail(Errc::invalid_argument, "table id must be 1, 2 or 3");
  TableOptions topt;
  topt.budget = opt.budget;
  topt.pell_bound = opt.pell_bound;
  const TableReport report = run_table(id, topt);

  Document doc;
  doc.columns = {"n", "d", "symbol", "p", "w1", "w2", "a1", "a2", "A1", "A2", "poly", "class", "verdict", "notes"};
  std::string text;
  for (const auto& row : report.rows) {
    auto computed = [&](const std::string& name) {
      const FieldResult* f = row.field(name);
      return f ? f->computed : std::string();
    };
    std::vector<std::string> w = split(computed("weights"), ',');
    std::vector<std::string> a =
        id == 1 ? std::vector<std::string>{computed("a1"), computed("a2")} : split(computed("freqs"), ',');
    w.resize(2);
    a.resize(2);

    std::string notes;
    Json fields = Json::array();
    for (const auto& f : row.fields) {
      fields.push_back(Json{{"name", f.name}, {"expected", f.expected}, {"computed", f.computed},
                            {"verdict", to_string(f.verdict)}});
      if (f.verdict == Verdict::pass || f.verdict == Verdict::info) continue;
      notes += (notes.empty() ? "" : "; ") + f.name + ": listed " + f.expected + ", computed " + f.computed + " (" +
               to_string(f.verdict) + ")";
    }
    Json rec{{"table", id},
             {"n", row.n},
             {"d", row.d},
             {"symbol", id == 1 ? Json(nullptr) : Json(row.symbol)},
             {"p", row.p},
             {"w1", cell(w[0])},
             {"w2", cell(w[1])},
             {"a1", cell(a[0])},
             {"a2", cell(a[1])},
             {"A1", cell(computed("A1"))},
             {"A2", cell(computed("A2"))},
             {"poly", computed("poly")},
             {"class", computed("class")},
             {"verdict", to_string(row.verdict())},
             {"notes", notes},
             {"fields", fields}};
    doc.records.push_back(std::move(rec));

    text += "table " + std::to_string(id) + " " + row.row + ": " + to_string(row.verdict()) + "\n";
    for (const auto& f : row.fields)
      if (f.verdict != Verdict::pass && f.verdict != Verdict::info)
        text += "    " + f.name + ": listed " + f.expected + ", computed " + f.computed + " (" +
                to_string(f.verdict) + ")\n";
  }
  doc.summary = "table " + std::to_string(id) + ": " + std::to_string(report.rows.size()) + " rows, " +
                std::to_string(report.count(Verdict::pass)) + " PASS, " +
                std::to_string(report.count(Verdict::convention)) + " CONVENTION, " +
                std::to_string(report.count(Verdict::fail)) + " FAIL";
  doc.text = text;
  doc.outcome = report.all_passed() ? Outcome::pass : Outcome::fail;
  return doc;
}

Document prationality(u64 d, u64 p, const std::vector<std::string>& requested, const Options& opt) {
  if (p < 5 || !is_prime(p)) fail(Errc::invalid_argument, "p-rationality needs a prime p >= 5");
  std::vector<std::string> methods = requested;
  if (methods.empty()) {
    methods = {"period", "fibonacci"};
    if (d == 5 && p % 5 == 1) methods.push_back("alpha");
  }
  Document doc;
  std::string text;
  std::optional<bool> first;
  bool agree = true;
  for (const auto& method : methods) {
    Json rec{{"d", d}, {"p", p}, {"method", method}};
    bool rational = false;
    std::string detail;
    if (method == "period") {
      const PeriodReport r = wss_test(recurrence_from_unit(fundamental_unit(d, opt.pell_bound)), p);
      rational = !r.is_wss;
      detail = "k(p) = " + std::to_string(r.kp) + (r.is_wss ? " = " : " != ") + "k(p^2) = " + std::to_string(r.kp2);
    } else if (method == "fibonacci") {
      const PRationalityVerdict v = fibonacci_prationality(d, p, opt.pell_bound);
      rational = v.p_rational;
      detail = "F_" + std::to_string(v.index) + " = " + std::to_string(v.term_mod_p2) + " (mod " +
               std::to_string(p * p) + ")";
    } else if (method == "alpha") {
      if (d != 5) fail(Errc::invalid_argument, "the alpha criterion is only available for d = 5");
      const AlphaCriterion c = q5_alpha_criterion(p);
      rational = !c.congruence_holds;
      detail = "alpha(1)+2alpha(5) = " + std::to_string(c.lhs) + ", alpha(4)-alpha(2) = " + std::to_string(c.rhs) +
               " (mod " + std::to_string(p) + ")";
    } else {
      fail(Errc::invalid_argument, "unknown method '" + method + "' (expected period, fibonacci or alpha)");
    }
    rec["p_rational"] = rational;
    rec["detail"] = detail;
    rec["assumption_note"] = kUncheckedHypothesis;
    doc.records.push_back(std::move(rec));
    text += method + ": " + (rational ? "p-rational" : "not p-rational") + " (" + detail + ")\n";
    if (!first) first = rational;
    agree = agree && *first == rational;
  }
  text += std::string("agreement: ") + (agree ? "all methods agree" : "DISAGREEMENT between methods");
  text += "\nnote: " + std::string(kUncheckedHypothesis);
  doc.text = text;
  if (!agree) {
    doc.outcome = Outcome::discrepancy;
    doc.summary = "discrepancy: p-rationality criteria disagree for d = " + std::to_string(d) + ", p = " +
                  std::to_string(p);
  }
  return doc;
}

namespace {

Json alpha_json(const AlphaCriterion& c, bool by_period, bool by_fib) {
  return Json{{"p", c.p},
              {"alpha", c.alpha},
              {"lhs", c.lhs},
              {"rhs", c.rhs},
              {"congruence_holds", c.congruence_holds},
              {"period_not_rational", by_period},
              {"fibonacci_not_rational", by_fib},
              {"agrees", c.congruence_holds == by_period && c.congruence_holds == by_fib}};
}

std::string alpha_line(const AlphaCriterion& c, bool by_period, bool by_fib) {
  std::string a;
  for (std::size_t i = 0; i < c.alpha.size(); ++i) a += (i ? "," : "") + std::to_string(c.alpha[i]);
  return "p=" + std::to_string(c.p) + " alpha=[" + a + "] alpha(1)+2alpha(5)=" + std::to_string(c.lhs) +
         " alpha(4)-alpha(2)=" + std::to_string(c.rhs) + " congruence=" + yes(c.congruence_holds) +
         " period_says_not_rational=" + yes(by_period) + " fibonacci_says_not_rational=" + yes(by_fib);
}

}  // namespace

Document alpha(u64 p) {
  const AlphaCriterion c = q5_alpha_criterion(p);
  const RecurrenceSpec fib = RecurrenceSpec::fibonacci();
  const bool by_period = wss_test(fib, p).is_wss;
  const bool by_fib = term(fib, p * p, p - 1) == 0;
  Document doc;
  doc.records.push_back(alpha_json(c, by_period, by_fib));
  doc.text = alpha_line(c, by_period, by_fib);
  if (c.congruence_holds != by_period || c.congruence_holds != by_fib) {
    doc.outcome = Outcome::discrepancy;
    doc.summary = "discrepancy: the alpha congruence disagrees with the period criterion at p = " + std::to_string(p);
  }
  return doc;
}

Document alpha_scan(u64 p_max) {
  const AlphaScanReport r = alpha_crosscheck(p_max);
  Document doc;
  std::string text = "checked " + std::to_string(r.primes_checked) + " primes p = 1 (mod 5) up to " +
                     std::to_string(p_max) + "; " + std::to_string(r.discrepancies.size()) + " disagreement(s)";
  for (const auto& d : r.discrepancies) {
    doc.records.push_back(alpha_json(d.criterion, d.period_not_rational, d.fibonacci_not_rational));
    text += "\n" + alpha_line(d.criterion, d.period_not_rational, d.fibonacci_not_rational);
  }
  doc.columns = {"p", "alpha", "lhs", "rhs", "congruence_holds", "period_not_rational", "fibonacci_not_rational",
                 "agrees"};
  doc.text = text;
  doc.summary = "alpha scan: " + std::to_string(r.primes_checked) + " primes, " +
                std::to_string(r.discrepancies.size()) + " disagreement(s)";
  if (!r.discrepancies.empty()) doc.outcome = Outcome::discrepancy;
  return doc;
}

}  // namespace wss::cmd
