#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "wsscodes/inverse.hpp"
#include "wsscodes/quadpoly.hpp"
#include "wsscodes/tables.hpp"

using namespace wss;

TEST_CASE("certificates verify themselves") {
  for (u64 p : {7u, 11u, 13u, 31u, 101u}) {
    for (auto kind : {ConstructionCase::reducible, ConstructionCase::irreducible}) {
      const InverseCertificate c = construct_certificate(p, kind);
      CHECK(c.k_p == c.D);
      CHECK(c.k_p2 == c.D);
      CHECK(c.delta > 0);
      CHECK(c.delta == static_cast<i128>(c.A) * c.A - 4 * static_cast<i128>(c.B));
      CHECK(c.d == oracle::squarefree_part(static_cast<u64>(c.delta)));
      // independent re-check of both periods
      CHECK(oracle::period(c.A, c.B, p, p * p) == c.D);
      CHECK(oracle::period(c.A, c.B, p * p, p * p * p * p) == c.D);
      CHECK(c.H.reduce(p) == c.h);
    }
  }
  const InverseCertificate c31 = construct_certificate(31, ConstructionCase::reducible, 30);
  CHECK(c31.D == 30);
  const InverseCertificate c13 = construct_certificate(13, ConstructionCase::irreducible, 28);
  CHECK(c13.k_p == 28);
  CHECK_THROWS_AS(construct_certificate(13, ConstructionCase::irreducible, 4), Error);
  CHECK_THROWS_AS(construct_certificate(15, ConstructionCase::reducible), Error);
}

TEST_CASE("double-root case") {
  const InverseCertificate c3 = construct_certificate(3, ConstructionCase::double_root);
  CHECK(c3.A == 10);
  CHECK(c3.B == 1);
  CHECK(c3.delta == 96);
  CHECK(c3.d == 6);
  CHECK(c3.k_p == 3);
  CHECK(c3.k_p2 == 3);
  REQUIRE(c3.double_root);
  CHECK_FALSE(c3.double_root->square_divides);
  CHECK(c3.double_root->remainder_is_p_times_x_minus_1);

  for (u64 p : {3u, 5u, 7u}) {
    const DoubleRootFinding f = double_root_finding(p);
    CHECK_FALSE(f.square_divides);
    CHECK(f.remainder_is_p_times_x_minus_1);
    for (const auto& g : f.lifts) CHECK_FALSE(g == MonicQuadratic(-2, 1, p * p));
  }
  CHECK_THROWS_AS(construct_certificate(5, ConstructionCase::double_root), Error);
}

TEST_CASE("positive discriminant rule") {
  CHECK(positive_discriminant_lift(MonicQuadratic(1, 1, 9)) == std::pair<i64, i64>{10, 1});
  CHECK(positive_discriminant_lift(MonicQuadratic(29, 19, 49)) == std::pair<i64, i64>{29, 19});
  const auto [A, B] = positive_discriminant_lift(MonicQuadratic(0, 40, 49));
  CHECK(A == 49);
  CHECK(B == 40);
}

TEST_CASE("golden tables") {
  CHECK(table1_rows().size() == 6);
  CHECK(table23_rows(2).size() == 21);
  CHECK(table23_rows(3).size() == 20);
  for (int id : {2, 3}) {
    const TableReport r = run_table(id);
    CHECK(r.all_passed());
    for (const auto& row : r.rows) {
      INFO(row.row);
      for (const char* f : {"order_h", "H_congruent_h", "H_divides_x^n-1", "order_H", "hensel_lift", "d", "weights",
                            "freqs", "class"})
        REQUIRE(row.field(f) != nullptr);
      CHECK(row.field("d")->verdict == Verdict::pass);
      CHECK(row.field("class")->verdict == Verdict::pass);
    }
  }
  const auto row = evaluate_table1_row(table1_rows()[0]);
  CHECK(row.verdict() == Verdict::pass);
  CHECK(row.field("A1")->computed == "1176");
  CHECK(row.field("A2")->computed == "27384");
}

TEST_CASE("a wrong golden value is reported") {
  Table23Row bad = table23_rows(2)[0];
  bad.freqs = {36, 11};
  const TableRowResult r = evaluate_table23_row(2, bad);
  CHECK(r.verdict() == Verdict::fail);
  CHECK(r.field("freqs")->verdict == Verdict::fail);
  Table23Row bad_d = table23_rows(2)[0];
  bad_d.d = 84;
  CHECK(evaluate_table23_row(2, bad_d).field("d")->verdict == Verdict::fail);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("table CSV round trip") {
  const cmd::Document doc = cmd::table(2, {});
  const std::string csv = doc.render(cmd::Format::csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  const auto header = split_csv_line(line);
  CHECK(header == std::vector<std::string>{"n", "d", "symbol", "p", "w1", "w2", "a1", "a2", "A1", "A2", "poly",
                                           "class", "verdict", "notes"});
  std::size_t i = 0;
  while (std::getline(in, line)) {
    REQUIRE(i < doc.records.size());
    const auto cells = split_csv_line(line);
    REQUIRE(cells.size() == header.size());
    const auto& rec = doc.records[i++];
    for (std::size_t k = 0; k < header.size(); ++k) {
      const auto& v = rec[header[k]];
      const std::string expected = v.is_null() ? "" : v.is_string() ? v.get<std::string>() : v.dump();
      CHECK(cells[k] == expected);
    }
  }
  CHECK(i == 21);
  CHECK(doc.render(cmd::Format::csv) == csv);

  const std::string json = doc.render(cmd::Format::json);
  std::istringstream jin(json);
  std::size_t lines = 0;
  while (std::getline(jin, line)) {
    const auto rec = cmd::Json::parse(line);
    CHECK(rec["table"] == 2);
    ++lines;
  }
  CHECK(lines == 21);
}

TEST_CASE("command documents") {
  CHECK(cmd::period(-2, -1, 13).text == "28");
  CHECK(cmd::weights("x^2+x+5", 7, "auto", {}).text == "5:36,6:12");
  cmd::Options tight;
  tight.budget = 1000;
  const auto formula = cmd::weights("x^2+29x+19 (mod 49)", 0, "auto", tight);
  CHECK(formula.text == "5:288,6:2112");
  CHECK(formula.records[0]["method"] == "formula");
  CHECK(formula.records[0]["pC2_subcheck"] == true);
  CHECK_THROWS_AS(cmd::weights("x^2+29x+19 (mod 49)", 0, "enumerate", tight), Error);
  CHECK(cmd::construct(5, "double_root", 0, {}).outcome == cmd::Outcome::discrepancy);
  CHECK(cmd::construct(3, "double_root", 0, {}).outcome == cmd::Outcome::discrepancy);
  CHECK(cmd::construct(31, "reducible", 30, {}).outcome == cmd::Outcome::pass);
  CHECK(cmd::prationality(5, 11, {}, {}).outcome == cmd::Outcome::discrepancy);
  CHECK(cmd::prationality(5, 31, {}, {}).outcome == cmd::Outcome::pass);
  CHECK(cmd::alpha_scan(10000).outcome == cmd::Outcome::discrepancy);
  CHECK_THROWS_AS(cmd::prationality(8, 11, {"alpha"}, {}), Error);
}
