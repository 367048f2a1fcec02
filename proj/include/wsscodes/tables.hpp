#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsscodes/codes.hpp"
#include "wsscodes/pell.hpp"

namespace wss {

/// Golden row of the WSS(d) table: codes from the unit recurrence of d.
struct Table1Row {
  u64 n, d, p;
  u64 w1, w2;
  u64 a1, a2;
  u64 A1;
  u64 A2;               // exact value, or the mantissa when approximate
  int A2_exponent = 0;  // nonzero: A2 is only known as ~ A2 x 10^A2_exponent
  const char* poly;     // "IRR" / "RED"
};

/// Golden row of the WSS(d)* tables: a listed h and its lift H.
struct Table23Row {
  u64 n, d;
  int symbol;
  u64 p;
  std::vector<u64> weights;
  std::vector<u64> freqs;
  const char* h;
  const char* H;
  const char* cls;
};

const std::vector<Table1Row>& table1_rows();
/// id 2 or 3
const std::vector<Table23Row>& table23_rows(int id);

enum class Verdict { pass, fail, convention, approx, info };
std::string to_string(Verdict v);

struct FieldResult {
  std::string name;
  std::string expected;  // empty when there is nothing to compare against
  std::string computed;
  Verdict verdict;
};

struct TableRowResult {
  int table;
  std::string row;  // "(n,d,p)" or "(n,d,symbol,p)"
  u64 n, d, p;
  int symbol;  // 0 for table 1
  std::vector<FieldResult> fields;

  Verdict verdict() const;
  const FieldResult* field(const std::string& name) const;
};

struct TableOptions {
  u64 budget = kDefaultBudget;
  u64 pell_bound = kDefaultPellBound;
  /// Largest p for which the Z_{p^2} code is enumerated rather than taken from
  /// the closed form (subject to the budget as well).
  u64 ring_enumeration_max_p = 31;
};

TableRowResult evaluate_table1_row(const Table1Row& row, const TableOptions& opt = {});
TableRowResult evaluate_table23_row(int table, const Table23Row& row, const TableOptions& opt = {});

struct TableReport {
  int table;
  std::vector<TableRowResult> rows;
  std::size_t count(Verdict v) const;
  bool all_passed() const { return count(Verdict::fail) == 0; }
};

TableReport run_table(int id, const TableOptions& opt = {});

}  // namespace wss
