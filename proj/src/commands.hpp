#pragma once

// Command layer shared by the C API: each command runs one pipeline stage and
// returns a document that can be rendered as text, CSV or JSON lines.

#include <string>
#include <vector>

#include "json.hpp"
#include "wsscodes/codes.hpp"
#include "wsscodes/pell.hpp"

namespace wss::cmd {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };
enum class Outcome { pass = 0, fail = 2, discrepancy = 3 };

struct Options {
  u64 budget = kDefaultBudget;
  u64 pell_bound = kDefaultPellBound;
};

struct Document {
  std::vector<Json> records;
  std::vector<std::string> columns;  // CSV column order; keys of the first record if empty
  std::string text;
  std::string summary;  // one-line outcome description, meant for stderr
  Outcome outcome = Outcome::pass;

  std::string render(Format f) const;
};

Format parse_format(const std::string& s);

Document period(i64 A, i64 B, u64 modulus);
Document wss_by_d(u64 d, u64 p, const Options& opt);
Document wss_by_coeffs(i64 A, i64 B, u64 p);
Document construct(u64 p, const std::string& kind, u64 D, const Options& opt);
Document double_root(u64 p);
Document weights(const std::string& poly, u64 modulus, const std::string& method, const Options& opt);
Document classify(const std::string& poly, u64 modulus, const Options& opt);
Document table(int id, const Options& opt);
/// methods: any of "period", "fibonacci", "alpha"; empty selects every method
/// that applies to (d, p).
Document prationality(u64 d, u64 p, const std::vector<std::string>& methods, const Options& opt);
Document alpha(u64 p);
Document alpha_scan(u64 p_max);

}  // namespace wss::cmd
