// Command-line front end. Everything goes through the C API.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wsscodes/wsscodes.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct Globals {
  std::string format = "text";
  std::optional<uint64_t> budget;
  std::optional<uint64_t> pell_bound;
  std::string output_dir;
};

class Context {
 public:
  Context() : ctx_(wss_context_new()) {}
  ~Context() { wss_context_free(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  wss_context* get() const { return ctx_; }

 private:
  wss_context* ctx_;
};

int status_exit(wss_status s) { return s == WSS_E_VERIFICATION_FAILED ? kExitVerification : kExitUsage; }

int report_error(const Context& ctx, wss_status s) {
  std::cerr << "error (" << wss_status_string(s) << "): " << wss_context_last_error(ctx.get()) << "\n";
  return status_exit(s);
}

std::string extension(const std::string& format) { return format == "text" ? "txt" : format; }

int emit(const Globals& g, const std::string& command, wss_report* report) {
  const std::string text = wss_report_text(report);
  const std::string summary = wss_report_summary(report);
  const int code = static_cast<int>(wss_report_outcome(report));
  wss_report_free(report);

  std::string dir = g.output_dir;
  if (dir.empty())
    if (const char* env = std::getenv("WSSCODES_OUTPUT_DIR")) dir = env;
  if (dir.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / (command + "." + extension(g.format));
    std::ofstream out(path);
    out << text;
    if (!out) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return kExitUsage;
    }
    std::cerr << "wrote " << path.string() << "\n";
  }
  if (!summary.empty()) std::cerr << summary << "\n";
  return code;
}

int run(const Context& ctx, const Globals& g, const std::string& command,
        const std::function<wss_status(wss_report**)>& call) {
  wss_report* report = nullptr;
  const wss_status s = call(&report);
  if (s != WSS_OK) return report_error(ctx, s);
  return emit(g, command, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wall-Sun-Sun primes, recurrences and cyclic codes over Z_p and Z_{p^2}"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "Maximum codeword-cell visits for an enumeration");
  app.add_option("--pell-bound", g.pell_bound, "Largest b tried when solving a^2 - d b^2 = +-4");
  app.add_option("--output-dir", g.output_dir, "Write the output to <dir>/<command>.<ext> instead of stdout");

  int64_t A = 0, B = 0;
  std::optional<int64_t> trace, norm;
  uint64_t modulus = 0, p = 0, d = 0, D = 0, scan = 0;
  std::string kind, poly, method = "auto";
  std::vector<std::string> methods;
  int table_id = 0;

  auto* period = app.add_subcommand("period", "Period k(m) of F_{n+2} = -A F_{n+1} - B F_n from (0, 1)");
  auto* pA = period->add_option("--A", A, "Coefficient A of X^2 + A X + B");
  auto* pB = period->add_option("--B", B, "Coefficient B of X^2 + A X + B");
  auto* pt = period->add_option("--trace", trace, "Trace a, i.e. A = -a")->excludes(pA);
  period->add_option("--norm", norm, "Norm, i.e. B = norm")->excludes(pB);
  pA->excludes(pt);
  period->add_option("--modulus,-m", modulus, "Modulus m >= 2")->required();

  auto* wss = app.add_subcommand("wss", "Wall-Sun-Sun test: k(p) and k(p^2)");
  auto* wd = wss->add_option("--d", d, "Square-free d; the recurrence of its fundamental unit is used");
  auto* wA = wss->add_option("--A", A, "Coefficient A")->excludes(wd);
  auto* wB = wss->add_option("--B", B, "Coefficient B")->excludes(wd);
  wA->needs(wB);
  wB->needs(wA);
  wss->add_option("--p", p, "Prime p")->required();

  auto* construct = app.add_subcommand("construct", "Build a recurrence with k(p) = k(p^2) = D");
  construct->add_option("--p", p, "Prime p")->required();
  construct->add_option("--case", kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"reducible", "double_root", "double-root", "irreducible"}));
  construct->add_option("--D", D, "Target order (default p-1, p or 2p+2)");

  auto* weights = app.add_subcommand("weights", "Weight distribution of the code with a given check polynomial");
  weights->add_option("poly,--poly", poly, "Check polynomial, e.g. \"x^2+29x+19 (mod 49)\"")->required();
  weights->add_option("--modulus,-m", modulus, "Modulus p or p^2, if not given in the polynomial");
  weights->add_option("--method", method, "Distribution method")
      ->check(CLI::IsMember({"enumerate", "formula", "auto"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "MDS / NMDS / repetition classification of a code");
  classify->add_option("poly,--poly", poly, "Check polynomial")->required();
  classify->add_option("--modulus,-m", modulus, "Modulus p or p^2, if not given in the polynomial");

  auto* table = app.add_subcommand("table", "Recompute a golden table and compare it field by field");
  table->add_option("id,--id", table_id, "Table 1, 2 or 3")->required()->check(CLI::Range(1, 3));

  auto* prat = app.add_subcommand("prationality", "p-rationality verdicts with a cross-check between criteria");
  prat->add_option("--d", d, "Square-free d")->required();
  prat->add_option("--p", p, "Prime p >= 5")->required();
  prat->add_option("--method", methods, "period, fibonacci or alpha (repeatable; default: all that apply)")
      ->check(CLI::IsMember({"period", "fibonacci", "alpha"}));

  auto* alpha = app.add_subcommand("alpha", "Alpha-sum criterion for Q(sqrt 5) against the period criterion");
  auto* ap = alpha->add_option("--p", p, "Prime p = 1 (mod 5)");
  auto* as = alpha->add_option("--scan", scan, "Cross-check every prime p = 1 (mod 5) up to this bound");
  ap->excludes(as);
  alpha->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    return kExitUsage;
  }

  Context ctx;
  if (!ctx.get()) {
    std::cerr << "error: cannot allocate a context\n";
    return kExitUsage;
  }
  wss_status s = wss_context_set_format_name(ctx.get(), g.format.c_str());
  if (s == WSS_OK && g.budget) s = wss_context_set_budget(ctx.get(), *g.budget);
  if (s == WSS_OK && g.pell_bound) s = wss_context_set_pell_bound(ctx.get(), *g.pell_bound);
  if (s != WSS_OK) return report_error(ctx, s);

  wss_context* c = ctx.get();
  if (*period) {
    if (trace) A = -*trace;
    if (norm) B = *norm;
    return run(ctx, g, "period", [&](wss_report** r) { return wss_period_report(c, A, B, modulus, r); });
  }
  if (*wss) {
    if (*wd) return run(ctx, g, "wss", [&](wss_report** r) { return wss_wss_by_d(c, d, p, r); });
    if (!*wA) {
      std::cerr << "error: wss needs --d or both --A and --B\n";
      return kExitUsage;
    }
    return run(ctx, g, "wss", [&](wss_report** r) { return wss_wss_by_coeffs(c, A, B, p, r); });
  }
  if (*construct)
    return run(ctx, g, "construct", [&](wss_report** r) { return wss_construct(c, p, kind.c_str(), D, r); });
  if (*weights)
    return run(ctx, g, "weights",
               [&](wss_report** r) { return wss_weights(c, poly.c_str(), modulus, method.c_str(), r); });
  if (*classify)
    return run(ctx, g, "classify", [&](wss_report** r) { return wss_classify(c, poly.c_str(), modulus, r); });
  if (*table)
    return run(ctx, g, "table" + std::to_string(table_id), [&](wss_report** r) { return wss_table(c, table_id, r); });
  if (*prat) {
    std::string joined;
    for (const auto& m : methods) joined += (joined.empty() ? "" : ",") + m;
    return run(ctx, g, "prationality",
               [&](wss_report** r) { return wss_prationality(c, d, p, joined.c_str(), r); });
  }
  if (*alpha) {
    if (*as) return run(ctx, g, "alpha", [&](wss_report** r) { return wss_alpha_scan(c, scan, r); });
    return run(ctx, g, "alpha", [&](wss_report** r) { return wss_alpha(c, p, r); });
  }
  return kExitUsage;
}
