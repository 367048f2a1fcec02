#include "wsscodes/wsscodes.h"

#include <new>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "wsscodes/quadpoly.hpp"

struct wss_context {
  wss::cmd::Format format = wss::cmd::Format::text;
  wss::cmd::Options options;
  std::string last_error;
};

struct wss_report {
  std::string text;
  std::string summary;
  wss_outcome outcome;
};

namespace {

wss_status to_status(wss::Errc c) {
  switch (c) {
    case wss::Errc::invalid_argument: return WSS_E_INVALID_ARGUMENT;
    case wss::Errc::not_invertible: return WSS_E_NOT_INVERTIBLE;
    case wss::Errc::budget_exceeded: return WSS_E_BUDGET_EXCEEDED;
    case wss::Errc::bound_exceeded: return WSS_E_BOUND_EXCEEDED;
    case wss::Errc::verification_failed: return WSS_E_VERIFICATION_FAILED;
    case wss::Errc::parse_error: return WSS_E_PARSE;
  }
  return WSS_E_INTERNAL;
}

template <class F>
wss_status guarded(wss_context* ctx, F&& body) {
  if (!ctx) return WSS_E_NULL_POINTER;
  ctx->last_error.clear();
  try {
    body();
    return WSS_OK;
  } catch (const wss::Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
  } catch (...) {
    ctx->last_error = "unknown error";
  }
  return WSS_E_INTERNAL;
}

template <class F>
wss_status produce(wss_context* ctx, wss_report** out, F&& make) {
  if (!out) return WSS_E_NULL_POINTER;
  *out = nullptr;
  return guarded(ctx, [&] {
    const wss::cmd::Document doc = make();
    *out = new wss_report{doc.render(ctx->format), doc.summary, static_cast<wss_outcome>(doc.outcome)};
  });
}

std::string safe(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* wss_version(void) { return "1.0.0"; }

const char* wss_status_string(wss_status status) {
  switch (status) {
    case WSS_OK: return "ok";
    case WSS_E_INVALID_ARGUMENT: return "invalid argument";
    case WSS_E_NOT_INVERTIBLE: return "not invertible";
    case WSS_E_BUDGET_EXCEEDED: return "budget exceeded";
    case WSS_E_BOUND_EXCEEDED: return "bound exceeded";
    case WSS_E_VERIFICATION_FAILED: return "verification failed";
    case WSS_E_PARSE: return "parse error";
    case WSS_E_NULL_POINTER: return "null pointer";
    case WSS_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

wss_context* wss_context_new(void) { return new (std::nothrow) wss_context(); }

void wss_context_free(wss_context* ctx) { delete ctx; }

wss_status wss_context_set_format(wss_context* ctx, wss_format format) {
  return guarded(ctx, [&] {
    switch (format) {
      case WSS_FORMAT_TEXT: ctx->format = wss::cmd::Format::text; return;
      case WSS_FORMAT_CSV: ctx->format = wss::cmd::Format::csv; return;
      case WSS_FORMAT_JSON: ctx->format = wss::cmd::Format::json; return;
    }
    wss::fail(wss::Errc::invalid_argument, "unknown format");
  });
}

wss_status wss_context_set_format_name(wss_context* ctx, const char* name) {
  return guarded(ctx, [&] { ctx->format = wss::cmd::parse_format(safe(name)); });
}

wss_status wss_context_set_budget(wss_context* ctx, uint64_t cells) {
  return guarded(ctx, [&] {
    wss::require(cells > 0, "budget must be positive");
    ctx->options.budget = cells;
  });
}

wss_status wss_context_set_pell_bound(wss_context* ctx, uint64_t bound) {
  return guarded(ctx, [&] {
    wss::require(bound > 0, "Pell bound must be positive");
    ctx->options.pell_bound = bound;
  });
}

const char* wss_context_last_error(const wss_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* wss_report_text(const wss_report* report) { return report ? report->text.c_str() : ""; }
const char* wss_report_summary(const wss_report* report) { return report ? report->summary.c_str() : ""; }
wss_outcome wss_report_outcome(const wss_report* report) { return report ? report->outcome : WSS_OUTCOME_FAIL; }
void wss_report_free(wss_report* report) { delete report; }

wss_status wss_period(wss_context* ctx, int64_t A, int64_t B, uint64_t modulus, uint64_t* out) {
  if (!out) return WSS_E_NULL_POINTER;
  return guarded(ctx, [&] {
    wss::require(modulus >= 2, "modulus must be at least 2");
    *out = wss::period(wss::RecurrenceSpec{A, B}, modulus);
  });
}

wss_status wss_poly_order(wss_context* ctx, const char* poly, uint64_t modulus, uint64_t* out) {
  if (!out) return WSS_E_NULL_POINTER;
  return guarded(ctx, [&] { *out = wss::poly_order(wss::parse_quadratic(safe(poly), modulus)); });
}

wss_status wss_legendre(wss_context* ctx, int64_t a, uint64_t p, int* out) {
  if (!out) return WSS_E_NULL_POINTER;
  return guarded(ctx, [&] { *out = wss::legendre(a, p); });
}

wss_status wss_squarefree_part(wss_context* ctx, uint64_t n, uint64_t* out) {
  if (!out) return WSS_E_NULL_POINTER;
  return guarded(ctx, [&] { *out = wss::squarefree_part(n); });
}

wss_status wss_period_report(wss_context* ctx, int64_t A, int64_t B, uint64_t modulus, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::period(A, B, modulus); });
}

wss_status wss_wss_by_d(wss_context* ctx, uint64_t d, uint64_t p, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::wss_by_d(d, p, ctx->options); });
}

wss_status wss_wss_by_coeffs(wss_context* ctx, int64_t A, int64_t B, uint64_t p, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::wss_by_coeffs(A, B, p); });
}

wss_status wss_construct(wss_context* ctx, uint64_t p, const char* kind, uint64_t D, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::construct(p, safe(kind), D, ctx->options); });
}

wss_status wss_double_root(wss_context* ctx, uint64_t p, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::double_root(p); });
}

wss_status wss_weights(wss_context* ctx, const char* poly, uint64_t modulus, const char* method, wss_report** out) {
  return produce(ctx, out, [&] {
    return wss::cmd::weights(safe(poly), modulus, method ? method : "auto", ctx->options);
  });
}

wss_status wss_classify(wss_context* ctx, const char* poly, uint64_t modulus, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::classify(safe(poly), modulus, ctx->options); });
}

wss_status wss_table(wss_context* ctx, int table_id, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::table(table_id, ctx->options); });
}

wss_status wss_prationality(wss_context* ctx, uint64_t d, uint64_t p, const char* methods, wss_report** out) {
  return produce(ctx, out, [&] {
    std::vector<std::string> list;
    std::istringstream in(safe(methods));
    for (std::string m; std::getline(in, m, ',');)
      if (!m.empty()) list.push_back(m);
    return wss::cmd::prationality(d, p, list, ctx->options);
  });
}

wss_status wss_alpha(wss_context* ctx, uint64_t p, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::alpha(p); });
}

wss_status wss_alpha_scan(wss_context* ctx, uint64_t p_max, wss_report** out) {
  return produce(ctx, out, [&] { return wss::cmd::alpha_scan(p_max); });
}

}  // extern "C"
