#include "liecert/liecert.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "liecert/audit.hpp"

struct liecert_report {
  liecert::audit::SuiteReport report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

template <class F>
liecert_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return LIECERT_OK;
  } catch (const liecert::audit::UsageError& e) {
    last_error = e.what();
    return LIECERT_ERR_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LIECERT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LIECERT_ERR_INTERNAL;
  }
}

liecert_status null_arg(const char* what) {
  last_error = std::string(what) + " is NULL";
  return LIECERT_ERR_NULL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

} // namespace

extern "C" {

const char* liecert_version(void) { return liecert::audit::kToolVersion; }

const char* liecert_last_error(void) { return last_error.c_str(); }

size_t liecert_suite_count(void) { return liecert::audit::suite_names().size(); }

const char* liecert_suite_name(size_t index) {
  const auto& names = liecert::audit::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

liecert_status liecert_verify(size_t n_first, size_t n_last, const char* suite, liecert_report** out) {
  if (!suite) return null_arg("suite");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto* r = new liecert_report{liecert::audit::run_suite(n_first, n_last, suite), {}, {}};
    r->json = r->report.to_json();
    r->text = r->report.to_text();
    *out = r;
  });
}

const char* liecert_report_json(const liecert_report* report) { return report ? report->json.c_str() : nullptr; }

const char* liecert_report_text(const liecert_report* report) { return report ? report->text.c_str() : nullptr; }

int liecert_report_exit_code(const liecert_report* report) { return report ? report->report.exit_code() : 2; }

liecert_summary liecert_report_summary(const liecert_report* report) {
  if (!report) return {0, 0, 0};
  const auto& s = report->report.summary;
  return {s.pass, s.fail, s.skipped};
}

size_t liecert_report_check_count(const liecert_report* report) {
  return report ? report->report.checks.size() : 0;
}

void liecert_report_free(liecert_report* report) { delete report; }

liecert_status liecert_dims_table(size_t n, char** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = copy_out(liecert::audit::dims_table(n)); });
}

liecert_status liecert_decompose(const char* target, const char* under, size_t n, int as_json, char** out) {
  if (!target) return null_arg("target");
  if (!under) return null_arg("under");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] { *out = copy_out(liecert::audit::decomposition_report(target, under, n, as_json != 0)); });
}

void liecert_string_free(char* s) { std::free(s); }

} // extern "C"
