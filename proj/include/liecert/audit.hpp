#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace liecert::audit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Bad suite name, rank out of range, unknown decomposition target.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

struct CheckResult {
  std::string name;
  std::size_t n = 0;
  Status status = Status::pass;
  std::string expected;
  std::string actual;
  std::string paper_ref;
  nlohmann::ordered_json witness; // null unless there is something to show; always set on failure
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct SuiteReport {
  std::string suite;
  std::size_t n_first = 0;
  std::size_t n_last = 0;
  std::string tool_version = kToolVersion;
  std::vector<CheckResult> checks; // sorted by (name, n)
  Summary summary;

  /// {"suite","n","tool_version","checks":[...],"summary":{...}}; "n" is an
  /// integer for a single rank and "a..b" for a range.
  [[nodiscard]] std::string to_json() const;
  [[nodiscard]] std::string to_text() const;
  /// 0 when nothing failed, 1 otherwise.
  [[nodiscard]] int exit_code() const { return summary.fail == 0 ? 0 : 1; }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Dimension bookkeeping of sp(n) x sp(1) acting on a manifold of dimension
/// (n+1)(2n+3); reported as skipped below n = 3.
std::vector<CheckResult> theorem_a_dimension_audit(std::size_t n);

/// Runs the named suite for every rank in [n_first, n_last]. A failed check
/// never aborts the run. Throws UsageError on bad arguments.
SuiteReport run_suite(std::size_t n_first, std::size_t n_last, const std::string& suite);
inline SuiteReport run_suite(std::size_t n, const std::string& suite) { return run_suite(n, n, suite); }

/// Fundamental-module dimension table for sp(n).
std::string dims_table(std::size_t n);

/// Decomposition of target ("so-split" | "sp-succ") under the embedded
/// subalgebra ("sp" | "sp-sp1"), as text or JSON.
std::string decomposition_report(const std::string& target, const std::string& under, std::size_t n, bool as_json);

} // namespace liecert::audit
