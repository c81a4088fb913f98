#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "liecert/liecert.h"

namespace {

constexpr int kExitUsage = 2;

/// "k", "a..b" or "all-small".
std::optional<std::pair<std::size_t, std::size_t>> parse_range(const std::string& text) {
  if (text == "all-small") return std::pair<std::size_t, std::size_t>{3, 5};
  auto parse_one = [](const std::string& s) -> std::optional<std::size_t> {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6) return std::nullopt;
    return static_cast<std::size_t>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto k = parse_one(text);
    if (!k) return std::nullopt;
    return std::pair{*k, *k};
  }
  auto a = parse_one(text.substr(0, dots));
  auto b = parse_one(text.substr(dots + 2));
  if (!a || !b) return std::nullopt;
  return std::pair{*a, *b};
}

int report_error(liecert_status status) {
  std::cerr << "liecert: " << liecert_last_error() << "\n";
  return status == LIECERT_ERR_USAGE ? kExitUsage : 3;
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "liecert: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  return 0;
}

int take_string(liecert_status status, char* s) {
  if (status != LIECERT_OK) return report_error(status);
  std::unique_ptr<char, decltype(&liecert_string_free)> owned(s, &liecert_string_free);
  std::cout << owned.get();
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for classical Lie algebra embeddings"};
  app.set_version_flag("--version", liecert_version());
  app.require_subcommand(1);

  std::string n_text;
  std::string suite;
  std::string format = "json";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--n", n_text, "Rank k, range a..b, or all-small (3..5)")->required();
  std::string suite_help = "Suite:";
  for (std::size_t i = 0; i < liecert_suite_count(); ++i) suite_help += std::string(" ") + liecert_suite_name(i);
  verify->add_option("--suite", suite, suite_help)->required();
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Write the report to FILE");

  std::size_t dims_n = 0;
  auto* dims = app.add_subcommand("dims", "Fundamental-module dimension table");
  dims->add_option("--n", dims_n, "Rank")->required();

  std::string target, under = "sp";
  std::size_t dec_n = 0;
  bool dec_json = false;
  auto* decompose = app.add_subcommand("decompose", "Decompose an adjoint module under an embedded subalgebra");
  decompose->add_option("--target", target, "so-split or sp-succ")->required();
  decompose->add_option("--under", under, "sp or sp-sp1");
  decompose->add_option("--n", dec_n, "Rank")->required();
  decompose->add_flag("--json", dec_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*verify) {
    const auto range = parse_range(n_text);
    if (!range) {
      std::cerr << "liecert: --n expects k, a..b or all-small, got '" << n_text << "'\n";
      return kExitUsage;
    }
    liecert_report* raw = nullptr;
    const liecert_status status = liecert_verify(range->first, range->second, suite.c_str(), &raw);
    if (status != LIECERT_OK) return report_error(status);
    std::unique_ptr<liecert_report, decltype(&liecert_report_free)> report(raw, &liecert_report_free);
    const char* body = format == "json" ? liecert_report_json(report.get()) : liecert_report_text(report.get());
    if (const int rc = emit(body, out_path); rc != 0) return rc;
    return liecert_report_exit_code(report.get());
  }
  if (*dims) {
    char* s = nullptr;
    const liecert_status status = liecert_dims_table(dims_n, &s);
    return take_string(status, s);
  }
  char* s = nullptr;
  const liecert_status status = liecert_decompose(target.c_str(), under.c_str(), dec_n, dec_json ? 1 : 0, &s);
  return take_string(status, s);
}
