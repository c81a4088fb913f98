#include <doctest.h>

#include <cstring>
#include <string>

#include "liecert/liecert.h"

TEST_CASE("version and suites") {
  CHECK(std::string(liecert_version()) == "0.1.0");
  CHECK(liecert_suite_count() == 8);
  CHECK(std::string(liecert_suite_name(0)) == "algebras");
  CHECK(liecert_suite_name(99) == nullptr);
}

TEST_CASE("verify and inspect a report") {
  liecert_report* r = nullptr;
  REQUIRE(liecert_verify(2, 2, "centralizers", &r) == LIECERT_OK);
  REQUIRE(r != nullptr);
  CHECK(liecert_report_check_count(r) == 4);
  const liecert_summary s = liecert_report_summary(r);
  CHECK(s.pass == 4);
  CHECK(s.fail == 0);
  CHECK(liecert_report_exit_code(r) == 0);
  CHECK(std::strstr(liecert_report_json(r), "\"centralizer_sp_in_so\"") != nullptr);
  CHECK(std::strstr(liecert_report_text(r), "PASS centralizer_sp_in_so") != nullptr);
  CHECK(std::string(liecert_last_error()).empty());
  liecert_report_free(r);
}

TEST_CASE("error codes") {
  liecert_report* r = nullptr;
  CHECK(liecert_verify(2, 2, "bogus", &r) == LIECERT_ERR_USAGE);
  CHECK(r == nullptr);
  CHECK(std::string(liecert_last_error()).find("bogus") != std::string::npos);
  CHECK(liecert_verify(2, 2, nullptr, &r) == LIECERT_ERR_NULL);
  CHECK(liecert_verify(2, 2, "all", nullptr) == LIECERT_ERR_NULL);
  CHECK(liecert_verify(0, 0, "all", &r) == LIECERT_ERR_USAGE);
  char* out = nullptr;
  CHECK(liecert_dims_table(0, &out) == LIECERT_ERR_USAGE);
  CHECK(liecert_decompose("so-split", "nope", 2, 0, &out) == LIECERT_ERR_USAGE);
  CHECK(liecert_decompose(nullptr, "sp", 2, 0, &out) == LIECERT_ERR_NULL);
  CHECK(out == nullptr);
  CHECK(liecert_report_json(nullptr) == nullptr);
  liecert_report_free(nullptr);
  liecert_string_free(nullptr);
}

TEST_CASE("string results") {
  char* out = nullptr;
  REQUIRE(liecert_dims_table(3, &out) == LIECERT_OK);
  CHECK(std::strstr(out, "14") != nullptr);
  liecert_string_free(out);
  out = nullptr;
  REQUIRE(liecert_decompose("so-split", "sp", 2, 1, &out) == LIECERT_OK);
  CHECK(std::strstr(out, "\"degree\": 28") != nullptr);
  liecert_string_free(out);
}
