#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "qso/qso.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { qso_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

struct El {
  qso_element* p = nullptr;
  ~El() { qso_element_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(qso_version()) == "1.0.0");
  CHECK(std::string(qso_status_name(QSO_OK)) == "ok");
  CHECK(std::string(qso_status_name(QSO_ERROR_POLE)) == "pole");
}

TEST_CASE("element parse, render, normalize round trip") {
  El e;
  REQUIRE(qso_element_parse("I+(3,2) I+(2,1)", &e.p) == QSO_OK);
  El nf;
  REQUIRE(qso_element_normalize(e.p, 3, &nf.p) == QSO_OK);
  Str s;
  REQUIRE(qso_element_to_string(nf.p, QSO_STYLE_PRETTY_Q, &s.p) == QSO_OK);
  CHECK(s.s() == "-q^(1/2) I+(3,1) + q I+(2,1) I+(3,2)");
  // round trip through the exact-u style
  Str su;
  REQUIRE(qso_element_to_string(nf.p, QSO_STYLE_EXACT_U, &su.p) == QSO_OK);
  El back;
  REQUIRE(qso_element_parse(su.s().c_str(), &back.p) == QSO_OK);
  int eq = 0;
  REQUIRE(qso_element_equal(nf.p, back.p, &eq) == QSO_OK);
  CHECK(eq == 1);
}

TEST_CASE("error paths set status and message") {
  El e;
  CHECK(qso_element_parse("I+(2,1", &e.p) == QSO_ERROR_PARSE);
  CHECK(std::string(qso_last_error()).size() > 0);
  CHECK(qso_element_parse(nullptr, &e.p) == QSO_ERROR_INVALID_ARGUMENT);
  El ok;
  REQUIRE(qso_element_parse("I+(4,1)", &ok.p) == QSO_OK);
  El nf;
  CHECK(qso_element_normalize(ok.p, 3, &nf.p) == QSO_ERROR_INVALID_ARGUMENT);
  El div;
  CHECK(qso_element_parse("1/0", &div.p) == QSO_ERROR_DIVISION_BY_ZERO);
  El cas;
  CHECK(qso_casimir_top(5, '+', &cas.p) == QSO_ERROR_INVALID_ARGUMENT);
  CHECK(qso_casimir_top(4, 'x', &cas.p) == QSO_ERROR_INVALID_ARGUMENT);
  CHECK(qso_casimir_c2r(3, 2, &cas.p) == QSO_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("casimir construction through C API") {
  El c;
  REQUIRE(qso_casimir_c2r(3, 1, &c.p) == QSO_OK);
  Str s;
  REQUIRE(qso_element_to_string(c.p, QSO_STYLE_PRETTY_Q, &s.p) == QSO_OK);
  CHECK(s.s() == "q^-1 I+(2,1)^2 + I+(3,1) I-(3,1) + q I+(3,2)^2");
  El t;
  REQUIRE(qso_casimir_top(6, '+', &t.p) == QSO_OK);
}

TEST_CASE("irreps json") {
  Str out;
  REQUIRE(qso_irreps_json(3, "1", &out.p) == QSO_OK);
  auto arr = nlohmann::json::parse(out.s());
  REQUIRE(arr.size() == 3);
  CHECK(arr[0]["weights"] == "0");
  CHECK(arr[0]["dimension"] == 1);
  CHECK(arr[1]["weights"] == "1/2");
  CHECK(arr[1]["dimension"] == 2);
  CHECK(arr[2]["weights"] == "1");
  CHECK(arr[2]["dimension"] == 3);
  CHECK(qso_irreps_json(1, "1", &out.p) == QSO_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("verify through C API") {
  Str json, text;
  int passed = -1;
  const char* cfg = R"({"n":3,"weights":["1"],"q0":[1.2],"symbolic":true})";
  REQUIRE(qso_verify_run(cfg, &json.p, &text.p, &passed) == QSO_OK);
  CHECK(passed == 1);
  auto rep = nlohmann::json::parse(json.s());
  CHECK(rep["verdict"] == "pass");
  CHECK(rep["centrality"][0]["status"] == "central");
  CHECK(text.s().find("verdict: PASS") != std::string::npos);
  // invalid weight -> invalid argument, no report
  int p2 = -1;
  CHECK(qso_verify_run(R"({"n":3,"weights":["-1"],"q0":[1.2]})", nullptr, nullptr, &p2) ==
        QSO_ERROR_INVALID_ARGUMENT);
  // malformed config json
  CHECK(qso_verify_run("{", nullptr, nullptr, &p2) == QSO_ERROR_PARSE);
}

TEST_CASE("spectrum through C API") {
  Str out;
  const char* cfg = R"({"n":3,"weights":["1"],"q0":[1.2],"format":"csv"})";
  REQUIRE(qso_spectrum_run(cfg, &out.p) == QSO_OK);
  CHECK(out.s().rfind("n,weights,casimir_kind,", 0) == 0);
  const char* bad = R"({"n":3,"weights":["1"],"format":"yaml"})";
  CHECK(qso_spectrum_run(bad, &out.p) == QSO_ERROR_INVALID_ARGUMENT);
}
