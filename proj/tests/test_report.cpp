#include <cstdio>
#include <fstream>

#include "cytrans/report.hpp"
#include "doctest.h"
#include "testkit.hpp"

using namespace cytrans;

TEST_SUITE("report") {

TEST_CASE("bundled data reproduces every expected value") {
  ReportResult r = paper_report(CYTRANS_DATA_DIR);
  CHECK(r.checked >= 80);
  CHECK(r.mismatches == 0);
  ReportResult again = paper_report(CYTRANS_DATA_DIR, "kv");
  CHECK(again.mismatches == 0);
  CHECK(paper_report(CYTRANS_DATA_DIR, "kv").text == again.text);
}

TEST_CASE("expectation kinds") {
  CHECK(matches({"eq", "(1,3,3,1)", 1}, "(1,3,3,1)"));
  CHECK_FALSE(matches({"eq", "(1,3,3,1)", 1}, "(1,3,3, 1)"));
  CHECK(matches({"set", "x1*x2, x3*x4", 1}, "x3*x4, x1*x2"));
  CHECK_FALSE(matches({"set", "x1*x2, x3*x4", 1}, "x1*x2"));
  CHECK(matches({"prop", "a*b*c + b^2*c", 1}, "3*a*b*c + 3*b^2*c"));
  CHECK_FALSE(matches({"prop", "a*b*c", 1}, "a*b*c + c^3"));
  CHECK(matches({"note", "a*b", 1}, " a*b "));
  CHECK_THROWS_AS(matches({"bogus", "", 1}, ""), std::invalid_argument);
}

TEST_CASE("expectation files") {
  const std::string path = "report_test.expected";
  {
    std::ofstream out(path);
    out << "# comment\n\neq a.b = 1\nset c = x, y\n";
  }
  auto e = read_expectations(path);
  std::remove(path.c_str());
  REQUIRE(e.size() == 2);
  CHECK(e.at("a.b").kind == "eq");
  CHECK(e.at("a.b").value == "1");
  CHECK(e.at("c").line == 4);
}

}
