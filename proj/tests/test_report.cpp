#include <catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mills/report.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace mills;
using namespace mills::report;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const std::string kData = MILLS_TEST_DATA_DIR;
const std::string kTmp = MILLS_TEST_TMP_DIR;

}  // namespace

TEST_CASE("number formatting round-trips", "[report]") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.2533141373155003) == "1.2533141373155003");
  CHECK(format_number(0.1) == "0.1");
  for (double v : {1.0 / 3.0, 2.866515719e-7, -4.2e-300, 123456789.125}) {
    CHECK(std::stod(format_number(v)) == v);
    CHECK(format_number(v).size() <= 24);
  }
}

TEST_CASE("grid", "[report]") {
  const auto xs = grid(0.0, 6.0, 0.01);
  CHECK(xs.size() == 601);
  CHECK(xs[30] == 0.3);
  CHECK(xs[70] == 0.7);
  CHECK(xs.back() == 6.0);
  CHECK(grid(1.0, 1.0, 0.5).size() == 1);
  CHECK_THROWS_AS(grid(0.0, 1.0, 0.0), usage_error);
  CHECK_THROWS_AS(grid(1.0, 0.0, 0.1), usage_error);
}

TEST_CASE("eval record", "[report]") {
  std::ostringstream out, err;
  EvalArgs a;
  a.x = 0.0;
  a.n = 3;
  a.family.family = "shift-linear";
  REQUIRE(run_eval(a, out, err) == kOk);
  CHECK_THAT(out.str(), ContainsSubstring("value=1.2533141373155003\n"));
  CHECK_THAT(out.str(), ContainsSubstring("error=0\n"));
  CHECK_THAT(out.str(), ContainsSubstring("family=shift-linear\n"));
  CHECK_THAT(out.str(), !ContainsSubstring("trunc_bound"));

  std::ostringstream out2;
  EvalArgs b;
  b.x = 1.0;
  b.n = 1;
  REQUIRE(run_eval(b, out2, err) == kOk);
  CHECK(out2.str().rfind("x=1\nfamily=classic\nn=1\nvalue=0.5\nbound_side=lower\n"
                         "trunc_bound=0.5\n", 0) == 0);

  b.x = -1.0;
  CHECK(run_eval(b, out2, err) == kUsage);
  b.x = 1.0;
  b.family.family = "nope";
  CHECK(run_eval(b, out2, err) == kUsage);
  b.family.family = "improved-expo";
  b.family.variant = "cubic";
  CHECK(run_eval(b, out2, err) == kUsage);
  b.family.family = "custom";
  b.family.variant = "sqrt-r";
  CHECK(run_eval(b, out2, err) == kUsage);
  b.family.custom_table = kTmp + "/does-not-exist.csv";
  CHECK(run_eval(b, out2, err) == kIoError);
}

TEST_CASE("table CSV", "[report]") {
  TableArgs a;
  a.xmin = 0.0;
  a.xmax = 1.0;
  a.step = 0.5;
  a.n = 1;
  a.family.family = "improved-expo";
  const std::string csv = table_csv(a);
  const auto rows = parse_csv(csv);
  REQUIRE(rows.size() == 4);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.rfind("x,approx,reference,error\n", 0) == 0);
  CHECK(rows[1][0] == "0");
  CHECK(rows[2][0] == "0.5");
  CHECK(rows[3][0] == "1");
  CHECK(std::abs(std::stod(rows[1][3])) <= 1e-14);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double approx = std::stod(rows[i][1]), ref = std::stod(rows[i][2]);
    CHECK(std::stod(rows[i][3]) == ref - approx);
  }
  CHECK(table_csv(a) == csv);

  a.xmax = 0.0;
  CHECK(parse_csv(table_csv(a)).size() == 2);

  a.family.family = "classic";
  a.xmax = 1.0;
  std::ostringstream out, err;
  CHECK(run_table(a, out, err) == kUsage);
  a.xmin = 0.5;
  a.out = kTmp + "/missing-dir/t.csv";
  CHECK(run_table(a, out, err) == kIoError);
}

TEST_CASE("table golden file", "[report][golden]") {
  TableArgs a;
  a.xmin = 0.0;
  a.xmax = 3.0;
  a.step = 0.25;
  a.n = 2;
  a.family.family = "improved-expo";
  a.out = kTmp + "/golden_check.csv";
  std::ostringstream out, err;
  REQUIRE(run_table(a, out, err) == kOk);
  CHECK(slurp(a.out) == slurp(kData + "/table_improved_expo_n2.csv"));
}

TEST_CASE("figure CSV", "[report][figure]") {
  for (int id : {1, 2, 3}) {
    FigureArgs a;
    a.id = id;
    const std::string csv = figure_csv(a);
    CHECK(figure_csv(a) == csv);
    const auto rows = parse_csv(csv);
    REQUIRE(rows.size() == 602);
    CHECK(rows[0] == std::vector<std::string>{"x", "improved-expo", "linear", "sqrt"});
    CHECK(rows[1][0] == "0");
    CHECK(rows.back()[0] == "6");
    // every family fits beta_n(0), so all columns vanish at x = 0
    for (std::size_t c = 1; c < 4; ++c) CHECK(std::abs(std::stod(rows[1][c])) <= 1e-14);
  }
  FigureArgs bad;
  bad.id = 4;
  std::ostringstream out, err;
  CHECK(run_figure(bad, out, err) == kUsage);
}

TEST_CASE("figure with a custom column", "[report][figure]") {
  FigureArgs a;
  a.id = 2;
  a.custom_table = kData + "/shift_linear_n1.csv";
  const auto rows = parse_csv(figure_csv(a));
  REQUIRE(rows[0].size() == 5);
  CHECK(rows[0][4] == "custom");
  // the table samples x + beta_1(0), so the column tracks the shift family
  const TailFamily shift(FamilyKind::ShiftLinear);
  for (std::size_t i = 1; i < rows.size(); i += 50) {
    const double x = std::stod(rows[i][0]);
    CHECK_THAT(std::stod(rows[i][4]), WithinAbs(delta(1, shift, x), 1e-12));
  }
}

TEST_CASE("custom table parsing", "[report]") {
  std::istringstream in("# beta(x)\nx,beta\n0, 1\n1 2\n2,5 # trailing\n\n3,10\n");
  const TailFamily fam = parse_custom_table(in);
  CHECK(fam.value(0, 1.0) == 2.0);
  CHECK(fam.value(7, 2.0) == 5.0);
  // monotone data gives a monotone interpolant
  double previous = fam.value(0, 0.0);
  for (double x = 0.05; x <= 3.0; x += 0.05) {
    CHECK(fam.value(0, x) >= previous);
    CHECK(fam.deriv(0, x) >= 0.0);
    previous = fam.value(0, x);
  }
  // linear continuation outside the table
  CHECK_THAT(fam.value(0, 4.0), WithinRel(10.0 + fam.deriv(0, 3.0), 1e-14));

  // exact on straight lines
  std::istringstream line("0,2\n1,3\n2,4\n5,7\n");
  const TailFamily lin = parse_custom_table(line);
  CHECK_THAT(lin.value(0, 3.3), WithinRel(5.3, 1e-14));
  CHECK_THAT(lin.deriv(0, 3.3), WithinRel(1.0, 1e-14));

  std::istringstream bad("0,1\n1,x\n");
  CHECK_THROWS_AS(parse_custom_table(bad), usage_error);
  std::istringstream unsorted("0,1\n2,1\n1,1\n");
  CHECK_THROWS_AS(parse_custom_table(unsorted), usage_error);
  std::istringstream tiny("0,1\n");
  CHECK_THROWS_AS(parse_custom_table(tiny), usage_error);
}

TEST_CASE("maxerr report", "[report][maxerr]") {
  MaxErrArgs a;
  a.nmin = 0;
  a.nmax = 3;
  std::ostringstream out, err;
  REQUIRE(run_maxerr(a, out, err) == kOk);
  const std::string text = out.str();
  CHECK_THAT(text, ContainsSubstring("n=0 max_abs=0.0002139"));
  CHECK_THAT(text, ContainsSubstring("offset 0:"));
  CHECK(text.find("match=yes") < text.find("offset 1:"));

  MaxErrArgs shift;
  shift.family.family = "shift-linear";
  shift.nmin = shift.nmax = 0;
  std::ostringstream out2;
  REQUIRE(run_maxerr(shift, out2, err) == kOk);
  CHECK_THAT(out2.str(), !ContainsSubstring("offset"));

  MaxErrArgs bad;
  bad.nmin = 3;
  bad.nmax = 1;
  CHECK(run_maxerr(bad, out2, err) == kUsage);
}

TEST_CASE("verify summary", "[report][verify]") {
  std::ostringstream out, err;
  VerifyArgs a;
  a.suites = {"alternating", "pade"};
  CHECK(run_verify(a, out, err) == kOk);
  CHECK_THAT(out.str(), ContainsSubstring("PASS alternating"));
  CHECK_THAT(out.str(), ContainsSubstring("2/2 suites passed"));

  VerifyArgs fault;
  fault.suites = {"sign-identity"};
  fault.inject_fault = true;
  std::ostringstream out2;
  CHECK(run_verify(fault, out2, err) == kVerifyFailed);
  CHECK_THAT(out2.str(), ContainsSubstring("FAIL sign-identity"));

  VerifyArgs unknown;
  unknown.suites = {"no-such-suite"};
  std::ostringstream out3;
  CHECK(run_verify(unknown, out3, err) == kVerifyFailed);
}
