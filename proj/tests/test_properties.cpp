#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mills/gamma_mills.hpp"
#include "mills/gauss_mills.hpp"
#include "mills/oracle.hpp"
#include "mills/verify.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace mills;

TEST_CASE("every verification suite passes", "[properties][verify]") {
  for (const verify::Suite& s : verify::suites()) {
    DYNAMIC_SECTION(s.name) {
      const verify::SuiteResult r = s.run({});
      INFO(r.detail);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("the sign suite notices a flipped operator", "[properties][verify]") {
  verify::Options opt;
  opt.flip_sign_operator = true;
  CHECK_FALSE(verify::sign_identity(opt).passed);
}

TEST_CASE("random classic pairs bracket R", "[properties]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(0.05, 12.0);
  std::uniform_int_distribution<int> ns(0, 20);
  const TailFamily classic;
  for (int i = 0; i < 500; ++i) {
    const double x = xs(rng);
    const int n = ns(rng);
    const double a = mills_value(x, classic, n);
    const double b = mills_value(x, classic, n + 1);
    const double r = oracle::reference_mills(x);
    const double slack = 4e-16 * r;
    CAPTURE(x, n);
    CHECK(std::min(a, b) - slack <= r);
    CHECK(r <= std::max(a, b) + slack);
    CHECK(std::abs(r - a) <= truncation_bound(x, n) * (1 + 1e-12) + slack);
  }
}

TEST_CASE("R stays inside (x/(x^2+1), 1/x)", "[properties]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(0.01, 40.0);
  for (int i = 0; i < 300; ++i) {
    const double x = xs(rng);
    const double r = oracle::reference_mills(x);
    CAPTURE(x);
    CHECK(r < 1.0 / x);
    CHECK(r > x / (x * x + 1.0));
  }
}

TEST_CASE("tail error functional is consistent with delta", "[properties]") {
  // Delta_n' = -phi delta_n, checked by central differences
  const double h = 1e-5;
  for (FamilyKind kind : kBuiltinFamilies) {
    const TailFamily fam(kind);
    for (int n : {1, 2, 4}) {
      for (double x : {0.4, 1.2, 2.5}) {
        const double d = (delta(n, fam, x + h) - delta(n, fam, x - h)) / (2 * h);
        const double expected = -phi(x) * error_integrand(n, fam, x);
        CHECK_THAT(d, WithinAbs(expected, 1e-8 * (1.0 + std::abs(expected))));
      }
    }
  }
}

TEST_CASE("gamma bracketing over random arguments", "[properties][gamma]") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ss(0.02, 1.0);
  std::uniform_real_distribution<double> xs(0.2, 15.0);
  std::uniform_int_distribution<int> ns(1, 20);
  for (int i = 0; i < 150; ++i) {
    const double s = ss(rng), x = xs(rng);
    const int n = ns(rng);
    const double ref = gamma::mills(gamma::Form::Laguerre, s, x, 1e-14, 5000);
    const gamma::Bracket b = gamma::bounds_s01(s, x, n);
    CAPTURE(s, x, n);
    CHECK(b.lower <= ref * (1 + 1e-13));
    CHECK(ref <= b.upper * (1 + 1e-13));
  }
}

TEST_CASE("gamma recursion in s", "[properties][gamma]") {
  // M_s = 1 + ((s - 1)/x) M_{s-1}
  for (double s : {1.3, 2.2, 3.7}) {
    for (double x : {0.7, 2.0, 9.0}) {
      const double lhs = gamma::mills(gamma::Form::Laguerre, s, x, 1e-14, 5000);
      const double rhs = 1.0 + (s - 1.0) / x * gamma::mills(gamma::Form::Laguerre, s - 1.0, x, 1e-14, 5000);
      CHECK_THAT(lhs, WithinRel(rhs, 1e-11));
    }
  }
}
