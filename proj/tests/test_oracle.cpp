#include <catch_amalgamated.hpp>

#include <cmath>

#include "mills/laplace.hpp"
#include "mills/oracle.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace mills;
using namespace mills::oracle;

TEST_CASE("Gaussian reference against mpmath", "[oracle]") {
  // erfc(x/sqrt 2) / (2 phi(x)) at 40 digits
  const struct {
    double x, r;
  } table[] = {
      {0.0, 1.2533141373155003},  {0.25, 1.0378245758537268}, {0.5, 0.87636445645369235},
      {1.0, 0.65567954241879847}, {2.0, 0.42136922928805447}, {3.0, 0.3045902987101033},
      {5.0, 0.19280810471531576}, {8.0, 0.1231319632579323},  {10.0, 0.099028596471731921},
  };
  for (const auto& row : table) {
    CAPTURE(row.x);
    CHECK_THAT(reference_mills(row.x), WithinRel(row.r, 2e-15));
  }
}

TEST_CASE("Gaussian tail", "[oracle]") {
  CHECK_THAT(reference_tail(0.0), WithinRel(0.5, 1e-15));
  CHECK_THAT(reference_tail(1.0), WithinRel(0.15865525393145705, 2e-15));
  CHECK_THAT(reference_tail(3.0), WithinRel(0.0013498980316300945, 2e-15));
  CHECK_THAT(reference_tail(5.0), WithinRel(2.8665157187919391e-7, 2e-15));
}

TEST_CASE("branches agree", "[oracle]") {
  for (double x = 0.5; x <= 2.0; x += 0.05) {
    CHECK_THAT(mills_taylor(x), WithinRel(mills_cf(x), 1e-13));
  }
  const double at8 = reference_mills(8.0);
  CHECK(at8 > 1.0 / (8.0 + 1.0 / 8.0));
  CHECK(at8 < 1.0 / 8.0);
}

TEST_CASE("continued-fraction depth", "[oracle]") {
  CHECK(laplace_depth_for(8.0) < laplace_depth_for(2.0));
  CHECK(laplace_depth_for(2.0) < laplace_depth_for(0.5));
  CHECK(laplace_depth_for(0.25) > 1000);
  CHECK_THROWS_AS(laplace_depth_for(1e-4), oracle_error);
  CHECK_THROWS_AS(laplace_depth_for(0.0), domain_error);
}

TEST_CASE("domain", "[oracle]") {
  CHECK_THROWS_AS(reference_mills(-0.5), domain_error);
  CHECK_THROWS_AS(reference_mills(std::nan("")), domain_error);
  CHECK(reference_mills(INFINITY) == 0.0);
  CHECK_THROWS_AS(mills_taylor(4.5), domain_error);
}

TEST_CASE("Gamma reference", "[oracle]") {
  CHECK_THAT(reference_gamma_mills(1.0, 2.0), WithinRel(1.0, 1e-14));
  CHECK_THAT(reference_gamma_mills(2.0, 2.0), WithinRel(1.5, 1e-14));
  CHECK_THAT(reference_gamma_mills(0.5, 2.0), WithinRel(0.84273845857610895, 1e-11));
  CHECK_THAT(reference_gamma_mills(0.5, 2.0), WithinRel(2.0 * reference_mills(2.0), 1e-11));
  CHECK_THAT(reference_gamma_mills(0.7, 0.5), WithinRel(0.76918306419113293, 1e-10));
}

TEST_CASE("quadrature branch", "[oracle]") {
  for (double s : {0.3, 1.0, 2.5, 6.0}) {
    for (double x : {1.0, 3.0, 20.0}) {
      const QuadratureResult q = gamma_mills_quadrature(s, x);
      CHECK_THAT(q.value, WithinRel(gamma_mills_cf(s, x), 1e-7));
      CHECK(q.remainder_bound <= 1e-14);
    }
  }
  // large shapes push the cut-off out
  CHECK(gamma_mills_quadrature(40.0, 1.0).upper_limit > kQuadratureLimit);
  CHECK_THROWS_AS(gamma_mills_quadrature(0.5, 0.0), domain_error);
}
