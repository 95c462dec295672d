#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "mills/laplace.hpp"
#include "mills/tail_family.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace mills;

TEST_CASE("beta_n(0) constants", "[tail]") {
  CHECK_THAT(beta0(0), WithinRel(0.7978845608028654, 1e-15));
  CHECK_THAT(beta0(1), WithinRel(1.2533141373155003, 1e-15));
  CHECK_THAT(beta0(2), WithinRel(1.5957691216057308, 1e-15));
  for (int n = 0; n <= 50; ++n) {
    CHECK_THAT(beta0(n), WithinRel(beta0_by_recursion(n), 1e-12));
    CHECK(beta0(n) > std::sqrt(n + 0.5));
    CHECK(beta0(n) < std::sqrt(n + 1.0));
  }
  // lgamma branch joins the tgamma branch smoothly
  CHECK_THAT(beta0(301) * beta0(300), WithinRel(301.0, 1e-12));
  CHECK_THAT(beta0(1000), WithinRel(std::sqrt(1000.5), 1e-6));
  CHECK_THROWS_AS(beta0(-1), domain_error);
}

TEST_CASE("fit constants", "[tail]") {
  const ModConstants m1 = mod_constants(1);
  CHECK_THAT(m1.lambda, WithinRel(std::numbers::pi / 2 - 1, 1e-14));
  CHECK_THAT(m1.r, WithinRel(std::numbers::pi - 3, 1e-13));
  const ModConstants m0 = mod_constants(0);
  CHECK_THAT(m0.lambda, WithinRel(2 / std::numbers::pi, 1e-15));
  CHECK_THAT(m0.r, WithinRel(0.27323954473516276, 1e-14));
  CHECK_THAT(m0.c, WithinRel(m0.lambda + std::sqrt(m0.r) * m0.beta0, 1e-15));
  const ModConstants p0 = mod_constants(0, SlopeVariant::PlainR);
  CHECK_THAT(p0.c, WithinRel(p0.lambda + p0.r * p0.beta0, 1e-15));
  for (int n = 0; n <= 200; ++n) {
    const ModConstants m = mod_constants(n);
    CHECK(m.lambda > 0.0);
    CHECK(m.r > 0.0);
    if (n >= 1) CHECK_THAT(m.beta0 * beta0(n - 1), WithinRel(static_cast<double>(n), 1e-12));
  }
}

TEST_CASE("family values at the origin", "[tail]") {
  CHECK_THAT(tail_value(TailFamily(FamilyKind::LimitAnsatz), 4, 0.0), WithinRel(2.0, 1e-15));
  CHECK_THAT(tail_value(TailFamily(FamilyKind::SqrtDuembgen), 1, 0.0),
             WithinRel(kSqrtHalfPi, 1e-15));
  for (int n = 0; n <= 10; ++n) {
    const double b = beta0(n);
    CHECK_THAT(tail_value(TailFamily(FamilyKind::ShiftLinear), n, 0.0), WithinRel(b, 1e-15));
    CHECK_THAT(tail_value(TailFamily(FamilyKind::Linear), n, 0.0), WithinRel(b, 1e-15));
    CHECK_THAT(tail_value(TailFamily(FamilyKind::SqrtDuembgen), n, 0.0), WithinRel(b, 1e-15));
    CHECK_THAT(tail_value(TailFamily(FamilyKind::LeeLinear), n, 0.0),
               WithinRel(std::sqrt(n + 1.0), 1e-15));
    CHECK_THAT(tail_value(TailFamily(FamilyKind::LimitAnsatz), n, 0.0),
               WithinAbs(std::sqrt(static_cast<double>(n)), 1e-15));
    const TailFamily expo(FamilyKind::ImprovedExponential);
    CHECK_THAT(tail_value(expo, n, 0.0), WithinRel(b, 1e-15));
    CHECK_THAT(tail_deriv(expo, n, 0.0), WithinRel(mod_constants(n).lambda, 1e-13));
  }
}

TEST_CASE("families stay positive", "[tail]") {
  for (FamilyKind kind : kBuiltinFamilies) {
    const TailFamily fam(kind);
    for (int n = 0; n <= 12; ++n) {
      for (double x = 0.01; x <= 30.0; x *= 1.7) CHECK(fam.value(n, x) > 0.0);
    }
  }
}

TEST_CASE("jet derivatives match finite differences", "[tail]") {
  const double h = 1e-5;
  for (FamilyKind kind : kBuiltinFamilies) {
    const TailFamily fam(kind);
    for (int n : {0, 1, 3, 7}) {
      for (double x : {0.2, 1.0, 3.3}) {
        const double d1 = (fam.value(n, x + h) - fam.value(n, x - h)) / (2 * h);
        const double d2 = (fam.deriv(n, x + h) - fam.deriv(n, x - h)) / (2 * h);
        CHECK_THAT(fam.deriv(n, x), WithinAbs(d1, 1e-8));
        CHECK_THAT(fam.second(n, x), WithinAbs(d2, 1e-7));
      }
    }
  }
}

TEST_CASE("family names", "[tail]") {
  for (FamilyKind kind : kBuiltinFamilies) {
    CHECK(parse_family(family_name(kind)) == kind);
  }
  CHECK(parse_family("custom") == FamilyKind::Custom);
  CHECK_FALSE(parse_family("gauss").has_value());
  CHECK(TailFamily(FamilyKind::ImprovedExponential).name() == "improved-expo");
  CHECK_THROWS_AS(TailFamily(FamilyKind::Custom), std::invalid_argument);
}

TEST_CASE("custom tails", "[tail]") {
  CustomTail quad;
  quad.value = [](int n, double x) { return x * x + n + 1.0; };
  quad.deriv = [](int, double x) { return 2.0 * x; };
  const TailFamily fam(quad);
  CHECK(fam.kind() == FamilyKind::Custom);
  CHECK(fam.value(2, 3.0) == 12.0);
  CHECK(fam.deriv(2, 3.0) == 6.0);
  // no second derivative supplied: differences of deriv
  CHECK_THAT(fam.second(2, 3.0), WithinRel(2.0, 1e-9));
  CHECK_THAT(fam.second(2, 0.0), WithinRel(2.0, 1e-9));
  // chain rule through a non-trivial inner jet
  const Jet inner{2.0, 3.0, 5.0};
  const Jet out = fam.jet(0, inner);
  CHECK_THAT(out.d1, WithinRel(4.0 * 3.0, 1e-14));
  CHECK_THAT(out.d2, WithinRel(2.0 * 9.0 + 4.0 * 5.0, 1e-8));

  CustomTail missing;
  missing.value = quad.value;
  CHECK_THROWS_AS(TailFamily(missing), std::invalid_argument);
  CHECK_THROWS_AS(fam.value(-1, 1.0), domain_error);
}
