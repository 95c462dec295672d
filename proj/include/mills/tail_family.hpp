#pragma once

// Terminating-denominator families beta_n(x) for Laplace's fraction and the
// per-depth constants that make the modified convergents match R and its
// first two derivatives at 0.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mills/errors.hpp"
#include "mills/jet.hpp"
#include "mills/laplace.hpp"

namespace mills {

/// beta_n(0) = sqrt(2) Gamma(n/2 + 1) / Gamma(n/2 + 1/2), the unique value
/// with R_n(0) = sqrt(pi/2).
inline double beta0(int n) {
  if (n < 0) throw domain_error("beta0: negative index");
  const double h = 0.5 * n;
  if (n <= 300) return std::sqrt(2.0) * std::tgamma(h + 1.0) / std::tgamma(h + 0.5);
  return std::sqrt(2.0) * std::exp(std::lgamma(h + 1.0) - std::lgamma(h + 0.5));
}

/// Same constant by beta_0(0) = sqrt(2/pi), beta_k(0) = k / beta_{k-1}(0).
inline double beta0_by_recursion(int n) {
  if (n < 0) throw domain_error("beta0_by_recursion: negative index");
  double b = 1.0 / kSqrtHalfPi;
  for (int k = 1; k <= n; ++k) b = k / b;
  return b;
}

/// How c_n in c_n x + beta_n(0) exp(-sqrt(r_n) x) is formed. Only SqrtR
/// satisfies beta_n'(0) = lambda_n; PlainR is kept for comparison.
enum class SlopeVariant { SqrtR, PlainR };

struct ModConstants {
  int n = 0;
  double beta0 = 0.0;   // beta_n(0)
  double lambda = 0.0;  // beta_n(0)^2 - n, the slope fit
  double r = 0.0;       // 2 (beta_n(0)^2 - n - 1/2), the curvature fit
  double c = 0.0;       // linear coefficient of the exponential family
};

inline ModConstants compute_mod_constants(int n, SlopeVariant variant) {
  ModConstants m;
  m.n = n;
  m.beta0 = beta0(n);
  const double b2 = m.beta0 * m.beta0;
  m.lambda = b2 - n;
  m.r = 2.0 * (b2 - n - 0.5);
  m.c = m.lambda +
        (variant == SlopeVariant::SqrtR ? std::sqrt(m.r) : m.r) * m.beta0;
  return m;
}

namespace detail {

inline constexpr int kConstantTableSize = 128;

inline const std::array<ModConstants, kConstantTableSize>& constant_table(
    SlopeVariant variant) {
  static const auto make = [](SlopeVariant v) {
    std::array<ModConstants, kConstantTableSize> t{};
    for (int n = 0; n < kConstantTableSize; ++n) t[n] = compute_mod_constants(n, v);
    return t;
  };
  static const auto sqrt_table = make(SlopeVariant::SqrtR);
  static const auto plain_table = make(SlopeVariant::PlainR);
  return variant == SlopeVariant::SqrtR ? sqrt_table : plain_table;
}

}  // namespace detail

inline ModConstants mod_constants(int n,
                                  SlopeVariant variant = SlopeVariant::SqrtR) {
  if (n < 0) throw domain_error("mod_constants: negative index");
  if (n < detail::kConstantTableSize) return detail::constant_table(variant)[n];
  return compute_mod_constants(n, variant);
}

enum class FamilyKind {
  Classic,              // beta = x
  LimitAnsatz,          // x/2 + sqrt(x^2/4 + n)
  SqrtDuembgen,         // x/2 + sqrt(x^2/4 + beta_n(0)^2)
  Linear,               // lambda_n x + beta_n(0)
  LeeLinear,            // x + sqrt(n + 1)
  ShiftLinear,          // x + beta_n(0)
  ImprovedExponential,  // c_n x + beta_n(0) exp(-sqrt(r_n) x)
  Custom,
};

inline constexpr std::array<FamilyKind, 7> kBuiltinFamilies = {
    FamilyKind::Classic,      FamilyKind::LimitAnsatz, FamilyKind::SqrtDuembgen,
    FamilyKind::Linear,       FamilyKind::LeeLinear,   FamilyKind::ShiftLinear,
    FamilyKind::ImprovedExponential};

inline std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Classic: return "classic";
    case FamilyKind::LimitAnsatz: return "limit-ansatz";
    case FamilyKind::SqrtDuembgen: return "sqrt";
    case FamilyKind::Linear: return "linear";
    case FamilyKind::LeeLinear: return "lee";
    case FamilyKind::ShiftLinear: return "shift-linear";
    case FamilyKind::ImprovedExponential: return "improved-expo";
    case FamilyKind::Custom: return "custom";
  }
  return "unknown";
}

inline std::optional<FamilyKind> parse_family(std::string_view name) {
  for (FamilyKind k : kBuiltinFamilies) {
    if (family_name(k) == name) return k;
  }
  if (name == "custom") return FamilyKind::Custom;
  return std::nullopt;
}

/// Caller-supplied terminating denominator. `second` may be left empty, in
/// which case beta'' is taken by central differences of `deriv`.
struct CustomTail {
  std::function<double(int, double)> value;
  std::function<double(int, double)> deriv;
  std::function<double(int, double)> second;
};

inline constexpr double kCustomSecondStep = 1e-5;

class TailFamily {
 public:
  TailFamily(FamilyKind kind = FamilyKind::Classic,
             SlopeVariant variant = SlopeVariant::SqrtR)
      : kind_(kind), variant_(variant) {
    if (kind == FamilyKind::Custom) {
      throw std::invalid_argument("TailFamily: custom families need a CustomTail");
    }
  }

  explicit TailFamily(CustomTail custom)
      : kind_(FamilyKind::Custom),
        custom_(std::make_shared<const CustomTail>(std::move(custom))) {
    if (!custom_->value || !custom_->deriv) {
      throw std::invalid_argument("TailFamily: custom tail needs value and deriv");
    }
  }

  FamilyKind kind() const { return kind_; }
  SlopeVariant variant() const { return variant_; }
  std::string_view name() const { return family_name(kind_); }

  double value(int n, double x) const { return jet(n, Jet::variable(x)).v; }
  double deriv(int n, double x) const { return jet(n, Jet::variable(x)).d1; }
  double second(int n, double x) const { return jet(n, Jet::variable(x)).d2; }

  /// beta_n composed with the jet `x`.
  Jet jet(int n, Jet x) const {
    if (n < 0) throw domain_error("TailFamily: negative index");
    if (kind_ == FamilyKind::Custom) return custom_jet(n, x);
    return builtin(n, x);
  }

 private:
  Jet builtin(int n, Jet x) const {
    switch (kind_) {
      case FamilyKind::Classic:
        return x;
      case FamilyKind::LimitAnsatz:
        return 0.5 * x + sqrt(0.25 * x * x + Jet(static_cast<double>(n)));
      case FamilyKind::SqrtDuembgen: {
        const double b = mod_constants(n).beta0;
        return 0.5 * x + sqrt(0.25 * x * x + Jet(b * b));
      }
      case FamilyKind::Linear: {
        const ModConstants m = mod_constants(n);
        return m.lambda * x + Jet(m.beta0);
      }
      case FamilyKind::LeeLinear:
        return x + Jet(std::sqrt(n + 1.0));
      case FamilyKind::ShiftLinear:
        return x + Jet(mod_constants(n).beta0);
      case FamilyKind::ImprovedExponential: {
        const ModConstants m = mod_constants(n, variant_);
        return m.c * x + m.beta0 * exp(-std::sqrt(m.r) * x);
      }
      case FamilyKind::Custom:
        break;
    }
    throw std::logic_error("TailFamily: unhandled family");
  }

  Jet custom_jet(int n, Jet x) const {
    const double v = custom_->value(n, x.v);
    const double d = custom_->deriv(n, x.v);
    const double s =
        custom_->second
            ? custom_->second(n, x.v)
            : (custom_->deriv(n, x.v + kCustomSecondStep) -
               custom_->deriv(n, std::max(0.0, x.v - kCustomSecondStep))) /
                  (x.v + kCustomSecondStep - std::max(0.0, x.v - kCustomSecondStep));
    // chain rule through the inner jet
    return {v, d * x.d1, s * x.d1 * x.d1 + d * x.d2};
  }

  FamilyKind kind_;
  SlopeVariant variant_ = SlopeVariant::SqrtR;
  std::shared_ptr<const CustomTail> custom_;
};

inline double tail_value(const TailFamily& family, int n, double x) {
  return family.value(n, x);
}

inline double tail_deriv(const TailFamily& family, int n, double x) {
  return family.deriv(n, x);
}

}  // namespace mills
