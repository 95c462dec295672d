#pragma once

// Text and CSV front end: single evaluations, error tables, max-error
// reports, figure data and the verification summary. Each run_* function
// writes to the given streams and returns a process exit code.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mills/errors.hpp"
#include "mills/gauss_mills.hpp"
#include "mills/max_error.hpp"
#include "mills/oracle.hpp"
#include "mills/parallel.hpp"
#include "mills/tail_family.hpp"
#include "mills/verify.hpp"

namespace mills::report {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIoError = 3 };

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that reads back to the same double.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

/// xmin, xmin + step, ... up to xmax. Points are rounded to 12 significant
/// digits so 0.1 + 0.2 style drift never reaches the output.
inline std::vector<double> grid(double xmin, double xmax, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw usage_error("step must be positive");
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || xmax < xmin) {
    throw usage_error("need finite xmin <= xmax");
  }
  const auto count = static_cast<std::size_t>(std::floor((xmax - xmin) / step + 1e-9)) + 1;
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", xmin + static_cast<double>(i) * step);
    xs.push_back(std::strtod(buf.data(), nullptr));
  }
  return xs;
}

/// Monotone piecewise cubic through (x_i, y_i) with Fritsch-Carlson slopes.
/// Outside the table it continues linearly with the end slope.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {
    if (xs_.size() != ys_.size() || xs_.size() < 2) {
      throw usage_error("custom table needs at least two points");
    }
    for (std::size_t i = 1; i < xs_.size(); ++i) {
      if (!(xs_[i] > xs_[i - 1])) throw usage_error("custom table x must increase");
    }
    const std::size_t n = xs_.size();
    std::vector<double> secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      secant[i] = (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    }
    m_.assign(n, 0.0);
    m_[0] = secant[0];
    m_[n - 1] = secant[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      m_[i] = secant[i - 1] * secant[i] <= 0.0 ? 0.0 : 0.5 * (secant[i - 1] + secant[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (secant[i] == 0.0) {
        m_[i] = m_[i + 1] = 0.0;
        continue;
      }
      const double a = m_[i] / secant[i];
      const double b = m_[i + 1] / secant[i];
      const double s = a * a + b * b;
      if (s > 9.0) {
        const double tau = 3.0 / std::sqrt(s);
        m_[i] = tau * a * secant[i];
        m_[i + 1] = tau * b * secant[i];
      }
    }
  }

  // value, first and second derivative
  std::array<double, 3> eval(double x) const {
    if (x <= xs_.front()) return {ys_.front() + m_.front() * (x - xs_.front()), m_.front(), 0.0};
    if (x >= xs_.back()) return {ys_.back() + m_.back() * (x - xs_.back()), m_.back(), 0.0};
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double y0 = ys_[i], y1 = ys_[i + 1], m0 = m_[i] * h, m1 = m_[i + 1] * h;
    const double t2 = t * t, t3 = t2 * t;
    const double v = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 +
                     (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
    const double d = ((6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * m0 +
                      (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * m1) / h;
    const double s = ((12 * t - 6) * y0 + (6 * t - 4) * m0 + (-12 * t + 6) * y1 +
                      (6 * t - 2) * m1) / (h * h);
    return {v, d, s};
  }

 private:
  std::vector<double> xs_, ys_, m_;
};

/// Reads "x,beta" rows ('#' comments, optional header, comma or whitespace
/// separated) into a custom family. The same beta(x) is used at every depth.
inline TailFamily parse_custom_table(std::istream& in) {
  std::vector<double> xs, ys;
  std::string line;
  bool first_row = true;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a)) continue;
    fields >> b;
    double x = 0, y = 0;
    const auto ra = std::from_chars(a.data(), a.data() + a.size(), x);
    const auto rb = std::from_chars(b.data(), b.data() + b.size(), y);
    const bool numeric = !b.empty() && ra.ec == std::errc() && rb.ec == std::errc() &&
                         ra.ptr == a.data() + a.size() && rb.ptr == b.data() + b.size();
    if (!numeric) {
      if (first_row) {
        first_row = false;
        continue;  // header
      }
      throw usage_error("custom table: malformed row '" + line + "'");
    }
    first_row = false;
    xs.push_back(x);
    ys.push_back(y);
  }
  const auto spline = std::make_shared<const MonotoneCubic>(std::move(xs), std::move(ys));
  CustomTail tail;
  tail.value = [spline](int, double x) { return spline->eval(x)[0]; };
  tail.deriv = [spline](int, double x) { return spline->eval(x)[1]; };
  tail.second = [spline](int, double x) { return spline->eval(x)[2]; };
  return TailFamily(std::move(tail));
}

inline TailFamily load_custom_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read custom table '" + path + "'");
  return parse_custom_table(in);
}

struct FamilyArgs {
  std::string family = "classic";
  std::string variant = "sqrt-r";
  std::string custom_table;
};

inline SlopeVariant parse_variant(const std::string& name) {
  if (name == "sqrt-r") return SlopeVariant::SqrtR;
  if (name == "plain-r") return SlopeVariant::PlainR;
  throw usage_error("unknown variant '" + name + "' (sqrt-r or plain-r)");
}

inline TailFamily make_family(const FamilyArgs& a) {
  const auto kind = parse_family(a.family);
  if (!kind) throw usage_error("unknown family '" + a.family + "'");
  if (*kind == FamilyKind::Custom) {
    if (a.custom_table.empty()) throw usage_error("custom family needs --custom-table");
    return load_custom_table(a.custom_table);
  }
  return TailFamily(*kind, parse_variant(a.variant));
}

namespace detail {

// Runs `body`, mapping failures onto exit codes with a one-line message.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const io_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw io_error("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw io_error("write to '" + path + "' failed");
}

}  // namespace detail

struct EvalArgs {
  double x = 1.0;
  int n = 1;
  FamilyArgs family;
};

inline int run_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const TailFamily fam = make_family(a.family);
    const Approximation r = mills(a.x, fam, a.n);
    const double ref = oracle::reference_mills(a.x);
    out << "x=" << format_number(a.x) << '\n'
        << "family=" << fam.name() << '\n'
        << "n=" << a.n << '\n'
        << "value=" << format_number(r.value) << '\n'
        << "bound_side=" << bound_side_name(r.bound_side) << '\n';
    if (r.trunc_bound) out << "trunc_bound=" << format_number(*r.trunc_bound) << '\n';
    out << "reference=" << format_number(ref) << '\n'
        << "error=" << format_number(ref - r.value) << '\n';
    return static_cast<int>(kOk);
  });
}

struct TableArgs {
  double xmin = 0.0;
  double xmax = 6.0;
  double step = 0.01;
  int n = 1;
  FamilyArgs family{"improved-expo", "sqrt-r", ""};
  std::string out;  // empty or "-" for stdout
};

/// CSV text for the table; throws on bad arguments.
inline std::string table_csv(const TableArgs& a) {
  if (a.xmax < a.xmin) throw usage_error("xmin must not exceed xmax");
  const TailFamily fam = make_family(a.family);
  const std::vector<double> xs = grid(a.xmin, a.xmax, a.step);
  std::vector<double> approx(xs.size()), ref(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    approx[i] = mills_value(xs[i], fam, a.n);
    ref[i] = oracle::reference_mills(xs[i]);
  });
  std::string csv = "x,approx,reference,error\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    csv += format_number(xs[i]) + ',' + format_number(approx[i]) + ',' +
           format_number(ref[i]) + ',' + format_number(ref[i] - approx[i]) + '\n';
  }
  return csv;
}

inline int run_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string csv = table_csv(a);
    detail::write_output(a.out, csv, out);
    return static_cast<int>(kOk);
  });
}

struct MaxErrArgs {
  int nmin = 0;
  int nmax = 3;
  double xmin = 0.0;
  double xmax = 20.0;
  double step = 1e-3;
  FamilyArgs family{"improved-expo", "sqrt-r", ""};
};

inline int run_maxerr(const MaxErrArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (a.nmin < 0 || a.nmax < a.nmin) throw usage_error("need 0 <= nmin <= nmax");
    if (!(a.step > 0.0) || !(a.xmax > a.xmin)) throw usage_error("need xmin < xmax, step > 0");
    const TailFamily fam = make_family(a.family);
    MaxErrorOptions opt;
    opt.xmin = a.xmin;
    opt.xmax = a.xmax;
    opt.step = a.step;
    std::map<int, MaxErrorResult> cache;
    auto result = [&](int n) -> const MaxErrorResult& {
      auto it = cache.find(n);
      if (it == cache.end()) it = cache.emplace(n, max_abs_delta(fam, n, opt)).first;
      return it->second;
    };
    out << "family=" << fam.name() << " range=[" << format_number(a.xmin) << ','
        << format_number(a.xmax) << "] step=" << format_number(a.step) << '\n';
    for (int n = a.nmin; n <= a.nmax; ++n) {
      const MaxErrorResult& r = result(n);
      out << "n=" << n << " max_abs=" << format_number(r.max_abs)
          << " argmax=" << format_number(r.argmax)
          << " signed=" << format_number(r.signed_value)
          << " decays_beyond=" << (r.decays_beyond ? "yes" : "no") << '\n';
    }
    if (fam.kind() == FamilyKind::ImprovedExponential) {
      const auto& reported = verify::kReportedMaxErrors;
      for (int offset : {0, 1}) {
        bool all = true;
        out << "reported sequence, offset " << offset << ':';
        for (std::size_t i = 0; i < reported.size(); ++i) {
          const double got = result(offset + static_cast<int>(i)).max_abs;
          const double rel = (got - reported[i]) / reported[i];
          all = all && std::abs(rel) <= verify::kReportedTolerance;
          out << " n=" << offset + static_cast<int>(i) << ' ' << format_number(got) << " vs "
              << format_number(reported[i]) << " (" << format_number(rel) << ')';
        }
        out << " match=" << (all ? "yes" : "no") << '\n';
      }
    }
    return static_cast<int>(kOk);
  });
}

struct FigureArgs {
  int id = 1;
  std::string out;
  std::string custom_table;
  std::string variant = "sqrt-r";
};

inline int figure_depth(int id) {
  switch (id) {
    case 1: return 0;
    case 2: return 1;
    case 3: return 4;
    default: throw usage_error("figure id must be 1, 2 or 3");
  }
}

inline std::string figure_csv(const FigureArgs& a) {
  const int n = figure_depth(a.id);
  const SlopeVariant variant = parse_variant(a.variant);
  std::vector<TailFamily> families = {TailFamily(FamilyKind::ImprovedExponential, variant),
                                      TailFamily(FamilyKind::Linear),
                                      TailFamily(FamilyKind::SqrtDuembgen)};
  if (!a.custom_table.empty()) families.push_back(load_custom_table(a.custom_table));
  const std::vector<double> xs = grid(0.0, 6.0, 0.01);
  std::vector<double> values(xs.size() * families.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    for (std::size_t f = 0; f < families.size(); ++f) {
      values[i * families.size() + f] = delta(n, families[f], xs[i]);
    }
  });
  std::string csv = "x";
  for (const TailFamily& f : families) csv += ',' + std::string(f.name());
  csv += '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    csv += format_number(xs[i]);
    for (std::size_t f = 0; f < families.size(); ++f) {
      csv += ',' + format_number(values[i * families.size() + f]);
    }
    csv += '\n';
  }
  return csv;
}

inline int run_figure(const FigureArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const std::string csv = figure_csv(a);
    detail::write_output(a.out, csv, out);
    return static_cast<int>(kOk);
  });
}

struct VerifyArgs {
  std::vector<std::string> suites;  // empty: all
  bool inject_fault = false;
};

inline int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    verify::Options opt;
    opt.flip_sign_operator = a.inject_fault;
    const auto results = verify::run(a.suites, opt);
    std::size_t passed = 0;
    for (const verify::SuiteResult& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
      if (r.passed) ++passed;
    }
    out << passed << '/' << results.size() << " suites passed\n";
    return static_cast<int>(passed == results.size() ? kOk : kVerifyFailed);
  });
}

}  // namespace mills::report
