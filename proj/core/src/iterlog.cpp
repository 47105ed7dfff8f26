#include "dlab/iterlog.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "dlab/errors.hpp"

namespace dlab::asymptotics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::array<double, kMaxFiniteTower + 1>& tower_table() {
  static const std::array<double, kMaxFiniteTower + 1> table = [] {
    std::array<double, kMaxFiniteTower + 1> t{};
    t[0] = 1.0;
    for (int l = 1; l <= kMaxFiniteTower; ++l) t[l] = std::exp(t[l - 1]);
    return t;
  }();
  return table;
}

}  // namespace

double tower(int level) {
  if (level < 0) throw DomainError("tower: level must be >= 0");
  if (level > kMaxFiniteTower) return kInf;
  return tower_table()[level];
}

double iter_log_plus(int j, double x) {
  if (j < 0) throw DomainError("iter_log_plus: j must be >= 0");
  if (j == 0) return x;
  double y = std::abs(x);
  for (int i = 0; i < j; ++i) {
    if (!(y > 1.0)) return 0.0;
    y = std::log(y);
  }
  return y;
}

double shifted_iter_log(int level, double v) {
  if (level < 1) throw DomainError("shifted_iter_log: level must be >= 1");
  double y = tower(level - 1) + v;
  for (int i = 1; i < level; ++i) y = std::log(y);
  return y;
}

double shifted_iter_exp(int level, double q) {
  if (level < 1) throw DomainError("shifted_iter_exp: level must be >= 1");
  double y = q;
  for (int i = 1; i < level; ++i) {
    if (y > 709.0) return kInf;
    y = std::exp(y);
  }
  const double v = y - tower(level - 1);
  return v < 0.0 ? 0.0 : v;
}

double iter_log_product_ratio(int j, double v) {
  if (j <= 2 || std::isinf(v)) return 1.0;
  const double top = tower(j - 2);
  double ratio = 1.0;
  for (int m = 1; m <= j - 2; ++m) {
    double num = top + v;
    double den = tower(m - 1) + v;
    for (int i = 0; i < m - 1; ++i) {
      num = std::log(num);
      den = std::log(den);
    }
    ratio *= num / den;
  }
  return ratio;
}

}  // namespace dlab::asymptotics
