#pragma once

// Iterated logarithms and the exponential tower e_0 = 1, e_l = exp(e_{l-1}).

namespace dlab::asymptotics {

/// Highest level with a finite tower constant (e_3 ~ 3.8e6; e_4 overflows).
inline constexpr int kMaxFiniteTower = 3;

/// e_level; +infinity for level > kMaxFiniteTower.
double tower(int level);

/// log_j^+ |x|: x itself for j = 0, otherwise j applications of max(log y, 0).
/// Any stage that clips yields 0 for all later stages.
double iter_log_plus(int j, double x);

/// log_level(e_level * e^v) for v >= 0, computed as log_{level-1}(e_{level-1} + v)
/// so that huge v (tiny 1 - |z|^2) stays representable. level >= 1.
double shifted_iter_log(int level, double v);

/// Inverse of shifted_iter_log in v for level >= 1: the v >= 0 with
/// shifted_iter_log(level, v) = q, for q >= 1. Returns +infinity on overflow.
double shifted_iter_exp(int level, double q);

/// prod_{m=1}^{j-2} log_{m-1}(e_{j-2} + v) / log_{m-1}(e_{m-1} + v), the factor left over when
/// the measure prod_{l=1}^{j-2} L_l^{-1} dv is written as a multiple of dL_{j-1}, where
/// L_l = shifted_iter_log(l, v). Lies in [1, prod e_{j-1-m}] and is 1 for j <= 2 or v = inf.
double iter_log_product_ratio(int j, double v);

}  // namespace dlab::asymptotics
