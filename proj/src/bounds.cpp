// Copyright 2026 The Shuffle Blanket Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shuffle_blanket/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace shuffle_blanket {

namespace {

constexpr int kScanPoints = 1024;
constexpr double kLnDeltaTolerance = 1e-9;

// log(e^x + 1), valid for all x > 0 including x past the exp overflow point.
double ln_exp_plus_1(double x) { return x + std::log1p(std::exp(-x)); }

// log(e^x - 1) for x > 0.
double ln_exp_minus_1(double x) {
  if (x < 30.0) {
    return std::log(std::expm1(x));
  }
  return x + std::log1p(-std::exp(-x));
}

// log of the Case-2 exponent (e^eps-1)^2 / ((e^eps+1)^2 (e^{eps0}-e^{-eps0})^2)
// via the identity (e^eps-1)/(e^eps+1) = tanh(eps/2).
double ln_case2_exponent(double eps0, double eps) {
  return 2.0 * (std::log(std::tanh(eps / 2.0)) - ln_two_sinh(eps0));
}

void require_positive(double eps0, double eps) {
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) {
    throw input_error(errc::non_positive_epsilon0,
                      "epsilon0 must be a positive finite real");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw input_error(errc::non_positive_epsilon,
                      "epsilon must be a positive finite real");
  }
}

}  // namespace

const char* case_name(case_tag tag) {
  return tag == case_tag::case1 ? "Case1" : "Case2";
}

case_tag select_case(double eps0, double eps) {
  require_positive(eps0, eps);
  // Compare in log space; both sides are positive.
  return -eps0 <= ln_case2_exponent(eps0, eps) ? case_tag::case1
                                               : case_tag::case2;
}

double ln_delta_for_case(const shuffle_params& params, double eps,
                         case_tag which) {
  require_valid(params);
  require_positive(params.eps0, eps);
  const double n = static_cast<double>(params.n);
  const double exponent = which == case_tag::case1
                              ? std::exp(-params.eps0)
                              : std::exp(ln_case2_exponent(params.eps0, eps));
  return 2.0 * ln_exp_plus_1(eps) + 2.0 * ln_two_sinh(params.eps0) -
         std::log(4.0 * n) - ln_exp_minus_1(eps) - kBlanketC * n * exponent;
}

delta_bound min_delta_bound(const shuffle_params& params, double eps) {
  delta_bound out;
  out.which = select_case(params.eps0, eps);
  out.ln_delta = ln_delta_for_case(params, eps, out.which);
  out.delta_clamped = std::min(std::exp(out.ln_delta), 1.0);
  out.epsilon = eps;
  return out;
}

std::optional<double> epsilon_for_delta(const shuffle_params& params,
                                        double delta_target, double lo,
                                        double hi) {
  require_valid(params);
  if (!(lo > 0.0) || !(lo < hi) || !std::isfinite(hi)) {
    throw input_error(errc::bad_interval,
                      "search interval must satisfy 0 < lo < hi");
  }
  if (!(delta_target > 0.0) || !(delta_target < 1.0)) {
    throw input_error(errc::bad_delta_target,
                      "delta target must lie in (0, 1)");
  }
  const double ln_target = std::log(delta_target);
  const auto residual = [&](double eps) {
    return min_delta_bound(params, eps).ln_delta - ln_target;
  };

  double prev_eps = lo;
  double prev_f = residual(lo);
  if (prev_f == 0.0) {
    return lo;
  }
  for (int i = 1; i < kScanPoints; ++i) {
    const double t = static_cast<double>(i) / (kScanPoints - 1);
    const double eps = lo + t * (hi - lo);
    const double f = residual(eps);
    if (f == 0.0) {
      return eps;
    }
    if (std::signbit(f) != std::signbit(prev_f)) {
      // Bisect [prev_eps, eps] until the log-delta residual is within
      // tolerance; the bracket keeps halving so the loop terminates at
      // double resolution at the latest.
      double a = prev_eps;
      double fa = prev_f;
      double b = eps;
      double mid = a;
      for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
          break;
        }
        const double fm = residual(mid);
        if (std::abs(fm) <= kLnDeltaTolerance) {
          return mid;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      if (std::abs(residual(mid)) <= kLnDeltaTolerance) {
        return mid;
      }
      return std::nullopt;
    }
    prev_eps = eps;
    prev_f = f;
  }
  return std::nullopt;
}

}  // namespace shuffle_blanket
