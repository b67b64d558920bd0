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

#pragma once

#include <optional>

#include "shuffle_blanket/params.hpp"

namespace shuffle_blanket {

// The blanket bound splits on whether
//   e^{-eps0} <= (e^eps - 1)^2 / ((e^eps + 1)^2 (e^{eps0} - e^{-eps0})^2).
// Case 1 takes the non-strict inequality, so the tie at the boundary
// (eps equal to kappa4) is Case 1.
enum class case_tag { case1, case2 };

const char* case_name(case_tag tag);

// The minimum delta permitted by the bound at a given epsilon. delta is
// carried as ln_delta: realistic parameters push delta far below the
// double underflow threshold. delta_clamped = min(exp(ln_delta), 1); any
// delta >= 1 is vacuous.
struct delta_bound {
  case_tag which = case_tag::case2;
  double ln_delta = 0.0;
  double delta_clamped = 0.0;
  double epsilon = 0.0;
};

// Decides the case split. Throws input_error(non_positive_epsilon0 /
// non_positive_epsilon) for non-positive inputs.
case_tag select_case(double eps0, double eps);

// Evaluates the bound's log-delta with the exponent of the requested case,
// regardless of which case actually applies at eps. Exposed so the two
// branch expressions can be compared at the case boundary.
double ln_delta_for_case(const shuffle_params& params, double eps,
                         case_tag which);

// The minimum delta the bound permits at eps, with the case chosen by
// select_case. Throws on invalid params or eps <= 0 (the bound divides by
// e^eps - 1).
delta_bound min_delta_bound(const shuffle_params& params, double eps);

// Inverts the bound: finds eps in [lo, hi] with
// |ln delta(eps) - ln delta_target| <= 1e-9 by a 1024-point scan followed
// by bisection on the first sign change. Returns nullopt when no sign
// change is detected (ln delta is not monotone in eps, so a scan rather
// than a Newton step). Throws input_error(bad_interval) unless
// 0 < lo < hi, and bad_delta_target unless delta_target is in (0, 1).
std::optional<double> epsilon_for_delta(const shuffle_params& params,
                                        double delta_target, double lo,
                                        double hi);

}  // namespace shuffle_blanket
