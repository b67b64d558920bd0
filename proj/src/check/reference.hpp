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

#include <cstdint>

namespace shuffle_blanket::check {

// 50-decimal-digit re-evaluations of the instance constants and the delta
// bound, used as the independent reference the double-precision
// implementation is checked against. Computed with an arbitrary-precision
// float type whose arithmetic and transcendental functions share nothing
// with the double code paths; only the final values are rounded to double
// for comparison. kappa1 is evaluated directly (the wide exponent range
// makes e^{500} representable) and logged afterwards, a genuinely different
// route from the production log-space formula.

struct kappa_reference {
  double ln_kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  double kappa4 = 0.0;  // meaningful only when kappa4_finite
  double kappa5 = 0.0;
  bool kappa4_finite = true;
};

kappa_reference reference_kappas(double eps0, std::int64_t n, int k,
                                 double pi_target);

struct delta_reference {
  bool is_case1 = false;
  double ln_delta = 0.0;
};

delta_reference reference_ln_delta(double eps0, std::int64_t n, double eps);

// 50-digit string of selected reference constants, for oracle self-tests.
// name is one of "e", "ln2", "blanket_c".
const char* reference_constant_digits(const char* name);

}  // namespace shuffle_blanket::check
