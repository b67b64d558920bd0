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

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "shuffle_blanket/error.hpp"

namespace shuffle_blanket {

// Constant C = 1 - e^{-2} used in the exponent of the blanket bound.
inline const double kBlanketC = 1.0 - std::exp(-2.0);

// One shuffle-model instance: n users each apply k-ary randomized response
// at local privacy level eps0, inputs drawn from the distribution pi over
// the alphabet {0, ..., k-1}.
struct shuffle_params {
  double eps0 = 0.0;       // local DP level, > 0
  std::int64_t n = 0;      // number of users / messages, >= 1
  int k = 0;               // alphabet size, >= 2
  std::vector<double> pi;  // data distribution, length k, sums to 1
};

// The pair of candidate inputs for the fixed user under adaptive DP.
struct target_pair {
  int x0 = 0;
  int x1 = 1;
};

// The instance constants evaluated for one target input x. kappa1 is kept
// exclusively in log space: for n = 1000, eps0 = 0.5 it is around e^{524},
// beyond any fixed-width float. kappa4 is +infinity when the artanh argument
// 2*sinh(eps0)/e^{eps0/2} reaches 1; downstream that sentinel means the
// Case-1 regime is never entered.
struct kappa_set {
  double ln_kappa1 = 0.0;
  double kappa2 = 0.0;
  double ln_kappa2 = 0.0;  // log1p-accurate log of kappa2
  double kappa3 = 0.0;
  double kappa4 = 0.0;  // +infinity sentinel when 2*sinh(eps0)/e^{eps0/2} >= 1
  double kappa5 = 0.0;
  int target = 0;  // the x whose pi-mass parameterizes kappa2 and kappa3
};

// Returns the violated-field error, or nullopt when params satisfy all
// invariants (eps0 > 0, n >= 1, k >= 2, pi a length-k distribution summing
// to 1 within 1e-9).
std::optional<input_error> validate_params(const shuffle_params& params);

// Throws the validation error, if any.
void require_valid(const shuffle_params& params);

// Throws input_error(bad_target) unless 0 <= pair.x0, pair.x1 < k and
// pair.x0 != pair.x1.
void require_valid(const target_pair& pair, int k);

// Evaluates kappa1..kappa5 for the given target input. kappa2 and kappa3
// use pi[target].
kappa_set compute_kappas(const shuffle_params& params, int target);

// log(e^x - e^{-x}) for x > 0, stable for both tiny and large x.
double ln_two_sinh(double x);

}  // namespace shuffle_blanket
