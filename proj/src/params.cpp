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

#include "shuffle_blanket/params.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace shuffle_blanket {

namespace {

constexpr double kPiSumTolerance = 1e-9;

}  // namespace

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_positive_epsilon0:
      return "NonPositiveEpsilon0";
    case errc::bad_alphabet:
      return "BadAlphabet";
    case errc::bad_size:
      return "BadSize";
    case errc::bad_distribution:
      return "BadDistribution";
    case errc::bad_target:
      return "BadTarget";
    case errc::non_positive_epsilon:
      return "NonPositiveEpsilon";
    case errc::negative_epsilon:
      return "NegativeEpsilon";
    case errc::bad_interval:
      return "BadInterval";
    case errc::bad_delta_target:
      return "BadDeltaTarget";
    case errc::too_large:
      return "TooLarge";
    case errc::mismatched_support:
      return "MismatchedSupport";
    case errc::bad_config:
      return "BadConfig";
  }
  return "UnknownError";
}

std::optional<input_error> validate_params(const shuffle_params& params) {
  if (!(params.eps0 > 0.0) || !std::isfinite(params.eps0)) {
    return input_error(errc::non_positive_epsilon0,
                       "epsilon0 must be a positive finite real");
  }
  if (params.n < 1) {
    return input_error(errc::bad_size, "n must be a positive integer");
  }
  if (params.k < 2) {
    return input_error(errc::bad_alphabet, "k must be an integer >= 2");
  }
  if (static_cast<int>(params.pi.size()) != params.k) {
    return input_error(errc::bad_distribution,
                       "pi must have exactly k entries, got " +
                           std::to_string(params.pi.size()));
  }
  double sum = 0.0;
  for (double p : params.pi) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      return input_error(errc::bad_distribution,
                         "pi entries must be non-negative finite reals");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPiSumTolerance) {
    return input_error(errc::bad_distribution,
                       "pi must sum to 1 within 1e-9, got sum = " +
                           std::to_string(sum));
  }
  return std::nullopt;
}

void require_valid(const shuffle_params& params) {
  if (auto err = validate_params(params)) {
    throw *err;
  }
}

void require_valid(const target_pair& pair, int k) {
  if (pair.x0 < 0 || pair.x0 >= k || pair.x1 < 0 || pair.x1 >= k) {
    throw input_error(errc::bad_target,
                      "target pair elements must lie in {0, ..., k-1}");
  }
  if (pair.x0 == pair.x1) {
    throw input_error(errc::bad_target, "target pair must have x0 != x1");
  }
}

double ln_two_sinh(double x) {
  // log(e^x - e^{-x}). sinh is accurate for small x; the log1p form avoids
  // overflow of sinh for large x.
  if (x < 1.0) {
    return std::log(2.0 * std::sinh(x));
  }
  return x + std::log1p(-std::exp(-2.0 * x));
}

kappa_set compute_kappas(const shuffle_params& params, int target) {
  require_valid(params);
  if (target < 0 || target >= params.k) {
    throw input_error(errc::bad_target,
                      "target must lie in {0, ..., k-1}, got " +
                          std::to_string(target));
  }

  const double eps0 = params.eps0;
  const double n = static_cast<double>(params.n);
  const double pix = params.pi[static_cast<std::size_t>(target)];
  const double em1 = std::expm1(eps0);  // e^{eps0} - 1

  kappa_set ks;
  ks.target = target;
  ks.ln_kappa1 =
      2.0 * ln_two_sinh(eps0) + kBlanketC * n * std::exp(-eps0) - std::log(4.0);

  const double k2_excess = em1 / (n + em1 * pix * (n - 1.0));
  ks.kappa2 = 1.0 + k2_excess;
  ks.ln_kappa2 = std::log1p(k2_excess);

  ks.kappa3 = (n + em1 * (n * pix + 1.0 - pix)) /
              (std::exp(eps0) + static_cast<double>(params.k) - 1.0);

  const double artanh_arg = 2.0 * std::sinh(eps0) / std::exp(eps0 / 2.0);
  ks.kappa4 = artanh_arg < 1.0 ? 2.0 * std::atanh(artanh_arg)
                               : std::numeric_limits<double>::infinity();

  const double sh = std::sinh(eps0);
  ks.kappa5 = sh * sh / n;
  return ks;
}

}  // namespace shuffle_blanket
