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

#include "shuffle_blanket/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shuffle_blanket/rng.hpp"

namespace shuffle_blanket {

namespace {

void require_oracle_size(std::int64_t n, int k) {
  if (n > kOracleMaxN || k > kOracleMaxK) {
    throw input_error(errc::too_large,
                      "exact oracle is limited to n <= " +
                          std::to_string(kOracleMaxN) +
                          ", k <= " + std::to_string(kOracleMaxK));
  }
}

void require_entries_in_range(const dataset& data, int k) {
  for (int x : data) {
    if (x < 0 || x >= k) {
      throw input_error(errc::bad_target,
                        "dataset entries must lie in {0, ..., k-1}");
    }
  }
}

}  // namespace

krr_matrix make_krr(double eps0, int k) {
  if (!(eps0 > 0.0) || !std::isfinite(eps0)) {
    throw input_error(errc::non_positive_epsilon0,
                      "epsilon0 must be a positive finite real");
  }
  if (k < 2) {
    throw input_error(errc::bad_alphabet, "k must be an integer >= 2");
  }
  const double denom = std::exp(eps0) + static_cast<double>(k) - 1.0;
  return krr_matrix{k, std::exp(eps0) / denom, 1.0 / denom};
}

histogram_dist exact_histogram_dist(const dataset& data,
                                    const krr_matrix& krr) {
  const std::int64_t n = static_cast<std::int64_t>(data.size());
  require_oracle_size(n, krr.k);
  require_entries_in_range(data, krr.k);

  histogram_dist dist;
  dist.n = n;
  dist.k = krr.k;
  dist.probs[histogram(static_cast<std::size_t>(krr.k), 0)] = 1.0;
  for (int x : data) {
    std::map<histogram, double> next;
    for (const auto& [h, p] : dist.probs) {
      for (int y = 0; y < krr.k; ++y) {
        histogram h2 = h;
        ++h2[static_cast<std::size_t>(y)];
        next[std::move(h2)] += p * (y == x ? krr.p_same : krr.p_diff);
      }
    }
    dist.probs = std::move(next);
  }
  return dist;
}

double hockey_stick_delta(const histogram_dist& p0, const histogram_dist& p1,
                          double eps) {
  if (!(eps >= 0.0)) {
    throw input_error(errc::negative_epsilon, "epsilon must be >= 0");
  }
  if (p0.n != p1.n || p0.k != p1.k) {
    throw input_error(errc::mismatched_support,
                      "distributions must be over the same (n, k)");
  }
  const double e_eps = std::exp(eps);
  double delta = 0.0;
  for (const auto& [h, p] : p0.probs) {
    const auto it = p1.probs.find(h);
    const double q = it == p1.probs.end() ? 0.0 : it->second;
    delta += std::max(p - e_eps * q, 0.0);
  }
  return delta;
}

double tight_adp(const shuffle_params& params, const dataset& others,
                 const target_pair& pair, double eps) {
  require_valid(params);
  require_valid(pair, params.k);
  if (static_cast<std::int64_t>(others.size()) != params.n - 1) {
    throw input_error(errc::bad_size, "others must have exactly n-1 entries");
  }
  const krr_matrix krr = make_krr(params.eps0, params.k);
  dataset d0 = others;
  d0.push_back(pair.x0);
  dataset d1 = others;
  d1.push_back(pair.x1);
  return hockey_stick_delta(exact_histogram_dist(d0, krr),
                            exact_histogram_dist(d1, krr), eps);
}

double tight_dp(const shuffle_params& params, const dataset& others,
                double eps) {
  require_valid(params);
  if (static_cast<std::int64_t>(others.size()) != params.n - 1) {
    throw input_error(errc::bad_size, "others must have exactly n-1 entries");
  }
  const krr_matrix krr = make_krr(params.eps0, params.k);
  std::vector<histogram_dist> dists;
  dists.reserve(static_cast<std::size_t>(params.k));
  for (int x = 0; x < params.k; ++x) {
    dataset d = others;
    d.push_back(x);
    dists.push_back(exact_histogram_dist(d, krr));
  }
  double worst = 0.0;
  for (int x0 = 0; x0 < params.k; ++x0) {
    for (int x1 = 0; x1 < params.k; ++x1) {
      if (x0 == x1) {
        continue;
      }
      worst = std::max(worst, hockey_stick_delta(dists[static_cast<std::size_t>(
                                                     x0)],
                                                 dists[static_cast<std::size_t>(
                                                     x1)],
                                                 eps));
    }
  }
  return worst;
}

std::vector<histogram> sample_shuffled(const dataset& data,
                                       const krr_matrix& krr, std::int64_t m,
                                       std::uint64_t seed) {
  if (m < 1) {
    throw input_error(errc::bad_size, "sample count must be >= 1");
  }
  require_entries_in_range(data, krr.k);
  std::vector<histogram> out;
  out.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    splitmix64 gen(seed + static_cast<std::uint64_t>(i));
    histogram h(static_cast<std::size_t>(krr.k), 0);
    for (int x : data) {
      const double u = gen.next_unit();
      int y = x;
      if (u >= krr.p_same) {
        // Map the flip mass onto the k-1 other values in increasing order.
        int j = static_cast<int>((u - krr.p_same) / krr.p_diff);
        j = std::min(j, krr.k - 2);
        y = j < x ? j : j + 1;
      }
      ++h[static_cast<std::size_t>(y)];
    }
    out.push_back(std::move(h));
  }
  return out;
}

histogram_dist empirical_dist(const std::vector<histogram>& samples, int k) {
  histogram_dist dist;
  dist.k = k;
  if (samples.empty()) {
    return dist;
  }
  dist.n = 0;
  for (int c : samples.front()) {
    dist.n += c;
  }
  const double w = 1.0 / static_cast<double>(samples.size());
  for (const histogram& h : samples) {
    dist.probs[h] += w;
  }
  return dist;
}

}  // namespace shuffle_blanket
