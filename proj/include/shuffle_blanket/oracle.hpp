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
#include <map>
#include <vector>

#include "shuffle_blanket/params.hpp"

namespace shuffle_blanket {

// A uniformly shuffled message vector carries exactly the information of its
// histogram (every ordering of a multiset is equally likely), so the exact
// computations below run on k-bin count vectors instead of Y^n. That keeps
// the state space at C(n+k-1, k-1).

// k-ary randomized response transition row: report the true value with
// probability p_same, any other fixed value with probability p_diff.
struct krr_matrix {
  int k = 0;
  double p_same = 0.0;  // e^{eps0} / (e^{eps0} + k - 1)
  double p_diff = 0.0;  // 1 / (e^{eps0} + k - 1)
};

krr_matrix make_krr(double eps0, int k);

// The n per-user true values, each in {0, ..., k-1}.
using dataset = std::vector<int>;

// k non-negative counts summing to n.
using histogram = std::vector<int>;

// Exact probability law over message histograms of total count n.
struct histogram_dist {
  std::int64_t n = 0;
  int k = 0;
  std::map<histogram, double> probs;
};

// Size guard for the exact oracle: C(25+5-1, 5-1) states at most, sub-second.
constexpr std::int64_t kOracleMaxN = 25;
constexpr int kOracleMaxK = 5;

// Exact shuffled-output law: per user, convolves the k-RR row into the
// running distribution over count vectors. Throws input_error(too_large)
// past the size guard.
histogram_dist exact_histogram_dist(const dataset& data,
                                    const krr_matrix& krr);

// One-directional hockey-stick divergence sum_h max(P0(h) - e^eps P1(h), 0):
// exactly the tight ADP delta at level eps. Requires eps >= 0 and both
// distributions over the same (n, k).
double hockey_stick_delta(const histogram_dist& p0, const histogram_dist& p1,
                          double eps);

// Tight ADP delta for the fixed user reporting pair.x0 versus pair.x1, with
// the other n-1 entries given. others.size() must be n-1.
double tight_adp(const shuffle_params& params, const dataset& others,
                 const target_pair& pair, double eps);

// Tight DP delta against the strong adversary: max of tight_adp over all
// ordered pairs x0 != x1.
double tight_dp(const shuffle_params& params, const dataset& others,
                double eps);

// m independent draws of the shuffled output histogram: apply k-RR per
// entry, record the histogram (the uniform permutation is implicit in the
// histogram reduction). Sample i uses its own splitmix64 stream seeded
// seed + i, so any partitioning of the index range reproduces the same
// sequence. Deterministic: same seed, same output.
std::vector<histogram> sample_shuffled(const dataset& data,
                                       const krr_matrix& krr, std::int64_t m,
                                       std::uint64_t seed);

// Empirical law of a sample set, comparable against exact_histogram_dist
// (e.g. via hockey_stick_delta at eps = 0, which is total variation).
histogram_dist empirical_dist(const std::vector<histogram>& samples, int k);

}  // namespace shuffle_blanket
