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
#include <doctest.h>

#include "shuffle_blanket/bounds.hpp"

using namespace shuffle_blanket;

namespace {

shuffle_params uniform_params(double eps0, std::int64_t n, int k) {
  return shuffle_params{eps0, n, k,
                        std::vector<double>(static_cast<std::size_t>(k),
                                            1.0 / static_cast<double>(k))};
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

TEST_CASE("k-RR row is a tight eps0-LDP distribution") {
  for (double eps0 : {0.1, 0.5, std::log(3.0), 2.0}) {
    for (int k : {2, 3, 5}) {
      const krr_matrix krr = make_krr(eps0, k);
      CHECK(std::abs(krr.p_same + (k - 1) * krr.p_diff - 1.0) < 1e-12);
      // The worst likelihood ratio over outputs and input pairs is exactly
      // p_same/p_diff.
      CHECK(std::abs(krr.p_same / krr.p_diff - std::exp(eps0)) <
            1e-12 * std::exp(eps0));
    }
  }
  CHECK_THROWS_AS(make_krr(0.0, 2), input_error);
  CHECK_THROWS_AS(make_krr(0.5, 1), input_error);
}

TEST_CASE("exact histogram law for two users, eps0 = ln 3") {
  // p_same = 3/4; reports (0,0): 9/16, one flip: 6/16, both flip: 1/16.
  const krr_matrix krr = make_krr(std::log(3.0), 2);
  const histogram_dist dist = exact_histogram_dist(dataset{0, 0}, krr);
  REQUIRE(dist.probs.size() == 3);
  CHECK(dist.probs.at({2, 0}) == doctest::Approx(9.0 / 16.0).epsilon(1e-14));
  CHECK(dist.probs.at({1, 1}) == doctest::Approx(6.0 / 16.0).epsilon(1e-14));
  CHECK(dist.probs.at({0, 2}) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("single user law is the k-RR row") {
  const krr_matrix krr = make_krr(std::log(3.0), 2);
  const histogram_dist dist = exact_histogram_dist(dataset{0}, krr);
  CHECK(dist.probs.at({1, 0}) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(dist.probs.at({0, 1}) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("a near-deterministic randomizer concentrates the law") {
  const krr_matrix krr = make_krr(50.0, 2);
  const histogram_dist dist =
      exact_histogram_dist(dataset{0, 0, 0, 1, 1}, krr);
  CHECK(dist.probs.at({3, 2}) >= 1.0 - 1e-9);
}

TEST_CASE("histogram law sums to one over a bounded support") {
  const krr_matrix krr = make_krr(0.37, 4);
  const dataset data{0, 1, 2, 3, 3, 2, 1, 0, 0, 1};
  const histogram_dist dist = exact_histogram_dist(data, krr);
  double sum = 0.0;
  for (const auto& [h, p] : dist.probs) {
    CHECK(p >= 0.0);
    sum += p;
  }
  CHECK(std::abs(sum - 1.0) < 1e-9);
  CHECK(static_cast<std::int64_t>(dist.probs.size()) <=
        binom(static_cast<std::int64_t>(data.size()) + 4 - 1, 4 - 1));
}

TEST_CASE("histogram law is permutation invariant") {
  const krr_matrix krr = make_krr(0.37, 3);
  const histogram_dist a =
      exact_histogram_dist(dataset{0, 0, 1, 1, 2, 2, 1}, krr);
  const histogram_dist b =
      exact_histogram_dist(dataset{2, 1, 0, 1, 2, 0, 1}, krr);
  REQUIRE(a.probs.size() == b.probs.size());
  for (const auto& [h, p] : a.probs) {
    CHECK(b.probs.at(h) == doctest::Approx(p).epsilon(1e-13));
  }
}

TEST_CASE("size guard rejects large instances") {
  const krr_matrix krr2 = make_krr(0.5, 2);
  CHECK_THROWS_AS(exact_histogram_dist(dataset(26, 0), krr2), input_error);
  const krr_matrix krr6{6, 0.4, 0.12};
  CHECK_THROWS_AS(exact_histogram_dist(dataset{0}, krr6), input_error);
  CHECK_THROWS_AS(
      tight_dp(uniform_params(0.5, 30, 2), dataset(29, 0), 0.5),
      input_error);
}

TEST_CASE("hockey-stick divergence worked examples") {
  histogram_dist p0;
  p0.n = 1;
  p0.k = 2;
  p0.probs[{1, 0}] = 0.75;
  p0.probs[{0, 1}] = 0.25;
  histogram_dist p1;
  p1.n = 1;
  p1.k = 2;
  p1.probs[{1, 0}] = 0.25;
  p1.probs[{0, 1}] = 0.75;

  CHECK(hockey_stick_delta(p0, p1, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hockey_stick_delta(p0, p1, std::log(3.0)) <= 1e-12);
  CHECK(hockey_stick_delta(p0, p0, 0.7) == 0.0);
}

TEST_CASE("hockey-stick divergence is non-increasing in eps and is TV at 0") {
  const krr_matrix krr = make_krr(0.5, 3);
  const histogram_dist p0 = exact_histogram_dist(dataset{0, 0, 1, 2}, krr);
  const histogram_dist p1 = exact_histogram_dist(dataset{0, 0, 1, 1}, krr);

  double manual_tv = 0.0;
  for (const auto& [h, p] : p0.probs) {
    const auto it = p1.probs.find(h);
    manual_tv += std::max(p - (it == p1.probs.end() ? 0.0 : it->second), 0.0);
  }
  CHECK(hockey_stick_delta(p0, p1, 0.0) ==
        doctest::Approx(manual_tv).epsilon(1e-14));

  double prev = 1.0;
  for (double eps : {0.0, 0.1, 0.3, 0.7, 1.5, 3.0}) {
    const double d = hockey_stick_delta(p0, p1, eps);
    CHECK(d <= prev + 1e-15);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
    prev = d;
  }
}

TEST_CASE("hockey-stick divergence rejects mismatched supports") {
  const krr_matrix krr2 = make_krr(0.5, 2);
  const krr_matrix krr3 = make_krr(0.5, 3);
  const histogram_dist a = exact_histogram_dist(dataset{0, 1}, krr2);
  const histogram_dist b = exact_histogram_dist(dataset{0, 1}, krr3);
  const histogram_dist c = exact_histogram_dist(dataset{0, 1, 1}, krr2);
  CHECK_THROWS_AS(hockey_stick_delta(a, b, 0.5), input_error);
  CHECK_THROWS_AS(hockey_stick_delta(a, c, 0.5), input_error);
  CHECK_THROWS_AS(hockey_stick_delta(a, a, -0.1), input_error);
}

TEST_CASE("tight ADP on a single shuffled report") {
  // Shuffling one eps0-DP report is exactly eps0-DP: delta-free at eps0,
  // total variation 1/2 at eps = 0.
  const shuffle_params params = uniform_params(std::log(3.0), 1, 2);
  CHECK(tight_adp(params, {}, target_pair{0, 1}, 0.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(tight_adp(params, {}, target_pair{0, 1}, std::log(3.0)) <= 1e-12);
}

TEST_CASE("tight DP is the max over ordered pairs") {
  const shuffle_params params = uniform_params(0.5, 4, 2);
  const dataset others{0, 0, 1};
  const double dp = tight_dp(params, others, 0.3);
  const double d01 = tight_adp(params, others, target_pair{0, 1}, 0.3);
  const double d10 = tight_adp(params, others, target_pair{1, 0}, 0.3);
  CHECK(dp == doctest::Approx(std::max(d01, d10)).epsilon(1e-14));
  CHECK(tight_dp(uniform_params(std::log(3.0), 1, 2), {}, 0.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("tight DP is invariant under permuting the fixed entries") {
  const shuffle_params params = uniform_params(0.5, 5, 2);
  const double a = tight_dp(params, dataset{0, 0, 1, 1}, 0.3);
  const double b = tight_dp(params, dataset{1, 1, 0, 0}, 0.3);
  CHECK(a == doctest::Approx(b).epsilon(1e-13));
  CHECK(a >= 0.0);
  CHECK(a <= 1.0);
}

TEST_CASE("tight ADP validates its inputs") {
  const shuffle_params params = uniform_params(0.5, 3, 2);
  CHECK_THROWS_AS(tight_adp(params, dataset{0, 0}, target_pair{0, 0}, 0.5),
                  input_error);
  CHECK_THROWS_AS(tight_adp(params, dataset{0, 0}, target_pair{0, 2}, 0.5),
                  input_error);
  CHECK_THROWS_AS(tight_adp(params, dataset{0}, target_pair{0, 1}, 0.5),
                  input_error);
}

TEST_CASE("sampling is deterministic and partition invariant") {
  const krr_matrix krr = make_krr(0.5, 2);
  const dataset data{0, 0, 0, 1, 1};
  const auto a = sample_shuffled(data, krr, 100, 42);
  const auto b = sample_shuffled(data, krr, 100, 42);
  CHECK(a == b);
  CHECK(a != sample_shuffled(data, krr, 100, 43));
  // Per-sample streams: a prefix of the index range is the same regardless
  // of how many samples were requested.
  const auto prefix = sample_shuffled(data, krr, 40, 42);
  CHECK(std::equal(prefix.begin(), prefix.end(), a.begin()));
}

TEST_CASE("a near-deterministic randomizer samples the true histogram") {
  const krr_matrix krr = make_krr(50.0, 2);
  const dataset data{0, 0, 1};
  const auto samples = sample_shuffled(data, krr, 10000, 7);
  const histogram truth{2, 1};
  const auto hits = static_cast<double>(
      std::count(samples.begin(), samples.end(), truth));
  CHECK(hits / 10000.0 >= 0.999);
}

TEST_CASE("empirical law tracks the exact law") {
  const krr_matrix krr = make_krr(0.5, 2);
  const dataset data(10, 0);
  const auto samples = sample_shuffled(data, krr, 100000, 20260808);
  const histogram_dist emp = empirical_dist(samples, 2);
  double total = 0.0;
  for (const auto& [h, p] : emp.probs) {
    total += p;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  const double tv =
      hockey_stick_delta(emp, exact_histogram_dist(data, krr), 0.0);
  CHECK(tv < 0.02);
}
