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

#include <cmath>
#include <doctest.h>

#include "shuffle_blanket/rng.hpp"

using namespace shuffle_blanket;

namespace {

shuffle_params uniform_params(double eps0, std::int64_t n, int k) {
  return shuffle_params{eps0, n, k,
                        std::vector<double>(static_cast<std::size_t>(k),
                                            1.0 / static_cast<double>(k))};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double kappa4_of(double eps0) {
  return compute_kappas(uniform_params(eps0, 5, 2), 0).kappa4;
}

// The printed form of the case inequality, for cross-checking the
// log-space evaluation used by select_case.
bool case1_direct(double eps0, double eps) {
  const double lhs = std::exp(-eps0);
  const double num = (std::exp(eps) - 1.0) * (std::exp(eps) - 1.0);
  const double den = (std::exp(eps) + 1.0) * (std::exp(eps) + 1.0) *
                     (std::exp(eps0) - std::exp(-eps0)) *
                     (std::exp(eps0) - std::exp(-eps0));
  return lhs <= num / den;
}

}  // namespace

TEST_CASE("select_case worked examples") {
  // eps0=0.5, eps=1.0: LHS 0.60653 > RHS 0.19661.
  CHECK(select_case(0.5, 1.0) == case_tag::case2);
  // eps0=0.1, eps=0.5: RHS 1.49464 >= LHS 0.90484.
  CHECK(select_case(0.1, 0.5) == case_tag::case1);
  CHECK(!case1_direct(0.5, 1.0));
  CHECK(case1_direct(0.1, 0.5));
}

TEST_CASE("select_case agrees with the printed inequality form") {
  splitmix64 gen(11);
  for (int i = 0; i < 2000; ++i) {
    const double eps0 = gen.next_in(0.0, 2.0);
    const double eps = gen.next_in(0.0, 10.0);
    const double kappa4 = kappa4_of(eps0);
    if (std::isfinite(kappa4) && std::abs(eps - kappa4) <= 1e-9) {
      continue;  // both routes round differently inside the tie band
    }
    CHECK((select_case(eps0, eps) == case_tag::case1) ==
          case1_direct(eps0, eps));
  }
}

TEST_CASE("case flips across the kappa4 boundary") {
  for (double eps0 : {0.1, 0.3, 0.5, 0.6}) {
    const double kappa4 = kappa4_of(eps0);
    REQUIRE(std::isfinite(kappa4));
    CHECK(select_case(eps0, kappa4 + 1e-9) == case_tag::case1);
    CHECK(select_case(eps0, kappa4 - 1e-9) == case_tag::case2);
  }
}

TEST_CASE("case-boundary identity on random pairs") {
  splitmix64 gen(12);
  for (int i = 0; i < 2000; ++i) {
    const double eps0 = gen.next_in(0.0, 0.64);
    const double eps = gen.next_in(0.0, 5.0);
    const double kappa4 = kappa4_of(eps0);
    if (std::abs(eps - kappa4) <= 1e-12) {
      continue;
    }
    CHECK((select_case(eps0, eps) == case_tag::case1) == (eps >= kappa4));
  }
}

TEST_CASE("infinite kappa4 means Case2 for every eps") {
  for (double eps0 : {0.65, 0.7, 1.0, 2.0}) {
    REQUIRE(std::isinf(kappa4_of(eps0)));
    for (double eps : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 50.0}) {
      CHECK(select_case(eps0, eps) == case_tag::case2);
    }
  }
}

TEST_CASE("select_case rejects non-positive inputs") {
  CHECK_THROWS_AS(select_case(0.0, 1.0), input_error);
  CHECK_THROWS_AS(select_case(0.5, 0.0), input_error);
  CHECK_THROWS_AS(select_case(0.5, -1.0), input_error);
}

TEST_CASE("delta bound spot values") {
  const delta_bound b1 = min_delta_bound(uniform_params(0.1, 10, 2), 0.5);
  CHECK(b1.which == case_tag::case1);
  CHECK(rel(b1.ln_delta, -12.347326855957351) < 1e-12);
  CHECK(rel(b1.delta_clamped, 4.34134280359266e-6) < 1e-12);
  CHECK(b1.epsilon == 0.5);

  const delta_bound b2 = min_delta_bound(uniform_params(0.5, 100, 2), 1.0);
  CHECK(b2.which == case_tag::case2);
  CHECK(rel(b2.ln_delta, -20.823956474313410) < 1e-12);
  CHECK(rel(b2.delta_clamped, 9.04212719248998e-10) < 1e-12);
}

TEST_CASE("delta bound rejects eps <= 0 and bad params") {
  const shuffle_params params = uniform_params(0.5, 100, 2);
  CHECK_THROWS_AS(min_delta_bound(params, 0.0), input_error);
  CHECK_THROWS_AS(min_delta_bound(params, -0.5), input_error);
  CHECK_THROWS_AS(min_delta_bound(uniform_params(0.0, 100, 2), 1.0),
                  input_error);
}

TEST_CASE("the two branch expressions coincide at eps = kappa4") {
  for (double eps0 : {0.05, 0.2, 0.4, 0.6}) {
    for (std::int64_t n : {10, 100, 1000}) {
      const shuffle_params params = uniform_params(eps0, n, 2);
      const double kappa4 = kappa4_of(eps0);
      const double ld1 = ln_delta_for_case(params, kappa4, case_tag::case1);
      const double ld2 = ln_delta_for_case(params, kappa4, case_tag::case2);
      CHECK(rel(ld1, ld2) < 1e-10);
    }
  }
}

TEST_CASE("ln_delta stays finite and the clamp stays in range") {
  splitmix64 gen(13);
  for (int i = 0; i < 500; ++i) {
    const double eps0 = gen.next_in(0.0, 2.0);
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen.next() % 100000);
    const double eps = gen.next_in(0.0, 20.0);
    const delta_bound b = min_delta_bound(uniform_params(eps0, n, 2), eps);
    CHECK(std::isfinite(b.ln_delta));
    CHECK(b.delta_clamped >= 0.0);
    CHECK(b.delta_clamped <= 1.0);
  }
  // Moderate parameters keep the clamp strictly positive; extreme n only
  // underflows the exp, never the log-space value.
  CHECK(min_delta_bound(uniform_params(0.1, 10, 2), 0.5).delta_clamped > 0.0);
  const delta_bound tiny = min_delta_bound(uniform_params(0.5, 100000, 2), 0.5);
  CHECK(std::isfinite(tiny.ln_delta));
  CHECK(tiny.ln_delta < -700.0);
}

TEST_CASE("ln_delta is not monotone in eps") {
  // The prefactor (e^eps+1)^2/(e^eps-1) has its minimum at eps = ln 3; with
  // eps0=0.1, n=10 every probe below is Case 1, so the exponent term is
  // constant and the shape is the prefactor's.
  const shuffle_params params = uniform_params(0.1, 10, 2);
  const double at_low = min_delta_bound(params, 0.5).ln_delta;
  const double at_min = min_delta_bound(params, std::log(3.0)).ln_delta;
  const double at_high = min_delta_bound(params, 3.0).ln_delta;
  CHECK(at_min < at_low);
  CHECK(at_min < at_high);
}

TEST_CASE("epsilon_for_delta inverts the bound") {
  const shuffle_params params = uniform_params(0.1, 10, 2);
  const double delta_target =
      min_delta_bound(params, 0.5).delta_clamped;  // 4.3413e-6
  const auto eps = epsilon_for_delta(params, delta_target, 0.4, 0.6);
  REQUIRE(eps.has_value());
  CHECK(std::abs(*eps - 0.5) < 1e-6);
  CHECK(std::abs(min_delta_bound(params, *eps).ln_delta -
                 std::log(delta_target)) <= 1e-9);
}

TEST_CASE("epsilon_for_delta reports no crossing as NotFound") {
  // ln delta stays far below ln(1 - 1e-9) across the whole interval.
  const shuffle_params params = uniform_params(0.5, 100, 2);
  CHECK(!epsilon_for_delta(params, 1.0 - 1e-9, 0.5, 2.0).has_value());
}

TEST_CASE("epsilon_for_delta validates interval and target") {
  const shuffle_params params = uniform_params(0.1, 10, 2);
  CHECK_THROWS_AS(epsilon_for_delta(params, 1e-6, 0.6, 0.4), input_error);
  CHECK_THROWS_AS(epsilon_for_delta(params, 1e-6, -1.0, 1.0), input_error);
  CHECK_THROWS_AS(epsilon_for_delta(params, 0.0, 0.4, 0.6), input_error);
  CHECK_THROWS_AS(epsilon_for_delta(params, 1.5, 0.4, 0.6), input_error);
}
