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
#include <doctest.h>

using namespace shuffle_blanket;

namespace {

shuffle_params uniform_params(double eps0, std::int64_t n, int k) {
  return shuffle_params{eps0, n, k,
                        std::vector<double>(static_cast<std::size_t>(k),
                                            1.0 / static_cast<double>(k))};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("validate_params accepts a well-formed instance") {
  CHECK(!validate_params(shuffle_params{0.5, 100, 2, {0.5, 0.5}}).has_value());
  CHECK(!validate_params(uniform_params(1e-6, 1, 10)).has_value());
}

TEST_CASE("validate_params names the violated field") {
  auto err = validate_params(shuffle_params{0.0, 100, 2, {0.5, 0.5}});
  REQUIRE(err.has_value());
  CHECK(err->code() == errc::non_positive_epsilon0);

  err = validate_params(shuffle_params{0.5, 100, 2, {0.7, 0.2}});
  REQUIRE(err.has_value());
  CHECK(err->code() == errc::bad_distribution);

  err = validate_params(shuffle_params{0.5, 0, 2, {0.5, 0.5}});
  REQUIRE(err.has_value());
  CHECK(err->code() == errc::bad_size);

  err = validate_params(shuffle_params{0.5, 100, 1, {1.0}});
  REQUIRE(err.has_value());
  CHECK(err->code() == errc::bad_alphabet);

  err = validate_params(shuffle_params{0.5, 100, 3, {0.5, 0.5}});
  REQUIRE(err.has_value());
  CHECK(err->code() == errc::bad_distribution);

  err = validate_params(shuffle_params{0.5, 100, 2, {1.5, -0.5}});
  REQUIRE(err.has_value());
  CHECK(err->code() == errc::bad_distribution);

  CHECK_THROWS_AS(require_valid(shuffle_params{-1.0, 1, 2, {0.5, 0.5}}),
                  input_error);
}

TEST_CASE("blanket constant") {
  CHECK(std::abs(kBlanketC - 0.8646647167) < 1e-9);
}

TEST_CASE("kappa spot values at eps0=0.5, n=100, k=2, uniform") {
  const kappa_set ks = compute_kappas(uniform_params(0.5, 100, 2), 0);
  CHECK(rel(ks.ln_kappa1, 51.140921456979408) < 1e-12);
  CHECK(rel(ks.kappa2, 1.0049103997334200) < 1e-12);
  CHECK(rel(ks.ln_kappa2, 0.0048983830424314299) < 1e-12);
  CHECK(rel(ks.kappa3, 50.122459331201855) < 1e-12);
  CHECK(rel(ks.kappa4, 2.2637433319573163) < 1e-12);
  CHECK(rel(ks.kappa5, 0.0027154031740762189) < 1e-12);
  CHECK(ks.target == 0);
}

TEST_CASE("kappa limits as eps0 tends to zero") {
  const kappa_set ks = compute_kappas(uniform_params(1e-9, 10, 2), 0);
  CHECK(ks.kappa2 - 1.0 < 1e-9);
  CHECK(ks.kappa2 > 1.0);
  CHECK(ks.kappa4 < 1e-7);
  CHECK(ks.kappa4 > 0.0);
  CHECK(ks.kappa5 < 1e-18);
  CHECK(rel(ks.kappa3, 10.0 / 2.0) < 1e-6);
}

TEST_CASE("kappa4 sentinel outside the artanh domain") {
  // 2*sinh(0.7)/e^{0.35} is about 1.069, past the domain edge.
  CHECK(std::isinf(compute_kappas(uniform_params(0.7, 10, 2), 0).kappa4));
  CHECK(std::isfinite(compute_kappas(uniform_params(0.6, 10, 2), 0).kappa4));
}

TEST_CASE("kappa4 finiteness boundary sits at the quartic root") {
  // 2*sinh(eps0) = e^{eps0/2} rewritten with u = e^{eps0/2} is
  // u^4 - u^3 - 1 = 0; bisect it as an independent oracle.
  const auto quartic = [](double u) { return ((u - 1.0) * u * u * u) - 1.0; };
  double lo = 1.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (quartic(mid) < 0.0 ? lo : hi) = mid;
  }
  const double eps0_star = 2.0 * std::log(0.5 * (lo + hi));
  CHECK(eps0_star > 0.644);
  CHECK(eps0_star < 0.645);
  CHECK(std::isfinite(
      compute_kappas(uniform_params(eps0_star - 1e-3, 5, 2), 0).kappa4));
  CHECK(std::isinf(
      compute_kappas(uniform_params(eps0_star + 1e-3, 5, 2), 0).kappa4));
}

TEST_CASE("kappa2 decreases strictly in n and equals e^eps0 at n=1") {
  for (double eps0 : {0.1, 0.5, 1.3}) {
    double prev = compute_kappas(uniform_params(eps0, 1, 2), 0).kappa2;
    CHECK(rel(prev, std::exp(eps0)) < 1e-12);
    for (std::int64_t n : {2, 5, 10, 100, 1000, 10000}) {
      const double k2 = compute_kappas(uniform_params(eps0, n, 2), 0).kappa2;
      CHECK(k2 < prev);
      CHECK(k2 > 1.0);
      prev = k2;
    }
  }
}

TEST_CASE("kappa4 depends only on eps0") {
  const double base = compute_kappas(uniform_params(0.3, 10, 2), 0).kappa4;
  CHECK(compute_kappas(uniform_params(0.3, 9999, 2), 0).kappa4 == base);
  CHECK(compute_kappas(uniform_params(0.3, 3, 5), 2).kappa4 == base);
  CHECK(compute_kappas(shuffle_params{0.3, 7, 3, {0.2, 0.3, 0.5}}, 1).kappa4 ==
        base);
}

TEST_CASE("kappa2 and kappa3 are parameterized by the target's pi mass") {
  const shuffle_params params{0.5, 50, 3, {0.1, 0.3, 0.6}};
  const kappa_set k0 = compute_kappas(params, 0);
  const kappa_set k2 = compute_kappas(params, 2);
  CHECK(k0.kappa2 > k2.kappa2);  // smaller pi mass, larger kappa2
  CHECK(k0.kappa3 < k2.kappa3);
  CHECK(k0.ln_kappa1 == k2.ln_kappa1);
  CHECK(k0.kappa5 == k2.kappa5);
}

TEST_CASE("compute_kappas rejects a bad target or bad params") {
  CHECK_THROWS_AS(compute_kappas(uniform_params(0.5, 10, 2), 2), input_error);
  CHECK_THROWS_AS(compute_kappas(uniform_params(0.5, 10, 2), -1), input_error);
  CHECK_THROWS_AS(compute_kappas(uniform_params(0.0, 10, 2), 0), input_error);
}

TEST_CASE("compute_kappas is deterministic") {
  const kappa_set a = compute_kappas(uniform_params(0.37, 123, 4), 3);
  const kappa_set b = compute_kappas(uniform_params(0.37, 123, 4), 3);
  CHECK(a.ln_kappa1 == b.ln_kappa1);
  CHECK(a.kappa2 == b.kappa2);
  CHECK(a.kappa3 == b.kappa3);
  CHECK(a.kappa4 == b.kappa4);
  CHECK(a.kappa5 == b.kappa5);
}
