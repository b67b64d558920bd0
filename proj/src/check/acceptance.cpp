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

#include "check/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include "check/reference.hpp"
#include "shuffle_blanket/bounds.hpp"
#include "shuffle_blanket/oracle.hpp"
#include "shuffle_blanket/params.hpp"
#include "shuffle_blanket/rng.hpp"
#include "shuffle_blanket/tightness.hpp"

namespace shuffle_blanket::check {

namespace {

using clock_type = std::chrono::steady_clock;

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

double rel_diff(double value, double ref) {
  return std::abs(value - ref) / std::abs(ref);
}

// Relative with a floor of 1 in the denominator, for log-space quantities
// that can pass through zero.
double rel_diff_floored(double value, double ref) {
  return std::abs(value - ref) / std::max(1.0, std::abs(ref));
}

shuffle_params uniform_params(double eps0, std::int64_t n, int k) {
  return shuffle_params{eps0, n, k,
                        std::vector<double>(static_cast<std::size_t>(k),
                                            1.0 / static_cast<double>(k))};
}

bool within_budget(clock_type::time_point start, double seconds) {
  return std::chrono::duration<double>(clock_type::now() - start).count() <
         seconds;
}

// --- Criterion 1: kappa oracle agreement -----------------------------------

criterion_result check_kappa_oracle() {
  const auto start = clock_type::now();
  criterion_result res{1, "kappa-oracle-agreement", false, ""};
  splitmix64 gen(0x6b61707061ULL);

  double worst_ln_k1 = 0.0;
  double worst_rel = 0.0;
  int checked = 0;
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    const double eps0 = gen.next_in(0.0, 2.0);
    const std::int64_t n = 1 + static_cast<std::int64_t>(gen.next() % 10000);
    const int k = 2 + static_cast<int>(gen.next() % 9);
    std::vector<double> pi(static_cast<std::size_t>(k));
    double sum = 0.0;
    for (double& p : pi) {
      p = -std::log(gen.next_in(0.0, 1.0));
      sum += p;
    }
    for (double& p : pi) {
      p /= sum;
    }
    const int target = static_cast<int>(gen.next() % static_cast<std::uint64_t>(k));

    const kappa_set ks =
        compute_kappas(shuffle_params{eps0, n, k, pi}, target);
    const kappa_reference ref =
        reference_kappas(eps0, n, k, pi[static_cast<std::size_t>(target)]);

    const double d1 = rel_diff_floored(ks.ln_kappa1, ref.ln_kappa1);
    worst_ln_k1 = std::max(worst_ln_k1, d1);
    double rel = std::max(rel_diff(ks.kappa2, ref.kappa2),
                          std::max(rel_diff(ks.kappa3, ref.kappa3),
                                   rel_diff(ks.kappa5, ref.kappa5)));
    const bool impl_finite = std::isfinite(ks.kappa4);
    if (impl_finite != ref.kappa4_finite) {
      ok = false;
    } else if (impl_finite) {
      rel = std::max(rel, rel_diff(ks.kappa4, ref.kappa4));
    }
    worst_rel = std::max(worst_rel, rel);
    ok = ok && d1 <= 1e-10 && rel <= 1e-10;
    ++checked;
  }
  const bool in_time = within_budget(start, 10.0);
  res.passed = ok && checked == 100 && in_time;
  res.detail = format(
      "100 random tuples vs 50-digit re-evaluation: worst ln_kappa1 rel diff "
      "%.3g, worst kappa2..5 rel diff %.3g (limit 1e-10); within 10s "
      "budget: %s",
      worst_ln_k1, worst_rel, in_time ? "yes" : "no");
  return res;
}

// --- Criterion 2: case boundary equivalence ---------------------------------

criterion_result check_case_boundary() {
  const auto start = clock_type::now();
  criterion_result res{2, "case-boundary-equivalence", false, ""};
  splitmix64 gen(0x636173655fULL);

  int disagreements = 0;
  int in_band = 0;
  for (int t = 0; t < 10000; ++t) {
    const double eps0 = gen.next_in(0.0, 0.64);
    const double eps = gen.next_in(0.0, 5.0);
    const double kappa4 = compute_kappas(uniform_params(eps0, 5, 2), 0).kappa4;
    if (std::abs(eps - kappa4) <= 1e-12) {
      ++in_band;
      continue;
    }
    const bool is_case1 = select_case(eps0, eps) == case_tag::case1;
    if (is_case1 != (eps >= kappa4)) {
      ++disagreements;
    }
  }
  const bool in_time = within_budget(start, 5.0);
  res.passed = disagreements == 0 && in_time;
  res.detail = format(
      "10000 random (eps0, eps): %d disagreements between select_case and "
      "eps >= kappa4 outside the 1e-12 band (%d inside band skipped); within "
      "5s budget: %s",
      disagreements, in_band, in_time ? "yes" : "no");
  return res;
}

// --- Criterion 3: delta continuity at the case boundary ---------------------

criterion_result check_delta_continuity() {
  criterion_result res{3, "delta-continuity-at-kappa4", false, ""};
  splitmix64 gen(0x636f6e74ULL);
  const std::int64_t ns[] = {10, 100, 1000};

  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double eps0 = gen.next_in(0.0, 0.64);
    const std::int64_t n = ns[gen.next() % 3];
    const shuffle_params params = uniform_params(eps0, n, 2);
    const double kappa4 = compute_kappas(params, 0).kappa4;
    const double ld1 = ln_delta_for_case(params, kappa4, case_tag::case1);
    const double ld2 = ln_delta_for_case(params, kappa4, case_tag::case2);
    worst = std::max(worst, rel_diff(ld1, ld2));
  }
  res.passed = worst <= 1e-10;
  res.detail = format(
      "100 random eps0 in (0, 0.64), n in {10,100,1000}: worst relative gap "
      "between Case-1 and Case-2 ln_delta at eps = kappa4 is %.3g (limit "
      "1e-10)",
      worst);
  return res;
}

// --- Criterion 4: spot values ------------------------------------------------

criterion_result check_spot_values() {
  criterion_result res{4, "spot-values", false, ""};

  const delta_bound b1 = min_delta_bound(uniform_params(0.1, 10, 2), 0.5);
  const double d1 = std::exp(b1.ln_delta);
  const bool ok1 = b1.which == case_tag::case1 && rel_diff(d1, 4.330e-6) <= 5e-3;

  const delta_bound b2 = min_delta_bound(uniform_params(0.5, 100, 2), 1.0);
  const double d2 = std::exp(b2.ln_delta);
  const bool ok2 = b2.which == case_tag::case2 && rel_diff(d2, 9.03e-10) <= 5e-3;

  // Cross-check both ln_delta values against the 50-digit route.
  const delta_reference r1 = reference_ln_delta(0.1, 10, 0.5);
  const delta_reference r2 = reference_ln_delta(0.5, 100, 1.0);
  const bool okr = r1.is_case1 && !r2.is_case1 &&
                   rel_diff(b1.ln_delta, r1.ln_delta) <= 1e-12 &&
                   rel_diff(b2.ln_delta, r2.ln_delta) <= 1e-12;

  res.passed = ok1 && ok2 && okr;
  res.detail = format(
      "(eps0=0.1,n=10,eps=0.5): %s delta %.6g vs 4.330e-6 (rel %.3g, limit "
      "5e-3); (eps0=0.5,n=100,eps=1.0): %s delta %.6g vs 9.03e-10 (rel %.3g); "
      "50-digit ln_delta agreement %s",
      case_name(b1.which), d1, rel_diff(d1, 4.330e-6), case_name(b2.which), d2,
      rel_diff(d2, 9.03e-10), okr ? "yes" : "NO");
  return res;
}

// --- Criterion 5: oracle exactness -------------------------------------------

criterion_result check_oracle_exactness() {
  criterion_result res{5, "oracle-exactness", false, ""};
  const double ln3 = std::log(3.0);

  const shuffle_params p1 = uniform_params(ln3, 1, 2);
  const double tv = tight_adp(p1, {}, target_pair{0, 1}, 0.0);
  const double at_ln3 = tight_adp(p1, {}, target_pair{0, 1}, ln3);

  const krr_matrix krr = make_krr(ln3, 2);
  const histogram_dist dist = exact_histogram_dist(dataset{0, 0}, krr);
  const double p20 = dist.probs.count({2, 0}) ? dist.probs.at({2, 0}) : 0.0;
  const double p11 = dist.probs.count({1, 1}) ? dist.probs.at({1, 1}) : 0.0;
  const double p02 = dist.probs.count({0, 2}) ? dist.probs.at({0, 2}) : 0.0;

  const double err_tv = std::abs(tv - 0.5);
  const double err_ln3 = std::abs(at_ln3);
  const double err_hist = std::max({std::abs(p20 - 9.0 / 16.0),
                                    std::abs(p11 - 6.0 / 16.0),
                                    std::abs(p02 - 1.0 / 16.0)});
  res.passed = err_tv <= 1e-12 && err_ln3 <= 1e-12 && err_hist <= 1e-12;
  res.detail = format(
      "n=1,k=2,eps0=ln3: |tight_adp(0) - 1/2| = %.3g, tight_adp(ln3) = %.3g; "
      "n=2 all-zeros histogram vs (9/16, 6/16, 1/16): max abs err %.3g (all "
      "limits 1e-12)",
      err_tv, err_ln3, err_hist);
  return res;
}

// --- Criterion 6: bound soundness grid ---------------------------------------

criterion_result check_bound_soundness() {
  const auto start = clock_type::now();
  criterion_result res{6, "bound-soundness-grid", false, ""};

  int cells = 0;
  int violations = 0;
  double worst_ratio = 0.0;
  std::string first_violation;
  for (double eps0 : {0.1, 0.3, 0.5}) {
    for (std::int64_t n : {5, 10, 20}) {
      for (int k : {2, 3}) {
        const shuffle_params params = uniform_params(eps0, n, k);
        for (double eps : {0.2, 0.5, 1.0}) {
          const double bound = min_delta_bound(params, eps).delta_clamped;
          for (int fill : {0, 1}) {
            const dataset others(static_cast<std::size_t>(n - 1), fill);
            const double exact = tight_dp(params, others, eps);
            ++cells;
            worst_ratio = std::max(worst_ratio, exact / bound);
            if (exact > bound) {
              ++violations;
              if (first_violation.empty()) {
                first_violation = format(
                    " first violation at eps0=%g n=%lld k=%d eps=%g "
                    "others=all-%d: exact %.9g > bound %.9g;",
                    eps0, static_cast<long long>(n), k, eps, fill, exact,
                    bound);
              }
            }
          }
        }
      }
    }
  }
  const bool in_time = within_budget(start, 60.0);
  res.passed = violations == 0 && in_time;
  res.detail = format(
      "%d grid cells: %d violations of tight_dp <= clamped bound;%s worst "
      "exact/bound ratio %.3g; within 60s budget: %s",
      cells, violations, first_violation.c_str(), worst_ratio,
      in_time ? "yes" : "no");
  return res;
}

// --- Criterion 7: Monte Carlo consistency ------------------------------------

criterion_result check_monte_carlo() {
  criterion_result res{7, "monte-carlo-consistency", false, ""};
  constexpr std::int64_t kSamples = 1000000;
  constexpr std::uint64_t kSeed = 20260808ULL;

  const krr_matrix krr = make_krr(0.5, 2);
  const dataset data(10, 0);
  const auto samples = sample_shuffled(data, krr, kSamples, kSeed);
  const auto again = sample_shuffled(data, krr, kSamples, kSeed);
  const bool reproducible = samples == again;

  const histogram_dist exact = exact_histogram_dist(data, krr);
  const histogram_dist empirical = empirical_dist(samples, krr.k);
  const double tv = hockey_stick_delta(empirical, exact, 0.0);

  res.passed = reproducible && tv <= 0.01;
  res.detail = format(
      "m=1e6, n=10, k=2, eps0=0.5, prng=%s seed=%llu: TV(empirical, exact) = "
      "%.5g (limit 0.01); same-seed rerun identical: %s",
      kPrngAlgorithm, static_cast<unsigned long long>(kSeed), tv,
      reproducible ? "yes" : "NO");
  return res;
}

// --- Criterion 8: root-finder cross-check ------------------------------------

// Independent root finder: sign scan plus bisection on the same normalized
// quadratic, no closed form involved.
std::vector<double> bisection_poly_roots(const critical_poly& poly, double lo,
                                         double hi) {
  std::vector<double> roots;
  constexpr int kSegments = 4096;
  double prev_x = lo;
  double prev_f = critical_poly_eval(poly, lo);
  for (int j = 1; j <= kSegments; ++j) {
    const double x = lo + (hi - lo) * static_cast<double>(j) / kSegments;
    const double fx = critical_poly_eval(poly, x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if (fx != 0.0 && std::signbit(fx) != std::signbit(prev_f)) {
      double a = prev_x;
      double fa = prev_f;
      double b = x;
      double mid = a;
      for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
          break;
        }
        const double fm = critical_poly_eval(poly, mid);
        if (fm == 0.0) {
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(mid);
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

criterion_result check_root_finders() {
  criterion_result res{8, "root-finder-cross-check", false, ""};
  splitmix64 gen(0x726f6f7473ULL);

  // Planted quadratics: choosing q above 8(kappa2+1)/(kappa2-1)^2 forces a
  // positive discriminant, and the normalized polynomial is positive outside
  // (1, kappa2), so both roots land inside the scanned interval.
  int polys = 0;
  int root_count = 0;
  double worst_gap = 0.0;
  bool ok = true;
  for (int t = 0; t < 1000; ++t) {
    const double kappa2 = gen.next_in(1.1, 10.0);
    const double q_min = 8.0 * (kappa2 + 1.0) / ((kappa2 - 1.0) * (kappa2 - 1.0));
    const double q = q_min * gen.next_in(1.05, 3.0);
    critical_poly poly;
    poly.q = q;
    poly.kappa2 = kappa2;
    poly.a2 = 1.0 + q;
    poly.a1 = 2.0 - q * (kappa2 + 1.0);
    poly.a0 = 1.0 + q * kappa2;

    const auto closed = poly_root_in(poly, 1.0, kappa2);
    const auto scanned = bisection_poly_roots(poly, 1.0, kappa2);
    if (closed.size() != 2 || scanned.size() != 2) {
      ok = false;
      continue;
    }
    for (std::size_t i = 0; i < 2; ++i) {
      const double gap = std::abs(closed[i] - scanned[i]);
      worst_gap = std::max(worst_gap, gap);
      ok = ok && gap <= 1e-9;
      ++root_count;
    }
    ++polys;
  }

  // Planted critical equations with a guaranteed sign change in (0, mu):
  // scaling kappa3 so H(x*) < 0 at an interior x* below (kappa2-1)/(kappa2+1).
  int h_roots_checked = 0;
  double worst_residual = 0.0;
  for (int t = 0; t < 100; ++t) {
    critical_eq eq;
    eq.kappa5 = gen.next_in(0.01, 1.0);
    eq.kappa2 = gen.next_in(1.5, 3.0);
    const double x_star = 0.5 * (eq.kappa2 - 1.0) / (eq.kappa2 + 1.0);
    const double gauss = 2.0 * eq.kappa5 * eq.kappa2 *
                         std::exp(-kBlanketC * x_star * x_star / (4.0 * eq.kappa5));
    const double linear_part =
        x_star * (eq.kappa2 - 1.0) - x_star * x_star * (eq.kappa2 + 1.0);
    eq.kappa3 = gen.next_in(2.0, 10.0) * gauss / linear_part;

    const double mu = std::min(1.0, 2.0 * x_star);
    const auto roots = h_root_in(eq, mu);
    if (roots.empty()) {
      ok = false;
      continue;
    }
    const double h0 = critical_eq_eval(eq, 0.0);
    for (double r : roots) {
      const double residual = std::abs(critical_eq_eval(eq, r)) / h0;
      worst_residual = std::max(worst_residual, residual);
      ok = ok && residual <= 1e-9;
      ++h_roots_checked;
    }
  }

  res.passed = ok && polys == 1000;
  res.detail = format(
      "%d planted quadratics (%d roots): worst closed-form vs bisection gap "
      "%.3g (limit 1e-9); %d H-roots on planted equations: worst "
      "|H(root)|/H(0) = %.3g (limit 1e-9)",
      polys, root_count, worst_gap, h_roots_checked, worst_residual);
  return res;
}

// --- Criterion 9: region logic -----------------------------------------------

criterion_result check_region_logic() {
  criterion_result res{9, "region-logic", false, ""};
  const shuffle_params params = uniform_params(0.5, 100, 2);

  const regions_report base = regions_and_verdict(params);
  verdict_options at1;
  at1.epsilon = 1.0;
  verdict_options at3;
  at3.epsilon = 3.0;
  const regions_report r1 = regions_and_verdict(params, at1);
  const regions_report r3 = regions_and_verdict(params, at3);

  const bool s1_empty = base.s1_intersection.empty() && base.verdict.s1.empty();
  const bool flags_off =
      !base.verdict.thm3a_holds && !base.verdict.thm3b_holds;
  const bool class1 =
      r3.verdict.classification == asymptotic_class::theorem1_asymptotic;
  const bool class2 =
      r1.verdict.classification == asymptotic_class::theorem2_asymptotic;

  res.passed = s1_empty && flags_off && class1 && class2;
  res.detail = format(
      "(eps0=0.5,n=100,k=2,uniform): S1 empty: %s; thm3a=%s thm3b=%s (expect "
      "false/false); eps=1.0 -> %s (expect Theorem2Asymptotic); eps=3.0 -> %s "
      "(expect Theorem1Asymptotic)",
      s1_empty ? "yes" : "NO", base.verdict.thm3a_holds ? "true" : "false",
      base.verdict.thm3b_holds ? "true" : "false",
      asymptotic_class_name(r1.verdict.classification),
      asymptotic_class_name(r3.verdict.classification));
  return res;
}

}  // namespace

acceptance_summary run_acceptance(std::ostream& log) {
  acceptance_summary summary;
  summary.results.push_back(check_kappa_oracle());
  summary.results.push_back(check_case_boundary());
  summary.results.push_back(check_delta_continuity());
  summary.results.push_back(check_spot_values());
  summary.results.push_back(check_oracle_exactness());
  summary.results.push_back(check_bound_soundness());
  summary.results.push_back(check_monte_carlo());
  summary.results.push_back(check_root_finders());
  summary.results.push_back(check_region_logic());

  summary.all_passed = true;
  for (const criterion_result& r : summary.results) {
    summary.all_passed = summary.all_passed && r.passed;
    log << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " "
        << r.name << ": " << r.detail << "\n";
  }
  log << (summary.all_passed ? "check: all " : "check: FAILURES among ")
      << summary.results.size() << " criteria"
      << (summary.all_passed ? " passed" : "") << "\n";
  return summary;
}

}  // namespace shuffle_blanket::check
