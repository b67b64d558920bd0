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
#include <vector>

#include "shuffle_blanket/params.hpp"

namespace shuffle_blanket {

// The critical polynomial P(x) = kappa1*kappa2*(x+1)^2 - kappa3*(kappa2-x)(x-1),
// normalized by the positive constant kappa1*kappa2 so its coefficients stay
// representable (kappa1 alone can be e^{500}):
//   P(x)/(kappa1*kappa2) = (x+1)^2 - q*(kappa2-x)(x-1),  q = kappa3/(kappa1*kappa2)
// with q computed in log space. Normalization by a positive constant
// preserves signs and roots. Expanded: a2 x^2 + a1 x + a0.
struct critical_poly {
  double q = 0.0;
  double kappa2 = 0.0;
  double a2 = 0.0;  // 1 + q
  double a1 = 0.0;  // 2 - q*(kappa2 + 1)
  double a0 = 0.0;  // 1 + q*kappa2
};

critical_poly make_critical_poly(const kappa_set& ks);

// Evaluates the normalized polynomial a2 x^2 + a1 x + a0.
double critical_poly_eval(const critical_poly& poly, double x);

// All real roots of the normalized quadratic in the half-open interval
// [lo, hi), ascending. Closed-form quadratic solve (the polynomial is degree
// 2 exactly); the larger-magnitude root comes from -(a1 + sign(a1)*sqrt(disc))
// / (2 a2), the other from the product of roots. The discriminant uses the
// factored form q*(q*(kappa2-1)^2 - 8*(kappa2+1)), which has no cancellation.
// Endpoint membership carries a 1e-12 absolute tolerance. An empty or
// inverted interval yields an empty list, not an error: the theorem
// hypotheses simply fail.
std::vector<double> poly_root_in(const critical_poly& poly, double lo,
                                 double hi);

// The critical equation
//   H(x) = 2*kappa5*kappa2*e^{-C x^2 / (4 kappa5)}
//        + x^2*kappa3*(kappa2+1) - x*kappa3*(kappa2-1).
struct critical_eq {
  double kappa5 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
};

critical_eq make_critical_eq(const kappa_set& ks);

// H(x) as defined. kappa5 = 0 is treated as the eps0 -> 0 limit, where the
// exponential term vanishes for every x.
double critical_eq_eval(const critical_eq& eq, double x);

// Roots of H on the open interval (0, mu): a uniform scan of grid_points
// sign probes, each sign change refined by bisection (to well below the
// 1e-12 interval requirement). mu <= 0 yields an empty list. The scan can
// miss sign-preserving tangential roots; callers surface that caveat.
std::vector<double> h_root_in(const critical_eq& eq, double mu,
                              int grid_points = 10000);

// An epsilon-axis region: disjoint sorted intervals with explicit open /
// closed endpoints.
struct interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;
};

bool interval_empty(const interval& iv);

enum class region_label { s1, s2, s1_per_input, s2_per_input };

struct region {
  region_label label = region_label::s1;
  std::vector<interval> intervals;  // disjoint, sorted, each nonempty

  bool empty() const { return intervals.empty(); }
};

// Builds a region from one candidate interval, dropping it if empty.
region make_region(region_label label, const interval& iv);

// Intersection of two regions (relabeled).
region intersect(const region& a, const region& b, region_label label);

enum class asymptotic_class {
  theorem1_asymptotic,  // eps > max{kappa4, ln kappa2}
  theorem2_asymptotic,  // ln kappa2 < eps < kappa4
  unclassified,
};

const char* asymptotic_class_name(asymptotic_class c);

// Verdict over all inputs: s1 and s2 are the certified tight regions, empty
// unless the corresponding existence hypothesis holds.
struct theorem_verdict {
  asymptotic_class classification = asymptotic_class::unclassified;
  bool thm3a_holds = false;
  bool thm3b_holds = false;
  region s1;
  region s2;
  double mu = 0.0;
};

// Everything cmd-level reporting needs about one input value.
struct per_input_analysis {
  int input = 0;
  kappa_set kappas;
  region s1;                      // [kappa4, ln kappa2(x_i))
  region s2;                      // (0, min{kappa4, ln kappa2(x_i)})
  std::vector<double> poly_roots;  // roots of P in [e^{kappa4}, kappa2(x_i))
  std::vector<double> h_roots;     // roots of H(x_i) in (0, mu)
};

struct regions_report {
  std::vector<per_input_analysis> inputs;
  region s1_intersection;  // raw intersection of the per-input spaces
  region s2_intersection;
  theorem_verdict verdict;
  int scan_points = 10000;
};

struct verdict_options {
  std::optional<double> epsilon;  // classification is skipped when absent
  int classification_target = 0;  // the input whose kappa2 classifies eps
  int scan_points = 10000;        // H-root scan grid
};

// Per input x_i: builds kappa_set(x_i), the spaces [kappa4, ln kappa2(x_i))
// and (0, min{kappa4, ln kappa2(x_i)}), the polynomial-root check on
// [e^{kappa4}, kappa2(x_i)) and the H-root check on (0, mu) with
// mu = min_i min{tanh(kappa4/2), tanh(ln kappa2(x_i)/2)}. The existence
// hypotheses are required for every input; the certified regions are the
// intersections when the respective hypothesis holds, empty otherwise.
regions_report regions_and_verdict(const shuffle_params& params,
                                   const verdict_options& options = {});

}  // namespace shuffle_blanket
