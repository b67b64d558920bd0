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

#include "shuffle_blanket/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shuffle_blanket {

namespace {

// A root within this distance of an interval endpoint is treated as sitting
// on the endpoint.
constexpr double kEndpointTolerance = 1e-12;

bool in_half_open(double x, double lo, double hi) {
  return x >= lo - kEndpointTolerance && x < hi - kEndpointTolerance;
}

// Bisects a sign change of f on [a, b] down to double resolution.
template <typename F>
double bisect(F&& f, double a, double fa, double b) {
  double mid = a;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) {
      break;
    }
    const double fm = f(mid);
    if (fm == 0.0) {
      return mid;
    }
    if (std::signbit(fm) == std::signbit(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return mid;
}

}  // namespace

critical_poly make_critical_poly(const kappa_set& ks) {
  critical_poly poly;
  // kappa1 is only available in log space; exp of the log difference keeps
  // q representable even when kappa1 is e^{500}. Underflow to 0 is the
  // correct limit: P collapses to the perfect square (x+1)^2.
  poly.q = std::exp(std::log(ks.kappa3) - ks.ln_kappa1 - ks.ln_kappa2);
  poly.kappa2 = ks.kappa2;
  poly.a2 = 1.0 + poly.q;
  poly.a1 = 2.0 - poly.q * (ks.kappa2 + 1.0);
  poly.a0 = 1.0 + poly.q * ks.kappa2;
  return poly;
}

double critical_poly_eval(const critical_poly& poly, double x) {
  return (poly.a2 * x + poly.a1) * x + poly.a0;
}

std::vector<double> poly_root_in(const critical_poly& poly, double lo,
                                 double hi) {
  std::vector<double> roots;
  if (!(lo < hi)) {
    return roots;
  }
  const double km1 = poly.kappa2 - 1.0;
  const double disc =
      poly.q * (poly.q * km1 * km1 - 8.0 * (poly.kappa2 + 1.0));
  if (disc < 0.0) {
    return roots;
  }
  if (disc == 0.0) {
    const double r = -poly.a1 / (2.0 * poly.a2);
    if (in_half_open(r, lo, hi)) {
      roots.push_back(r);
    }
    return roots;
  }
  const double sq = std::sqrt(disc);
  const double half = -0.5 * (poly.a1 + std::copysign(sq, poly.a1));
  const double r1 = half / poly.a2;
  const double r2 = poly.a0 / half;
  for (double r : {std::min(r1, r2), std::max(r1, r2)}) {
    if (in_half_open(r, lo, hi)) {
      roots.push_back(r);
    }
  }
  return roots;
}

critical_eq make_critical_eq(const kappa_set& ks) {
  return critical_eq{ks.kappa5, ks.kappa2, ks.kappa3};
}

double critical_eq_eval(const critical_eq& eq, double x) {
  // kappa5 = 0 is the eps0 -> 0 limit where the exponential term vanishes.
  double gauss = 0.0;
  if (eq.kappa5 > 0.0) {
    gauss = 2.0 * eq.kappa5 * eq.kappa2 *
            std::exp(-kBlanketC * x * x / (4.0 * eq.kappa5));
  }
  return gauss + x * x * eq.kappa3 * (eq.kappa2 + 1.0) -
         x * eq.kappa3 * (eq.kappa2 - 1.0);
}

std::vector<double> h_root_in(const critical_eq& eq, double mu,
                              int grid_points) {
  std::vector<double> roots;
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    return roots;
  }
  const int segments = std::max(grid_points, 16) + 1;
  const auto f = [&](double x) { return critical_eq_eval(eq, x); };

  // The probe set includes both endpoints as bracket anchors; only interior
  // refined roots are reported.
  double prev_x = 0.0;
  double prev_f = f(0.0);
  for (int j = 1; j <= segments; ++j) {
    const double x = mu * static_cast<double>(j) / segments;
    const double fx = f(x);
    if (prev_f == 0.0) {
      if (prev_x > 0.0) {
        roots.push_back(prev_x);
      }
    } else if (fx != 0.0 && std::signbit(fx) != std::signbit(prev_f)) {
      const double r = bisect(f, prev_x, prev_f, x);
      if (r > 0.0 && r < mu) {
        roots.push_back(r);
      }
    }
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0.0 && prev_x < mu) {
    roots.push_back(prev_x);
  }
  return roots;
}

bool interval_empty(const interval& iv) {
  if (iv.lo < iv.hi) {
    return false;
  }
  return !(iv.lo == iv.hi && iv.lo_closed && iv.hi_closed);
}

region make_region(region_label label, const interval& iv) {
  region r;
  r.label = label;
  if (!interval_empty(iv)) {
    r.intervals.push_back(iv);
  }
  return r;
}

region intersect(const region& a, const region& b, region_label label) {
  region out;
  out.label = label;
  for (const interval& ia : a.intervals) {
    for (const interval& ib : b.intervals) {
      interval iv;
      if (ia.lo > ib.lo) {
        iv.lo = ia.lo;
        iv.lo_closed = ia.lo_closed;
      } else if (ib.lo > ia.lo) {
        iv.lo = ib.lo;
        iv.lo_closed = ib.lo_closed;
      } else {
        iv.lo = ia.lo;
        iv.lo_closed = ia.lo_closed && ib.lo_closed;
      }
      if (ia.hi < ib.hi) {
        iv.hi = ia.hi;
        iv.hi_closed = ia.hi_closed;
      } else if (ib.hi < ia.hi) {
        iv.hi = ib.hi;
        iv.hi_closed = ib.hi_closed;
      } else {
        iv.hi = ia.hi;
        iv.hi_closed = ia.hi_closed && ib.hi_closed;
      }
      if (!interval_empty(iv)) {
        out.intervals.push_back(iv);
      }
    }
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const interval& x, const interval& y) {
              return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
            });
  return out;
}

const char* asymptotic_class_name(asymptotic_class c) {
  switch (c) {
    case asymptotic_class::theorem1_asymptotic:
      return "Theorem1Asymptotic";
    case asymptotic_class::theorem2_asymptotic:
      return "Theorem2Asymptotic";
    case asymptotic_class::unclassified:
      return "Unclassified";
  }
  return "Unclassified";
}

regions_report regions_and_verdict(const shuffle_params& params,
                                   const verdict_options& options) {
  require_valid(params);
  if (options.classification_target < 0 ||
      options.classification_target >= params.k) {
    throw input_error(errc::bad_target,
                      "classification target must lie in {0, ..., k-1}");
  }
  if (options.epsilon.has_value() &&
      (!(*options.epsilon > 0.0) || !std::isfinite(*options.epsilon))) {
    throw input_error(errc::non_positive_epsilon,
                      "epsilon must be a positive finite real");
  }

  regions_report report;
  report.scan_points = options.scan_points;
  report.inputs.reserve(static_cast<std::size_t>(params.k));

  double mu = std::numeric_limits<double>::infinity();
  for (int x = 0; x < params.k; ++x) {
    per_input_analysis in;
    in.input = x;
    in.kappas = compute_kappas(params, x);
    in.s1 = make_region(region_label::s1_per_input,
                        interval{in.kappas.kappa4, in.kappas.ln_kappa2,
                                 /*lo_closed=*/true, /*hi_closed=*/false});
    in.s2 = make_region(
        region_label::s2_per_input,
        interval{0.0, std::min(in.kappas.kappa4, in.kappas.ln_kappa2),
                 /*lo_closed=*/false, /*hi_closed=*/false});
    in.poly_roots = poly_root_in(make_critical_poly(in.kappas),
                                 std::exp(in.kappas.kappa4), in.kappas.kappa2);
    // tanh maps the +infinity kappa4 sentinel to 1.
    mu = std::min(mu, std::min(std::tanh(in.kappas.kappa4 / 2.0),
                               std::tanh(in.kappas.ln_kappa2 / 2.0)));
    report.inputs.push_back(std::move(in));
  }

  bool thm3a = true;
  bool thm3b = true;
  for (per_input_analysis& in : report.inputs) {
    in.h_roots =
        h_root_in(make_critical_eq(in.kappas), mu, options.scan_points);
    thm3a = thm3a && in.kappas.kappa4 < in.kappas.ln_kappa2 &&
            !in.poly_roots.empty();
    thm3b = thm3b && !in.h_roots.empty();
  }

  report.s1_intersection = report.inputs.front().s1;
  report.s1_intersection.label = region_label::s1;
  report.s2_intersection = report.inputs.front().s2;
  report.s2_intersection.label = region_label::s2;
  for (std::size_t i = 1; i < report.inputs.size(); ++i) {
    report.s1_intersection = intersect(report.s1_intersection,
                                       report.inputs[i].s1, region_label::s1);
    report.s2_intersection = intersect(report.s2_intersection,
                                       report.inputs[i].s2, region_label::s2);
  }

  theorem_verdict& verdict = report.verdict;
  verdict.thm3a_holds = thm3a;
  verdict.thm3b_holds = thm3b;
  verdict.mu = mu;
  verdict.s1 = thm3a ? report.s1_intersection : region{region_label::s1, {}};
  verdict.s2 = thm3b ? report.s2_intersection : region{region_label::s2, {}};

  verdict.classification = asymptotic_class::unclassified;
  if (options.epsilon.has_value()) {
    const kappa_set& ks =
        report.inputs[static_cast<std::size_t>(options.classification_target)]
            .kappas;
    const double eps = *options.epsilon;
    if (eps > std::max(ks.kappa4, ks.ln_kappa2)) {
      verdict.classification = asymptotic_class::theorem1_asymptotic;
    } else if (ks.ln_kappa2 < eps && eps < ks.kappa4) {
      verdict.classification = asymptotic_class::theorem2_asymptotic;
    }
  }
  return report;
}

}  // namespace shuffle_blanket
