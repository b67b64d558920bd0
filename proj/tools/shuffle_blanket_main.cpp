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

// shuffle-blanket: privacy accounting for the shuffle model with a k-ary
// randomized response local randomizer. Subcommands evaluate the instance
// constants, the analytical (eps, delta) bound with its case split, the
// tightness regions, and an exact small-instance oracle; `check` runs the
// built-in acceptance suite. Exit codes: 0 success, 1 internal error,
// 2 invalid input, 3 check-suite failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "check/acceptance.hpp"
#include "shuffle_blanket/bounds.hpp"
#include "shuffle_blanket/oracle.hpp"
#include "shuffle_blanket/params.hpp"
#include "shuffle_blanket/rng.hpp"
#include "shuffle_blanket/tightness.hpp"

namespace sb = shuffle_blanket;

namespace {

// All flags exist on every subcommand so one flat config file can drive any
// of them; each handler validates what it actually consumes.
struct raw_options {
  std::string eps0;
  std::string n;
  int k = 0;
  std::string pi = "uniform";
  std::string eps;
  std::vector<std::string> pairs;
  std::string others;
  std::int64_t samples = 0;
  std::uint64_t seed = 42;
  int scan_points = 10000;
  std::string format;  // empty = subcommand default
  std::string out;
  std::string config;
};

std::string fmt_num(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

struct table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

  void print_csv(std::ostream& os) const {
    print_joined(os, header, ",");
    for (const auto& row : rows) {
      print_joined(os, row, ",");
    }
  }

  void print_text(std::ostream& os) const {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
    }
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    print_padded(os, header, width);
    for (const auto& row : rows) {
      print_padded(os, row, width);
    }
  }

 private:
  static void print_joined(std::ostream& os, const std::vector<std::string>& cells,
                           const char* sep) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << (c ? sep : "") << cells[c];
    }
    os << "\n";
  }

  static void print_padded(std::ostream& os, const std::vector<std::string>& cells,
                           const std::vector<std::size_t>& width) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << (c ? "  " : "");
      os << cells[c];
      if (c + 1 < cells.size() && cells[c].size() < width[c]) {
        os << std::string(width[c] - cells[c].size(), ' ');
      }
    }
    os << "\n";
  }
};

double parse_double(const std::string& token, const char* flag, sb::errc code) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos == token.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw sb::input_error(code, std::string("could not parse ") + flag +
                                  " value '" + token + "' as a number");
}

std::int64_t parse_int(const std::string& token, const char* flag,
                       sb::errc code) {
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(token, &pos);
    if (pos == token.size()) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw sb::input_error(code, std::string("could not parse ") + flag +
                                  " value '" + token + "' as an integer");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    out.push_back(item);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* flag,
                                      sb::errc code) {
  if (s.empty()) {
    throw sb::input_error(code, std::string("missing required ") + flag);
  }
  std::vector<double> out;
  for (const std::string& tok : split_commas(s)) {
    out.push_back(parse_double(tok, flag, code));
  }
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const char* flag,
                                         sb::errc code) {
  if (s.empty()) {
    throw sb::input_error(code, std::string("missing required ") + flag);
  }
  std::vector<std::int64_t> out;
  for (const std::string& tok : split_commas(s)) {
    out.push_back(parse_int(tok, flag, code));
  }
  return out;
}

double parse_single_double(const std::string& s, const char* flag, sb::errc code) {
  const auto list = parse_double_list(s, flag, code);
  if (list.size() != 1) {
    throw sb::input_error(code, std::string(flag) + " expects a single value here");
  }
  return list.front();
}

std::int64_t parse_single_int(const std::string& s, const char* flag, sb::errc code) {
  const auto list = parse_int_list(s, flag, code);
  if (list.size() != 1) {
    throw sb::input_error(code, std::string(flag) + " expects a single value here");
  }
  return list.front();
}

std::vector<double> parse_pi(const std::string& s, int k) {
  if (s == "uniform") {
    return std::vector<double>(static_cast<std::size_t>(std::max(k, 0)),
                               k > 0 ? 1.0 / k : 0.0);
  }
  return parse_double_list(s, "--pi", sb::errc::bad_distribution);
}

sb::target_pair parse_pair(const std::string& s) {
  const auto toks = split_commas(s);
  if (toks.size() != 2) {
    throw sb::input_error(sb::errc::bad_target,
                          "--pair expects two comma-separated indices, e.g. 0,1");
  }
  return sb::target_pair{
      static_cast<int>(parse_int(toks[0], "--pair", sb::errc::bad_target)),
      static_cast<int>(parse_int(toks[1], "--pair", sb::errc::bad_target))};
}

sb::dataset parse_others(const std::string& s, std::int64_t n) {
  if (s.rfind("all:", 0) == 0) {
    const int v = static_cast<int>(
        parse_int(s.substr(4), "--others", sb::errc::bad_target));
    return sb::dataset(static_cast<std::size_t>(std::max<std::int64_t>(n - 1, 0)), v);
  }
  sb::dataset out;
  for (std::int64_t v : parse_int_list(s, "--others", sb::errc::bad_target)) {
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r");
  if (from == std::string::npos) {
    return "";
  }
  return s.substr(from, s.find_last_not_of(" \t\r") - from + 1);
}

// Flat key = value file with keys matching the flag names; values given on
// the command line take precedence. '#' starts a comment.
void apply_config(const CLI::App* sub, raw_options& opt) {
  std::ifstream in(opt.config);
  if (!in) {
    throw sb::input_error(sb::errc::bad_config,
                          "could not read config file " + opt.config);
  }
  const auto overridden = [&](const char* flag) {
    return sub->count(flag) > 0;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw sb::input_error(sb::errc::bad_config,
                            "config line " + std::to_string(lineno) +
                                " is not of the form key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const bool known =
        key == "eps0" || key == "n" || key == "k" || key == "pi" ||
        key == "eps" || key == "pair" || key == "others" || key == "samples" ||
        key == "seed" || key == "scan-points" || key == "format" ||
        key == "out";
    if (!known) {
      throw sb::input_error(sb::errc::bad_config,
                            "unknown config key '" + key + "'");
    }
    if (overridden(("--" + key).c_str())) {
      continue;
    }
    if (key == "eps0") {
      opt.eps0 = value;
    } else if (key == "n") {
      opt.n = value;
    } else if (key == "k") {
      opt.k = static_cast<int>(parse_int(value, "k", sb::errc::bad_config));
    } else if (key == "pi") {
      opt.pi = value;
    } else if (key == "eps") {
      opt.eps = value;
    } else if (key == "pair") {
      opt.pairs.push_back(value);
    } else if (key == "others") {
      opt.others = value;
    } else if (key == "samples") {
      opt.samples = parse_int(value, "samples", sb::errc::bad_config);
    } else if (key == "seed") {
      opt.seed = static_cast<std::uint64_t>(
          parse_int(value, "seed", sb::errc::bad_config));
    } else if (key == "scan-points") {
      opt.scan_points = static_cast<int>(
          parse_int(value, "scan-points", sb::errc::bad_config));
    } else if (key == "format") {
      if (value != "csv" && value != "text") {
        throw sb::input_error(sb::errc::bad_config,
                              "format must be csv or text, got " + value);
      }
      opt.format = value;
    } else {
      opt.out = value;
    }
  }
}

std::string encode_dataset(const sb::dataset& d) {
  if (d.empty()) {
    return "-";
  }
  const bool constant = std::all_of(d.begin(), d.end(),
                                    [&](int v) { return v == d.front(); });
  if (constant) {
    return "all:" + std::to_string(d.front());
  }
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += (i ? "|" : "") + std::to_string(d[i]);
  }
  return out;
}

std::string fmt_interval(const sb::interval& iv, int precision) {
  return std::string(iv.lo_closed ? "[" : "(") + fmt_num(iv.lo, precision) +
         ".." + fmt_num(iv.hi, precision) + (iv.hi_closed ? "]" : ")");
}

std::string fmt_region(const sb::region& r, int precision) {
  if (r.empty()) {
    return "empty";
  }
  std::string out;
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    out += (i ? " U " : "") + fmt_interval(r.intervals[i], precision);
  }
  return out;
}

struct output_sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit output_sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) {
        throw sb::input_error(sb::errc::bad_interval,
                              "could not open output file " + path);
      }
      os = &file;
    }
  }
};

sb::shuffle_params params_from(const raw_options& opt) {
  sb::shuffle_params params;
  params.eps0 =
      parse_single_double(opt.eps0, "--eps0", sb::errc::non_positive_epsilon0);
  params.n = parse_single_int(opt.n, "--n", sb::errc::bad_size);
  if (opt.k == 0) {
    throw sb::input_error(sb::errc::bad_alphabet, "missing required --k");
  }
  params.k = opt.k;
  params.pi = parse_pi(opt.pi, opt.k);
  sb::require_valid(params);
  return params;
}

std::vector<sb::target_pair> pairs_from(const raw_options& opt, int k) {
  std::vector<sb::target_pair> pairs;
  if (opt.pairs.empty()) {
    pairs.push_back(sb::target_pair{0, 1});
  } else {
    for (const std::string& s : opt.pairs) {
      pairs.push_back(parse_pair(s));
    }
  }
  for (const sb::target_pair& p : pairs) {
    sb::require_valid(p, k);
  }
  return pairs;
}

void emit(const table& t, bool csv, std::ostream& os) {
  if (csv) {
    t.print_csv(os);
  } else {
    t.print_text(os);
  }
}

// --- subcommand handlers ----------------------------------------------------

int cmd_kappas(const raw_options& opt) {
  const sb::shuffle_params params = params_from(opt);
  const bool csv = opt.format != "text";
  const int prec = csv ? 17 : 10;
  output_sink sink(opt.out);

  table t;
  t.header = {"input",  "ln_kappa1", "kappa2", "ln_kappa2",
              "kappa3", "kappa4",    "kappa5"};
  for (int x = 0; x < params.k; ++x) {
    const sb::kappa_set ks = sb::compute_kappas(params, x);
    t.add_row({std::to_string(x), fmt_num(ks.ln_kappa1, prec),
               fmt_num(ks.kappa2, prec), fmt_num(ks.ln_kappa2, prec),
               fmt_num(ks.kappa3, prec), fmt_num(ks.kappa4, prec),
               fmt_num(ks.kappa5, prec)});
  }
  emit(t, csv, *sink.os);
  return 0;
}

int cmd_case(const raw_options& opt) {
  const double eps0 =
      parse_single_double(opt.eps0, "--eps0", sb::errc::non_positive_epsilon0);
  const auto eps_grid =
      parse_double_list(opt.eps, "--eps", sb::errc::non_positive_epsilon);
  const bool csv = opt.format != "text";
  output_sink sink(opt.out);

  table t;
  t.header = {"eps", "case"};
  const int prec = csv ? 17 : 10;
  for (double eps : eps_grid) {
    try {
      t.add_row({fmt_num(eps, prec), sb::case_name(sb::select_case(eps0, eps))});
    } catch (const sb::input_error& e) {
      std::cerr << "warning: eps=" << fmt_num(eps, prec) << ": " << e.what()
                << "\n";
      t.add_row({fmt_num(eps, prec), "error"});
    }
  }
  emit(t, csv, *sink.os);
  return 0;
}

int cmd_bound(const raw_options& opt) {
  const sb::shuffle_params params = params_from(opt);
  const auto eps_grid =
      parse_double_list(opt.eps, "--eps", sb::errc::non_positive_epsilon);
  const bool csv = opt.format != "text";
  const int prec = csv ? 17 : 10;
  output_sink sink(opt.out);

  table t;
  t.header = {"eps", "case", "ln_delta", "delta_clamped"};
  for (double eps : eps_grid) {
    try {
      const sb::delta_bound b = sb::min_delta_bound(params, eps);
      t.add_row({fmt_num(eps, prec), sb::case_name(b.which),
                 fmt_num(b.ln_delta, prec), fmt_num(b.delta_clamped, prec)});
    } catch (const sb::input_error& e) {
      // Batch friendly: bad grid points become error markers, not failures.
      std::cerr << "warning: eps=" << fmt_num(eps, prec) << ": " << e.what()
                << "\n";
      t.add_row({fmt_num(eps, prec), "error", "", ""});
    }
  }
  emit(t, csv, *sink.os);
  return 0;
}

int cmd_regions(const raw_options& opt) {
  const sb::shuffle_params params = params_from(opt);
  const auto pairs = pairs_from(opt, params.k);
  std::vector<double> eps_grid;
  if (!opt.eps.empty()) {
    eps_grid = parse_double_list(opt.eps, "--eps", sb::errc::non_positive_epsilon);
  }
  const bool csv = opt.format == "csv";
  const int prec = csv ? 17 : 10;
  output_sink sink(opt.out);
  std::ostream& os = *sink.os;

  sb::verdict_options vopt;
  vopt.scan_points = opt.scan_points;
  vopt.classification_target = pairs.front().x0;
  const sb::regions_report report = sb::regions_and_verdict(params, vopt);

  const auto kv = [&](const std::string& key, const std::string& value) {
    if (csv) {
      os << key << "," << value << "\n";
    } else {
      os << key << " = " << value << "\n";
    }
  };

  if (csv) {
    os << "key,value\n";
  }
  kv("eps0", fmt_num(params.eps0, prec));
  kv("n", std::to_string(params.n));
  kv("k", std::to_string(params.k));
  for (const sb::per_input_analysis& in : report.inputs) {
    const std::string p = "input" + std::to_string(in.input) + ".";
    kv(p + "ln_kappa1", fmt_num(in.kappas.ln_kappa1, prec));
    kv(p + "kappa2", fmt_num(in.kappas.kappa2, prec));
    kv(p + "ln_kappa2", fmt_num(in.kappas.ln_kappa2, prec));
    kv(p + "kappa3", fmt_num(in.kappas.kappa3, prec));
    kv(p + "kappa4", fmt_num(in.kappas.kappa4, prec));
    kv(p + "kappa5", fmt_num(in.kappas.kappa5, prec));
    kv(p + "S1", fmt_region(in.s1, prec));
    kv(p + "S2", fmt_region(in.s2, prec));
    std::string roots;
    for (std::size_t i = 0; i < in.poly_roots.size(); ++i) {
      roots += (i ? " " : "") + fmt_num(in.poly_roots[i], prec);
    }
    kv(p + "poly_roots", in.poly_roots.empty() ? "none" : roots);
    roots.clear();
    for (std::size_t i = 0; i < in.h_roots.size(); ++i) {
      roots += (i ? " " : "") + fmt_num(in.h_roots[i], prec);
    }
    kv(p + "h_roots", in.h_roots.empty() ? "none" : roots);
  }
  kv("S1_intersection", fmt_region(report.s1_intersection, prec));
  kv("S2_intersection", fmt_region(report.s2_intersection, prec));
  kv("mu", fmt_num(report.verdict.mu, prec));
  kv("thm3a_holds", report.verdict.thm3a_holds ? "true" : "false");
  kv("thm3b_holds", report.verdict.thm3b_holds ? "true" : "false");
  kv("certified_S1", fmt_region(report.verdict.s1, prec));
  kv("certified_S2", fmt_region(report.verdict.s2, prec));
  kv("scan_points", std::to_string(report.scan_points));
  kv("scan_note",
     "uniform sign scan; sign-preserving tangential roots can be missed");
  for (double eps : eps_grid) {
    sb::verdict_options cls = vopt;
    cls.epsilon = eps;
    const sb::regions_report r = sb::regions_and_verdict(params, cls);
    kv("classification.eps=" + fmt_num(eps, prec),
       sb::asymptotic_class_name(r.verdict.classification));
  }
  return 0;
}

int cmd_oracle(const raw_options& opt) {
  const sb::shuffle_params params = params_from(opt);
  const auto pairs = pairs_from(opt, params.k);
  const auto eps_grid =
      parse_double_list(opt.eps, "--eps", sb::errc::non_positive_epsilon);
  const bool csv = opt.format != "text";
  const int prec = csv ? 17 : 10;
  output_sink sink(opt.out);
  std::ostream& os = *sink.os;

  if (opt.samples > 0) {
    os << "# prng=" << sb::kPrngAlgorithm << " seed=" << opt.seed
       << " samples=" << opt.samples << "\n";
  }

  table t;
  t.header = {"eps",      "others",        "x0",
              "x1",       "tight_adp",     "tight_dp",
              "case",     "ln_delta",      "delta_clamped",
              "exact_over_bound"};
  if (opt.samples > 0) {
    t.header.push_back("mc_tv_x0");
  }

  const sb::krr_matrix krr = sb::make_krr(params.eps0, params.k);
  for (double eps : eps_grid) {
    if (!(eps >= 0.0)) {
      throw sb::input_error(sb::errc::negative_epsilon,
                            "oracle requires eps >= 0");
    }
    std::optional<sb::delta_bound> bound;
    if (eps > 0.0) {
      bound = sb::min_delta_bound(params, eps);
    }
    for (const sb::target_pair& pair : pairs) {
      std::vector<sb::dataset> others_list;
      if (!opt.others.empty()) {
        others_list.push_back(parse_others(opt.others, params.n));
      } else {
        // Default adversarial fills: every other user holds x0; second run
        // with x1. Identical datasets (n = 1) collapse to one run.
        others_list.push_back(sb::dataset(
            static_cast<std::size_t>(params.n - 1), pair.x0));
        sb::dataset alt(static_cast<std::size_t>(params.n - 1), pair.x1);
        if (alt != others_list.front()) {
          others_list.push_back(std::move(alt));
        }
      }
      for (const sb::dataset& others : others_list) {
        const double adp = sb::tight_adp(params, others, pair, eps);
        const double dp = sb::tight_dp(params, others, eps);
        std::vector<std::string> row = {
            fmt_num(eps, prec), encode_dataset(others),
            std::to_string(pair.x0), std::to_string(pair.x1),
            fmt_num(adp, prec), fmt_num(dp, prec)};
        if (bound) {
          const double ratio =
              dp > 0.0 ? std::exp(std::log(dp) - bound->ln_delta) : 0.0;
          row.push_back(sb::case_name(bound->which));
          row.push_back(fmt_num(bound->ln_delta, prec));
          row.push_back(fmt_num(bound->delta_clamped, prec));
          row.push_back(fmt_num(ratio, prec));
        } else {
          row.insert(row.end(), {"-", "-", "-", "-"});
        }
        if (opt.samples > 0) {
          sb::dataset d0 = others;
          d0.push_back(pair.x0);
          const auto samples =
              sb::sample_shuffled(d0, krr, opt.samples, opt.seed);
          const double tv = sb::hockey_stick_delta(
              sb::empirical_dist(samples, params.k),
              sb::exact_histogram_dist(d0, krr), 0.0);
          row.push_back(fmt_num(tv, prec));
        }
        t.add_row(std::move(row));
      }
    }
  }
  emit(t, csv, os);
  return 0;
}

int cmd_sweep(const raw_options& opt) {
  auto eps0_grid =
      parse_double_list(opt.eps0, "--eps0", sb::errc::non_positive_epsilon0);
  auto n_grid = parse_int_list(opt.n, "--n", sb::errc::bad_size);
  auto eps_grid =
      parse_double_list(opt.eps, "--eps", sb::errc::non_positive_epsilon);
  // Row order is lexicographic in (eps0, n, eps) regardless of flag order.
  std::sort(eps0_grid.begin(), eps0_grid.end());
  std::sort(n_grid.begin(), n_grid.end());
  std::sort(eps_grid.begin(), eps_grid.end());
  if (opt.k == 0) {
    throw sb::input_error(sb::errc::bad_alphabet, "missing required --k");
  }
  const bool csv = opt.format != "text";
  const int prec = csv ? 17 : 10;
  output_sink sink(opt.out);

  table t;
  t.header = {"eps0",      "n",         "k",        "eps",       "case",
              "ln_delta",  "delta_clamped",         "ln_kappa1", "kappa2",
              "ln_kappa2", "kappa3",    "kappa4",   "kappa5",    "thm3a",
              "thm3b",     "mu",        "classification",        "tight_dp_worst",
              "exact_over_bound"};

  for (double eps0 : eps0_grid) {
    for (std::int64_t n : n_grid) {
      sb::shuffle_params params;
      params.eps0 = eps0;
      params.n = n;
      params.k = opt.k;
      params.pi = parse_pi(opt.pi, opt.k);
      sb::require_valid(params);
      const auto pairs = pairs_from(opt, params.k);
      const int target = pairs.front().x0;

      sb::verdict_options vopt;
      vopt.scan_points = opt.scan_points;
      vopt.classification_target = target;
      const sb::regions_report report = sb::regions_and_verdict(params, vopt);
      const sb::kappa_set& ks =
          report.inputs[static_cast<std::size_t>(target)].kappas;

      for (double eps : eps_grid) {
        std::vector<std::string> row = {fmt_num(eps0, prec), std::to_string(n),
                                        std::to_string(opt.k),
                                        fmt_num(eps, prec)};
        std::optional<sb::delta_bound> bound;
        try {
          bound = sb::min_delta_bound(params, eps);
          row.push_back(sb::case_name(bound->which));
          row.push_back(fmt_num(bound->ln_delta, prec));
          row.push_back(fmt_num(bound->delta_clamped, prec));
        } catch (const sb::input_error& e) {
          std::cerr << "warning: eps=" << fmt_num(eps, prec) << ": " << e.what()
                    << "\n";
          row.insert(row.end(), {"error", "", ""});
        }
        row.insert(row.end(),
                   {fmt_num(ks.ln_kappa1, prec), fmt_num(ks.kappa2, prec),
                    fmt_num(ks.ln_kappa2, prec), fmt_num(ks.kappa3, prec),
                    fmt_num(ks.kappa4, prec), fmt_num(ks.kappa5, prec),
                    report.verdict.thm3a_holds ? "true" : "false",
                    report.verdict.thm3b_holds ? "true" : "false",
                    fmt_num(report.verdict.mu, prec)});
        // Classification against the target input's kappas.
        sb::asymptotic_class cls = sb::asymptotic_class::unclassified;
        if (bound) {
          if (eps > std::max(ks.kappa4, ks.ln_kappa2)) {
            cls = sb::asymptotic_class::theorem1_asymptotic;
          } else if (ks.ln_kappa2 < eps && eps < ks.kappa4) {
            cls = sb::asymptotic_class::theorem2_asymptotic;
          }
        }
        row.push_back(sb::asymptotic_class_name(cls));

        if (bound && n <= sb::kOracleMaxN && opt.k <= sb::kOracleMaxK) {
          double worst = 0.0;
          for (int fill : {pairs.front().x0, pairs.front().x1}) {
            const sb::dataset others(static_cast<std::size_t>(n - 1), fill);
            worst = std::max(worst, sb::tight_dp(params, others, eps));
          }
          row.push_back(fmt_num(worst, prec));
          row.push_back(fmt_num(
              worst > 0.0 ? std::exp(std::log(worst) - bound->ln_delta) : 0.0,
              prec));
        } else {
          row.insert(row.end(), {"", ""});
        }
        t.add_row(std::move(row));
      }
    }
  }
  emit(t, csv, *sink.os);
  return 0;
}

int cmd_check(const raw_options& opt) {
  output_sink sink(opt.out);
  const auto summary = shuffle_blanket::check::run_acceptance(*sink.os);
  return summary.all_passed ? 0 : 3;
}

void add_common_options(CLI::App* sub, raw_options& opt) {
  sub->add_option("--eps0", opt.eps0,
                  "local randomizer privacy level (comma list in sweep)");
  sub->add_option("--n", opt.n, "number of users (comma list in sweep)");
  sub->add_option("--k", opt.k, "alphabet size (>= 2)");
  sub->add_option("--pi", opt.pi, "data distribution: comma list or 'uniform'");
  sub->add_option("--eps", opt.eps, "epsilon grid, comma list");
  sub->add_option("--pair", opt.pairs,
                  "target input pair 'x0,x1'; repeatable");
  sub->add_option("--others", opt.others,
                  "fixed entries of the other n-1 users: comma list or 'all:V'");
  sub->add_option("--samples", opt.samples, "Monte Carlo sample count");
  sub->add_option("--seed", opt.seed, "Monte Carlo seed (64-bit)");
  sub->add_option("--scan-points", opt.scan_points,
                  "H-root scan grid points (default 10000)");
  sub->add_option("--format", opt.format, "output format: csv or text")
      ->check(CLI::IsMember({"csv", "text"}));
  sub->add_option("--out", opt.out, "write output to file instead of stdout");
  sub->add_option("--config", opt.config,
                  "flat key=value config file; flags override file values");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shuffle-model (eps, delta) privacy accounting for k-ary "
               "randomized response"};
  app.require_subcommand(1);

  raw_options opt;
  CLI::App* kappas = app.add_subcommand(
      "kappas", "instance constants kappa1..kappa5 per target input");
  CLI::App* case_cmd =
      app.add_subcommand("case", "case split of the bound per epsilon");
  CLI::App* bound =
      app.add_subcommand("bound", "minimum delta permitted by the bound");
  CLI::App* regions = app.add_subcommand(
      "regions", "tightness regions, root checks and theorem verdicts");
  CLI::App* oracle = app.add_subcommand(
      "oracle", "exact small-instance tight ADP/DP versus the bound");
  CLI::App* sweep =
      app.add_subcommand("sweep", "flat CSV over the (eps0, n, eps) grid");
  CLI::App* check =
      app.add_subcommand("check", "run the built-in acceptance suite");
  for (CLI::App* sub : {kappas, case_cmd, bound, regions, oracle, sweep, check}) {
    add_common_options(sub, opt);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    for (const CLI::App* sub :
         {kappas, case_cmd, bound, regions, oracle, sweep, check}) {
      if (sub->parsed() && !opt.config.empty()) {
        apply_config(sub, opt);
      }
    }
    if (kappas->parsed()) {
      return cmd_kappas(opt);
    }
    if (case_cmd->parsed()) {
      return cmd_case(opt);
    }
    if (bound->parsed()) {
      return cmd_bound(opt);
    }
    if (regions->parsed()) {
      return cmd_regions(opt);
    }
    if (oracle->parsed()) {
      return cmd_oracle(opt);
    }
    if (sweep->parsed()) {
      return cmd_sweep(opt);
    }
    if (check->parsed()) {
      return cmd_check(opt);
    }
  } catch (const sb::input_error& e) {
    std::cerr << "error (" << sb::errc_name(e.code()) << "): " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
