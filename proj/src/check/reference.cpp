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

#include "check/reference.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstring>

namespace shuffle_blanket::check {

namespace {

using real50 = boost::multiprecision::cpp_bin_float_50;

const real50& blanket_c() {
  static const real50 c = 1 - exp(real50(-2));
  return c;
}

}  // namespace

kappa_reference reference_kappas(double eps0, std::int64_t n, int k,
                                 double pi_target) {
  const real50 e0(eps0);
  const real50 pix(pi_target);
  const real50 nn(n);
  const real50 e_pos = exp(e0);
  const real50 e_neg = exp(-e0);
  const real50 two_sinh = e_pos - e_neg;

  kappa_reference ref;

  const real50 kappa1 =
      two_sinh * two_sinh * exp(blanket_c() * nn * e_neg) / 4;
  ref.ln_kappa1 = static_cast<double>(log(kappa1));

  const real50 kappa2 = 1 + (e_pos - 1) / (nn + (e_pos - 1) * pix * (nn - 1));
  ref.kappa2 = static_cast<double>(kappa2);

  const real50 kappa3 =
      (nn + (e_pos - 1) * (nn * pix + 1 - pix)) / (e_pos + k - 1);
  ref.kappa3 = static_cast<double>(kappa3);

  const real50 artanh_arg = 2 * sinh(e0) / exp(e0 / 2);
  ref.kappa4_finite = artanh_arg < 1;
  if (ref.kappa4_finite) {
    ref.kappa4 = static_cast<double>(2 * atanh(artanh_arg));
  }

  ref.kappa5 = static_cast<double>(sinh(e0) * sinh(e0) / nn);
  return ref;
}

delta_reference reference_ln_delta(double eps0, std::int64_t n, double eps) {
  const real50 e0(eps0);
  const real50 ee(eps);
  const real50 nn(n);
  const real50 e_pos = exp(ee);
  const real50 two_sinh = exp(e0) - exp(-e0);

  const real50 exp1 = exp(-e0);
  const real50 exp2 = (e_pos - 1) * (e_pos - 1) /
                      ((e_pos + 1) * (e_pos + 1) * two_sinh * two_sinh);

  delta_reference ref;
  ref.is_case1 = exp1 <= exp2;
  const real50 exponent = ref.is_case1 ? exp1 : exp2;
  const real50 ln_delta = 2 * log(e_pos + 1) + 2 * log(two_sinh) -
                          log(4 * nn) - log(e_pos - 1) -
                          blanket_c() * nn * exponent;
  ref.ln_delta = static_cast<double>(ln_delta);
  return ref;
}

const char* reference_constant_digits(const char* name) {
  if (std::strcmp(name, "e") == 0) {
    return "2.71828182845904523536028747135266249775724709369996";
  }
  if (std::strcmp(name, "ln2") == 0) {
    return "0.6931471805599453094172321214581765680755001343602553";
  }
  if (std::strcmp(name, "blanket_c") == 0) {
    return "0.8646647167633873081060005050275155965923684540904241";
  }
  return "";
}

}  // namespace shuffle_blanket::check
