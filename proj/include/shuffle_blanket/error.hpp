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

#include <stdexcept>
#include <string>

namespace shuffle_blanket {

// Every rejected input names the field that violated its constraint.
enum class errc {
  non_positive_epsilon0,
  bad_alphabet,        // k < 2
  bad_size,            // n < 1, or a dataset of the wrong length
  bad_distribution,    // pi has a negative entry or does not sum to 1
  bad_target,          // target index out of range, or x0 == x1
  non_positive_epsilon,
  negative_epsilon,    // hockey-stick divergence needs epsilon >= 0
  bad_interval,        // search interval with lo >= hi or lo <= 0
  bad_delta_target,    // delta target outside (0, 1)
  too_large,           // exact oracle size guard exceeded
  mismatched_support,  // distributions over different (n, k)
  bad_config,          // unreadable config file or unknown key
};

const char* errc_name(errc code);

class input_error : public std::runtime_error {
 public:
  input_error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace shuffle_blanket
