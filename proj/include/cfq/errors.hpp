// Copyright 2026 The cfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef CFQ_ERRORS_H_
#define CFQ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cfq {

// Failure taxonomy. Validation failures map to CLI exit code 2, internal
// invariant violations (non_integral_coefficients) to exit code 3.
enum class errc {
  gcd_violation,
  degenerate_triple,
  range_violation,
  mismatched_level,
  degenerate_subcover,
  k_out_of_range,
  genus_too_small,
  hyperelliptic_input,
  ramified_prime,
  zero_argument,
  non_unit,
  non_integral_coefficients,
  cache_version_mismatch,
  invalid_range,
  invalid_triple,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::gcd_violation: return "gcd_violation";
    case errc::degenerate_triple: return "degenerate_triple";
    case errc::range_violation: return "range_violation";
    case errc::mismatched_level: return "mismatched_level";
    case errc::degenerate_subcover: return "degenerate_subcover";
    case errc::k_out_of_range: return "k_out_of_range";
    case errc::genus_too_small: return "genus_too_small";
    case errc::hyperelliptic_input: return "hyperelliptic_input";
    case errc::ramified_prime: return "ramified_prime";
    case errc::zero_argument: return "zero_argument";
    case errc::non_unit: return "non_unit";
    case errc::non_integral_coefficients: return "non_integral_coefficients";
    case errc::cache_version_mismatch: return "cache_version_mismatch";
    case errc::invalid_range: return "invalid_range";
    case errc::invalid_triple: return "invalid_triple";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

  // True for faults that indicate an internal invariant violation rather
  // than bad input.
  bool internal() const { return code_ == errc::non_integral_coefficients; }

 private:
  errc code_;
};

[[noreturn]] inline void Fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cfq

#endif  // CFQ_ERRORS_H_
