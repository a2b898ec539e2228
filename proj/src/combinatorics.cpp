// Copyright 2026 The hbtdicke Authors
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

#include "hbtdicke/combinatorics.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hbtdicke::combinatorics {

namespace {

std::uint64_t exact_falling(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
  return r;
}

void check(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("combinatorics: need 0 <= k <= n");
}

}  // namespace

double factorial(int n) {
  check(n, n);
  if (n <= kExactFactorialLimit) return static_cast<double>(exact_falling(n, n));
  return std::exp(std::lgamma(n + 1.0));
}

double falling_factorial(int n, int k) {
  check(n, k);
  if (n <= kExactFactorialLimit) return static_cast<double>(exact_falling(n, k));
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(n - k + 1.0));
}

double binomial(int n, int k) {
  check(n, k);
  if (n <= kExactFactorialLimit) {
    return static_cast<double>(exact_falling(n, k) / exact_falling(k, k));
  }
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

}  // namespace hbtdicke::combinatorics
