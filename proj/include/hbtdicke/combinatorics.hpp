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

#pragma once

namespace hbtdicke::combinatorics {

/// Arguments up to this value use exact integer arithmetic; larger ones go through lgamma.
inline constexpr int kExactFactorialLimit = 12;

double factorial(int n);
/// n! / (n-k)!
double falling_factorial(int n, int k);
double binomial(int n, int k);

}  // namespace hbtdicke::combinatorics
