// Copyright 2026 The ensemble-shapley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ensemble_shapley {

// Rejected input: out-of-range probability, weight bound violation, bad
// parameter. The message names the offending index or field.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A quantity is undefined for the given input (zero variance with no
// stability floor, entropy of an all-zero vector, AUC with one class).
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact enumeration refused because the ensemble exceeds the configured limit.
class EnumerationLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ensemble_shapley
