// Copyright 2026 The region_rrt Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace region_rrt {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed netpbm bytes. The message names the offending field.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Start/goal missing from a query image, or lying in an obstacle.
class QueryError : public Error {
 public:
  using Error::Error;
};

// Violated precondition (dimension mismatch, empty tree, bad parameter).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Heuristic with no usable mass, or a map with no free cell.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Augmentation could not place a feasible query after the retry budget.
class AugmentError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractError(message);
}

}  // namespace detail
}  // namespace region_rrt
