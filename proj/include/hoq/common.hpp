// Copyright 2026 The hoq developers
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

#include <boost/rational.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace hoq {

using cx = std::complex<double>;
using Rational = boost::rational<long long>;

/// Default absolute Frobenius-norm tolerance for dense numeric comparisons.
inline constexpr double kDefaultTol = 1e-9;

/// Relative floor for positive-semidefiniteness checks: the smallest eigenvalue
/// must be >= -kPsdRelFloor * ||W||_2.
inline constexpr double kPsdRelFloor = 1e-9;

/// Densifying a symbolic map (or building any superoperator matrix) is refused
/// above this total space dimension; (total_dim^2)^2 matrix entries otherwise.
inline constexpr int kDefaultDenseBudget = 64;

struct Error : std::runtime_error {
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

struct DuplicateLabel : Error {
  using Error::Error;
};
struct NonPositiveDim : Error {
  using Error::Error;
};
struct LabelCollision : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct NotAPermutation : Error {
  using Error::Error;
};
struct SpaceMismatch : Error {
  using Error::Error;
};
struct DimMismatchOnSharedLabel : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct NotAProjector : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};
struct NonUnitalProjector : Error {
  using Error::Error;
};
struct ZeroGamma : Error {
  using Error::Error;
};
struct BadDims : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct NeedsSymbolic : Error {
  using Error::Error;
};

/// Raised by the expression parser; carries a 1-based source position.
struct SyntaxError : Error {
  int line;
  int column;
  SyntaxError(const std::string& message, int line_, int column_)
      : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
              message),
        line(line_),
        column(column_) {}
};

std::string format_rational(const Rational& r);

/// Fixed-precision decimal used for all CLI numeric output (12 significant digits).
std::string format_real(double x);

}  // namespace hoq
