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

#include <Eigen/Dense>
#include <set>
#include <string>
#include <vector>

#include "hoq/space.hpp"

namespace hoq {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A dense square matrix over a labelled composite space. Rows and columns are
/// indexed in the space's canonical (insertion) order, first label most
/// significant. Entries must be finite.
struct Operator {
  CompositeSpace space;
  Matrix matrix;

  Operator() = default;
  Operator(CompositeSpace space_, Matrix matrix_);

  long long dim() const { return space.total_dim(); }
};

/// All-zero / identity operators on a space.
Operator zero_operator(const CompositeSpace& space);
Operator identity_operator(const CompositeSpace& space);

/// Matrix unit |r><c| on a space.
Operator basis_operator(const CompositeSpace& space, long long r, long long c);

/// Kronecker product; result space is the concatenation (LabelCollision on overlap).
Operator tensor(const Operator& a, const Operator& b);

/// Partial trace over `subset`; result lives on the remaining labels in order.
Operator partial_trace(const Operator& a, const std::set<std::string>& subset);

/// Partial transpose on `subset`; same space.
Operator partial_transpose(const Operator& a, const std::set<std::string>& subset);

/// Trace-and-replace: traces out `subset` and reinserts the maximally mixed
/// state on it, in the original slots. Same space. The identity for an empty
/// subset and for dimension-1 labels.
Operator trace_and_replace(const Operator& a, const std::set<std::string>& subset);

/// Reorders the factors to `new_order`, which must be a permutation of the
/// space's labels (NotAPermutation otherwise). Pure relabelling of indices.
Operator permute(const Operator& a, const std::vector<std::string>& new_order);

/// Permutes `a` so its label order matches `target` (same label set required).
Operator align_to(const Operator& a, const CompositeSpace& target);

Operator conjugate(const Operator& a);
Operator transpose(const Operator& a);
Operator adjoint(const Operator& a);

cx trace(const Operator& a);
double frobenius_norm(const Operator& a);
/// || a - b ||_F after aligning label orders; SpaceMismatch if label sets differ.
double frobenius_distance(const Operator& a, const Operator& b);
double hermiticity_defect(const Operator& a);
/// Smallest eigenvalue of the Hermitian part of `a`.
double min_eigenvalue(const Operator& a);
/// Largest singular value (spectral norm).
double spectral_norm(const Operator& a);

bool approx_equal(const Operator& a, const Operator& b, double tol = kDefaultTol);

/// JSON form:
///   {"labels": [[label, dim], ...],
///    "matrix": [[[re, im], ...], ...]}   (row-major, canonical label order)
/// Matrix entries serialize with round-trip precision.
std::string to_json(const Operator& a);
Operator operator_from_json(const std::string& text);

}  // namespace hoq
