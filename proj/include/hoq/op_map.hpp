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

#include <optional>
#include <variant>
#include <vector>

#include "hoq/dense_map.hpp"
#include "hoq/subset_map.hpp"

namespace hoq {

/// Structural facts about a map. For symbolic maps these are exact (rational
/// arithmetic); for dense maps they are numeric at the given tolerance.
struct MapPredicates {
  bool is_projector = false;
  bool is_self_adjoint = false;
  bool is_unital = false;
  bool commutes_with_transpose = false;
  bool is_trace_preserving = false;
  bool exact = false;

  bool nice() const {
    return is_projector && is_self_adjoint && is_unital && commutes_with_transpose;
  }
};

/// A linear map on operators: either symbolic (a SubsetMap, exact) or a dense
/// superoperator matrix. Operations stay symbolic whenever both operands are
/// symbolic and densify otherwise, subject to the dense budget.
class OpMap {
 public:
  OpMap() : v_(SubsetMap()) {}
  explicit OpMap(SubsetMap m) : v_(std::move(m)) {}
  explicit OpMap(DenseSuperMap m) : v_(std::move(m)) {}

  bool symbolic() const { return std::holds_alternative<SubsetMap>(v_); }
  const SubsetMap& as_subset_map() const;
  const DenseSuperMap& as_dense() const;

  const CompositeSpace& in_space() const;
  const CompositeSpace& out_space() const;

  Operator apply(const Operator& a) const;

  /// Densifies; BudgetExceeded if in/out total dims exceed `budget`.
  DenseSuperMap to_dense(int budget = kDefaultDenseBudget) const;

  MapPredicates predicates(double tol = kDefaultTol) const;

 private:
  std::variant<SubsetMap, DenseSuperMap> v_;
};

OpMap compose(const OpMap& p, const OpMap& q, int budget = kDefaultDenseBudget);
OpMap tensor_map(const OpMap& p, const OpMap& q, int budget = kDefaultDenseBudget);
OpMap adjoint_map(const OpMap& p, int budget = kDefaultDenseBudget);
/// P^τ = *∘P†∘*; fixes every SubsetMap (their basis maps are self-adjoint and
/// commute with transposition).
OpMap tau_twirl(const OpMap& p, int budget = kDefaultDenseBudget);

/// Lifts a map on a subspace to `bigger` by tensoring identity on the missing
/// labels, then reordering to `bigger`'s label order.
OpMap lift_to(const OpMap& p, const CompositeSpace& bigger, int budget = kDefaultDenseBudget);

/// Hilbert-Schmidt-orthonormal basis of the image of a projector map. When the
/// map is self-adjoint and commutes with transposition the basis is Hermitian
/// (and `hermitian` is set). Throws NotAProjector if the projector predicate
/// fails.
struct ImageBasis {
  std::vector<Operator> ops;
  bool hermitian = false;
  std::size_t dimension() const { return ops.size(); }
};
ImageBasis image_basis(const OpMap& p, double tol = 1e-7, int budget = kDefaultDenseBudget);

/// JSON round-trip. Symbolic maps serialize their subset terms exactly; dense
/// maps store the full superoperator matrix.
std::string to_json(const OpMap& p);
OpMap map_from_json(const std::string& text);

}  // namespace hoq
