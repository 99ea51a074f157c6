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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hoq/operator.hpp"
#include "hoq/space.hpp"

namespace hoq {

using LabelSet = std::set<std::string>;

/// A rational linear combination of trace-and-replace maps over label subsets:
///   P = sum_S c_S * (trace-and-replace over S),
/// the empty subset standing for the identity. These maps form a commutative
/// algebra: composing two basis maps merges their subsets, so compositions,
/// adjoints and transpose-twirls of SubsetMaps stay exact (every basis map is
/// self-adjoint and commutes with full transposition).
///
/// Terms are normalized on construction: dimension-1 labels are dropped from
/// subsets (tracing-and-replacing a scalar factor is the identity) and zero
/// coefficients are erased, so equality of term maps is well defined.
class SubsetMap {
 public:
  SubsetMap() = default;
  SubsetMap(CompositeSpace space, std::map<LabelSet, Rational> terms);

  static SubsetMap identity(const CompositeSpace& space);
  static SubsetMap zero(const CompositeSpace& space);
  /// The single trace-and-replace map over `subset` (coefficient 1).
  static SubsetMap trace_replace(const CompositeSpace& space, const LabelSet& subset);

  const CompositeSpace& space() const { return space_; }
  const std::map<LabelSet, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient_sum() const;
  Rational coefficient(const LabelSet& subset) const;  // 0 when absent

  Operator apply(const Operator& a) const;

  SubsetMap scaled(const Rational& c) const;
  SubsetMap plus(const SubsetMap& o) const;
  SubsetMap minus(const SubsetMap& o) const;

  /// Same term list on a larger space (labels must be a superset, dims equal).
  SubsetMap lifted(const CompositeSpace& bigger) const;

  /// Equality is by label/dim content and normalized terms; factor order is
  /// irrelevant.
  friend bool operator==(const SubsetMap& a, const SubsetMap& b);

 private:
  CompositeSpace space_;
  std::map<LabelSet, Rational> terms_;
};

/// Composition P∘Q = sum_{S,T} c_S d_T (trace-and-replace over S∪T).
/// Requires identical label/dim content (SpaceMismatch otherwise).
SubsetMap compose(const SubsetMap& p, const SubsetMap& q);

/// Tensor product of maps on disjoint spaces; acts on the concatenated space.
SubsetMap tensor_map(const SubsetMap& p, const SubsetMap& q);

std::string to_string(const SubsetMap& m);

/// JSON form:
///   {"labels": [[label, dim], ...],
///    "terms": [{"subset": [label, ...], "num": int, "den": int}, ...]}
std::string to_json(const SubsetMap& m);
SubsetMap subset_map_from_json(const std::string& text);

// ---------------------------------------------------------------------------
// Projector constructions in the subset algebra. These are the symbolic
// kernels behind the object-set catalogue and the transform builders.

/// Projector onto the affine span of channel-type objects from `in_labels` to
/// `out_labels` on `space`:  X - _out X + _{in,out} X.
SubsetMap channel_projector(const CompositeSpace& space, const LabelSet& in_labels,
                            const LabelSet& out_labels);

/// Five-term projector characterizing linear maps that send the set cut out by
/// `p_in` (trace gamma_in) into the set cut out by `p_out` (trace gamma_out),
/// at the level of their matrix representations on concat(in, out):
///   T - (P_i ⊗ 1)[T] + (P_i ⊗ P_o)[T] - (P_i ⊗ 1)[_O T] + _{IO} T.
SubsetMap transform_projector(const SubsetMap& p_in, const SubsetMap& p_out);

/// Three-term variant for linear-subspace (no trace constraint) object sets:
///   T - (P_i ⊗ 1)[T] + (P_i ⊗ P_o)[T].
SubsetMap linear_transform_projector(const SubsetMap& p_in, const SubsetMap& p_out);

/// Dual-set projector  X - P[X] + _{all} X  (the trace-and-replace over the
/// whole space deposits tr(X)·1/d).
SubsetMap dual_projector(const SubsetMap& p);

}  // namespace hoq
