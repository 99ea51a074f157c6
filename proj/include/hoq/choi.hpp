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

#include <functional>

#include "hoq/op_map.hpp"
#include "hoq/operator.hpp"

namespace hoq {

/// The matrix of a linear map L(in) -> L(out) as an operator on concat(in, out):
///   T = sum_jk |j><k|_in ⊗ F[|j><k|]_out.
/// The represented map is recovered by apply_choi. Input and output labels must
/// be disjoint.
struct ChoiMatrix {
  CompositeSpace in_space;
  CompositeSpace out_space;
  Operator op;

  ChoiMatrix() = default;
  ChoiMatrix(CompositeSpace in, CompositeSpace out, Operator op_);
};

ChoiMatrix choi_of_map(const std::function<Operator(const Operator&)>& fn,
                       const CompositeSpace& in_space, const CompositeSpace& out_space);

/// Action of the represented map:  F[X] = tr_in[(X^τ ⊗ 1_out) T].
Operator apply_choi(const ChoiMatrix& t, const Operator& x);
Operator apply_choi(const Operator& t, const CompositeSpace& in_space,
                    const CompositeSpace& out_space, const Operator& x);

/// Link product: contracts over the labels shared between the two operators
/// (partial transpose applied to the second operand's shared slice), tensors
/// over the rest. Result lives on (A-only labels) ++ (B-only labels).
/// Full overlap yields a scalar operator on the empty space; disjoint labels
/// reduce to the tensor product. Dims of shared labels must agree
/// (DimMismatchOnSharedLabel).
Operator link(const Operator& a, const Operator& b);

/// Report for the rewrite rules that move a map across a link contraction:
///   A ⋆ P[B]        =  (P^τ ⊗ 1)[A] ⋆ B      (always, for linear P)
///   A ⋆ P[B]        =  (P ⊗ 1)[A] ⋆ B        (when P is self-adjoint and
///                                             commutes with transposition)
/// The second form is only evaluated when the predicates hold.
struct MoveMapReport {
  double twirled_deviation = 0.0;   // first form
  bool plain_checked = false;
  double plain_deviation = 0.0;     // second form, when checked
  MapPredicates predicates;
};

/// A lives on a superset of P's space; B lives exactly on P's space.
MoveMapReport move_map(const Operator& a, const OpMap& p, const Operator& b,
                       int budget = kDefaultDenseBudget);

}  // namespace hoq
