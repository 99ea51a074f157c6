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

#include "hoq/operator.hpp"

namespace hoq {

/// vec(M) stacks columns (column-major), so vec index = col * dim + row.
Vector vec(const Operator& a);
Operator unvec(const CompositeSpace& space, const Vector& v);

/// A linear map L(in_space) -> L(out_space) stored as its (out_dim^2) x
/// (in_dim^2) matrix in the column-stacking convention. Under this convention
/// the adjoint is the conjugate transpose and the transpose-twirl
/// P^τ[X] := P†[X*]* is the plain matrix transpose.
struct DenseSuperMap {
  CompositeSpace in_space;
  CompositeSpace out_space;
  Matrix m;

  DenseSuperMap() = default;
  DenseSuperMap(CompositeSpace in, CompositeSpace out, Matrix mat);
  bool square() const { return in_space.total_dim() == out_space.total_dim(); }
};

DenseSuperMap identity_supermap(const CompositeSpace& space);
/// X -> X^T on `space`.
DenseSuperMap transpose_supermap(const CompositeSpace& space);

/// Builds the matrix by applying `fn` to every matrix unit of in_space.
DenseSuperMap supermap_from_function(const CompositeSpace& in_space,
                                     const CompositeSpace& out_space,
                                     const std::function<Operator(const Operator&)>& fn);

/// Applies the map; the operator is aligned to in_space first.
Operator apply(const DenseSuperMap& p, const Operator& a);

/// p ∘ q (q first). Requires q.out_space == p.in_space by label content.
DenseSuperMap compose(const DenseSuperMap& p, const DenseSuperMap& q);

/// Tensor product acting on the concatenated spaces. Note that under vec
/// ordering this is an index-interleaved product, not a plain Kronecker
/// product of the two matrices.
DenseSuperMap tensor_map(const DenseSuperMap& p, const DenseSuperMap& q);

DenseSuperMap adjoint_map(const DenseSuperMap& p);
/// The transpose-twirl P^τ = *∘P†∘* (matrix transpose in this convention).
DenseSuperMap tau_twirl(const DenseSuperMap& p);

DenseSuperMap scale(const DenseSuperMap& p, cx factor);
DenseSuperMap add(const DenseSuperMap& p, const DenseSuperMap& q);
DenseSuperMap subtract(const DenseSuperMap& p, const DenseSuperMap& q);

}  // namespace hoq
