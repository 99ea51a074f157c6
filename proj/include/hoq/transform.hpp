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

#include <string>
#include <vector>

#include "hoq/choi.hpp"
#include "hoq/object_set.hpp"

namespace hoq {

/// Characterization of the linear maps sending one object set into the other,
/// stated on Choi matrices over the concatenated input+output labels.
///
/// `result` is an ObjectSet (projector + trace value) when both endpoint
/// projectors are self-adjoint, unital and commute with transposition; for
/// arbitrary projectors it degrades to a projector plus one operator-valued
/// affine equation, and for trace-value-zero endpoints to a purely linear
/// projector condition. `path` names the construction that was used.
struct TransformSpec {
  ObjectSet s_in;
  ObjectSet s_out;
  GammaExpr rescale;  // gamma_out / gamma_in as a symbolic dim product
  SetDescription result;
  std::string path;  // "symbolic" | "dense" | "general" | "traceless"
  std::vector<std::string> warnings;

  const OpMap& projector() const {
    return std::visit([](const auto& v) -> const OpMap& { return v.projector; }, result);
  }
  const CompositeSpace& space() const { return space_of(result); }
};

/// Builds the full characterization. Structure: on the joint space,
///   T  -  (P_i x 1)[T]  +  (P_i x P_o)[T]  -  (P_i x 1)[tr&replace_out T]
///      +  tr&replace_all T,
/// with trace value (gamma_o / gamma_i) * d_i. Falls back automatically (with
/// a warning) to the general construction when the endpoint projectors lack
/// the required structure, and to the traceless construction when
/// gamma_i = 0. Throws ZeroGamma for the impossible corner
/// gamma_i = 0 with gamma_o != 0.
TransformSpec build_transform_space(const ObjectSet& s_in, const ObjectSet& s_out,
                                    int budget = kDefaultDenseBudget);

/// Characterization of maps between the *linear spans* only (no trace
/// conditions): T - (P_i x 1)[T] + (P_i x P_o)[T]. Requires self-adjoint,
/// unital, transpose-commuting projectors (HypothesisViolated otherwise).
OpMap build_transform_space_linear(const ObjectSet& s_in, const ObjectSet& s_out,
                                   int budget = kDefaultDenseBudget);

/// Fully general construction for arbitrary linear projectors: projector
///   T - (P_i^tau x 1)[T] + (P_i^tau x P_o)[T]
/// plus the affine equation  P_i^tau[ tr_out T ] = (gamma_o/gamma_i) P_i^tau[1].
/// Requires gamma_i != 0.
TransformSpec build_transform_space_general(const ObjectSet& s_in, const ObjectSet& s_out,
                                            int budget = kDefaultDenseBudget);

/// Orthogonal projector onto the traceless part of the image of S.projector:
/// span{ P[X] : tr P[X] = 0 }. Used to characterize transformations out of
/// trace-value-zero sets.
OpMap build_traceless_projector(const ObjectSet& s, double tol = 1e-7,
                                int budget = kDefaultDenseBudget);

/// Report from probing a candidate Choi matrix against the map-level
/// conditions: P_o[T[P_i X]] = T[P_i X] and tr T[P_i X] = r tr P_i[X] for a
/// basis (or sample) of probes X.
struct MapCheckReport {
  double projector_residual = 0.0;  // max over probes
  double trace_residual = 0.0;      // max over probes
  bool deterministic = false;       // full matrix-unit basis was used
  int probes = 0;

  bool pass(double tol = kDefaultTol) const {
    return projector_residual <= tol && trace_residual <= tol;
  }
};

/// Probes the map version of the membership conditions directly through
/// apply_choi. Uses the full matrix-unit basis of the input space when its
/// dimension is at most `kExhaustiveProbeDim`; otherwise `n_samples` seeded
/// random unit-norm Hermitian probes. Requires gamma_i != 0 (ZeroGamma) and
/// matching label sets (SpaceMismatch).
inline constexpr long long kExhaustiveProbeDim = 8;
MapCheckReport check_map_version(const ChoiMatrix& t, const ObjectSet& s_in,
                                 const ObjectSet& s_out, int n_samples = 48,
                                 unsigned long long seed = 7);

/// JSON bundle round-trip: endpoint sets, result projector, trace value and
/// the optional affine equation, ready for external SDP tooling.
std::string to_json(const TransformSpec& spec);
TransformSpec transform_from_json(const std::string& text);

/// Serialization of a single set description (used inside the bundle and by
/// the command-line tool on its own).
std::string to_json(const SetDescription& s);
SetDescription set_from_json(const std::string& text);

}  // namespace hoq
