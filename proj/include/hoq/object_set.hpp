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
#include <string>
#include <variant>
#include <vector>

#include "hoq/gamma.hpp"
#include "hoq/op_map.hpp"

namespace hoq {

/// Wire-role metadata for causal analysis: which labels act as the network's
/// incoming/outgoing wires for the objects in a set. Catalogue constructors
/// fill these; they are advisory (causality routines accept explicit sets).
struct WireRoles {
  std::set<std::string> inputs;
  std::set<std::string> outputs;
};

/// A set of operators cut out by a projector, a trace value and (optionally) a
/// positivity constraint:  { W : P[W] = W,  tr W = gamma,  W >= 0 }.
struct ObjectSet {
  std::string name;
  CompositeSpace space;
  OpMap projector;  // square on `space`
  GammaExpr gamma;
  bool require_psd = true;
  WireRoles wires;

  Rational gamma_value() const { return gamma.evaluate(space); }
};

/// One affine condition  map[ tr_{trace_out_first} W ] = rhs.
struct AffineEquation {
  std::set<std::string> trace_out_first;
  OpMap map;
  Operator rhs;
};

/// Fallback description for sets whose projector lacks the structure needed
/// for the trace-form characterization: a (possibly trivial) projector plus an
/// optional affine condition.
struct AffineConstraintSet {
  std::string name;
  CompositeSpace space;
  OpMap projector;
  std::optional<AffineEquation> affine;
  bool require_psd = false;
};

using SetDescription = std::variant<ObjectSet, AffineConstraintSet>;

const CompositeSpace& space_of(const SetDescription& s);
const std::string& name_of(const SetDescription& s);

// --- Catalogue -------------------------------------------------------------

/// Density-operator-style set: identity projector, trace 1.
ObjectSet state_set(const CompositeSpace& space);

/// Choi matrices of completely positive trace-preserving maps from `in_space`
/// to `out_space`; trace = input dimension.
ObjectSet channel_set(const CompositeSpace& in_space, const CompositeSpace& out_space);

/// One tooth of a comb: the wires it receives, then the wires it emits
/// (either may be empty).
struct Tooth {
  CompositeSpace in;
  CompositeSpace out;
};

/// Causally ordered networks with the given teeth (time order): discarding the
/// last output wires must equal discarding the last tooth entirely, and so on
/// down the sequence. The projector is the alternating sum over the nested
/// chain of trailing wire groups; trace = product of all tooth input dims. One
/// tooth reduces to channel_set.
ObjectSet comb_set(const std::vector<Tooth>& teeth);

/// Superchannel sugar: comb with teeth (past -> slot_in), (slot_out -> future).
ObjectSet superchannel_set(const CompositeSpace& past, const CompositeSpace& slot_in,
                           const CompositeSpace& slot_out, const CompositeSpace& future);

/// Channels on the joint space that cannot signal between the parties:
/// intersection of the per-party channel conditions. Trace = product of all
/// input dims.
ObjectSet nonsignalling_set(const std::vector<std::pair<CompositeSpace, CompositeSpace>>& parties);

/// Dual of the non-signalling set (normalized probability pairing); trace =
/// product of all output dims.
ObjectSet process_matrix_set(const std::vector<std::pair<CompositeSpace, CompositeSpace>>& parties);

/// Tensor product of two sets: projector tensor, gamma product.
ObjectSet tensor_sets(const ObjectSet& a, const ObjectSet& b, int budget = kDefaultDenseBudget);

/// The dual set { W̄ : tr[W̄ W] = 1 for all W in S }. For a unital projector
/// the result is again an ObjectSet (projector 1 - P + trace deposit, gamma =
/// d / gamma_S). Otherwise an AffineConstraintSet is returned, whose single
/// equation reads  P^τ[ W̄^τ ] = (1/gamma) P^τ[1].
/// Throws ZeroGamma when gamma_S = 0.
SetDescription dual_set(const ObjectSet& s, int budget = kDefaultDenseBudget);

// --- Validation ------------------------------------------------------------

struct ValidationReport {
  bool psd_ok = true;
  bool projector_ok = true;
  bool trace_ok = true;
  double min_eig = 0.0;            // smallest eigenvalue (Hermitian part)
  double projector_residual = 0.0; // ||P[W] - W||_F
  double trace_residual = 0.0;     // |tr W - gamma|, or the affine residual
  bool pass() const { return psd_ok && projector_ok && trace_ok; }
};

/// Evaluates all three conditions (no short-circuiting). The PSD floor is
/// -max(tol, 1e-9 * ||W||_2).
ValidationReport validate(const Operator& w, const ObjectSet& s, double tol = kDefaultTol);
ValidationReport validate(const Operator& w, const AffineConstraintSet& s,
                          double tol = kDefaultTol);
ValidationReport validate(const Operator& w, const SetDescription& s, double tol = kDefaultTol);

}  // namespace hoq
