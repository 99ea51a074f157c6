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
#include <vector>

#include "hoq/object_set.hpp"

namespace hoq {

/// The statement "_lhs W = _rhs W for every W in the set": discarding the
/// subsystems in `lhs` already discards those in `rhs`. Requires lhs ⊆ rhs
/// (throwing more away cannot throw less away).
struct CausalCondition {
  LabelSet lhs;
  LabelSet rhs;
};

struct ConditionReport {
  CausalCondition condition;
  bool holds = false;
  /// (_lhs - _rhs) ∘ P in the subset algebra; the zero map iff `holds`.
  SubsetMap residual;
};

/// Decides the condition exactly (rational arithmetic, no tolerance) on the
/// image of the set's projector. The projector must be symbolic
/// (NeedsSymbolic); labels must exist (UnknownLabel).
ConditionReport check_condition(const ObjectSet& s, const CausalCondition& c);
bool condition_holds(const ObjectSet& s, const CausalCondition& c);

/// Tests whether `candidate` can be the final output wire against an explicit
/// set of partner wires: for EVERY partner x the condition
/// _candidate = _{candidate, x} must hold on the image.
struct FinalOutputReport {
  std::string candidate;
  bool is_final = false;
  std::vector<ConditionReport> per_partner;
};
FinalOutputReport is_final_output(const ObjectSet& s, const std::string& candidate,
                                  const std::set<std::string>& discard_partners);

/// Survey over candidate output wires: a candidate is admissible as the final
/// output when SOME input wire x satisfies _candidate = _{candidate, x} on the
/// image (the wire pair that a last tooth would form). If no candidate is
/// admissible, the set contains causally disordered elements.
struct SurveyEntry {
  std::string candidate;
  bool admissible = false;
  std::optional<std::string> witness_partner;
  std::vector<ConditionReport> checks;
};
struct SurveyReport {
  std::vector<SurveyEntry> entries;
  bool any_admissible = false;
  std::string verdict;
};
SurveyReport causal_order_survey(const ObjectSet& s, const std::set<std::string>& outputs,
                                 const std::set<std::string>& inputs);

/// Partner wires implied by a declared tooth ordering: the inputs of the tooth
/// that emits `candidate`. UnknownLabel when no tooth emits it.
std::set<std::string> same_tooth_partners(const std::vector<Tooth>& teeth,
                                          const std::string& candidate);

}  // namespace hoq
