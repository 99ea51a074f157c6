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

#include "hoq/causality.hpp"

#include <algorithm>

namespace hoq {

ConditionReport check_condition(const ObjectSet& s, const CausalCondition& c) {
  if (!s.projector.symbolic()) {
    throw NeedsSymbolic("causal conditions are decided exactly on symbolic projectors only");
  }
  if (!std::includes(c.rhs.begin(), c.rhs.end(), c.lhs.begin(), c.lhs.end())) {
    throw Error("causal condition needs lhs ⊆ rhs: discarding more cannot discard less");
  }
  for (const auto& l : c.lhs) {
    if (!s.space.contains(l)) throw UnknownLabel("unknown label '" + l + "'");
  }
  for (const auto& l : c.rhs) {
    if (!s.space.contains(l)) throw UnknownLabel("unknown label '" + l + "'");
  }
  const SubsetMap& p = s.projector.as_subset_map();
  SubsetMap diff = SubsetMap::trace_replace(s.space, c.lhs)
                       .minus(SubsetMap::trace_replace(s.space, c.rhs));
  ConditionReport rep;
  rep.condition = c;
  rep.residual = compose(diff, p);
  rep.holds = rep.residual.is_zero();
  return rep;
}

bool condition_holds(const ObjectSet& s, const CausalCondition& c) {
  return check_condition(s, c).holds;
}

FinalOutputReport is_final_output(const ObjectSet& s, const std::string& candidate,
                                  const std::set<std::string>& discard_partners) {
  FinalOutputReport rep;
  rep.candidate = candidate;
  rep.is_final = true;
  for (const auto& x : discard_partners) {
    CausalCondition c;
    c.lhs = {candidate};
    c.rhs = {candidate, x};
    rep.per_partner.push_back(check_condition(s, c));
    if (!rep.per_partner.back().holds) rep.is_final = false;
  }
  return rep;
}

SurveyReport causal_order_survey(const ObjectSet& s, const std::set<std::string>& outputs,
                                 const std::set<std::string>& inputs) {
  SurveyReport rep;
  for (const auto& candidate : outputs) {
    SurveyEntry entry;
    entry.candidate = candidate;
    for (const auto& x : inputs) {
      if (x == candidate) continue;
      CausalCondition c;
      c.lhs = {candidate};
      c.rhs = {candidate, x};
      entry.checks.push_back(check_condition(s, c));
      if (entry.checks.back().holds && !entry.admissible) {
        entry.admissible = true;
        entry.witness_partner = x;
      }
    }
    if (entry.admissible) rep.any_admissible = true;
    rep.entries.push_back(std::move(entry));
  }
  if (rep.any_admissible) {
    std::string winners;
    for (const auto& e : rep.entries) {
      if (!e.admissible) continue;
      if (!winners.empty()) winners += ", ";
      winners += e.candidate;
    }
    rep.verdict = "admissible final output exists: " + winners;
  } else {
    rep.verdict =
        "no admissible final output: the set contains causally disordered elements";
  }
  return rep;
}

std::set<std::string> same_tooth_partners(const std::vector<Tooth>& teeth,
                                          const std::string& candidate) {
  for (const auto& t : teeth) {
    if (t.out.contains(candidate)) return t.in.label_set();
  }
  throw UnknownLabel("no tooth emits wire '" + candidate + "'");
}

}  // namespace hoq
