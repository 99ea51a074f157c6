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

#include "hoq/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hoq {

CompositeSpace::CompositeSpace(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : subsystems_) {
    if (s.dim < 1) {
      throw NonPositiveDim("subsystem '" + s.label + "' has non-positive dimension " +
                           std::to_string(s.dim));
    }
    if (!seen.insert(s.label).second) {
      throw DuplicateLabel("duplicate label '" + s.label + "'");
    }
  }
  strides_.assign(subsystems_.size(), 1);
  total_dim_ = 1;
  for (std::size_t i = subsystems_.size(); i-- > 0;) {
    strides_[i] = total_dim_;
    total_dim_ *= subsystems_[i].dim;
  }
}

bool CompositeSpace::contains(const std::string& label) const {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t CompositeSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  throw UnknownLabel("unknown label '" + label + "'");
}

long long CompositeSpace::dim_of(const std::string& label) const {
  return subsystems_[index_of(label)].dim;
}

std::vector<std::string> CompositeSpace::labels() const {
  std::vector<std::string> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

std::set<std::string> CompositeSpace::label_set() const {
  std::set<std::string> out;
  for (const auto& s : subsystems_) out.insert(s.label);
  return out;
}

CompositeSpace CompositeSpace::subspace(const std::set<std::string>& keep) const {
  require_labels(*this, keep);
  std::vector<Subsystem> kept;
  for (const auto& s : subsystems_) {
    if (keep.count(s.label)) kept.push_back(s);
  }
  return CompositeSpace(kept);
}

CompositeSpace CompositeSpace::without(const std::set<std::string>& drop) const {
  require_labels(*this, drop);
  std::vector<Subsystem> kept;
  for (const auto& s : subsystems_) {
    if (!drop.count(s.label)) kept.push_back(s);
  }
  return CompositeSpace(kept);
}

CompositeSpace make_space(const std::vector<std::pair<std::string, long long>>& factors) {
  std::vector<Subsystem> subs;
  subs.reserve(factors.size());
  for (const auto& [label, dim] : factors) subs.push_back({label, dim});
  return CompositeSpace(std::move(subs));
}

CompositeSpace concat(const CompositeSpace& a, const CompositeSpace& b) {
  for (const auto& s : b.subsystems()) {
    if (a.contains(s.label)) {
      throw LabelCollision("label '" + s.label + "' present on both sides of a tensor product");
    }
  }
  std::vector<Subsystem> subs = a.subsystems();
  subs.insert(subs.end(), b.subsystems().begin(), b.subsystems().end());
  return CompositeSpace(std::move(subs));
}

void require_labels(const CompositeSpace& space, const std::set<std::string>& subset) {
  for (const auto& l : subset) {
    if (!space.contains(l)) throw UnknownLabel("unknown label '" + l + "'");
  }
}

long long dim_product(const CompositeSpace& space, const std::set<std::string>& subset) {
  long long d = 1;
  for (const auto& l : subset) d *= space.dim_of(l);
  return d;
}

std::string describe(const CompositeSpace& space) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : space.subsystems()) {
    if (!first) os << " ";
    os << s.label << ":" << s.dim;
    first = false;
  }
  if (first) os << "(scalar)";
  return os.str();
}

}  // namespace hoq
