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

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hoq/common.hpp"

namespace hoq {

struct Subsystem {
  std::string label;
  long long dim = 1;
  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// An ordered list of labelled tensor factors. Labels are opaque and unique
/// within a space; the stored order is the canonical order used for matrix
/// row/column indexing (first label most significant, Kronecker convention).
/// Dimension-1 factors are legal and behave as scalars.
class CompositeSpace {
 public:
  CompositeSpace() = default;
  explicit CompositeSpace(std::vector<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const { return subsystems_; }
  std::size_t size() const { return subsystems_.size(); }
  long long total_dim() const { return total_dim_; }

  bool contains(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws UnknownLabel
  long long dim_of(const std::string& label) const;      // throws UnknownLabel

  std::vector<std::string> labels() const;
  std::set<std::string> label_set() const;

  /// Row-index stride of factor i (first factor most significant).
  long long stride(std::size_t i) const { return strides_[i]; }

  /// New space containing only `keep` (in this space's order).
  CompositeSpace subspace(const std::set<std::string>& keep) const;
  /// New space with `drop` removed (in this space's order).
  CompositeSpace without(const std::set<std::string>& drop) const;

  friend bool operator==(const CompositeSpace&, const CompositeSpace&) = default;

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<long long> strides_;
  long long total_dim_ = 1;
};

/// Builds a space from (label, dim) pairs. Throws DuplicateLabel / NonPositiveDim.
CompositeSpace make_space(const std::vector<std::pair<std::string, long long>>& factors);

/// Concatenation; throws LabelCollision on any shared label.
CompositeSpace concat(const CompositeSpace& a, const CompositeSpace& b);

/// Validates that every element of `subset` is a label of `space`.
void require_labels(const CompositeSpace& space, const std::set<std::string>& subset);

/// Product of the dims of `subset` within `space`.
long long dim_product(const CompositeSpace& space, const std::set<std::string>& subset);

std::string describe(const CompositeSpace& space);

}  // namespace hoq
