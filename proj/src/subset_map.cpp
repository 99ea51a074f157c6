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

#include "hoq/subset_map.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace hoq {

namespace {

std::map<std::string, long long> dims_by_label(const CompositeSpace& s) {
  std::map<std::string, long long> out;
  for (const auto& sub : s.subsystems()) out[sub.label] = sub.dim;
  return out;
}

LabelSet normalize_subset(const CompositeSpace& space, const LabelSet& subset) {
  LabelSet out;
  for (const auto& l : subset) {
    if (!space.contains(l)) throw UnknownLabel("unknown label '" + l + "' in subset");
    if (space.dim_of(l) > 1) out.insert(l);
  }
  return out;
}

}  // namespace

SubsetMap::SubsetMap(CompositeSpace space, std::map<LabelSet, Rational> terms)
    : space_(std::move(space)) {
  for (auto& [subset, coeff] : terms) {
    if (coeff == Rational(0)) continue;
    terms_[normalize_subset(space_, subset)] += coeff;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == Rational(0)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

SubsetMap SubsetMap::identity(const CompositeSpace& space) {
  return SubsetMap(space, {{{}, Rational(1)}});
}

SubsetMap SubsetMap::zero(const CompositeSpace& space) { return SubsetMap(space, {}); }

SubsetMap SubsetMap::trace_replace(const CompositeSpace& space, const LabelSet& subset) {
  return SubsetMap(space, {{subset, Rational(1)}});
}

Rational SubsetMap::coefficient_sum() const {
  Rational s(0);
  for (const auto& [subset, coeff] : terms_) s += coeff;
  return s;
}

Rational SubsetMap::coefficient(const LabelSet& subset) const {
  auto it = terms_.find(normalize_subset(space_, subset));
  return it == terms_.end() ? Rational(0) : it->second;
}

Operator SubsetMap::apply(const Operator& a) const {
  if (dims_by_label(a.space) != dims_by_label(space_)) {
    throw SpaceMismatch("operator on [" + describe(a.space) +
                        "] does not match the map's space [" + describe(space_) + "]");
  }
  Operator out = zero_operator(a.space);
  for (const auto& [subset, coeff] : terms_) {
    out.matrix += boost::rational_cast<double>(coeff) * trace_and_replace(a, subset).matrix;
  }
  return out;
}

SubsetMap SubsetMap::scaled(const Rational& c) const {
  std::map<LabelSet, Rational> t;
  for (const auto& [subset, coeff] : terms_) t[subset] = coeff * c;
  return SubsetMap(space_, std::move(t));
}

SubsetMap SubsetMap::plus(const SubsetMap& o) const {
  if (dims_by_label(space_) != dims_by_label(o.space_)) {
    throw SpaceMismatch("adding subset maps on different spaces");
  }
  std::map<LabelSet, Rational> t = terms_;
  for (const auto& [subset, coeff] : o.terms_) t[subset] += coeff;
  return SubsetMap(space_, std::move(t));
}

SubsetMap SubsetMap::minus(const SubsetMap& o) const { return plus(o.scaled(Rational(-1))); }

SubsetMap SubsetMap::lifted(const CompositeSpace& bigger) const {
  auto big = dims_by_label(bigger);
  for (const auto& [label, dim] : dims_by_label(space_)) {
    auto it = big.find(label);
    if (it == big.end() || it->second != dim) {
      throw SpaceMismatch("cannot lift: target space lacks label '" + label + "' at dimension " +
                          std::to_string(dim));
    }
  }
  std::map<LabelSet, Rational> t(terms_.begin(), terms_.end());
  return SubsetMap(bigger, std::move(t));
}

bool operator==(const SubsetMap& a, const SubsetMap& b) {
  return dims_by_label(a.space_) == dims_by_label(b.space_) && a.terms_ == b.terms_;
}

SubsetMap compose(const SubsetMap& p, const SubsetMap& q) {
  if (dims_by_label(p.space()) != dims_by_label(q.space())) {
    throw SpaceMismatch("composing subset maps on different spaces");
  }
  std::map<LabelSet, Rational> t;
  for (const auto& [s, c] : p.terms()) {
    for (const auto& [u, d] : q.terms()) {
      LabelSet merged = s;
      merged.insert(u.begin(), u.end());
      t[merged] += c * d;
    }
  }
  return SubsetMap(p.space(), std::move(t));
}

SubsetMap tensor_map(const SubsetMap& p, const SubsetMap& q) {
  CompositeSpace joint = concat(p.space(), q.space());
  std::map<LabelSet, Rational> t;
  for (const auto& [s, c] : p.terms()) {
    for (const auto& [u, d] : q.terms()) {
      LabelSet merged = s;
      merged.insert(u.begin(), u.end());
      t[merged] += c * d;
    }
  }
  return SubsetMap(std::move(joint), std::move(t));
}

namespace {

// Stable display order: by subset size, then by factor positions in the space.
std::vector<const std::pair<const LabelSet, Rational>*> ordered_terms(const SubsetMap& m) {
  std::vector<const std::pair<const LabelSet, Rational>*> terms;
  for (const auto& t : m.terms()) terms.push_back(&t);
  auto position_key = [&](const LabelSet& s) {
    std::vector<std::size_t> key;
    for (const auto& l : s) key.push_back(m.space().index_of(l));
    std::sort(key.begin(), key.end());
    return key;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return position_key(a->first) < position_key(b->first);
  });
  return terms;
}

}  // namespace

std::string to_string(const SubsetMap& m) {
  if (m.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ordered_terms(m)) {
    const Rational& c = t->second;
    if (!first) os << " ";
    os << (c < Rational(0) ? "-" : (first ? "" : "+"));
    if (!first) os << " ";
    Rational mag = c < Rational(0) ? -c : c;
    os << format_rational(mag) << "*_{";
    bool fl = true;
    // print labels in space order
    for (const auto& sub : m.space().subsystems()) {
      if (t->first.count(sub.label)) {
        if (!fl) os << ",";
        os << sub.label;
        fl = false;
      }
    }
    os << "}";
    first = false;
  }
  return os.str();
}

std::string to_json(const SubsetMap& m) {
  nlohmann::json j;
  j["labels"] = nlohmann::json::array();
  for (const auto& s : m.space().subsystems()) {
    j["labels"].push_back(nlohmann::json::array({s.label, s.dim}));
  }
  j["terms"] = nlohmann::json::array();
  for (const auto* t : ordered_terms(m)) {
    nlohmann::json jt;
    jt["subset"] = nlohmann::json::array();
    for (const auto& sub : m.space().subsystems()) {
      if (t->first.count(sub.label)) jt["subset"].push_back(sub.label);
    }
    jt["num"] = t->second.numerator();
    jt["den"] = t->second.denominator();
    j["terms"].push_back(std::move(jt));
  }
  return j.dump();
}

SubsetMap subset_map_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad subset-map JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("terms")) {
    throw IoError("subset-map JSON must contain 'labels' and 'terms'");
  }
  std::vector<std::pair<std::string, long long>> factors;
  for (const auto& l : j["labels"]) {
    factors.emplace_back(l[0].get<std::string>(), l[1].get<long long>());
  }
  CompositeSpace space = make_space(factors);
  std::map<LabelSet, Rational> terms;
  for (const auto& t : j["terms"]) {
    LabelSet subset;
    for (const auto& l : t["subset"]) subset.insert(l.get<std::string>());
    const long long num = t["num"].get<long long>();
    const long long den = t["den"].get<long long>();
    if (den == 0) throw IoError("zero denominator in subset-map term");
    terms[subset] += Rational(num, den);
  }
  return SubsetMap(std::move(space), std::move(terms));
}

SubsetMap channel_projector(const CompositeSpace& space, const LabelSet& in_labels,
                            const LabelSet& out_labels) {
  require_labels(space, in_labels);
  require_labels(space, out_labels);
  LabelSet io = in_labels;
  io.insert(out_labels.begin(), out_labels.end());
  std::map<LabelSet, Rational> t;
  t[{}] += Rational(1);
  t[out_labels] += Rational(-1);
  t[io] += Rational(1);
  return SubsetMap(space, std::move(t));
}

SubsetMap transform_projector(const SubsetMap& p_in, const SubsetMap& p_out) {
  CompositeSpace joint = concat(p_in.space(), p_out.space());
  const LabelSet in_all = p_in.space().label_set();
  const LabelSet out_all = p_out.space().label_set();
  LabelSet everything = in_all;
  everything.insert(out_all.begin(), out_all.end());

  std::map<LabelSet, Rational> t;
  t[{}] += Rational(1);
  for (const auto& [s, c] : p_in.terms()) {
    t[s] -= c;                                   // -(P_i ⊗ 1)
    for (const auto& [u, d] : p_out.terms()) {   // +(P_i ⊗ P_o)
      LabelSet merged = s;
      merged.insert(u.begin(), u.end());
      t[merged] += c * d;
    }
    LabelSet s_out = s;                          // -(P_i ⊗ 1)∘_O
    s_out.insert(out_all.begin(), out_all.end());
    t[s_out] -= c;
  }
  t[everything] += Rational(1);                  // +_{IO}
  return SubsetMap(std::move(joint), std::move(t));
}

SubsetMap linear_transform_projector(const SubsetMap& p_in, const SubsetMap& p_out) {
  CompositeSpace joint = concat(p_in.space(), p_out.space());
  std::map<LabelSet, Rational> t;
  t[{}] += Rational(1);
  for (const auto& [s, c] : p_in.terms()) {
    t[s] -= c;
    for (const auto& [u, d] : p_out.terms()) {
      LabelSet merged = s;
      merged.insert(u.begin(), u.end());
      t[merged] += c * d;
    }
  }
  return SubsetMap(std::move(joint), std::move(t));
}

SubsetMap dual_projector(const SubsetMap& p) {
  std::map<LabelSet, Rational> t;
  t[{}] += Rational(1);
  for (const auto& [s, c] : p.terms()) t[s] -= c;
  t[p.space().label_set()] += Rational(1);
  return SubsetMap(p.space(), std::move(t));
}

}  // namespace hoq
