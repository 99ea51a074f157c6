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

#include <memory>
#include <string>
#include <vector>

#include "hoq/transform.hpp"

namespace hoq {

/// One wire declaration in the description language: "label:dim".
struct LabelDecl {
  std::string label;
  long long dim = 0;

  friend bool operator==(const LabelDecl&, const LabelDecl&) = default;
};

/// AST of the object-description language. Grammar (EBNF):
///
///   expr     = "state" "(" labels ")"
///            | "channel" "(" labels ";" labels ")"
///            | "comb" "(" pair { "," pair } ")"
///            | "superchannel" "(" labels ";" labels ";" labels ";" labels ")"
///            | "ns" "(" pair { "," pair } ")"
///            | "pm" "(" pair { "," pair } ")"
///            | "dual" "(" expr ")"
///            | "tensor" "(" expr "," expr ")"
///            | "transform" "(" expr "->" expr ")"
///            | "linear_transform" "(" expr "->" expr ")" ;
///   pair     = "(" labels ";" labels ")" ;
///   labels   = [ label { "," label } ] ;
///   label    = atom ":" integer ;
///   atom     = letter-or-digit-or-underscore sequence ;
///
/// Whitespace is free. Empty label lists are allowed wherever `labels`
/// appears (a channel from nothing is a state preparation, and so on).
struct ObjectExpr {
  std::string head;
  std::vector<std::vector<LabelDecl>> groups;  // state/channel/superchannel
  std::vector<std::pair<std::vector<LabelDecl>, std::vector<LabelDecl>>> pairs;  // comb/ns/pm
  std::vector<std::shared_ptr<ObjectExpr>> children;  // dual/tensor/transform

  friend bool operator==(const ObjectExpr& a, const ObjectExpr& b);
};

/// Parses the description language; SyntaxError carries line and column.
ObjectExpr parse_expr(const std::string& text);

/// Canonical text form; parse(print(parse(t))) has the same AST as parse(t).
std::string print_expr(const ObjectExpr& e);

/// Result of elaborating an expression: always a set description; transform
/// heads additionally carry the full transform characterization.
struct BuiltObject {
  SetDescription set;
  std::optional<TransformSpec> transform;
  std::vector<std::string> warnings;
};

BuiltObject build_object(const ObjectExpr& e, int budget = kDefaultDenseBudget);

}  // namespace hoq
