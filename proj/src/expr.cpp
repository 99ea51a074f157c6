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

#include "hoq/expr.hpp"

#include <cctype>
#include <sstream>

namespace hoq {

bool operator==(const ObjectExpr& a, const ObjectExpr& b) {
  if (a.head != b.head || a.groups != b.groups || a.pairs != b.pairs ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) return false;
  }
  return true;
}

namespace {

enum class Tok { Atom, LParen, RParen, Comma, Semi, Colon, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == '(') {
        out.push_back(make(Tok::LParen, "("));
        advance();
        continue;
      }
      if (c == ')') {
        out.push_back(make(Tok::RParen, ")"));
        advance();
        continue;
      }
      if (c == ',') {
        out.push_back(make(Tok::Comma, ","));
        advance();
        continue;
      }
      if (c == ';') {
        out.push_back(make(Tok::Semi, ";"));
        advance();
        continue;
      }
      if (c == ':') {
        out.push_back(make(Tok::Colon, ":"));
        advance();
        continue;
      }
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        out.push_back(make(Tok::Arrow, "->"));
        advance();
        advance();
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        Token t = make(Tok::Atom, "");
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          t.text += text_[pos_];
          advance();
        }
        out.push_back(std::move(t));
        continue;
      }
      throw SyntaxError("unexpected character '" + std::string(1, c) + "'", line_, col_);
    }
    out.push_back(make(Tok::End, ""));
    return out;
  }

 private:
  Token make(Tok kind, std::string text) const { return Token{kind, std::move(text), line_, col_}; }
  void advance() {
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ObjectExpr run() {
    ObjectExpr e = expr();
    expect(Tok::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  Token take() { return toks_[idx_++]; }

  [[noreturn]] void fail(const std::string& wanted) const {
    const Token& t = peek();
    const std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError("expected " + wanted + ", got " + got, t.line, t.column);
  }

  Token expect(Tok kind, const std::string& wanted) {
    if (peek().kind != kind) fail(wanted);
    return take();
  }

  ObjectExpr expr() {
    const Token head = expect(Tok::Atom, "a constructor name");
    ObjectExpr e;
    e.head = head.text;
    expect(Tok::LParen, "'('");
    if (e.head == "state") {
      e.groups.push_back(labels());
    } else if (e.head == "channel") {
      e.groups.push_back(labels());
      expect(Tok::Semi, "';'");
      e.groups.push_back(labels());
    } else if (e.head == "superchannel") {
      for (int k = 0; k < 4; ++k) {
        if (k) expect(Tok::Semi, "';'");
        e.groups.push_back(labels());
      }
    } else if (e.head == "comb" || e.head == "ns" || e.head == "pm") {
      e.pairs.push_back(pair());
      while (peek().kind == Tok::Comma) {
        take();
        e.pairs.push_back(pair());
      }
    } else if (e.head == "dual") {
      e.children.push_back(std::make_shared<ObjectExpr>(expr()));
    } else if (e.head == "tensor") {
      e.children.push_back(std::make_shared<ObjectExpr>(expr()));
      expect(Tok::Comma, "','");
      e.children.push_back(std::make_shared<ObjectExpr>(expr()));
    } else if (e.head == "transform" || e.head == "linear_transform") {
      e.children.push_back(std::make_shared<ObjectExpr>(expr()));
      expect(Tok::Arrow, "'->'");
      e.children.push_back(std::make_shared<ObjectExpr>(expr()));
    } else {
      throw SyntaxError("unknown constructor '" + e.head + "'", head.line, head.column);
    }
    expect(Tok::RParen, "')'");
    return e;
  }

  std::pair<std::vector<LabelDecl>, std::vector<LabelDecl>> pair() {
    expect(Tok::LParen, "'('");
    std::vector<LabelDecl> in = labels();
    expect(Tok::Semi, "';'");
    std::vector<LabelDecl> out = labels();
    expect(Tok::RParen, "')'");
    return {std::move(in), std::move(out)};
  }

  std::vector<LabelDecl> labels() {
    std::vector<LabelDecl> out;
    if (peek().kind != Tok::Atom) return out;  // empty list
    out.push_back(label());
    while (peek().kind == Tok::Comma) {
      take();
      out.push_back(label());
    }
    return out;
  }

  LabelDecl label() {
    const Token name = expect(Tok::Atom, "a label");
    expect(Tok::Colon, "':'");
    const Token dim = expect(Tok::Atom, "a dimension");
    LabelDecl d;
    d.label = name.text;
    for (char c : dim.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw SyntaxError("dimension must be a positive integer, got '" + dim.text + "'",
                          dim.line, dim.column);
      }
    }
    d.dim = std::stoll(dim.text);
    if (d.dim < 1) {
      throw SyntaxError("dimension must be a positive integer, got '" + dim.text + "'", dim.line,
                        dim.column);
    }
    return d;
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

void print_labels(std::ostream& os, const std::vector<LabelDecl>& labels) {
  bool first = true;
  for (const auto& l : labels) {
    if (!first) os << ",";
    os << l.label << ":" << l.dim;
    first = false;
  }
}

CompositeSpace space_of_labels(const std::vector<LabelDecl>& labels) {
  std::vector<std::pair<std::string, long long>> factors;
  for (const auto& l : labels) factors.emplace_back(l.label, l.dim);
  return make_space(factors);
}

const ObjectSet& as_object_set(const BuiltObject& b, const std::string& context) {
  if (!std::holds_alternative<ObjectSet>(b.set)) {
    throw Error(context + " needs a projector-plus-trace set, but the operand only has an "
                          "affine description");
  }
  return std::get<ObjectSet>(b.set);
}

}  // namespace

ObjectExpr parse_expr(const std::string& text) { return Parser(Lexer(text).run()).run(); }

std::string print_expr(const ObjectExpr& e) {
  std::ostringstream os;
  os << e.head << "(";
  if (e.head == "state") {
    print_labels(os, e.groups.at(0));
  } else if (e.head == "channel" || e.head == "superchannel") {
    for (std::size_t k = 0; k < e.groups.size(); ++k) {
      if (k) os << ";";
      print_labels(os, e.groups[k]);
    }
  } else if (e.head == "comb" || e.head == "ns" || e.head == "pm") {
    for (std::size_t k = 0; k < e.pairs.size(); ++k) {
      if (k) os << ",";
      os << "(";
      print_labels(os, e.pairs[k].first);
      os << ";";
      print_labels(os, e.pairs[k].second);
      os << ")";
    }
  } else if (e.head == "dual") {
    os << print_expr(*e.children.at(0));
  } else if (e.head == "tensor") {
    os << print_expr(*e.children.at(0)) << "," << print_expr(*e.children.at(1));
  } else {  // transform / linear_transform
    os << print_expr(*e.children.at(0)) << " -> " << print_expr(*e.children.at(1));
  }
  os << ")";
  return os.str();
}

BuiltObject build_object(const ObjectExpr& e, int budget) {
  BuiltObject out;
  if (e.head == "state") {
    out.set = state_set(space_of_labels(e.groups.at(0)));
    return out;
  }
  if (e.head == "channel") {
    out.set = channel_set(space_of_labels(e.groups.at(0)), space_of_labels(e.groups.at(1)));
    return out;
  }
  if (e.head == "superchannel") {
    out.set = superchannel_set(space_of_labels(e.groups.at(0)), space_of_labels(e.groups.at(1)),
                               space_of_labels(e.groups.at(2)), space_of_labels(e.groups.at(3)));
    return out;
  }
  if (e.head == "comb") {
    std::vector<Tooth> teeth;
    for (const auto& [in, o] : e.pairs) {
      teeth.push_back({space_of_labels(in), space_of_labels(o)});
    }
    out.set = comb_set(teeth);
    return out;
  }
  if (e.head == "ns" || e.head == "pm") {
    std::vector<std::pair<CompositeSpace, CompositeSpace>> parties;
    for (const auto& [in, o] : e.pairs) {
      parties.emplace_back(space_of_labels(in), space_of_labels(o));
    }
    out.set = e.head == "ns" ? nonsignalling_set(parties) : process_matrix_set(parties);
    return out;
  }
  if (e.head == "dual") {
    BuiltObject inner = build_object(*e.children.at(0), budget);
    out.warnings = inner.warnings;
    out.set = dual_set(as_object_set(inner, "dual"), budget);
    return out;
  }
  if (e.head == "tensor") {
    BuiltObject a = build_object(*e.children.at(0), budget);
    BuiltObject b = build_object(*e.children.at(1), budget);
    out.warnings = a.warnings;
    out.warnings.insert(out.warnings.end(), b.warnings.begin(), b.warnings.end());
    out.set = tensor_sets(as_object_set(a, "tensor"), as_object_set(b, "tensor"), budget);
    return out;
  }
  if (e.head == "transform") {
    BuiltObject a = build_object(*e.children.at(0), budget);
    BuiltObject b = build_object(*e.children.at(1), budget);
    TransformSpec spec =
        build_transform_space(as_object_set(a, "transform"), as_object_set(b, "transform"), budget);
    out.warnings = spec.warnings;
    out.set = spec.result;
    out.transform = std::move(spec);
    return out;
  }
  if (e.head == "linear_transform") {
    BuiltObject a = build_object(*e.children.at(0), budget);
    BuiltObject b = build_object(*e.children.at(1), budget);
    const ObjectSet& sa = as_object_set(a, "linear_transform");
    const ObjectSet& sb = as_object_set(b, "linear_transform");
    AffineConstraintSet r;
    r.name = "linear_transform(" + sa.name + " -> " + sb.name + ")";
    r.space = concat(sa.space, sb.space);
    r.projector = build_transform_space_linear(sa, sb, budget);
    r.require_psd = false;
    out.set = std::move(r);
    return out;
  }
  throw Error("unknown constructor '" + e.head + "'");
}

}  // namespace hoq
