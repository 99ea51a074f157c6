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

#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hoq/common.hpp"
#include "hoq/space.hpp"

namespace hoq {

/// A trace value kept symbolically as  coeff * prod_l dim(l)^exp(l)  and
/// evaluated lazily against a space's dimensions. Exponents may be negative
/// (duals divide); zero coefficient clears the product.
class GammaExpr {
 public:
  GammaExpr() : coeff_(1) {}
  explicit GammaExpr(Rational coeff) : coeff_(coeff) { normalize(); }

  static GammaExpr zero() { return GammaExpr(Rational(0)); }
  static GammaExpr one() { return GammaExpr(Rational(1)); }
  static GammaExpr dim(const std::string& label) {
    GammaExpr g;
    g.exps_[label] = 1;
    return g;
  }
  static GammaExpr dims(const std::set<std::string>& labels) {
    GammaExpr g;
    for (const auto& l : labels) g.exps_[l] = 1;
    return g;
  }

  const Rational& coeff() const { return coeff_; }
  const std::map<std::string, int>& exponents() const { return exps_; }
  bool is_zero() const { return coeff_ == Rational(0); }

  GammaExpr operator*(const GammaExpr& o) const {
    GammaExpr g;
    g.coeff_ = coeff_ * o.coeff_;
    g.exps_ = exps_;
    for (const auto& [l, e] : o.exps_) g.exps_[l] += e;
    g.normalize();
    return g;
  }

  GammaExpr operator/(const GammaExpr& o) const {
    if (o.is_zero()) throw ZeroGamma("division by a zero gamma");
    GammaExpr g;
    g.coeff_ = coeff_ / o.coeff_;
    g.exps_ = exps_;
    for (const auto& [l, e] : o.exps_) g.exps_[l] -= e;
    g.normalize();
    return g;
  }

  /// Drops factors whose label has dimension 1 in `space` (they contribute
  /// nothing) so that symbolic comparison is insensitive to scalar factors.
  GammaExpr reduced(const CompositeSpace& space) const {
    GammaExpr g = *this;
    for (auto it = g.exps_.begin(); it != g.exps_.end();) {
      if (space.contains(it->first) && space.dim_of(it->first) == 1) {
        it = g.exps_.erase(it);
      } else {
        ++it;
      }
    }
    return g;
  }

  Rational evaluate(const CompositeSpace& space) const {
    Rational v = coeff_;
    for (const auto& [l, e] : exps_) {
      const long long d = space.dim_of(l);
      for (int k = 0; k < e; ++k) v *= Rational(d);
      for (int k = 0; k > e; --k) v /= Rational(d);
    }
    return v;
  }

  double evaluate_double(const CompositeSpace& space) const {
    return boost::rational_cast<double>(evaluate(space));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool printed = false;
    if (coeff_ != Rational(1) || exps_.empty()) {
      os << format_rational(coeff_);
      printed = true;
    }
    for (const auto& [l, e] : exps_) {
      if (printed) os << "*";
      os << "d(" << l << ")";
      if (e != 1) os << "^" << e;
      printed = true;
    }
    return os.str();
  }

  friend bool operator==(const GammaExpr&, const GammaExpr&) = default;

 private:
  void normalize() {
    if (coeff_ == Rational(0)) {
      exps_.clear();
      return;
    }
    for (auto it = exps_.begin(); it != exps_.end();) {
      if (it->second == 0) {
        it = exps_.erase(it);
      } else {
        ++it;
      }
    }
  }

  Rational coeff_;
  std::map<std::string, int> exps_;
};

}  // namespace hoq
