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

#include <doctest.h>

#include "hoq/op_map.hpp"
#include "hoq/sampling.hpp"
#include "hoq/subset_map.hpp"

using namespace hoq;

namespace {

CompositeSpace three_qubits() { return make_space({{"1", 2}, {"2", 2}, {"3", 2}}); }

std::vector<LabelSet> all_subsets(const CompositeSpace& s) {
  const auto labels = s.labels();
  std::vector<LabelSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << labels.size()); ++mask) {
    LabelSet subset;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (mask & (std::size_t{1} << i)) subset.insert(labels[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace

TEST_CASE("single trace-and-replace term matches the operator-level primitive") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 3}});
  Rng rng(17);
  Operator x = random_hermitian(s, rng);
  SubsetMap m = SubsetMap::trace_replace(s, {"b"});
  CHECK(frobenius_distance(m.apply(x), trace_and_replace(x, {"b"})) < 1e-13);
  CHECK(m.coefficient({"b"}) == Rational(1));
  CHECK(m.coefficient({"a"}) == Rational(0));
}

TEST_CASE("composition law: discarding S then T discards their union") {
  CompositeSpace s = three_qubits();
  Rng rng(23);
  Operator x = random_hermitian(s, rng);
  for (const LabelSet& a : all_subsets(s)) {
    for (const LabelSet& b : all_subsets(s)) {
      SubsetMap pa = SubsetMap::trace_replace(s, a);
      SubsetMap pb = SubsetMap::trace_replace(s, b);
      LabelSet u = a;
      u.insert(b.begin(), b.end());
      // Exact in the algebra...
      CHECK(compose(pa, pb) == SubsetMap::trace_replace(s, u));
      // ...and numerically on operators.
      CHECK(frobenius_distance(pa.apply(pb.apply(x)),
                               SubsetMap::trace_replace(s, u).apply(x)) < 1e-12);
    }
  }
}

TEST_CASE("subset maps form a commutative algebra with rational coefficients") {
  CompositeSpace s = three_qubits();
  SubsetMap p(s, {{{}, Rational(1)}, {{"2"}, Rational(-1, 2)}});
  SubsetMap q(s, {{{"3"}, Rational(1, 3)}, {{"2", "3"}, Rational(2)}});
  CHECK(compose(p, q) == compose(q, p));
  CHECK(p.plus(q).minus(q) == p);
  CHECK(p.scaled(Rational(0)).is_zero());
  CHECK(p.coefficient_sum() == Rational(1, 2));
  // Zero-coefficient terms are dropped.
  CHECK(p.minus(p).is_zero());
}

TEST_CASE("every trace-and-replace generator is idempotent, self-adjoint and unital") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 3}});
  for (const LabelSet& sub : {LabelSet{}, LabelSet{"a"}, LabelSet{"a", "b"}}) {
    OpMap m{SubsetMap::trace_replace(s, sub)};
    MapPredicates preds = m.predicates();
    CHECK(preds.is_projector);
    CHECK(preds.is_self_adjoint);
    CHECK(preds.is_unital);
    CHECK(preds.commutes_with_transpose);
  }
}

TEST_CASE("channel kernel has the three standard terms") {
  CompositeSpace s = make_space({{"i", 2}, {"o", 2}});
  SubsetMap p = channel_projector(s, {"i"}, {"o"});
  std::map<LabelSet, Rational> expected{
      {{}, Rational(1)}, {{"o"}, Rational(-1)}, {{"i", "o"}, Rational(1)}};
  CHECK(p.terms() == expected);
  CHECK(compose(p, p) == p);
}

TEST_CASE("transform kernel on two channel kernels reproduces the five-term projector") {
  CompositeSpace in = make_space({{"2", 2}, {"3", 2}});
  CompositeSpace out = make_space({{"1", 2}, {"4", 2}});
  SubsetMap p = transform_projector(channel_projector(in, {"2"}, {"3"}),
                                    channel_projector(out, {"1"}, {"4"}));
  std::map<LabelSet, Rational> expected{{{}, Rational(1)},
                                        {{"4"}, Rational(-1)},
                                        {{"3", "4"}, Rational(1)},
                                        {{"2", "3", "4"}, Rational(-1)},
                                        {{"1", "2", "3", "4"}, Rational(1)}};
  CHECK(p.terms() == expected);
  CHECK(compose(p, p) == p);
}

TEST_CASE("span-only transform kernel drops the trace terms") {
  CompositeSpace in = make_space({{"2", 2}, {"3", 2}});
  CompositeSpace out = make_space({{"1", 2}, {"4", 2}});
  SubsetMap p = linear_transform_projector(channel_projector(in, {"2"}, {"3"}),
                                           channel_projector(out, {"1"}, {"4"}));
  std::map<LabelSet, Rational> expected{{{}, Rational(1)},          {{"4"}, Rational(-1)},
                                        {{"1", "4"}, Rational(1)},  {{"3", "4"}, Rational(1)},
                                        {{"1", "3", "4"}, Rational(-1)},
                                        {{"2", "3", "4"}, Rational(-1)},
                                        {{"1", "2", "3", "4"}, Rational(1)}};
  CHECK(p.terms() == expected);
  CHECK(compose(p, p) == p);
}

TEST_CASE("dual kernel of the channel kernel keeps only the output discard") {
  CompositeSpace s = make_space({{"i", 3}, {"o", 2}});
  SubsetMap d = dual_projector(channel_projector(s, {"i"}, {"o"}));
  std::map<LabelSet, Rational> expected{{{"o"}, Rational(1)}};
  CHECK(d.terms() == expected);
  // Applying the dual construction twice returns the original kernel.
  CHECK(dual_projector(d) == channel_projector(s, {"i"}, {"o"}));
}

TEST_CASE("lifting embeds a kernel into a larger space") {
  CompositeSpace small = make_space({{"a", 2}});
  CompositeSpace big = make_space({{"a", 2}, {"b", 3}});
  SubsetMap m = SubsetMap::trace_replace(small, {"a"});
  SubsetMap lifted = m.lifted(big);
  Rng rng(31);
  Operator x = random_hermitian(big, rng);
  CHECK(frobenius_distance(lifted.apply(x), trace_and_replace(x, {"a"})) < 1e-13);
  CHECK_THROWS_AS(m.lifted(make_space({{"b", 3}})), SpaceMismatch);
}

TEST_CASE("tensoring kernels acts factorwise on product operators") {
  CompositeSpace sa = make_space({{"a", 2}});
  CompositeSpace sb = make_space({{"b", 3}});
  SubsetMap pa = SubsetMap::trace_replace(sa, {"a"});
  SubsetMap pb(sb, {{{}, Rational(1)}, {{"b"}, Rational(-1)}});
  SubsetMap prod = tensor_map(pa, pb);
  Rng rng(37);
  Operator x = random_hermitian(sa, rng);
  Operator y = random_hermitian(sb, rng);
  Operator lhs = prod.apply(tensor(x, y));
  Operator rhs = tensor(pa.apply(x), pb.apply(y));
  CHECK(frobenius_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("subset map JSON round trip is exact") {
  CompositeSpace s = three_qubits();
  SubsetMap p(s, {{{}, Rational(1)},
                  {{"3"}, Rational(-1, 3)},
                  {{"2", "3"}, Rational(7, 2)}});
  CHECK(subset_map_from_json(to_json(p)) == p);
  CHECK_THROWS_AS(subset_map_from_json("{}"), IoError);
}

TEST_CASE("rendering names terms in space order") {
  CompositeSpace s = make_space({{"b", 2}, {"a", 2}});
  SubsetMap p(s, {{{}, Rational(1)}, {{"a", "b"}, Rational(-1, 2)}});
  CHECK(to_string(p) == "1*_{} - 1/2*_{b,a}");
}
