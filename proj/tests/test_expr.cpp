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

#include "hoq/expr.hpp"

using namespace hoq;

namespace {

Rational r(long long n) { return Rational(n); }

const OpMap& projector_of(const SetDescription& s) {
  return std::visit([](const auto& v) -> const OpMap& { return v.projector; }, s);
}

}  // namespace

TEST_CASE("basic expressions parse into the expected shapes") {
  ObjectExpr st = parse_expr("state(x:2, y:3)");
  CHECK(st.head == "state");
  REQUIRE(st.groups.size() == 1);
  CHECK(st.groups[0] == std::vector<LabelDecl>{{"x", 2}, {"y", 3}});

  ObjectExpr ch = parse_expr("channel(i:2; o:2)");
  CHECK(ch.head == "channel");
  REQUIRE(ch.groups.size() == 2);
  CHECK(ch.groups[0] == std::vector<LabelDecl>{{"i", 2}});
  CHECK(ch.groups[1] == std::vector<LabelDecl>{{"o", 2}});

  ObjectExpr sup = parse_expr("superchannel(1:2; 2:2; 3:2; 4:2)");
  CHECK(sup.head == "superchannel");
  CHECK(sup.groups.size() == 4);

  ObjectExpr ns = parse_expr("ns((1:2;2:2),(3:2;4:2))");
  CHECK(ns.head == "ns");
  REQUIRE(ns.pairs.size() == 2);
  CHECK(ns.pairs[1].first == std::vector<LabelDecl>{{"3", 2}});
  CHECK(ns.pairs[1].second == std::vector<LabelDecl>{{"4", 2}});

  ObjectExpr tr = parse_expr("transform(channel(2:2;3:2) -> channel(1:2;4:2))");
  CHECK(tr.head == "transform");
  REQUIRE(tr.children.size() == 2);
  CHECK(tr.children[0]->head == "channel");
  CHECK(tr.children[1]->head == "channel");

  ObjectExpr du = parse_expr("dual(ns((1:2;2:2),(3:2;4:2)))");
  CHECK(du.head == "dual");
  REQUIRE(du.children.size() == 1);
  CHECK(du.children[0]->head == "ns");

  // Empty label groups are meaningful: a channel from nothing prepares.
  ObjectExpr prep = parse_expr("channel(; o:2)");
  CHECK(prep.groups[0].empty());
  REQUIRE(prep.groups[1].size() == 1);

  // Whitespace (including newlines) is free.
  ObjectExpr spaced = parse_expr("  transform (\n  channel( i:2 ; o:2 )\n  ->  state( s:4 )\n)");
  CHECK(spaced.head == "transform");
  CHECK(spaced.children[1]->head == "state");
}

TEST_CASE("printing is canonical and round trips") {
  const std::vector<std::string> corpus{
      "state(x:2)",
      "state()",
      "channel(i:2; o:3)",
      "channel(; o:2)",
      "channel(i:2; )",
      "superchannel(1:2; 2:2; 3:2; 4:2)",
      "comb((;1:2),(2:2;3:2))",
      "comb((1:2;2:2),(3:2;4:2),(5:2;6:2))",
      "ns((1:2;2:2),(3:2;4:2))",
      "pm((1:2;2:2),(3:2;4:2))",
      "dual(channel(i:2; o:2))",
      "dual(ns((1:2;2:2),(3:2;4:2)))",
      "tensor(state(x:2), channel(i:2; o:2))",
      "transform(channel(2:2;3:2) -> channel(1:2;4:2))",
      "transform(superchannel(1:2; 2:2; 3:2; 4:2) -> superchannel(0:2; 5:2; 6:2; 7:2))",
      "linear_transform(channel(1:2;2:2) -> channel(3:2;4:2))",
  };
  for (const std::string& text : corpus) {
    ObjectExpr first = parse_expr(text);
    std::string printed = print_expr(first);
    ObjectExpr second = parse_expr(printed);
    CHECK_MESSAGE(first == second, text, " -> ", printed);
    CHECK(print_expr(second) == printed);
  }
}

TEST_CASE("syntax errors carry the offending position") {
  auto expect_error = [](const std::string& text, int line, int column) {
    try {
      parse_expr(text);
      FAIL_CHECK("no error for: ", text);
    } catch (const SyntaxError& e) {
      CHECK_MESSAGE(e.line == line, text, " -> ", e.what());
      CHECK_MESSAGE(e.column == column, text, " -> ", e.what());
    }
  };

  expect_error("channel(;", 1, 10);               // unclosed group
  expect_error("blorb(x:2)", 1, 1);               // unknown head
  expect_error("state(x)", 1, 8);                 // missing :dim
  expect_error("state(x:)", 1, 9);                // missing integer
  expect_error("state(x:2) trailing", 1, 12);     // junk after the expression
  expect_error("channel(i:2 o:2)", 1, 13);        // missing separator
  expect_error("transform(state(x:2), state(y:2))", 1, 21);  // commas are for tensor
  expect_error("state(x:2\n  , y:)", 2, 7);       // position tracking across lines

  CHECK_THROWS_AS(parse_expr("state(x:0)"), SyntaxError);  // dims are positive
  CHECK_THROWS_AS(parse_expr(""), SyntaxError);
  CHECK_THROWS_AS(parse_expr("dual()"), SyntaxError);
}

TEST_CASE("elaboration dispatches to the catalogue") {
  BuiltObject ch = build_object(parse_expr("channel(i:2; o:3)"));
  const ObjectSet& chs = std::get<ObjectSet>(ch.set);
  CHECK(chs.space.label_set() == std::set<std::string>{"i", "o"});
  CHECK(chs.gamma_value() == r(2));
  CHECK(!ch.transform.has_value());

  BuiltObject sup = build_object(parse_expr("superchannel(1:2; 2:2; 3:2; 4:2)"));
  CHECK(std::get<ObjectSet>(sup.set).gamma_value() == r(4));

  BuiltObject comb = build_object(parse_expr("comb((;1:2),(2:2;3:2))"));
  const ObjectSet& combs = std::get<ObjectSet>(comb.set);
  CHECK(combs.projector.as_subset_map().terms() ==
        std::map<LabelSet, Rational>{{{}, r(1)}, {{"3"}, r(-1)}, {{"2", "3"}, r(1)}});
  CHECK(combs.gamma == GammaExpr::dim("2"));

  BuiltObject ten = build_object(parse_expr("tensor(state(x:2), state(y:3))"));
  const ObjectSet& tens = std::get<ObjectSet>(ten.set);
  CHECK(tens.space.total_dim() == 6);
  CHECK(tens.gamma_value() == r(1));
}

TEST_CASE("elaborated transforms carry the full characterization") {
  BuiltObject tr = build_object(parse_expr("transform(channel(2:2;3:2) -> channel(1:2;4:2))"));
  REQUIRE(tr.transform.has_value());
  CHECK(tr.transform->path == "symbolic");
  const ObjectSet& res = std::get<ObjectSet>(tr.set);
  CHECK(res.gamma_value() == r(4));
  CHECK(res.gamma == GammaExpr::dim("1") * GammaExpr::dim("3"));
  ObjectSet sup = superchannel_set(make_space({{"1", 2}}), make_space({{"2", 2}}),
                                  make_space({{"3", 2}}), make_space({{"4", 2}}));
  CHECK(res.projector.as_subset_map().terms() == sup.projector.as_subset_map().terms());
  CHECK(tr.warnings.empty());
}

TEST_CASE("the dual of the non-signalling set elaborates to process matrices") {
  BuiltObject du = build_object(parse_expr("dual(ns((1:2;2:2),(3:2;4:2)))"));
  const ObjectSet& dus = std::get<ObjectSet>(du.set);
  std::vector<std::pair<CompositeSpace, CompositeSpace>> parties{
      {make_space({{"1", 2}}), make_space({{"2", 2}})},
      {make_space({{"3", 2}}), make_space({{"4", 2}})}};
  ObjectSet pm = process_matrix_set(parties);
  CHECK(dus.projector.as_subset_map().terms() == pm.projector.as_subset_map().terms());
  CHECK(dus.gamma == pm.gamma);

  BuiltObject pmb = build_object(parse_expr("pm((1:2;2:2),(3:2;4:2))"));
  CHECK(std::get<ObjectSet>(pmb.set).projector.as_subset_map().terms() ==
        pm.projector.as_subset_map().terms());
}

TEST_CASE("span-only transforms elaborate without trace or positivity conditions") {
  BuiltObject lin = build_object(parse_expr("linear_transform(channel(1:2;2:2) -> channel(3:2;4:2))"));
  REQUIRE(std::holds_alternative<AffineConstraintSet>(lin.set));
  const AffineConstraintSet& ls = std::get<AffineConstraintSet>(lin.set);
  CHECK(!ls.affine.has_value());
  CHECK(!ls.require_psd);
  CHECK(!lin.transform.has_value());
  CHECK(projector_of(lin.set).as_subset_map().terms() ==
        std::map<LabelSet, Rational>{{{}, r(1)},
                                     {{"4"}, r(-1)},
                                     {{"3", "4"}, r(1)},
                                     {{"2", "4"}, r(1)},
                                     {{"2", "3", "4"}, r(-1)},
                                     {{"1", "2", "4"}, r(-1)},
                                     {{"1", "2", "3", "4"}, r(1)}});

  // A span-only description has no trace value, so it cannot be dualized.
  CHECK_THROWS_AS(build_object(parse_expr("dual(linear_transform(channel(1:2;2:2) -> "
                                          "channel(3:2;4:2)))")),
                  Error);
}

TEST_CASE("labels may collide across subexpressions only when the grammar says so") {
  CHECK_THROWS_AS(build_object(parse_expr("tensor(state(x:2), state(x:2))")), LabelCollision);
  CHECK_THROWS_AS(build_object(parse_expr("channel(a:2; a:2)")), LabelCollision);
}
