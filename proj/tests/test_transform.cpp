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

#include "hoq/sampling.hpp"
#include "hoq/transform.hpp"

using namespace hoq;

namespace {

CompositeSpace qubit(const std::string& label) { return make_space({{label, 2}}); }

Rational r(long long n) { return Rational(n); }

const OpMap& projector_of(const SetDescription& s) {
  return std::visit([](const auto& v) -> const OpMap& { return v.projector; }, s);
}

std::map<LabelSet, Rational> terms_of(const SetDescription& s) {
  return projector_of(s).as_subset_map().terms();
}

// Rank-one projector onto a single off-diagonal matrix unit; a legitimate
// linear projector that is neither unital nor transpose-commuting.
OpMap off_diagonal_projector(const CompositeSpace& s, long long m, long long n) {
  return OpMap{supermap_from_function(s, s, [&, m, n](const Operator& x) {
    Matrix out = Matrix::Zero(s.total_dim(), s.total_dim());
    out(m, n) = x.matrix(m, n);
    return Operator(s, std::move(out));
  })};
}

ObjectSet off_diagonal_set(const std::string& label) {
  ObjectSet s;
  s.name = "offdiag(" + label + ")";
  s.space = qubit(label);
  s.projector = off_diagonal_projector(s.space, 0, 1);
  s.gamma = GammaExpr::zero();
  s.require_psd = false;
  return s;
}

}  // namespace

TEST_CASE("maps sending channels into channels recover the superchannel set") {
  TransformSpec spec =
      build_transform_space(channel_set(qubit("2"), qubit("3")), channel_set(qubit("1"), qubit("4")));
  CHECK(spec.path == "symbolic");
  CHECK(spec.warnings.empty());
  REQUIRE(std::holds_alternative<ObjectSet>(spec.result));
  const ObjectSet& res = std::get<ObjectSet>(spec.result);

  ObjectSet sup = superchannel_set(qubit("1"), qubit("2"), qubit("3"), qubit("4"));
  CHECK(res.projector.as_subset_map().terms() == sup.projector.as_subset_map().terms());
  CHECK(res.gamma == sup.gamma);
  CHECK(res.gamma == GammaExpr::dim("1") * GammaExpr::dim("3"));
  CHECK(res.gamma_value() == r(4));
  CHECK(res.require_psd);
  CHECK(res.wires.inputs == std::set<std::string>{"1", "3"});
  CHECK(res.wires.outputs == std::set<std::string>{"2", "4"});
  CHECK(spec.rescale == GammaExpr::dim("1") / GammaExpr::dim("2"));
}

TEST_CASE("maps sending superchannels into superchannels: the 17-term kernel") {
  ObjectSet s_in = superchannel_set(qubit("1"), qubit("2"), qubit("3"), qubit("4"));
  ObjectSet s_out = superchannel_set(qubit("0"), qubit("5"), qubit("6"), qubit("7"));
  TransformSpec spec = build_transform_space(s_in, s_out);
  CHECK(spec.path == "symbolic");
  REQUIRE(std::holds_alternative<ObjectSet>(spec.result));
  const ObjectSet& res = std::get<ObjectSet>(spec.result);

  std::map<LabelSet, Rational> expected{
      {{}, r(1)},
      {{"7"}, r(-1)},
      {{"4", "7"}, r(1)},
      {{"6", "7"}, r(1)},
      {{"3", "4", "7"}, r(-1)},
      {{"4", "6", "7"}, r(-1)},
      {{"5", "6", "7"}, r(-1)},
      {{"2", "3", "4", "7"}, r(1)},
      {{"3", "4", "6", "7"}, r(1)},
      {{"4", "5", "6", "7"}, r(1)},
      {{"1", "2", "3", "4", "7"}, r(-1)},
      {{"2", "3", "4", "6", "7"}, r(-1)},
      {{"3", "4", "5", "6", "7"}, r(-1)},
      {{"1", "2", "3", "4", "6", "7"}, r(1)},
      {{"2", "3", "4", "5", "6", "7"}, r(1)},
      {{"1", "2", "3", "4", "5", "6", "7"}, r(-1)},
      {{"0", "1", "2", "3", "4", "5", "6", "7"}, r(1)}};
  CHECK(res.projector.as_subset_map().terms() == expected);
  CHECK(res.gamma == GammaExpr::dim("0") * GammaExpr::dim("2") * GammaExpr::dim("4") *
                         GammaExpr::dim("6"));
  CHECK(res.gamma_value() == r(16));

  // The kernel really is an idempotent, self-adjoint, unital subset map.
  MapPredicates preds = res.projector.predicates();
  CHECK(preds.nice());

  // A sampled member validates.
  CHECK(validate(random_member(res, 11), res).pass());
}

TEST_CASE("maps sending channels into the dual of a channel set give process matrices") {
  ObjectSet ch12 = channel_set(qubit("1"), qubit("2"));
  SetDescription d = dual_set(channel_set(qubit("3"), qubit("4")));
  REQUIRE(std::holds_alternative<ObjectSet>(d));
  TransformSpec spec = build_transform_space(ch12, std::get<ObjectSet>(d));
  REQUIRE(std::holds_alternative<ObjectSet>(spec.result));
  const ObjectSet& res = std::get<ObjectSet>(spec.result);

  ObjectSet pm = process_matrix_set({{qubit("1"), qubit("2")}, {qubit("3"), qubit("4")}});
  CHECK(res.projector.as_subset_map().terms() == pm.projector.as_subset_map().terms());
  CHECK(res.gamma == pm.gamma);
  CHECK(res.gamma == GammaExpr::dim("2") * GammaExpr::dim("4"));
}

TEST_CASE("span-only characterizations: three-term kernels") {
  // Channels into channels, superchannel wiring.
  OpMap k1 = build_transform_space_linear(channel_set(qubit("2"), qubit("3")),
                                          channel_set(qubit("1"), qubit("4")));
  CHECK(k1.as_subset_map().terms() == std::map<LabelSet, Rational>{{{}, r(1)},
                                                                   {{"4"}, r(-1)},
                                                                   {{"1", "4"}, r(1)},
                                                                   {{"3", "4"}, r(1)},
                                                                   {{"1", "3", "4"}, r(-1)},
                                                                   {{"2", "3", "4"}, r(-1)},
                                                                   {{"1", "2", "3", "4"}, r(1)}});

  // Channels into the one-discard set (dual of a channel set).
  SetDescription d = dual_set(channel_set(qubit("3"), qubit("4")));
  OpMap k2 =
      build_transform_space_linear(channel_set(qubit("1"), qubit("2")), std::get<ObjectSet>(d));
  CHECK(k2.as_subset_map().terms() == std::map<LabelSet, Rational>{{{"2"}, r(1)},
                                                                   {{"4"}, r(1)},
                                                                   {{"2", "4"}, r(-1)},
                                                                   {{"1", "2"}, r(-1)},
                                                                   {{"1", "2", "4"}, r(1)}});

  // Non-signalling channels into scalars: every linear map qualifies.
  ObjectSet ns = nonsignalling_set({{qubit("1"), qubit("2")}, {qubit("3"), qubit("4")}});
  ObjectSet scalar = state_set(make_space({}));
  OpMap k3 = build_transform_space_linear(ns, scalar);
  CHECK(k3.as_subset_map() == SubsetMap::identity(ns.space));

  // The hypothesis check rejects an oblique endpoint.
  CHECK_THROWS_AS(build_transform_space_linear(off_diagonal_set("x"), state_set(qubit("y"))),
                  HypothesisViolated);
}

TEST_CASE("dense construction matches the symbolic one") {
  ObjectSet a = channel_set(qubit("1"), qubit("2"));
  ObjectSet b = channel_set(qubit("3"), qubit("4"));
  TransformSpec sym = build_transform_space(a, b);
  REQUIRE(sym.path == "symbolic");

  ObjectSet ad = a;
  ad.projector = OpMap(a.projector.to_dense(kDefaultDenseBudget));
  ObjectSet bd = b;
  bd.projector = OpMap(b.projector.to_dense(kDefaultDenseBudget));
  TransformSpec den = build_transform_space(ad, bd);
  CHECK(den.path == "dense");

  const OpMap& ps = projector_of(sym.result);
  const OpMap& pd = projector_of(den.result);
  Rng rng(5);
  for (int i = 0; i < 5; ++i) {
    Operator h = random_hermitian(ps.in_space(), rng);
    CHECK(frobenius_distance(ps.apply(h), pd.apply(h)) < 1e-12);
  }
  CHECK(std::get<ObjectSet>(den.result).gamma == std::get<ObjectSet>(sym.result).gamma);

  // The dense route respects the working-size budget.
  CHECK_THROWS_AS(build_transform_space(ad, bd, 8), BudgetExceeded);
}

TEST_CASE("general affine construction agrees with the subset-map one") {
  ObjectSet a = channel_set(qubit("1"), qubit("2"));
  ObjectSet b = channel_set(qubit("3"), qubit("4"));
  TransformSpec sym = build_transform_space(a, b);
  const ObjectSet& sres = std::get<ObjectSet>(sym.result);

  TransformSpec gen = build_transform_space_general(a, b);
  CHECK(gen.path == "general");
  REQUIRE(std::holds_alternative<AffineConstraintSet>(gen.result));
  const AffineConstraintSet& gres = std::get<AffineConstraintSet>(gen.result);
  REQUIRE(gres.affine.has_value());
  CHECK(gres.affine->trace_out_first == LabelSet{"3", "4"});

  // Every member of the subset-map characterization satisfies the affine one.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Operator w = random_member(sres, seed);
    REQUIRE(validate(w, sres).pass());
    ValidationReport rep = validate(w, gres);
    CHECK(rep.projector_residual < 1e-10);
    CHECK(rep.trace_residual < 1e-10);
    CHECK(rep.pass());
  }

  // Perturbing outside the three-term span breaks both characterizations.
  Rng rng(9);
  Operator w = random_member(sres, 1);
  Operator h = random_hermitian(sres.space, rng);
  Operator dev = h;
  dev.matrix -= gres.projector.apply(h).matrix;
  REQUIRE(dev.matrix.norm() > 1e-6);
  dev.matrix *= 0.35 * w.matrix.norm() / dev.matrix.norm();
  Operator bad = w;
  bad.matrix += dev.matrix;
  CHECK(!validate(bad, sres).pass());
  CHECK(!validate(bad, gres).pass());

  // The general route needs a nonzero input trace value.
  CHECK_THROWS_AS(build_transform_space_general(off_diagonal_set("x"), a), ZeroGamma);
}

TEST_CASE("trace-value corner cases") {
  ObjectSet st = state_set(qubit("a"));

  // Zero in, nonzero out: impossible.
  CHECK_THROWS_AS(build_transform_space(off_diagonal_set("x"), st), ZeroGamma);

  // Nonzero in, zero out: allowed, with a warning and a zero trace value.
  ObjectSet zero_state = state_set(qubit("b"));
  zero_state.gamma = GammaExpr::zero();
  TransformSpec down = build_transform_space(st, zero_state);
  CHECK(down.path == "symbolic");
  REQUIRE(down.warnings.size() == 1);
  CHECK(down.warnings[0].find("output trace value is 0") != std::string::npos);
  CHECK(std::get<ObjectSet>(down.result).gamma.is_zero());
  CHECK(down.rescale.is_zero());

  // Zero on both sides: the span-to-span characterization, flagged twice.
  TransformSpec flat = build_transform_space(off_diagonal_set("x"), off_diagonal_set("y"));
  CHECK(flat.path == "traceless");
  CHECK(flat.warnings.size() == 2);
  REQUIRE(std::holds_alternative<AffineConstraintSet>(flat.result));
  const AffineConstraintSet& fres = std::get<AffineConstraintSet>(flat.result);
  CHECK(!fres.affine.has_value());
  CHECK(!fres.require_psd);
  CHECK(fres.projector.predicates().is_projector);
}

TEST_CASE("traceless image projector has the expected rank") {
  // Full matrix algebra on a qubit: traceless part has dimension 3.
  ObjectSet st = state_set(qubit("a"));
  ImageBasis full = image_basis(build_traceless_projector(st));
  CHECK(full.ops.size() == 3);
  for (const Operator& o : full.ops) CHECK(std::abs(trace(o)) < 1e-9);

  // Channel Choi span on two qubits: 13-dimensional image, 12 after removing
  // the direction carrying trace.
  ObjectSet ch = channel_set(qubit("i"), qubit("o"));
  ImageBasis chb = image_basis(build_traceless_projector(ch));
  CHECK(chb.ops.size() == 12);
}

TEST_CASE("map-version probing accepts members and rejects outsiders") {
  ObjectSet a = channel_set(qubit("1"), qubit("2"));
  ObjectSet b = channel_set(qubit("3"), qubit("4"));
  TransformSpec spec = build_transform_space(a, b);
  const ObjectSet& res = std::get<ObjectSet>(spec.result);

  Operator w = random_member(res, 3);
  ChoiMatrix t(a.space, b.space, w);
  MapCheckReport rep = check_map_version(t, a, b);
  CHECK(rep.deterministic);
  CHECK(rep.probes == 16);
  CHECK(rep.pass(1e-8));

  // Add a deviation outside the channel span (a nonuniform marginal on wire 3)
  // triggered by the probe's trace; the projector residual must light up.
  Matrix dev = Matrix::Zero(4, 4);
  dev(0, 0) = dev(1, 1) = 1.0;
  dev(2, 2) = dev(3, 3) = -1.0;  // sigma_z on wire 3, identity on wire 4
  ChoiMatrix broken = choi_of_map(
      [&](const Operator& x) {
        Operator y = apply_choi(t, x);
        y.matrix += trace(x) * dev;
        return y;
      },
      a.space, b.space);
  MapCheckReport bad = check_map_version(broken, a, b);
  CHECK(bad.projector_residual > 0.5);
  CHECK(!bad.pass(1e-8));

  // Wrong wires are refused outright.
  ChoiMatrix mislabeled(qubit("9"), b.space, Operator(concat(qubit("9"), b.space),
                                                      w.matrix.topLeftCorner(8, 8).eval()));
  CHECK_THROWS_AS(check_map_version(mislabeled, a, b), SpaceMismatch);
  CHECK_THROWS_AS(check_map_version(t, off_diagonal_set("1"), b), ZeroGamma);
}

TEST_CASE("map-version probing samples when the input space is large") {
  ObjectSet a = channel_set(make_space({{"1", 3}}), make_space({{"2", 3}}));
  ObjectSet b = channel_set(make_space({{"3", 3}}), make_space({{"4", 3}}));
  TransformSpec spec = build_transform_space(a, b);
  const ObjectSet& res = std::get<ObjectSet>(spec.result);

  Operator w = random_member(res, 4);
  ChoiMatrix t(a.space, b.space, w);
  MapCheckReport rep = check_map_version(t, a, b, 12, 99);
  CHECK(!rep.deterministic);
  CHECK(rep.probes == 12);
  CHECK(rep.pass(1e-8));

  // Same seed, same residuals.
  MapCheckReport again = check_map_version(t, a, b, 12, 99);
  CHECK(again.projector_residual == rep.projector_residual);
  CHECK(again.trace_residual == rep.trace_residual);
}

TEST_CASE("transform bundles survive the JSON round trip") {
  TransformSpec sym =
      build_transform_space(channel_set(qubit("2"), qubit("3")), channel_set(qubit("1"), qubit("4")));
  TransformSpec sym2 = transform_from_json(to_json(sym));
  CHECK(sym2.path == sym.path);
  CHECK(sym2.warnings == sym.warnings);
  CHECK(sym2.rescale == sym.rescale);
  CHECK(terms_of(sym2.result) == terms_of(sym.result));
  CHECK(std::get<ObjectSet>(sym2.result).gamma == std::get<ObjectSet>(sym.result).gamma);
  CHECK(std::get<ObjectSet>(sym2.result).space == std::get<ObjectSet>(sym.result).space);
  CHECK(std::get<ObjectSet>(sym2.result).wires.inputs ==
        std::get<ObjectSet>(sym.result).wires.inputs);

  TransformSpec gen = build_transform_space_general(channel_set(qubit("1"), qubit("2")),
                                                    channel_set(qubit("3"), qubit("4")));
  TransformSpec gen2 = transform_from_json(to_json(gen));
  CHECK(gen2.path == "general");
  const AffineConstraintSet& g1 = std::get<AffineConstraintSet>(gen.result);
  const AffineConstraintSet& g2 = std::get<AffineConstraintSet>(gen2.result);
  REQUIRE(g2.affine.has_value());
  CHECK(g2.affine->trace_out_first == g1.affine->trace_out_first);
  CHECK(g2.affine->map.as_subset_map() == g1.affine->map.as_subset_map());
  CHECK((g2.affine->rhs.matrix - g1.affine->rhs.matrix).norm() < 1e-15);
  CHECK(g2.projector.as_subset_map() == g1.projector.as_subset_map());

  CHECK_THROWS_AS(transform_from_json("not json"), IoError);
  CHECK_THROWS_AS(transform_from_json("{\"kind\":\"object_set\"}"), IoError);
}
