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

#include "hoq/transform.hpp"

#include <json.hpp>

#include "hoq/sampling.hpp"

namespace hoq {

namespace {

std::string transform_name(const std::string& a, const std::string& b) {
  return "transform(" + a + " -> " + b + ")";
}

// The characterized maps read the input object's outgoing wires and feed its
// incoming ones, so wire roles swap on the input side.
WireRoles combined_wires(const ObjectSet& s_in, const ObjectSet& s_out) {
  WireRoles w;
  w.inputs = s_in.wires.outputs;
  w.inputs.insert(s_out.wires.inputs.begin(), s_out.wires.inputs.end());
  w.outputs = s_in.wires.inputs;
  w.outputs.insert(s_out.wires.outputs.begin(), s_out.wires.outputs.end());
  return w;
}

// 1 - A + A∘B on `joint`, where A is the (transpose-twirled, when dense)
// input projector and B the output projector, both lifted. Symbolic operands
// stay symbolic: transpose-twirling fixes every SubsetMap.
OpMap general_three_term(const OpMap& p_in, const OpMap& p_out, const CompositeSpace& joint,
                         int budget) {
  if (p_in.symbolic() && p_out.symbolic()) {
    return OpMap(
        linear_transform_projector(p_in.as_subset_map(), p_out.as_subset_map()).lifted(joint));
  }
  DenseSuperMap a = lift_to(tau_twirl(p_in, budget), joint, budget).to_dense(budget);
  DenseSuperMap b = lift_to(p_out, joint, budget).to_dense(budget);
  return OpMap(add(subtract(identity_supermap(joint), a), compose(a, b)));
}

OpMap five_term_dense(const OpMap& p_in, const OpMap& p_out, const CompositeSpace& joint,
                      const LabelSet& out_labels, int budget) {
  DenseSuperMap pi = lift_to(p_in, joint, budget).to_dense(budget);
  DenseSuperMap po = lift_to(p_out, joint, budget).to_dense(budget);
  DenseSuperMap tr_out = OpMap(SubsetMap::trace_replace(joint, out_labels)).to_dense(budget);
  DenseSuperMap tr_all =
      OpMap(SubsetMap::trace_replace(joint, joint.label_set())).to_dense(budget);
  DenseSuperMap m = identity_supermap(joint);
  m = subtract(m, pi);
  m = add(m, compose(pi, po));
  m = subtract(m, compose(pi, tr_out));
  m = add(m, tr_all);
  return OpMap(std::move(m));
}

TransformSpec traceless_spec(const ObjectSet& s_in, const ObjectSet& s_out,
                             const CompositeSpace& joint, int budget) {
  TransformSpec spec;
  spec.s_in = s_in;
  spec.s_out = s_out;
  spec.rescale = GammaExpr::zero();
  spec.path = "traceless";
  spec.warnings.push_back(
      "both trace values are 0: the trace-rescaling factor is unconstrained");
  spec.warnings.push_back(
      "only the zero operator is both traceless and positive semidefinite; with "
      "positivity enforced the endpoint sets collapse to {0}");
  OpMap pi_t = build_traceless_projector(s_in, 1e-7, budget);
  OpMap po_t = build_traceless_projector(s_out, 1e-7, budget);
  AffineConstraintSet r;
  r.name = transform_name(s_in.name, s_out.name);
  r.space = joint;
  r.projector = general_three_term(pi_t, po_t, joint, budget);
  r.require_psd = false;
  spec.result = r;
  return spec;
}

}  // namespace

TransformSpec build_transform_space(const ObjectSet& s_in, const ObjectSet& s_out, int budget) {
  CompositeSpace joint = concat(s_in.space, s_out.space);
  if (s_in.gamma.is_zero()) {
    if (!s_out.gamma.is_zero()) {
      throw ZeroGamma(
          "input set has trace value 0, so every image under a linear map has trace 0; an "
          "output trace value of " +
          s_out.gamma.to_string() + " is unreachable");
    }
    return traceless_spec(s_in, s_out, joint, budget);
  }

  TransformSpec spec;
  spec.s_in = s_in;
  spec.s_out = s_out;
  spec.rescale = s_out.gamma / s_in.gamma;
  if (s_out.gamma.is_zero()) {
    spec.warnings.push_back(
        "output trace value is 0: the only positive member of the output set is the zero "
        "operator; the characterized maps send every member trace to 0");
  }

  MapPredicates pred_in = s_in.projector.predicates();
  MapPredicates pred_out = s_out.projector.predicates();
  if (pred_in.nice() && pred_out.nice()) {
    ObjectSet r;
    r.name = transform_name(s_in.name, s_out.name);
    r.space = joint;
    if (s_in.projector.symbolic() && s_out.projector.symbolic()) {
      r.projector = OpMap(
          transform_projector(s_in.projector.as_subset_map(), s_out.projector.as_subset_map())
              .lifted(joint));
      spec.path = "symbolic";
    } else {
      r.projector =
          five_term_dense(s_in.projector, s_out.projector, joint, s_out.space.label_set(), budget);
      spec.path = "dense";
    }
    r.gamma = spec.rescale * GammaExpr::dims(s_in.space.label_set());
    r.require_psd = true;
    r.wires = combined_wires(s_in, s_out);
    spec.result = std::move(r);
    return spec;
  }

  TransformSpec general = build_transform_space_general(s_in, s_out, budget);
  general.warnings.insert(general.warnings.begin(), spec.warnings.begin(), spec.warnings.end());
  general.warnings.push_back(
      "an endpoint projector is not a self-adjoint unital projector commuting with "
      "transposition; the general affine construction was used");
  return general;
}

OpMap build_transform_space_linear(const ObjectSet& s_in, const ObjectSet& s_out, int budget) {
  MapPredicates pred_in = s_in.projector.predicates();
  MapPredicates pred_out = s_out.projector.predicates();
  if (!pred_in.nice() || !pred_out.nice()) {
    throw HypothesisViolated(
        "the three-term span characterization needs self-adjoint, unital, "
        "transpose-commuting projectors on both endpoints");
  }
  CompositeSpace joint = concat(s_in.space, s_out.space);
  if (s_in.projector.symbolic() && s_out.projector.symbolic()) {
    return OpMap(
        linear_transform_projector(s_in.projector.as_subset_map(), s_out.projector.as_subset_map())
            .lifted(joint));
  }
  DenseSuperMap a = lift_to(s_in.projector, joint, budget).to_dense(budget);
  DenseSuperMap b = lift_to(s_out.projector, joint, budget).to_dense(budget);
  return OpMap(add(subtract(identity_supermap(joint), a), compose(a, b)));
}

TransformSpec build_transform_space_general(const ObjectSet& s_in, const ObjectSet& s_out,
                                            int budget) {
  if (s_in.gamma.is_zero()) {
    throw ZeroGamma(
        "the general affine construction needs a nonzero input trace value; use the traceless "
        "construction instead");
  }
  CompositeSpace joint = concat(s_in.space, s_out.space);
  TransformSpec spec;
  spec.s_in = s_in;
  spec.s_out = s_out;
  spec.rescale = s_out.gamma / s_in.gamma;
  spec.path = "general";

  AffineConstraintSet r;
  r.name = transform_name(s_in.name, s_out.name);
  r.space = joint;
  r.projector = general_three_term(s_in.projector, s_out.projector, joint, budget);

  AffineEquation eq;
  eq.trace_out_first = s_out.space.label_set();
  OpMap ptau = tau_twirl(s_in.projector, budget);
  eq.map = ptau;
  Operator rhs = ptau.apply(identity_operator(s_in.space));
  rhs.matrix *= boost::rational_cast<double>(spec.rescale.evaluate(joint));
  eq.rhs = std::move(rhs);
  r.affine = std::move(eq);
  r.require_psd = false;

  spec.result = std::move(r);
  return spec;
}

OpMap build_traceless_projector(const ObjectSet& s, double tol, int budget) {
  ImageBasis basis = image_basis(s.projector, tol, budget);
  const CompositeSpace& space = s.space;
  const long long d2 = space.total_dim() * space.total_dim();
  const long long rank = static_cast<long long>(basis.ops.size());
  Matrix q(d2, rank);
  Vector t(rank);
  for (long long k = 0; k < rank; ++k) {
    q.col(k) = vec(basis.ops[static_cast<std::size_t>(k)]);
    t(k) = trace(basis.ops[static_cast<std::size_t>(k)]);
  }
  // Orthogonal projector onto the image, with the direction carrying nonzero
  // trace removed.
  Matrix core = Matrix::Identity(rank, rank);
  const double tn = t.norm();
  if (tn > 1e-12) core -= (t * t.adjoint()) / (tn * tn);
  Matrix p = q * core * q.adjoint();
  return OpMap(DenseSuperMap(space, space, std::move(p)));
}

MapCheckReport check_map_version(const ChoiMatrix& t, const ObjectSet& s_in,
                                 const ObjectSet& s_out, int n_samples,
                                 unsigned long long seed) {
  if (s_in.gamma.is_zero()) {
    throw ZeroGamma("map-version probing needs a nonzero input trace value");
  }
  if (t.in_space.label_set() != s_in.space.label_set()) {
    throw SpaceMismatch("candidate input labels do not match the input set");
  }
  if (t.out_space.label_set() != s_out.space.label_set()) {
    throw SpaceMismatch("candidate output labels do not match the output set");
  }
  const Rational ratio = s_out.gamma.evaluate(s_out.space) / s_in.gamma_value();
  const double r = boost::rational_cast<double>(ratio);

  MapCheckReport rep;
  auto probe = [&](const Operator& x) {
    Operator y = s_in.projector.apply(x);
    Operator z = apply_choi(t, y);
    Operator pz = s_out.projector.apply(z);
    rep.projector_residual = std::max(rep.projector_residual, frobenius_distance(pz, z));
    rep.trace_residual = std::max(rep.trace_residual, std::abs(trace(z) - r * trace(y)));
    ++rep.probes;
  };

  const long long d = s_in.space.total_dim();
  if (d <= kExhaustiveProbeDim) {
    rep.deterministic = true;
    for (long long j = 0; j < d; ++j) {
      for (long long k = 0; k < d; ++k) {
        probe(basis_operator(s_in.space, j, k));
      }
    }
  } else {
    Rng rng(seed);
    for (int i = 0; i < n_samples; ++i) {
      probe(random_hermitian(s_in.space, rng));
    }
  }
  return rep;
}

// --- JSON ------------------------------------------------------------------

namespace {

nlohmann::json labels_json(const CompositeSpace& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& sub : s.subsystems()) {
    out.push_back(nlohmann::json::array({sub.label, sub.dim}));
  }
  return out;
}

CompositeSpace labels_from_json(const nlohmann::json& j) {
  std::vector<std::pair<std::string, long long>> factors;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2) throw IoError("each label must be a [name, dim] pair");
    factors.emplace_back(l[0].get<std::string>(), l[1].get<long long>());
  }
  return make_space(factors);
}

nlohmann::json gamma_json(const GammaExpr& g) {
  nlohmann::json j;
  j["num"] = g.coeff().numerator();
  j["den"] = g.coeff().denominator();
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [l, e] : g.exponents()) dims[l] = e;
  j["dims"] = std::move(dims);
  return j;
}

GammaExpr gamma_from_json(const nlohmann::json& j) {
  GammaExpr g{Rational(j.at("num").get<long long>(), j.at("den").get<long long>())};
  for (const auto& [l, e] : j.at("dims").items()) {
    const int exp = e.get<int>();
    GammaExpr d = GammaExpr::dim(l);
    for (int k = 0; k < exp; ++k) g = g * d;
    for (int k = 0; k > exp; --k) g = g / d;
  }
  return g;
}

nlohmann::json stringset_json(const std::set<std::string>& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& l : s) out.push_back(l);
  return out;
}

std::set<std::string> stringset_from_json(const nlohmann::json& j) {
  std::set<std::string> out;
  for (const auto& l : j) out.insert(l.get<std::string>());
  return out;
}

nlohmann::json object_set_json(const ObjectSet& s) {
  nlohmann::json j;
  j["kind"] = "object_set";
  j["name"] = s.name;
  j["labels"] = labels_json(s.space);
  j["projector"] = nlohmann::json::parse(to_json(s.projector));
  j["gamma"] = gamma_json(s.gamma);
  j["require_psd"] = s.require_psd;
  j["wires"] = {{"inputs", stringset_json(s.wires.inputs)},
                {"outputs", stringset_json(s.wires.outputs)}};
  return j;
}

ObjectSet object_set_from_json(const nlohmann::json& j) {
  ObjectSet s;
  s.name = j.at("name").get<std::string>();
  s.space = labels_from_json(j.at("labels"));
  s.projector = map_from_json(j.at("projector").dump());
  s.gamma = gamma_from_json(j.at("gamma"));
  s.require_psd = j.at("require_psd").get<bool>();
  if (j.contains("wires")) {
    s.wires.inputs = stringset_from_json(j["wires"].at("inputs"));
    s.wires.outputs = stringset_from_json(j["wires"].at("outputs"));
  }
  return s;
}

nlohmann::json affine_set_json(const AffineConstraintSet& s) {
  nlohmann::json j;
  j["kind"] = "affine_set";
  j["name"] = s.name;
  j["labels"] = labels_json(s.space);
  j["projector"] = nlohmann::json::parse(to_json(s.projector));
  j["require_psd"] = s.require_psd;
  if (s.affine) {
    nlohmann::json eq;
    eq["trace_out_first"] = stringset_json(s.affine->trace_out_first);
    eq["map"] = nlohmann::json::parse(to_json(s.affine->map));
    eq["rhs"] = nlohmann::json::parse(to_json(s.affine->rhs));
    j["affine_equation"] = std::move(eq);
  }
  return j;
}

AffineConstraintSet affine_set_from_json(const nlohmann::json& j) {
  AffineConstraintSet s;
  s.name = j.at("name").get<std::string>();
  s.space = labels_from_json(j.at("labels"));
  s.projector = map_from_json(j.at("projector").dump());
  s.require_psd = j.at("require_psd").get<bool>();
  if (j.contains("affine_equation")) {
    const auto& eq = j["affine_equation"];
    AffineEquation a;
    a.trace_out_first = stringset_from_json(eq.at("trace_out_first"));
    a.map = map_from_json(eq.at("map").dump());
    a.rhs = operator_from_json(eq.at("rhs").dump());
    s.affine = std::move(a);
  }
  return s;
}

nlohmann::json set_json(const SetDescription& s) {
  if (std::holds_alternative<ObjectSet>(s)) return object_set_json(std::get<ObjectSet>(s));
  return affine_set_json(std::get<AffineConstraintSet>(s));
}

SetDescription set_from_parsed(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw IoError("set JSON must carry a 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "object_set") return object_set_from_json(j);
  if (kind == "affine_set") return affine_set_from_json(j);
  throw IoError("unknown set kind '" + kind + "'");
}

}  // namespace

std::string to_json(const SetDescription& s) { return set_json(s).dump(); }

SetDescription set_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad set JSON: ") + e.what());
  }
  return set_from_parsed(j);
}

std::string to_json(const TransformSpec& spec) {
  nlohmann::json j;
  j["kind"] = "transform";
  j["path"] = spec.path;
  j["warnings"] = spec.warnings;
  j["rescale"] = gamma_json(spec.rescale);
  j["input_set"] = object_set_json(spec.s_in);
  j["output_set"] = object_set_json(spec.s_out);
  j["result"] = set_json(spec.result);
  return j.dump();
}

TransformSpec transform_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad transform JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("kind", "") != "transform") {
    throw IoError("expected a transform JSON bundle");
  }
  TransformSpec spec;
  spec.path = j.at("path").get<std::string>();
  spec.warnings = j.at("warnings").get<std::vector<std::string>>();
  spec.rescale = gamma_from_json(j.at("rescale"));
  spec.s_in = object_set_from_json(j.at("input_set"));
  spec.s_out = object_set_from_json(j.at("output_set"));
  spec.result = set_from_parsed(j.at("result"));
  return spec;
}

}  // namespace hoq
