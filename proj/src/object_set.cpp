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

#include "hoq/object_set.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

namespace hoq {

namespace {

std::string label_list(const CompositeSpace& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& sub : s.subsystems()) {
    if (!first) os << ",";
    os << sub.label << ":" << sub.dim;
    first = false;
  }
  return os.str();
}

}  // namespace

const CompositeSpace& space_of(const SetDescription& s) {
  return std::visit([](const auto& v) -> const CompositeSpace& { return v.space; }, s);
}

const std::string& name_of(const SetDescription& s) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; }, s);
}

ObjectSet state_set(const CompositeSpace& space) {
  ObjectSet s;
  s.name = "state(" + label_list(space) + ")";
  s.space = space;
  s.projector = OpMap(SubsetMap::identity(space));
  s.gamma = GammaExpr::one();
  s.require_psd = true;
  s.wires.outputs = space.label_set();
  return s;
}

ObjectSet channel_set(const CompositeSpace& in_space, const CompositeSpace& out_space) {
  CompositeSpace joint = concat(in_space, out_space);
  ObjectSet s;
  s.name = "channel(" + label_list(in_space) + ";" + label_list(out_space) + ")";
  s.space = joint;
  s.projector = OpMap(channel_projector(joint, in_space.label_set(), out_space.label_set()));
  s.gamma = GammaExpr::dims(in_space.label_set());
  s.require_psd = true;
  s.wires.inputs = in_space.label_set();
  s.wires.outputs = out_space.label_set();
  return s;
}

ObjectSet comb_set(const std::vector<Tooth>& teeth) {
  if (teeth.empty()) return state_set(CompositeSpace{});
  if (teeth.size() == 1) {
    ObjectSet s = channel_set(teeth[0].in, teeth[0].out);
    return s;
  }
  // Natural time-ordered space: in_1, out_1, in_2, out_2, ...
  CompositeSpace natural;
  for (const auto& t : teeth) natural = concat(concat(natural, t.in), t.out);

  // A comb is a channel whose output wires become available no earlier than
  // the sequence order allows: discarding the last output must equal
  // discarding the last tooth entirely, and so on recursively.  That is the
  // alternating sum over the nested chain of trailing wire groups
  //   1 - _{o_n} + _{i_n o_n} - _{o_{n-1} i_n o_n} + ... + _{everything}.
  // Walking the groups back to front, each step enlarges the traced subset
  // and flips the sign; an empty wire group repeats the previous subset with
  // the opposite sign, so the pair cancels in the constructor.
  std::map<LabelSet, Rational> chain;
  chain[{}] = Rational(1);
  LabelSet acc;
  Rational sign(-1);
  for (std::size_t k = teeth.size(); k-- > 0;) {
    for (const auto& l : teeth[k].out.labels()) acc.insert(l);
    chain[acc] += sign;
    sign = -sign;
    for (const auto& l : teeth[k].in.labels()) acc.insert(l);
    chain[acc] += sign;
    sign = -sign;
  }
  SubsetMap proj(natural, std::move(chain));

  GammaExpr gamma = GammaExpr::one();
  for (const auto& t : teeth) gamma = gamma * GammaExpr::dims(t.in.label_set());

  ObjectSet s;
  {
    std::ostringstream os;
    os << "comb(";
    for (std::size_t i = 0; i < teeth.size(); ++i) {
      if (i) os << ",";
      os << "(" << label_list(teeth[i].in) << ";" << label_list(teeth[i].out) << ")";
    }
    os << ")";
    s.name = os.str();
  }
  s.space = natural;
  s.projector = OpMap(std::move(proj));
  s.gamma = gamma;
  s.require_psd = true;
  for (const auto& t : teeth) {
    for (const auto& l : t.in.labels()) s.wires.inputs.insert(l);
    for (const auto& l : t.out.labels()) s.wires.outputs.insert(l);
  }
  return s;
}

ObjectSet superchannel_set(const CompositeSpace& past, const CompositeSpace& slot_in,
                           const CompositeSpace& slot_out, const CompositeSpace& future) {
  ObjectSet s = comb_set({{past, slot_in}, {slot_out, future}});
  s.name = "superchannel(" + label_list(past) + ";" + label_list(slot_in) + ";" +
           label_list(slot_out) + ";" + label_list(future) + ")";
  return s;
}

ObjectSet nonsignalling_set(
    const std::vector<std::pair<CompositeSpace, CompositeSpace>>& parties) {
  if (parties.empty()) throw BadDims("non-signalling set needs at least one party");
  CompositeSpace joint;
  for (const auto& [in, out] : parties) joint = concat(concat(joint, in), out);
  SubsetMap proj = SubsetMap::identity(joint);
  GammaExpr gamma = GammaExpr::one();
  WireRoles wires;
  for (const auto& [in, out] : parties) {
    proj = compose(proj, channel_projector(joint, in.label_set(), out.label_set()));
    gamma = gamma * GammaExpr::dims(in.label_set());
    for (const auto& l : in.labels()) wires.inputs.insert(l);
    for (const auto& l : out.labels()) wires.outputs.insert(l);
  }
  ObjectSet s;
  {
    std::ostringstream os;
    os << "ns(";
    for (std::size_t i = 0; i < parties.size(); ++i) {
      if (i) os << ",";
      os << "(" << label_list(parties[i].first) << ";" << label_list(parties[i].second) << ")";
    }
    os << ")";
    s.name = os.str();
  }
  s.space = joint;
  s.projector = OpMap(proj);
  s.gamma = gamma;
  s.require_psd = true;
  s.wires = wires;
  return s;
}

ObjectSet process_matrix_set(
    const std::vector<std::pair<CompositeSpace, CompositeSpace>>& parties) {
  ObjectSet ns = nonsignalling_set(parties);
  SetDescription dual = dual_set(ns);
  ObjectSet s = std::get<ObjectSet>(dual);
  s.name = "pm" + ns.name.substr(2);
  // Keep the party wire roles: candidates for a terminal wire are the party
  // outputs, exactly as for the underlying channels.
  s.wires = ns.wires;
  s.require_psd = true;
  return s;
}

ObjectSet tensor_sets(const ObjectSet& a, const ObjectSet& b, int budget) {
  ObjectSet s;
  s.name = "tensor(" + a.name + "," + b.name + ")";
  s.space = concat(a.space, b.space);
  s.projector = tensor_map(a.projector, b.projector, budget);
  s.gamma = a.gamma * b.gamma;
  s.require_psd = a.require_psd && b.require_psd;
  s.wires.inputs = a.wires.inputs;
  s.wires.inputs.insert(b.wires.inputs.begin(), b.wires.inputs.end());
  s.wires.outputs = a.wires.outputs;
  s.wires.outputs.insert(b.wires.outputs.begin(), b.wires.outputs.end());
  return s;
}

SetDescription dual_set(const ObjectSet& s, int budget) {
  if (s.gamma.is_zero()) {
    throw ZeroGamma("dual of a set with zero trace value is not defined by the pairing");
  }
  const GammaExpr dual_gamma = GammaExpr::dims(s.space.label_set()) / s.gamma;
  MapPredicates preds = s.projector.predicates();

  if (s.projector.symbolic() && preds.is_projector && preds.is_unital) {
    ObjectSet d;
    d.name = "dual(" + s.name + ")";
    d.space = s.space;
    d.projector = OpMap(dual_projector(s.projector.as_subset_map()));
    d.gamma = dual_gamma;
    d.require_psd = s.require_psd;
    d.wires = s.wires;
    return d;
  }

  if (preds.nice()) {
    // Dense but structurally sound: same construction, dense arithmetic.
    DenseSuperMap p = s.projector.to_dense(budget);
    DenseSuperMap deposit =
        OpMap(SubsetMap::trace_replace(s.space, s.space.label_set())).to_dense(budget);
    DenseSuperMap d = add(subtract(identity_supermap(s.space), p), deposit);
    ObjectSet out;
    out.name = "dual(" + s.name + ")";
    out.space = s.space;
    out.projector = OpMap(d);
    out.gamma = dual_gamma;
    out.require_psd = s.require_psd;
    out.wires = s.wires;
    return out;
  }

  // General projector: the dual is the affine solution set of
  //   P^τ[ W̄^τ ] = (1/gamma) P^τ[1].
  DenseSuperMap p = s.projector.to_dense(budget);
  DenseSuperMap twirl = tau_twirl(p);
  AffineConstraintSet out;
  out.name = "dual(" + s.name + ")";
  out.space = s.space;
  out.projector = OpMap(identity_supermap(s.space));
  AffineEquation eq;
  eq.trace_out_first = {};
  eq.map = OpMap(compose(twirl, transpose_supermap(s.space)));
  Operator rhs = apply(twirl, identity_operator(s.space));
  const double inv_gamma = 1.0 / boost::rational_cast<double>(s.gamma_value());
  rhs.matrix *= inv_gamma;
  eq.rhs = rhs;
  out.affine = eq;
  out.require_psd = false;
  return out;
}

namespace {

ValidationReport validate_impl(const Operator& w, const CompositeSpace& space, const OpMap* proj,
                               const GammaExpr* gamma, const AffineEquation* affine,
                               bool require_psd, double tol) {
  ValidationReport r;
  Operator aligned = align_to(w, space);

  if (proj != nullptr) {
    Operator pw = proj->apply(aligned);
    r.projector_residual = frobenius_distance(pw, aligned);
    r.projector_ok = r.projector_residual <= tol;
  }

  if (gamma != nullptr) {
    const double target = gamma->evaluate_double(space);
    r.trace_residual = std::abs(trace(aligned) - cx(target));
    r.trace_ok = r.trace_residual <= tol;
  } else if (affine != nullptr) {
    Operator reduced = affine->trace_out_first.empty()
                           ? aligned
                           : partial_trace(aligned, affine->trace_out_first);
    Operator lhs = affine->map.apply(reduced);
    r.trace_residual = frobenius_distance(lhs, affine->rhs);
    r.trace_ok = r.trace_residual <= tol;
  }

  if (require_psd) {
    Matrix h = 0.5 * (aligned.matrix + aligned.matrix.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    const double norm2 = std::max(std::abs(lo), std::abs(hi));
    r.min_eig = lo;
    r.psd_ok = lo >= -std::max(tol, kPsdRelFloor * norm2);
  }
  return r;
}

}  // namespace

ValidationReport validate(const Operator& w, const ObjectSet& s, double tol) {
  return validate_impl(w, s.space, &s.projector, &s.gamma, nullptr, s.require_psd, tol);
}

ValidationReport validate(const Operator& w, const AffineConstraintSet& s, double tol) {
  const AffineEquation* eq = s.affine ? &*s.affine : nullptr;
  return validate_impl(w, s.space, &s.projector, nullptr, eq, s.require_psd, tol);
}

ValidationReport validate(const Operator& w, const SetDescription& s, double tol) {
  return std::visit([&](const auto& v) { return validate(w, v, tol); }, s);
}

}  // namespace hoq
