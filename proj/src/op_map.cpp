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

#include "hoq/op_map.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <json.hpp>

namespace hoq {

namespace {

void check_budget(const CompositeSpace& s, int budget, const char* what) {
  if (s.total_dim() > budget) {
    throw BudgetExceeded(std::string(what) + ": total dimension " +
                         std::to_string(s.total_dim()) + " exceeds the dense budget " +
                         std::to_string(budget));
  }
}

}  // namespace

const SubsetMap& OpMap::as_subset_map() const {
  if (!symbolic()) throw NeedsSymbolic("map is dense, symbolic form required");
  return std::get<SubsetMap>(v_);
}

const DenseSuperMap& OpMap::as_dense() const { return std::get<DenseSuperMap>(v_); }

const CompositeSpace& OpMap::in_space() const {
  return symbolic() ? std::get<SubsetMap>(v_).space() : std::get<DenseSuperMap>(v_).in_space;
}

const CompositeSpace& OpMap::out_space() const {
  return symbolic() ? std::get<SubsetMap>(v_).space() : std::get<DenseSuperMap>(v_).out_space;
}

Operator OpMap::apply(const Operator& a) const {
  if (symbolic()) return std::get<SubsetMap>(v_).apply(a);
  return hoq::apply(std::get<DenseSuperMap>(v_), a);
}

DenseSuperMap OpMap::to_dense(int budget) const {
  check_budget(in_space(), budget, "to_dense");
  check_budget(out_space(), budget, "to_dense");
  if (!symbolic()) return std::get<DenseSuperMap>(v_);
  const SubsetMap& s = std::get<SubsetMap>(v_);
  return supermap_from_function(s.space(), s.space(),
                                [&](const Operator& e) { return s.apply(e); });
}

MapPredicates OpMap::predicates(double tol) const {
  MapPredicates out;
  if (symbolic()) {
    const SubsetMap& s = std::get<SubsetMap>(v_);
    out.exact = true;
    out.is_self_adjoint = true;
    out.commutes_with_transpose = true;
    out.is_projector = compose(s, s) == s;
    out.is_unital = s.coefficient_sum() == Rational(1);
    out.is_trace_preserving = out.is_unital;
    return out;
  }
  const DenseSuperMap& d = std::get<DenseSuperMap>(v_);
  out.exact = false;
  const double scale = std::max(1.0, d.m.norm());
  if (d.square() && d.in_space == d.out_space) {
    out.is_projector = (d.m * d.m - d.m).norm() <= tol * scale * scale;
    out.is_self_adjoint = (d.m - d.m.adjoint().eval()).norm() <= tol * scale;
    const Matrix theta = transpose_supermap(d.in_space).m;
    out.commutes_with_transpose = (theta * d.m * theta - d.m).norm() <= tol * scale;
  }
  const Vector id_in = vec(identity_operator(d.in_space));
  const Vector id_out = vec(identity_operator(d.out_space));
  if (d.square()) {
    out.is_unital = (d.m * id_in - id_out).norm() <= tol * scale;
  }
  out.is_trace_preserving = (d.m.adjoint() * id_out - id_in).norm() <= tol * scale;
  return out;
}

OpMap compose(const OpMap& p, const OpMap& q, int budget) {
  if (p.symbolic() && q.symbolic()) {
    return OpMap(compose(p.as_subset_map(), q.as_subset_map()));
  }
  return OpMap(compose(p.to_dense(budget), q.to_dense(budget)));
}

OpMap tensor_map(const OpMap& p, const OpMap& q, int budget) {
  if (p.symbolic() && q.symbolic()) {
    return OpMap(tensor_map(p.as_subset_map(), q.as_subset_map()));
  }
  return OpMap(tensor_map(p.to_dense(budget), q.to_dense(budget)));
}

OpMap adjoint_map(const OpMap& p, int budget) {
  if (p.symbolic()) return p;  // every subset map is self-adjoint
  return OpMap(adjoint_map(p.to_dense(budget)));
}

OpMap tau_twirl(const OpMap& p, int budget) {
  if (p.symbolic()) return p;  // fixed points of the twirl
  return OpMap(tau_twirl(p.to_dense(budget)));
}

OpMap lift_to(const OpMap& p, const CompositeSpace& bigger, int budget) {
  if (p.symbolic()) return OpMap(p.as_subset_map().lifted(bigger));
  const DenseSuperMap& d = p.as_dense();
  if (!(d.in_space == d.out_space)) {
    throw SpaceMismatch("only square maps can be lifted to a bigger space");
  }
  const CompositeSpace rest = bigger.without(d.in_space.label_set());
  check_budget(bigger, budget, "lift_to");
  DenseSuperMap wide = tensor_map(d, identity_supermap(rest));
  // Reorder to bigger's label order.
  DenseSuperMap perm_in = supermap_from_function(
      bigger, wide.in_space, [&](const Operator& e) { return align_to(e, wide.in_space); });
  DenseSuperMap perm_out = supermap_from_function(
      wide.out_space, bigger, [&](const Operator& e) { return align_to(e, bigger); });
  return OpMap(DenseSuperMap(bigger, bigger, perm_out.m * wide.m * perm_in.m));
}

ImageBasis image_basis(const OpMap& p, double tol, int budget) {
  MapPredicates preds = p.predicates();
  if (!preds.is_projector) throw NotAProjector("image_basis requires a projector map");
  DenseSuperMap d = p.to_dense(budget);
  if (!(d.in_space == d.out_space)) throw SpaceMismatch("image_basis requires a square map");
  const CompositeSpace& space = d.in_space;

  Eigen::ColPivHouseholderQR<Matrix> qr(d.m);
  qr.setThreshold(tol);
  const long long rank = qr.rank();
  Matrix q = qr.householderQ();

  ImageBasis out;
  if (!(preds.is_self_adjoint && preds.commutes_with_transpose)) {
    for (long long k = 0; k < rank; ++k) out.ops.push_back(unvec(space, q.col(k)));
    return out;
  }

  // Self-adjoint + transpose-commuting: the image is closed under the dagger,
  // so it admits a Hermitian orthonormal basis. Split each column basis
  // operator into Hermitian parts and re-orthonormalize.
  std::vector<Operator> candidates;
  for (long long k = 0; k < rank; ++k) {
    Operator b = unvec(space, q.col(k));
    Matrix h1 = 0.5 * (b.matrix + b.matrix.adjoint().eval());
    Matrix h2 = cx(0.0, -0.5) * (b.matrix - b.matrix.adjoint().eval());
    candidates.emplace_back(space, std::move(h1));
    candidates.emplace_back(space, std::move(h2));
  }
  std::vector<Operator> accepted;
  for (auto& cand : candidates) {
    if (static_cast<long long>(accepted.size()) == rank) break;
    Matrix w = cand.matrix;
    for (const auto& a : accepted) {
      const cx overlap = (a.matrix.adjoint() * w).trace();
      w -= overlap * a.matrix;
    }
    const double norm = w.norm();
    if (norm > tol) accepted.emplace_back(space, Matrix(w / norm));
  }
  if (static_cast<long long>(accepted.size()) != rank) {
    throw Error("failed to build a Hermitian image basis (rank " + std::to_string(rank) +
                ", found " + std::to_string(accepted.size()) + ")");
  }
  out.ops = std::move(accepted);
  out.hermitian = true;
  return out;
}

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

}  // namespace

std::string to_json(const OpMap& p) {
  nlohmann::json j;
  if (p.symbolic()) {
    j = nlohmann::json::parse(to_json(p.as_subset_map()));
    j["type"] = "subset";
    return j.dump();
  }
  const DenseSuperMap& m = p.as_dense();
  j["type"] = "dense";
  j["in_labels"] = labels_json(m.in_space);
  j["out_labels"] = labels_json(m.out_space);
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.m.cols(); ++c) {
      row.push_back(nlohmann::json::array({m.m(r, c).real(), m.m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump();
}

OpMap map_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad map JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type")) throw IoError("map JSON must carry a 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "subset") return OpMap(subset_map_from_json(text));
  if (type != "dense") throw IoError("unknown map type '" + type + "'");
  if (!j.contains("in_labels") || !j.contains("out_labels") || !j.contains("matrix")) {
    throw IoError("dense map JSON needs 'in_labels', 'out_labels', 'matrix'");
  }
  CompositeSpace in_space = labels_from_json(j["in_labels"]);
  CompositeSpace out_space = labels_from_json(j["out_labels"]);
  const long long rows_needed = out_space.total_dim() * out_space.total_dim();
  const long long cols_needed = in_space.total_dim() * in_space.total_dim();
  const auto& rows = j["matrix"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != rows_needed) {
    throw IoError("dense map matrix must have " + std::to_string(rows_needed) + " rows");
  }
  Matrix m(rows_needed, cols_needed);
  for (long long r = 0; r < rows_needed; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != cols_needed) {
      throw IoError("dense map matrix must have " + std::to_string(cols_needed) + " columns");
    }
    for (long long c = 0; c < cols_needed; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2) throw IoError("matrix entries must be [re, im] pairs");
      m(r, c) = cx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return OpMap(DenseSuperMap(std::move(in_space), std::move(out_space), std::move(m)));
}

}  // namespace hoq
