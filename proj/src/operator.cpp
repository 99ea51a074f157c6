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

#include "hoq/operator.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace hoq {

namespace {

// Flat index offsets contributed by the factors inside / outside a subset.
// full_index = rest_offsets[rest_index] + sub_offsets[sub_index].
struct IndexSplit {
  std::vector<long long> rest_offsets;
  std::vector<long long> sub_offsets;
  long long rest_dim = 1;
  long long sub_dim = 1;
};

IndexSplit split_indices(const CompositeSpace& space, const std::set<std::string>& subset) {
  require_labels(space, subset);
  IndexSplit out;
  out.rest_offsets = {0};
  out.sub_offsets = {0};
  const auto& subs = space.subsystems();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const bool in_sub = subset.count(subs[i].label) != 0;
    auto& offsets = in_sub ? out.sub_offsets : out.rest_offsets;
    auto& dim = in_sub ? out.sub_dim : out.rest_dim;
    std::vector<long long> next;
    next.reserve(offsets.size() * subs[i].dim);
    for (long long base : offsets) {
      for (long long k = 0; k < subs[i].dim; ++k) {
        next.push_back(base + k * space.stride(i));
      }
    }
    offsets = std::move(next);
    dim *= subs[i].dim;
  }
  return out;
}

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw Error("operator entries must be finite");
}

}  // namespace

Operator::Operator(CompositeSpace space_, Matrix matrix_)
    : space(std::move(space_)), matrix(std::move(matrix_)) {
  if (matrix.rows() != space.total_dim() || matrix.cols() != space.total_dim()) {
    throw SpaceMismatch("matrix is " + std::to_string(matrix.rows()) + "x" +
                        std::to_string(matrix.cols()) + " but the space has total dimension " +
                        std::to_string(space.total_dim()));
  }
  require_finite(matrix);
}

Operator zero_operator(const CompositeSpace& space) {
  return Operator(space, Matrix::Zero(space.total_dim(), space.total_dim()));
}

Operator identity_operator(const CompositeSpace& space) {
  return Operator(space, Matrix::Identity(space.total_dim(), space.total_dim()));
}

Operator basis_operator(const CompositeSpace& space, long long r, long long c) {
  Matrix m = Matrix::Zero(space.total_dim(), space.total_dim());
  m(r, c) = 1.0;
  return Operator(space, std::move(m));
}

Operator tensor(const Operator& a, const Operator& b) {
  CompositeSpace joint = concat(a.space, b.space);
  const long long da = a.dim(), db = b.dim();
  Matrix m(da * db, da * db);
  for (long long ra = 0; ra < da; ++ra) {
    for (long long ca = 0; ca < da; ++ca) {
      m.block(ra * db, ca * db, db, db) = a.matrix(ra, ca) * b.matrix;
    }
  }
  return Operator(std::move(joint), std::move(m));
}

Operator partial_trace(const Operator& a, const std::set<std::string>& subset) {
  IndexSplit ix = split_indices(a.space, subset);
  Matrix m = Matrix::Zero(ix.rest_dim, ix.rest_dim);
  for (long long rr = 0; rr < ix.rest_dim; ++rr) {
    for (long long cr = 0; cr < ix.rest_dim; ++cr) {
      cx acc = 0.0;
      for (long long s = 0; s < ix.sub_dim; ++s) {
        acc += a.matrix(ix.rest_offsets[rr] + ix.sub_offsets[s],
                        ix.rest_offsets[cr] + ix.sub_offsets[s]);
      }
      m(rr, cr) = acc;
    }
  }
  return Operator(a.space.without(subset), std::move(m));
}

Operator partial_transpose(const Operator& a, const std::set<std::string>& subset) {
  IndexSplit ix = split_indices(a.space, subset);
  Matrix m(a.dim(), a.dim());
  for (long long rr = 0; rr < ix.rest_dim; ++rr) {
    for (long long rs = 0; rs < ix.sub_dim; ++rs) {
      for (long long cr = 0; cr < ix.rest_dim; ++cr) {
        for (long long cs = 0; cs < ix.sub_dim; ++cs) {
          m(ix.rest_offsets[rr] + ix.sub_offsets[rs], ix.rest_offsets[cr] + ix.sub_offsets[cs]) =
              a.matrix(ix.rest_offsets[rr] + ix.sub_offsets[cs],
                       ix.rest_offsets[cr] + ix.sub_offsets[rs]);
        }
      }
    }
  }
  return Operator(a.space, std::move(m));
}

Operator trace_and_replace(const Operator& a, const std::set<std::string>& subset) {
  if (subset.empty()) return a;
  IndexSplit ix = split_indices(a.space, subset);
  const double inv_d = 1.0 / static_cast<double>(ix.sub_dim);
  Operator traced = partial_trace(a, subset);
  Matrix m = Matrix::Zero(a.dim(), a.dim());
  for (long long rr = 0; rr < ix.rest_dim; ++rr) {
    for (long long cr = 0; cr < ix.rest_dim; ++cr) {
      const cx v = traced.matrix(rr, cr) * inv_d;
      for (long long s = 0; s < ix.sub_dim; ++s) {
        m(ix.rest_offsets[rr] + ix.sub_offsets[s], ix.rest_offsets[cr] + ix.sub_offsets[s]) = v;
      }
    }
  }
  return Operator(a.space, std::move(m));
}

Operator permute(const Operator& a, const std::vector<std::string>& new_order) {
  const auto& subs = a.space.subsystems();
  if (new_order.size() != subs.size()) {
    throw NotAPermutation("expected " + std::to_string(subs.size()) + " labels, got " +
                          std::to_string(new_order.size()));
  }
  std::set<std::string> seen;
  std::vector<Subsystem> new_subs;
  new_subs.reserve(new_order.size());
  for (const auto& l : new_order) {
    if (!a.space.contains(l)) throw NotAPermutation("label '" + l + "' not in the space");
    if (!seen.insert(l).second) throw NotAPermutation("label '" + l + "' repeated");
    new_subs.push_back({l, a.space.dim_of(l)});
  }
  CompositeSpace target(std::move(new_subs));

  // old flat index -> new flat index, factor by factor.
  std::vector<long long> map = {0};
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const long long new_stride = target.stride(target.index_of(subs[i].label));
    std::vector<long long> next;
    next.reserve(map.size() * subs[i].dim);
    for (long long base : map) {
      for (long long k = 0; k < subs[i].dim; ++k) next.push_back(base + k * new_stride);
    }
    map = std::move(next);
  }
  Matrix m(a.dim(), a.dim());
  for (long long r = 0; r < a.dim(); ++r) {
    for (long long c = 0; c < a.dim(); ++c) m(map[r], map[c]) = a.matrix(r, c);
  }
  return Operator(std::move(target), std::move(m));
}

Operator align_to(const Operator& a, const CompositeSpace& target) {
  if (a.space == target) return a;
  if (a.space.label_set() != target.label_set()) {
    throw SpaceMismatch("operator on [" + describe(a.space) + "] cannot be aligned to [" +
                        describe(target) + "]");
  }
  Operator out = permute(a, target.labels());
  if (!(out.space == target)) {
    throw SpaceMismatch("operator on [" + describe(a.space) + "] cannot be aligned to [" +
                        describe(target) + "]");
  }
  return out;
}

Operator conjugate(const Operator& a) { return Operator(a.space, a.matrix.conjugate()); }
Operator transpose(const Operator& a) { return Operator(a.space, a.matrix.transpose()); }
Operator adjoint(const Operator& a) { return Operator(a.space, a.matrix.adjoint()); }

cx trace(const Operator& a) { return a.matrix.trace(); }

double frobenius_norm(const Operator& a) { return a.matrix.norm(); }

double frobenius_distance(const Operator& a, const Operator& b) {
  if (a.space.label_set() != b.space.label_set()) {
    throw SpaceMismatch("operators live on different label sets");
  }
  Operator bb = align_to(b, a.space);
  return (a.matrix - bb.matrix).norm();
}

double hermiticity_defect(const Operator& a) {
  return (a.matrix - a.matrix.adjoint().eval()).norm();
}

double min_eigenvalue(const Operator& a) {
  if (a.dim() == 0) return 0.0;
  Matrix h = 0.5 * (a.matrix + a.matrix.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double spectral_norm(const Operator& a) {
  if (a.dim() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a.matrix);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool approx_equal(const Operator& a, const Operator& b, double tol) {
  return frobenius_distance(a, b) <= tol;
}

std::string to_json(const Operator& a) {
  nlohmann::json j;
  j["labels"] = nlohmann::json::array();
  for (const auto& s : a.space.subsystems()) {
    j["labels"].push_back(nlohmann::json::array({s.label, s.dim}));
  }
  nlohmann::json rows = nlohmann::json::array();
  for (long long r = 0; r < a.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (long long c = 0; c < a.dim(); ++c) {
      row.push_back(nlohmann::json::array({a.matrix(r, c).real(), a.matrix(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump();
}

Operator operator_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad operator JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix")) {
    throw IoError("operator JSON must contain 'labels' and 'matrix'");
  }
  std::vector<std::pair<std::string, long long>> factors;
  for (const auto& l : j["labels"]) {
    if (!l.is_array() || l.size() != 2) throw IoError("each label must be a [name, dim] pair");
    factors.emplace_back(l[0].get<std::string>(), l[1].get<long long>());
  }
  CompositeSpace space = make_space(factors);
  const long long d = space.total_dim();
  const auto& rows = j["matrix"];
  if (!rows.is_array() || static_cast<long long>(rows.size()) != d) {
    throw IoError("matrix must have " + std::to_string(d) + " rows");
  }
  Matrix m(d, d);
  for (long long r = 0; r < d; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<long long>(row.size()) != d) {
      throw IoError("matrix row " + std::to_string(r) + " must have " + std::to_string(d) +
                    " entries");
    }
    for (long long c = 0; c < d; ++c) {
      const auto& e = row[c];
      if (!e.is_array() || e.size() != 2) throw IoError("matrix entries must be [re, im] pairs");
      m(r, c) = cx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return Operator(std::move(space), std::move(m));
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

std::string format_real(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace hoq
