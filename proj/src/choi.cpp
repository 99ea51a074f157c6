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

#include "hoq/choi.hpp"

#include <algorithm>

namespace hoq {

ChoiMatrix::ChoiMatrix(CompositeSpace in, CompositeSpace out, Operator op_)
    : in_space(std::move(in)), out_space(std::move(out)) {
  CompositeSpace joint = concat(in_space, out_space);
  op = align_to(op_, joint);
}

ChoiMatrix choi_of_map(const std::function<Operator(const Operator&)>& fn,
                       const CompositeSpace& in_space, const CompositeSpace& out_space) {
  CompositeSpace joint = concat(in_space, out_space);
  const long long di = in_space.total_dim();
  const long long dn = out_space.total_dim();
  Matrix t = Matrix::Zero(di * dn, di * dn);
  for (long long j = 0; j < di; ++j) {
    for (long long k = 0; k < di; ++k) {
      Operator image = align_to(fn(basis_operator(in_space, j, k)), out_space);
      t.block(j * dn, k * dn, dn, dn) = image.matrix;
    }
  }
  return ChoiMatrix(in_space, out_space, Operator(joint, std::move(t)));
}

Operator apply_choi(const Operator& t, const CompositeSpace& in_space,
                    const CompositeSpace& out_space, const Operator& x) {
  CompositeSpace joint = concat(in_space, out_space);
  Operator tt = align_to(t, joint);
  Operator xx = align_to(x, in_space);
  const long long di = in_space.total_dim();
  const long long dn = out_space.total_dim();
  Matrix out = Matrix::Zero(dn, dn);
  for (long long a = 0; a < di; ++a) {
    for (long long b = 0; b < di; ++b) {
      const cx w = xx.matrix(a, b);
      if (w == cx(0.0)) continue;
      out += w * tt.matrix.block(a * dn, b * dn, dn, dn);
    }
  }
  return Operator(out_space, std::move(out));
}

Operator apply_choi(const ChoiMatrix& t, const Operator& x) {
  return apply_choi(t.op, t.in_space, t.out_space, x);
}

Operator link(const Operator& a, const Operator& b) {
  // Shared labels, with dimension agreement.
  std::set<std::string> shared;
  for (const auto& s : a.space.subsystems()) {
    if (b.space.contains(s.label)) {
      if (b.space.dim_of(s.label) != s.dim) {
        throw DimMismatchOnSharedLabel("label '" + s.label + "' has dimension " +
                                       std::to_string(s.dim) + " vs " +
                                       std::to_string(b.space.dim_of(s.label)));
      }
      shared.insert(s.label);
    }
  }
  // Reorder A to (A-only, shared) and B to (shared-in-A's-order, B-only).
  CompositeSpace ax = a.space.without(shared);
  CompositeSpace ay = a.space.subspace(shared);
  Operator aa = align_to(a, concat(ax, ay));
  CompositeSpace bz = b.space.without(shared);
  Operator bb = align_to(b, concat(ay, bz));

  const long long dx = ax.total_dim(), dy = ay.total_dim(), dz = bz.total_dim();
  CompositeSpace result_space = concat(ax, bz);
  Matrix m = Matrix::Zero(dx * dz, dx * dz);
  for (long long x = 0; x < dx; ++x) {
    for (long long xp = 0; xp < dx; ++xp) {
      for (long long z = 0; z < dz; ++z) {
        for (long long zp = 0; zp < dz; ++zp) {
          cx acc = 0.0;
          for (long long y = 0; y < dy; ++y) {
            for (long long yp = 0; yp < dy; ++yp) {
              // B's shared slice enters transposed: pair A's row-y with B's
              // row-y and A's column-y' with B's column-y'.
              acc += aa.matrix(x * dy + y, xp * dy + yp) * bb.matrix(y * dz + z, yp * dz + zp);
            }
          }
          m(x * dz + z, xp * dz + zp) = acc;
        }
      }
    }
  }
  return Operator(std::move(result_space), std::move(m));
}

MoveMapReport move_map(const Operator& a, const OpMap& p, const Operator& b, int budget) {
  if (!(p.in_space() == p.out_space()) &&
      p.in_space().label_set() != p.out_space().label_set()) {
    throw SpaceMismatch("move_map requires a square map");
  }
  MoveMapReport report;
  report.predicates = p.predicates();

  const Operator pb = p.apply(align_to(b, p.in_space()));
  const Operator lhs = link(a, pb);

  OpMap lifted_tau = lift_to(tau_twirl(p, budget), a.space, budget);
  const Operator rhs_twirl = link(lifted_tau.apply(a), b);
  report.twirled_deviation = frobenius_distance(lhs, rhs_twirl);

  if (report.predicates.is_self_adjoint && report.predicates.commutes_with_transpose) {
    OpMap lifted_plain = lift_to(p, a.space, budget);
    const Operator rhs_plain = link(lifted_plain.apply(a), b);
    report.plain_checked = true;
    report.plain_deviation = frobenius_distance(lhs, rhs_plain);
  }
  return report;
}

}  // namespace hoq
