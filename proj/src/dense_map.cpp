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

#include "hoq/dense_map.hpp"

#include <map>
#include <string>

namespace hoq {

namespace {

std::map<std::string, long long> dims_by_label(const CompositeSpace& s) {
  std::map<std::string, long long> out;
  for (const auto& sub : s.subsystems()) out[sub.label] = sub.dim;
  return out;
}

}  // namespace

Vector vec(const Operator& a) {
  const long long d = a.dim();
  Vector v(d * d);
  for (long long c = 0; c < d; ++c) {
    for (long long r = 0; r < d; ++r) v(c * d + r) = a.matrix(r, c);
  }
  return v;
}

Operator unvec(const CompositeSpace& space, const Vector& v) {
  const long long d = space.total_dim();
  if (v.size() != d * d) throw SpaceMismatch("vector length does not match space dimension");
  Matrix m(d, d);
  for (long long c = 0; c < d; ++c) {
    for (long long r = 0; r < d; ++r) m(r, c) = v(c * d + r);
  }
  return Operator(space, std::move(m));
}

DenseSuperMap::DenseSuperMap(CompositeSpace in, CompositeSpace out, Matrix mat)
    : in_space(std::move(in)), out_space(std::move(out)), m(std::move(mat)) {
  const long long din = in_space.total_dim(), dout = out_space.total_dim();
  if (m.rows() != dout * dout || m.cols() != din * din) {
    throw SpaceMismatch("supermap matrix has wrong shape");
  }
}

DenseSuperMap identity_supermap(const CompositeSpace& space) {
  const long long d2 = space.total_dim() * space.total_dim();
  return DenseSuperMap(space, space, Matrix::Identity(d2, d2));
}

DenseSuperMap transpose_supermap(const CompositeSpace& space) {
  const long long d = space.total_dim();
  Matrix m = Matrix::Zero(d * d, d * d);
  for (long long r = 0; r < d; ++r) {
    for (long long c = 0; c < d; ++c) m(r * d + c, c * d + r) = 1.0;
  }
  return DenseSuperMap(space, space, std::move(m));
}

DenseSuperMap supermap_from_function(const CompositeSpace& in_space,
                                     const CompositeSpace& out_space,
                                     const std::function<Operator(const Operator&)>& fn) {
  const long long din = in_space.total_dim(), dout = out_space.total_dim();
  Matrix m(dout * dout, din * din);
  for (long long c = 0; c < din; ++c) {
    for (long long r = 0; r < din; ++r) {
      Operator image = align_to(fn(basis_operator(in_space, r, c)), out_space);
      m.col(c * din + r) = vec(image);
    }
  }
  return DenseSuperMap(in_space, out_space, std::move(m));
}

Operator apply(const DenseSuperMap& p, const Operator& a) {
  Operator aligned = align_to(a, p.in_space);
  return unvec(p.out_space, p.m * vec(aligned));
}

DenseSuperMap compose(const DenseSuperMap& p, const DenseSuperMap& q) {
  if (dims_by_label(q.out_space) != dims_by_label(p.in_space)) {
    throw SpaceMismatch("composing supermaps with mismatched interface spaces");
  }
  Matrix inner = q.m;
  if (!(q.out_space == p.in_space)) {
    // Align q's output index order to p's input order via a permutation map.
    DenseSuperMap perm = supermap_from_function(
        q.out_space, p.in_space, [&](const Operator& e) { return align_to(e, p.in_space); });
    inner = perm.m * inner;
  }
  return DenseSuperMap(q.in_space, p.out_space, p.m * inner);
}

DenseSuperMap tensor_map(const DenseSuperMap& p, const DenseSuperMap& q) {
  CompositeSpace in = concat(p.in_space, q.in_space);
  CompositeSpace out = concat(p.out_space, q.out_space);
  const long long ai = p.in_space.total_dim(), ao = p.out_space.total_dim();
  const long long bi = q.in_space.total_dim(), bo = q.out_space.total_dim();
  const long long di = ai * bi, dn = ao * bo;
  Matrix m = Matrix::Zero(dn * dn, di * di);
  for (long long ca_o = 0; ca_o < ao; ++ca_o)
    for (long long ra_o = 0; ra_o < ao; ++ra_o)
      for (long long ca_i = 0; ca_i < ai; ++ca_i)
        for (long long ra_i = 0; ra_i < ai; ++ra_i) {
          const cx pa = p.m(ca_o * ao + ra_o, ca_i * ai + ra_i);
          if (pa == cx(0.0)) continue;
          for (long long cb_o = 0; cb_o < bo; ++cb_o)
            for (long long rb_o = 0; rb_o < bo; ++rb_o)
              for (long long cb_i = 0; cb_i < bi; ++cb_i)
                for (long long rb_i = 0; rb_i < bi; ++rb_i) {
                  const long long row =
                      (ca_o * bo + cb_o) * dn + (ra_o * bo + rb_o);
                  const long long col =
                      (ca_i * bi + cb_i) * di + (ra_i * bi + rb_i);
                  m(row, col) = pa * q.m(cb_o * bo + rb_o, cb_i * bi + rb_i);
                }
        }
  return DenseSuperMap(std::move(in), std::move(out), std::move(m));
}

DenseSuperMap adjoint_map(const DenseSuperMap& p) {
  return DenseSuperMap(p.out_space, p.in_space, p.m.adjoint());
}

DenseSuperMap tau_twirl(const DenseSuperMap& p) {
  return DenseSuperMap(p.out_space, p.in_space, p.m.transpose());
}

DenseSuperMap scale(const DenseSuperMap& p, cx factor) {
  return DenseSuperMap(p.in_space, p.out_space, factor * p.m);
}

DenseSuperMap add(const DenseSuperMap& p, const DenseSuperMap& q) {
  if (!(p.in_space == q.in_space) || !(p.out_space == q.out_space)) {
    throw SpaceMismatch("adding supermaps on different spaces");
  }
  return DenseSuperMap(p.in_space, p.out_space, p.m + q.m);
}

DenseSuperMap subtract(const DenseSuperMap& p, const DenseSuperMap& q) {
  return add(p, scale(q, cx(-1.0)));
}

}  // namespace hoq
