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

#include "hoq/sampling.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>

namespace hoq {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on the generator's own uniforms keeps the stream identical
  // across standard libraries.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Matrix random_gaussian_matrix(long long rows, long long cols, Rng& rng) {
  Matrix m(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      m(r, c) = cx(rng.normal(), rng.normal());
    }
  }
  return m;
}

Operator random_hermitian(const CompositeSpace& space, Rng& rng) {
  const long long d = space.total_dim();
  Matrix g = random_gaussian_matrix(d, d, rng);
  Matrix h = 0.5 * (g + g.adjoint().eval());
  const double norm = h.norm();
  if (norm > 0.0) h /= norm;
  return Operator(space, std::move(h));
}

Operator random_traceless_hermitian(const CompositeSpace& space, Rng& rng) {
  Operator h = random_hermitian(space, rng);
  const long long d = space.total_dim();
  const cx tr = h.matrix.trace();
  h.matrix -= (tr / static_cast<double>(d)) * Matrix::Identity(d, d);
  const double norm = h.matrix.norm();
  if (norm > 0.0) h.matrix /= norm;
  return h;
}

Operator random_psd(const CompositeSpace& space, Rng& rng) {
  const long long d = space.total_dim();
  Matrix g = random_gaussian_matrix(d, d, rng);
  Matrix p = g * g.adjoint();
  const double tr = p.trace().real();
  if (tr > 0.0) p /= tr;
  return Operator(space, std::move(p));
}

namespace {

double min_eig_hermitian_part(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double max_eig_hermitian_part(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

// Minimum-norm element of the image with the requested trace, plus a small
// trace-free image perturbation. Used when the projector moves the identity.
Operator affine_member(const ObjectSet& s, Rng& rng) {
  ImageBasis basis = image_basis(s.projector);
  const long long rank = static_cast<long long>(basis.ops.size());
  const CompositeSpace& space = s.space;
  const long long d = space.total_dim();
  const double target = s.gamma.evaluate_double(space);
  Vector t(rank);
  for (long long k = 0; k < rank; ++k) t(k) = trace(basis.ops[static_cast<std::size_t>(k)]);
  const double tn2 = t.squaredNorm();
  if (tn2 < 1e-20 && std::abs(target) > 1e-14) {
    throw NonUnitalProjector(
        "every image element is traceless; no member with trace " + std::to_string(target) +
        " exists");
  }
  Matrix x = Matrix::Zero(d, d);
  if (tn2 >= 1e-20) {
    for (long long k = 0; k < rank; ++k) {
      x += (target * std::conj(t(k)) / tn2) * basis.ops[static_cast<std::size_t>(k)].matrix;
    }
  }
  // Random image direction with its trace component removed (a no-op when the
  // whole image is already traceless).
  Operator h = random_hermitian(space, rng);
  Operator v = s.projector.apply(h);
  if (tn2 >= 1e-20) {
    const cx tv = trace(v);
    for (long long k = 0; k < rank; ++k) {
      v.matrix -= (tv * std::conj(t(k)) / tn2) * basis.ops[static_cast<std::size_t>(k)].matrix;
    }
  }
  const double xn = x.norm();
  const double vn = v.matrix.norm();
  if (vn > 0.0) x += (0.25 * std::max(xn, 1.0) / vn) * v.matrix;
  return Operator(space, std::move(x));
}

}  // namespace

Operator random_member(const ObjectSet& s, std::uint64_t seed) {
  Rng rng(seed);
  MapPredicates preds = s.projector.predicates();
  const CompositeSpace& space = s.space;
  const long long d = space.total_dim();
  const double gval = s.gamma.evaluate_double(space);

  if (!preds.is_unital) {
    if (s.require_psd) {
      throw NonUnitalProjector(
          "the projector moves the identity, so there is no canonical positive interior "
          "point to sample around");
    }
    return affine_member(s, rng);
  }
  if (s.gamma.is_zero()) {
    // Positivity forces the zero operator; without it, any traceless image
    // element is a member.
    Operator v = s.projector.apply(random_traceless_hermitian(space, rng));
    const cx tv = trace(v);
    v.matrix -= (tv / static_cast<double>(d)) * Matrix::Identity(d, d);
    if (s.require_psd) v.matrix.setZero();
    return v;
  }

  Operator w = identity_operator(space);
  w.matrix *= gval / static_cast<double>(d);

  Operator v = s.projector.apply(random_traceless_hermitian(space, rng));
  if (preds.is_self_adjoint) v.matrix = 0.5 * (v.matrix + v.matrix.adjoint().eval());
  const cx tv = trace(v);
  v.matrix -= (tv / static_cast<double>(d)) * Matrix::Identity(d, d);
  const double vn = v.matrix.norm();
  if (vn < 1e-14) return w;

  const double lo = min_eig_hermitian_part(v.matrix);
  const double hi = max_eig_hermitian_part(v.matrix);
  const double base = gval / static_cast<double>(d);
  const double eps =
      lo < -1e-14 ? 0.5 * base / (-lo) : 0.5 * base / std::max(hi, 1e-14);
  w.matrix += eps * v.matrix;
  return w;
}

ChoiMatrix random_cptp(const CompositeSpace& in_space, const CompositeSpace& out_space,
                       long long env_dim, std::uint64_t seed) {
  if (env_dim < 1) throw BadDims("environment dimension must be at least 1");
  const long long di = in_space.total_dim();
  const long long dout = out_space.total_dim();
  if (dout * env_dim < di) {
    throw BadDims("an isometry needs dim(out) * env_dim >= dim(in)");
  }
  Rng rng(seed);
  Matrix g = random_gaussian_matrix(dout * env_dim, di, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix v = qr.householderQ() * Matrix::Identity(dout * env_dim, di);

  auto fn = [&](const Operator& x) {
    Matrix y = v * x.matrix * v.adjoint();
    Matrix z = Matrix::Zero(dout, dout);
    for (long long a = 0; a < dout; ++a) {
      for (long long b = 0; b < dout; ++b) {
        for (long long e = 0; e < env_dim; ++e) {
          z(a, b) += y(a * env_dim + e, b * env_dim + e);
        }
      }
    }
    return Operator(out_space, std::move(z));
  };
  return choi_of_map(fn, in_space, out_space);
}

InstrumentReport validate_instrument(const Instrument& ins, double tol) {
  if (ins.elements.empty()) throw SpaceMismatch("an instrument needs at least one element");
  const ChoiMatrix& first = ins.elements.front();
  for (const auto& e : ins.elements) {
    if (e.in_space.label_set() != first.in_space.label_set() ||
        e.out_space.label_set() != first.out_space.label_set()) {
      throw SpaceMismatch("instrument elements must share their spaces");
    }
  }
  InstrumentReport rep;
  Operator sum = zero_operator(first.op.space);
  double scale = 1.0;
  for (const auto& e : ins.elements) {
    rep.element_min_eigs.push_back(min_eig_hermitian_part(e.op.matrix));
    Operator aligned = align_to(e.op, sum.space);
    sum.matrix += aligned.matrix;
    scale = std::max(scale, e.op.matrix.norm());
  }
  rep.psd_floor = std::max(tol, kPsdRelFloor * scale);
  rep.sum_membership = validate(sum, ins.target.result, tol);
  return rep;
}

Measurement measurement_from_instrument(const Instrument& ins) {
  Measurement m;
  m.target_set = ins.target.s_in;
  for (const auto& e : ins.elements) {
    Operator reduced = e.out_space.labels().empty()
                           ? align_to(e.op, concat(e.in_space, e.out_space))
                           : partial_trace(align_to(e.op, concat(e.in_space, e.out_space)),
                                           e.out_space.label_set());
    // Effect of the induced measurement: adjoint action on the identity.
    Operator effect(e.in_space, reduced.matrix.transpose());
    m.effects.push_back(align_to(effect, ins.target.s_in.space));
  }
  return m;
}

OutcomeReport outcome_probs(const Operator& w, const Measurement& m, double tol) {
  OutcomeReport rep;
  if (w.space.label_set() != m.target_set.space.label_set()) {
    throw SpaceMismatch("operator labels do not match the measured set");
  }
  ValidationReport v = validate(w, m.target_set, tol);
  if (!v.pass()) {
    rep.warnings.push_back(
        "operator is not a member of " + m.target_set.name +
        " (projector residual " + format_real(v.projector_residual) + ", trace residual " +
        format_real(v.trace_residual) + "); probabilities need not be normalized");
  }
  Operator aligned = align_to(w, m.target_set.space);
  for (const auto& effect : m.effects) {
    Operator e = align_to(effect, m.target_set.space);
    rep.probs.push_back((e.matrix.adjoint() * aligned.matrix).trace().real());
  }
  return rep;
}

OpMap support_projector(const ObjectSet& s) {
  MapPredicates preds = s.projector.predicates();
  if (!preds.is_unital || s.gamma.is_zero()) {
    throw NonUnitalProjector(
        "support projector is only canonical when the set contains the full-rank maximally "
        "mixed member");
  }
  // gamma/d * identity is a full-rank member, so the span of member supports
  // is the whole operator space.
  return OpMap(SubsetMap::identity(s.space));
}

Instrument random_instrument(const CompositeSpace& in_space, const CompositeSpace& out_space,
                             int n_outcomes, std::uint64_t seed) {
  if (n_outcomes < 1) throw BadDims("an instrument needs at least one outcome");
  Rng rng(seed);
  ChoiMatrix channel = random_cptp(in_space, out_space, 2, seed ^ 0x9e3779b97f4a7c15ULL);
  const long long dout = out_space.total_dim();

  // Random POVM on the output: normalize random positive operators.
  std::vector<Matrix> effects;
  Matrix total = Matrix::Zero(dout, dout);
  for (int k = 0; k < n_outcomes; ++k) {
    Matrix g = random_gaussian_matrix(dout, dout, rng);
    Matrix p = g * g.adjoint();
    total += p;
    effects.push_back(std::move(p));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(total);
  Matrix inv_sqrt = solver.operatorInverseSqrt();

  Instrument ins;
  ins.target = build_transform_space(state_set(in_space), state_set(out_space));
  CompositeSpace joint = concat(in_space, out_space);
  Operator t_aligned = align_to(channel.op, joint);
  const long long di = in_space.total_dim();
  for (auto& p : effects) {
    Matrix m = inv_sqrt * p * inv_sqrt;
    Eigen::SelfAdjointEigenSolver<Matrix> ms(m);
    Matrix sqrt_m = ms.operatorSqrt();
    // (1_in ⊗ sqrt(M)) T (1_in ⊗ sqrt(M))
    Matrix lift = Matrix::Zero(di * dout, di * dout);
    for (long long a = 0; a < di; ++a) {
      lift.block(a * dout, a * dout, dout, dout) = sqrt_m;
    }
    Matrix big = lift * t_aligned.matrix * lift;
    ins.elements.emplace_back(in_space, out_space, Operator(joint, std::move(big)));
  }
  return ins;
}

}  // namespace hoq
