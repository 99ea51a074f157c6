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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hoq/transform.hpp"

namespace hoq {

/// Seeded pseudo-random stream with a pinned cross-platform contract: a
/// 64-bit-seeded std::mt19937_64 (whose output sequence the C++ standard
/// specifies exactly) and Box-Muller normals built from its 53-bit uniforms.
/// Equal seeds therefore give equal streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (pairs are generated together).
  double normal();

  std::uint64_t integer() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Matrix of iid standard complex Gaussians (real and imaginary parts N(0,1)).
Matrix random_gaussian_matrix(long long rows, long long cols, Rng& rng);

/// Random Hermitian operator with unit Frobenius norm.
Operator random_hermitian(const CompositeSpace& space, Rng& rng);

/// As above, additionally traceless (trace component removed before
/// normalization).
Operator random_traceless_hermitian(const CompositeSpace& space, Rng& rng);

/// Random positive semidefinite operator G G-dagger, normalized to trace 1.
Operator random_psd(const CompositeSpace& space, Rng& rng);

/// Interior member of an object set:
///   W = gamma/d * 1 + eps * V,   V = P[H] minus its trace component,
/// with H random traceless Hermitian and eps half the largest step keeping W
/// positive semidefinite (one eigenvalue computation). Deterministic given the
/// seed; validate(W, s) passes. Throws NonUnitalProjector when the projector
/// does not fix the identity but the set demands positivity (there is then no
/// canonical interior point); for sets without the positivity requirement a
/// minimum-norm affine member built from the image basis is returned instead.
Operator random_member(const ObjectSet& s, std::uint64_t seed);

/// Choi matrix of a random channel: a Gaussian matrix orthonormalized into an
/// isometry V : in -> out (x) env, followed by tracing out env. env_dim >= 1
/// and dim(out) * env_dim >= dim(in) required (BadDims). env_dim = 1 gives a
/// random isometry/unitary channel (Choi rank 1).
ChoiMatrix random_cptp(const CompositeSpace& in_space, const CompositeSpace& out_space,
                       long long env_dim, std::uint64_t seed);

/// A probabilistic transformation: completely positive pieces, one per
/// outcome, whose sum satisfies the deterministic characterization `target`.
struct Instrument {
  std::vector<ChoiMatrix> elements;
  TransformSpec target;
};

struct InstrumentReport {
  std::vector<double> element_min_eigs;
  ValidationReport sum_membership;
  double psd_floor = 0.0;

  bool pass() const {
    for (double e : element_min_eigs) {
      if (e < -psd_floor) return false;
    }
    return sum_membership.pass();
  }
};

/// Per-element positivity plus membership of the element sum in the target's
/// result set. SpaceMismatch if the elements disagree on their spaces.
InstrumentReport validate_instrument(const Instrument& ins, double tol = kDefaultTol);

/// Effects paired with members of `target_set` to produce outcome
/// probabilities; the effect sum lies in the dual of the target set.
struct Measurement {
  std::vector<Operator> effects;
  ObjectSet target_set;
};

/// Effects of the measurement induced by an instrument: the adjoint action of
/// each piece on the identity, i.e. M_k = (tr_out T_k)^transpose. Probability
/// reproduction tr[M_k W] = tr[T_k-applied-to-W] holds by construction.
Measurement measurement_from_instrument(const Instrument& ins);

struct OutcomeReport {
  std::vector<double> probs;
  std::vector<std::string> warnings;  // non-membership of W is a warning only

  double sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
  }
};

/// p_k = tr[M_k W]. W is validated against the measurement's target set
/// first; failures are reported as warnings, not errors, since probing
/// off-set operators is legitimate. SpaceMismatch on differing label sets.
OutcomeReport outcome_probs(const Operator& w, const Measurement& m, double tol = kDefaultTol);

/// Projector onto the span of the supports of the set's members. When the
/// projector fixes the identity and gamma != 0, the maximally mixed member
/// gamma/d * 1 is full rank, so this span is everything and the identity map
/// is returned (exact). NonUnitalProjector otherwise.
OpMap support_projector(const ObjectSet& s);

/// Random channel-type instrument: a random channel split by a random POVM on
/// its output, targeting the state -> state transformation at these dims.
Instrument random_instrument(const CompositeSpace& in_space, const CompositeSpace& out_space,
                             int n_outcomes, std::uint64_t seed);

}  // namespace hoq
