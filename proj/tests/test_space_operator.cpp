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

#include "hoq/operator.hpp"
#include "hoq/sampling.hpp"

using namespace hoq;

namespace {

Matrix pauli_z() {
  Matrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

}  // namespace

TEST_CASE("composite space bookkeeping") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 3}, {"c", 2}});
  CHECK(s.total_dim() == 12);
  CHECK(s.size() == 3);
  CHECK(s.dim_of("b") == 3);
  CHECK(s.index_of("c") == 2);
  CHECK(s.contains("a"));
  CHECK(!s.contains("x"));
  // First label is most significant: strides are 6, 2, 1.
  CHECK(s.stride(0) == 6);
  CHECK(s.stride(1) == 2);
  CHECK(s.stride(2) == 1);
  CHECK(s.subspace({"a", "c"}).labels() == std::vector<std::string>{"a", "c"});
  CHECK(s.without({"b"}).total_dim() == 4);

  CHECK_THROWS_AS(make_space({{"a", 2}, {"a", 2}}), DuplicateLabel);
  CHECK_THROWS_AS(make_space({{"a", 0}}), NonPositiveDim);
  CHECK_THROWS_AS(s.dim_of("nope"), UnknownLabel);
  CHECK_THROWS_AS(concat(s, make_space({{"a", 2}})), LabelCollision);
}

TEST_CASE("scalar space has dimension one") {
  CompositeSpace empty = make_space({});
  CHECK(empty.total_dim() == 1);
  Operator one = identity_operator(empty);
  CHECK(one.matrix.rows() == 1);
  CHECK(trace(one) == cx(1.0, 0.0));
}

TEST_CASE("tensor and partial trace are mutually consistent") {
  Rng rng(11);
  CompositeSpace sa = make_space({{"a", 2}});
  CompositeSpace sb = make_space({{"b", 3}});
  Operator rho = random_psd(sa, rng);
  Operator sigma = random_hermitian(sb, rng);

  Operator prod = tensor(rho, sigma);
  CHECK(prod.space.labels() == std::vector<std::string>{"a", "b"});
  CHECK(std::abs(trace(prod) - trace(rho) * trace(sigma)) < 1e-12);

  Operator back = partial_trace(prod, {"b"});
  Operator expected = rho;
  expected.matrix *= trace(sigma);
  CHECK(frobenius_distance(back, expected) < 1e-12);
}

TEST_CASE("partial transpose of the unnormalized maximally entangled projector is the swap") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 2}});
  Matrix phi = Matrix::Zero(4, 4);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      phi(j * 2 + j, k * 2 + k) = 1.0;  // |jj><kk|
    }
  }
  Operator pt = partial_transpose(Operator(s, phi), {"b"});
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  CHECK((pt.matrix - swap).norm() < 1e-14);

  // Involution and full transpose factorization.
  Operator twice = partial_transpose(pt, {"b"});
  CHECK((twice.matrix - phi).norm() < 1e-14);
  Rng rng(3);
  Operator x = random_hermitian(s, rng);
  Operator full = partial_transpose(partial_transpose(x, {"a"}), {"b"});
  CHECK((full.matrix - x.matrix.transpose()).norm() < 1e-13);
}

TEST_CASE("trace-and-replace deposits the maximally mixed state") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 3}});
  Rng rng(7);
  Operator x = random_hermitian(s, rng);
  Operator y = trace_and_replace(x, {"b"});
  Operator manual = tensor(partial_trace(x, {"b"}), identity_operator(make_space({{"b", 3}})));
  manual.matrix /= 3.0;
  CHECK(frobenius_distance(y, align_to(manual, s)) < 1e-12);
  // Idempotent and trace preserving.
  CHECK(frobenius_distance(trace_and_replace(y, {"b"}), y) < 1e-12);
  CHECK(std::abs(trace(y) - trace(x)) < 1e-12);
}

TEST_CASE("permute relabels coordinates without changing invariants") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 3}, {"c", 2}});
  Rng rng(5);
  Operator x = random_hermitian(s, rng);
  Operator y = permute(x, {"c", "a", "b"});
  CHECK(y.space.labels() == std::vector<std::string>{"c", "a", "b"});
  CHECK(std::abs(trace(y) - trace(x)) < 1e-12);
  CHECK(std::abs(frobenius_norm(y) - frobenius_norm(x)) < 1e-12);
  // Round trip through align_to.
  CHECK(frobenius_distance(align_to(y, s), x) < 1e-12);
  CHECK_THROWS_AS(permute(x, {"a", "b"}), NotAPermutation);
  CHECK_THROWS_AS(permute(x, {"a", "b", "b"}), NotAPermutation);
  CHECK_THROWS_AS(align_to(x, make_space({{"a", 2}, {"b", 3}})), SpaceMismatch);
}

TEST_CASE("permute agrees with an explicit two-qubit swap") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 2}});
  Operator za = tensor(Operator(make_space({{"a", 2}}), pauli_z()),
                       identity_operator(make_space({{"b", 2}})));
  Operator swapped = permute(za, {"b", "a"});
  Operator manual = tensor(identity_operator(make_space({{"b", 2}})),
                           Operator(make_space({{"a", 2}}), pauli_z()));
  CHECK(frobenius_distance(swapped, manual) < 1e-14);
}

TEST_CASE("spectral helpers on a known diagonal") {
  CompositeSpace s = make_space({{"a", 2}});
  Matrix m(2, 2);
  m << 3.0, 0.0, 0.0, -0.5;
  Operator x(s, m);
  CHECK(min_eigenvalue(x) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(spectral_norm(x) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(hermiticity_defect(x) < 1e-15);
  Matrix nh(2, 2);
  nh << 0.0, 1.0, 0.0, 0.0;
  CHECK(hermiticity_defect(Operator(s, nh)) > 0.5);
}

TEST_CASE("operator JSON round trip is lossless") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 3}});
  Rng rng(9);
  Operator y(s, random_gaussian_matrix(6, 6, rng));
  Operator z = operator_from_json(to_json(y));
  CHECK(z.space == y.space);
  CHECK((z.matrix - y.matrix).norm() == 0.0);  // shortest-round-trip doubles
  CHECK_THROWS_AS(operator_from_json("{not json"), IoError);
  CHECK_THROWS_AS(operator_from_json("{\"labels\":[[\"a\",2]],\"matrix\":[[[1,0]]]}"), IoError);
}

TEST_CASE("basis operators tile the identity") {
  CompositeSpace s = make_space({{"a", 2}, {"b", 2}});
  Matrix sum = Matrix::Zero(4, 4);
  for (long long j = 0; j < 4; ++j) sum += basis_operator(s, j, j).matrix;
  CHECK((sum - Matrix::Identity(4, 4)).norm() < 1e-15);
  CHECK(basis_operator(s, 1, 2).matrix(1, 2) == cx(1.0, 0.0));
}
