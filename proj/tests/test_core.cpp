// Copyright 2026 The qpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qpc/core.hpp"
#include "qpc/phase_space.hpp"
#include "qpc/sampling.hpp"

namespace qpc {
namespace {

const double kSqrt3 = std::sqrt(3.0);

TEST(BlochToDensity, MaximallyMixed) {
  const DensityMatrixd rho = bloch_to_density(BlochVectord::Zero());
  EXPECT_LT((rho - 0.5 * Matrix2cd::Identity()).norm(), 1e-15);
}

TEST(BlochToDensity, ZEigenstate) {
  const DensityMatrixd rho = bloch_to_density(BlochVectord(0, 0, 1));
  Matrix2cd expected = Matrix2cd::Zero();
  expected(0, 0) = 1;
  EXPECT_LT((rho - expected).norm(), 1e-15);
}

TEST(BlochToDensity, MatchesExplicitPauliSum) {
  Sampler rng(7);
  for (int i = 0; i < 200; ++i) {
    const BlochVectord r = 1.3 * rng.ball();  // unphysical inputs are representable
    EXPECT_LT((bloch_to_density(r) - oracle::density(r)).norm(), 1e-15);
  }
}

TEST(BlochToDensity, ChipStateEigenvalues) {
  const BlochVectord r(kSqrt3 / 5, kSqrt3 / 15, 1 / kSqrt3);
  const DensityMatrixd rho = bloch_to_density(r);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-15);
  const ProbVector4d prob(Vector4<double>(2.0 / 15, 1.0 / 5, 4.0 / 15, 2.0 / 5), ProbMode::NonNegative);
  const auto closed = sic_eigenvalues(prob);
  const Eigen::Vector2d generic = oracle::eigenvalues(rho);
  EXPECT_NEAR(closed.lambda_minus, generic(0), 1e-12);
  EXPECT_NEAR(closed.lambda_plus, generic(1), 1e-12);
  const auto direct = eigenvalues_2x2(rho);
  EXPECT_NEAR(direct.lambda_minus, generic(0), 1e-12);
  EXPECT_NEAR(direct.lambda_plus, generic(1), 1e-12);
}

TEST(DensityToBloch, KnownStates) {
  EXPECT_LT(density_to_bloch(Matrix2cd(0.5 * Matrix2cd::Identity())).norm(), 1e-15);
  Matrix2cd up = Matrix2cd::Zero();
  up(0, 0) = 1;
  EXPECT_LT((density_to_bloch(up) - BlochVectord(0, 0, 1)).norm(), 1e-15);
}

TEST(DensityToBloch, MatchesTraceOracle) {
  Sampler rng(11);
  for (int i = 0; i < 500; ++i) {
    const BlochVectord r = rng.ball();
    const DensityMatrixd rho = oracle::density(r);
    EXPECT_LT((density_to_bloch(rho) - oracle::bloch(rho)).norm(), 1e-14);
    EXPECT_LT((bloch_to_density(density_to_bloch(rho)) - rho).norm(), 1e-12);
  }
}

TEST(DensityToBloch, SampleStateGivesSicProbabilities) {
  const BlochVectord r(0.1, 0.2, 0.3);
  const DensityMatrixd rho = bloch_to_density(r);
  const auto& b = basis(BasisKind::QBismSIC);
  const auto prob = density_to_prob(rho, b);
  // Row sums are the coarse z outcomes, column sums the coarse x outcomes.
  const double rescaled_z = (0.5 * (1 - r(2)) - 0.5) / kSqrt3 + 0.5;
  const double rescaled_x = (0.5 * (1 - r(0)) - 0.5) / kSqrt3 + 0.5;
  EXPECT_NEAR(prob[0] + prob[1], rescaled_z, 1e-12);
  EXPECT_NEAR(prob[0] + prob[2], rescaled_x, 1e-12);
  EXPECT_LT((density_to_bloch(rho) - r).norm(), 1e-15);
}

TEST(DensityToBloch, RejectsNonHermitian) {
  Matrix2cd m = 0.5 * Matrix2cd::Identity();
  m(0, 1) = 0.3;
  try {
    density_to_bloch(m);
    FAIL() << "expected NonHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonHermitian);
  }
}

TEST(DensityToBloch, RejectsWrongTrace) {
  const Matrix2cd m = Matrix2cd::Identity();
  try {
    density_to_bloch(m);
    FAIL() << "expected TraceNotOne";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TraceNotOne);
  }
}

TEST(Eigenvalues, MixedAndPure) {
  const auto mixed = eigenvalues_2x2(Matrix2cd(0.5 * Matrix2cd::Identity()));
  EXPECT_NEAR(mixed.lambda_plus, 0.5, 1e-15);
  EXPECT_NEAR(mixed.lambda_minus, 0.5, 1e-15);
  const auto pure = eigenvalues_2x2(bloch_to_density(BlochVectord(0.6, 0, 0.8)));
  EXPECT_NEAR(pure.lambda_plus, 1.0, 1e-15);
  EXPECT_NEAR(pure.lambda_minus, 0.0, 1e-15);
}

TEST(Eigenvalues, UniformSicVector) {
  const auto ev = sic_eigenvalues(ProbVector4d::uniform());
  EXPECT_NEAR(ev.lambda_plus, 0.5, 1e-15);
  EXPECT_NEAR(ev.lambda_minus, 0.5, 1e-15);
}

TEST(Eigenvalues, RejectsNonHermitian) {
  Matrix2cd m = Matrix2cd::Zero();
  m(0, 1) = 1;
  EXPECT_THROW(eigenvalues_2x2(m), Error);
}

TEST(Eigenvalues, AgreeWithGenericSolverOnRandomHermitian) {
  Sampler rng(13);
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrixd rho = bloch_to_density(BlochVectord(2.0 * rng.ball()));
    const auto ev = eigenvalues_2x2(rho);
    const Eigen::Vector2d generic = oracle::eigenvalues(rho);
    EXPECT_NEAR(ev.lambda_minus, generic(0), 1e-12);
    EXPECT_NEAR(ev.lambda_plus, generic(1), 1e-12);
    EXPECT_GE(ev.lambda_plus, ev.lambda_minus);
  }
}

TEST(IsPhysical, Examples) {
  EXPECT_TRUE(is_physical(Matrix2cd(0.5 * Matrix2cd::Identity())));
  EXPECT_FALSE(is_physical(bloch_to_density(BlochVectord(1.2, 0, 0))));
  // A tetrahedron vertex scaled onto the unit sphere.
  const BlochVectord vertex = BlochVectord::Constant(-0.5) * (2 / kSqrt3);
  EXPECT_NEAR(vertex.norm(), 1.0, 1e-15);
  EXPECT_TRUE(is_physical(bloch_to_density(vertex)));
  EXPECT_TRUE(bloch_is_pure(vertex));
}

TEST(IsPhysical, EquivalentToBallAcrossTheSphere) {
  Sampler rng(17);
  for (int i = 0; i < 500; ++i) {
    const BlochVectord dir = rng.sphere();
    for (double radius : {0.9, 1 - 1e-7, 1 + 1e-7, 1.1}) {
      const bool inside = radius <= 1;
      EXPECT_EQ(is_physical(bloch_to_density(BlochVectord(radius * dir))), inside) << radius;
      EXPECT_EQ(bloch_is_physical(BlochVectord(radius * dir)), inside) << radius;
    }
  }
}

TEST(VonNeumannEntropy, Limits) {
  EXPECT_NEAR(von_neumann_entropy(Matrix2cd(0.5 * Matrix2cd::Identity())), 1.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(bloch_to_density(BlochVectord(0, 1, 0))), 0.0, 1e-15);
  const double r = 0.4;
  EXPECT_NEAR(von_neumann_entropy(bloch_to_density(BlochVectord(0, 0, r))), oracle::h2((1 + r) / 2), 1e-14);
}

TEST(Pauli, AlgebraicIdentities) {
  for (auto a : {Axis::X, Axis::Y, Axis::Z}) {
    const Matrix2cd s = pauli<double>(a);
    EXPECT_LT((s * s - Matrix2cd::Identity()).norm(), 1e-15);
    EXPECT_LT((s - oracle::sigma(axis_index(a))).norm(), 1e-15);
  }
}

TEST(LongDouble, RoundTripAtExtendedPrecision) {
  using Ld = long double;
  const BlochVector<Ld> r(Ld(0.1), Ld(-0.2), Ld(0.3));
  const DensityMatrix<Ld> rho = bloch_to_density(r);
  EXPECT_LT(static_cast<double>((density_to_bloch(rho) - r).norm()), 1e-18);
  const auto ev = eigenvalues_2x2(rho);
  EXPECT_LT(static_cast<double>(std::abs(ev.lambda_plus + ev.lambda_minus - 1)), 1e-18);
  const auto prob = density_to_prob(rho, basis<Ld>(BasisKind::QBismSIC));
  EXPECT_LT(static_cast<double>((prob_to_bloch(prob) - r).norm()), 1e-17);
}

}  // namespace
}  // namespace qpc
