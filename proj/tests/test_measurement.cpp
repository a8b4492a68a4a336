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

#include <algorithm>
#include <cmath>
#include <set>

#include "oracles.hpp"
#include "qpc/measurement.hpp"
#include "qpc/sampling.hpp"

namespace qpc {
namespace {

const double kSqrt3 = std::sqrt(3.0);

DensityMatrixd chip_state() {
  return oracle::density(BlochVectord(kSqrt3 / 5, kSqrt3 / 15, 1 / kSqrt3));
}

TEST(QbismPovm, FirstElementEntries) {
  const auto& q = qbism_povm<double>().elements;
  ASSERT_EQ(q.size(), 4u);
  EXPECT_NEAR(q[0](0, 0).real(), (3 - kSqrt3) / 12, 1e-15);
  EXPECT_NEAR(q[0](1, 1).real(), (3 + kSqrt3) / 12, 1e-15);
  EXPECT_NEAR(std::abs(q[0](0, 1)), std::sqrt(6.0) / 12, 1e-15);
}

TEST(QbismPovm, CompleteAndPositive) {
  const auto& povm = qbism_povm<double>();
  EXPECT_LT(povm.completeness_error(), 1e-15);
  EXPECT_TRUE(povm.is_valid());
  for (const auto& e : povm.elements) {
    EXPECT_NEAR(e.trace().real(), 0.5, 1e-15);
    EXPECT_NEAR(oracle::eigenvalues(e)(0), 0.0, 1e-15);
  }
}

TEST(QbismPovm, PairwiseOverlapIsSic) {
  // Tr(Q_i Q_j) = (2 delta_ij + 1) / 12 for a SIC scaled by one half.
  const auto& q = qbism_povm<double>().elements;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR((q[i] * q[j]).trace().real(), (i == j ? 3.0 : 1.0) / 12, 1e-15);
    }
  }
}

TEST(Born, MaximallyMixedGivesQuarter) {
  const auto probs = born_probabilities(qbism_povm<double>(), DensityMatrixd(identity2<double>() / 2));
  for (double v : probs) EXPECT_NEAR(v, 0.25, 1e-15);
}

TEST(Born, MatchesOracleOnRandomStates) {
  Sampler rng(31);
  const auto& povm = qbism_povm<double>();
  for (int i = 0; i < 500; ++i) {
    const DensityMatrixd rho = oracle::density(rng.ball());
    const auto probs = born_probabilities(povm, rho);
    const auto expected = oracle::born(povm.elements, rho);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(probs[k], expected[k], 1e-15);
    EXPECT_NEAR(probs[0] + probs[1] + probs[2] + probs[3], 1.0, 1e-14);
  }
}

TEST(CoarsePovm, ValidForEachAxis) {
  for (auto axis : {Axis::X, Axis::Y, Axis::Z}) {
    const auto povm = coarse_povm<double>(axis);
    ASSERT_EQ(povm.elements.size(), 2u);
    EXPECT_LT(povm.completeness_error(), 1e-15);
    EXPECT_TRUE(povm.is_valid());
  }
}

TEST(CoarsePovm, BlochVectorsArePlusMinusAxisOverRootThree) {
  for (auto axis : {Axis::X, Axis::Y, Axis::Z}) {
    const auto povm = coarse_povm<double>(axis);
    std::set<int> signs;
    for (const auto& e : povm.elements) {
      // E = (I + s.sigma) / 2 with |s| = 1/sqrt3 along the axis.
      const BlochVectord s = oracle::bloch(e);
      BlochVectord expected = BlochVectord::Zero();
      const int sign = s(axis_index(axis)) > 0 ? 1 : -1;
      expected(axis_index(axis)) = sign / kSqrt3;
      EXPECT_LT((s - expected).norm(), 1e-15);
      EXPECT_NEAR(e.trace().real(), 1.0, 1e-15);
      signs.insert(sign);
    }
    EXPECT_EQ(signs, (std::set<int>{-1, 1}));
  }
}

TEST(CoarsePovm, ChipStateOutcomes) {
  const auto z = born_probabilities(coarse_povm<double>(Axis::Z), chip_state());
  EXPECT_NEAR(z[0], 1.0 / 3, 1e-15);
  EXPECT_NEAR(z[1], 2.0 / 3, 1e-15);
  const auto x = born_probabilities(coarse_povm<double>(Axis::X), chip_state());
  EXPECT_NEAR(x[0], 0.4, 1e-15);
  EXPECT_NEAR(x[1], 0.6, 1e-15);
}

TEST(CoarsePovm, UnsharpPauliRelation) {
  // The coarse outcome is a Pauli measurement blurred towards one half.
  Sampler rng(32);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrixd rho = oracle::density(rng.ball());
    for (auto axis : {Axis::X, Axis::Z}) {
      const double sharp = pauli_probabilities(rho, axis).probs[0];
      const double coarse = born_probabilities(coarse_povm<double>(axis), rho)[0];
      EXPECT_NEAR(coarse, rescale_projective(sharp), 1e-14);
    }
  }
}

TEST(PauliProbabilities, Examples) {
  const auto z = pauli_probabilities(chip_state(), Axis::Z);
  EXPECT_NEAR(z.probs[0], (1 - 1 / kSqrt3) / 2, 1e-15);
  EXPECT_NEAR(z.probs[1], (1 + 1 / kSqrt3) / 2, 1e-15);
  const auto up = pauli_probabilities(oracle::density(BlochVectord(0, 0, 1)), Axis::Z);
  EXPECT_NEAR(up.probs[0], 0.0, 1e-15);
  EXPECT_NEAR(up.probs[1], 1.0, 1e-15);
}

TEST(PauliProbabilities, RejectsUnphysical) {
  try {
    pauli_probabilities(DensityMatrixd(oracle::density(BlochVectord(0, 0, 1.5))), Axis::Z);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unphysical);
  }
}

TEST(Marginals, RowsAndColumns) {
  const ProbVector4d v(Vector4<double>(0.1, 0.2, 0.3, 0.4), ProbMode::NonNegative);
  const auto m = marginals(v);
  EXPECT_NEAR(m.row[0], 0.3, 1e-15);
  EXPECT_NEAR(m.row[1], 0.7, 1e-15);
  EXPECT_NEAR(m.col[0], 0.4, 1e-15);
  EXPECT_NEAR(m.col[1], 0.6, 1e-15);
}

TEST(Marginals, ChipProductRecoversParameters) {
  Sampler rng(33);
  for (int i = 0; i < 200; ++i) {
    const double p = rng.uniform(), q = rng.uniform();
    const auto m = marginals(outer_product(p, q));
    EXPECT_NEAR(m.row[0], p, 1e-15);
    EXPECT_NEAR(m.col[0], q, 1e-15);
  }
}

TEST(Reconstruct, WorkedExample) {
  const auto z = pauli_probabilities(chip_state(), Axis::Z).probs[0];
  const auto x = pauli_probabilities(chip_state(), Axis::X).probs[0];
  const auto rec = reconstruct_from_projective(z, x);
  EXPECT_TRUE(rec.physical);
  EXPECT_NEAR(rec.p, 1.0 / 3, 1e-15);
  EXPECT_NEAR(rec.q, 0.4, 1e-15);
  const Vector4<double> expected(2.0 / 15, 1.0 / 5, 4.0 / 15, 2.0 / 5);
  EXPECT_LT((rec.prob.values() - expected).norm(), 1e-15);
  EXPECT_LT((rec.rho - chip_state()).norm(), 1e-15);
  EXPECT_EQ(rec.orientation, Orientation::O1);
  EXPECT_NO_THROW(rec.require_physical());
}

TEST(Reconstruct, RoundTripOverChip) {
  const auto [lo, hi] = qbism_support<double>();
  Sampler rng(34);
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.uniform(lo, hi);
    const double qa = boundary_q(p, Branch::Minus, BasisKind::QBismSIC);
    const double qb = boundary_q(p, Branch::Plus, BasisKind::QBismSIC);
    const double q = rng.uniform(qa, qb);
    const BlochVectord r = chip_bloch(ChipPointd{p, q});
    const DensityMatrixd rho = oracle::density(r);
    const auto rec = reconstruct_from_projective(pauli_probabilities(rho, Axis::Z).probs[0],
                                                 pauli_probabilities(rho, Axis::X).probs[0]);
    EXPECT_TRUE(rec.physical);
    EXPECT_NEAR(rec.p, p, 1e-12);
    EXPECT_NEAR(rec.q, q, 1e-12);
    EXPECT_LT((rec.bloch - r).norm(), 1e-12);
  }
}

TEST(Reconstruct, OtherAxisPairs) {
  // Measuring (X, Y) leaves z to the third chip's surface equation.
  const BlochVectord r = chip_bloch(ChipPointd{0.4, 0.55, Orientation::O3});
  const DensityMatrixd rho = oracle::density(r);
  const auto rec = reconstruct_from_projective(pauli_probabilities(rho, Axis::X).probs[0],
                                               pauli_probabilities(rho, Axis::Y).probs[0],
                                               {Axis::X, Axis::Y});
  EXPECT_EQ(rec.orientation, Orientation::O3);
  EXPECT_TRUE(rec.physical);
  EXPECT_LT((rec.bloch - r).norm(), 1e-12);
  EXPECT_THROW(reconstruct_from_projective(0.3, 0.3, {Axis::X, Axis::X}), Error);
}

TEST(Reconstruct, NonChipDataFlaggedUnphysical) {
  // Two sharp outcomes force |r| > 1 once the third component is filled in.
  const auto rec = reconstruct_from_projective(0.0, 0.0);
  EXPECT_FALSE(rec.physical);
  EXPECT_GT(rec.bloch.norm(), 1.0);
  try {
    rec.require_physical();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unphysical);
  }
}

TEST(Reconstruct, OffChipStateIsNotRecovered) {
  const BlochVectord r(0.2, 0.5, -0.3);
  const DensityMatrixd rho = oracle::density(r);
  const auto rec = reconstruct_from_projective(pauli_probabilities(rho, Axis::Z).probs[0],
                                               pauli_probabilities(rho, Axis::X).probs[0]);
  EXPECT_GT((rec.bloch - r).norm(), 0.1);
  EXPECT_NEAR(rec.bloch(0), r(0), 1e-15);
  EXPECT_NEAR(rec.bloch(2), r(2), 1e-15);
}

TEST(Reconstruct, RejectsOutOfRangeInput) {
  try {
    reconstruct_from_projective(1.2, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

}  // namespace
}  // namespace qpc
