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
#include "qpc/channels.hpp"
#include "qpc/sampling.hpp"

namespace qpc {
namespace {

const double kSqrt3 = std::sqrt(3.0);

// Textbook Bloch-ball maps, written independently of the Kraus sets.
BlochVectord bloch_map(ChannelKind kind, double xi, const BlochVectord& r) {
  const double c = 1 - 2 * xi;
  const double s = std::sqrt(1 - xi);
  switch (kind) {
    case ChannelKind::BitFlip: return {r(0), c * r(1), c * r(2)};
    case ChannelKind::PhaseFlip: return {c * r(0), c * r(1), r(2)};
    case ChannelKind::BitPhaseFlip: return {c * r(0), r(1), c * r(2)};
    case ChannelKind::Depolarizing: return (1 - xi) * r;
    case ChannelKind::AmplitudeDamping: return {s * r(0), s * r(1), (1 - xi) * r(2) + xi};
    case ChannelKind::PhaseDamping: return {s * r(0), s * r(1), r(2)};
  }
  return r;
}

double residual(const BlochVectord& r) { return kSqrt3 * r(1) - r(0) * r(2); }

TEST(Channels, NamesRoundTrip) {
  for (auto kind : kAllChannels) EXPECT_EQ(parse_channel(to_string(kind)), kind);
  EXPECT_FALSE(parse_channel("erasure").has_value());
}

TEST(Channels, KrausCompleteness) {
  for (auto kind : kAllChannels) {
    for (double xi : {0.0, 0.1, 1.0 / 3, 0.9, 1.0}) {
      EXPECT_LT(make_channel(kind, xi).completeness_error(), 1e-15) << to_string(kind) << " xi=" << xi;
    }
  }
}

TEST(Channels, RejectsRateOutsideUnitInterval) {
  try {
    make_channel(ChannelKind::BitFlip, 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
  }
}

TEST(Channels, ZeroRateIsIdentity) {
  Sampler rng(41);
  for (auto kind : kAllChannels) {
    const auto ch = make_channel(kind, 0.0);
    for (int i = 0; i < 20; ++i) {
      const DensityMatrixd rho = oracle::density(rng.ball());
      EXPECT_LT((apply_channel(ch, rho) - rho).norm(), 1e-15);
    }
  }
}

TEST(Channels, MatchBlochBallMaps) {
  Sampler rng(42);
  for (auto kind : kAllChannels) {
    for (int i = 0; i < 200; ++i) {
      const double xi = rng.uniform();
      const BlochVectord r = rng.ball();
      const auto out = apply_channel(make_channel(kind, xi), oracle::density(r));
      EXPECT_LT((oracle::bloch(out) - bloch_map(kind, xi, r)).norm(), 1e-14) << to_string(kind);
      EXPECT_NEAR(out.trace().real(), 1.0, 1e-14);
      EXPECT_GE(oracle::eigenvalues(out)(0), -1e-14);
    }
  }
}

TEST(Channels, AmplitudeDampingFullRateIsGroundState) {
  Sampler rng(43);
  const auto ch = make_channel(ChannelKind::AmplitudeDamping, 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto out = apply_channel(ch, oracle::density(rng.ball()));
    EXPECT_LT((oracle::bloch(out) - BlochVectord(0, 0, 1)).norm(), 1e-15);
    EXPECT_NEAR((out * out).trace().real(), 1.0, 1e-15);
  }
}

TEST(Channels, PhaseDampingFullRateKeepsOnlyZ) {
  const BlochVectord r = chip_bloch(ChipPointd{0.4, 0.6});
  const BlochVectord out = chip_image(ChannelKind::PhaseDamping, 1.0, 0.4, 0.6);
  EXPECT_LT((out - BlochVectord(0, 0, r(2))).norm(), 1e-15);
  EXPECT_NEAR(preserves_chip(ChannelKind::PhaseDamping).reparametrize(0.4, 0.6, 1.0).second, 0.5, 1e-15);
}

TEST(ChipImageTable, AgreesWithKrausWhereExpected) {
  for (auto kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::Depolarizing,
                    ChannelKind::PhaseDamping}) {
    for (const auto& [p, q] : chip_grid<double>(15)) {
      for (double xi : {0.0, 0.25, 0.8}) {
        EXPECT_LT((chip_image_table(kind, xi, p, q) - chip_image(kind, xi, p, q)).norm(), 1e-14)
            << to_string(kind);
      }
    }
  }
}

TEST(ChipImageTable, BitPhaseFlipXHasOppositeSign) {
  for (const auto& [p, q] : chip_grid<double>(15)) {
    for (double xi : {0.0, 0.25, 0.8}) {
      const BlochVectord table = chip_image_table(ChannelKind::BitPhaseFlip, xi, p, q);
      const BlochVectord kraus = chip_image(ChannelKind::BitPhaseFlip, xi, p, q);
      EXPECT_NEAR(table(1), kraus(1), 1e-14);
      EXPECT_NEAR(table(2), kraus(2), 1e-14);
      EXPECT_NEAR(table(0), -kraus(0), 1e-14);
      // |dx| = 2 sqrt3 |f_q f_xi|
      EXPECT_NEAR(std::abs(table(0) - kraus(0)), 2 * kSqrt3 * std::abs((2 * q - 1) * (2 * xi - 1)), 1e-14);
    }
  }
}

TEST(ChipImageTable, AmplitudeDampingXUsesWrongFactor) {
  for (const auto& [p, q] : chip_grid<double>(15)) {
    for (double xi : {0.0, 0.25, 0.8, 1.0}) {
      const BlochVectord table = chip_image_table(ChannelKind::AmplitudeDamping, xi, p, q);
      const BlochVectord kraus = chip_image(ChannelKind::AmplitudeDamping, xi, p, q);
      EXPECT_NEAR(table(1), kraus(1), 1e-14);
      EXPECT_NEAR(table(2), kraus(2), 1e-14);
      // The table scales x by 1 - xi where the map scales it by sqrt(1 - xi).
      const double dx = kSqrt3 * (2 * q - 1) * (std::sqrt(1 - xi) - (1 - xi));
      EXPECT_NEAR(table(0) - kraus(0), dx, 1e-14);
    }
  }
}

TEST(Preservation, ReparametrizationMatchesKraus) {
  for (auto kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip, ChannelKind::PhaseDamping}) {
    const auto pres = preserves_chip(kind);
    ASSERT_TRUE(pres.preserves);
    EXPECT_FALSE(pres.witness.has_value());
    for (const auto& [p, q] : chip_grid<double>(15)) {
      for (double xi : {0.1, 0.5, 0.9}) {
        const auto [p2, q2] = pres.reparametrize(p, q, xi);
        const BlochVectord image = chip_image(kind, xi, p, q);
        EXPECT_LT((chip_bloch(ChipPointd{p2, q2}) - image).norm(), 1e-14) << to_string(kind);
        EXPECT_NEAR(residual(image), 0.0, 1e-14);
      }
    }
  }
}

TEST(Preservation, WitnessesForOtherChannels) {
  for (auto kind : {ChannelKind::BitPhaseFlip, ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping}) {
    const auto pres = preserves_chip(kind);
    EXPECT_FALSE(pres.preserves);
    ASSERT_TRUE(pres.witness.has_value());
    const auto& w = *pres.witness;
    EXPECT_NEAR(w.xi, 1.0 / 3, 1e-15);
    const BlochVectord image = bloch_map(kind, w.xi, chip_bloch(ChipPointd{w.p, w.q}));
    EXPECT_NEAR(w.residual, residual(image), 1e-14) << to_string(kind);
    EXPECT_GT(std::abs(w.residual), 1e-2) << to_string(kind);
  }
}

TEST(Preservation, ResidualsAtFixedPoint) {
  // At (p, q) = (0.4, 0.6): x = -0.2 sqrt3, z = 0.2 sqrt3, xz = -0.12.
  const double xi = 1.0 / 3, xz = -0.12, x = -0.2 * kSqrt3, z = 0.2 * kSqrt3;
  const double c = 1 - 2 * xi, s = std::sqrt(1 - xi);
  EXPECT_NEAR(residual(chip_image(ChannelKind::Depolarizing, xi, 0.4, 0.6)), xi * (1 - xi) * xz, 1e-15);
  EXPECT_NEAR(residual(chip_image(ChannelKind::BitPhaseFlip, xi, 0.4, 0.6)), (1 - c * c) * xz, 1e-15);
  EXPECT_NEAR(residual(chip_image(ChannelKind::AmplitudeDamping, xi, 0.4, 0.6)), s * xi * x * (z - 1), 1e-15);
}

TEST(ChipGrid, CoversPhysicalChip) {
  const auto pts = chip_grid<double>(11);
  EXPECT_EQ(pts.size(), 121u);
  for (const auto& [p, q] : pts) EXPECT_LE(chip_bloch(ChipPointd{p, q}).norm(), 1 + 1e-12);
  EXPECT_EQ(chip_grid<double>(1).size(), 1u);
}

}  // namespace
}  // namespace qpc
