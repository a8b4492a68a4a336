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

// Single-qubit noise channels in Kraus form and their action on the chip.
//
// chip_image() goes through the Kraus operators and is authoritative.
// chip_image_table() evaluates the published closed forms literally; two of
// them (BitPhaseFlip x sign, AmplitudeDamping x factor) disagree with the
// Kraus maps, and the tests pin the size of that disagreement.

#ifndef QPC_CHANNELS_HPP_
#define QPC_CHANNELS_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qpc/chip.hpp"

namespace qpc {

enum class ChannelKind { BitFlip, PhaseFlip, BitPhaseFlip, Depolarizing, AmplitudeDamping, PhaseDamping };

inline constexpr std::array<ChannelKind, 6> kAllChannels{
    ChannelKind::BitFlip,      ChannelKind::PhaseFlip,        ChannelKind::BitPhaseFlip,
    ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping};

constexpr std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bit-flip";
    case ChannelKind::PhaseFlip: return "phase-flip";
    case ChannelKind::BitPhaseFlip: return "bit-phase-flip";
    case ChannelKind::Depolarizing: return "depolarizing";
    case ChannelKind::AmplitudeDamping: return "amplitude-damping";
    case ChannelKind::PhaseDamping: return "phase-damping";
  }
  return "";
}

inline std::optional<ChannelKind> parse_channel(std::string_view name) {
  for (auto kind : kAllChannels) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

template <typename Scalar>
struct KrausChannel {
  ChannelKind kind;
  Scalar xi;
  std::vector<Matrix2c<Scalar>> kraus;

  // Largest entry of sum(K^dag K) - I.
  Scalar completeness_error() const {
    Matrix2c<Scalar> total = -identity2<Scalar>();
    for (const auto& k : kraus) total += k.adjoint() * k;
    return total.cwiseAbs().maxCoeff();
  }
};

template <typename Scalar>
KrausChannel<Scalar> make_channel(ChannelKind kind, Scalar xi) {
  detail::require_unit_interval(xi, "error rate xi");
  const Matrix2c<Scalar> id = identity2<Scalar>();
  const Matrix2c<Scalar> sx = pauli<Scalar>(Axis::X);
  const Matrix2c<Scalar> sy = pauli<Scalar>(Axis::Y);
  const Matrix2c<Scalar> sz = pauli<Scalar>(Axis::Z);
  const Scalar a = std::sqrt(xi);
  const Scalar b = std::sqrt(1 - xi);
  const Complex<Scalar> i(0, 1);

  std::vector<Matrix2c<Scalar>> ks;
  switch (kind) {
    case ChannelKind::BitFlip: ks = {a * sx, b * id}; break;
    case ChannelKind::PhaseFlip: ks = {a * sz, b * id}; break;
    case ChannelKind::BitPhaseFlip: ks = {a * sy, b * id}; break;
    case ChannelKind::Depolarizing: {
      const Scalar w = std::sqrt(xi / 4);
      ks = {w * sx, w * sy, w * sz, std::sqrt(1 - 3 * xi / 4) * id};
      break;
    }
    case ChannelKind::AmplitudeDamping:
      ks = {(1 - b) / 2 * sz + (1 + b) / 2 * id, a / 2 * sx + i * (a / 2) * sy};
      break;
    case ChannelKind::PhaseDamping:
      ks = {(1 - b) / 2 * sz + (1 + b) / 2 * id, a / 2 * id - a / 2 * sz};
      break;
  }
  return {kind, xi, std::move(ks)};
}

// sum_i K_i rho K_i^dag
template <typename Scalar>
DensityMatrix<Scalar> apply_channel(const KrausChannel<Scalar>& ch, const DensityMatrix<Scalar>& rho) {
  DensityMatrix<Scalar> out = DensityMatrix<Scalar>::Zero();
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

// Image of the O1 QBism chip point (p, q) under the channel, via Kraus.
template <typename Scalar>
BlochVector<Scalar> chip_image(ChannelKind kind, Scalar xi, Scalar p, Scalar q) {
  const auto ch = make_channel(kind, xi);
  const BlochVector<Scalar> r = chip_bloch(ChipPoint<Scalar>{p, q});
  return density_to_bloch(apply_channel(ch, bloch_to_density(r)));
}

// Published closed forms with f_p = 2p-1, f_q = 2q-1, f_xi = 2xi-1.
template <typename Scalar>
BlochVector<Scalar> chip_image_table(ChannelKind kind, Scalar xi, Scalar p, Scalar q) {
  detail::require_unit_interval(xi, "error rate xi");
  detail::require_unit_interval(p, "p");
  detail::require_unit_interval(q, "q");
  const Scalar r3 = std::sqrt(Scalar(3));
  const Scalar fp = 2 * p - 1, fq = 2 * q - 1, fx = 2 * xi - 1;
  const Scalar s = std::sqrt(1 - xi);
  BlochVector<Scalar> v;
  switch (kind) {
    case ChannelKind::BitFlip: v << -fq, -fp * fq * fx, fp * fx; break;
    case ChannelKind::PhaseFlip: v << fq * fx, -fp * fq * fx, -fp; break;
    case ChannelKind::BitPhaseFlip: v << -fq * fx, fp * fq, fp * fx; break;
    case ChannelKind::Depolarizing: v << -fq * (1 - xi), fp * fq * (1 - xi), -fp * (1 - xi); break;
    case ChannelKind::AmplitudeDamping: v << -fq * (1 - xi), fp * fq * s, xi / r3 - fp * (1 - xi); break;
    case ChannelKind::PhaseDamping: v << -fq * s, fp * fq * s, -fp; break;
  }
  return r3 * v;
}

template <typename Scalar>
struct PreservationWitness {
  Scalar p;
  Scalar q;
  Scalar xi;
  Scalar residual;  // sqrt3 y - x z after the channel
};

template <typename Scalar>
struct ChipPreservation {
  bool preserves;
  // (p, q, xi) -> (p', q') for channels that keep the chip.
  std::function<std::pair<Scalar, Scalar>(Scalar, Scalar, Scalar)> reparametrize;
  std::optional<PreservationWitness<Scalar>> witness;
};

// grid x grid points covering the physical QBism O1 chip: p spans the
// support, q spans the boundary interval at that p.
template <typename Scalar>
std::vector<std::pair<Scalar, Scalar>> chip_grid(int grid) {
  std::vector<std::pair<Scalar, Scalar>> pts;
  const auto [lo, hi] = qbism_support<Scalar>();
  for (int i = 0; i < grid; ++i) {
    const Scalar p = grid == 1 ? Scalar(0.5) : lo + (hi - lo) * i / (grid - 1);
    const Scalar qlo = boundary_q(p, Branch::Minus, BasisKind::QBismSIC);
    const Scalar qhi = boundary_q(p, Branch::Plus, BasisKind::QBismSIC);
    for (int j = 0; j < grid; ++j) {
      pts.emplace_back(p, grid == 1 ? Scalar(0.5) : qlo + (qhi - qlo) * j / (grid - 1));
    }
  }
  return pts;
}

// Bit flip, phase flip and phase damping map the chip onto itself; for the
// other three channels a witness with the largest surface residual on a
// 20x20 chip grid at xi = 1/3 is returned.
template <typename Scalar = double>
ChipPreservation<Scalar> preserves_chip(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip:
      return {true, [](Scalar p, Scalar q, Scalar xi) { return std::pair{p + xi * (1 - 2 * p), q}; }, std::nullopt};
    case ChannelKind::PhaseFlip:
      return {true, [](Scalar p, Scalar q, Scalar xi) { return std::pair{p, q + xi * (1 - 2 * q)}; }, std::nullopt};
    case ChannelKind::PhaseDamping:
      return {true,
              [](Scalar p, Scalar q, Scalar xi) {
                const Scalar s = std::sqrt(1 - xi);
                return std::pair{p, (1 - s + 2 * q * s) / 2};
              },
              std::nullopt};
    default: break;
  }
  const Scalar xi = Scalar(1) / 3;
  PreservationWitness<Scalar> best{0, 0, xi, 0};
  for (const auto& [p, q] : chip_grid<Scalar>(20)) {
    const Scalar res = bloch_surface_residual(chip_image(kind, xi, p, q), Orientation::O1);
    if (std::abs(res) > std::abs(best.residual)) best = {p, q, xi, res};
  }
  return {false, nullptr, best};
}

}  // namespace qpc

#endif  // QPC_CHANNELS_HPP_
