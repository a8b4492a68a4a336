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

#ifndef QPC_MEASUREMENT_HPP_
#define QPC_MEASUREMENT_HPP_

#include <array>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "qpc/chip.hpp"

namespace qpc {

template <typename Scalar>
struct Povm {
  std::vector<Matrix2c<Scalar>> elements;

  // Largest entry of sum(E_i) - I.
  Scalar completeness_error() const {
    Matrix2c<Scalar> total = -identity2<Scalar>();
    for (const auto& e : elements) total += e;
    return total.cwiseAbs().maxCoeff();
  }

  bool is_valid(Scalar tol_alg = kTolAlg<Scalar>, Scalar tol_phys = kTolPhys<Scalar>) const {
    if (completeness_error() > tol_alg) return false;
    for (const auto& e : elements) {
      if (!is_hermitian(e, tol_alg)) return false;
      if (eigenvalues_2x2(e, tol_alg).lambda_minus < -tol_phys) return false;
    }
    return true;
  }
};

template <typename Scalar>
struct MeasurementRecord {
  Axis axis;
  std::array<Scalar, 2> probs;
};

template <typename Scalar>
struct Marginals {
  std::array<Scalar, 2> row;
  std::array<Scalar, 2> col;
};

// The four sub-normalized QBism SIC elements Q_i (each of trace 1/2).
template <typename Scalar = double>
const Povm<Scalar>& qbism_povm() {
  static const Povm<Scalar> povm = [] {
    const Scalar r3 = std::sqrt(Scalar(3));
    const Scalar r6 = std::sqrt(Scalar(6));
    const Scalar pi = std::numbers::pi_v<Scalar>;
    auto element = [&](Scalar a, Scalar angle01, Scalar d) {
      Matrix2c<Scalar> m;
      m << Complex<Scalar>(a), std::polar(r6, angle01), std::polar(r6, -angle01), Complex<Scalar>(d);
      return Matrix2c<Scalar>(m / 12);
    };
    return Povm<Scalar>{{element(3 - r3, -3 * pi / 4, 3 + r3),
                         element(3 - r3, pi / 4, 3 + r3),
                         element(3 + r3, 3 * pi / 4, 3 - r3),
                         element(3 + r3, -pi / 4, 3 - r3)}};
  }();
  return povm;
}

// Two-outcome coarse-grainings of the SIC: M_x = {Q1+Q3, .}, M_y = {Q1+Q4, .},
// M_z = {Q1+Q2, .}.
template <typename Scalar = double>
Povm<Scalar> coarse_povm(Axis axis) {
  const auto& q = qbism_povm<Scalar>().elements;
  const int partner = axis == Axis::X ? 2 : axis == Axis::Y ? 3 : 1;
  const Matrix2c<Scalar> first = q[0] + q[partner];
  return Povm<Scalar>{{first, identity2<Scalar>() - first}};
}

template <typename Scalar>
std::vector<Scalar> born_probabilities(const Povm<Scalar>& povm, const DensityMatrix<Scalar>& rho) {
  std::vector<Scalar> out;
  out.reserve(povm.elements.size());
  for (const auto& e : povm.elements) out.push_back((e * rho).trace().real());
  return out;
}

// (P(-1), P(+1)) = ((1 - c)/2, (1 + c)/2), c the Bloch component on `axis`.
template <typename Scalar>
MeasurementRecord<Scalar> pauli_probabilities(const DensityMatrix<Scalar>& rho, Axis axis,
                                              NonDeduced<Scalar> tol = kTolPhys<Scalar>) {
  const BlochVector<Scalar> r = density_to_bloch(rho);
  if (!is_physical(rho, tol)) throw Error(ErrorCode::Unphysical, "state is not positive semi-definite");
  const Scalar c = r(axis_index(axis));
  return {axis, {(1 - c) / 2, (1 + c) / 2}};
}

// Row sums (p1+p2, p3+p4) and column sums (p1+p3, p2+p4) of the 2x2 table.
template <typename Scalar>
Marginals<Scalar> marginals(const ProbVector4<Scalar>& prob) {
  return {{prob[0] + prob[1], prob[2] + prob[3]}, {prob[0] + prob[2], prob[1] + prob[3]}};
}

template <typename Scalar>
struct Reconstruction {
  Scalar p;
  Scalar q;
  ProbVector4<Scalar> prob;
  DensityMatrix<Scalar> rho;
  BlochVector<Scalar> bloch;
  Orientation orientation;
  bool physical;

  void require_physical() const {
    if (!physical) {
      throw Error(ErrorCode::Unphysical, "projective data are inconsistent with any chip state");
    }
  }
};

namespace detail {

inline Orientation orientation_for_pair(Axis a, Axis b) {
  if (a == b) throw Error(ErrorCode::OutOfRange, "reconstruction needs two distinct axes");
  const int missing = 3 - axis_index(a) - axis_index(b);
  // The unmeasured component is the one fixed by the surface equation.
  switch (missing) {
    case 1: return Orientation::O1;
    case 0: return Orientation::O2;
    default: return Orientation::O3;
  }
}

}  // namespace detail

// Rebuilds a chip state from two projective outcome probabilities (the
// P(-1) entries of pauli_probabilities). For the default (Z, X) pair,
// p = S(first), q = S(second) and the SIC probability vector is their outer
// product. The chip orientation is the one whose surface equation fixes the
// unmeasured Bloch component. Throws OutOfRange for inputs outside [0,1];
// an unphysical result is reported through `physical`.
template <typename Scalar>
Reconstruction<Scalar> reconstruct_from_projective(Scalar first, Scalar second,
                                                   std::pair<Axis, Axis> axes = {Axis::Z, Axis::X},
                                                   NonDeduced<Scalar> tol = kTolPhys<Scalar>) {
  detail::require_unit_interval(first, "first projective probability");
  detail::require_unit_interval(second, "second projective probability");
  const Orientation orientation = detail::orientation_for_pair(axes.first, axes.second);
  const Scalar p = rescale_projective(first);
  const Scalar q = rescale_projective(second);

  BlochVector<Scalar> r = BlochVector<Scalar>::Zero();
  const int ia = axis_index(axes.first);
  const int ib = axis_index(axes.second);
  r(ia) = 1 - 2 * first;
  r(ib) = 1 - 2 * second;
  r(3 - ia - ib) = r(ia) * r(ib) / std::sqrt(Scalar(3));

  ProbVector4<Scalar> prob = orientation == Orientation::O1 && ia == 2
                                 ? outer_product(p, q)
                                 : bloch_to_prob(r);
  const DensityMatrix<Scalar> rho = prob_to_density(prob, basis<Scalar>(BasisKind::QBismSIC));
  const BlochVector<Scalar> bloch = density_to_bloch(rho);
  const bool physical = is_physical(rho, tol) &&
                        chip_membership(bloch, orientation, tol) != Membership::Outside;
  return {p, q, std::move(prob), rho, bloch, orientation, physical};
}

}  // namespace qpc

#endif  // QPC_MEASUREMENT_HPP_
