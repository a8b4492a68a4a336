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

// Potato-chip geometry: the surface of factorizable probability vectors
// (products of two binary distributions) cut by the physical ball, its
// boundary in the QBism and Wootters charts, membership and factorization,
// the three orientations, and the Matthews correlation.

#ifndef QPC_CHIP_HPP_
#define QPC_CHIP_HPP_

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <utility>

#include "qpc/phase_space.hpp"

namespace qpc {

// Which pairing of the four outcomes factorizes:
//   O1 = {14|23}, O2 = {13|24}, O3 = {12|34}.
enum class Orientation { O1, O2, O3 };

enum class Branch { Plus, Minus };

enum class Sigma { Sigma1, Sigma2 };

enum class Membership { Interior, Boundary, Outside };

constexpr std::string_view to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

constexpr std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::Interior: return "interior";
    case Membership::Boundary: return "boundary";
    case Membership::Outside: return "outside";
  }
  return "outside";
}

template <typename Scalar>
struct ChipPoint {
  Scalar p;
  Scalar q;
  Orientation orientation = Orientation::O1;
  BasisKind basis_kind = BasisKind::QBismSIC;
};

namespace detail {

template <typename Scalar>
void require_unit_interval(Scalar v, const char* what) {
  if (!(v >= 0 && v <= 1)) throw Error(ErrorCode::OutOfRange, std::string(what) + " outside [0, 1]");
}

// Index maps taking the O1 product (a,b,c,d) to the O2 and O3 layouts:
// O2 = (a,c,d,b), O3 = (b,c,a,d).
inline constexpr std::array<std::array<int, 4>, 3> kOrientationGather{{
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {1, 2, 0, 3},
}};

}  // namespace detail

// (pq, p(1-q), (1-p)q, (1-p)(1-q))
template <typename Scalar>
ProbVector4<Scalar> outer_product(Scalar p, Scalar q) {
  Vector4<Scalar> v;
  v << p * q, p * (1 - q), (1 - p) * q, (1 - p) * (1 - q);
  return ProbVector4<Scalar>(v, ProbMode::NonNegative);
}

template <typename Scalar>
ProbVector4<Scalar> orient(const ProbVector4<Scalar>& prob, Orientation orientation) {
  const auto& gather = detail::kOrientationGather[static_cast<int>(orientation)];
  Vector4<Scalar> v;
  for (int i = 0; i < 4; ++i) v(i) = prob[gather[i]];
  return ProbVector4<Scalar>(v, prob.mode());
}

template <typename Scalar>
ProbVector4<Scalar> chip_probability(const ChipPoint<Scalar>& point) {
  detail::require_unit_interval(point.p, "p");
  detail::require_unit_interval(point.q, "q");
  return orient(outer_product(point.p, point.q), point.orientation);
}

template <typename Scalar>
TetraPoint<Scalar> chip_surface(const ChipPoint<Scalar>& point) {
  return simplex_project(chip_probability(point));
}

// Determinant of the 2x2 table for the orientation's pairing; zero exactly
// on that chip surface.
template <typename Scalar>
Scalar surface_residual(const ProbVector4<Scalar>& prob, Orientation orientation) {
  const auto& v = prob.values();
  switch (orientation) {
    case Orientation::O1: return v(0) * v(3) - v(1) * v(2);
    case Orientation::O2: return v(0) * v(2) - v(1) * v(3);
    case Orientation::O3: return v(0) * v(1) - v(2) * v(3);
  }
  return 0;
}

// The same surfaces in Bloch coordinates (QBism chart):
//   O1: sqrt3 y = x z,  O2: sqrt3 x = y z,  O3: sqrt3 z = x y.
template <typename Derived>
typename Derived::Scalar bloch_surface_residual(const Eigen::MatrixBase<Derived>& r, Orientation orientation) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar r3 = std::sqrt(Scalar(3));
  switch (orientation) {
    case Orientation::O1: return r3 * r(1) - r(0) * r(2);
    case Orientation::O2: return r3 * r(0) - r(1) * r(2);
    case Orientation::O3: return r3 * r(2) - r(0) * r(1);
  }
  return 0;
}

// [(1 - 1/sqrt3)/2, (1 + 1/sqrt3)/2]: values of p for which the QBism chip
// has physical points.
template <typename Scalar = double>
std::pair<Scalar, Scalar> qbism_support() {
  const Scalar h = 1 / (2 * std::sqrt(Scalar(3)));
  return {Scalar(0.5) - h, Scalar(0.5) + h};
}

template <typename Scalar>
std::pair<Scalar, Scalar> support(BasisKind kind) {
  return kind == BasisKind::QBismSIC ? qbism_support<Scalar>() : std::pair<Scalar, Scalar>{0, 1};
}

namespace detail {

template <typename Scalar>
Scalar clamped_sqrt(Scalar radicand, Scalar tol, const char* what) {
  if (radicand < -tol) throw Error(ErrorCode::OutsideSupport, what);
  return std::sqrt(std::max(radicand, Scalar(0)));
}

// (2q - 1)^2 on the boundary of the chip at p.
template <typename Scalar>
Scalar boundary_radicand(Scalar p, BasisKind kind) {
  const Scalar d = 1 - 2 * p + 2 * p * p;
  if (kind == BasisKind::QBismSIC) return (-1 + 6 * p - 6 * p * p) / (3 * d);
  return 2 * p * (1 - p) / d;
}

}  // namespace detail

// q on the pure-state boundary for a given p. Throws OutsideSupport when p
// has no real boundary point (radicand below -tol).
template <typename Scalar>
Scalar boundary_q(Scalar p, Branch branch, BasisKind kind, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  detail::require_unit_interval(p, "p");
  const Scalar root = detail::clamped_sqrt(detail::boundary_radicand(p, kind), tol,
                                           "p outside the chip boundary support");
  return branch == Branch::Plus ? (1 + root) / 2 : (1 - root) / 2;
}

// Bloch vector of a chip point. QBism: prob_to_bloch of the (oriented)
// product; Wootters: the quasi-probability inverse.
template <typename Scalar>
BlochVector<Scalar> chip_bloch(const ChipPoint<Scalar>& point) {
  const auto prob = chip_probability(point);
  return point.basis_kind == BasisKind::QBismSIC ? prob_to_bloch(prob) : wootters_to_bloch(prob);
}

// Closed-form QBism boundary curve (O1 chart):
//   Plus  -> (-sqrt R, (2p-1) sqrt R, sqrt3 (1-2p))
//   Minus -> ( sqrt R, (1-2p) sqrt R, sqrt3 (1-2p)),  R = 2/(1+2p(p-1)) - 3.
// Equal to chip_bloch at boundary_q for the same branch. Plotting code that
// uses the antipodal sign convention for r draws -boundary_bloch.
template <typename Scalar>
BlochVector<Scalar> boundary_bloch(Scalar p, Branch branch, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  detail::require_unit_interval(p, "p");
  const Scalar root = detail::clamped_sqrt(2 / (1 + 2 * p * (p - 1)) - 3, tol,
                                           "p outside the QBism chip support");
  const Scalar sign = branch == Branch::Plus ? Scalar(-1) : Scalar(1);
  return BlochVector<Scalar>(sign * root, -sign * (2 * p - 1) * root, std::sqrt(Scalar(3)) * (1 - 2 * p));
}

// (p, q) = (p1 + p2, p1 + p3) when the O1 table is rank one within tol.
template <typename Scalar>
std::optional<std::pair<Scalar, Scalar>> factorize(const ProbVector4<Scalar>& prob,
                                                   NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  using std::abs;
  if (abs(surface_residual(prob, Orientation::O1)) > tol) return std::nullopt;
  return std::pair<Scalar, Scalar>{prob[0] + prob[1], prob[0] + prob[2]};
}

template <typename Derived>
Membership chip_membership(const Eigen::MatrixBase<Derived>& r, Orientation orientation,
                           typename Derived::Scalar tol = kTolPhys<typename Derived::Scalar>) {
  using std::abs;
  if (abs(bloch_surface_residual(r, orientation)) > tol) return Membership::Outside;
  const auto norm = r.norm();
  if (norm < 1 - tol) return Membership::Interior;
  if (abs(norm - 1) <= tol) return Membership::Boundary;
  return Membership::Outside;
}

// sigma1 swaps entries 1<->2, sigma2 swaps 3<->4. Both are involutions.
template <typename Scalar>
ProbVector4<Scalar> permute_orientation(const ProbVector4<Scalar>& prob, Sigma which) {
  Vector4<Scalar> v = prob.values();
  if (which == Sigma::Sigma1) {
    std::swap(v(0), v(1));
  } else {
    std::swap(v(2), v(3));
  }
  return ProbVector4<Scalar>(v, prob.mode());
}

// Orientation whose surface contains sigma applied to a generic point of
// `from`. Evaluated numerically rather than tabulated.
inline Orientation orientation_after(Orientation from, Sigma which) {
  const auto image = permute_orientation(chip_probability(ChipPoint<double>{0.23, 0.61, from}), which);
  Orientation best = Orientation::O1;
  double best_residual = std::abs(surface_residual(image, best));
  for (auto o : {Orientation::O2, Orientation::O3}) {
    const double r = std::abs(surface_residual(image, o));
    if (r < best_residual) {
      best = o;
      best_residual = r;
    }
  }
  return best;
}

namespace detail {

template <typename Scalar>
void require_marginal(Scalar m, Scalar tol) {
  if (!(m > tol)) throw Error(ErrorCode::DegenerateMarginal, "a marginal of the 2x2 table vanishes");
}

}  // namespace detail

// Matthews correlation of the 2x2 table (p11 p22 - p12 p21) / sqrt(marginals).
template <typename Scalar>
Scalar matthews_phi(const ProbVector4<Scalar>& prob, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  const auto t = prob.table();
  const Scalar r0 = t.row(0).sum(), r1 = t.row(1).sum();
  const Scalar c0 = t.col(0).sum(), c1 = t.col(1).sum();
  for (Scalar m : {r0, r1, c0, c1}) detail::require_marginal(m, tol);
  return (t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0)) / std::sqrt(r0 * r1 * c0 * c1);
}

// Same quantity through the QBism chart: (sqrt3 y - xz) / sqrt((3-x^2)(3-z^2)).
template <typename Derived>
typename Derived::Scalar matthews_phi(const Eigen::MatrixBase<Derived>& r,
                                      typename Derived::Scalar tol = kTolAlg<typename Derived::Scalar>) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar a = 3 - r(0) * r(0);
  const Scalar b = 3 - r(2) * r(2);
  detail::require_marginal(a, tol);
  detail::require_marginal(b, tol);
  return bloch_surface_residual(r, Orientation::O1) / std::sqrt(a * b);
}

// Form for a ball of radius 1/sqrt3: (y - xz) / sqrt((1-x^2)(1-z^2)).
// matthews_phi_rescaled(r / sqrt3) == matthews_phi(r).
template <typename Derived>
typename Derived::Scalar matthews_phi_rescaled(const Eigen::MatrixBase<Derived>& r,
                                               typename Derived::Scalar tol = kTolAlg<typename Derived::Scalar>) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar a = 1 - r(0) * r(0);
  const Scalar b = 1 - r(2) * r(2);
  detail::require_marginal(a, tol);
  detail::require_marginal(b, tol);
  return (r(1) - r(0) * r(2)) / std::sqrt(a * b);
}

using ChipPointd = ChipPoint<double>;

}  // namespace qpc

#endif  // QPC_CHIP_HPP_
