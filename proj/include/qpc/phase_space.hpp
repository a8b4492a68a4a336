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

// Probability and quasi-probability pictures of a qubit: the 4D simplex
// rotation and its projection onto a tetrahedron in R^3, the QBism SIC
// phase-space basis, the Wootters basis, and conversions between
// probability 4-vectors, density matrices and Bloch vectors.

#ifndef QPC_PHASE_SPACE_HPP_
#define QPC_PHASE_SPACE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string_view>

#include "qpc/core.hpp"

namespace qpc {

enum class ProbMode { NonNegative, Signed };

enum class BasisKind { QBismSIC, Wootters };

constexpr std::string_view to_string(BasisKind kind) {
  return kind == BasisKind::QBismSIC ? "qbism" : "wootters";
}

// Normalized real 4-vector. Ordering follows the outer product
// (pq, p(1-q), (1-p)q, (1-p)(1-q)), so table() is the row-major 2x2 joint
// distribution: rows carry the first marginal, columns the second.
template <typename Scalar>
class ProbVector4 {
 public:
  using Values = Vector4<Scalar>;

  // Throws NotNormalized, or OutOfRange for a negative entry in
  // NonNegative mode.
  ProbVector4(const Values& values, ProbMode mode, NonDeduced<Scalar> tol = kTolAlg<Scalar>)
      : values_(values), mode_(mode) {
    using std::abs;
    if (!(abs(values.sum() - 1) <= tol)) {
      throw Error(ErrorCode::NotNormalized, "probability vector does not sum to 1");
    }
    if (mode == ProbMode::NonNegative && values.minCoeff() < -tol) {
      throw Error(ErrorCode::OutOfRange, "negative entry in a non-negative probability vector");
    }
  }

  // Picks NonNegative when every entry is >= -tol, Signed otherwise.
  static ProbVector4 classify(const Values& values, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
    return ProbVector4(values, values.minCoeff() >= -tol ? ProbMode::NonNegative : ProbMode::Signed,
                       tol);
  }

  static ProbVector4 uniform() { return ProbVector4(Values::Constant(Scalar(0.25)), ProbMode::NonNegative); }

  const Values& values() const { return values_; }
  ProbMode mode() const { return mode_; }
  Scalar operator[](int i) const { return values_(i); }

  Matrix2<Scalar> table() const {
    Matrix2<Scalar> t;
    t << values_(0), values_(1), values_(2), values_(3);
    return t;
  }

 private:
  Values values_;
  ProbMode mode_;
};

// Projected simplex coordinates (u, v, w).
template <typename Scalar>
using TetraPoint = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
struct Rotation4 {
  Scalar theta;
  Matrix4<Scalar> matrix;
};

// Rotation by theta in the plane spanned by (1,1,1,1) and (1,0,0,0).
template <typename Scalar>
Rotation4<Scalar> rotation_matrix(Scalar theta) {
  const Scalar c = std::cos(theta);
  const Scalar s = std::sin(theta) / std::sqrt(Scalar(3));
  const Scalar diag = (c + 2) / 3;
  const Scalar off = (c - 1) / 3;
  Matrix4<Scalar> m;
  m << c, s, s, s,
       -s, diag, off, off,
       -s, off, diag, off,
       -s, off, off, diag;
  return {theta, m};
}

// theta = pi/3 sends the simplex into the hyperplane whose first coordinate is 1/2.
template <typename Scalar>
const Matrix4<Scalar>& simplex_rotation() {
  static const Matrix4<Scalar> m = rotation_matrix(std::numbers::pi_v<Scalar> / 3).matrix;
  return m;
}

template <typename Scalar>
TetraPoint<Scalar> simplex_project(const ProbVector4<Scalar>& prob) {
  const Vector4<Scalar> rotated = simplex_rotation<Scalar>() * prob.values();
  return rotated.template tail<3>();
}

// Inverse of simplex_project on the normalized hyperplane.
template <typename Derived>
Vector4<typename Derived::Scalar> simplex_unproject(const Eigen::MatrixBase<Derived>& point) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  Vector4<Scalar> lifted;
  lifted << Scalar(0.5), point;
  return simplex_rotation<Scalar>().transpose() * lifted;
}

template <typename Scalar>
struct PhaseSpaceBasis {
  BasisKind kind;
  std::array<Matrix2c<Scalar>, 4> elements;
  // Inverse of G_ij = Tr(B_i B_j); the dual frame used by density_to_prob.
  Matrix4<Scalar> gram_inverse;

  // Validates the elements and precomputes the Gram inverse. Throws
  // NonHermitian, TraceNotOne or SingularBasis.
  static PhaseSpaceBasis from_elements(BasisKind kind, const std::array<Matrix2c<Scalar>, 4>& elements,
                                       NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
    Matrix4<Scalar> gram;
    for (int i = 0; i < 4; ++i) {
      require_state(elements[i], tol);
      for (int j = 0; j < 4; ++j) {
        gram(i, j) = (elements[i] * elements[j]).trace().real();
      }
    }
    Eigen::FullPivLU<Matrix4<Scalar>> lu(gram);
    if (!lu.isInvertible() || std::abs(lu.determinant()) <= tol) {
      throw Error(ErrorCode::SingularBasis, "phase-space basis elements are linearly dependent");
    }
    return {kind, elements, lu.inverse()};
  }
};

namespace detail {

template <typename Scalar>
Matrix2c<Scalar> hermitian2(Scalar a, Complex<Scalar> lower, Scalar d) {
  Matrix2c<Scalar> m;
  m << Complex<Scalar>(a), std::conj(lower), lower, Complex<Scalar>(d);
  return m;
}

template <typename Scalar>
PhaseSpaceBasis<Scalar> make_qbism_basis() {
  const Scalar r3 = std::sqrt(Scalar(3));
  const Scalar amp = std::sqrt(Scalar(1.5));
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar lo = (1 - r3) / 2;
  const Scalar hi = (1 + r3) / 2;
  auto phase = [&](Scalar angle) { return std::polar(amp, angle); };
  // Columns of the basis matrix reshaped row-major; the stored entry is (2,1).
  return PhaseSpaceBasis<Scalar>::from_elements(
      BasisKind::QBismSIC, {hermitian2(lo, phase(3 * pi / 4), hi),
                            hermitian2(lo, phase(-pi / 4), hi),
                            hermitian2(hi, phase(-3 * pi / 4), lo),
                            hermitian2(hi, phase(pi / 4), lo)});
}

template <typename Scalar>
PhaseSpaceBasis<Scalar> make_wootters_basis() {
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Complex<Scalar> w = std::polar(1 / std::sqrt(Scalar(2)), pi / 4);
  // Hermitian completion of the fourth element; see README "Conventions".
  return PhaseSpaceBasis<Scalar>::from_elements(
      BasisKind::Wootters, {hermitian2(Scalar(1), w, Scalar(0)),
                            hermitian2(Scalar(0), std::conj(w), Scalar(1)),
                            hermitian2(Scalar(1), -w, Scalar(0)),
                            hermitian2(Scalar(0), -std::conj(w), Scalar(1))});
}

}  // namespace detail

// Built once per scalar type and shared read-only.
template <typename Scalar = double>
const PhaseSpaceBasis<Scalar>& basis(BasisKind kind) {
  static const PhaseSpaceBasis<Scalar> qbism = detail::make_qbism_basis<Scalar>();
  static const PhaseSpaceBasis<Scalar> wootters = detail::make_wootters_basis<Scalar>();
  return kind == BasisKind::QBismSIC ? qbism : wootters;
}

// rho = sum_i p_i B_i
template <typename Scalar>
DensityMatrix<Scalar> prob_to_density(const ProbVector4<Scalar>& prob, const PhaseSpaceBasis<Scalar>& b) {
  DensityMatrix<Scalar> rho = DensityMatrix<Scalar>::Zero();
  for (int i = 0; i < 4; ++i) rho += prob[i] * b.elements[i];
  return rho;
}

// p = G^{-1} (Tr(B_k rho))_k. Exact inverse of prob_to_density.
template <typename Scalar>
ProbVector4<Scalar> density_to_prob(const DensityMatrix<Scalar>& rho, const PhaseSpaceBasis<Scalar>& b,
                                    NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  require_state(rho, tol);
  Vector4<Scalar> overlaps;
  for (int k = 0; k < 4; ++k) overlaps(k) = (b.elements[k] * rho).trace().real();
  return ProbVector4<Scalar>::classify(b.gram_inverse * overlaps, tol);
}

// QBism SIC probabilities -> Bloch vector (direct linear rule).
template <typename Scalar>
BlochVector<Scalar> prob_to_bloch(const ProbVector4<Scalar>& prob) {
  const Scalar r3 = std::sqrt(Scalar(3));
  const auto& p = prob.values();
  return r3 * BlochVector<Scalar>(1 - 2 * p(0) - 2 * p(2), 1 - 2 * p(1) - 2 * p(2), 1 - 2 * p(0) - 2 * p(1));
}

// Eigenvalues of the state with QBism SIC probabilities `prob`, straight from
// the probabilities: (1 +- sqrt(3 s)) / 2 with s = |r|^2 / 3.
template <typename Scalar>
EigenPair<Scalar> sic_eigenvalues(const ProbVector4<Scalar>& prob) {
  const auto& v = prob.values();
  const Scalar p1 = v(0), p2 = v(1), p3 = v(2);
  const Scalar s = 8 * (p1 * p1 + p1 * (p2 + p3 - 1) + p2 * p2 + p2 * p3 + p3 * p3) - 8 * p2 - 8 * p3 + 3;
  const Scalar radius = std::sqrt(Scalar(3)) * std::sqrt(std::max(Scalar(0), s));
  return {(1 + radius) / 2, (1 - radius) / 2};
}

template <typename Derived>
ProbVector4<typename Derived::Scalar> bloch_to_prob(const Eigen::MatrixBase<Derived>& r) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar k = 1 / std::sqrt(Scalar(3));
  const Scalar x = r(0), y = r(1), z = r(2);
  Vector4<Scalar> p;
  p << 1 - k * (x - y + z), 1 + k * (x - y - z), 1 - k * (x + y - z), 1 + k * (x + y + z);
  return ProbVector4<Scalar>::classify(p / 4);
}

// Wootters quasi-probabilities of a Bloch vector, and back. These are the
// closed forms of density_to_prob / prob_to_density for the Wootters basis.
template <typename Derived>
ProbVector4<typename Derived::Scalar> bloch_to_wootters(const Eigen::MatrixBase<Derived>& r) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  const Scalar x = r(0), y = r(1), z = r(2);
  Vector4<Scalar> p;
  p << 1 + x + y + z, 1 + x - y - z, 1 - x - y + z, 1 - x + y - z;
  return ProbVector4<Scalar>::classify(p / 4);
}

template <typename Scalar>
BlochVector<Scalar> wootters_to_bloch(const ProbVector4<Scalar>& prob) {
  const auto& p = prob.values();
  return BlochVector<Scalar>(p(0) + p(1) - p(2) - p(3), p(0) - p(1) - p(2) + p(3), p(0) - p(1) + p(2) - p(3));
}

// Doubly-stochastic map from a Pauli outcome distribution to the
// corresponding coarse-grained SIC outcome distribution.
template <typename Scalar = double>
Matrix2<Scalar> scaling_matrix() {
  const Scalar r3 = std::sqrt(Scalar(3));
  Matrix2<Scalar> s;
  s << 3 + r3, 3 - r3, 3 - r3, 3 + r3;
  return s / 6;
}

// P(M_i) = (P(sigma_i) - 1/2) / sqrt3 + 1/2
template <typename Scalar>
Scalar rescale_projective(Scalar prob, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  if (!(prob >= -tol && prob <= 1 + tol)) {
    throw Error(ErrorCode::OutOfRange, "projective probability outside [0, 1]");
  }
  return (prob - Scalar(0.5)) / std::sqrt(Scalar(3)) + Scalar(0.5);
}

using ProbVector4d = ProbVector4<double>;
using TetraPointd = TetraPoint<double>;

}  // namespace qpc

#endif  // QPC_PHASE_SPACE_HPP_
