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

// Dense qubit primitives: density matrices, Bloch vectors, the closed-form
// 2x2 spectrum and physicality queries. Everything is templated on the real
// scalar type; the `d` aliases at the bottom are what most callers want.

#ifndef QPC_CORE_HPP_
#define QPC_CORE_HPP_

#include <cmath>
#include <complex>
#include <type_traits>

#include <Eigen/Dense>

#include "qpc/error.hpp"

namespace qpc {

// Algebraic identities (hermiticity, trace, normalization).
template <typename Scalar>
inline constexpr Scalar kTolAlg = Scalar(1e-12);

// Physicality (eigenvalue sign, Bloch norm).
template <typename Scalar>
inline constexpr Scalar kTolPhys = Scalar(1e-9);

template <typename T>
using NonDeduced = std::type_identity_t<T>;

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar>
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

template <typename Scalar>
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;

// Trace-one Hermitian 2x2 matrix. Validity is checked at the API boundary
// (density_to_bloch, require_state), not by the type.
template <typename Scalar>
using DensityMatrix = Matrix2c<Scalar>;

// Any real 3-vector is representable; physicality is a query.
template <typename Scalar>
using BlochVector = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
struct EigenPair {
  Scalar lambda_plus;
  Scalar lambda_minus;
};

enum class Axis { X, Y, Z };

inline constexpr int axis_index(Axis axis) { return static_cast<int>(axis); }

template <typename Scalar>
Matrix2c<Scalar> identity2() {
  return Matrix2c<Scalar>::Identity();
}

template <typename Scalar>
Matrix2c<Scalar> pauli(Axis axis) {
  using C = Complex<Scalar>;
  Matrix2c<Scalar> m;
  switch (axis) {
    case Axis::X: m << C(0), C(1), C(1), C(0); break;
    case Axis::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Axis::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

// rho = (I + r.sigma) / 2
template <typename Derived>
DensityMatrix<typename Derived::Scalar> bloch_to_density(const Eigen::MatrixBase<Derived>& r) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
  using Scalar = typename Derived::Scalar;
  using C = Complex<Scalar>;
  const Scalar half(0.5);
  DensityMatrix<Scalar> rho;
  rho << C(half * (1 + r(2))), C(half * r(0), -half * r(1)),
         C(half * r(0), half * r(1)), C(half * (1 - r(2)));
  return rho;
}

template <typename Scalar>
Scalar hermiticity_error(const Matrix2c<Scalar>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
bool is_hermitian(const Matrix2c<Scalar>& m, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  return hermiticity_error(m) <= tol;
}

// Throws NonHermitian / TraceNotOne.
template <typename Scalar>
void require_state(const DensityMatrix<Scalar>& rho, NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  if (!is_hermitian(rho, tol)) {
    throw Error(ErrorCode::NonHermitian, "matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex<Scalar>(1)) > tol) {
    throw Error(ErrorCode::TraceNotOne, "trace differs from 1");
  }
}

// x_i = Tr(sigma_i rho)
template <typename Scalar>
BlochVector<Scalar> density_to_bloch(const DensityMatrix<Scalar>& rho,
                                     NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  require_state(rho, tol);
  return BlochVector<Scalar>(2 * rho(1, 0).real(), 2 * rho(1, 0).imag(),
                             rho(0, 0).real() - rho(1, 1).real());
}

// Closed form from trace and determinant; no iteration.
template <typename Scalar>
EigenPair<Scalar> eigenvalues_2x2(const DensityMatrix<Scalar>& rho,
                                  NonDeduced<Scalar> tol = kTolAlg<Scalar>) {
  if (!is_hermitian(rho, tol)) {
    throw Error(ErrorCode::NonHermitian, "eigenvalues_2x2 requires a Hermitian matrix");
  }
  const Scalar a = rho(0, 0).real();
  const Scalar d = rho(1, 1).real();
  const Scalar mean = (a + d) / 2;
  const Scalar radius = std::hypot((a - d) / 2, std::abs(rho(0, 1)));
  return {mean + radius, mean - radius};
}

template <typename Scalar>
bool is_physical(const DensityMatrix<Scalar>& rho, NonDeduced<Scalar> tol = kTolPhys<Scalar>) {
  return eigenvalues_2x2(rho, kTolAlg<Scalar>).lambda_minus >= -tol;
}

template <typename Derived>
bool bloch_is_physical(const Eigen::MatrixBase<Derived>& r,
                       typename Derived::Scalar tol = kTolPhys<typename Derived::Scalar>) {
  return r.squaredNorm() <= 1 + tol;
}

template <typename Derived>
bool bloch_is_pure(const Eigen::MatrixBase<Derived>& r,
                   typename Derived::Scalar tol = kTolPhys<typename Derived::Scalar>) {
  using std::abs;
  return abs(r.norm() - 1) <= tol;
}

// -x log2 x, continuous at 0.
template <typename Scalar>
Scalar entropy_term(Scalar x) {
  return x > 0 ? -x * std::log2(x) : Scalar(0);
}

// Von Neumann entropy in bits. Eigenvalues are clamped into [0, 1] so that
// states a rounding error outside the ball still give a finite answer.
template <typename Scalar>
Scalar von_neumann_entropy(const DensityMatrix<Scalar>& rho) {
  const auto ev = eigenvalues_2x2(rho, kTolPhys<Scalar>);
  auto clamp01 = [](Scalar v) { return std::min(Scalar(1), std::max(Scalar(0), v)); };
  return entropy_term(clamp01(ev.lambda_plus)) + entropy_term(clamp01(ev.lambda_minus));
}

using DensityMatrixd = DensityMatrix<double>;
using BlochVectord = BlochVector<double>;
using Matrix2cd = Matrix2c<double>;
using EigenPaird = EigenPair<double>;

}  // namespace qpc

#endif  // QPC_CORE_HPP_
