// SPDX-License-Identifier: Apache-2.0
//
// swipt-ifc: transmit design for two-user MISO interference channels with
// energy harvesting receivers
// Copyright (C) 2026 The swipt-ifc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Small dense complex linear algebra for antenna-count sized problems.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace swipt {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kRankTol = 1e-10;

class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : data_(dim) {}
  CVector(std::initializer_list<Complex> entries) : data_(entries) {}
  explicit CVector(std::vector<Complex> entries) : data_(std::move(entries)) {}

  static CVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  std::span<const Complex> entries() const { return data_; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  CVector& operator+=(const CVector& rhs);
  CVector& operator-=(const CVector& rhs);
  CVector& operator*=(Complex s);

 private:
  std::vector<Complex> data_;
};

CVector operator+(CVector lhs, const CVector& rhs);
CVector operator-(CVector lhs, const CVector& rhs);
CVector operator*(Complex s, CVector v);

/// a^H b
Complex inner(const CVector& a, const CVector& b);
double norm(const CVector& v);
double norm_sq(const CVector& v);
CVector normalized(const CVector& v);

/// Dense square complex matrix, row-major.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static CMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  CMatrix adjoint() const;
  double max_abs() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& m, const CVector& v);

/// Square matrix equal to its conjugate transpose (to kHermitianTol
/// elementwise). Construction from arbitrary entries validates and then
/// stores the exactly symmetrized matrix.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMatrix& m);

  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix identity(std::size_t dim);
  /// scale * v v^H
  static HermitianMatrix outer(const CVector& v, double scale = 1.0);

  std::size_t dim() const { return m_.dim(); }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const CMatrix& matrix() const { return m_; }

  double trace() const;
  double frobenius_norm() const;

  HermitianMatrix& operator+=(const HermitianMatrix& rhs);
  HermitianMatrix& operator*=(double s);

 private:
  struct Unchecked {};
  HermitianMatrix(CMatrix m, Unchecked) : m_(std::move(m)) {}
  friend HermitianMatrix operator*(double, const HermitianMatrix&);
  friend HermitianMatrix operator+(const HermitianMatrix&, const HermitianMatrix&);
  friend HermitianMatrix operator-(const HermitianMatrix&, const HermitianMatrix&);
  friend HermitianMatrix sandwich(const HermitianMatrix&, const HermitianMatrix&);
  friend HermitianMatrix projector(std::span<const CVector>);
  friend HermitianMatrix complement_projector(std::span<const CVector>);

  CMatrix m_;
};

HermitianMatrix operator*(double s, const HermitianMatrix& m);
HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
/// A B A for Hermitian A, B (Hermitian by construction).
HermitianMatrix sandwich(const HermitianMatrix& a, const HermitianMatrix& b);

struct EigPair {
  double value = 0.0;
  CVector vector;
};

/// Real part of h^H S h. Throws InstanceError on dimension mismatch or an
/// imaginary residual above 1e-10 (relative to the magnitude).
double quadratic_form(const CVector& h, const HermitianMatrix& s);

/// Pi_X = X (X^H X)^{-1} X^H for the column set X. Throws
/// DegenerateInputError when X is not of full column rank.
HermitianMatrix projector(std::span<const CVector> columns);
/// I - Pi_X.
HermitianMatrix complement_projector(std::span<const CVector> columns);

/// Largest eigenvalue and a unit eigenvector. The first entry of magnitude
/// above 1e-14 is made real and nonnegative. A degenerate principal
/// eigenspace is resolved by the member with the largest |first entry|.
/// Closed form for 2x2; cyclic Jacobi otherwise.
EigPair principal_eig(const HermitianMatrix& m);

/// All eigenpairs, values descending, same phase convention as principal_eig.
std::vector<EigPair> eigen_decomposition(const HermitianMatrix& m);

/// Smallest singular value of the column set.
double min_singular_value(std::span<const CVector> columns);

struct SpanBasis {
  CVector u1;
  CVector u2;         // empty when degenerate
  bool degenerate = false;
};

/// Gram-Schmidt basis of span(h_a, h_b): u1 = h_a/|h_a|,
/// u2 = Pi_perp(h_a) h_b / |...|. Nearly parallel inputs yield a
/// single-vector basis with degenerate = true.
SpanBasis orthonormal_span_basis(const CVector& h_a, const CVector& h_b);

}  // namespace swipt
