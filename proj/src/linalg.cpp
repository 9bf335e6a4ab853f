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

#include "swipt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "swipt/errors.hpp"

namespace swipt {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b || a == 0) {
    throw InstanceError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                        " vs " + std::to_string(b) + ")");
  }
}

// Entries below this magnitude do not count as "first nonzero" for the
// phase convention.
constexpr double kPhaseEntryTol = 1e-14;

void fix_phase(CVector& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > kPhaseEntryTol) {
      const Complex rot = std::conj(v[i]) / mag;
      v *= rot;
      v[i] = Complex(std::abs(v[i]), 0.0);
      return;
    }
  }
}

std::vector<EigPair> eig_2x2(const HermitianMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = m(0, 1);
  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double r = std::hypot(half_gap, std::abs(b));

  EigPair hi{mean + r, CVector(2)};
  EigPair lo{mean - r, CVector(2)};
  if (std::abs(b) == 0.0) {
    // Diagonal. Ties keep e1 as the principal vector.
    const bool first = a >= d;
    hi.vector = CVector::basis(2, first ? 0 : 1);
    lo.vector = CVector::basis(2, first ? 1 : 0);
    return {hi, lo};
  }
  // (M - lambda I) x = 0 from either row; take the better conditioned one.
  CVector x(2);
  if (a >= d) {
    x[0] = Complex(hi.value - d, 0.0);
    x[1] = std::conj(b);
  } else {
    x[0] = b;
    x[1] = Complex(hi.value - a, 0.0);
  }
  x = normalized(x);
  fix_phase(x);
  CVector y{-std::conj(x[1]), std::conj(x[0])};
  fix_phase(y);
  hi.vector = std::move(x);
  lo.vector = std::move(y);
  return {hi, lo};
}

// Cyclic Jacobi for complex Hermitian matrices. Returns eigenvalues (diag of
// the rotated matrix) and the accumulated unitary V with eigenvectors in
// its columns.
void jacobi(CMatrix a, std::vector<double>& values, CMatrix& v) {
  const std::size_t n = a.dim();
  v = CMatrix::identity(n);
  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale * static_cast<double>(n)) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq <= 1e-300) continue;
        const Complex phase = a(p, q) / apq;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = D R with D = diag(1, e^{-i phi}) on (p, q).
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }
  values.resize(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
}

std::vector<EigPair> eig_general(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> values;
  CMatrix v;
  jacobi(m.matrix(), values, v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });

  std::vector<EigPair> out;
  out.reserve(n);
  for (std::size_t idx : order) {
    CVector col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, idx);
    fix_phase(col);
    out.push_back({values[idx], std::move(col)});
  }

  // Degenerate principal eigenspace: project e1 onto it.
  const double lead = out.front().value;
  const double tie = 1e-12 * std::max(1.0, std::abs(lead));
  std::size_t mult = 1;
  while (mult < n && lead - out[mult].value <= tie) ++mult;
  if (mult > 1) {
    CVector proj(n);
    for (std::size_t k = 0; k < mult; ++k) proj += std::conj(out[k].vector[0]) * out[k].vector;
    if (norm(proj) > 1e-8) {
      proj = normalized(proj);
      fix_phase(proj);
      out.front().vector = std::move(proj);
    }
  }
  return out;
}

}  // namespace

// --- CVector --------------------------------------------------------------

CVector CVector::basis(std::size_t dim, std::size_t index) {
  CVector e(dim);
  e[index] = 1.0;
  return e;
}

CVector& CVector::operator+=(const CVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector add");
  for (std::size_t i = 0; i < dim(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector subtract");
  for (std::size_t i = 0; i < dim(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

CVector& CVector::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

CVector operator+(CVector lhs, const CVector& rhs) { return lhs += rhs; }
CVector operator-(CVector lhs, const CVector& rhs) { return lhs -= rhs; }
CVector operator*(Complex s, CVector v) { return v *= s; }

Complex inner(const CVector& a, const CVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm_sq(const CVector& v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return acc;
}

double norm(const CVector& v) { return std::sqrt(norm_sq(v)); }

CVector normalized(const CVector& v) {
  const double n = norm(v);
  if (n == 0.0) throw DegenerateInputError("cannot normalize a zero vector");
  return Complex(1.0 / n, 0.0) * v;
}

// --- CMatrix --------------------------------------------------------------

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& x : data_) m = std::max(m, std::abs(x));
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const std::size_t n = a.dim();
  CMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix sum");
  CMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix difference");
  CMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

CVector operator*(const CMatrix& m, const CVector& v) {
  require_same_dim(m.dim(), v.dim(), "matrix-vector product");
  CVector out(v.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

// --- HermitianMatrix ------------------------------------------------------

HermitianMatrix::HermitianMatrix(const CMatrix& m) : m_(m.dim()) {
  const std::size_t n = m.dim();
  if (n == 0) throw InstanceError("Hermitian matrix must have dimension >= 1");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > kHermitianTol) {
        throw InstanceError("matrix is not Hermitian at (" + std::to_string(r) + ", " +
                            std::to_string(c) + ")");
      }
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m_(r, c) = r == c ? Complex(avg.real(), 0.0) : avg;
      m_(c, r) = std::conj(m_(r, c));
    }
  }
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) { return {CMatrix(dim), Unchecked{}}; }

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  return {CMatrix::identity(dim), Unchecked{}};
}

HermitianMatrix HermitianMatrix::outer(const CVector& v, double scale) {
  const std::size_t n = v.dim();
  CMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = scale * std::norm(v[r]);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = scale * v[r] * std::conj(v[c]);
      m(c, r) = std::conj(m(r, c));
    }
  }
  return {std::move(m), Unchecked{}};
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i).real();
  return t;
}

double HermitianMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) acc += std::norm(m_(r, c));
  return std::sqrt(acc);
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
  m_ = m_ + rhs.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) m_(r, c) *= s;
  return *this;
}

HermitianMatrix operator*(double s, const HermitianMatrix& m) {
  HermitianMatrix out = m;
  out *= s;
  return out;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return {a.m_ + b.m_, HermitianMatrix::Unchecked{}};
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return {a.m_ - b.m_, HermitianMatrix::Unchecked{}};
}

HermitianMatrix sandwich(const HermitianMatrix& a, const HermitianMatrix& b) {
  CMatrix m = a.m_ * b.m_ * a.m_;
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
  return {std::move(m), HermitianMatrix::Unchecked{}};
}

// --- operations -----------------------------------------------------------

double quadratic_form(const CVector& h, const HermitianMatrix& s) {
  require_same_dim(h.dim(), s.dim(), "quadratic form");
  const std::size_t n = h.dim();
  Complex acc = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < n; ++c) row += s(r, c) * h[c];
    acc += std::conj(h[r]) * row;
  }
  if (std::abs(acc.imag()) > 1e-10 * std::max(1.0, std::abs(acc.real()))) {
    throw InstanceError("quadratic form has a non-negligible imaginary part");
  }
  return acc.real();
}

double min_singular_value(std::span<const CVector> columns) {
  const std::size_t k = columns.size();
  if (k == 0) throw InstanceError("empty column set");
  CMatrix gram(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = inner(columns[a], columns[b]);
  const auto eig = eigen_decomposition(HermitianMatrix(gram));
  return std::sqrt(std::max(0.0, eig.back().value));
}

HermitianMatrix projector(std::span<const CVector> columns) {
  const std::size_t k = columns.size();
  if (k == 0) throw InstanceError("projector: empty column set");
  const std::size_t n = columns.front().dim();
  for (const auto& col : columns) require_same_dim(col.dim(), n, "projector");
  if (k > n) throw DegenerateInputError("projector: more columns than rows");

  CMatrix gram(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = inner(columns[a], columns[b]);
  const auto eig = eigen_decomposition(HermitianMatrix(gram));
  if (std::sqrt(std::max(0.0, eig.back().value)) <= kRankTol) {
    throw DegenerateInputError("projector: column set is rank deficient");
  }
  // (X^H X)^{-1} from its eigendecomposition.
  CMatrix gram_inv(k);
  for (const auto& e : eig) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        gram_inv(a, b) += e.vector[a] * std::conj(e.vector[b]) / e.value;
  }
  CMatrix p(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      Complex acc = 0.0;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          acc += columns[a][r] * gram_inv(a, b) * std::conj(columns[b][s]);
      p(r, s) = acc;
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    p(r, r) = p(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (p(r, c) + std::conj(p(c, r)));
      p(r, c) = avg;
      p(c, r) = std::conj(avg);
    }
  }
  return {std::move(p), HermitianMatrix::Unchecked{}};
}

HermitianMatrix complement_projector(std::span<const CVector> columns) {
  const HermitianMatrix p = projector(columns);
  CMatrix m(p.dim());
  for (std::size_t r = 0; r < p.dim(); ++r)
    for (std::size_t c = 0; c < p.dim(); ++c) m(r, c) = (r == c ? 1.0 : 0.0) - p(r, c);
  return {std::move(m), HermitianMatrix::Unchecked{}};
}

std::vector<EigPair> eigen_decomposition(const HermitianMatrix& m) {
  if (m.dim() == 0) throw InstanceError("eigendecomposition of an empty matrix");
  if (m.dim() == 1) return {EigPair{m(0, 0).real(), CVector{1.0}}};
  if (m.dim() == 2) return eig_2x2(m);
  return eig_general(m);
}

EigPair principal_eig(const HermitianMatrix& m) { return eigen_decomposition(m).front(); }

SpanBasis orthonormal_span_basis(const CVector& h_a, const CVector& h_b) {
  require_same_dim(h_a.dim(), h_b.dim(), "span basis");
  const double na = norm(h_a);
  const double nb = norm(h_b);
  if (na == 0.0) throw DegenerateInputError("span basis: leading vector is zero");
  SpanBasis out;
  out.u1 = normalized(h_a);
  if (nb == 0.0 || std::abs(inner(h_a, h_b)) >= (1.0 - kRankTol) * na * nb) {
    out.degenerate = true;
    return out;
  }
  CVector r = h_b - inner(out.u1, h_b) * out.u1;
  r -= inner(out.u1, r) * out.u1;  // second pass
  out.u2 = normalized(r);
  return out;
}

}  // namespace swipt
