// Copyright 2026 The bohrify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bohrify/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>

#include "bohrify/error.hpp"
#include "bohrify/kernels.hpp"

namespace bohrify {

std::size_t dimension_cap() {
  if (const char* env = std::getenv("BOHRIFY_CAP_DIM"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ValidationError("BOHRIFY_CAP_DIM must be a positive integer, got '" +
                          std::string(env) + "'");
  }
  return kDefaultDimensionCap;
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("matrix of dimension " + std::to_string(dim_) + " needs " +
                         std::to_string(dim_ * dim_) + " entries, got " +
                         std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t dim, std::size_t row, std::size_t col) {
  ComplexMatrix m(dim);
  m(row, col) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_row_permutation(std::span<const std::size_t> image) {
  ComplexMatrix m(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(i, image[i]) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matrix product");
  ComplexMatrix out(a.dim());
  // Small products are not worth a parallel region.
  const Execution exec = a.dim() >= 64 ? Execution::kParallel : Execution::kSerial;
  kernels::multiply(a.data(), b.data(), out.data(), a.dim(), exec);
  return out;
}

Eigen::MatrixXcd ComplexMatrix::to_eigen() const {
  Eigen::MatrixXcd m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::from_eigen(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw DimensionError("from_eigen: matrix is not square");
  ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < out.dim(); ++i)
    for (std::size_t j = 0; j < out.dim(); ++j) out(i, j) = m(i, j);
  return out;
}

std::string ComplexMatrix::to_string(int precision) const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  for (std::size_t i = 0; i < dim_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex z = (*this)(i, j);
      os << (j == 0 ? "" : ", ") << z.real();
      if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
    os << (i + 1 == dim_ ? "]" : "\n");
  }
  return os.str();
}

Complex inner_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "inner product");
  Complex s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += std::conj(da[i]) * db[i];
  return a.dim() == 0 ? s : s / static_cast<double>(a.dim());
}

double normalized_norm(const ComplexMatrix& a) {
  if (a.dim() == 0) return 0.0;
  return a.frobenius_norm() / std::sqrt(static_cast<double>(a.dim()));
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_dim(a, b, "approx_equal");
  const double scale = std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
  return (a - b).frobenius_norm() <= tol * scale;
}

bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_dim(a, b, "commutes");
  const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
  return (a * b - b * a).frobenius_norm() <= tol * scale;
}

bool is_projection(const ComplexMatrix& p, double tol) {
  const double scale = std::max(1.0, p.frobenius_norm());
  return (p * p - p).frobenius_norm() <= tol * scale &&
         (p.adjoint() - p).frobenius_norm() <= tol * scale;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  const auto id = ComplexMatrix::identity(u.dim());
  const auto ua = u.adjoint();
  return (ua * u - id).frobenius_norm() <= tol && (u * ua - id).frobenius_norm() <= tol;
}

}  // namespace bohrify
