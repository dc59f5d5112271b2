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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bohrify {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultDimensionCap = 4096;

// Dimension cap, overridable through the BOHRIFY_CAP_DIM environment variable.
std::size_t dimension_cap();

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
  // e_{row,col}
  static ComplexMatrix unit(std::size_t dim, std::size_t row, std::size_t col);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  // Permutation matrix with entry (i, image[i]) = 1.
  static ComplexMatrix from_row_permutation(std::span<const std::size_t> image);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<Complex> data() { return entries_; }
  std::span<const Complex> data() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  // Exact entrywise equality.
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

  Eigen::MatrixXcd to_eigen() const;
  static ComplexMatrix from_eigen(const Eigen::MatrixXcd& m);

  std::string to_string(int precision = 4) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Normalized trace inner product <A,B> = tr(A^* B) / dim.
Complex inner_product(const ComplexMatrix& a, const ComplexMatrix& b);
// sqrt(<A,A>), i.e. the Frobenius norm divided by sqrt(dim).
double normalized_norm(const ComplexMatrix& a);

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

// |A - B|_F <= tol * max(1, |A|_F, |B|_F)
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTolerance);

// |AB - BA|_F <= tol * max(1, |A|_F |B|_F)
bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kDefaultTolerance);

bool is_projection(const ComplexMatrix& p, double tol = kDefaultTolerance);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTolerance);

}  // namespace bohrify
