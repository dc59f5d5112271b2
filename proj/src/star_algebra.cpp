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
#include "bohrify/star_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include <Eigen/Eigenvalues>

#include "bohrify/error.hpp"

namespace bohrify {
namespace {

// Gram-Schmidt with one re-orthogonalization pass. Returns the residual of m
// against basis, normalized, or an empty matrix when m is in the span.
std::optional<ComplexMatrix> orthonormal_residual(const std::vector<ComplexMatrix>& basis,
                                                  ComplexMatrix m, double tol) {
  const double norm0 = normalized_norm(m);
  if (norm0 == 0.0) return std::nullopt;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const Complex c = inner_product(b, m);
      if (c != Complex{}) m -= b * c;
    }
  }
  const double residual = normalized_norm(m);
  if (residual <= tol * std::max(1.0, norm0)) return std::nullopt;
  m *= Complex(1.0 / residual);
  return m;
}

// Orders projections entrywise, larger leading entries first.
bool canonical_before(const ComplexMatrix& a, const ComplexMatrix& b) {
  constexpr double kEps = 1e-7;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    if (std::abs(da[i].real() - db[i].real()) > kEps) return da[i].real() > db[i].real();
    if (std::abs(da[i].imag() - db[i].imag()) > kEps) return da[i].imag() > db[i].imag();
  }
  return false;
}

void check_ambient(std::size_t ambient_dim) {
  if (ambient_dim == 0) throw DimensionError("ambient dimension must be positive");
  const std::size_t cap = dimension_cap();
  if (ambient_dim > cap) {
    throw CapExceeded("ambient dimension " + std::to_string(ambient_dim) + " exceeds the cap " +
                      std::to_string(cap) + " (set BOHRIFY_CAP_DIM to override)");
  }
}

}  // namespace

std::vector<Complex> StarAlgebra::coordinates(const ComplexMatrix& m) const {
  require_same_dim(ComplexMatrix(ambient_dim_), m, "coordinates");
  std::vector<Complex> c;
  c.reserve(basis_.size());
  for (const auto& b : basis_) c.push_back(inner_product(b, m));
  return c;
}

bool StarAlgebra::contains(const ComplexMatrix& m, double tol) const {
  if (m.dim() != ambient_dim_) return false;
  return !orthonormal_residual(basis_, m, tol).has_value();
}

StarAlgebra StarAlgebra::scalars(std::size_t ambient_dim) {
  return generate_star_algebra({}, ambient_dim);
}

StarAlgebra generate_star_algebra(const std::vector<ComplexMatrix>& generators,
                                  std::size_t ambient_dim, double tol) {
  check_ambient(ambient_dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].dim() != ambient_dim) {
      throw DimensionError("generator " + std::to_string(i) + " has dimension " +
                           std::to_string(generators[i].dim()) + ", expected " +
                           std::to_string(ambient_dim));
    }
  }

  std::vector<ComplexMatrix> seeds;
  seeds.reserve(2 * generators.size());
  for (const auto& g : generators) {
    seeds.push_back(g);
    seeds.push_back(g.adjoint());
  }

  StarAlgebra out;
  out.ambient_dim_ = ambient_dim;
  auto add = [&](ComplexMatrix m) {
    if (auto r = orthonormal_residual(out.basis_, std::move(m), tol)) {
      out.basis_.push_back(std::move(*r));
    }
  };
  add(ComplexMatrix::identity(ambient_dim));
  for (const auto& s : seeds) add(s);

  const std::size_t full = ambient_dim * ambient_dim;
  for (std::size_t i = 0; i < out.basis_.size() && out.basis_.size() < full; ++i) {
    for (const auto& s : seeds) {
      add(s * out.basis_[i]);
      if (out.basis_.size() == full) break;
    }
  }

  out.commutative_ = true;
  for (std::size_t i = 0; i < seeds.size() && out.commutative_; ++i) {
    for (std::size_t j = i + 1; j < seeds.size(); ++j) {
      if (!commutes(seeds[i], seeds[j], tol)) {
        out.commutative_ = false;
        break;
      }
    }
  }
  return out;
}

bool is_commutative_algebra(const StarAlgebra& a, double tol) {
  const auto& basis = a.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!commutes(basis[i], basis[j], tol)) return false;
  return true;
}

bool subalgebra_leq(const StarAlgebra& a, const StarAlgebra& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("subalgebra_leq: ambient dimensions differ");
  }
  if (a.dim() > b.dim()) return false;
  return std::all_of(a.basis().begin(), a.basis().end(),
                     [&](const ComplexMatrix& m) { return b.contains(m, tol); });
}

bool same_subspace(const StarAlgebra& a, const StarAlgebra& b, double tol) {
  return a.dim() == b.dim() && subalgebra_leq(a, b, tol);
}

bool verify_star_algebra(const StarAlgebra& a, double tol) {
  const auto& basis = a.basis();
  if (!a.contains(ComplexMatrix::identity(a.ambient_dim()), tol)) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex ip = inner_product(basis[i], basis[j]);
      const Complex expect = i == j ? 1.0 : 0.0;
      if (std::abs(ip - expect) > tol * 10) return false;
      if (!a.contains(basis[i] * basis[j], tol)) return false;
    }
    if (!a.contains(basis[i].adjoint(), tol)) return false;
  }
  return true;
}

std::vector<ComplexMatrix> minimal_projections(const StarAlgebra& a, double tol) {
  if (!a.is_commutative() && !is_commutative_algebra(a, tol)) {
    throw PreconditionError("minimal projections requested for a non-commutative algebra");
  }
  const std::size_t d = a.ambient_dim();
  using Block = Eigen::MatrixXcd;  // d x m, orthonormal columns
  std::vector<Block> blocks{Block::Identity(d, d)};

  // Refine the joint eigenspace decomposition by the Hermitian and
  // anti-Hermitian parts of each basis element.
  for (const auto& b : a.basis()) {
    const Eigen::MatrixXcd be = b.to_eigen();
    const Eigen::MatrixXcd hermitian[2] = {(be + be.adjoint()) * 0.5,
                                           (be - be.adjoint()) * Complex(0.0, -0.5)};
    for (const auto& h : hermitian) {
      const double scale = std::max(1.0, h.norm());
      std::vector<Block> refined;
      for (const auto& v : blocks) {
        const Eigen::MatrixXcd restricted = v.adjoint() * h * v;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(restricted);
        const auto& values = solver.eigenvalues();
        const auto& vectors = solver.eigenvectors();
        Eigen::Index start = 0;
        for (Eigen::Index k = 1; k <= values.size(); ++k) {
          if (k == values.size() || values(k) - values(k - 1) > 1e-6 * scale) {
            refined.push_back(v * vectors.middleCols(start, k - start));
            start = k;
          }
        }
      }
      blocks = std::move(refined);
    }
  }

  std::vector<ComplexMatrix> projections;
  projections.reserve(blocks.size());
  for (const auto& v : blocks) projections.push_back(ComplexMatrix::from_eigen(v * v.adjoint()));
  if (projections.size() != a.dim()) {
    throw NumericalError("found " + std::to_string(projections.size()) +
                         " joint eigenspaces for a commutative algebra of dimension " +
                         std::to_string(a.dim()));
  }
  std::sort(projections.begin(), projections.end(), canonical_before);
  return projections;
}

std::vector<ComplexMatrix> projections_of(const StarAlgebra& a, double tol) {
  const auto minimal = minimal_projections(a, tol);
  const std::size_t k = minimal.size();
  if (k > 20) {
    throw CapExceeded("projection lattice with 2^" + std::to_string(k) + " elements");
  }
  std::vector<std::size_t> rank(k);
  for (std::size_t i = 0; i < k; ++i) rank[i] = std::lround(minimal[i].trace().real());

  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  std::iota(masks.begin(), masks.end(), 0u);
  auto mask_rank = [&](std::uint32_t m) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1u) r += rank[i];
    return r;
  };
  // Indicator pattern comparison: the first differing minimal projection
  // decides, membership first.
  auto pattern_before = [](std::uint32_t x, std::uint32_t y) {
    const std::uint32_t diff = x ^ y;
    if (diff == 0) return false;
    return (x >> std::countr_zero(diff) & 1u) != 0;
  };
  std::sort(masks.begin(), masks.end(), [&](std::uint32_t x, std::uint32_t y) {
    const auto rx = mask_rank(x);
    const auto ry = mask_rank(y);
    return rx != ry ? rx < ry : pattern_before(x, y);
  });

  std::vector<ComplexMatrix> out;
  out.reserve(masks.size());
  for (std::uint32_t m : masks) {
    ComplexMatrix p(a.ambient_dim());
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1u) p += minimal[i];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace bohrify
