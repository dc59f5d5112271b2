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

#include <cstddef>
#include <vector>

#include "bohrify/matrix.hpp"

namespace bohrify {

// A unital *-closed subalgebra of M_dim(C), stored as a basis orthonormal
// under the normalized trace inner product. Immutable once built.
class StarAlgebra {
 public:
  StarAlgebra() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  // Linear dimension of the algebra.
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }
  bool is_commutative() const { return commutative_; }

  // Coordinates of m in the basis (no membership check).
  std::vector<Complex> coordinates(const ComplexMatrix& m) const;
  // |m - proj(m)| <= tol * max(1, |m|) in the normalized norm.
  bool contains(const ComplexMatrix& m, double tol = kDefaultTolerance) const;

  // The span {c * I}.
  static StarAlgebra scalars(std::size_t ambient_dim);

 private:
  friend StarAlgebra generate_star_algebra(const std::vector<ComplexMatrix>&, std::size_t, double);

  std::size_t ambient_dim_ = 0;
  std::vector<ComplexMatrix> basis_;
  bool commutative_ = true;
};

// Smallest unital *-subalgebra containing the generators. Seeds the span with
// I, the generators and their adjoints, then closes it under left
// multiplication by that seed set until the dimension stops growing.
StarAlgebra generate_star_algebra(const std::vector<ComplexMatrix>& generators,
                                  std::size_t ambient_dim, double tol = kDefaultTolerance);

bool is_commutative_algebra(const StarAlgebra& a, double tol = kDefaultTolerance);

// A <= B: every basis element of A lies in the span of B.
bool subalgebra_leq(const StarAlgebra& a, const StarAlgebra& b, double tol = kDefaultTolerance);
bool same_subspace(const StarAlgebra& a, const StarAlgebra& b, double tol = kDefaultTolerance);

// Re-checks the structural invariants (unital, *-closed, product-closed,
// orthonormal basis) with pairwise products. Quadratic; meant for tests.
bool verify_star_algebra(const StarAlgebra& a, double tol = kDefaultTolerance);

// Minimal projections of a commutative algebra, canonically ordered. They are
// the projections onto the joint eigenspaces; their number equals dim().
std::vector<ComplexMatrix> minimal_projections(const StarAlgebra& a,
                                               double tol = kDefaultTolerance);

// All 2^k projections of a commutative algebra with k minimal projections,
// ordered by rank, then by the indicator pattern over the minimal projections
// (earlier minimal projections first).
std::vector<ComplexMatrix> projections_of(const StarAlgebra& a, double tol = kDefaultTolerance);

}  // namespace bohrify
