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

#include <doctest.h>

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "bohrify/error.hpp"
#include "bohrify/kernels.hpp"
#include "bohrify/matrix.hpp"
#include "bohrify/star_algebra.hpp"
#include "support.hpp"

namespace bohrify {
namespace {

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

std::size_t rank_of(const ComplexMatrix& p) {
  return static_cast<std::size_t>(std::lround(p.trace().real()));
}

}  // namespace

TEST_CASE("matrix basics") {
  const auto x = pauli_x();
  CHECK(x * x == ComplexMatrix::identity(2));
  CHECK(is_unitary(x));
  CHECK_FALSE(is_projection(x));
  CHECK(is_projection(ComplexMatrix::unit(2, 0, 0)));
  CHECK(x.trace() == Complex{0.0, 0.0});
  CHECK(normalized_norm(ComplexMatrix::identity(4)) == doctest::Approx(1.0));
  CHECK_FALSE(commutes(x, pauli_z()));

  const std::vector<std::size_t> image{2, 0, 1};
  const auto perm = ComplexMatrix::from_row_permutation(image);
  CHECK(perm(0, 2) == Complex{1.0, 0.0});
  CHECK(perm(1, 0) == Complex{1.0, 0.0});
  CHECK(is_unitary(perm));

  CHECK_THROWS_AS(x * ComplexMatrix::identity(3), DimensionError);
  CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 2.0}), DimensionError);
}

TEST_CASE("eigen round trip is exact") {
  const auto f = testing::random_table(9, 3);
  const ComplexMatrix m(3, f);
  CHECK(ComplexMatrix::from_eigen(m.to_eigen()) == m);
}

TEST_CASE("generated algebras") {
  SUBCASE("one self-adjoint unitary generates a two-dimensional commutative algebra") {
    const auto a = generate_star_algebra({pauli_x()}, 2);
    CHECK(a.dim() == 2);
    CHECK(a.is_commutative());
    CHECK(verify_star_algebra(a));
    CHECK(a.contains(ComplexMatrix::identity(2)));
    CHECK_FALSE(a.contains(pauli_z()));
  }
  SUBCASE("x and z generate all of M2") {
    const auto a = generate_star_algebra({pauli_x(), pauli_z()}, 2);
    CHECK(a.dim() == 4);
    CHECK_FALSE(a.is_commutative());
    CHECK(verify_star_algebra(a));
  }
  SUBCASE("a non-normal generator pulls in its adjoint") {
    const auto a = generate_star_algebra({ComplexMatrix::unit(2, 0, 1)}, 2);
    CHECK(a.dim() == 4);
  }
  SUBCASE("scalars sit below everything") {
    const auto s = StarAlgebra::scalars(3);
    const auto a = generate_star_algebra({ComplexMatrix::unit(3, 0, 0)}, 3);
    CHECK(s.dim() == 1);
    CHECK(subalgebra_leq(s, a));
    CHECK_FALSE(subalgebra_leq(a, s));
    CHECK(same_subspace(a, generate_star_algebra({ComplexMatrix::unit(3, 1, 1) +
                                                  ComplexMatrix::unit(3, 2, 2)},
                                                 3)));
  }
}

TEST_CASE("minimal projections are the joint eigenspaces") {
  const std::vector<Complex> d{1.0, 1.0, -1.0, 2.0};
  const auto a = generate_star_algebra({ComplexMatrix::diagonal(d)}, 4);
  REQUIRE(a.dim() == 3);
  const auto mins = minimal_projections(a);
  REQUIRE(mins.size() == 3);
  ComplexMatrix sum(4);
  std::vector<std::size_t> ranks;
  for (const auto& p : mins) {
    CHECK(is_projection(p));
    CHECK(a.contains(p));
    sum += p;
    ranks.push_back(rank_of(p));
  }
  CHECK(approx_equal(sum, ComplexMatrix::identity(4)));
  std::sort(ranks.begin(), ranks.end());
  CHECK(ranks == std::vector<std::size_t>{1, 1, 2});
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      CHECK(approx_equal(mins[i] * mins[j], ComplexMatrix(4)));
    }
  }

  const auto all = projections_of(a);
  CHECK(all.size() == 8);
  CHECK(approx_equal(all.front(), ComplexMatrix(4)));
  CHECK(approx_equal(all.back(), ComplexMatrix::identity(4)));
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(rank_of(all[i - 1]) <= rank_of(all[i]));
}

TEST_CASE("serial and parallel kernels agree") {
  SUBCASE("multiply") {
    const std::size_t n = 24;
    const auto a = testing::random_table(n * n, 11);
    const auto b = testing::random_table(n * n, 12);
    std::vector<Complex> s(n * n), p(n * n);
    kernels::serial::multiply(a, b, s, n);
    kernels::omp::multiply(a, b, p, n);
    CHECK(s == p);
  }
  SUBCASE("commutation table") {
    std::vector<ComplexMatrix> mats;
    for (std::uint64_t k = 0; k < 6; ++k) {
      mats.push_back(ComplexMatrix::diagonal(testing::random_table(5, k)));
    }
    mats.push_back(ComplexMatrix(5, testing::random_table(25, 99)));
    const auto s = kernels::serial::commutation_table(mats, kDefaultTolerance);
    const auto p = kernels::omp::commutation_table(mats, kDefaultTolerance);
    CHECK(s == p);
    CHECK(s[0 * 7 + 1] == 1);  // diagonals commute
    CHECK(s[0 * 7 + 6] == 0);
  }
  SUBCASE("closed/open sweep") {
    // Points 0 < 1, 0 < 2 < 3, 4 isolated.
    const std::vector<std::uint64_t> below{0b00001, 0b00011, 0b00101, 0b01101, 0b10000};
    const std::vector<std::uint64_t> above{0b01111, 0b00010, 0b01100, 0b01000, 0b10000};
    const auto s = kernels::serial::closed_open_duality(below, above);
    const auto p = kernels::omp::closed_open_duality(below, above);
    CHECK(s == p);
    CHECK(s.families == 32);
    CHECK(s.mismatches == 0);
  }
}

// The sweep against a plain loop over subsets written from the definitions.
TEST_CASE("closed/open sweep matches a naive count") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 8;
    // Random partial order: strictly upper triangular relation, transitively closed.
    std::vector<std::uint64_t> below(n), above(n);
    for (std::size_t i = 0; i < n; ++i) below[i] = std::uint64_t{1} << i;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (rng() % 3 == 0) below[j] |= below[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (below[j] >> i & 1) above[i] |= std::uint64_t{1} << j;
      }
    }
    std::uint64_t closed = 0;
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
      bool down = true;
      for (std::size_t p = 0; p < n; ++p) {
        if ((f >> p & 1) && (below[p] & ~f)) down = false;
      }
      closed += down;
    }
    const auto sweep = kernels::closed_open_duality(below, above, Execution::kParallel);
    CHECK(sweep.closed == closed);
    CHECK(sweep.open_complements == closed);
    CHECK(sweep.mismatches == 0);
  }
}

}  // namespace bohrify
