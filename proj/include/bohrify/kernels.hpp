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

// Data-parallel inner loops. Every kernel has a serial reference version and
// an OpenMP version with identical results (bitwise, for the floating point
// kernels: each output element is accumulated in the same order).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bohrify/matrix.hpp"

namespace bohrify {

enum class Execution { kSerial, kParallel };

namespace kernels {

struct DualitySweep {
  std::uint64_t families = 0;
  std::uint64_t closed = 0;
  std::uint64_t open_complements = 0;
  // Families whose closedness disagrees with openness of the complement.
  std::uint64_t mismatches = 0;
  std::uint64_t first_mismatch = 0;

  friend bool operator==(const DualitySweep&, const DualitySweep&) = default;
};

namespace serial {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t dim);

// Row-major n*n table, entry 1 iff matrices i and j commute within tol.
std::vector<std::uint8_t> commutation_table(std::span<const ComplexMatrix> mats, double tol);

// Enumerates every subset F of n <= 30 points. below[p] is the mask of points
// p restricts to, above[p] the mask of points extending p (both reflexive).
// F is closed iff below[p] is inside F for each p in F; the complement G is
// open iff above[p] is inside G for each p in G.
DualitySweep closed_open_duality(std::span<const std::uint64_t> below,
                                 std::span<const std::uint64_t> above);

}  // namespace serial

namespace omp {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t dim);
std::vector<std::uint8_t> commutation_table(std::span<const ComplexMatrix> mats, double tol);
DualitySweep closed_open_duality(std::span<const std::uint64_t> below,
                                 std::span<const std::uint64_t> above);

}  // namespace omp

// Dispatch helpers.
void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t dim, Execution exec);
std::vector<std::uint8_t> commutation_table(std::span<const ComplexMatrix> mats, double tol,
                                            Execution exec);
DualitySweep closed_open_duality(std::span<const std::uint64_t> below,
                                 std::span<const std::uint64_t> above, Execution exec);

}  // namespace kernels
}  // namespace bohrify
