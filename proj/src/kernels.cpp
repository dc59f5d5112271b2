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
#include "bohrify/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>

#include "bohrify/error.hpp"

namespace bohrify::kernels {
namespace {

void check_multiply_shapes(std::span<const Complex> a, std::span<const Complex> b,
                           std::span<Complex> out, std::size_t dim) {
  const std::size_t n = dim * dim;
  if (a.size() != n || b.size() != n || out.size() != n) {
    throw DimensionError("multiply: buffers do not hold dim*dim entries");
  }
}

inline void multiply_row(std::span<const Complex> a, std::span<const Complex> b,
                         std::span<Complex> out, std::size_t dim, std::size_t i) {
  Complex* row = out.data() + i * dim;
  std::fill(row, row + dim, Complex{});
  for (std::size_t k = 0; k < dim; ++k) {
    const Complex aik = a[i * dim + k];
    if (aik == Complex{}) continue;
    const Complex* brow = b.data() + k * dim;
    // Written out so the compiler skips the inf/nan recovery of operator*.
    const double ar = aik.real(), ai = aik.imag();
    for (std::size_t j = 0; j < dim; ++j) {
      const double br = brow[j].real(), bi = brow[j].imag();
      row[j] += Complex{ar * br - ai * bi, ar * bi + ai * br};
    }
  }
}

void check_sweep_shapes(std::span<const std::uint64_t> below, std::span<const std::uint64_t> above) {
  if (below.size() != above.size()) throw DimensionError("duality sweep: mask arrays differ");
  if (below.size() > 30) throw CapExceeded("duality sweep: more than 30 points");
}

// Per-family body shared by both sweeps.
inline void sweep_one(std::uint64_t family, std::uint64_t all, std::span<const std::uint64_t> below,
                      std::span<const std::uint64_t> above, bool& closed, bool& open_complement) {
  closed = true;
  for (std::uint64_t rest = family; rest != 0; rest &= rest - 1) {
    const int p = std::countr_zero(rest);
    if ((below[p] & ~family) != 0) {
      closed = false;
      break;
    }
  }
  const std::uint64_t complement = all & ~family;
  open_complement = true;
  for (std::uint64_t rest = complement; rest != 0; rest &= rest - 1) {
    const int p = std::countr_zero(rest);
    if ((above[p] & ~complement) != 0) {
      open_complement = false;
      break;
    }
  }
}

}  // namespace

namespace serial {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t dim) {
  check_multiply_shapes(a, b, out, dim);
  for (std::size_t i = 0; i < dim; ++i) multiply_row(a, b, out, dim, i);
}

std::vector<std::uint8_t> commutation_table(std::span<const ComplexMatrix> mats, double tol) {
  const std::size_t n = mats.size();
  std::vector<std::uint8_t> table(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint8_t c = commutes(mats[i], mats[j], tol) ? 1 : 0;
      table[i * n + j] = c;
      table[j * n + i] = c;
    }
  }
  return table;
}

DualitySweep closed_open_duality(std::span<const std::uint64_t> below,
                                 std::span<const std::uint64_t> above) {
  check_sweep_shapes(below, above);
  const std::size_t n = below.size();
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  const std::uint64_t count = 1ULL << n;
  DualitySweep r;
  r.families = count;
  r.first_mismatch = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t f = 0; f < count; ++f) {
    bool closed = false;
    bool open = false;
    sweep_one(f, all, below, above, closed, open);
    r.closed += closed;
    r.open_complements += open;
    if (closed != open) {
      ++r.mismatches;
      r.first_mismatch = std::min(r.first_mismatch, f);
    }
  }
  if (r.mismatches == 0) r.first_mismatch = 0;
  return r;
}

}  // namespace serial

namespace omp {

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t dim) {
  check_multiply_shapes(a, b, out, dim);
  const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) multiply_row(a, b, out, dim, static_cast<std::size_t>(i));
}

std::vector<std::uint8_t> commutation_table(std::span<const ComplexMatrix> mats, double tol) {
  const std::size_t n = mats.size();
  std::vector<std::uint8_t> table(n * n, 1);
  const auto pairs = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < pairs; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / n;
    const auto j = static_cast<std::size_t>(idx) % n;
    if (j <= i) continue;
    const std::uint8_t c = commutes(mats[i], mats[j], tol) ? 1 : 0;
    table[i * n + j] = c;
    table[j * n + i] = c;
  }
  return table;
}

DualitySweep closed_open_duality(std::span<const std::uint64_t> below,
                                 std::span<const std::uint64_t> above) {
  check_sweep_shapes(below, above);
  const std::size_t n = below.size();
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  const auto count = static_cast<std::int64_t>(1ULL << n);
  std::uint64_t closed_total = 0;
  std::uint64_t open_total = 0;
  std::uint64_t mismatch_total = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(+ : closed_total, open_total, mismatch_total)     reduction(min : first)
  for (std::int64_t f = 0; f < count; ++f) {
    bool closed = false;
    bool open = false;
    sweep_one(static_cast<std::uint64_t>(f), all, below, above, closed, open);
    closed_total += closed;
    open_total += open;
    if (closed != open) {
      ++mismatch_total;
      first = std::min(first, static_cast<std::uint64_t>(f));
    }
  }
  DualitySweep r;
  r.families = static_cast<std::uint64_t>(count);
  r.closed = closed_total;
  r.open_complements = open_total;
  r.mismatches = mismatch_total;
  r.first_mismatch = mismatch_total == 0 ? 0 : first;
  return r;
}

}  // namespace omp

void multiply(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out,
              std::size_t dim, Execution exec) {
  exec == Execution::kParallel ? omp::multiply(a, b, out, dim) : serial::multiply(a, b, out, dim);
}

std::vector<std::uint8_t> commutation_table(std::span<const ComplexMatrix> mats, double tol,
                                            Execution exec) {
  return exec == Execution::kParallel ? omp::commutation_table(mats, tol)
                                      : serial::commutation_table(mats, tol);
}

DualitySweep closed_open_duality(std::span<const std::uint64_t> below,
                                 std::span<const std::uint64_t> above, Execution exec) {
  return exec == Execution::kParallel ? omp::closed_open_duality(below, above)
                                      : serial::closed_open_duality(below, above);
}

}  // namespace bohrify::kernels
