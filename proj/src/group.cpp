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
#include "bohrify/group.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "bohrify/error.hpp"

namespace bohrify {
namespace {

FiniteGroup cyclic(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table("Z" + std::to_string(n), std::move(labels), std::move(table));
}

// Permutations of {0,1,2}; (p q)(x) = p(q(x)).
FiniteGroup symmetric3() {
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms = {Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{2, 1, 0},
                                     Perm{0, 2, 1}, Perm{1, 2, 0}, Perm{2, 0, 1}};
  std::vector<std::string> labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) table[a][b] = k;
    }
  }
  return FiniteGroup::from_table("S3", std::move(labels), std::move(table));
}

// Quaternion units: element = sign * unit, unit in {1,i,j,k}; index = 2*unit + (sign<0).
FiniteGroup quaternion8() {
  // unit_product[u][v] = (sign, unit) of u*v for u, v in {1,i,j,k}.
  constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
      const int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      const int sign = sa * sb * kSign[ua][ub];
      table[a][b] = static_cast<std::size_t>(2 * kUnit[ua][ub] + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup::from_table("Q8", std::move(labels), std::move(table));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> labels,
                                    std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw ValidationError("group '" + name + "' has no elements");
  if (table.size() != n) {
    throw ValidationError("group '" + name + "': Cayley table has " + std::to_string(table.size()) +
                          " rows for " + std::to_string(n) + " elements");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) {
        throw ValidationError("group '" + name + "': duplicate element label '" + labels[i] + "'");
      }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw ValidationError("group '" + g.name_ + "': row " + g.labels_[a] + " has " +
                            std::to_string(table[a].size()) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw ValidationError("group '" + g.name_ + "': product " + g.labels_[a] + "*" +
                              g.labels_[b] + " is out of range");
      }
      g.table_[a * n + b] = table[a][b];
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
          throw ValidationError("group '" + g.name_ + "': associativity fails for (" +
                                g.labels_[a] + ", " + g.labels_[b] + ", " + g.labels_[c] + ")");
        }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = g.multiply(e, a) == a && g.multiply(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw ValidationError("group '" + g.name_ + "': no identity element");

  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.multiply(a, b) == g.identity_ && g.multiply(b, a) == g.identity_) g.inverse_[a] = b;
    if (g.inverse_[a] == n) {
      throw ValidationError("group '" + g.name_ + "': element " + g.labels_[a] + " has no inverse");
    }
  }
  return g;
}

FiniteGroup FiniteGroup::builtin(std::string_view name) {
  if (name == "S3") return symmetric3();
  if (name == "Q8") return quaternion8();
  if (name.size() >= 2 && name[0] == 'Z') {
    std::size_t n = 0;
    const auto* first = name.data() + 1;
    const auto* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc{} && ptr == last && n >= 1 && n <= 64) return cyclic(n);
  }
  throw ValidationError("unknown built-in group '" + std::string(name) +
                        "' (expected Z2, Z3, Z4, S3, Q8 or Zn)");
}

GroupElement FiniteGroup::power(GroupElement a, int exponent) const {
  GroupElement base = exponent < 0 ? inverse(a) : a;
  GroupElement out = identity_;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out = multiply(out, base);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!commute(a, b)) return false;
  return true;
}

GroupElement FiniteGroup::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ValidationError("group '" + name_ + "' has no element '" + std::string(label) + "'");
}

std::vector<std::size_t> FiniteGroup::conjugacy_classes() const {
  const std::size_t n = size();
  std::vector<std::size_t> cls(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != n) continue;
    for (std::size_t g = 0; g < n; ++g) cls[conjugate(g, x)] = x;
  }
  return cls;
}

}  // namespace bohrify
