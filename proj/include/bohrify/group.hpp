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
#include <string>
#include <string_view>
#include <vector>

namespace bohrify {

using GroupElement = std::size_t;

// A finite group given by its Cayley table. Stands in for the compact gauge
// group, so that connection space and its L2 space are finite.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Validates closure, associativity, identity and inverses. Violations are
  // reported with the offending elements.
  static FiniteGroup from_table(std::string name, std::vector<std::string> labels,
                                std::vector<std::vector<std::size_t>> table);

  // Z2, Z3, Z4, S3, Q8 (and any Zn with n >= 1).
  static FiniteGroup builtin(std::string_view name);

  const std::string& name() const { return name_; }
  std::size_t size() const { return labels_.size(); }
  GroupElement identity() const { return identity_; }
  GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a * size() + b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  GroupElement power(GroupElement a, int exponent) const;
  GroupElement conjugate(GroupElement g, GroupElement x) const {  // g x g^-1
    return multiply(multiply(g, x), inverse(g));
  }
  bool commute(GroupElement a, GroupElement b) const { return multiply(a, b) == multiply(b, a); }
  bool is_abelian() const;

  const std::string& label(GroupElement a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  GroupElement index_of(std::string_view label) const;

  // Conjugacy class index of each element, classes numbered by first member.
  std::vector<std::size_t> conjugacy_classes() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  std::vector<GroupElement> inverse_;
  GroupElement identity_ = 0;
};

}  // namespace bohrify
