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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bohrify/holonomy.hpp"
#include "bohrify/kernels.hpp"
#include "bohrify/star_algebra.hpp"

namespace bohrify {

struct ConfigurationTag {
  FunctionTable table;
};

struct WeylTag {
  Surface surface;
  GroupField field;
};

// Generators remember how they were made so that symmetries can be applied
// to them; a raw matrix carries no tag.
using GeneratorTag = std::variant<std::monostate, ConfigurationTag, WeylTag>;

struct Generator {
  std::string label;
  ComplexMatrix matrix;
  GeneratorTag tag;
};

Generator make_configuration_generator(const HolonomyModel& model, std::string label,
                                       FunctionTable table);
Generator make_weyl_generator(const HolonomyModel& model, std::string label, Surface surface,
                              GroupField field);

struct Context {
  StarAlgebra algebra;
  std::vector<std::size_t> generators;  // indices into the poset's generator list
  std::string label;
};

inline constexpr std::size_t kMaxPosetGenerators = 20;

// A finite, inclusion-ordered family of commutative unital *-subalgebras of
// an ambient algebra. Context 0 is the bottom, span{I}.
class ContextPoset {
 public:
  ContextPoset() = default;

  // Validates commutativity, unitality, distinctness, the partial order and
  // the bottom element. Contexts are kept in the given order; the unique
  // one-dimensional context must come first.
  static ContextPoset from_contexts(StarAlgebra ambient, std::vector<Generator> generators,
                                   std::vector<Context> contexts, double tol = kDefaultTolerance);

  const StarAlgebra& ambient() const { return ambient_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  const Context& context(std::size_t i) const { return contexts_.at(i); }
  std::size_t size() const { return contexts_.size(); }
  static constexpr std::size_t bottom() { return 0; }
  double tolerance() const { return tol_; }

  bool leq(std::size_t lower, std::size_t upper) const { return order_[lower * size() + upper]; }
  // Pairs (lower, upper) with lower < upper and nothing strictly in between.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;
  std::optional<std::size_t> find(const StarAlgebra& algebra) const;

 private:
  StarAlgebra ambient_;
  std::vector<Generator> generators_;
  std::vector<Context> contexts_;
  std::vector<std::uint8_t> order_;
  double tol_ = kDefaultTolerance;
};

// Contexts generated by every pairwise-commuting subset of the generators,
// deduplicated, ordered by linear dimension and then by generating subset.
ContextPoset build_context_poset(StarAlgebra ambient, std::vector<Generator> generators,
                                 double tol = kDefaultTolerance,
                                 Execution exec = Execution::kParallel);

struct AscendingChainReport {
  bool satisfies_acc = true;
  std::vector<std::size_t> longest_chain;  // context indices, bottom first
};

// A finite poset always satisfies the ascending chain condition; the chain is
// a longest strictly ascending one, lexicographically smallest among ties.
AscendingChainReport ascending_chain_check(const ContextPoset& poset);

struct MixedCandidate {
  std::string label;
  bool invariant = false;  // f o Theta == f
  bool commutes = false;   // w T_f == T_f w
};

// For each candidate f, whether it is invariant under the translation and
// whether T_f commutes with the Weyl operator.
std::vector<MixedCandidate> mixed_context_search(
    const HolonomyModel& model, const Surface& surface, const GroupField& d,
    const std::vector<std::pair<std::string, FunctionTable>>& config_fns,
    double tol = kDefaultTolerance);

}  // namespace bohrify
