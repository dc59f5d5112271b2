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

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bohrify/context_poset.hpp"
#include "bohrify/kernels.hpp"

namespace bohrify {

// Values of two characters of the same context are compared at this
// relative tolerance when a restriction is re-identified.
inline constexpr double kCharacterMatchTolerance = 1e-6;

struct Character {
  std::size_t context = 0;
  std::size_t index = 0;             // position among the context's minimal projections
  ComplexMatrix projection;          // the minimal projection p with A p = lambda(A) p
  std::vector<Complex> values;       // lambda on each basis element of the context

  // tr(p A) / tr(p); equals lambda(A) for A in the context.
  Complex evaluate(const ComplexMatrix& a) const;
};

// One character per minimal projection, in minimal-projection order.
std::vector<Character> gelfand_spectrum(const StarAlgebra& context, std::size_t context_index = 0,
                                        double tol = kDefaultTolerance);

// lambda restricted to a subcontext, matched against that subcontext's
// canonical characters. Returns the character index within 'sub'.
std::size_t restrict_character(const Character& lambda, const StarAlgebra& sub,
                               const std::vector<Character>& sub_characters);

struct SpectrumPoint {
  std::size_t context = 0;
  std::size_t character = 0;
  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
};

using PointSet = boost::dynamic_bitset<>;

// The external spectrum: all (C, lambda) with restriction arrows. Points are
// numbered context by context, characters in canonical order. The poset must
// outlive the spectrum.
class ExternalSpectrum {
 public:
  ExternalSpectrum() = default;
  ExternalSpectrum(const ContextPoset& poset, Execution exec = Execution::kParallel);

  const ContextPoset& poset() const { return *poset_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<SpectrumPoint>& points() const { return points_; }
  const SpectrumPoint& point(std::size_t p) const { return points_.at(p); }
  const std::vector<Character>& characters(std::size_t context) const {
    return characters_.at(context);
  }
  const Character& character(std::size_t p) const {
    return characters_[points_[p].context][points_[p].character];
  }
  std::size_t point_index(std::size_t context, std::size_t character) const {
    return offsets_.at(context) + character;
  }
  // Point of the restriction of p to 'context'; requires context <= context(p).
  std::size_t restrict_point(std::size_t p, std::size_t context) const;

  // Non-identity arrows (C, lambda) -> (C', lambda|C') for C' strictly below C.
  std::vector<std::pair<std::size_t, std::size_t>> arrows() const;
  // Restricting in two steps agrees with restricting directly.
  bool composition_closed() const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return ~PointSet(size()); }
  std::string point_label(std::size_t p) const;
  std::string describe(const PointSet& s) const;

 private:
  const ContextPoset* poset_ = nullptr;
  std::vector<std::vector<Character>> characters_;
  std::vector<std::size_t> offsets_;
  std::vector<SpectrumPoint> points_;
  // restriction_[c * n + d][k]: character of d restricted from character k of c
  std::vector<std::vector<std::size_t>> restriction_;
};

ExternalSpectrum external_spectrum(const ContextPoset& poset,
                                   Execution exec = Execution::kParallel);

// Closed: lambda in V_C and D <= C imply lambda|D in V_D. Each Sigma_C is
// finite and discrete, so the per-context weak* condition holds trivially.
bool is_closed(const ExternalSpectrum& sigma, const PointSet& s);
// Open: lambda' in Sigma_C' with C <= C' and lambda'|C in U_C imply lambda'
// in U_C'. Written independently of is_closed.
bool is_open(const ExternalSpectrum& sigma, const PointSet& s);

// {(D, lambda|D) | D <= C}
PointSet point_closure(const ExternalSpectrum& sigma, std::size_t p);

// At most one character per context, and any two occupied contexts lie below
// a common occupied context. Throws PreconditionError if s is not closed.
bool is_irreducible(const ExternalSpectrum& sigma, const PointSet& s);

// Per-point masks for the closed/open sweep kernel: below[p] is the closure
// of p, above[p] the points restricting to p.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> duality_masks(
    const ExternalSpectrum& sigma);

inline constexpr std::uint64_t kSobrietyCandidateCap = 1'000'000;

struct SobrietyWitness {
  PointSet set;
  std::vector<std::size_t> witnesses;  // points whose closure is the set
};

struct SobrietyReport {
  bool sober = true;
  bool partial = false;
  std::uint64_t candidates_visited = 0;
  std::vector<SobrietyWitness> irreducible_sets;
  std::optional<std::size_t> counterexample;  // index into irreducible_sets
};

// Exhaustive over closed families with at most one character per context;
// partial mode inspects closures of antichains of size <= 2 only. Throws
// CapExceeded when the exhaustive search passes the cap and partial is false.
SobrietyReport sobriety_check(const ExternalSpectrum& sigma, bool partial = false,
                              std::uint64_t cap = kSobrietyCandidateCap);

struct ChainStep {
  std::size_t depth = 0;
  std::size_t dim = 0;
  Complex requested{1.0, 0.0};
  Complex realized{1.0, 0.0};
  std::vector<Complex> available;  // values of compatible extensions at w_depth
  PointSet truncated;              // X*_depth
  bool closed = false;
  bool irreducible = false;
  std::vector<std::size_t> witnesses;
  bool witness_is_top = false;
  bool witness_escapes = false;  // top point not in X*_j for any j < depth
};

struct ChainReport {
  ContextPoset poset;  // V_0 = span{I} below V_1 < ... < V_n
  std::vector<std::size_t> dims;
  bool strictly_ascending = false;
  bool distinct_witnesses = false;
  std::vector<std::size_t> top_points;  // (V_k, lambda_k) for k = 0..n
  std::vector<ChainStep> steps;         // k = 1..n

  bool passed() const;
};

// Truncated non-sobriety construction: V_k generated by the Weyl operators of
// the first k surfaces, lambda_{k+1} extending lambda_k with its value at
// w_{k+1} snapped to the compatible value nearest to the requested phase.
// Missing phases default to 1.
ChainReport nonsober_chain(const HolonomyModel& model, const std::vector<Surface>& surfaces,
                           const GroupField& d, const std::vector<Complex>& phases,
                           double tol = kDefaultTolerance);

}  // namespace bohrify
