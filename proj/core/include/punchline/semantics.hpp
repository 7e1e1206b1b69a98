#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "punchline/formula.hpp"

namespace punchline {

// Total truth assignment over a universe, canonically encoded: bit k of
// the index is the value of the k-th declared atom.
class Interpretation {
 public:
  constexpr Interpretation() = default;
  constexpr explicit Interpretation(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  constexpr bool truth(AtomId atom) const { return (index_ >> atom.value) & 1u; }

  // Literal list in declaration order, e.g. "k t ¬c r".
  std::string to_string(const AtomUniverse& universe) const;

  friend auto operator<=>(Interpretation, Interpretation) = default;

 private:
  std::uint32_t index_ = 0;
};

// Set of interpretations, kept sorted by canonical index so iteration is
// deterministic across runs and platforms.
class ModelSet {
 public:
  ModelSet() = default;
  explicit ModelSet(std::vector<std::uint32_t> indices);

  static ModelSet all(const AtomUniverse& universe);

  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  bool contains(Interpretation w) const;
  const std::vector<std::uint32_t>& indices() const { return indices_; }
  Interpretation at(std::size_t i) const { return Interpretation(indices_[i]); }

  ModelSet intersect(const ModelSet& other) const;
  ModelSet unite(const ModelSet& other) const;
  ModelSet complement(const AtomUniverse& universe) const;
  bool disjoint(const ModelSet& other) const;
  bool subset_of(const ModelSet& other) const;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;

 private:
  std::vector<std::uint32_t> indices_;
};

// Mod(phi): exactly the interpretations satisfying phi, by exhaustive
// evaluation of all 2^n assignments.
ModelSet models_of(const Formula& phi, const AtomUniverse& universe);

// True iff every model of the conjunction of `premises` satisfies phi.
// Empty premises make this a validity check.
bool entails(std::span<const Formula> premises, const Formula& phi,
             const AtomUniverse& universe);

// True iff the conjunction of `premises` has at least one model.
bool is_consistent(std::span<const Formula> premises, const AtomUniverse& universe);

// Same truth table (logical equivalence).
bool equivalent(const Formula& a, const Formula& b, const AtomUniverse& universe);

// Canonical DNF realizing exactly the given model set: a disjunction of
// one full minterm per model, in canonical index order; `false` for the
// empty set. Useful for lifting sampled model sets back to syntax.
Formula formula_from_models(const ModelSet& models, const AtomUniverse& universe);

}  // namespace punchline
