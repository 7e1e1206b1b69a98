#pragma once

#include <cstdint>
#include <vector>

#include "punchline/rational.hpp"
#include "punchline/semantics.hpp"

namespace punchline {

// Hard constraint: a member of P. Violating interpretations are impossible.
struct StrictRule {
  Formula formula;
  bool is_norm = false;
};

// Defeasible rule "in context `antecedent`, `consequent` is more plausible
// than its negation".
struct DefaultRule {
  Formula antecedent;
  Formula consequent;
  bool is_norm = false;

  // Material counterpart !antecedent | consequent.
  Formula material() const {
    return Formula::disjunction(Formula::negation(antecedent), consequent);
  }
  // The situation in which the rule is violated: antecedent & !consequent.
  Formula violation() const {
    return Formula::conjunction(antecedent, Formula::negation(consequent));
  }
};

// Partition of the default rules by Z-rank. Rank 0 holds the most general
// rules (assigned first by tolerance); higher ranks are more specific and
// take priority. The strict rules P form an implicit extra stratum above
// every rank, with the highest priority of all.
//
// Consumers that need "priority" order (P first, then descending rank)
// should use priority_count()/defaults_at_priority() instead of touching
// the raw ranks, so the rank/priority conversion happens in one place.
class Stratification {
 public:
  Stratification() = default;
  explicit Stratification(std::vector<std::vector<std::size_t>> ranks)
      : ranks_(std::move(ranks)) {}

  const std::vector<std::vector<std::size_t>>& ranks() const { return ranks_; }
  std::size_t rank_count() const { return ranks_.size(); }

  // Priority 0 is the P stratum; priorities 1..rank_count() are the default
  // strata from most specific (highest rank) down to rank 0.
  std::size_t priority_count() const { return ranks_.size() + 1; }
  const std::vector<std::size_t>& defaults_at_priority(std::size_t priority) const {
    return ranks_[ranks_.size() - priority];
  }

 private:
  std::vector<std::vector<std::size_t>> ranks_;
};

// A listener's knowledge: strict rules P and default rules Delta over one
// universe. Construction verifies that P is classically consistent and that
// Delta stratifies; instances are immutable afterwards.
class KnowledgeBase {
 public:
  KnowledgeBase(AtomUniverse universe, std::vector<StrictRule> strict,
                std::vector<DefaultRule> defaults);

  const AtomUniverse& universe() const { return universe_; }
  const std::vector<StrictRule>& strict() const { return strict_; }
  const std::vector<DefaultRule>& defaults() const { return defaults_; }

  std::vector<Formula> strict_formulas() const;

  // Copies with one rule dropped (norm disregard builds these).
  KnowledgeBase without_strict(std::size_t index) const;
  KnowledgeBase without_default(std::size_t index) const;

 private:
  AtomUniverse universe_;
  std::vector<StrictRule> strict_;
  std::vector<DefaultRule> defaults_;
};

// Tolerance test of the stratification procedure: rule `d` is tolerated by
// the rule set `delta` under P iff
//   P + (antecedent_d & consequent_d) + { materials of all rules in delta }
// is satisfiable.
bool tolerates(std::span<const DefaultRule> delta, const DefaultRule& d,
               std::span<const StrictRule> strict, const AtomUniverse& universe);

// Iterated tolerance partition: rank 0 collects every default tolerated by
// the not-yet-ranked set, then repeats on the rest. Deterministic in input
// order; throws InconsistentDefaultsError when a round ranks nothing while
// defaults remain.
Stratification z_stratify(const KnowledgeBase& kb);

// Plausibility levels over the whole universe. Level 0 is "impossible"
// (reserved for interpretations falsifying P); levels 1..L are the positive
// plausibility layers with L the most plausible. The numeric possibility
// degree of a world is level/L, an exact rational.
class RankedDistribution {
 public:
  RankedDistribution(std::vector<std::uint32_t> levels, std::uint32_t top,
                     std::size_t atom_count)
      : levels_(std::move(levels)), top_(top), atom_count_(atom_count) {}

  std::uint32_t level(Interpretation w) const { return levels_[w.index()]; }
  std::uint32_t top_level() const { return top_; }  // L
  std::size_t atom_count() const { return atom_count_; }
  std::uint32_t world_count() const { return std::uint32_t{1} << atom_count_; }

  Rational pi(Interpretation w) const {
    return Rational(level(w), top_);
  }

 private:
  std::vector<std::uint32_t> levels_;
  std::uint32_t top_;
  std::size_t atom_count_;
};

// Least restrictive distribution honoring P and the default constraints:
// a world falsifying P sits at level 0; otherwise its level is determined
// by the highest rank it violates (best-out), with violation-free worlds
// at the top level L = rank_count + 1.
RankedDistribution build_distribution(const KnowledgeBase& kb);

// Max of pi over models of phi; 0/1 for an unsatisfiable phi.
Rational possibility(const RankedDistribution& dist, const Formula& phi);

// 1 - possibility(!phi).
Rational necessity(const RankedDistribution& dist, const Formula& phi);

}  // namespace punchline
