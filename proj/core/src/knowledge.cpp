#include "punchline/knowledge.hpp"

#include <algorithm>
#include <stdexcept>

#include "punchline/errors.hpp"

namespace punchline {

KnowledgeBase::KnowledgeBase(AtomUniverse universe, std::vector<StrictRule> strict,
                             std::vector<DefaultRule> defaults)
    : universe_(std::move(universe)),
      strict_(std::move(strict)),
      defaults_(std::move(defaults)) {
  if (universe_.size() == 0) {
    throw Error("knowledge base needs at least one atom");
  }
  if (!is_consistent(strict_formulas(), universe_)) {
    throw InconsistentStrictError("the strict rules have no common model");
  }
  z_stratify(*this);  // throws InconsistentDefaultsError when Delta is bad
}

std::vector<Formula> KnowledgeBase::strict_formulas() const {
  std::vector<Formula> out;
  out.reserve(strict_.size());
  for (const auto& rule : strict_) out.push_back(rule.formula);
  return out;
}

KnowledgeBase KnowledgeBase::without_strict(std::size_t index) const {
  std::vector<StrictRule> rest;
  rest.reserve(strict_.size() - 1);
  for (std::size_t i = 0; i < strict_.size(); ++i) {
    if (i != index) rest.push_back(strict_[i]);
  }
  return KnowledgeBase(universe_, std::move(rest), defaults_);
}

KnowledgeBase KnowledgeBase::without_default(std::size_t index) const {
  std::vector<DefaultRule> rest;
  rest.reserve(defaults_.size() - 1);
  for (std::size_t i = 0; i < defaults_.size(); ++i) {
    if (i != index) rest.push_back(defaults_[i]);
  }
  return KnowledgeBase(universe_, strict_, std::move(rest));
}

bool tolerates(std::span<const DefaultRule> delta, const DefaultRule& d,
               std::span<const StrictRule> strict, const AtomUniverse& universe) {
  std::vector<Formula> premises;
  premises.reserve(strict.size() + delta.size() + 1);
  for (const auto& rule : strict) premises.push_back(rule.formula);
  premises.push_back(Formula::conjunction(d.antecedent, d.consequent));
  for (const auto& rule : delta) premises.push_back(rule.material());
  return is_consistent(premises, universe);
}

Stratification z_stratify(const KnowledgeBase& kb) {
  const auto& defaults = kb.defaults();
  std::vector<std::size_t> remaining(defaults.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::vector<std::vector<std::size_t>> ranks;
  while (!remaining.empty()) {
    std::vector<DefaultRule> pool;
    pool.reserve(remaining.size());
    for (std::size_t i : remaining) pool.push_back(defaults[i]);

    std::vector<std::size_t> tolerated;
    for (std::size_t i : remaining) {
      if (tolerates(pool, defaults[i], kb.strict(), kb.universe())) {
        tolerated.push_back(i);
      }
    }
    if (tolerated.empty()) {
      std::string stuck;
      for (std::size_t i : remaining) {
        if (!stuck.empty()) stuck += ", ";
        stuck += defaults[i].antecedent.to_string(kb.universe()) + " ~> " +
                 defaults[i].consequent.to_string(kb.universe());
      }
      throw InconsistentDefaultsError("default rules cannot be stratified: " + stuck);
    }
    ranks.push_back(tolerated);
    std::vector<std::size_t> rest;
    for (std::size_t i : remaining) {
      if (!std::binary_search(tolerated.begin(), tolerated.end(), i)) {
        rest.push_back(i);
      }
    }
    remaining = std::move(rest);
  }
  return Stratification(std::move(ranks));
}

RankedDistribution build_distribution(const KnowledgeBase& kb) {
  const Stratification strat = z_stratify(kb);
  const auto& universe = kb.universe();
  const std::uint32_t top = static_cast<std::uint32_t>(strat.rank_count()) + 1;

  std::vector<Formula> p = kb.strict_formulas();
  std::vector<Formula> materials;
  materials.reserve(kb.defaults().size());
  for (const auto& d : kb.defaults()) materials.push_back(d.material());

  std::vector<std::uint32_t> levels(universe.world_count(), 0);
  bool top_reached = false;
  for (std::uint32_t w = 0; w < universe.world_count(); ++w) {
    bool strict_ok = true;
    for (const Formula& f : p) {
      if (!f.evaluate(w)) {
        strict_ok = false;
        break;
      }
    }
    if (!strict_ok) continue;  // level 0

    // Best-out: only the highest violated rank matters.
    std::int64_t worst = -1;
    for (std::size_t r = strat.rank_count(); r-- > 0;) {
      for (std::size_t i : strat.ranks()[r]) {
        if (!materials[i].evaluate(w)) {
          worst = static_cast<std::int64_t>(r);
          break;
        }
      }
      if (worst >= 0) break;
    }
    levels[w] = worst < 0 ? top : top - 1 - static_cast<std::uint32_t>(worst);
    if (levels[w] == top) top_reached = true;
  }
  if (!top_reached) {
    // A stratifiable base always leaves its tolerance witnesses untouched.
    throw std::logic_error("distribution is not normalized");
  }
  return RankedDistribution(std::move(levels), top, universe.size());
}

Rational possibility(const RankedDistribution& dist, const Formula& phi) {
  std::uint32_t best = 0;
  for (std::uint32_t w = 0; w < dist.world_count(); ++w) {
    if (phi.evaluate(w)) best = std::max(best, dist.level(Interpretation(w)));
  }
  return Rational(best, dist.top_level());
}

Rational necessity(const RankedDistribution& dist, const Formula& phi) {
  return Rational::one() - possibility(dist, Formula::negation(phi));
}

}  // namespace punchline
