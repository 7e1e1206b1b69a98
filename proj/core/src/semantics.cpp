#include "punchline/semantics.hpp"

#include <algorithm>

#include "punchline/errors.hpp"

namespace punchline {

namespace {

void check_universe_size(const AtomUniverse& universe) {
  if (universe.size() > AtomUniverse::kMaxAtoms) {
    throw UniverseTooLargeError("universe exceeds " +
                                std::to_string(AtomUniverse::kMaxAtoms) + " atoms");
  }
}

}  // namespace

std::string Interpretation::to_string(const AtomUniverse& universe) const {
  std::string out;
  for (std::size_t k = 0; k < universe.size(); ++k) {
    if (!out.empty()) out += ' ';
    if (!truth(AtomId{static_cast<std::uint32_t>(k)})) out += "¬";
    out += universe.name(AtomId{static_cast<std::uint32_t>(k)});
  }
  return out;
}

ModelSet::ModelSet(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

ModelSet ModelSet::all(const AtomUniverse& universe) {
  std::vector<std::uint32_t> indices(universe.world_count());
  for (std::uint32_t w = 0; w < indices.size(); ++w) indices[w] = w;
  return ModelSet(std::move(indices));
}

bool ModelSet::contains(Interpretation w) const {
  return std::binary_search(indices_.begin(), indices_.end(), w.index());
}

ModelSet ModelSet::intersect(const ModelSet& other) const {
  std::vector<std::uint32_t> out;
  std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(out));
  return ModelSet(std::move(out));
}

ModelSet ModelSet::unite(const ModelSet& other) const {
  std::vector<std::uint32_t> out;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(out));
  return ModelSet(std::move(out));
}

ModelSet ModelSet::complement(const AtomUniverse& universe) const {
  std::vector<std::uint32_t> out;
  auto it = indices_.begin();
  for (std::uint32_t w = 0; w < universe.world_count(); ++w) {
    if (it != indices_.end() && *it == w) {
      ++it;
    } else {
      out.push_back(w);
    }
  }
  return ModelSet(std::move(out));
}

bool ModelSet::disjoint(const ModelSet& other) const {
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

bool ModelSet::subset_of(const ModelSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

ModelSet models_of(const Formula& phi, const AtomUniverse& universe) {
  check_universe_size(universe);
  std::vector<std::uint32_t> out;
  const std::uint32_t count = universe.world_count();
  for (std::uint32_t w = 0; w < count; ++w) {
    if (phi.evaluate(w)) out.push_back(w);
  }
  return ModelSet(std::move(out));
}

bool entails(std::span<const Formula> premises, const Formula& phi,
             const AtomUniverse& universe) {
  check_universe_size(universe);
  const std::uint32_t count = universe.world_count();
  for (std::uint32_t w = 0; w < count; ++w) {
    bool all = true;
    for (const Formula& p : premises) {
      if (!p.evaluate(w)) {
        all = false;
        break;
      }
    }
    if (all && !phi.evaluate(w)) return false;
  }
  return true;
}

bool is_consistent(std::span<const Formula> premises, const AtomUniverse& universe) {
  check_universe_size(universe);
  const std::uint32_t count = universe.world_count();
  for (std::uint32_t w = 0; w < count; ++w) {
    bool all = true;
    for (const Formula& p : premises) {
      if (!p.evaluate(w)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool equivalent(const Formula& a, const Formula& b, const AtomUniverse& universe) {
  check_universe_size(universe);
  const std::uint32_t count = universe.world_count();
  for (std::uint32_t w = 0; w < count; ++w) {
    if (a.evaluate(w) != b.evaluate(w)) return false;
  }
  return true;
}

Formula formula_from_models(const ModelSet& models, const AtomUniverse& universe) {
  if (models.empty()) return Formula::bottom();
  std::optional<Formula> result;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const Interpretation w = models.at(i);
    std::optional<Formula> minterm;
    for (std::size_t k = 0; k < universe.size(); ++k) {
      const AtomId id{static_cast<std::uint32_t>(k)};
      Formula lit = Formula::atom(id);
      if (!w.truth(id)) lit = Formula::negation(std::move(lit));
      minterm = minterm ? Formula::conjunction(std::move(*minterm), std::move(lit))
                        : std::move(lit);
    }
    if (!minterm) minterm = Formula::top();  // zero-atom universe
    result = result ? Formula::disjunction(std::move(*result), std::move(*minterm))
                    : std::move(*minterm);
  }
  return *result;
}

}  // namespace punchline
