#pragma once

#include <cstdint>
#include <vector>

#include "punchline/knowledge.hpp"

namespace punchline {

enum class OrderMethod : std::uint8_t {
  kBestOut,
  kLex,
};

// Total pre-order on the models of P induced by a knowledge base.
// Interpretations falsifying P are not ranked at a bottom layer; they are
// excluded from minimization altogether, so revision by a formula
// inconsistent with P selects nothing.
//
// Best-out compares worlds by the priority of the highest-priority rule
// they violate (keys come from the ranked distribution). Lex labels each
// world with per-stratum violation counts, strict stratum first, and
// compares labels lexicographically, fewer violations first.
class PlausibilityOrder {
 public:
  PlausibilityOrder(OrderMethod method, std::size_t atom_count,
                    std::vector<std::uint8_t> admissible,
                    std::vector<std::uint32_t> keys, std::size_t key_width);

  OrderMethod method() const { return method_; }
  std::uint32_t world_count() const { return std::uint32_t{1} << atom_count_; }

  // True iff the world satisfies every strict rule.
  bool admissible(Interpretation w) const { return admissible_[w.index()] != 0; }

  // Negative when a is strictly more plausible than b, zero when equally
  // plausible. Requires both worlds admissible.
  int compare(Interpretation a, Interpretation b) const;

  // Violation-count label of a world: strict stratum first, then default
  // strata by descending priority. Best-out orders expose their single key
  // the same way for inspection.
  std::vector<std::uint32_t> label(Interpretation w) const;

  // The most plausible equivalence class among all admissible worlds.
  ModelSet top_layer() const;

 private:
  OrderMethod method_;
  std::size_t atom_count_;
  std::vector<std::uint8_t> admissible_;
  std::vector<std::uint32_t> keys_;  // flattened, key_width_ entries per world
  std::size_t key_width_;
};

PlausibilityOrder build_order(const KnowledgeBase& kb, OrderMethod method);

// Minimal models of P + {phi} under the order; empty iff P + {phi} is
// unsatisfiable. Ties are not broken: the full minimal set is returned.
ModelSet min_models(const PlausibilityOrder& order, const Formula& phi,
                    const AtomUniverse& universe);

// Same minimization over an explicit candidate set (inadmissible worlds are
// ignored); saves re-lifting sets to syntax in bulk sweeps.
ModelSet min_models(const PlausibilityOrder& order, const ModelSet& candidates);

// Mod(K revised by phi under the integrity constraints P). Throws
// EmptyRevisionError instead of returning an empty epistemic state when
// P + {phi} is unsatisfiable.
ModelSet revise(const KnowledgeBase& kb, const Formula& phi, OrderMethod method);

// Nonmonotonic entailment: P + {phi} consistent and every minimal model
// of phi satisfies psi. Inconsistency yields false, never an error.
bool nm_entails(const KnowledgeBase& kb, const Formula& phi, const Formula& psi,
                OrderMethod method);

// Overload for callers that already built the order for this kb.
bool nm_entails(const KnowledgeBase& kb, const PlausibilityOrder& order,
                const Formula& phi, const Formula& psi);

}  // namespace punchline
