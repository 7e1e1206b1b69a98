#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "punchline/orders.hpp"

namespace punchline {

struct KmViolation {
  int postulate = 0;        // 1..6
  std::string phi;          // rendered sampled formula
  std::string psi;
  std::string detail;
};

struct KmReport {
  std::uint32_t trials = 0;
  OrderMethod method = OrderMethod::kLex;
  // checked[i] counts trials where postulate i+1 was applicable
  // (its precondition held).
  std::array<std::uint64_t, 6> checked{};
  std::vector<KmViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Randomized conformance check of the revision operator induced by the kb.
//
// Each trial samples two random subsets of Mod(P), realizes them as
// canonical DNF formulas phi and psi, and checks the six rationality
// postulates of revision against K = the conjunction of the material
// counterparts restricted to Mod(P) (whose models are exactly the top
// layer of the order). Syntax independence is exercised by re-realizing
// phi through a negated complement DNF. Deterministic given (trials, seed).
//
// Requires a universe of at most 6 atoms; throws UniverseTooLargeError
// beyond that.
KmReport check_km_postulates(const KnowledgeBase& kb, OrderMethod method,
                             std::uint32_t trials, std::uint64_t seed);

}  // namespace punchline
