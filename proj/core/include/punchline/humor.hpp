#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "punchline/orders.hpp"

namespace punchline {

// A joke abstracted to its logical skeleton: a context that sets the
// expectation and a punchline that breaks it.
struct Statement {
  Formula context;    // alpha
  Formula punchline;  // beta
};

// Reference to a rule marked as a norm.
struct NormRef {
  enum class Kind : std::uint8_t { kStrict, kDefault };
  Kind kind = Kind::kStrict;
  std::size_t index = 0;  // position within P or Delta

  friend bool operator==(const NormRef&, const NormRef&) = default;
  friend bool operator<(const NormRef& a, const NormRef& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.index < b.index;
  }
};

struct SurpriseResult {
  // False when P + {context} is inconsistent: no expectation can form, so
  // the definition does not apply (distinct from a plain "not surprising").
  bool applicable = false;
  bool surprising = false;
  ModelSet context_models;   // models after revising by the context
  ModelSet combined_models;  // models after revising by context & punchline
};

struct RevealResult {
  bool revealing = false;
  ModelSet punchline_models;  // models after revising by the punchline alone
};

// The statement is surprising when the expectation raised by the context
// and the one raised by the full story share no model.
SurpriseResult is_surprising(const KnowledgeBase& kb, const Statement& st,
                             OrderMethod method);

// The punchline is revealing when it nonmonotonically entails the context.
RevealResult is_revealing(const KnowledgeBase& kb, const Statement& st,
                          OrderMethod method);

bool is_potentially_funny(const KnowledgeBase& kb, const Statement& st,
                          OrderMethod method);

// (alpha, beta) is more efficient than (alpha, beta_prime) when beta
// nonmonotonically entails beta_prime. Throws EquivalentPunchlinesError
// when the two punchlines are logically equivalent.
bool more_efficient(const KnowledgeBase& kb, const Formula& alpha,
                    const Formula& beta, const Formula& beta_prime,
                    OrderMethod method);

// Gradual surprise: 0 when N(alpha) = N(alpha & beta), otherwise
// 1 - Pi(alpha & beta). Exact rational on the level/L scale.
Rational surprise_level(const KnowledgeBase& kb, const Statement& st);

struct RevealingLevelOptions {
  // What to condition the distribution on.
  enum class Target : std::uint8_t {
    kPunchline,       // the punchline formula itself (default)
    kRevisionResult,  // the minimal models of the punchline; collapses to {0,1}
  };
  // Min-based conditioning flavor.
  enum class Scaling : std::uint8_t {
    kNormalized,    // best surviving worlds are lifted to 1 (default)
    kUnnormalized,  // surviving worlds keep their prior degree
  };
  Target target = Target::kPunchline;
  Scaling scaling = Scaling::kNormalized;
};

// Conditional necessity of the context given the punchline,
// N(alpha | beta) = 1 - max { pi(w | beta) : w falsifying alpha }.
// Throws UndefinedLevelError when Pi(beta) = 0.
Rational revealing_level(const KnowledgeBase& kb, const Statement& st,
                         const RevealingLevelOptions& options = {});

struct IncongruityFinding {
  NormRef norm;
  // Minimal models of the full story with the norm disregarded; each one
  // satisfies the norm's violation.
  ModelSet disregard_models;
};

struct IncongruityResult {
  std::vector<IncongruityFinding> incongruous;
  // Strict norms entailed by the remaining strict rules; they can never be
  // violated and are reported here without being tested.
  std::vector<NormRef> non_violable;
  // Norms whose reduced base failed to stratify, with the reason.
  std::vector<std::pair<NormRef, std::string>> failures;

  bool is_incongruous(const NormRef& norm) const;
};

// For each rule marked as a norm: drop it from the base (re-stratifying
// when it was a default), then report it incongruous when the full story
// nonmonotonically entails its violation and the punchline still reveals
// the context without it.
IncongruityResult incongruity(const KnowledgeBase& kb, const Statement& st,
                              OrderMethod method);

struct GradualLevels {
  Rational surprise;
  std::optional<Rational> revealing;  // empty when Pi(punchline) = 0
};

struct JokeAnalysis {
  Statement statement;
  OrderMethod method = OrderMethod::kLex;
  // Empty when P + {context} is inconsistent (the surprise test does not
  // apply; incongruity is still evaluated).
  std::optional<bool> surprising;
  bool revealing = false;
  bool potentially_funny = false;
  GradualLevels levels;
  IncongruityResult incongruity;
  ModelSet context_models;    // after the context
  ModelSet combined_models;   // after context & punchline
  ModelSet punchline_models;  // after the punchline alone
};

// Runs the whole calculus on one statement. Pure: identical inputs give
// byte-identical reports. Never throws on statements inconsistent with P.
JokeAnalysis analyze(const KnowledgeBase& kb, const Statement& st,
                     OrderMethod method);

// Progressive story: step k analyzes (parts[0] & ... & parts[k-1], parts[k]),
// so surprise and revelation can be located at different steps.
// Requires at least two parts.
std::vector<JokeAnalysis> analyze_cascade(const KnowledgeBase& kb,
                                          std::span<const Formula> parts,
                                          OrderMethod method);

}  // namespace punchline
