#include "punchline/humor.hpp"

#include <algorithm>

#include "punchline/errors.hpp"

namespace punchline {

SurpriseResult is_surprising(const KnowledgeBase& kb, const Statement& st,
                             OrderMethod method) {
  const PlausibilityOrder order = build_order(kb, method);
  SurpriseResult result;
  result.context_models = min_models(order, st.context, kb.universe());
  result.combined_models = min_models(
      order, Formula::conjunction(st.context, st.punchline), kb.universe());
  result.applicable = !result.context_models.empty();
  // The combined set may be empty: a nonsensical punchline still surprises.
  result.surprising =
      result.applicable && result.context_models.disjoint(result.combined_models);
  return result;
}

RevealResult is_revealing(const KnowledgeBase& kb, const Statement& st,
                          OrderMethod method) {
  const PlausibilityOrder order = build_order(kb, method);
  RevealResult result;
  result.punchline_models = min_models(order, st.punchline, kb.universe());
  result.revealing = !result.punchline_models.empty();
  for (std::size_t i = 0; result.revealing && i < result.punchline_models.size(); ++i) {
    if (!st.context.evaluate(result.punchline_models.at(i).index())) {
      result.revealing = false;
    }
  }
  return result;
}

bool is_potentially_funny(const KnowledgeBase& kb, const Statement& st,
                          OrderMethod method) {
  return is_surprising(kb, st, method).surprising &&
         is_revealing(kb, st, method).revealing;
}

bool more_efficient(const KnowledgeBase& kb, const Formula& alpha,
                    const Formula& beta, const Formula& beta_prime,
                    OrderMethod method) {
  (void)alpha;  // both statements share the context; efficiency only compares punchlines
  if (equivalent(beta, beta_prime, kb.universe())) {
    throw EquivalentPunchlinesError("punchlines '" + beta.to_string(kb.universe()) +
                                    "' and '" + beta_prime.to_string(kb.universe()) +
                                    "' are logically equivalent");
  }
  return nm_entails(kb, beta, beta_prime, method);
}

Rational surprise_level(const KnowledgeBase& kb, const Statement& st) {
  const RankedDistribution dist = build_distribution(kb);
  const Formula combined = Formula::conjunction(st.context, st.punchline);
  if (necessity(dist, st.context) == necessity(dist, combined)) {
    return Rational::zero();
  }
  return Rational::one() - possibility(dist, combined);
}

Rational revealing_level(const KnowledgeBase& kb, const Statement& st,
                         const RevealingLevelOptions& options) {
  const RankedDistribution dist = build_distribution(kb);
  const auto& universe = kb.universe();

  // Worlds the conditioning keeps alive.
  std::vector<std::uint8_t> given(dist.world_count(), 0);
  if (options.target == RevealingLevelOptions::Target::kPunchline) {
    for (std::uint32_t w = 0; w < dist.world_count(); ++w) {
      given[w] = st.punchline.evaluate(w) ? 1 : 0;
    }
  } else {
    const PlausibilityOrder order = build_order(kb, OrderMethod::kBestOut);
    const ModelSet minimal = min_models(order, st.punchline, universe);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      given[minimal.at(i).index()] = 1;
    }
  }

  std::uint32_t given_best = 0;
  for (std::uint32_t w = 0; w < dist.world_count(); ++w) {
    if (given[w]) given_best = std::max(given_best, dist.level(Interpretation(w)));
  }
  if (given_best == 0) {
    throw UndefinedLevelError("conditioning on a punchline of possibility zero");
  }

  // N(alpha | beta) = 1 - max over counter-models of alpha of the
  // conditioned degree.
  Rational worst = Rational::zero();
  const bool normalized =
      options.scaling == RevealingLevelOptions::Scaling::kNormalized;
  for (std::uint32_t w = 0; w < dist.world_count(); ++w) {
    if (st.context.evaluate(w) || !given[w]) continue;
    const std::uint32_t level = dist.level(Interpretation(w));
    const Rational degree = (normalized && level == given_best)
                                ? Rational::one()
                                : Rational(level, dist.top_level());
    worst = std::max(worst, degree);
  }
  return Rational::one() - worst;
}

bool IncongruityResult::is_incongruous(const NormRef& norm) const {
  return std::any_of(incongruous.begin(), incongruous.end(),
                     [&](const IncongruityFinding& f) { return f.norm == norm; });
}

IncongruityResult incongruity(const KnowledgeBase& kb, const Statement& st,
                              OrderMethod method) {
  IncongruityResult result;
  const Formula story = Formula::conjunction(st.context, st.punchline);

  auto test_norm = [&](const NormRef& norm, const KnowledgeBase& reduced,
                       const Formula& violated) {
    const PlausibilityOrder order = build_order(reduced, method);
    const ModelSet disregard = min_models(order, story, reduced.universe());
    const bool violates = nm_entails(reduced, order, story, violated);
    const bool reveals = nm_entails(reduced, order, st.punchline, st.context);
    if (violates && reveals) {
      result.incongruous.push_back({norm, disregard});
    }
  };

  for (std::size_t i = 0; i < kb.strict().size(); ++i) {
    if (!kb.strict()[i].is_norm) continue;
    const NormRef norm{NormRef::Kind::kStrict, i};
    // A strict norm entailed by the rest of P can never be violated.
    std::vector<Formula> rest;
    for (std::size_t j = 0; j < kb.strict().size(); ++j) {
      if (j != i) rest.push_back(kb.strict()[j].formula);
    }
    if (entails(rest, kb.strict()[i].formula, kb.universe())) {
      result.non_violable.push_back(norm);
      continue;
    }
    test_norm(norm, kb.without_strict(i),
              Formula::negation(kb.strict()[i].formula));
  }

  for (std::size_t i = 0; i < kb.defaults().size(); ++i) {
    if (!kb.defaults()[i].is_norm) continue;
    const NormRef norm{NormRef::Kind::kDefault, i};
    try {
      test_norm(norm, kb.without_default(i), kb.defaults()[i].violation());
    } catch (const InconsistentDefaultsError& e) {
      result.failures.emplace_back(norm, e.what());
    }
  }
  return result;
}

JokeAnalysis analyze(const KnowledgeBase& kb, const Statement& st,
                     OrderMethod method) {
  const SurpriseResult surprise = is_surprising(kb, st, method);
  const RevealResult reveal = is_revealing(kb, st, method);

  std::optional<bool> surprising;
  if (surprise.applicable) surprising = surprise.surprising;

  GradualLevels levels{surprise_level(kb, st), std::nullopt};
  try {
    levels.revealing = revealing_level(kb, st);
  } catch (const UndefinedLevelError&) {
  }

  return JokeAnalysis{
      .statement = st,
      .method = method,
      .surprising = surprising,
      .revealing = reveal.revealing,
      .potentially_funny = surprising.value_or(false) && reveal.revealing,
      .levels = std::move(levels),
      .incongruity = incongruity(kb, st, method),
      .context_models = surprise.context_models,
      .combined_models = surprise.combined_models,
      .punchline_models = reveal.punchline_models,
  };
}

std::vector<JokeAnalysis> analyze_cascade(const KnowledgeBase& kb,
                                          std::span<const Formula> parts,
                                          OrderMethod method) {
  if (parts.size() < 2) {
    throw Error("a cascade needs at least two parts");
  }
  std::vector<JokeAnalysis> steps;
  steps.reserve(parts.size() - 1);
  Formula context = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) {
    steps.push_back(analyze(kb, Statement{context, parts[k]}, method));
    if (k + 1 < parts.size()) {
      context = Formula::conjunction(std::move(context), parts[k]);
    }
  }
  return steps;
}

}  // namespace punchline
