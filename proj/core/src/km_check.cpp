#include "punchline/km_check.hpp"

#include <random>

#include "punchline/errors.hpp"

namespace punchline {

namespace {

constexpr std::size_t kMaxCheckerAtoms = 6;

std::string render_models(const ModelSet& models, const AtomUniverse& universe) {
  std::string out = "{";
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (i > 0) out += ", ";
    out += models.at(i).to_string(universe);
  }
  out += "}";
  return out;
}

}  // namespace

KmReport check_km_postulates(const KnowledgeBase& kb, OrderMethod method,
                             std::uint32_t trials, std::uint64_t seed) {
  const auto& universe = kb.universe();
  if (universe.size() > kMaxCheckerAtoms) {
    throw UniverseTooLargeError(
        "postulate checking enumerates formulas exhaustively; at most " +
        std::to_string(kMaxCheckerAtoms) + " atoms are supported");
  }

  const PlausibilityOrder order = build_order(kb, method);

  // Mod(P): the sampling space for new information.
  std::vector<std::uint32_t> p_models;
  for (std::uint32_t w = 0; w < order.world_count(); ++w) {
    if (order.admissible(Interpretation(w))) p_models.push_back(w);
  }

  // Mod(K) within Mod(P) is the top layer of a faithful order.
  const ModelSet kappa = order.top_layer();

  KmReport report;
  report.trials = trials;
  report.method = method;

  std::mt19937_64 rng(seed);
  auto sample_subset = [&]() {
    std::vector<std::uint32_t> subset;
    for (std::uint32_t w : p_models) {
      if (rng() & 1u) subset.push_back(w);
    }
    return ModelSet(std::move(subset));
  };

  auto minimize = [&](const Formula& f) { return min_models(order, f, universe); };
  auto record = [&](int postulate, const ModelSet& phi, const ModelSet& psi,
                    std::string detail) {
    report.violations.push_back(
        {postulate, render_models(phi, universe), render_models(psi, universe),
         std::move(detail)});
  };

  for (std::uint32_t t = 0; t < trials; ++t) {
    const ModelSet phi_models = sample_subset();
    const ModelSet psi_models = sample_subset();
    const Formula phi = formula_from_models(phi_models, universe);
    const Formula psi = formula_from_models(psi_models, universe);

    const ModelSet revised = minimize(phi);

    // KM1: the new information holds after revision.
    ++report.checked[0];
    if (!revised.subset_of(phi_models)) {
      record(1, phi_models, psi_models, "revision leaves Mod(phi)");
    }

    // KM2: consistent new information reduces revision to expansion.
    const ModelSet kappa_and_phi = kappa.intersect(phi_models);
    if (!kappa_and_phi.empty()) {
      ++report.checked[1];
      if (!(revised == kappa_and_phi)) {
        record(2, phi_models, psi_models,
               "expected " + render_models(kappa_and_phi, universe) + ", got " +
                   render_models(revised, universe));
      }
    }

    // KM3: satisfiable input keeps the result satisfiable.
    if (!phi_models.empty()) {
      ++report.checked[2];
      if (revised.empty()) {
        record(3, phi_models, psi_models, "revision by satisfiable phi is empty");
      }
    }

    // KM4: syntax independence, via a second realization of the same models.
    const Formula phi_alt = Formula::negation(
        formula_from_models(phi_models.complement(universe), universe));
    ++report.checked[3];
    if (!(minimize(phi_alt) == revised)) {
      record(4, phi_models, psi_models, "equivalent phi realizations disagree");
    }

    const Formula phi_and_psi = Formula::conjunction(phi, psi);
    const ModelSet narrowed = minimize(phi_and_psi);
    const ModelSet revised_and_psi = revised.intersect(psi_models);

    // KM5: (K o phi) & psi entails K o (phi & psi).
    ++report.checked[4];
    if (!revised_and_psi.subset_of(narrowed)) {
      record(5, phi_models, psi_models,
             render_models(revised_and_psi, universe) + " not within " +
                 render_models(narrowed, universe));
    }

    // KM6: and conversely when (K o phi) & psi is satisfiable.
    if (!revised_and_psi.empty()) {
      ++report.checked[5];
      if (!narrowed.subset_of(revised_and_psi)) {
        record(6, phi_models, psi_models,
               render_models(narrowed, universe) + " not within " +
                   render_models(revised_and_psi, universe));
      }
    }
  }
  return report;
}

}  // namespace punchline
