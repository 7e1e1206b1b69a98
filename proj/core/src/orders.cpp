#include "punchline/orders.hpp"

#include <stdexcept>

#include "punchline/errors.hpp"

namespace punchline {

PlausibilityOrder::PlausibilityOrder(OrderMethod method, std::size_t atom_count,
                                     std::vector<std::uint8_t> admissible,
                                     std::vector<std::uint32_t> keys,
                                     std::size_t key_width)
    : method_(method),
      atom_count_(atom_count),
      admissible_(std::move(admissible)),
      keys_(std::move(keys)),
      key_width_(key_width) {}

int PlausibilityOrder::compare(Interpretation a, Interpretation b) const {
  const std::uint32_t* ka = keys_.data() + a.index() * key_width_;
  const std::uint32_t* kb = keys_.data() + b.index() * key_width_;
  for (std::size_t i = 0; i < key_width_; ++i) {
    if (ka[i] != kb[i]) return ka[i] < kb[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> PlausibilityOrder::label(Interpretation w) const {
  const std::uint32_t* k = keys_.data() + w.index() * key_width_;
  return std::vector<std::uint32_t>(k, k + key_width_);
}

ModelSet PlausibilityOrder::top_layer() const {
  std::vector<std::uint32_t> out;
  bool have_best = false;
  Interpretation best;
  for (std::uint32_t w = 0; w < world_count(); ++w) {
    const Interpretation cur(w);
    if (!admissible(cur)) continue;
    if (!have_best || compare(cur, best) < 0) {
      best = cur;
      have_best = true;
      out.clear();
    }
    if (compare(cur, best) == 0) out.push_back(w);
  }
  return ModelSet(std::move(out));
}

PlausibilityOrder build_order(const KnowledgeBase& kb, OrderMethod method) {
  const auto& universe = kb.universe();
  const std::uint32_t count = universe.world_count();

  std::vector<Formula> p = kb.strict_formulas();
  std::vector<std::uint8_t> admissible(count, 0);
  for (std::uint32_t w = 0; w < count; ++w) {
    bool ok = true;
    for (const Formula& f : p) {
      if (!f.evaluate(w)) {
        ok = false;
        break;
      }
    }
    admissible[w] = ok ? 1 : 0;
  }

  if (method == OrderMethod::kBestOut) {
    const RankedDistribution dist = build_distribution(kb);
    // Single key per world: distance from the top level, smaller is better.
    std::vector<std::uint32_t> keys(count, 0);
    for (std::uint32_t w = 0; w < count; ++w) {
      keys[w] = dist.top_level() - dist.level(Interpretation(w));
    }
    return PlausibilityOrder(method, universe.size(), std::move(admissible),
                             std::move(keys), 1);
  }

  // Lex: per-stratum violation counts, strict stratum first, then defaults
  // by descending priority. Formulas are counted individually even when
  // logically equivalent.
  const Stratification strat = z_stratify(kb);
  std::vector<Formula> materials;
  materials.reserve(kb.defaults().size());
  for (const auto& d : kb.defaults()) materials.push_back(d.material());

  const std::size_t width = strat.priority_count();
  std::vector<std::uint32_t> keys(static_cast<std::size_t>(count) * width, 0);
  for (std::uint32_t w = 0; w < count; ++w) {
    std::uint32_t* label = keys.data() + static_cast<std::size_t>(w) * width;
    for (const Formula& f : p) {
      if (!f.evaluate(w)) ++label[0];
    }
    for (std::size_t priority = 1; priority < width; ++priority) {
      for (std::size_t i : strat.defaults_at_priority(priority)) {
        if (!materials[i].evaluate(w)) ++label[priority];
      }
    }
  }
  return PlausibilityOrder(method, universe.size(), std::move(admissible),
                           std::move(keys), width);
}

ModelSet min_models(const PlausibilityOrder& order, const Formula& phi,
                    const AtomUniverse& universe) {
  if ((std::uint32_t{1} << universe.size()) != order.world_count()) {
    throw std::logic_error("order built over a different universe");
  }
  std::vector<std::uint32_t> out;
  bool have_best = false;
  Interpretation best;
  for (std::uint32_t w = 0; w < order.world_count(); ++w) {
    const Interpretation cur(w);
    if (!order.admissible(cur) || !phi.evaluate(w)) continue;
    if (!have_best) {
      best = cur;
      have_best = true;
      out.push_back(w);
      continue;
    }
    const int c = order.compare(cur, best);
    if (c < 0) {
      best = cur;
      out.clear();
      out.push_back(w);
    } else if (c == 0) {
      out.push_back(w);
    }
  }
  return ModelSet(std::move(out));
}

ModelSet min_models(const PlausibilityOrder& order, const ModelSet& candidates) {
  std::vector<std::uint32_t> out;
  bool have_best = false;
  Interpretation best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Interpretation cur = candidates.at(i);
    if (!order.admissible(cur)) continue;
    if (!have_best) {
      best = cur;
      have_best = true;
      out.push_back(cur.index());
      continue;
    }
    const int c = order.compare(cur, best);
    if (c < 0) {
      best = cur;
      out.clear();
      out.push_back(cur.index());
    } else if (c == 0) {
      out.push_back(cur.index());
    }
  }
  return ModelSet(std::move(out));
}

ModelSet revise(const KnowledgeBase& kb, const Formula& phi, OrderMethod method) {
  const PlausibilityOrder order = build_order(kb, method);
  ModelSet result = min_models(order, phi, kb.universe());
  if (result.empty()) {
    throw EmptyRevisionError("revision by '" + phi.to_string(kb.universe()) +
                             "' is inconsistent with the strict rules");
  }
  return result;
}

bool nm_entails(const KnowledgeBase& kb, const PlausibilityOrder& order,
                const Formula& phi, const Formula& psi) {
  const ModelSet minimal = min_models(order, phi, kb.universe());
  if (minimal.empty()) return false;  // P + {phi} inconsistent
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if (!psi.evaluate(minimal.at(i).index())) return false;
  }
  return true;
}

bool nm_entails(const KnowledgeBase& kb, const Formula& phi, const Formula& psi,
                OrderMethod method) {
  return nm_entails(kb, build_order(kb, method), phi, psi);
}

}  // namespace punchline
