#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "punchline/errors.hpp"
#include "punchline/km_check.hpp"
#include "punchline/orders.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace punchline;

namespace {

// Equivalence classes of admissible worlds, most plausible first.
std::vector<ModelSet> classes_of(const PlausibilityOrder& order) {
  std::vector<std::uint32_t> remaining;
  for (std::uint32_t w = 0; w < order.world_count(); ++w) {
    if (order.admissible(Interpretation(w))) remaining.push_back(w);
  }
  std::vector<ModelSet> classes;
  while (!remaining.empty()) {
    Interpretation best(remaining[0]);
    for (std::uint32_t w : remaining) {
      if (order.compare(Interpretation(w), best) < 0) best = Interpretation(w);
    }
    std::vector<std::uint32_t> layer;
    std::vector<std::uint32_t> rest;
    for (std::uint32_t w : remaining) {
      if (order.compare(Interpretation(w), best) == 0) {
        layer.push_back(w);
      } else {
        rest.push_back(w);
      }
    }
    classes.emplace_back(std::move(layer));
    remaining = std::move(rest);
  }
  return classes;
}

}  // namespace

TEST_CASE("waiting room: best-out classes and exclusions") {
  const KnowledgeBase kb = fixtures::waiting_room_kb();
  const PlausibilityOrder order = build_order(kb, OrderMethod::kBestOut);
  const auto classes = classes_of(order);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == fixtures::rows({2, 6, 7, 15}));
  CHECK(classes[1] == fixtures::rows({1, 3, 4, 5, 8, 11, 12, 16}));
  for (int j : {9, 10, 13, 14}) {
    CHECK_FALSE(order.admissible(Interpretation(fixtures::row(j))));
  }
}

TEST_CASE("waiting room: lex refines the middle class") {
  const KnowledgeBase kb = fixtures::waiting_room_kb();
  const PlausibilityOrder order = build_order(kb, OrderMethod::kLex);
  const auto classes = classes_of(order);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == fixtures::rows({2, 6, 7, 15}));
  CHECK(classes[1] == fixtures::rows({1, 3, 5, 8, 11, 16}));
  CHECK(classes[2] == fixtures::rows({4, 12}));

  // the labels behind the refinement: zero strict violations, then counts
  CHECK(order.label(Interpretation(fixtures::row(11))) ==
        std::vector<std::uint32_t>{0, 1});
  CHECK(order.label(Interpretation(fixtures::row(12))) ==
        std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("no defaults: every admissible world is equally plausible") {
  AtomUniverse u({"a", "b"});
  const KnowledgeBase kb(u, {{parse_formula("a -> b", u), false}}, {});
  for (const auto method : {OrderMethod::kBestOut, OrderMethod::kLex}) {
    const auto classes = classes_of(build_order(kb, method));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0] == models_of(parse_formula("a -> b", u), u));
  }
}

TEST_CASE("minimal models on the waiting-room base") {
  const KnowledgeBase kb = fixtures::waiting_room_kb();
  const PlausibilityOrder bo = build_order(kb, OrderMethod::kBestOut);
  const PlausibilityOrder lex = build_order(kb, OrderMethod::kLex);

  CHECK(min_models(bo, fixtures::f(kb, "t"), kb.universe()) == fixtures::rows({2}));
  CHECK(min_models(bo, fixtures::f(kb, "t & r"), kb.universe()) ==
        fixtures::rows({1, 3, 11}));
  CHECK(min_models(lex, fixtures::f(kb, "t & r"), kb.universe()) ==
        fixtures::rows({1, 3, 11}));
  CHECK(min_models(lex, fixtures::f(kb, "t & !k"), kb.universe()) ==
        fixtures::rows({11}));
  CHECK(min_models(bo, fixtures::f(kb, "t & !k"), kb.universe()) ==
        fixtures::rows({11, 12}));
  // inconsistent with P: no admissible candidate at all
  CHECK(min_models(bo, fixtures::f(kb, "!k & c"), kb.universe()).empty());
}

TEST_CASE("revision on the doctor base reproduces the frozen model sets") {
  const KnowledgeBase kb = fixtures::doctor_kb();
  const auto& u = kb.universe();
  for (const auto method : {OrderMethod::kBestOut, OrderMethod::kLex}) {
    CAPTURE(method == OrderMethod::kBestOut ? "bo" : "lex");
    CHECK(revise(kb, fixtures::f(kb, "i & N"), method) ==
          fixtures::worlds(u, {"R !H T i N"}));
    CHECK(revise(kb, fixtures::f(kb, "i & N & i & H"), method) ==
          fixtures::worlds(u, {"R H !T i N", "!R H !T i N"}));
  }
}

TEST_CASE("revision by a strict-inconsistent formula is signaled") {
  const KnowledgeBase kb = fixtures::elephants_kb();
  CHECK_THROWS_AS(revise(kb, fixtures::f(kb, "i & e"), OrderMethod::kBestOut),
                  EmptyRevisionError);
}

TEST_CASE("nonmonotonic entailment: tweety and fire") {
  const KnowledgeBase tweety = fixtures::tweety_kb();
  CHECK(nm_entails(tweety, fixtures::f(tweety, "b"),
                   fixtures::f(tweety, "b & !p & !a & f"), OrderMethod::kBestOut));
  CHECK_FALSE(nm_entails(tweety, Formula::bottom(), fixtures::f(tweety, "b"),
                         OrderMethod::kBestOut));

  const KnowledgeBase fire = fixtures::fire_kb().without_default(1);
  CHECK(nm_entails(fire, fixtures::f(fire, "fh & sFn & an"),
                   fixtures::f(fire, "an & ir"), OrderMethod::kBestOut));
}

TEST_CASE("nonmonotonicity witness: adding information retracts a conclusion") {
  const KnowledgeBase kb = fixtures::tweety_kb();
  const Formula b = fixtures::f(kb, "b");
  const Formula f = fixtures::f(kb, "f");
  const Formula loaded = fixtures::f(kb, "b & a & p");
  for (const auto method : {OrderMethod::kBestOut, OrderMethod::kLex}) {
    CHECK(nm_entails(kb, b, f, method));
    CHECK_FALSE(nm_entails(kb, loaded, f, method));
  }
}

TEST_CASE("lex strictly refines best-out on every base") {
  gen::Rng rng(808);
  std::vector<KnowledgeBase> bases{fixtures::waiting_room_kb(), fixtures::tweety_kb(),
                                   fixtures::doctor_kb(), fixtures::fire_kb(),
                                   fixtures::elephants_kb()};
  for (int i = 0; i < 20; ++i) bases.push_back(gen::random_kb(rng, 4, 4));
  for (const auto& kb : bases) {
    const PlausibilityOrder bo = build_order(kb, OrderMethod::kBestOut);
    const PlausibilityOrder lex = build_order(kb, OrderMethod::kLex);
    for (std::uint32_t a = 0; a < bo.world_count(); ++a) {
      for (std::uint32_t b = 0; b < bo.world_count(); ++b) {
        const Interpretation wa(a), wb(b);
        if (!bo.admissible(wa) || !bo.admissible(wb)) continue;
        if (bo.compare(wa, wb) < 0) CHECK(lex.compare(wa, wb) < 0);
      }
    }
  }
}

TEST_CASE("oracle agreement: minimal models both ways on random bases") {
  gen::Rng rng(909);
  for (int round = 0; round < 30; ++round) {
    const KnowledgeBase kb = gen::random_kb(rng, 4, 4);
    const PlausibilityOrder bo = build_order(kb, OrderMethod::kBestOut);
    const PlausibilityOrder lex = build_order(kb, OrderMethod::kLex);
    for (int i = 0; i < 8; ++i) {
      const Formula phi = gen::random_formula(rng, kb.universe(), 3);
      CHECK(min_models(bo, phi, kb.universe()) ==
            brute::minimal(kb, phi, OrderMethod::kBestOut));
      CHECK(min_models(lex, phi, kb.universe()) ==
            brute::minimal(kb, phi, OrderMethod::kLex));
    }
  }
}

TEST_CASE("relaxation layers induce the same best-out comparisons") {
  gen::Rng rng(1010);
  for (int round = 0; round < 20; ++round) {
    const KnowledgeBase kb = gen::random_kb(rng, 4, 4);
    const auto layers = brute::relaxation_layers(kb);
    std::vector<int> layer_of(kb.universe().world_count(), -1);
    for (std::size_t l = 0; l < layers.size(); ++l) {
      for (std::uint32_t w : layers[l]) layer_of[w] = static_cast<int>(l);
    }
    const PlausibilityOrder bo = build_order(kb, OrderMethod::kBestOut);
    for (std::uint32_t a = 0; a < bo.world_count(); ++a) {
      for (std::uint32_t b = 0; b < bo.world_count(); ++b) {
        if (layer_of[a] < 0 || layer_of[b] < 0) continue;
        const int by_layers = layer_of[a] < layer_of[b]   ? -1
                              : layer_of[a] > layer_of[b] ? 1
                                                          : 0;
        CHECK(bo.compare(Interpretation(a), Interpretation(b)) == by_layers);
      }
    }
  }
}

TEST_CASE("postulate checker: clean runs on the fixture bases") {
  for (const auto method : {OrderMethod::kBestOut, OrderMethod::kLex}) {
    for (const auto& kb :
         {fixtures::waiting_room_kb(), fixtures::doctor_kb(), fixtures::tweety_kb()}) {
      const KmReport report = check_km_postulates(kb, method, 200, 42);
      CHECK(report.ok());
      CHECK(report.checked[0] == 200);
    }
  }
}

TEST_CASE("postulate checker: expansion case by hand") {
  const KnowledgeBase kb = fixtures::waiting_room_kb();
  const PlausibilityOrder order = build_order(kb, OrderMethod::kBestOut);
  // a formula whose only model is already among the most plausible worlds
  const Formula phi = formula_from_models(fixtures::rows({2}), kb.universe());
  CHECK(order.top_layer() == fixtures::rows({2, 6, 7, 15}));
  CHECK(min_models(order, phi, kb.universe()) == fixtures::rows({2}));
}

TEST_CASE("postulate checker: no defaults means plain expansion everywhere") {
  AtomUniverse u({"a", "b", "c"});
  const KnowledgeBase kb(u, {{parse_formula("a -> b", u), false}}, {});
  for (const auto method : {OrderMethod::kBestOut, OrderMethod::kLex}) {
    CHECK(check_km_postulates(kb, method, 300, 7).ok());
  }
}

TEST_CASE("postulate checker: determinism and the size guard") {
  const KnowledgeBase kb = fixtures::waiting_room_kb();
  const KmReport a = check_km_postulates(kb, OrderMethod::kLex, 50, 3);
  const KmReport b = check_km_postulates(kb, OrderMethod::kLex, 50, 3);
  CHECK(a.checked == b.checked);

  AtomUniverse u;
  for (const char* n : {"a", "b", "c", "d", "e", "g", "h"}) u.intern(n);
  const KnowledgeBase wide(u, {{Formula::top(), false}}, {});
  CHECK_THROWS_AS(check_km_postulates(wide, OrderMethod::kLex, 1, 1),
                  UniverseTooLargeError);
}
