#pragma once

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "punchline/kb_format.hpp"
#include "punchline/knowledge.hpp"

namespace fixtures {

using namespace punchline;

// Builds an interpretation index from a literal list like "k t !c r".
// Every atom of the universe must appear exactly once.
inline std::uint32_t world(const AtomUniverse& universe, const std::string& literals) {
  std::istringstream in(literals);
  std::string token;
  std::uint32_t index = 0;
  std::size_t seen = 0;
  while (in >> token) {
    bool value = true;
    if (token.front() == '!') {
      value = false;
      token.erase(0, 1);
    }
    const auto id = universe.find(token);
    if (!id) throw std::runtime_error("unknown literal " + token);
    if (value) index |= std::uint32_t{1} << id->value;
    ++seen;
  }
  if (seen != universe.size()) {
    throw std::runtime_error("literal list must mention every atom: " + literals);
  }
  return index;
}

inline ModelSet worlds(const AtomUniverse& universe,
                       std::initializer_list<const char*> lists) {
  std::vector<std::uint32_t> indices;
  for (const char* lits : lists) indices.push_back(world(universe, lits));
  return ModelSet(std::move(indices));
}

inline KnowledgeBase parse_fixture(const char* text) { return parse_kb(text).kb; }

// The waiting-room listener: strangers in a doctor's office.
// k = know each other, t = entered together, c = couple, r = reluctant.
inline KnowledgeBase waiting_room_kb() {
  return parse_fixture(
      "atoms: k t c r\n"
      "strict: !k -> !c\n"
      "default: t ~> c\n"
      "default: c ~> !r\n"
      "default: !c ~> r\n");
}

// Same listener once "strangers do not walk in together" is adopted as a norm.
inline KnowledgeBase waiting_room_norm_kb() {
  return parse_fixture(
      "atoms: k t c r\n"
      "strict: !k -> !c\n"
      "default: t ~> c\n"
      "default: c ~> !r\n"
      "default: !c ~> r\n"
      "norm default: !k ~> !t\n");
}

// Truth-table row number over the waiting-room universe, with row 1 the
// all-true assignment and the last atom toggling fastest. Matches the
// numbering used by the frozen expectations below.
inline std::uint32_t row(int j) {
  const int bits = j - 1;
  std::uint32_t index = 0;
  if (!((bits >> 3) & 1)) index |= 1u << 0;  // k
  if (!((bits >> 2) & 1)) index |= 1u << 1;  // t
  if (!((bits >> 1) & 1)) index |= 1u << 2;  // c
  if (!((bits >> 0) & 1)) index |= 1u << 3;  // r
  return index;
}

inline ModelSet rows(std::initializer_list<int> js) {
  std::vector<std::uint32_t> indices;
  for (int j : js) indices.push_back(row(j));
  return ModelSet(std::move(indices));
}

// The run-over-by-a-car listener.
// R = treated rapidly, H = the driver is the doctor himself, T = there is a
// treating doctor available, i = injured, N = doctor nearby. That the
// doctor's own presence puts a doctor nearby is analytic, hence strict;
// the defeasible part is everything about getting treated.
inline KnowledgeBase doctor_kb() {
  return parse_fixture(
      "atoms: R H T i N\n"
      "strict: H -> N\n"
      "default: i & N ~> R\n"
      "default: i & !T ~> !R\n"
      "default: i & H ~> !T\n");
}

// Birds fly, penguins don't; the bird-flying rule doubles as the norm.
inline KnowledgeBase tweety_kb() {
  return parse_fixture(
      "atoms: b f p a\n"
      "strict: p -> b\n"
      "norm default: b ~> f\n"
      "default: p ~> !f\n"
      "default: b & a ~> p\n");
}

// Same with a fifth, unconstrained atom (the bird's name).
inline KnowledgeBase tweety_named_kb() {
  return parse_fixture(
      "atoms: b f p a t\n"
      "strict: p -> b\n"
      "norm default: b ~> f\n"
      "default: p ~> !f\n"
      "default: b & a ~> p\n");
}

// Four elephants in a small car; "elephants are huge" is the norm.
// i = inside the car, e = elephants present, tt = two in front and two in
// the rear, h = huge animals present.
inline KnowledgeBase elephants_kb() {
  return parse_fixture(
      "atoms: i e tt h\n"
      "strict: h -> !i\n"
      "norm strict: e -> h\n"
      "strict: h -> !tt\n"
      "strict: tt -> i\n");
}

// Variant that also marks "huge things cannot go front and rear" as a norm;
// that rule is entailed by the rest of P, so it can never be violated.
inline KnowledgeBase elephants_entailed_norm_kb() {
  return parse_fixture(
      "atoms: i e tt h\n"
      "strict: h -> !i\n"
      "norm strict: e -> h\n"
      "norm strict: h -> !tt\n"
      "strict: tt -> i\n");
}

// The house-fire listener. fh = own house on fire, sFn = sets fire at the
// neighbor's, ir = irrational act, an = allowed to make himself at home,
// dh = does like at home.
inline KnowledgeBase fire_kb() {
  return parse_fixture(
      "atoms: fh sFn ir an dh\n"
      "strict: fh & dh -> sFn\n"
      "norm default: sFn ~> ir\n"
      "norm default: an ~> !ir\n"
      "default: an ~> dh\n");
}

// Progressive variant of the doctor joke with a "lucky" reading:
// being injured is unlucky, unless a doctor is nearby.
inline KnowledgeBase lucky_kb() {
  return parse_fixture(
      "atoms: i lucky N H\n"
      "strict: H -> N\n"
      "default: i ~> !lucky\n"
      "default: i & N ~> lucky\n"
      "default: i & H ~> !lucky\n");
}

// Minimal base with one default, for conditioning-level checks.
inline KnowledgeBase xyz_kb() {
  return parse_fixture(
      "atoms: x y z\n"
      "default: x ~> y\n");
}

// An unlikely context whose typical outcome denies y: the best x-world sits
// below the top layer, which separates the two conditioning flavors.
inline KnowledgeBase unlikely_kb() {
  return parse_fixture(
      "atoms: x y\n"
      "default: true ~> !x\n"
      "default: x ~> !y\n");
}

inline Formula f(const KnowledgeBase& kb, const std::string& text) {
  return parse_formula(text, kb.universe());
}

// Every conjunction of one or two literals over distinct atoms: the typical
// shapes of contexts and punchlines, enough for exhaustive pair sweeps.
inline std::vector<Formula> literal_conjunction_pool(const AtomUniverse& universe) {
  std::vector<Formula> literals;
  for (std::uint32_t k = 0; k < universe.size(); ++k) {
    literals.push_back(Formula::atom(AtomId{k}));
    literals.push_back(Formula::negation(Formula::atom(AtomId{k})));
  }
  std::vector<Formula> pool = literals;
  for (std::uint32_t a = 0; a < universe.size(); ++a) {
    for (std::uint32_t b = a + 1; b < universe.size(); ++b) {
      for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) {
          pool.push_back(Formula::conjunction(literals[2 * a + sa],
                                              literals[2 * b + sb]));
        }
      }
    }
  }
  return pool;
}

}  // namespace fixtures
