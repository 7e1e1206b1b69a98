#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "punchline/atoms.hpp"

namespace punchline {

// Immutable propositional formula over an atom universe.
//
// Concrete grammar (see parse_formula): atoms, `true`, `false`, `!`, `&`,
// `|`, `->`, `<->`, parentheses. Precedence ! > & > | > -> > <->, with
// `->` right-associative and `<->` non-associative (chains need parens).
class Formula {
 public:
  enum class Kind : std::uint8_t {
    kAtom,
    kTop,
    kBottom,
    kNot,
    kAnd,
    kOr,
    kImplies,
    kIff,
  };

  static Formula atom(AtomId id);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const;
  AtomId atom_id() const;   // requires kind() == kAtom
  Formula lhs() const;      // requires a connective; kNot stores its child here
  Formula rhs() const;      // requires a binary connective

  // Truth under the interpretation whose bit k gives atom k's value.
  bool evaluate(std::uint32_t world) const;

  // Structural identity (same tree, not merely same truth table).
  bool structurally_equal(const Formula& other) const;

  // Reparseable rendering with minimal parentheses; parsing the result
  // yields a structurally identical tree.
  std::string to_string(const AtomUniverse& universe) const;

  // Opaque tree node; defined in the implementation file.
  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Parses `text` against a fixed universe; identifiers not present in it
// raise UnknownAtomError. Throws SyntaxError on malformed input.
Formula parse_formula(std::string_view text, const AtomUniverse& universe);

// Parses `text`, interning unseen identifiers into `universe` in first-
// mention order. Throws UniverseTooLargeError past 24 atoms.
Formula parse_formula_inferring(std::string_view text, AtomUniverse& universe);

}  // namespace punchline
