#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace punchline {

// Base class of everything this library throws on purpose.
// std::logic_error escaping any API is a bug, not an input problem.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed formula or knowledge-base text. Positions are 1-based;
// line is 0 when the input was a bare expression rather than a file.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

// An identifier that is not part of the ambient atom universe (strict parsing).
struct UnknownAtomError : SyntaxError {
  using SyntaxError::SyntaxError;
};

// More atoms than exhaustive enumeration is willing to chew on.
struct UniverseTooLargeError : Error {
  using Error::Error;
};

// The strict part P of a knowledge base has no model.
struct InconsistentStrictError : Error {
  using Error::Error;
};

// The default part cannot be stratified: some round ranks no rule
// while rules remain.
struct InconsistentDefaultsError : Error {
  using Error::Error;
};

// Revision by a formula inconsistent with P yields no epistemic state.
struct EmptyRevisionError : Error {
  using Error::Error;
};

// Efficiency comparison of two logically equivalent punchlines.
struct EquivalentPunchlinesError : Error {
  using Error::Error;
};

// Conditioning on a punchline of possibility zero.
struct UndefinedLevelError : Error {
  using Error::Error;
};

}  // namespace punchline
