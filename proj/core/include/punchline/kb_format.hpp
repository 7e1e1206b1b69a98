#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "punchline/knowledge.hpp"

namespace punchline {

// Parsed knowledge-base document: the base itself plus named formulas
// usable as query aliases on the command line.
//
// Text format, one entry per line:
//   # comment (also allowed after an entry)
//   atoms: a b c            fixes declaration order up front (optional)
//   strict: <formula>
//   norm strict: <formula>
//   default: <formula> ~> <formula>
//   norm default: <formula> ~> <formula>
//   let <name> = <formula>
// Atoms not declared via `atoms:` join the universe in first-mention order.
struct KbDocument {
  KnowledgeBase kb;
  std::map<std::string, Formula> aliases;  // sorted for deterministic output
};

// Parses the format above. Every parse error carries the 1-based line and
// column. Construction-time consistency checks run, so this also throws
// InconsistentStrictError / InconsistentDefaultsError / UniverseTooLargeError.
KbDocument parse_kb(std::string_view text);

// Writes a document back in the same format: an atoms: line, P, Delta, then
// aliases. parse_kb(render_kb(doc)) reproduces the knowledge base exactly.
std::string render_kb(const KbDocument& doc);

// Resolves a CLI query: an exact alias name wins, anything else is parsed
// as a formula against the document's universe.
Formula resolve_query(const KbDocument& doc, std::string_view text);

}  // namespace punchline
