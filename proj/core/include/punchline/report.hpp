#pragma once

#include <string>

#include "punchline/humor.hpp"

namespace punchline {

enum class ReportFormat : std::uint8_t {
  kJson,
  kText,
};

// Serializes an analysis. The JSON object has exactly the keys
//   surprising, revealing, potentially_funny, surprise_level,
//   revealing_level, incongruous_norms, non_violable_norms, witnesses
// with levels as reduced "p/q" strings, null for an inapplicable surprise
// or undefined revealing level, and witness interpretations rendered as
// literal strings sorted by canonical index. Output is byte-identical for
// identical inputs. The text format is a human-readable digest of the same.
std::string render_report(const JokeAnalysis& analysis, const KnowledgeBase& kb,
                          ReportFormat format);

// Cascade view: a JSON array of step reports, or the text digests in
// telling order.
std::string render_cascade_report(std::span<const JokeAnalysis> steps,
                                  const KnowledgeBase& kb, ReportFormat format);

}  // namespace punchline
