#include "punchline/kb_format.hpp"

#include <sstream>

#include "punchline/errors.hpp"

namespace punchline {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Reparses with the error position mapped back into the document.
Formula parse_segment(std::string_view segment, std::size_t line,
                      std::size_t segment_column, AtomUniverse& universe) {
  try {
    return parse_formula_inferring(segment, universe);
  } catch (const UnknownAtomError& e) {
    throw UnknownAtomError(e.what(), line, segment_column + e.column - 1);
  } catch (const SyntaxError& e) {
    throw SyntaxError(e.what(), line, segment_column + e.column - 1);
  }
}

}  // namespace

KbDocument parse_kb(std::string_view text) {
  AtomUniverse universe;
  std::vector<StrictRule> strict;
  std::vector<DefaultRule> defaults;
  std::map<std::string, std::string> alias_sources;  // name -> formula text

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const std::size_t eol = text.find('\n', cursor);
    std::string_view raw = text.substr(
        cursor, eol == std::string_view::npos ? text.size() - cursor : eol - cursor);
    ++line_no;
    const std::size_t line_start = cursor;
    cursor = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::string_view entry = trim(raw);
    if (entry.empty()) continue;

    // Column of the payload after a keyword, 1-based within the line.
    auto column_of = [&](std::string_view payload) {
      return static_cast<std::size_t>(payload.data() - text.data()) - line_start + 1;
    };

    auto strip_keyword = [&](std::string_view keyword) -> std::optional<std::string_view> {
      if (entry.substr(0, keyword.size()) == keyword) {
        return trim(entry.substr(keyword.size()));
      }
      return std::nullopt;
    };

    auto parse_default = [&](std::string_view body, bool is_norm) {
      const std::size_t arrow = body.find("~>");
      if (arrow == std::string_view::npos) {
        throw SyntaxError("default rule needs '~>'", line_no, column_of(body));
      }
      const std::string_view lhs = trim(body.substr(0, arrow));
      const std::string_view rhs = trim(body.substr(arrow + 2));
      if (lhs.empty() || rhs.empty()) {
        throw SyntaxError("default rule needs formulas on both sides of '~>'",
                          line_no, column_of(body));
      }
      Formula antecedent = parse_segment(lhs, line_no, column_of(lhs), universe);
      Formula consequent = parse_segment(rhs, line_no, column_of(rhs), universe);
      defaults.push_back({std::move(antecedent), std::move(consequent), is_norm});
    };

    if (auto body = strip_keyword("atoms:")) {
      std::istringstream names{std::string(*body)};
      std::string name;
      while (names >> name) {
        if (!AtomUniverse::valid_name(name)) {
          throw SyntaxError("invalid atom name '" + name + "'", line_no,
                            column_of(*body));
        }
        universe.intern(name);
      }
    } else if (auto body = strip_keyword("norm strict:")) {
      strict.push_back({parse_segment(*body, line_no, column_of(*body), universe), true});
    } else if (auto body = strip_keyword("strict:")) {
      strict.push_back({parse_segment(*body, line_no, column_of(*body), universe), false});
    } else if (auto body = strip_keyword("norm default:")) {
      parse_default(*body, true);
    } else if (auto body = strip_keyword("default:")) {
      parse_default(*body, false);
    } else if (auto body = strip_keyword("let ")) {
      const std::size_t eq = body->find('=');
      if (eq == std::string_view::npos) {
        throw SyntaxError("alias needs '='", line_no, column_of(*body));
      }
      const std::string name{trim(body->substr(0, eq))};
      const std::string_view formula_text = trim(body->substr(eq + 1));
      if (!AtomUniverse::valid_name(name)) {
        throw SyntaxError("invalid alias name '" + name + "'", line_no,
                          column_of(*body));
      }
      if (alias_sources.count(name) != 0) {
        throw SyntaxError("alias '" + name + "' defined twice", line_no,
                          column_of(*body));
      }
      // Parse once now so atoms join in first-mention order and errors carry
      // this line; the kept text is re-bound against the final universe below.
      parse_segment(formula_text, line_no, column_of(formula_text), universe);
      alias_sources.emplace(name, std::string(formula_text));
    } else {
      throw SyntaxError("unrecognized entry '" + std::string(entry) + "'", line_no, 1);
    }
  }

  if (universe.size() == 0) {
    throw SyntaxError("knowledge base declares no atoms", line_no, 1);
  }

  KbDocument doc{KnowledgeBase(universe, std::move(strict), std::move(defaults)), {}};
  for (const auto& [name, source] : alias_sources) {
    doc.aliases.emplace(name, parse_formula(source, doc.kb.universe()));
  }
  return doc;
}

std::string render_kb(const KbDocument& doc) {
  const auto& kb = doc.kb;
  const auto& universe = kb.universe();
  std::string out = "atoms:";
  for (const auto& name : universe.names()) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const auto& rule : kb.strict()) {
    out += rule.is_norm ? "norm strict: " : "strict: ";
    out += rule.formula.to_string(universe);
    out += '\n';
  }
  for (const auto& rule : kb.defaults()) {
    out += rule.is_norm ? "norm default: " : "default: ";
    out += rule.antecedent.to_string(universe);
    out += " ~> ";
    out += rule.consequent.to_string(universe);
    out += '\n';
  }
  for (const auto& [name, formula] : doc.aliases) {
    out += "let " + name + " = " + formula.to_string(universe) + '\n';
  }
  return out;
}

Formula resolve_query(const KbDocument& doc, std::string_view text) {
  const std::string_view trimmed = trim(text);
  if (auto it = doc.aliases.find(std::string(trimmed)); it != doc.aliases.end()) {
    return it->second;
  }
  return parse_formula(trimmed, doc.kb.universe());
}

}  // namespace punchline
