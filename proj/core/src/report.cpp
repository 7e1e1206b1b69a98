#include "punchline/report.hpp"

#include <json.hpp>

namespace punchline {

namespace {

std::vector<std::string> witness_strings(const ModelSet& models,
                                         const AtomUniverse& universe) {
  std::vector<std::string> out;
  out.reserve(models.size());
  for (std::size_t i = 0; i < models.size(); ++i) {
    out.push_back(models.at(i).to_string(universe));
  }
  return out;
}

const char* kind_name(NormRef::Kind kind) {
  return kind == NormRef::Kind::kStrict ? "strict" : "default";
}

std::string describe_norm(const NormRef& norm, const KnowledgeBase& kb) {
  std::string out = std::string(kind_name(norm.kind)) + " #" +
                    std::to_string(norm.index) + " (";
  if (norm.kind == NormRef::Kind::kStrict) {
    out += kb.strict()[norm.index].formula.to_string(kb.universe());
  } else {
    const auto& rule = kb.defaults()[norm.index];
    out += rule.antecedent.to_string(kb.universe()) + " ~> " +
           rule.consequent.to_string(kb.universe());
  }
  return out + ")";
}

nlohmann::json json_object(const JokeAnalysis& analysis, const KnowledgeBase& kb) {
  nlohmann::json root;
  root["surprising"] = analysis.surprising.has_value()
                           ? nlohmann::json(*analysis.surprising)
                           : nlohmann::json(nullptr);
  root["revealing"] = analysis.revealing;
  root["potentially_funny"] = analysis.potentially_funny;
  root["surprise_level"] = analysis.levels.surprise.to_string();
  root["revealing_level"] = analysis.levels.revealing.has_value()
                                ? nlohmann::json(analysis.levels.revealing->to_string())
                                : nlohmann::json(nullptr);

  auto norm_json = [](const NormRef& norm) {
    nlohmann::json j;
    j["kind"] = kind_name(norm.kind);
    j["index"] = norm.index;
    return j;
  };
  root["incongruous_norms"] = nlohmann::json::array();
  for (const auto& finding : analysis.incongruity.incongruous) {
    root["incongruous_norms"].push_back(norm_json(finding.norm));
  }
  root["non_violable_norms"] = nlohmann::json::array();
  for (const auto& norm : analysis.incongruity.non_violable) {
    root["non_violable_norms"].push_back(norm_json(norm));
  }

  nlohmann::json witnesses;
  witnesses["context"] = witness_strings(analysis.context_models, kb.universe());
  witnesses["combined"] = witness_strings(analysis.combined_models, kb.universe());
  witnesses["punchline"] = witness_strings(analysis.punchline_models, kb.universe());
  root["witnesses"] = witnesses;
  return root;
}

std::string render_set(const ModelSet& models, const AtomUniverse& universe) {
  if (models.empty()) return "(none)";
  std::string out = "{";
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (i > 0) out += ", ";
    out += models.at(i).to_string(universe);
  }
  return out + "}";
}

std::string render_text(const JokeAnalysis& analysis, const KnowledgeBase& kb) {
  const auto& universe = kb.universe();
  std::string out;
  out += "statement: (" + analysis.statement.context.to_string(universe) + ", " +
         analysis.statement.punchline.to_string(universe) + ")  [order: " +
         (analysis.method == OrderMethod::kBestOut ? "bo" : "lex") + "]\n";
  out += "  surprising:         ";
  out += analysis.surprising.has_value()
             ? (*analysis.surprising ? "yes" : "no")
             : "inapplicable (context inconsistent with the strict rules)";
  out += "\n  revealing:          ";
  out += analysis.revealing ? "yes" : "no";
  out += "\n  potentially funny:  ";
  out += analysis.potentially_funny ? "yes" : "no";
  out += "\n  surprise level:     " + analysis.levels.surprise.to_string();
  out += "\n  revealing level:    ";
  out += analysis.levels.revealing.has_value()
             ? analysis.levels.revealing->to_string()
             : "undefined (punchline has possibility zero)";

  out += "\n  incongruous norms:  ";
  if (analysis.incongruity.incongruous.empty()) {
    out += "none";
  } else {
    for (std::size_t i = 0; i < analysis.incongruity.incongruous.size(); ++i) {
      const auto& finding = analysis.incongruity.incongruous[i];
      if (i > 0) out += "; ";
      out += describe_norm(finding.norm, kb) + " disregarded in " +
             render_set(finding.disregard_models, universe);
    }
  }
  out += "\n  non-violable norms: ";
  if (analysis.incongruity.non_violable.empty()) {
    out += "none";
  } else {
    for (std::size_t i = 0; i < analysis.incongruity.non_violable.size(); ++i) {
      if (i > 0) out += "; ";
      out += describe_norm(analysis.incongruity.non_violable[i], kb);
    }
  }
  for (const auto& [norm, reason] : analysis.incongruity.failures) {
    out += "\n  norm not testable:  " + describe_norm(norm, kb) + ": " + reason;
  }
  out += "\n  after context:              " +
         render_set(analysis.context_models, universe);
  out += "\n  after context & punchline:  " +
         render_set(analysis.combined_models, universe);
  out += "\n  after punchline:            " +
         render_set(analysis.punchline_models, universe);
  out += "\n";
  return out;
}

}  // namespace

std::string render_report(const JokeAnalysis& analysis, const KnowledgeBase& kb,
                          ReportFormat format) {
  return format == ReportFormat::kJson ? json_object(analysis, kb).dump(2) + "\n"
                                       : render_text(analysis, kb);
}

std::string render_cascade_report(std::span<const JokeAnalysis> steps,
                                  const KnowledgeBase& kb, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::json root = nlohmann::json::array();
    for (const auto& step : steps) root.push_back(json_object(step, kb));
    return root.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out += "step " + std::to_string(i + 1) + " ";
    out += render_text(steps[i], kb);
  }
  return out;
}

}  // namespace punchline
