// Command-line front end: analyze statements against a knowledge base,
// inspect its stratification and orderings, and stress the induced
// revision operator.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "punchline/errors.hpp"
#include "punchline/kb_format.hpp"
#include "punchline/km_check.hpp"
#include "punchline/report.hpp"

namespace {

using namespace punchline;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitInternal = 4;

KbDocument load_kb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read knowledge base file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_kb(buffer.str());
}

OrderMethod to_method(const std::string& name) {
  return name == "bo" ? OrderMethod::kBestOut : OrderMethod::kLex;
}

ReportFormat to_format(const std::string& name) {
  return name == "text" ? ReportFormat::kText : ReportFormat::kJson;
}

std::string set_string(const ModelSet& models, const AtomUniverse& universe) {
  if (models.empty()) return "(none)";
  std::string out = "{";
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (i > 0) out += ", ";
    out += models.at(i).to_string(universe);
  }
  return out + "}";
}

int run_analyze(const std::string& kb_path, const std::string& context,
                const std::string& punchline, const std::string& order,
                const std::string& format) {
  const KbDocument doc = load_kb(kb_path);
  const Statement st{resolve_query(doc, context), resolve_query(doc, punchline)};
  const JokeAnalysis analysis = analyze(doc.kb, st, to_method(order));
  std::cout << render_report(analysis, doc.kb, to_format(format));
  return kExitOk;
}

int run_cascade(const std::string& kb_path, const std::vector<std::string>& parts,
                const std::string& order, const std::string& format) {
  const KbDocument doc = load_kb(kb_path);
  std::vector<Formula> formulas;
  formulas.reserve(parts.size());
  for (const auto& part : parts) formulas.push_back(resolve_query(doc, part));
  const auto steps = analyze_cascade(doc.kb, formulas, to_method(order));
  std::cout << render_cascade_report(steps, doc.kb, to_format(format));
  return kExitOk;
}

int run_stratify(const std::string& kb_path) {
  const KbDocument doc = load_kb(kb_path);
  const auto& kb = doc.kb;
  const auto& universe = kb.universe();
  const Stratification strat = z_stratify(kb);

  std::cout << "strict stratum (highest priority):\n";
  if (kb.strict().empty()) {
    std::cout << "  (none)\n";
  }
  for (const auto& rule : kb.strict()) {
    std::cout << "  " << (rule.is_norm ? "norm " : "")
              << rule.formula.to_string(universe) << "\n";
  }
  for (std::size_t r = strat.rank_count(); r-- > 0;) {
    std::cout << "default stratum, rank " << r
              << (r + 1 == strat.rank_count() ? " (most specific)" : "") << ":\n";
    for (std::size_t i : strat.ranks()[r]) {
      const auto& rule = kb.defaults()[i];
      std::cout << "  " << (rule.is_norm ? "norm " : "")
                << rule.antecedent.to_string(universe) << " ~> "
                << rule.consequent.to_string(universe) << "\n";
    }
  }

  const RankedDistribution dist = build_distribution(kb);
  std::cout << "plausibility layers (level/" << dist.top_level()
            << ", higher = more plausible):\n";
  for (std::uint32_t level = dist.top_level() + 1; level-- > 0;) {
    std::vector<std::uint32_t> worlds;
    for (std::uint32_t w = 0; w < dist.world_count(); ++w) {
      if (dist.level(Interpretation(w)) == level) worlds.push_back(w);
    }
    std::cout << "  level " << level << (level == 0 ? " (impossible)" : "") << ": "
              << set_string(ModelSet(std::move(worlds)), universe) << "\n";
  }
  return kExitOk;
}

int run_models(const std::string& kb_path, const std::string& formula_text) {
  const KbDocument doc = load_kb(kb_path);
  const auto& kb = doc.kb;
  const Formula phi = resolve_query(doc, formula_text);

  ModelSet constrained = models_of(phi, kb.universe());
  for (const Formula& p : kb.strict_formulas()) {
    constrained = constrained.intersect(models_of(p, kb.universe()));
  }
  std::cout << "Mod(P + formula): " << set_string(constrained, kb.universe()) << "\n";
  for (const auto method : {OrderMethod::kBestOut, OrderMethod::kLex}) {
    const ModelSet minimal =
        min_models(build_order(kb, method), phi, kb.universe());
    std::cout << "minimal models ("
              << (method == OrderMethod::kBestOut ? "bo" : "lex")
              << "): " << set_string(minimal, kb.universe()) << "\n";
  }
  return kExitOk;
}

int run_check_km(const std::string& kb_path, const std::string& order,
                 std::uint32_t trials, std::uint64_t seed) {
  const KbDocument doc = load_kb(kb_path);
  const KmReport report =
      check_km_postulates(doc.kb, to_method(order), trials, seed);
  std::cout << "postulate check: order=" << order << " trials=" << report.trials
            << " seed=" << seed << "\n";
  for (int p = 0; p < 6; ++p) {
    std::cout << "  KM" << (p + 1) << ": " << report.checked[p]
              << " applicable trials\n";
  }
  if (report.ok()) {
    std::cout << "no violations\n";
    return kExitOk;
  }
  for (const auto& v : report.violations) {
    std::cout << "VIOLATION of KM" << v.postulate << " with phi=" << v.phi
              << " psi=" << v.psi << ": " << v.detail << "\n";
  }
  // A rational operator cannot violate these; a violation means the engine
  // itself broke an invariant.
  return kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"possibilistic belief-revision engine for joke analysis"};
  app.require_subcommand(1);

  std::string kb_path;
  std::string context;
  std::string punchline;
  std::string formula_text;
  std::vector<std::string> parts;
  std::string order = "lex";  // lex discriminates where best-out cannot
  std::string format = "json";
  std::uint32_t trials = 200;
  std::uint64_t seed = 0;

  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "plausibility ordering (default lex)")
        ->check(CLI::IsMember({"bo", "lex"}));
  };

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "analyze one statement (context, punchline)");
  analyze_cmd->add_option("--kb", kb_path, "knowledge base file")->required();
  analyze_cmd->add_option("--context", context, "context formula or alias")->required();
  analyze_cmd->add_option("--punchline", punchline, "punchline formula or alias")
      ->required();
  add_order(analyze_cmd);
  analyze_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* cascade_cmd =
      app.add_subcommand("cascade", "analyze a progressive story part by part");
  cascade_cmd->add_option("--kb", kb_path, "knowledge base file")->required();
  cascade_cmd->add_option("--part", parts, "story part, repeatable (at least two)")
      ->required();
  add_order(cascade_cmd);
  cascade_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* stratify_cmd =
      app.add_subcommand("stratify", "print strata and plausibility layers");
  stratify_cmd->add_option("--kb", kb_path, "knowledge base file")->required();

  CLI::App* models_cmd = app.add_subcommand(
      "models", "print constrained and minimal models of a formula");
  models_cmd->add_option("--kb", kb_path, "knowledge base file")->required();
  models_cmd->add_option("--formula", formula_text, "formula or alias")->required();

  CLI::App* check_cmd = app.add_subcommand(
      "check-km", "randomized conformance check of the revision postulates");
  check_cmd->add_option("--kb", kb_path, "knowledge base file")->required();
  add_order(check_cmd);
  check_cmd->add_option("--trials", trials, "number of sampled formula pairs")
      ->required();
  check_cmd->add_option("--seed", seed, "random seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) {
      return run_analyze(kb_path, context, punchline, order, format);
    }
    if (cascade_cmd->parsed()) {
      if (parts.size() < 2) {
        std::cerr << "error: cascade needs at least two --part options\n";
        return kExitInput;
      }
      return run_cascade(kb_path, parts, order, format);
    }
    if (stratify_cmd->parsed()) return run_stratify(kb_path);
    if (models_cmd->parsed()) return run_models(kb_path, formula_text);
    if (check_cmd->parsed()) return run_check_km(kb_path, order, trials, seed);
  } catch (const InconsistentStrictError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const InconsistentDefaultsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const SyntaxError& e) {
    std::cerr << "error";
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
    else if (e.column > 0) std::cerr << " at column " << e.column;
    std::cerr << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;  // unreachable: a subcommand is required
}
