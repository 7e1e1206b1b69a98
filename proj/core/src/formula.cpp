#include "punchline/formula.hpp"

#include <cassert>
#include <cctype>
#include <utility>

#include "punchline/errors.hpp"

namespace punchline {

AtomUniverse::AtomUniverse(const std::vector<std::string>& names) {
  for (const auto& n : names) intern(n);
}

AtomId AtomUniverse::intern(std::string_view name) {
  if (auto it = index_.find(std::string(name)); it != index_.end()) {
    return AtomId{it->second};
  }
  if (names_.size() >= kMaxAtoms) {
    throw UniverseTooLargeError("universe exceeds " + std::to_string(kMaxAtoms) +
                                " atoms (adding '" + std::string(name) + "')");
  }
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return AtomId{id};
}

std::optional<AtomId> AtomUniverse::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) {
    return AtomId{it->second};
  }
  return std::nullopt;
}

bool AtomUniverse::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  for (char c : name.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return name != "true" && name != "false";
}

struct Formula::Node {
  Kind kind;
  AtomId atom{};
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make_node(Formula::Kind kind, AtomId atom, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->atom = atom;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

}  // namespace

Formula Formula::atom(AtomId id) {
  return Formula(make_node(Kind::kAtom, id, nullptr, nullptr));
}
Formula Formula::top() { return Formula(make_node(Kind::kTop, {}, nullptr, nullptr)); }
Formula Formula::bottom() {
  return Formula(make_node(Kind::kBottom, {}, nullptr, nullptr));
}
Formula Formula::negation(Formula f) {
  return Formula(make_node(Kind::kNot, {}, std::move(f.node_), nullptr));
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::kAnd, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::kOr, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      make_node(Kind::kImplies, {}, std::move(lhs.node_), std::move(rhs.node_)));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(make_node(Kind::kIff, {}, std::move(lhs.node_), std::move(rhs.node_)));
}

Formula::Kind Formula::kind() const { return node_->kind; }

AtomId Formula::atom_id() const {
  assert(kind() == Kind::kAtom);
  return node_->atom;
}
Formula Formula::lhs() const {
  assert(node_->lhs != nullptr);
  return Formula(node_->lhs);
}
Formula Formula::rhs() const {
  assert(node_->rhs != nullptr);
  return Formula(node_->rhs);
}

namespace {

bool eval_node(const Formula::Node* n, std::uint32_t world) {
  switch (n->kind) {
    case Formula::Kind::kAtom:
      return (world >> n->atom.value) & 1u;
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kBottom:
      return false;
    case Formula::Kind::kNot:
      return !eval_node(n->lhs.get(), world);
    case Formula::Kind::kAnd:
      return eval_node(n->lhs.get(), world) && eval_node(n->rhs.get(), world);
    case Formula::Kind::kOr:
      return eval_node(n->lhs.get(), world) || eval_node(n->rhs.get(), world);
    case Formula::Kind::kImplies:
      return !eval_node(n->lhs.get(), world) || eval_node(n->rhs.get(), world);
    case Formula::Kind::kIff:
      return eval_node(n->lhs.get(), world) == eval_node(n->rhs.get(), world);
  }
  return false;  // unreachable
}

bool nodes_equal(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::kAtom:
      return a->atom == b->atom;
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return true;
    case Formula::Kind::kNot:
      return nodes_equal(a->lhs.get(), b->lhs.get());
    default:
      return nodes_equal(a->lhs.get(), b->lhs.get()) &&
             nodes_equal(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

bool Formula::evaluate(std::uint32_t world) const {
  return eval_node(node_.get(), world);
}

bool Formula::structurally_equal(const Formula& other) const {
  return nodes_equal(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength; higher binds tighter.
int precedence_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kIff:
      return 0;
    case Formula::Kind::kImplies:
      return 1;
    case Formula::Kind::kOr:
      return 2;
    case Formula::Kind::kAnd:
      return 3;
    case Formula::Kind::kNot:
      return 4;
    default:
      return 5;
  }
}

void render_node(const Formula::Node* n, const AtomUniverse& universe,
                 std::string& out);

// Emits the child, parenthesized when its precedence is below `floor`.
void render_child(const Formula::Node* n, const AtomUniverse& universe,
                  int floor, std::string& out) {
  if (precedence_of(n->kind) < floor) {
    out += '(';
    render_node(n, universe, out);
    out += ')';
  } else {
    render_node(n, universe, out);
  }
}

void render_node(const Formula::Node* n, const AtomUniverse& universe,
                 std::string& out) {
  const int prec = precedence_of(n->kind);
  switch (n->kind) {
    case Formula::Kind::kAtom:
      out += universe.name(n->atom);
      break;
    case Formula::Kind::kTop:
      out += "true";
      break;
    case Formula::Kind::kBottom:
      out += "false";
      break;
    case Formula::Kind::kNot:
      out += '!';
      render_child(n->lhs.get(), universe, prec, out);
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      // Left-associative: a right child at equal precedence keeps parens so
      // the parsed tree matches this one.
      render_child(n->lhs.get(), universe, prec, out);
      out += n->kind == Formula::Kind::kAnd ? " & " : " | ";
      render_child(n->rhs.get(), universe, prec + 1, out);
      break;
    case Formula::Kind::kImplies:
      // Right-associative: mirror image of the above.
      render_child(n->lhs.get(), universe, prec + 1, out);
      out += " -> ";
      render_child(n->rhs.get(), universe, prec, out);
      break;
    case Formula::Kind::kIff:
      // Non-associative: both sides need to bind tighter.
      render_child(n->lhs.get(), universe, prec + 1, out);
      out += " <-> ";
      render_child(n->rhs.get(), universe, prec + 1, out);
      break;
  }
}

}  // namespace

std::string Formula::to_string(const AtomUniverse& universe) const {
  std::string out;
  render_node(node_.get(), universe, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class TokKind : std::uint8_t {
  kIdent,
  kTrue,
  kFalse,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kLParen,
  kRParen,
  kEnd,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;  // byte offset into the input
};

[[noreturn]] void fail(const std::string& message, std::size_t pos) {
  throw SyntaxError(message, 0, pos + 1);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      TokKind kind = word == "true"    ? TokKind::kTrue
                     : word == "false" ? TokKind::kFalse
                                       : TokKind::kIdent;
      tokens.push_back({kind, std::move(word), start});
      i = j;
      continue;
    }
    switch (c) {
      case '!':
        tokens.push_back({TokKind::kNot, "!", start});
        ++i;
        break;
      case '&':
        tokens.push_back({TokKind::kAnd, "&", start});
        ++i;
        break;
      case '|':
        tokens.push_back({TokKind::kOr, "|", start});
        ++i;
        break;
      case '(':
        tokens.push_back({TokKind::kLParen, "(", start});
        ++i;
        break;
      case ')':
        tokens.push_back({TokKind::kRParen, ")", start});
        ++i;
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          tokens.push_back({TokKind::kImplies, "->", start});
          i += 2;
        } else {
          fail("expected '->'", start);
        }
        break;
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          tokens.push_back({TokKind::kIff, "<->", start});
          i += 3;
        } else {
          fail("expected '<->'", start);
        }
        break;
      default:
        fail(std::string("unexpected character '") + c + "'", start);
    }
  }
  tokens.push_back({TokKind::kEnd, "", text.size()});
  return tokens;
}

class Parser {
 public:
  Parser(std::string_view text, const AtomUniverse* fixed, AtomUniverse* growing)
      : tokens_(tokenize(text)), fixed_(fixed), growing_(growing) {}

  Formula run() {
    Formula f = parse_equivalence();
    if (peek().kind != TokKind::kEnd) {
      fail("unexpected '" + peek().text + "', expected end of formula",
           peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  bool accept(TokKind kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_equivalence() {
    Formula lhs = parse_implication();
    if (accept(TokKind::kIff)) {
      Formula rhs = parse_implication();
      if (peek().kind == TokKind::kIff) {
        fail("'<->' is non-associative, parenthesize the chain", peek().pos);
      }
      return Formula::equivalence(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (accept(TokKind::kImplies)) {
      // right-associative
      return Formula::implication(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (accept(TokKind::kOr)) {
      f = Formula::disjunction(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    while (accept(TokKind::kAnd)) {
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (accept(TokKind::kNot)) {
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token tok = next();
    switch (tok.kind) {
      case TokKind::kTrue:
        return Formula::top();
      case TokKind::kFalse:
        return Formula::bottom();
      case TokKind::kLParen: {
        Formula f = parse_equivalence();
        if (!accept(TokKind::kRParen)) {
          fail("expected ')'", peek().pos);
        }
        return f;
      }
      case TokKind::kIdent: {
        if (growing_ != nullptr) {
          return Formula::atom(growing_->intern(tok.text));
        }
        if (auto id = fixed_->find(tok.text)) {
          return Formula::atom(*id);
        }
        throw UnknownAtomError("unknown atom '" + tok.text + "'", 0, tok.pos + 1);
      }
      case TokKind::kEnd:
        fail("unexpected end of formula, expected an atom, constant, '!' or '('",
             tok.pos);
      default:
        fail("unexpected '" + tok.text +
                 "', expected an atom, constant, '!' or '('",
             tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const AtomUniverse* fixed_;
  AtomUniverse* growing_;
};

}  // namespace

Formula parse_formula(std::string_view text, const AtomUniverse& universe) {
  return Parser(text, &universe, nullptr).run();
}

Formula parse_formula_inferring(std::string_view text, AtomUniverse& universe) {
  return Parser(text, nullptr, &universe).run();
}

}  // namespace punchline
