#include "flowcat/term.hpp"

#include <array>
#include <cctype>

#include "flowcat/scalar.hpp"

namespace flowcat {
namespace {

struct GeneratorInfo {
  Generator g;
  std::string_view name;
  std::size_t arity, coarity;
};

constexpr std::array<GeneratorInfo, 12> kGenerators{{
    {Generator::add, "add", 2, 1},
    {Generator::zero, "zero", 0, 1},
    {Generator::copy, "copy", 1, 2},
    {Generator::discard, "discard", 1, 0},
    {Generator::delay, "delay", 1, 1},
    {Generator::scalar, "scalar", 1, 1},
    {Generator::co_add, "co_add", 1, 2},
    {Generator::co_zero, "co_zero", 1, 0},
    {Generator::co_copy, "co_copy", 2, 1},
    {Generator::co_discard, "co_discard", 0, 1},
    {Generator::co_delay, "co_delay", 1, 1},
    {Generator::co_scalar, "co_scalar", 1, 1},
}};

const GeneratorInfo& info(Generator g) { return kGenerators[static_cast<std::size_t>(g)]; }

}  // namespace

std::string_view generator_name(Generator g) { return info(g).name; }

std::optional<Generator> generator_from_name(std::string_view name) {
  for (const auto& gi : kGenerators) {
    if (gi.name == name) return gi.g;
  }
  return std::nullopt;
}

std::size_t generator_arity(Generator g) { return info(g).arity; }
std::size_t generator_coarity(Generator g) { return info(g).coarity; }
bool is_mirrored(Generator g) { return static_cast<int>(g) >= static_cast<int>(Generator::co_add); }
bool has_parameter(Generator g) { return g == Generator::scalar || g == Generator::co_scalar; }

Generator mirror_generator(Generator g) {
  constexpr int half = static_cast<int>(Generator::co_add);
  int i = static_cast<int>(g);
  return static_cast<Generator>(i < half ? i + half : i - half);
}

struct Term::Node {
  Kind kind;
  Generator gen = Generator::add;
  mpq_class param = 0;
  std::size_t width = 0;
  std::optional<Term> lhs, rhs;
};

Term Term::gen(Generator g) {
  if (has_parameter(g)) throw std::invalid_argument(std::string(generator_name(g)) + " needs a parameter");
  return Term(std::make_shared<const Node>(Node{Kind::generator, g, 0, 0, {}, {}}));
}

Term Term::gen(Generator g, const mpq_class& param) {
  if (!has_parameter(g)) return gen(g);
  return Term(std::make_shared<const Node>(Node{Kind::generator, g, param, 0, {}, {}}));
}

Term Term::id(std::size_t n) {
  return Term(std::make_shared<const Node>(Node{Kind::identity, Generator::add, 0, n, {}, {}}));
}

Term Term::twist() {
  return Term(std::make_shared<const Node>(Node{Kind::twist, Generator::add, 0, 0, {}, {}}));
}

Term Term::seq(Term first, Term second) {
  return Term(std::make_shared<const Node>(
      Node{Kind::seq, Generator::add, 0, 0, std::move(first), std::move(second)}));
}

Term Term::tensor(Term first, Term second) {
  return Term(std::make_shared<const Node>(
      Node{Kind::tensor, Generator::add, 0, 0, std::move(first), std::move(second)}));
}

Term::Kind Term::kind() const { return node_->kind; }
Generator Term::generator() const { return node_->gen; }
const mpq_class& Term::param() const { return node_->param; }
std::size_t Term::width() const { return node_->width; }
const Term& Term::lhs() const { return *node_->lhs; }
const Term& Term::rhs() const { return *node_->rhs; }

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::generator:
      return a.gen == b.gen && a.param == b.param;
    case Kind::identity:
      return a.width == b.width;
    case Kind::twist:
      return true;
    case Kind::seq:
    case Kind::tensor:
      return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
  return false;
}

Term seq_all(const std::vector<Term>& terms) {
  if (terms.empty()) throw std::invalid_argument("seq_all of no terms");
  Term out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out = Term::seq(out, terms[i]);
  return out;
}

Term tensor_all(const std::vector<Term>& terms) {
  if (terms.empty()) return Term::id(0);
  Term out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out = Term::tensor(out, terms[i]);
  return out;
}

Term mirror(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::generator:
      return Term::gen(mirror_generator(t.generator()), t.param());
    case Term::Kind::identity:
    case Term::Kind::twist:
      return t;
    case Term::Kind::seq:
      return Term::seq(mirror(t.rhs()), mirror(t.lhs()));
    case Term::Kind::tensor:
      return Term::tensor(mirror(t.lhs()), mirror(t.rhs()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_trivia();
    if (at_end()) fail("empty term");
    Term t = parse_seq();
    skip_trivia();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return t;
  }

 private:
  Term parse_seq() {
    Term t = parse_tensor();
    while (accept(';')) t = Term::seq(t, parse_tensor());
    return t;
  }

  Term parse_tensor() {
    Term t = parse_atom();
    while (accept('|')) t = Term::tensor(t, parse_atom());
    return t;
  }

  Term parse_atom() {
    skip_trivia();
    if (at_end()) fail("unexpected end of input");
    if (accept('(')) {
      Term t = parse_seq();
      if (!accept(')')) fail("expected ')'");
      return t;
    }
    if (!is_name_start(peek())) fail(std::string("unexpected '") + peek() + "'");
    const std::size_t name_line = line_, name_col = column_;
    std::string name;
    while (!at_end() && is_name_char(peek())) name.push_back(advance());

    if (name == "id") {
      if (!at_end() && peek() == '@') {
        advance();
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(advance());
        if (digits.empty()) fail("expected wire count after 'id@'");
        if (digits.size() > 6) fail("identity width too large");
        return Term::id(std::stoul(digits));
      }
      return Term::id(1);
    }
    if (name == "tw") return Term::twist();

    auto g = generator_from_name(name);
    if (!g) throw ParseError("unknown generator '" + name + "'", name_line, name_col);
    skip_trivia();
    if (has_parameter(*g)) {
      if (!accept('(')) fail(name + " requires a rational parameter, e.g. " + name + "(-1)");
      skip_trivia();
      const std::size_t lit_line = line_, lit_col = column_;
      std::string literal;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' ||
                           peek() == '+' || peek() == '/')) {
        literal.push_back(advance());
      }
      mpq_class value;
      try {
        value = parse_rational(literal);
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed scalar literal '" + literal + "'", lit_line, lit_col);
      }
      if (!accept(')')) fail("expected ')' after scalar literal");
      return Term::gen(*g, value);
    }
    if (!at_end() && peek() == '(') fail(name + " takes no parameter");
    return Term::gen(*g);
  }

  static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool accept(char c) {
    skip_trivia();
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void skip_trivia() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, column_ = 1;
};

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::generator:
      out += generator_name(t.generator());
      if (has_parameter(t.generator())) out += "(" + t.param().get_str() + ")";
      return;
    case Term::Kind::identity:
      out += "id@" + std::to_string(t.width());
      return;
    case Term::Kind::twist:
      out += "tw";
      return;
    case Term::Kind::seq:
    case Term::Kind::tensor: {
      // Both operators parse left-associatively and ';' binds looser than '|'.
      const bool is_seq = t.kind() == Term::Kind::seq;
      auto needs_parens = [&](const Term& child, bool right) {
        if (is_seq) return right && child.kind() == Term::Kind::seq;
        return child.kind() == Term::Kind::seq || (right && child.kind() == Term::Kind::tensor);
      };
      auto emit = [&](const Term& child, bool right) {
        bool parens = needs_parens(child, right);
        if (parens) out += '(';
        print(child, out);
        if (parens) out += ')';
      };
      emit(t.lhs(), false);
      out += is_seq ? " ; " : " | ";
      emit(t.rhs(), true);
      return;
    }
  }
}

struct Boundary {
  std::size_t arity, coarity;
};

Boundary check(const Term& t, std::vector<RegisterSite>& registers) {
  switch (t.kind()) {
    case Term::Kind::generator:
      if (t.generator() == Generator::delay || t.generator() == Generator::co_delay) {
        registers.push_back({t.generator() == Generator::delay ? RegisterKind::delay : RegisterKind::co_delay,
                             registers.size()});
      }
      return {generator_arity(t.generator()), generator_coarity(t.generator())};
    case Term::Kind::identity:
      return {t.width(), t.width()};
    case Term::Kind::twist:
      return {2, 2};
    case Term::Kind::seq: {
      Boundary a = check(t.lhs(), registers);
      Boundary b = check(t.rhs(), registers);
      if (a.coarity != b.arity) throw TypeError(pretty(t), a.coarity, b.arity);
      return {a.arity, b.coarity};
    }
    case Term::Kind::tensor: {
      Boundary a = check(t.lhs(), registers);
      Boundary b = check(t.rhs(), registers);
      return {a.arity + b.arity, a.coarity + b.coarity};
    }
  }
  return {0, 0};
}

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string pretty(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

TypeError::TypeError(const std::string& node, std::size_t left_coarity, std::size_t right_arity)
    : std::runtime_error("boundary mismatch in '" + node + "': left side has coarity " +
                         std::to_string(left_coarity) + " but right side has arity " +
                         std::to_string(right_arity)),
      node_(node),
      left_coarity_(left_coarity),
      right_arity_(right_arity) {}

TypedTerm typecheck(const Term& t) {
  TypedTerm typed{t, 0, 0, {}};
  Boundary b = check(t, typed.registers);
  typed.arity = b.arity;
  typed.coarity = b.coarity;
  return typed;
}

}  // namespace flowcat
