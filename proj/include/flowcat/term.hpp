#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flowcat {

/// Generators of the diagram language. Each co_* is the mirror image of the
/// corresponding generator: arity and coarity swap, the denoted relation is
/// the opposite relation.
enum class Generator {
  add,       // 2 -> 1
  zero,      // 0 -> 1
  copy,      // 1 -> 2
  discard,   // 1 -> 0
  delay,     // 1 -> 1
  scalar,    // 1 -> 1, parameterised by a field element
  co_add,
  co_zero,
  co_copy,
  co_discard,
  co_delay,
  co_scalar,
};

std::string_view generator_name(Generator g);
std::optional<Generator> generator_from_name(std::string_view name);
std::size_t generator_arity(Generator g);
std::size_t generator_coarity(Generator g);
Generator mirror_generator(Generator g);
bool is_mirrored(Generator g);
bool has_parameter(Generator g);

/// Immutable AST node of a diagram term. Copies share structure.
class Term {
 public:
  enum class Kind { generator, identity, twist, seq, tensor };

  static Term gen(Generator g);
  static Term gen(Generator g, const mpq_class& param);
  static Term scalar(const mpq_class& a) { return gen(Generator::scalar, a); }
  static Term id(std::size_t n = 1);
  static Term twist();
  /// Diagrammatic order: first, then second.
  static Term seq(Term first, Term second);
  /// first on top of second.
  static Term tensor(Term first, Term second);

  Kind kind() const;
  /// Valid for Kind::generator.
  Generator generator() const;
  /// Scalar parameter; 0 for unparameterised generators.
  const mpq_class& param() const;
  /// Wire count of an identity.
  std::size_t width() const;
  /// Children of seq/tensor.
  const Term& lhs() const;
  const Term& rhs() const;

  /// Structural equality.
  bool operator==(const Term& other) const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Seq-chain of several terms; at least one required.
Term seq_all(const std::vector<Term>& terms);
/// Tensor of several terms; an empty list gives id@0.
Term tensor_all(const std::vector<Term>& terms);

/// Mirror image: every generator replaced by its mirror, sequential order
/// reversed. Denotes the opposite relation.
Term mirror(const Term& t);

/// Raised by parse() with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Grammar:
///   term   := tensor (';' tensor)*
///   tensor := atom ('|' atom)*
///   atom   := NAME | NAME '(' RATIONAL ')' | 'id@' NAT | 'tw' | '(' term ')'
/// `#` starts a comment running to end of line; bare `id` means id@1.
Term parse_term(std::string_view text);

/// Canonical text with minimal parentheses; parse_term(pretty(t)) == t.
std::string pretty(const Term& t);

enum class RegisterKind { delay, co_delay };

struct RegisterSite {
  RegisterKind kind;
  std::size_t ordinal;  ///< position in depth-first, left-to-right order
};

struct TypedTerm {
  Term term;
  std::size_t arity = 0;
  std::size_t coarity = 0;
  std::vector<RegisterSite> registers;
};

class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& node, std::size_t left_coarity, std::size_t right_arity);
  const std::string& node() const { return node_; }
  std::size_t left_coarity() const { return left_coarity_; }
  std::size_t right_arity() const { return right_arity_; }

 private:
  std::string node_;
  std::size_t left_coarity_, right_arity_;
};

/// Computes the boundary types bottom-up and enumerates registers in
/// depth-first order (seq left before right, tensor top before bottom).
TypedTerm typecheck(const Term& t);

}  // namespace flowcat
