#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flowcat/normal_forms.hpp"
#include "flowcat/term.hpp"

namespace flowcat {

/// m --A--> apex <--B-- n, denoting {(x, y) | A x = B y} on biinfinite streams.
class Cospan {
 public:
  /// A is apex x m, B is apex x n.
  Cospan(PolyMatrix A, PolyMatrix B);

  const PolyMatrix& A() const { return A_; }
  const PolyMatrix& B() const { return B_; }
  std::size_t m() const { return A_.cols(); }
  std::size_t n() const { return B_.cols(); }
  std::size_t apex() const { return A_.rows(); }
  const Field& field() const { return A_.field(); }

 private:
  PolyMatrix A_, B_;
};

/// m <--R-- waist --S--> n, denoting the joint image of [R; S].
class Span {
 public:
  /// R is m x waist, S is n x waist.
  Span(PolyMatrix R, PolyMatrix S);

  const PolyMatrix& R() const { return R_; }
  const PolyMatrix& S() const { return S_; }
  std::size_t m() const { return R_.rows(); }
  std::size_t n() const { return S_.rows(); }
  std::size_t waist() const { return R_.cols(); }
  const Field& field() const { return R_.field(); }

 private:
  PolyMatrix R_, S_;
};

/// A jointly-epic cospan together with its canonical kernel representation,
/// the Hermite form of [A | -B]. Two corelations denote the same behaviour
/// iff their kernel representations are identical; the legs are a witness.
class Corelation {
 public:
  const PolyMatrix& A() const { return legs_.A(); }
  const PolyMatrix& B() const { return legs_.B(); }
  const Cospan& legs() const { return legs_; }
  const PolyMatrix& kernel_rep() const { return kernel_rep_; }
  std::size_t m() const { return legs_.m(); }
  std::size_t n() const { return legs_.n(); }
  std::size_t apex() const { return legs_.apex(); }
  const Field& field() const { return legs_.field(); }

 private:
  friend Corelation corelation_of(const Cospan& c);
  Corelation(Cospan legs, PolyMatrix kernel_rep) : legs_(std::move(legs)), kernel_rep_(std::move(kernel_rep)) {}

  Cospan legs_;
  PolyMatrix kernel_rep_;
};

/// Fixed table of generator denotations as cospans of matrices.
Cospan generator_cospan(Generator g, const mpq_class& param, Field field);
Cospan identity_cospan(Field field, std::size_t n);
Cospan twist_cospan(Field field);

/// Pushout composition; throws std::invalid_argument if first.n() != second.m().
Cospan cospan_compose(const Cospan& first, const Cospan& second);
/// Apexes add and legs are direct sums.
Cospan cospan_tensor(const Cospan& top, const Cospan& bottom);

/// Structural fold of a term into cospans. The term must typecheck.
Cospan term_to_cospan(const Term& t, Field field);

/// Epi / split-mono factorization of the copairing [A | B].
Corelation corelation_of(const Cospan& c);

/// Cospan whose behaviour is the image of the span: the free pushout of R and S.
Cospan span_pushout(const Span& s);

/// Parse, typecheck, compile and normalize in one step.
Corelation normalize(const Term& t, Field field);
Corelation normalize(std::string_view text, Field field);

/// Throws std::invalid_argument when the boundary types differ.
bool behavior_equal(const Corelation& x, const Corelation& y);
/// Second decision route: mutual solve_left on the kernel representations.
bool behavior_equal_by_solving(const Corelation& x, const Corelation& y);
/// Behaviour of x is contained in the behaviour of y.
bool behavior_contained(const Corelation& x, const Corelation& y);

PolyMatrix kernel_representation(const Corelation& x);

/// A term denoting {(t, p*t)}: a copy tree fanning out to one scaled,
/// delayed branch per monomial of p, gathered by an adder tree.
Term poly_term(const LaurentPoly& p);

struct AxiomCase {
  std::string name;
  std::string lhs;
  std::string rhs;
};

struct AxiomResult {
  AxiomCase axiom;
  bool passed = false;
  std::string detail;
};

/// Curated equations of the diagram theory: (co)monoid laws for the white and
/// black structure and their mirrors, bimonoid and Frobenius interaction, the
/// delay's formal inverse, scalar laws and the white bone law.
std::vector<AxiomCase> curated_axioms();
std::vector<AxiomResult> axiom_soundness_suite(Field field);

}  // namespace flowcat
