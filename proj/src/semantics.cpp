#include "flowcat/semantics.hpp"

#include <stdexcept>

namespace flowcat {
namespace {

PolyMatrix scalar_matrix(const Scalar& a) {
  PolyMatrix m(a.field(), 1, 1);
  m(0, 0) = LaurentPoly(a);
  return m;
}

Cospan fold(const Term& t, Field field) {
  switch (t.kind()) {
    case Term::Kind::generator:
      return generator_cospan(t.generator(), t.param(), field);
    case Term::Kind::identity:
      return identity_cospan(field, t.width());
    case Term::Kind::twist:
      return twist_cospan(field);
    case Term::Kind::seq:
      return cospan_compose(fold(t.lhs(), field), fold(t.rhs(), field));
    case Term::Kind::tensor:
      return cospan_tensor(fold(t.lhs(), field), fold(t.rhs(), field));
  }
  throw std::logic_error("unreachable term kind");
}

void require_same_boundary(const Corelation& x, const Corelation& y) {
  if (x.m() != y.m() || x.n() != y.n()) {
    throw std::invalid_argument("boundary type mismatch: " + std::to_string(x.m()) + " -> " +
                                std::to_string(x.n()) + " vs " + std::to_string(y.m()) + " -> " +
                                std::to_string(y.n()));
  }
}

}  // namespace

Cospan::Cospan(PolyMatrix A, PolyMatrix B) : A_(std::move(A)), B_(std::move(B)) {
  if (A_.rows() != B_.rows()) throw std::invalid_argument("cospan legs must share their apex");
  if (A_.field() != B_.field()) throw std::invalid_argument("cospan legs over different fields");
}

Span::Span(PolyMatrix R, PolyMatrix S) : R_(std::move(R)), S_(std::move(S)) {
  if (R_.cols() != S_.cols()) throw std::invalid_argument("span legs must share their waist");
  if (R_.field() != S_.field()) throw std::invalid_argument("span legs over different fields");
}

Cospan generator_cospan(Generator g, const mpq_class& param, Field field) {
  if (is_mirrored(g)) {
    Cospan c = generator_cospan(mirror_generator(g), param, field);
    return Cospan(c.B(), c.A());
  }
  const PolyMatrix one = PolyMatrix::identity(field, 1);
  switch (g) {
    case Generator::add:
      return Cospan(PolyMatrix::from_rows(field, 2, {{LaurentPoly::one(field), LaurentPoly::one(field)}}), one);
    case Generator::zero:
      return Cospan(PolyMatrix(field, 1, 0), one);
    case Generator::copy:
      return Cospan(PolyMatrix::from_rows(field, 1, {{LaurentPoly::one(field)}, {LaurentPoly::one(field)}}),
                    PolyMatrix::identity(field, 2));
    case Generator::discard:
      return Cospan(PolyMatrix(field, 0, 1), PolyMatrix(field, 0, 0));
    case Generator::delay:
      return Cospan(PolyMatrix::from_rows(field, 1, {{LaurentPoly::s_power(field, 1)}}), one);
    case Generator::scalar:
      return Cospan(scalar_matrix(field.from_rational(param)), one);
    default:
      break;
  }
  throw std::invalid_argument("unknown generator");
}

Cospan identity_cospan(Field field, std::size_t n) {
  return Cospan(PolyMatrix::identity(field, n), PolyMatrix::identity(field, n));
}

Cospan twist_cospan(Field field) {
  const std::size_t swap[] = {1, 0};
  return Cospan(PolyMatrix::identity(field, 2), PolyMatrix::permutation(field, swap));
}

Cospan cospan_compose(const Cospan& first, const Cospan& second) {
  if (first.n() != second.m()) {
    throw std::invalid_argument("cospan_compose: boundary mismatch (" + std::to_string(first.n()) +
                                " vs " + std::to_string(second.m()) + ")");
  }
  // Pushout of first.B and second.A: quotient of the two apexes by the image
  // of [B1; -A2], reflected into free modules.
  PolyMatrix q = cokernel_free(vstack(first.B(), -second.A()));
  PolyMatrix to_first = q.col_range(0, first.apex());
  PolyMatrix to_second = q.col_range(first.apex(), first.apex() + second.apex());
  return Cospan(to_first * first.A(), to_second * second.B());
}

Cospan cospan_tensor(const Cospan& top, const Cospan& bottom) {
  return Cospan(direct_sum(top.A(), bottom.A()), direct_sum(top.B(), bottom.B()));
}

Cospan term_to_cospan(const Term& t, Field field) {
  typecheck(t);
  return fold(t, field);
}

Corelation corelation_of(const Cospan& c) {
  const std::size_t m = c.m();
  const std::size_t n = c.n();
  EpiSplitMono f = epi_splitmono_factor(hstack(c.A(), c.B()));
  // Any unimodular change of apex basis gives an isomorphic corelation; the
  // Hermite form picks a canonical one.
  PolyMatrix epi = hermite_normal_form(f.epi).H;
  PolyMatrix a = epi.col_range(0, m);
  PolyMatrix b = epi.col_range(m, m + n);
  PolyMatrix kernel = hermite_normal_form(hstack(a, -b)).H;
  return Corelation(Cospan(std::move(a), std::move(b)), std::move(kernel));
}

Cospan span_pushout(const Span& s) {
  PolyMatrix q = cokernel_free(vstack(s.R(), -s.S()));
  return Cospan(q.col_range(0, s.m()), q.col_range(s.m(), s.m() + s.n()));
}

Corelation normalize(const Term& t, Field field) { return corelation_of(term_to_cospan(t, field)); }

Corelation normalize(std::string_view text, Field field) { return normalize(parse_term(text), field); }

bool behavior_equal(const Corelation& x, const Corelation& y) {
  require_same_boundary(x, y);
  return x.kernel_rep() == y.kernel_rep();
}

bool behavior_equal_by_solving(const Corelation& x, const Corelation& y) {
  require_same_boundary(x, y);
  return solve_left(x.kernel_rep(), y.kernel_rep()).has_value() &&
         solve_left(y.kernel_rep(), x.kernel_rep()).has_value();
}

bool behavior_contained(const Corelation& x, const Corelation& y) {
  require_same_boundary(x, y);
  return solve_left(x.kernel_rep(), y.kernel_rep()).has_value();
}

PolyMatrix kernel_representation(const Corelation& x) { return x.kernel_rep(); }

Term poly_term(const LaurentPoly& p) {
  if (p.is_zero()) return Term::seq(Term::gen(Generator::discard), Term::gen(Generator::zero));
  std::vector<Term> branches;
  for (int e = p.low_exponent(); e <= p.high_exponent(); ++e) {
    Scalar c = p.coeff(e);
    if (c.is_zero()) continue;
    std::vector<Term> chain;
    if (!c.is_one()) chain.push_back(Term::scalar(c.to_rational()));
    const Generator shift = e > 0 ? Generator::delay : Generator::co_delay;
    for (int k = 0; k < std::abs(e); ++k) chain.push_back(Term::gen(shift));
    branches.push_back(chain.empty() ? Term::id(1) : seq_all(chain));
  }
  // fan-out 1 -> k by copies, gather k -> 1 by adders
  Term fan = Term::id(1);
  Term gather = Term::id(1);
  for (std::size_t k = 1; k < branches.size(); ++k) {
    fan = Term::seq(Term::gen(Generator::copy), Term::tensor(Term::id(1), fan));
    gather = Term::seq(Term::tensor(Term::id(1), gather), Term::gen(Generator::add));
  }
  if (branches.size() == 1) return branches.front();
  return seq_all({fan, tensor_all(branches), gather});
}

std::vector<AxiomCase> curated_axioms() {
  return {
      // commutative monoid (white) and its mirror
      {"add commutative", "tw ; add", "add"},
      {"add associative", "(add | id) ; add", "(id | add) ; add"},
      {"add unit", "(zero | id) ; add", "id@1"},
      {"co_add cocommutative", "co_add ; tw", "co_add"},
      {"co_add coassociative", "co_add ; (co_add | id)", "co_add ; (id | co_add)"},
      {"co_add counit", "co_add ; (co_zero | id)", "id@1"},
      // cocommutative comonoid (black) and its mirror
      {"copy cocommutative", "copy ; tw", "copy"},
      {"copy coassociative", "copy ; (copy | id)", "copy ; (id | copy)"},
      {"copy counit", "copy ; (discard | id)", "id@1"},
      {"co_copy commutative", "tw ; co_copy", "co_copy"},
      {"co_copy associative", "(co_copy | id) ; co_copy", "(id | co_copy) ; co_copy"},
      {"co_copy unit", "(co_discard | id) ; co_copy", "id@1"},
      // bimonoid
      {"bimonoid add/copy", "add ; copy", "(copy | copy) ; (id | tw | id) ; (add | add)"},
      {"bimonoid zero/copy", "zero ; copy", "zero | zero"},
      {"bimonoid add/discard", "add ; discard", "discard | discard"},
      {"bimonoid zero/discard", "zero ; discard", "id@0"},
      {"bimonoid mirrored", "co_copy ; co_add", "(co_add | co_add) ; (id | tw | id) ; (co_copy | co_copy)"},
      // Frobenius and special laws
      {"frobenius black", "(copy | id) ; (id | co_copy)", "co_copy ; copy"},
      {"frobenius white", "(co_add | id) ; (id | add)", "add ; co_add"},
      {"special black", "copy ; co_copy", "id@1"},
      {"special white", "co_add ; add", "id@1"},
      // delay and its formal inverse
      {"delay then co_delay", "delay ; co_delay", "id@1"},
      {"co_delay then delay", "co_delay ; delay", "id@1"},
      {"delay copy", "delay ; copy", "copy ; (delay | delay)"},
      {"delay add", "add ; delay", "(delay | delay) ; add"},
      {"delay zero", "zero ; delay", "zero"},
      {"delay discard", "delay ; discard", "discard"},
      // scalars
      {"scalar multiplicative", "scalar(2) ; scalar(3)", "scalar(6)"},
      {"scalar one", "scalar(1)", "id@1"},
      {"scalar zero", "scalar(0)", "discard ; zero"},
      {"scalar minus one squared", "scalar(-1) ; scalar(-1)", "id@1"},
      {"scalar copy", "scalar(5) ; copy", "copy ; (scalar(5) | scalar(5))"},
      {"scalar add", "(scalar(4) | scalar(4)) ; add", "add ; scalar(4)"},
      {"scalar delay", "scalar(3) ; delay", "delay ; scalar(3)"},
      {"scalar discard", "scalar(2) ; discard", "discard"},
      {"scalar zero input", "zero ; scalar(7)", "zero"},
      {"co_scalar inverse", "scalar(-1) ; co_scalar(-1)", "id@1"},
      {"antipode", "copy ; (scalar(-1) | id) ; add", "discard ; zero"},
      // structure
      {"twist involution", "tw ; tw", "id@2"},
      {"black bone", "co_discard ; discard", "id@0"},
      {"white bone", "zero ; co_zero", "id@0"},
  };
}

std::vector<AxiomResult> axiom_soundness_suite(Field field) {
  std::vector<AxiomResult> results;
  for (const AxiomCase& axiom : curated_axioms()) {
    AxiomResult r{axiom, false, {}};
    try {
      Corelation lhs = normalize(axiom.lhs, field);
      Corelation rhs = normalize(axiom.rhs, field);
      const bool by_form = behavior_equal(lhs, rhs);
      const bool by_solve = behavior_equal_by_solving(lhs, rhs);
      r.passed = by_form && by_solve;
      if (by_form != by_solve) {
        r.detail = "decision routes disagree";
      } else if (!r.passed) {
        r.detail = "kernel representations differ: " + lhs.kernel_rep().to_string() + " vs " +
                   rhs.kernel_rep().to_string();
      }
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace flowcat
