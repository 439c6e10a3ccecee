// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails or runs over its time budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "flowcat/cli.hpp"
#include "flowcat/control.hpp"
#include "flowcat/json_io.hpp"
#include "flowcat/normal_forms.hpp"
#include "flowcat/opsem.hpp"
#include "flowcat/semantics.hpp"
#include "support/random_terms.hpp"
#include "support/z2_oracle.hpp"

namespace flowcat {
namespace {

using testing::Rng;

const Field Q = Field::rationals();
const Field Z2 = Field::prime(2);
const char* kTEx = "copy ; (delay|id) ; add ; co_add ; (co_delay|id) ; co_copy";

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "flowcat");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

int failures = 0;

void criterion(const std::string& name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && elapsed > budget_seconds) o.fail("over time budget");
  std::ostringstream line;
  line << (o.ok ? "PASS " : "FAIL ") << name << " (" << elapsed << " s, budget " << budget_seconds << " s)";
  if (!o.detail.empty()) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.ok) ++failures;
}

bool is_diagonal(const PolyMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !d(i, j).is_zero()) return false;
  return true;
}

Corelation from_kernel(const PolyMatrix& k, std::size_t m) {
  return corelation_of(Cospan(k.col_range(0, m), -k.col_range(m, k.cols())));
}

Outcome controllability_of_running_example() {
  Outcome o;
  CliResult c = cli({"controllable", kTEx});
  if (c.code != kExitNo) o.fail("controllable exited " + std::to_string(c.code));
  CliResult part = cli({"controllable-part", kTEx});
  CliResult id = cli({"normalize", "id@1"});
  if (part.code != kExitYes || json::parse(part.out) != json::parse(id.out)) o.fail("controllable part is not the identity");
  return o;
}

Outcome simulation_of_running_example() {
  Outcome o;
  const std::string input = "--input=-1,1,-1,1,-1,1,-1,1";
  CliResult r = cli({"simulate", kTEx, "--init", "1,2", input, "--steps", "8"});
  if (r.code != kExitYes) {
    o.fail("simulate exited " + std::to_string(r.code) + ": " + r.out);
    return o;
  }
  TraceWindow w = trace_from_json(json::parse(r.out), Q);
  if (w.length() != 8) o.fail("expected 8 ticks");
  for (std::size_t t = 0; t < w.length(); ++t) {
    if (w.v[t][0] != Q.from_int(t % 2 ? 2 : -2)) o.fail("output differs from -2,2,... at tick " + std::to_string(t));
  }
  CliResult quiet = cli({"simulate", kTEx, "--init", "0,0", input, "--steps", "8"});
  TraceWindow z = trace_from_json(json::parse(quiet.out), Q);
  for (std::size_t t = 0; t < z.length(); ++t) {
    if (z.v[t] != z.u[t]) o.fail("zero initialisation does not copy the input at tick " + std::to_string(t));
  }
  return o;
}

Outcome white_bone() {
  Outcome o;
  CliResult r = cli({"equiv", "zero ; co_zero", "id@0"});
  if (r.code != kExitYes) o.fail("equiv exited " + std::to_string(r.code));
  return o;
}

Outcome axiom_suite() {
  Outcome o;
  for (Field f : {Q, Z2, Field::prime(7)}) {
    for (const AxiomResult& a : axiom_soundness_suite(f)) {
      if (!a.passed) o.fail(a.axiom.name + " over " + f.to_string());
    }
  }
  CliResult r = cli({"axioms"});
  if (r.code != kExitYes) o.fail("axioms command exited " + std::to_string(r.code));
  return o;
}

Outcome separating_trajectories() {
  // (s + 1)(u - v) = 0 on both ((-1)^t, 0) and (2 (-1)^t, 0), though neither is
  // a trajectory of the identity.
  Outcome o;
  TypedTerm ex = typecheck(parse_term(kTEx));
  const Subspace window = window_behavior(normalize(kTEx, Q).kernel_rep(), 8);
  for (long c : {1L, 2L}) {
    TraceWindow w;
    w.t0 = 0;
    w.t1 = 7;
    FieldVector flat;
    for (long t = 0; t < 8; ++t) {
      const Scalar u = Q.from_int(t % 2 ? -c : c);
      w.u.push_back({u});
      w.v.push_back({Q.zero()});
      flat.push_back(u);
      flat.push_back(Q.zero());
      if (t > 0 && flat[2 * t] + flat[2 * (t - 1)] - (flat[2 * t + 1] + flat[2 * (t - 1) + 1]) != Q.zero()) {
        o.fail("difference equation fails at t=" + std::to_string(t));
      }
    }
    if (!check_window_trace(ex, Q, w)) o.fail("operational check rejects c=" + std::to_string(c));
    if (!window.contains(flat)) o.fail("denotational window rejects c=" + std::to_string(c));
  }
  return o;
}

Outcome windows_agree() {
  Outcome o;
  Rng rng(2024);
  testing::TermShape shape;
  int oracle_checks = 0;
  for (int i = 0; i < 200; ++i) {
    Term term = testing::random_term(rng, shape);
    TypedTerm t = typecheck(term);
    const PolyMatrix k = normalize(term, Z2).kernel_rep();
    for (std::size_t L : {4u, 8u}) {
      Subspace operational = opsem_window_set(t, Z2, L);
      if (operational != window_behavior(k, L)) o.fail("L=" + std::to_string(L) + ": " + pretty(term));
      // The oracle enumerates whole window sets, so keep them to 2^16 elements.
      if (L == 4 && oracle_checks < 20 && operational.dim() <= 16) {
        ++oracle_checks;
        std::set<std::uint64_t> brute = testing::z2_window_set(term, L);
        bool agree = brute.size() == (std::size_t{1} << operational.dim());
        for (std::uint64_t mask : brute) agree = agree && operational.contains(testing::z2_vector(mask, operational.ambient()));
        if (!agree) o.fail("exhaustive oracle disagrees: " + pretty(term));
      }
    }
  }
  if (oracle_checks < 20) o.fail("only " + std::to_string(oracle_checks) + " oracle comparisons");
  if (o.ok) o.detail = "400 window comparisons, " + std::to_string(oracle_checks) + " exhaustive";
  return o;
}

Outcome normal_form_certificates() {
  Outcome o;
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    PolyMatrix m = testing::random_matrix(rng, Q, r, c, 3);
    SmithDecomposition sd = smith_normal_form(m);
    const std::string where = " for " + m.to_string();
    if (sd.V * sd.D * sd.U != m) o.fail("V D U != M" + where);
    if (sd.V * sd.V_inv != PolyMatrix::identity(Q, r) || sd.V_inv * sd.V != PolyMatrix::identity(Q, r)) o.fail("V not unimodular" + where);
    if (sd.U * sd.U_inv != PolyMatrix::identity(Q, c) || sd.U_inv * sd.U != PolyMatrix::identity(Q, c)) o.fail("U not unimodular" + where);
    if (!is_diagonal(sd.D)) o.fail("D not diagonal" + where);
    for (std::size_t k = 0; k + 1 < sd.rank; ++k) {
      if (!divides(sd.diagonal(k), sd.diagonal(k + 1))) o.fail("divisibility chain broken" + where);
    }
    for (std::size_t k = 0; k < sd.rank; ++k) {
      if (sd.diagonal(k).is_zero() || normalize_associate(sd.diagonal(k)) != sd.diagonal(k)) o.fail("bad invariant factor" + where);
    }

    HermiteForm h = hermite_normal_form(m);
    if (h.T * m != vstack(h.H, PolyMatrix(Q, r - h.rank, c))) o.fail("T M != [H; 0]" + where);
    if (h.T * h.T_inv != PolyMatrix::identity(Q, r)) o.fail("T not unimodular" + where);
    if (h.rank != sd.rank) o.fail("ranks differ" + where);
    PolyMatrix w = testing::random_unimodular(rng, Q, r);
    if (hermite_normal_form(w * m).H != h.H) o.fail("HNF not invariant under left multiplication" + where);
  }
  return o;
}

// Every window of ker m, enumerated element by element, satisfies the
// difference equations of n wherever they fit inside the window.
bool windows_satisfy(const PolyMatrix& m, const PolyMatrix& n, std::size_t L) {
  const std::size_t q = m.cols();
  const FieldMatrix basis = window_behavior(m, L).basis();
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < basis.rows(); ++i) masks.push_back(testing::z2_mask(basis.row(i)));
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks.size()); ++pick) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (pick >> i & 1) w ^= masks[i];
    }
    auto at = [&](long t, std::size_t j) { return (w >> (static_cast<std::size_t>(t) * q + j)) & 1; };
    for (std::size_t i = 0; i < n.rows(); ++i) {
      int lo = 0, hi = 0;
      bool any = false;
      for (std::size_t j = 0; j < q; ++j) {
        if (n(i, j).is_zero()) continue;
        lo = any ? std::min(lo, n(i, j).low_exponent()) : n(i, j).low_exponent();
        hi = any ? std::max(hi, n(i, j).high_exponent()) : n(i, j).high_exponent();
        any = true;
      }
      if (!any) continue;
      // (s^e w)(t) = w(t - e): the equation at t reads w on [t - hi, t - lo].
      for (long t = hi; t - lo < static_cast<long>(L); ++t) {
        std::uint64_t sum = 0;
        for (std::size_t j = 0; j < q; ++j) {
          for (int e = lo; e <= hi; ++e) {
            if (!n(i, j).coeff(e).is_zero()) sum ^= at(t - e, j);
          }
        }
        if (sum) return false;
      }
    }
  }
  return true;
}

Outcome solve_left_matches_windows() {
  Outcome o;
  Rng rng(7);
  int solvable = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t q = 1 + rng() % 2;
    PolyMatrix m = testing::random_matrix(rng, Z2, 1 + rng() % 2, q, 2, 0.3);
    PolyMatrix n = i % 2 ? testing::random_matrix(rng, Z2, 1, m.rows(), 1, 0.3) * m
                         : testing::random_matrix(rng, Z2, 1, q, 2, 0.3);
    // One tick more than the row's exponent range puts any violation inside the window.
    int lo = 0, hi = 0;
    bool any = false;
    for (std::size_t j = 0; j < q; ++j) {
      if (n(0, j).is_zero()) continue;
      lo = any ? std::min(lo, n(0, j).low_exponent()) : n(0, j).low_exponent();
      hi = any ? std::max(hi, n(0, j).high_exponent()) : n(0, j).high_exponent();
      any = true;
    }
    const std::size_t L = static_cast<std::size_t>(hi - lo) + 2;
    std::optional<PolyMatrix> x = solve_left(m, n);
    if (x && *x * m != n) o.fail("solve_left returned a wrong solution");
    if (x.has_value() != windows_satisfy(m, n, L)) o.fail("disagreement for M=" + m.to_string() + " N=" + n.to_string());
    solvable += x.has_value();
  }
  if (solvable == 0 || solvable == 100) o.fail("degenerate sample");
  if (o.ok) o.detail = std::to_string(solvable) + " of 100 solvable";
  return o;
}

Outcome siso_interconnection() {
  Outcome o;
  Rng rng(8);
  auto coprime_pair = [&](bool allow_zero) {
    for (;;) {
      LaurentPoly a = testing::random_poly(rng, Q, 3, allow_zero ? 0.15 : 0.0);
      LaurentPoly b = testing::random_poly(rng, Q, 3, 0.15);
      if (a.is_zero() && b.is_zero()) continue;
      if (gcd_ext(a, b).gcd.is_unit()) return std::pair{a, b};
    }
  };
  int uncontrollable = 0;
  for (int i = 0; i < 100;) {
    auto [b1, b2] = coprime_pair(true);
    auto [c1, c2] = coprime_pair(true);
    if (b1.is_zero() && c2.is_zero()) continue;
    ++i;
    // Force a common factor into B1 and C2 now and then.
    if (i % 4 == 0) {
      LaurentPoly g = testing::random_poly(rng, Q, 1);
      if (gcd_ext(g * b1, b2).gcd.is_unit() && gcd_ext(c1, g * c2).gcd.is_unit()) {
        b1 = g * b1;
        c2 = g * c2;
      }
    }
    auto one_by_one = [](const LaurentPoly& p) { return PolyMatrix::from_rows(p.field(), 1, {{p}}); };
    const Span b(one_by_one(b1), one_by_one(b2)), c(one_by_one(c1), one_by_one(c2));
    const PolyMatrix eliminated = siso_interconnection_kernel(b1, b2, c1, c2);
    const Corelation composite = corelation_of(cospan_compose(span_pushout(b), span_pushout(c)));
    if (!behavior_equal(from_kernel(eliminated, 1), composite)) o.fail("eliminated kernel differs from the composite");
    const bool controllable = is_controllable(composite).controllable;
    if (siso_gcd_check(eliminated) != controllable) o.fail("gcd check disagrees with pullback/pushout");
    uncontrollable += !controllable;
  }
  if (uncontrollable == 0) o.fail("no uncontrollable composite sampled");
  if (o.ok) o.detail = std::to_string(uncontrollable) + " of 100 uncontrollable";
  return o;
}

}  // namespace
}  // namespace flowcat

int main() {
  using namespace flowcat;
  criterion("C1 running example is not controllable, controllable part is the identity", 1, controllability_of_running_example);
  criterion("C2 simulation of the running example", 1, simulation_of_running_example);
  criterion("C3 white bone zero ; co_zero equals id@0", 1, white_bone);
  criterion("C4 axiom soundness suite", 5, axiom_suite);
  criterion("C5 operational and denotational windows agree over Z2, exhaustive oracle", 60, windows_agree);
  criterion("C6 Smith and Hermite certificates on 500 matrices", 60, normal_form_certificates);
  criterion("C7 solve_left agrees with windowed kernel containment", 60, solve_left_matches_windows);
  criterion("C8 SISO interconnection gcd check and elimination", 30, siso_interconnection);
  criterion("C9 separating trajectories satisfy the kernel equation", 1, separating_trajectories);
  std::cout << failures << " failures" << std::endl;
  return failures == 0 ? 0 : 1;
}
