#include "flowcat/opsem.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace flowcat {
namespace {

using ColumnMap = std::function<std::size_t(std::size_t)>;

// Copies every constraint row of `src` into `dst`, sending column c to map(c).
void embed(FieldMatrix& dst, const FieldMatrix& src, const ColumnMap& map) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    FieldVector& row = dst.add_zero_row();
    for (std::size_t c = 0; c < src.cols(); ++c) {
      if (!src(i, c).is_zero()) row[map(c)] = row[map(c)] + src(i, c);
    }
  }
}

// Builds a relation from rows given as (column, coefficient) pairs.
StepRelation relation(Field field, std::size_t m, std::size_t n, std::size_t d,
                      const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& rows) {
  StepRelation s{m, n, d, FieldMatrix(field, 0, m + n + 2 * d)};
  for (const auto& r : rows) {
    FieldVector& row = s.constraint.add_zero_row();
    for (const auto& [col, c] : r) row[col] = c;
  }
  return s;
}

StepRelation generator_relation(Generator g, const mpq_class& param, Field field) {
  if (is_mirrored(g)) {
    // Mirroring exchanges the roles of the two boundaries.
    StepRelation base = generator_relation(mirror_generator(g), param, field);
    StepRelation s{base.n, base.m, base.d, FieldMatrix(field, 0, base.constraint.cols())};
    embed(s.constraint, base.constraint, [&](std::size_t c) {
      if (c < base.m) return base.n + c;
      if (c < base.m + base.n) return c - base.m;
      return c;
    });
    return s;
  }
  const Scalar one = field.one();
  const Scalar minus = -one;
  switch (g) {
    case Generator::add:  // columns u1 u2 v
      return relation(field, 2, 1, 0, {{{2, one}, {0, minus}, {1, minus}}});
    case Generator::zero:  // v
      return relation(field, 0, 1, 0, {{{0, one}}});
    case Generator::copy:  // u v1 v2
      return relation(field, 1, 2, 0, {{{1, one}, {0, minus}}, {{2, one}, {0, minus}}});
    case Generator::discard:
      return relation(field, 1, 0, 0, {});
    case Generator::delay:  // u v r r'
      return relation(field, 1, 1, 1, {{{1, one}, {2, minus}}, {{3, one}, {0, minus}}});
    case Generator::scalar:
      return relation(field, 1, 1, 0, {{{1, one}, {0, -field.from_rational(param)}}});
    default:
      break;
  }
  throw std::invalid_argument("unknown generator");
}

StepRelation identity_relation(Field field, std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back({{n + i, field.one()}, {i, -field.one()}});
  return relation(field, n, n, 0, rows);
}

StepRelation twist_relation(Field field) {
  const Scalar one = field.one();
  return relation(field, 2, 2, 0, {{{2, one}, {1, -one}}, {{3, one}, {0, -one}}});
}

StepRelation seq_relation(const StepRelation& a, const StepRelation& b) {
  if (a.n != b.m) throw std::invalid_argument("step relation: boundary mismatch");
  const std::size_t k = a.n, m = a.m, n = b.n, d = a.d + b.d;
  // Layout: w (shared wires, eliminated) | u | v | r_a r_b | r_a' r_b'.
  FieldMatrix joint(a.constraint.field(), 0, k + m + n + 2 * d);
  const std::size_t regs = k + m + n;
  embed(joint, a.constraint, [&](std::size_t c) {
    if (c < m) return k + c;
    if (c < m + k) return c - m;
    if (c < m + k + a.d) return regs + (c - m - k);
    return regs + d + (c - m - k - a.d);
  });
  embed(joint, b.constraint, [&](std::size_t c) {
    if (c < k) return c;
    if (c < k + n) return k + m + (c - k);
    if (c < k + n + b.d) return regs + a.d + (c - k - n);
    return regs + d + a.d + (c - k - n - b.d);
  });
  return StepRelation{m, n, d, eliminate_leading(joint, k)};
}

StepRelation tensor_relation(const StepRelation& a, const StepRelation& b) {
  const std::size_t m = a.m + b.m, n = a.n + b.n, d = a.d + b.d;
  StepRelation s{m, n, d, FieldMatrix(a.constraint.field(), 0, m + n + 2 * d)};
  embed(s.constraint, a.constraint, [&](std::size_t c) {
    if (c < a.m) return c;
    if (c < a.m + a.n) return m + (c - a.m);
    if (c < a.m + a.n + a.d) return m + n + (c - a.m - a.n);
    return m + n + d + (c - a.m - a.n - a.d);
  });
  embed(s.constraint, b.constraint, [&](std::size_t c) {
    if (c < b.m) return a.m + c;
    if (c < b.m + b.n) return m + a.n + (c - b.m);
    if (c < b.m + b.n + b.d) return m + n + a.d + (c - b.m - b.n);
    return m + n + d + a.d + (c - b.m - b.n - b.d);
  });
  return s;
}

StepRelation compile(const Term& t, Field field) {
  switch (t.kind()) {
    case Term::Kind::generator:
      return generator_relation(t.generator(), t.param(), field);
    case Term::Kind::identity:
      return identity_relation(field, t.width());
    case Term::Kind::twist:
      return twist_relation(field);
    case Term::Kind::seq:
      return seq_relation(compile(t.lhs(), field), compile(t.rhs(), field));
    case Term::Kind::tensor:
      return tensor_relation(compile(t.lhs(), field), compile(t.rhs(), field));
  }
  throw std::logic_error("unreachable term kind");
}

// Stacks `ticks` copies of the step relation. reg(tau, i) is the column of
// register i at time tau (0..ticks), wire(tau, j) that of boundary wire j
// (u then v) on tick tau.
FieldMatrix unroll(const StepRelation& s, std::size_t ticks, std::size_t total_cols,
                   const std::function<std::size_t(std::size_t, std::size_t)>& reg,
                   const std::function<std::size_t(std::size_t, std::size_t)>& wire) {
  FieldMatrix out(s.constraint.field(), 0, total_cols);
  const std::size_t q = s.m + s.n;
  for (std::size_t tau = 0; tau < ticks; ++tau) {
    embed(out, s.constraint, [&](std::size_t c) {
      if (c < q) return wire(tau, c);
      if (c < q + s.d) return reg(tau, c - q);
      return reg(tau + 1, c - q - s.d);
    });
  }
  return out;
}

void check_width(const std::vector<std::optional<Scalar>>& side, std::size_t expected, const char* what) {
  if (!side.empty() && side.size() != expected) {
    throw std::invalid_argument(std::string("simulate: ") + what + " valuation has " +
                                std::to_string(side.size()) + " entries, expected " +
                                std::to_string(expected));
  }
}

}  // namespace

StepRelation step_relation(const TypedTerm& t, Field field) {
  StepRelation s = compile(t.term, field);
  if (s.m != t.arity || s.n != t.coarity || s.d != t.registers.size()) {
    throw std::logic_error("step relation disagrees with the term's type");
  }
  return s;
}

std::optional<TraceWindow> simulate(const TypedTerm& t, Field field, const FieldVector& init,
                                    const std::vector<TickInput>& inputs, std::size_t steps,
                                    Direction direction) {
  const StepRelation s = step_relation(t, field);
  if (init.size() != s.d) {
    throw std::invalid_argument("simulate: term has " + std::to_string(s.d) + " registers, got " +
                                std::to_string(init.size()) + " initial values");
  }
  if (inputs.size() > steps) throw std::invalid_argument("simulate: more tick inputs than steps");
  for (const TickInput& in : inputs) {
    check_width(in.u, s.m, "left");
    check_width(in.v, s.n, "right");
  }

  const bool forward = direction == Direction::forward;
  const std::size_t q = s.m + s.n;
  const std::size_t width = q + 2 * s.d;
  // The register block held fixed on each tick: r going forward, r' backward.
  const std::size_t known_reg = forward ? q : q + s.d;

  TraceWindow w;
  w.registers.push_back(init);
  FieldVector state = init;
  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<std::optional<Scalar>> known(width);
    if (k < inputs.size()) {
      for (std::size_t j = 0; j < inputs[k].u.size(); ++j) known[j] = inputs[k].u[j];
      for (std::size_t j = 0; j < inputs[k].v.size(); ++j) known[s.m + j] = inputs[k].v[j];
    }
    for (std::size_t i = 0; i < s.d; ++i) known[known_reg + i] = state[i];

    std::vector<std::size_t> unknown;
    for (std::size_t c = 0; c < width; ++c) {
      if (!known[c]) unknown.push_back(c);
    }
    FieldMatrix system = s.constraint.select_cols(unknown);
    FieldVector rhs(s.constraint.rows(), field.zero());
    for (std::size_t i = 0; i < s.constraint.rows(); ++i) {
      for (std::size_t c = 0; c < width; ++c) {
        if (known[c]) rhs[i] = rhs[i] - s.constraint(i, c) * *known[c];
      }
    }
    std::optional<FieldVector> sol = solve_zero_free(system, rhs);
    if (!sol) return std::nullopt;
    FieldVector full(width, field.zero());
    for (std::size_t c = 0; c < width; ++c) {
      if (known[c]) full[c] = *known[c];
    }
    for (std::size_t idx = 0; idx < unknown.size(); ++idx) full[unknown[idx]] = (*sol)[idx];

    w.u.emplace_back(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(s.m));
    w.v.emplace_back(full.begin() + static_cast<std::ptrdiff_t>(s.m), full.begin() + static_cast<std::ptrdiff_t>(q));
    const std::size_t next_reg = forward ? q + s.d : q;
    state.assign(full.begin() + static_cast<std::ptrdiff_t>(next_reg),
                 full.begin() + static_cast<std::ptrdiff_t>(next_reg + s.d));
    w.registers.push_back(state);
  }

  const long L = static_cast<long>(steps);
  if (forward) {
    w.t0 = 0;
    w.t1 = L - 1;
  } else {
    std::reverse(w.u.begin(), w.u.end());
    std::reverse(w.v.begin(), w.v.end());
    std::reverse(w.registers.begin(), w.registers.end());
    w.t0 = -L;
    w.t1 = -1;
  }
  return w;
}

bool check_window_trace(const TypedTerm& t, Field field, const TraceWindow& w) {
  const StepRelation s = step_relation(t, field);
  const std::size_t L = w.u.size();
  if (w.v.size() != L) throw std::invalid_argument("trace: u and v cover different numbers of ticks");
  for (std::size_t k = 0; k < L; ++k) {
    if (w.u[k].size() != s.m || w.v[k].size() != s.n) {
      throw std::invalid_argument("trace: tick " + std::to_string(k) + " has the wrong boundary width");
    }
  }

  if (!w.registers.empty()) {
    if (w.registers.size() != L + 1) throw std::invalid_argument("trace: expected one register valuation per tick plus one");
    for (const FieldVector& r : w.registers) {
      if (r.size() != s.d) throw std::invalid_argument("trace: register valuation has the wrong width");
    }
    for (std::size_t k = 0; k < L; ++k) {
      FieldVector x;
      x.insert(x.end(), w.u[k].begin(), w.u[k].end());
      x.insert(x.end(), w.v[k].begin(), w.v[k].end());
      x.insert(x.end(), w.registers[k].begin(), w.registers[k].end());
      x.insert(x.end(), w.registers[k + 1].begin(), w.registers[k + 1].end());
      for (const Scalar& c : s.constraint.apply(x)) {
        if (!c.is_zero()) return false;
      }
    }
    return true;
  }

  // Registers unknown: solve the unrolled system for them.
  const std::size_t q = s.m + s.n;
  const std::size_t reg_cols = (L + 1) * s.d;
  FieldMatrix system = unroll(
      s, L, reg_cols + L * q, [&](std::size_t tau, std::size_t i) { return tau * s.d + i; },
      [&](std::size_t tau, std::size_t j) { return reg_cols + tau * q + j; });
  std::vector<std::size_t> regs(reg_cols);
  for (std::size_t i = 0; i < reg_cols; ++i) regs[i] = i;
  FieldVector rhs(system.rows(), field.zero());
  for (std::size_t i = 0; i < system.rows(); ++i) {
    for (std::size_t k = 0; k < L; ++k) {
      for (std::size_t j = 0; j < q; ++j) {
        const Scalar& value = j < s.m ? w.u[k][j] : w.v[k][j - s.m];
        rhs[i] = rhs[i] - system(i, reg_cols + k * q + j) * value;
      }
    }
  }
  return solve_zero_free(system.select_cols(regs), rhs).has_value();
}

Subspace opsem_window_set(const TypedTerm& t, Field field, std::size_t L) {
  const StepRelation s = step_relation(t, field);
  const std::size_t margin = s.d;
  const std::size_t ticks = L + 2 * margin;
  const std::size_t q = s.m + s.n;
  const std::size_t reg_cols = (ticks + 1) * s.d;
  const std::size_t margin_cols = 2 * margin * q;
  // Columns: registers | margin wires | window wires, so the window comes last.
  FieldMatrix system = unroll(
      s, ticks, reg_cols + margin_cols + L * q, [&](std::size_t tau, std::size_t i) { return tau * s.d + i; },
      [&](std::size_t tau, std::size_t j) {
        if (tau < margin) return reg_cols + tau * q + j;
        if (tau >= margin + L) return reg_cols + (tau - L) * q + j;
        return reg_cols + margin_cols + (tau - margin) * q + j;
      });
  return Subspace::from_constraints(eliminate_leading(system, reg_cols + margin_cols));
}

Subspace window_behavior(const PolyMatrix& kernel_rep, std::size_t L) {
  const Field field = kernel_rep.field();
  const std::size_t q = kernel_rep.cols();

  struct RowSupport {
    std::size_t row;
    int lo, hi;
  };
  std::vector<RowSupport> support;
  std::size_t bound = 0, widest = 0;
  for (std::size_t i = 0; i < kernel_rep.rows(); ++i) {
    bool any = false;
    int lo = 0, hi = 0;
    for (std::size_t j = 0; j < q; ++j) {
      const LaurentPoly& p = kernel_rep(i, j);
      if (p.is_zero()) continue;
      lo = any ? std::min(lo, p.low_exponent()) : p.low_exponent();
      hi = any ? std::max(hi, p.high_exponent()) : p.high_exponent();
      any = true;
    }
    if (!any) continue;
    support.push_back({i, lo, hi});
    const auto span = static_cast<std::size_t>(hi - lo);
    bound += span;
    widest = std::max(widest, span);
  }
  bound += widest;

  auto project = [&](std::size_t margin) {
    const long M = static_cast<long>(margin);
    const long window = static_cast<long>(L);
    const std::size_t margin_cols = 2 * margin * q;
    auto column = [&](long t, std::size_t j) -> std::size_t {
      if (t < 0) return static_cast<std::size_t>(t + M) * q + j;
      if (t >= window) return static_cast<std::size_t>(M + t - window) * q + j;
      return margin_cols + static_cast<std::size_t>(t) * q + j;
    };
    FieldMatrix system(field, 0, margin_cols + L * q);
    // Row i of the kernel representation at time t: sum_j sum_e c_e w_j(t - e) = 0,
    // kept only when every referenced time lies in [-M, L - 1 + M].
    for (const RowSupport& r : support) {
      for (long t = -M + r.hi; t <= window - 1 + M + r.lo; ++t) {
        FieldVector& row = system.add_zero_row();
        for (std::size_t j = 0; j < q; ++j) {
          const LaurentPoly& p = kernel_rep(r.row, j);
          if (p.is_zero()) continue;
          for (int e = p.low_exponent(); e <= p.high_exponent(); ++e) {
            const Scalar c = p.coeff(e);
            if (!c.is_zero()) row[column(t - e, j)] = c;
          }
        }
      }
    }
    return Subspace::from_constraints(eliminate_leading(system, margin_cols));
  };

  Subspace current = project(0);
  for (std::size_t margin = 1;; ++margin) {
    Subspace next = project(margin);
    const bool stable = next.dim() == current.dim();
    current = std::move(next);
    if (stable && margin >= bound) return current;
  }
}

}  // namespace flowcat
