#include "flowcat/normal_forms.hpp"

#include <stdexcept>
#include <vector>

namespace flowcat {
namespace {

// A matrix A under reduction together with the accumulated left transform P
// (A = P * M * Q) and its inverse, so both stay certified without inversion.
struct LeftTracker {
  PolyMatrix P, P_inv;

  explicit LeftTracker(Field field, std::size_t n)
      : P(PolyMatrix::identity(field, n)), P_inv(PolyMatrix::identity(field, n)) {}

  void swap(std::size_t a, std::size_t b) {
    P.swap_rows(a, b);
    P_inv.swap_cols(a, b);
  }
  // row[target] += f * row[source]
  void add(std::size_t target, std::size_t source, const LaurentPoly& f) {
    P.add_row_multiple(target, source, f);
    P_inv.add_col_multiple(source, target, -f);
  }
  void scale_by_unit(std::size_t row, const LaurentPoly& unit) {
    P.scale_row(row, unit);
    P_inv.scale_col(row, unit.unit_inverse());
  }
};

struct RightTracker {
  PolyMatrix Q, Q_inv;

  explicit RightTracker(Field field, std::size_t n)
      : Q(PolyMatrix::identity(field, n)), Q_inv(PolyMatrix::identity(field, n)) {}

  void swap(std::size_t a, std::size_t b) {
    Q.swap_cols(a, b);
    Q_inv.swap_rows(a, b);
  }
  // col[target] += f * col[source]
  void add(std::size_t target, std::size_t source, const LaurentPoly& f) {
    Q.add_col_multiple(target, source, f);
    Q_inv.add_row_multiple(source, target, -f);
  }
};

struct Pivot {
  std::size_t row, col;
};

std::optional<Pivot> select_pivot(const PolyMatrix& a, std::size_t start) {
  std::optional<Pivot> best;
  std::size_t best_span = 0;
  for (std::size_t i = start; i < a.rows(); ++i) {
    for (std::size_t j = start; j < a.cols(); ++j) {
      const LaurentPoly& x = a(i, j);
      if (x.is_zero()) continue;
      if (!best || x.span() < best_span) {
        best = Pivot{i, j};
        best_span = x.span();
      }
    }
  }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& m) {
  const Field field = m.field();
  PolyMatrix a = m;
  LeftTracker left(field, m.rows());
  RightTracker right(field, m.cols());
  std::size_t rank = 0;

  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    bool found = false;
    while (true) {
      auto pivot = select_pivot(a, t);
      if (!pivot) break;
      found = true;
      a.swap_rows(t, pivot->row);
      left.swap(t, pivot->row);
      a.swap_cols(t, pivot->col);
      right.swap(t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        LaurentPoly q = -divrem(a(i, t), a(t, t)).quotient;
        a.add_row_multiple(i, t, q);
        left.add(i, t, q);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        LaurentPoly q = -divrem(a(t, j), a(t, t)).quotient;
        a.add_col_multiple(j, t, q);
        right.add(j, t, q);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;  // a smaller remainder became the next pivot candidate

      // Enforce the divisibility chain: fold in a row holding a non-multiple.
      bool divides_rest = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_rest; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!a(i, j).is_zero() && !divides(a(t, t), a(i, j))) {
            LaurentPoly one = LaurentPoly::one(field);
            a.add_row_multiple(t, i, one);
            left.add(t, i, one);
            divides_rest = false;
            break;
          }
        }
      }
      if (!divides_rest) continue;

      auto [unit, rep] = canonical_associate(a(t, t));
      LaurentPoly inv = unit.unit_inverse();
      a.scale_row(t, inv);
      left.scale_by_unit(t, inv);
      break;
    }
    if (!found) break;
    ++rank;
  }

  return SmithDecomposition{std::move(left.P_inv), std::move(a), std::move(right.Q_inv),
                            std::move(left.P), std::move(right.Q), rank};
}

HermiteForm hermite_normal_form(const PolyMatrix& m) {
  const Field field = m.field();
  PolyMatrix h = m;
  LeftTracker left(field, m.rows());
  std::size_t r = 0;

  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (!h(i, c).is_zero() && (!best || h(i, c).span() < h(*best, c).span())) best = i;
      }
      if (!best) break;
      have_pivot = true;
      h.swap_rows(r, *best);
      left.swap(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c).is_zero()) continue;
        LaurentPoly q = -divrem(h(i, c), h(r, c)).quotient;
        h.add_row_multiple(i, r, q);
        left.add(i, r, q);
        if (!h(i, c).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!have_pivot) continue;

    LaurentPoly inv = canonical_associate(h(r, c)).unit.unit_inverse();
    h.scale_row(r, inv);
    left.scale_by_unit(r, inv);
    for (std::size_t i = 0; i < r; ++i) {
      if (h(i, c).is_zero()) continue;
      LaurentPoly residue = reduce_mod(h(i, c), h(r, c));
      LaurentPoly q = -*exact_divide(h(i, c) - residue, h(r, c));
      h.add_row_multiple(i, r, q);
      left.add(i, r, q);
    }
    ++r;
  }

  return HermiteForm{h.row_range(0, r), std::move(left.P), std::move(left.P_inv), r};
}

std::size_t rank(const PolyMatrix& m) { return smith_normal_form(m).rank; }

EpiSplitMono epi_splitmono_factor(const PolyMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  const std::size_t r = snf.rank;
  PolyMatrix d_r = snf.D.block(0, 0, r, r);
  return {d_r * snf.U.row_range(0, r), snf.V.col_range(0, r)};
}

bool is_epi(const PolyMatrix& m) { return rank(m) == m.rows(); }

bool is_split_mono(const PolyMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank != m.cols()) return false;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (!snf.diagonal(i).is_unit()) return false;
  }
  return true;
}

bool is_invertible(const PolyMatrix& m) { return m.is_square() && is_split_mono(m); }

std::optional<PolyMatrix> left_inverse(const PolyMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  if (snf.rank != m.cols()) return std::nullopt;
  // m = V D U with D = [Dr; 0] and Dr diagonal of units: m^+ = U^-1 [Dr^-1 0] V^-1.
  PolyMatrix pseudo(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < snf.rank; ++i) {
    if (!snf.diagonal(i).is_unit()) return std::nullopt;
    pseudo(i, i) = snf.diagonal(i).unit_inverse();
  }
  return snf.U_inv * pseudo * snf.V_inv;
}

std::optional<PolyMatrix> inverse(const PolyMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  return left_inverse(m);
}

PolyMatrix kernel_basis(const PolyMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  PolyMatrix k = snf.U_inv.col_range(snf.rank, m.cols());
  return hermite_normal_form(k.transpose()).H.transpose();
}

PolyMatrix cokernel_free(const PolyMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  return hermite_normal_form(snf.V_inv.row_range(snf.rank, m.rows())).H;
}

std::optional<PolyMatrix> solve_left(const PolyMatrix& m, const PolyMatrix& n) {
  if (m.cols() != n.cols()) {
    throw std::invalid_argument("solve_left: column counts differ (" + std::to_string(m.cols()) +
                                " vs " + std::to_string(n.cols()) + ")");
  }
  // X V D U = N  <=>  Y D = N U^-1 with Y = X V.
  SmithDecomposition snf = smith_normal_form(m);
  PolyMatrix target = n * snf.U_inv;
  PolyMatrix y(m.field(), n.rows(), m.rows());
  for (std::size_t i = 0; i < target.rows(); ++i) {
    for (std::size_t j = 0; j < target.cols(); ++j) {
      if (j >= snf.rank) {
        if (!target(i, j).is_zero()) return std::nullopt;
        continue;
      }
      auto q = exact_divide(target(i, j), snf.diagonal(j));
      if (!q) return std::nullopt;
      y(i, j) = std::move(*q);
    }
  }
  return y * snf.V_inv;
}

std::optional<PolyMatrix> solve_right(const PolyMatrix& m, const PolyMatrix& n) {
  if (m.rows() != n.rows()) {
    throw std::invalid_argument("solve_right: row counts differ (" + std::to_string(m.rows()) +
                                " vs " + std::to_string(n.rows()) + ")");
  }
  // V D U X = N  <=>  D Y = V^-1 N with Y = U X.
  SmithDecomposition snf = smith_normal_form(m);
  PolyMatrix target = snf.V_inv * n;
  PolyMatrix y(m.field(), m.cols(), n.cols());
  for (std::size_t i = 0; i < target.rows(); ++i) {
    for (std::size_t j = 0; j < target.cols(); ++j) {
      if (i >= snf.rank) {
        if (!target(i, j).is_zero()) return std::nullopt;
        continue;
      }
      auto q = exact_divide(target(i, j), snf.diagonal(i));
      if (!q) return std::nullopt;
      y(i, j) = std::move(*q);
    }
  }
  return snf.U_inv * y;
}

bool same_row_module(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hermite_normal_form(a).H == hermite_normal_form(b).H;
}

}  // namespace flowcat
