#include "flowcat/field_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace flowcat {

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), data_(rows, FieldVector(cols, field.zero())) {}

void FieldMatrix::append_row(FieldVector row) {
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.push_back(std::move(row));
}

FieldVector& FieldMatrix::add_zero_row() {
  data_.emplace_back(cols_, field_.zero());
  return data_.back();
}

FieldMatrix FieldMatrix::select_cols(std::span<const std::size_t> indices) const {
  FieldMatrix out(field_, rows(), indices.size());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = data_[i][indices[j]];
  }
  return out;
}

FieldVector FieldMatrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: width mismatch");
  FieldVector out(rows(), field_.zero());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!data_[i][j].is_zero() && !x[j].is_zero()) out[i] += data_[i][j] * x[j];
    }
  }
  return out;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i > 0) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j > 0 ? " " : "") << data_[i][j];
  }
  os << ']';
  return os.str();
}

Rref rref(const FieldMatrix& m) {
  FieldMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    std::swap(a.row(p), a.row(r));
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  while (a.rows() > r) a.remove_row(a.rows() - 1);
  return {std::move(a), std::move(pivots)};
}

FieldMatrix nullspace(const FieldMatrix& m) {
  auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  FieldMatrix basis(m.field(), 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FieldVector& v = basis.add_zero_row();
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
  }
  return basis;
}

FieldMatrix eliminate_leading(const FieldMatrix& m, std::size_t eliminated) {
  auto [reduced, pivots] = rref(m);
  const std::size_t kept = m.cols() - eliminated;
  FieldMatrix out(m.field(), 0, kept);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < eliminated) continue;
    FieldVector& row = out.add_zero_row();
    for (std::size_t j = 0; j < kept; ++j) row[j] = reduced(i, eliminated + j);
  }
  return out;
}

std::optional<FieldVector> solve_zero_free(const FieldMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  FieldMatrix augmented(m.field(), 0, m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    FieldVector row = m.row(i);
    row.push_back(rhs[i]);
    augmented.append_row(std::move(row));
  }
  auto [reduced, pivots] = rref(augmented);
  FieldVector x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = reduced(i, m.cols());
  }
  return x;
}

Subspace Subspace::from_constraints(const FieldMatrix& constraints) {
  Subspace s;
  s.constraints_ = rref(constraints).reduced;
  return s;
}

Subspace Subspace::span_of(const FieldMatrix& basis) {
  return from_constraints(nullspace(basis));
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  return from_constraints(FieldMatrix(field, 0, ambient));
}

bool Subspace::contains(std::span<const Scalar> v) const {
  for (const Scalar& x : constraints_.apply(v)) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Subspace::is_subset_of(const Subspace& other) const {
  if (ambient() != other.ambient()) return false;
  FieldMatrix b = basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (!other.contains(b.row(i))) return false;
  }
  return true;
}

}  // namespace flowcat
