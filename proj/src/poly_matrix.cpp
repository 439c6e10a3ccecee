#include "flowcat/poly_matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flowcat {
namespace {

[[noreturn]] void shape_error(const std::string& op, const PolyMatrix& a, const PolyMatrix& b) {
  throw std::invalid_argument(op + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
}

}  // namespace

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPoly(field)) {}

PolyMatrix PolyMatrix::identity(Field field, std::size_t n) {
  PolyMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(field);
  return m;
}

PolyMatrix PolyMatrix::permutation(Field field, std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  PolyMatrix m(field, n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw std::invalid_argument("not a permutation");
    seen[perm[j]] = true;
    m(perm[j], j) = LaurentPoly::one(field);
  }
  return m;
}

PolyMatrix PolyMatrix::from_strings(Field field,
                                    std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<LaurentPoly>> parsed;
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    auto& out = parsed.emplace_back();
    for (const char* text : row) out.push_back(LaurentPoly::parse(text, field));
  }
  return from_rows(field, cols, parsed);
}

PolyMatrix PolyMatrix::from_rows(Field field, std::size_t cols,
                                 const std::vector<std::vector<LaurentPoly>>& rows) {
  PolyMatrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field) throw std::invalid_argument("matrix entry field mismatch");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

void PolyMatrix::require_same_field(const PolyMatrix& other) const {
  if (field_ != other.field_) throw std::invalid_argument("matrix field mismatch");
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
  require_same_field(other);
  if (cols_ != other.rows_) shape_error("multiply", *this, other);
  PolyMatrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const LaurentPoly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const LaurentPoly& b = other(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
  require_same_field(other);
  if (rows_ != other.rows_ || cols_ != other.cols_) shape_error("add", *this, other);
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const { return *this + (-other); }

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                             std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw std::out_of_range("matrix block out of range");
  PolyMatrix out(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  }
  return out;
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> indices) const {
  PolyMatrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(indices[i], j);
  }
  return out;
}

PolyMatrix PolyMatrix::select_cols(std::span<const std::size_t> indices) const {
  PolyMatrix out(field_, rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(i, indices[j]);
  }
  return out;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void PolyMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void PolyMatrix::add_row_multiple(std::size_t target, std::size_t source, const LaurentPoly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const LaurentPoly& x = (*this)(source, j);
    if (!x.is_zero()) (*this)(target, j) += factor * x;
  }
}

void PolyMatrix::add_col_multiple(std::size_t target, std::size_t source, const LaurentPoly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const LaurentPoly& x = (*this)(i, source);
    if (!x.is_zero()) (*this)(i, target) += factor * x;
  }
}

void PolyMatrix::scale_row(std::size_t row, const LaurentPoly& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) *= factor;
}

void PolyMatrix::scale_col(std::size_t col, const LaurentPoly& factor) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, col) *= factor;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) os << ", ";
      os << (*this)(i, j);
    }
  }
  os << "] (" << rows_ << 'x' << cols_ << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) { return os << m.to_string(); }

PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right) {
  if (left.rows() != right.rows() || left.field() != right.field()) shape_error("hstack", left, right);
  PolyMatrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
  if (top.cols() != bottom.cols() || top.field() != bottom.field()) shape_error("vstack", top, bottom);
  PolyMatrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("direct_sum: field mismatch");
  PolyMatrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

}  // namespace flowcat
