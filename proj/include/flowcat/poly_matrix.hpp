#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "flowcat/laurent_poly.hpp"

namespace flowcat {

/// Dense rows x cols matrix over k[s, s^-1]. As an arrow of the prop of
/// matrices it goes cols -> rows. Empty shapes (0 x n, n x 0) are legal and
/// distinguished by their dimensions.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(Field field, std::size_t n);
  /// The matrix sending basis vector e_j to e_{perm[j]}.
  static PolyMatrix permutation(Field field, std::span<const std::size_t> perm);
  /// Builds from row lists of textual polynomials, e.g. {{"s+1", "-s-1"}}.
  static PolyMatrix from_strings(Field field, std::initializer_list<std::initializer_list<const char*>> rows);
  /// Explicit dimensions for the empty-row case.
  static PolyMatrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<LaurentPoly>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  PolyMatrix operator-() const;
  bool operator==(const PolyMatrix& other) const;

  PolyMatrix transpose() const;
  PolyMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  PolyMatrix select_rows(std::span<const std::size_t> indices) const;
  PolyMatrix select_cols(std::span<const std::size_t> indices) const;
  PolyMatrix row_range(std::size_t begin, std::size_t end) const { return block(begin, 0, end - begin, cols_); }
  PolyMatrix col_range(std::size_t begin, std::size_t end) const { return block(0, begin, rows_, end - begin); }

  // Elementary operations used by the normal-form algorithms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const LaurentPoly& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const LaurentPoly& factor);
  void scale_row(std::size_t row, const LaurentPoly& factor);
  void scale_col(std::size_t col, const LaurentPoly& factor);

  std::string to_string() const;

 private:
  void require_same_field(const PolyMatrix& other) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right);
PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
/// Block diagonal [a 0; 0 b], the monoidal product of the prop.
PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace flowcat
