#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flowcat/scalar.hpp"

namespace flowcat {

using FieldVector = std::vector<Scalar>;

/// Dense matrix over the field k, stored row by row.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field field, std::size_t rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const FieldVector& row(std::size_t i) const { return data_[i]; }
  FieldVector& row(std::size_t i) { return data_[i]; }

  void append_row(FieldVector row);
  /// Appends a zero row and returns it for filling.
  FieldVector& add_zero_row();
  void remove_row(std::size_t i) { data_.erase(data_.begin() + static_cast<std::ptrdiff_t>(i)); }

  FieldMatrix select_cols(std::span<const std::size_t> indices) const;
  FieldVector apply(std::span<const Scalar> x) const;

  bool operator==(const FieldMatrix& other) const = default;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t cols_ = 0;
  std::vector<FieldVector> data_;
};

struct Rref {
  FieldMatrix reduced;              ///< zero rows dropped
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row echelon form (pivots normalized to 1).
Rref rref(const FieldMatrix& m);

/// Rows form a basis of {x : m x = 0}.
FieldMatrix nullspace(const FieldMatrix& m);

/// Existentially projects out the first `eliminated` columns of the relation
/// {x : m x = 0}, returning constraints on the remaining columns.
FieldMatrix eliminate_leading(const FieldMatrix& m, std::size_t eliminated);

/// Some solution of m x = rhs with every free variable set to zero, or
/// std::nullopt if the system is inconsistent.
std::optional<FieldVector> solve_zero_free(const FieldMatrix& m, std::span<const Scalar> rhs);

/// A linear subspace of k^n, held canonically as the reduced row echelon form
/// of its annihilator, so equality of subspaces is equality of this matrix.
class Subspace {
 public:
  Subspace() = default;
  static Subspace from_constraints(const FieldMatrix& constraints);
  /// Span of the rows of `basis` inside k^ambient.
  static Subspace span_of(const FieldMatrix& basis);
  static Subspace whole(Field field, std::size_t ambient);

  std::size_t ambient() const { return constraints_.cols(); }
  std::size_t dim() const { return ambient() - constraints_.rows(); }
  const FieldMatrix& constraints() const { return constraints_; }
  /// Rows form a basis.
  FieldMatrix basis() const { return nullspace(constraints_); }
  bool contains(std::span<const Scalar> v) const;
  bool is_subset_of(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

 private:
  FieldMatrix constraints_;
};

}  // namespace flowcat
