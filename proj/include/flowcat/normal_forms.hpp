#pragma once

#include <cstddef>
#include <optional>

#include "flowcat/poly_matrix.hpp"

namespace flowcat {

/// M = V * D * U with V, U unimodular and D rectangular diagonal whose nonzero
/// entries are canonical associates forming a divisibility chain d1 | d2 | ...
/// The inverses are produced alongside the factors rather than recomputed.
struct SmithDecomposition {
  PolyMatrix V, D, U;
  PolyMatrix V_inv, U_inv;
  std::size_t rank = 0;

  /// The i-th diagonal entry of D (zero if i >= rank).
  const LaurentPoly& diagonal(std::size_t i) const { return D(i, i); }
};

/// Row-style Hermite form. T is square unimodular with T * M = [H; 0], where H
/// holds the rank nonzero rows. Pivot positions strictly increase, pivots are
/// canonical associates, and entries above a pivot are canonical residues
/// modulo it (see reduce_mod). H therefore depends only on the row module of M.
struct HermiteForm {
  PolyMatrix H;
  PolyMatrix T, T_inv;
  std::size_t rank = 0;
};

/// Pivot choice: minimal span among the remaining nonzero entries, ties broken
/// by lowest (row, col).
SmithDecomposition smith_normal_form(const PolyMatrix& m);

HermiteForm hermite_normal_form(const PolyMatrix& m);

std::size_t rank(const PolyMatrix& m);

struct EpiSplitMono {
  PolyMatrix epi;         ///< rank x cols, full row rank
  PolyMatrix split_mono;  ///< rows x rank, has a left inverse
};

/// m = split_mono * epi.
EpiSplitMono epi_splitmono_factor(const PolyMatrix& m);

/// Full row rank, i.e. the cokernel is torsion.
bool is_epi(const PolyMatrix& m);
/// Full column rank with unit invariant factors, i.e. a left inverse exists.
bool is_split_mono(const PolyMatrix& m);
/// Square with a two-sided inverse over k[s, s^-1].
bool is_invertible(const PolyMatrix& m);

/// L with L * m = I, or std::nullopt if m is not split mono.
std::optional<PolyMatrix> left_inverse(const PolyMatrix& m);
/// Two-sided inverse, or std::nullopt.
std::optional<PolyMatrix> inverse(const PolyMatrix& m);

/// Columns form a basis of the kernel module {x : m x = 0}, in column-Hermite
/// canonical form.
PolyMatrix kernel_basis(const PolyMatrix& m);

/// Q with Q * m = 0, Q epi, and universal among maps into free modules that
/// annihilate the image of m. Rows are in Hermite canonical form.
PolyMatrix cokernel_free(const PolyMatrix& m);

/// X with X * m = n, or std::nullopt when none exists over k[s, s^-1].
/// Throws std::invalid_argument when column counts differ.
std::optional<PolyMatrix> solve_left(const PolyMatrix& m, const PolyMatrix& n);

/// X with m * X = n, or std::nullopt. Throws when row counts differ.
std::optional<PolyMatrix> solve_right(const PolyMatrix& m, const PolyMatrix& n);

/// True iff the two matrices have the same row module.
bool same_row_module(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace flowcat
