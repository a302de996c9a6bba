#pragma once

// Exact integer linear algebra: Smith normal form, cokernels, integer
// solving, and lattices that contain a full-rank multiple e*Z^n.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drg/integer.hpp"

namespace drg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static IntMatrix diagonal(const Vector& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator-() const;

  // Elementary operations; all are unimodular except scale_*.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);  // row dst += q*row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);  // col dst += q*col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  /// Rows [r0, r1) x cols [c0, c1).
  IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  const std::vector<Integer>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
Vector operator*(const IntMatrix& a, const Vector& x);

/// Horizontal concatenation [a | b].
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

/// Inverse over the rationals; nullopt when singular or non-square.
std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& a);

/// Integer inverse; nullopt unless `a` is unimodular.
std::optional<IntMatrix> integer_inverse(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... , all d >= 0.
/// The inverses of U and V are carried along so callers never invert.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
  /// Diagonal entries, min(rows, cols) of them.
  Vector diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Z^cols modulo the row span of a relation matrix, in the form
/// Z^free_rank + sum Z/f_i (f_i > 1, f_i | f_{i+1}).
///
/// Presented coordinates list the free coordinates first, then the torsion
/// coordinates in the order of `invariant_factors`.  `to_presented` maps a
/// standard column vector to presented coordinates (unreduced); column j of
/// `from_presented` is the standard-coordinate lift of presented generator j.
struct CokernelPresentation {
  std::size_t free_rank = 0;
  Vector invariant_factors;
  IntMatrix to_presented;
  IntMatrix from_presented;

  std::size_t num_generators() const { return free_rank + invariant_factors.size(); }
  /// Presented coordinates of x with torsion entries reduced.
  Vector reduce(const Vector& x) const;
};

/// `relations` is k x n; each row is a relation on Z^n.
CokernelPresentation cokernel_presentation(const IntMatrix& relations, std::size_t ambient_dim);
inline CokernelPresentation cokernel_presentation(const IntMatrix& relations) {
  return cokernel_presentation(relations, relations.cols());
}

/// Some x with A*x = b over Z, or nullopt.  Throws std::invalid_argument on
/// dimension mismatch.
std::optional<Vector> solve_integer(const IntMatrix& a, const Vector& b);

/// Basis (as columns) of {x in Z^cols : A*x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as columns) of the lattice spanned by the columns of `gens`.
IntMatrix column_span_basis(const IntMatrix& gens);

/// A lattice L with e*Z^n in L, kept as a lower-triangular basis whose
/// diagonal entries divide e.  All entries stay bounded by e, so lattices of
/// finite modules (cochain groups, their cocycles and coboundaries) are
/// handled without coefficient growth.
class ModularLattice {
 public:
  ModularLattice() = default;
  /// Lattice spanned by `generators` (as columns) together with e*Z^n.
  ModularLattice(std::size_t dim, Integer modulus, const std::vector<Vector>& generators);

  std::size_t dim() const { return dim_; }
  const Integer& modulus() const { return modulus_; }
  const IntMatrix& basis() const { return basis_; }

  /// Canonical coset representative of x: entry i lies in [0, basis(i,i)).
  /// Lexicographically minimal among nonnegative representatives.
  Vector reduce(const Vector& x) const;
  bool contains(const Vector& x) const;

  /// Coefficients y with basis * y = x; x must lie in the lattice.
  Vector coordinates(const Vector& x) const;

  /// Index [Z^n : L].
  Integer index() const;

 private:
  std::size_t dim_ = 0;
  Integer modulus_ = 1;
  IntMatrix basis_;
};

/// {x : A*x in the lattice generated by moduli_i * e_i}, as a ModularLattice
/// with modulus `e`.  Requires e*A*x to vanish modulo the row moduli for all x.
ModularLattice kernel_modulo(const IntMatrix& a, const Vector& row_moduli, const Integer& e);

/// Rows as (column, coefficient) lists.
using SparseRowMatrix = std::vector<std::vector<std::pair<std::size_t, Integer>>>;
ModularLattice kernel_modulo(const SparseRowMatrix& a, std::size_t cols, const Vector& row_moduli, const Integer& e);

}  // namespace drg
