#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coxstack {

// All matrix arithmetic in this project is exact. Intermediate entries of a
// Smith reduction overflow 64 bits even for small inputs, so everything runs
// on arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> column(std::size_t j) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  IntMatrix transposed() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);

/// Result of U * M * V = S with S diagonal, d_i | d_{i+1}, U and V unimodular.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  std::vector<Int> diagonal() const;
};

/// Smith normal form. Pivots are chosen as the minimal-absolute-value nonzero
/// entry of the working submatrix, ties broken by lowest (row, col), so the
/// transforms are reproducible.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int determinant(const IntMatrix& m);

/// Canonical Hermite basis of the lattice spanned by the rows of m: pivots
/// positive and strictly to the right as rows descend, entries above a pivot
/// reduced into [0, pivot). Zero rows dropped. Two row sets span the same
/// lattice iff their Hermite bases are identical.
IntMatrix hermite_row_basis(const IntMatrix& m);

/// One integer solution x of m * x = rhs, or nullopt if none exists.
std::optional<std::vector<Int>> solve_linear(const IntMatrix& m,
                                             const std::vector<Int>& rhs);

/// Basis of the integer kernel lattice { x : m * x = 0 }, as columns.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

Int gcd_of(const Int& a, const Int& b);

}  // namespace coxstack
