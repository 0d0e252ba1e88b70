#include "coxstack/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxstack {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count != rows * cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
  std::size_t nr = cols.empty() ? 0 : cols.front().size();
  IntMatrix m(nr, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != nr)
      throw std::invalid_argument("IntMatrix: ragged columns");
    for (std::size_t i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? " " : "") << at(i, j).str();
  }
  out << "]";
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p.at(i, j) += aik * b.at(k, j);
    }
  return p;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("IntMatrix: dimension mismatch in apply");
  std::vector<Int> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * v[j];
  return out;
}

Int gcd_of(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::size_t n = std::min(s.rows(), s.cols());
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
  return d;
}

namespace {

// Locate the nonzero entry of smallest absolute value in s[k.., k..];
// ties resolved by lowest (row, col). Returns false if the submatrix is zero.
bool find_pivot(const IntMatrix& s, std::size_t k, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < s.rows(); ++i)
    for (std::size_t j = k; j < s.cols(); ++j) {
      const Int& e = s.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition d{IntMatrix::identity(m.rows()), m,
                       IntMatrix::identity(m.cols())};
  IntMatrix& s = d.s;
  IntMatrix& u = d.u;
  IntMatrix& v = d.v;
  const std::size_t n = std::min(s.rows(), s.cols());

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pi = k, pj = k;
    if (!find_pivot(s, k, pi, pj)) break;
    s.swap_rows(k, pi);
    u.swap_rows(k, pi);
    s.swap_cols(k, pj);
    v.swap_cols(k, pj);

    for (;;) {
      // Clear column k below the pivot.
      bool dirty = false;
      for (std::size_t i = k + 1; i < s.rows(); ++i) {
        if (s.at(i, k) == 0) continue;
        Int q = s.at(i, k) / s.at(k, k);
        s.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (s.at(i, k) != 0) {
          // Remainder is smaller than the pivot; promote it.
          s.swap_rows(k, i);
          u.swap_rows(k, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row k right of the pivot.
      for (std::size_t j = k + 1; j < s.cols(); ++j) {
        if (s.at(k, j) == 0) continue;
        Int q = s.at(k, j) / s.at(k, k);
        s.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (s.at(k, j) != 0) {
          s.swap_cols(k, j);
          v.swap_cols(k, j);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Pivot now divides its row and column. Enforce divisibility into the
      // remaining submatrix: fold a bad row in and restart the reduction.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < s.rows() && divides_all; ++i)
        for (std::size_t j = k + 1; j < s.cols() && divides_all; ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            s.add_row_multiple(k, i, 1);
            u.add_row_multiple(k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }

    if (s.at(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
  }
  return d;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntMatrix hermite_row_basis(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Reduce column 'col' across rows >= row to a single nonzero entry.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = row; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == h.rows() || abs(h.at(i, col)) < abs(h.at(best, col)))
          best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(row, best);
      bool cleared = true;
      for (std::size_t i = row + 1; i < h.rows(); ++i) {
        if (h.at(i, col) == 0) continue;
        Int q = h.at(i, col) / h.at(row, col);
        h.add_row_multiple(i, row, -q);
        if (h.at(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(row, col) == 0) continue;
    if (h.at(row, col) < 0) h.negate_row(row);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < row; ++i) {
      Int q = h.at(i, col) / h.at(row, col);
      if (h.at(i, col) - q * h.at(row, col) < 0) q -= 1;
      if (q != 0) h.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  IntMatrix basis(row, h.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) basis.at(i, j) = h.at(i, j);
  return basis;
}

std::optional<std::vector<Int>> solve_linear(const IntMatrix& m,
                                             const std::vector<Int>& rhs) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("solve_linear: rhs length != rows");
  SmithDecomposition d = smith_normal_form(m);
  std::vector<Int> z = d.u * rhs;
  std::vector<Int> w(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < n && d.s.at(i, i) != 0) {
      if (z[i] % d.s.at(i, i) != 0) return std::nullopt;
      w[i] = z[i] / d.s.at(i, i);
    } else if (z[i] != 0) {
      return std::nullopt;
    }
  }
  return d.v * w;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  std::vector<std::vector<Int>> basis;
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j >= n || d.s.at(j, j) == 0) basis.push_back(d.v.column(j));
  return basis;
}

}  // namespace coxstack
