#include "palf/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "palf/error.hpp"

namespace palf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<long>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

namespace {

// Moves the nonzero entry of least absolute value in the trailing block
// starting at (t, t) to position (t, t). Returns false if the block is zero.
bool pivot_smallest(IntMatrix& m, std::size_t t) {
  std::size_t pr = t, pc = t;
  BigInt best = 0;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const BigInt a = abs(m(i, j));
      if (a != 0 && (best == 0 || a < best)) {
        best = a;
        pr = i;
        pc = j;
      }
    }
  if (best == 0) return false;
  m.swap_rows(t, pr);
  m.swap_cols(t, pc);
  return true;
}

// After an elimination pass, brings the smallest nonzero entry of row t or
// column t (including the pivot itself) to (t, t).
void pivot_smallest_in_cross(IntMatrix& m, std::size_t t) {
  std::size_t pr = t, pc = t;
  BigInt best = abs(m(t, t));
  for (std::size_t i = t + 1; i < m.rows(); ++i)
    if (m(i, t) != 0 && abs(m(i, t)) < best) {
      best = abs(m(i, t));
      pr = i;
      pc = t;
    }
  for (std::size_t j = t + 1; j < m.cols(); ++j)
    if (m(t, j) != 0 && abs(m(t, j)) < best) {
      best = abs(m(t, j));
      pr = t;
      pc = j;
    }
  m.swap_rows(t, pr);
  m.swap_cols(t, pc);
}

// Clears row and column t below/right of the pivot. Returns true if
// everything cancelled exactly.
bool eliminate_cross(IntMatrix& m, std::size_t t) {
  bool clean = true;
  for (std::size_t i = t + 1; i < m.rows(); ++i) {
    if (m(i, t) == 0) continue;
    m.add_row_multiple(i, t, -(m(i, t) / m(t, t)));
    if (m(i, t) != 0) clean = false;
  }
  for (std::size_t j = t + 1; j < m.cols(); ++j) {
    if (m(t, j) == 0) continue;
    m.add_col_multiple(j, t, -(m(t, j) / m(t, t)));
    if (m(t, j) != 0) clean = false;
  }
  return clean;
}

}  // namespace

// gcd elimination. Every restart strictly shrinks |pivot|, so each stage terminates.
SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (!pivot_smallest(m, t)) break;
    for (;;) {
      if (!eliminate_cross(m, t)) {
        pivot_smallest_in_cross(m, t);
        continue;
      }
      // Enforce d_t | every trailing entry by folding an offending row into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            m.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.factors.push_back(abs(m(t, t)));
    ++out.rank;
  }
  return out;
}

AbelianGroup cokernel(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = m.rows() - snf.rank;
  for (const BigInt& d : snf.factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const BigInt& d : torsion) {
    if (!first) os << " + ";
    first = false;
    os << "Z/" << d;
  }
  return os.str();
}

}  // namespace palf
