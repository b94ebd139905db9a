#pragma once

// Exact integer matrices, Smith normal form, and finitely generated abelian
// groups presented as cokernels.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace palf {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Matrix whose j-th column is columns[j]; every column must have `rows` entries.
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<long>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool is_identity() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  // Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> factors;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

struct AbelianGroup {
  std::size_t free_rank = 0;
  // Invariant factors > 1 in divisibility order.
  std::vector<BigInt> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^3", "Z/2", "Z^2 + Z/2 + Z/6".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Z^rows / column-span(m).
AbelianGroup cokernel(const IntMatrix& m);

}  // namespace palf
