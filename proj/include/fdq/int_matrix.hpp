#pragma once

#include "fdq/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fdq {

// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Integer> column(std::size_t j) const;
  bool operator==(const IntMatrix&) const = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r > 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> invariants;  // the nonzero diagonal entries
  std::size_t rank() const { return invariants.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

// Columns form a basis of {x in Z^n : A x = 0} (automatically saturated).
IntMatrix integer_kernel(const IntMatrix& a);

// Integer solution of A x = b, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

// Index of the lattice spanned by the columns of `generators` inside Z^k
// (k = rows). nullopt when the columns do not span a full-rank sublattice.
std::optional<Integer> sublattice_index(const IntMatrix& generators);

}  // namespace fdq
