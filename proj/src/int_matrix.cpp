#include "fdq/int_matrix.hpp"

#include "fdq/errors.hpp"

#include <sstream>
#include <utility>

namespace fdq {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("IntMatrix::from_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InternalError("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<Integer> IntMatrix::column(std::size_t j) const {
  std::vector<Integer> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), {}};
  IntMatrix& d = f.D;
  const std::size_t m = d.rows(), n = d.cols();

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (d(i, j) != 0 && (pi == m || abs_int(d(i, j)) < abs_int(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    swap_rows(d, t, pi);
    swap_rows(f.U, t, pi);
    swap_cols(d, t, pj);
    swap_cols(f.V, t, pj);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < m && !dirty; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        add_row(d, i, t, q);
        add_row(f.U, i, t, q);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(f.U, t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n && !dirty; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        add_col(d, j, t, q);
        add_col(f.V, j, t, q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(f.V, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: fold an offending row into the pivot row.
      for (std::size_t i = t + 1; i < m && !dirty; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, Integer(-1));
            add_row(f.U, t, i, Integer(-1));
            dirty = true;
            break;
          }
        }
      }
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) f.U(t, j) = -f.U(t, j);
    }
    f.invariants.push_back(d(t, t));
  }
  return f;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  const std::size_t n = a.cols(), r = f.rank();
  IntMatrix k(n, n - r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = r; j < n; ++j) k(i, j - r) = f.V(i, j);
  }
  return k;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b) {
  if (b.size() != a.rows()) throw InputError("solve_integer: dimension mismatch");
  const SmithForm f = smith_normal_form(a);
  std::vector<Integer> ub(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.rows(); ++k) ub[i] += f.U(i, k) * b[k];
  }
  std::vector<Integer> y(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < f.rank()) {
      if (ub[i] % f.invariants[i] != 0) return std::nullopt;
      y[i] = ub[i] / f.invariants[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(a.cols(), 0);
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) x[i] += f.V(i, k) * y[k];
  }
  return x;
}

std::optional<Integer> sublattice_index(const IntMatrix& generators) {
  const SmithForm f = smith_normal_form(generators);
  if (f.rank() < generators.rows()) return std::nullopt;
  Integer index = 1;
  for (const auto& d : f.invariants) index *= d;
  return index;
}

}  // namespace fdq
