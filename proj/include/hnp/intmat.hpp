#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

namespace hnp {

// Exact arbitrary-precision integers. Smith normal form intermediates can
// overflow fixed-width types even for small inputs, so nothing in this
// module uses machine integers for matrix entries.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<Int> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Int>& v);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix diagonal_matrix(const std::vector<Int>& d);
std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& x);  // m * x

// U * M * V = S with U, V unimodular and S diagonal, d_i | d_{i+1}, d_i >= 0.
// Uinv and Vinv are maintained alongside so that callers can change basis in
// both directions without a separate inversion step.
struct SmithDecomposition {
  IntMatrix s, u, v, uinv, vinv;
  std::size_t rank = 0;
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Fraction-free Gaussian elimination (Bareiss); exact.
Int determinant(const IntMatrix& m);

// Columns form a generating set (in fact a basis) of { x : M x = 0 }.
IntMatrix kernel_basis(const IntMatrix& m);

// An integral solution of A x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace hnp
