#include "hnp/intmat.hpp"

#include <algorithm>

#include "hnp/errors.hpp"

namespace hnp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
  std::vector<Int> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const std::vector<Int>& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw PreconditionError("hstack row mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
  }
  return out;
}

IntMatrix diagonal_matrix(const std::vector<Int>& d) {
  IntMatrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out.at(i, i) = d[i];
  return out;
}

std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& x) {
  if (m.cols() != x.size()) throw PreconditionError("apply dimension mismatch");
  std::vector<Int> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) out[r] += m.at(r, c) * x[c];
  return out;
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::vector<Int> d;
  std::size_t n = std::min(s.rows(), s.cols());
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) d.push_back(s.at(i, i));
  return d;
}

namespace {

struct SnfWork {
  IntMatrix s, u, v, uinv, vinv;
  std::size_t m, n;

  explicit SnfWork(const IntMatrix& in)
      : s(in),
        u(IntMatrix::identity(in.rows())),
        v(IntMatrix::identity(in.cols())),
        uinv(IntMatrix::identity(in.rows())),
        vinv(IntMatrix::identity(in.cols())),
        m(in.rows()),
        n(in.cols()) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row i -= q * row t
  void row_sub(std::size_t i, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) s.at(i, c) -= q * s.at(t, c);
    for (std::size_t c = 0; c < m; ++c) u.at(i, c) -= q * u.at(t, c);
    for (std::size_t r = 0; r < m; ++r) uinv.at(r, t) += q * uinv.at(r, i);
  }
  // col j -= q * col t
  void col_sub(std::size_t j, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) s.at(r, j) -= q * s.at(r, t);
    for (std::size_t r = 0; r < n; ++r) v.at(r, j) -= q * v.at(r, t);
    for (std::size_t c = 0; c < n; ++c) vinv.at(t, c) += q * vinv.at(j, c);
  }
  // row t += row i
  void row_add(std::size_t t, std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) s.at(t, c) += s.at(i, c);
    for (std::size_t c = 0; c < m; ++c) u.at(t, c) += u.at(i, c);
    for (std::size_t r = 0; r < m; ++r) uinv.at(r, i) -= uinv.at(r, t);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) s.at(i, c) = -s.at(i, c);
    for (std::size_t c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
    for (std::size_t r = 0; r < m; ++r) uinv.at(r, i) = -uinv.at(r, i);
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = s.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& in) {
  SnfWork w(in);
  const std::size_t mn = std::min(w.m, w.n);
  std::size_t t = 0;
  for (; t < mn; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!w.find_pivot(t, pi, pj)) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool restart = false;
      // clear the pivot column; a nonzero remainder becomes the new, smaller pivot
      for (std::size_t i = t + 1; i < w.m && !restart; ++i) {
        if (w.s.at(i, t) == 0) continue;
        Int q = w.s.at(i, t) / w.s.at(t, t);
        w.row_sub(i, t, q);
        if (w.s.at(i, t) != 0) {
          w.swap_rows(i, t);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < w.n && !restart; ++j) {
        if (w.s.at(t, j) == 0) continue;
        Int q = w.s.at(t, j) / w.s.at(t, t);
        w.col_sub(j, t, q);
        if (w.s.at(t, j) != 0) {
          w.swap_cols(j, t);
          restart = true;
        }
      }
      if (restart) continue;

      // pivot now divides its row and column exactly; enforce that it also
      // divides the rest of the submatrix so the diagonal forms a chain
      bool fixed = false;
      for (std::size_t i = t + 1; i < w.m && !fixed; ++i)
        for (std::size_t j = t + 1; j < w.n && !fixed; ++j)
          if (w.s.at(i, j) % w.s.at(t, t) != 0) {
            w.row_add(t, i);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (w.s.at(t, t) < 0) w.negate_row(t);
  }

  SmithDecomposition out;
  out.s = std::move(w.s);
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  out.uinv = std::move(w.uinv);
  out.vinv = std::move(w.vinv);
  out.rank = t;
  return out;
}

Int determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw PreconditionError("determinant of non-square matrix");
  const std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix a = in;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(piv, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  const std::size_t k = m.cols() - d.rank;
  IntMatrix out(m.cols(), k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < m.cols(); ++r) out.at(r, c) = d.v.at(r, d.rank + c);
  return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (a.rows() != b.size()) throw PreconditionError("solve dimension mismatch");
  SmithDecomposition d = smith_normal_form(a);
  std::vector<Int> c = matvec(d.u, b);
  std::vector<Int> y(a.cols(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < d.rank) {
      if (c[i] % d.s.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / d.s.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return matvec(d.v, y);
}

}  // namespace hnp
