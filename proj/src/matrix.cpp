#include "heegaard/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace heegaard {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Int> IntMat::column(int c) const {
  std::vector<Int> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Int> IntMat::row(int r) const {
  std::vector<Int> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

bool IntMat::is_zero() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0) return false;
  return true;
}

IntMat mul(const IntMat& a, const IntMat& b) {
  require(a.cols() == b.rows(), Code::Internal, "matrix product shape mismatch");
  IntMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

std::vector<Int> mul(const IntMat& a, const std::vector<Int>& x) {
  require(a.cols() == static_cast<int>(x.size()), Code::Internal, "matrix-vector shape mismatch");
  std::vector<Int> out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0 && x[j] != 0) out[i] += a.at(i, j) * x[j];
  return out;
}

std::vector<Int> SmithForm::torsion() const {
  std::vector<Int> out;
  int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) > 1) out.push_back(d.at(i, i));
  return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct SnfWork {
  IntMat d, u, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row i -= q * row t
  void row_sub(int i, int t, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < d.cols(); ++c) d.at(i, c) -= q * d.at(t, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(t, c);
  }
  void col_sub(int j, int t, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows(); ++r) d.at(r, j) -= q * d.at(r, t);
    for (int r = 0; r < v.rows(); ++r) v.at(r, j) -= q * v.at(r, t);
  }
  void row_add(int i, int t) {
    for (int c = 0; c < d.cols(); ++c) d.at(i, c) += d.at(t, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) += u.at(t, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  SnfWork w{a, IntMat::identity(a.rows()), IntMat::identity(a.cols())};
  const int m = a.rows(), n = a.cols();

  int t = 0;
  while (t < m && t < n) {
    // Smallest-|entry| pivot, lexicographic (row, col) tie-break.
    int pr = -1, pc = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& e = w.d.at(i, j);
        if (e == 0) continue;
        if (pr < 0 || abs_int(e) < abs_int(w.d.at(pr, pc))) pr = i, pc = j;
      }
    if (pr < 0) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        while (w.d.at(i, t) != 0) {
          Int q = w.d.at(i, t) / w.d.at(t, t);
          w.row_sub(i, t, q);
          if (w.d.at(i, t) != 0) {
            w.swap_rows(t, i);
            dirty = true;
          }
        }
      }
      for (int j = t + 1; j < n; ++j) {
        while (w.d.at(t, j) != 0) {
          Int q = w.d.at(t, j) / w.d.at(t, t);
          w.col_sub(j, t, q);
          if (w.d.at(t, j) != 0) {
            w.swap_cols(t, j);
            dirty = true;
          }
        }
      }
      if (dirty) continue;

      // Pivot must divide the remaining block.
      bool fixed = true;
      for (int i = t + 1; i < m && fixed; ++i)
        for (int j = t + 1; j < n && fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.row_add(t, i);
            fixed = false;
          }
      if (fixed) break;
    }

    if (w.d.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithForm s;
  s.d = std::move(w.d);
  s.u = std::move(w.u);
  s.v = std::move(w.v);
  s.rank = t;
  return s;
}

int rank_of(const IntMat& a) { return smith_normal_form(a).rank; }

Int determinant(const IntMat& a) {
  require(a.rows() == a.cols(), Code::Internal, "determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  IntMat b = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == 0) {
      int i = k + 1;
      while (i < n && b.at(i, k) == 0) ++i;
      if (i == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(b.at(k, c), b.at(i, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
      b.at(i, k) = 0;
    }
    prev = b.at(k, k);
  }
  return sign < 0 ? Int(-b.at(n - 1, n - 1)) : b.at(n - 1, n - 1);
}

IntMat adjugate(const IntMat& a) {
  require(a.rows() == a.cols(), Code::Internal, "adjugate of non-square matrix");
  const int n = a.rows();
  IntMat adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  IntMat minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc++) = a.at(r, c);
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj.at(j, i) = cof;
    }
  return adj;
}

std::vector<std::vector<Int>> kernel_basis(const IntMat& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  for (int j = s.rank; j < a.cols(); ++j) basis.push_back(s.v.column(j));
  return basis;
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& a, const std::vector<Rat>& b) {
  require(a.rows() == static_cast<int>(b.size()), Code::Internal, "solve shape mismatch");
  const int m = a.rows(), n = a.cols();
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Rat(a.at(i, j));
    aug[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (aug[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(aug[row], aug[p]);
    Rat inv = aug[row][col];
    for (int j = col; j <= n; ++j) aug[row][j] /= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) x[pivot_col[i]] = aug[i][n];
  return x;
}

std::vector<Int> characteristic_polynomial(const IntMat& a) {
  require(a.rows() == a.cols(), Code::Precondition,
          "characteristic polynomial needs a square matrix");
  const int n = a.rows();
  std::vector<Int> coef(n + 1);
  coef[n] = 1;
  // Faddeev-LeVerrier; every division by k is exact.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rat>> am(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        if (a.at(i, t) == 0) continue;
        Rat f(a.at(i, t));
        for (int j = 0; j < n; ++j) am[i][j] += f * m[t][j];
      }
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += am[i][i];
    Rat ck = -tr / k;
    require(denominator(ck) == 1, Code::Internal, "characteristic coefficient not integral");
    coef[n - k] = numerator(ck);
    for (int i = 0; i < n; ++i) am[i][i] += ck;
    m = std::move(am);
  }
  return coef;
}

}  // namespace heegaard
