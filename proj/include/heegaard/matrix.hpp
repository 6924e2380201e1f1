#pragma once

#include <optional>
#include <vector>

#include "heegaard/exact.hpp"

namespace heegaard {

// Dense integer matrix with arbitrary-precision entries.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const IntMat& o) const = default;

  IntMat transposed() const;
  std::vector<Int> column(int c) const;
  std::vector<Int> row(int r) const;
  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

IntMat mul(const IntMat& a, const IntMat& b);
std::vector<Int> mul(const IntMat& a, const std::vector<Int>& x);

// u * input * v == d, with u, v unimodular and d diagonal, d[i,i] | d[i+1,i+1].
struct SmithForm {
  IntMat d, u, v;
  int rank = 0;
  // Diagonal entries of d that exceed 1, in divisibility order.
  std::vector<Int> torsion() const;
};

SmithForm smith_normal_form(const IntMat& a);

int rank_of(const IntMat& a);

// Fraction-free determinant (Bareiss); square input required.
Int determinant(const IntMat& a);

// adj(a) with a * adj(a) == det(a) * I; square input required.
IntMat adjugate(const IntMat& a);

// Basis of the integer kernel {x : a x = 0}, as columns; the basis is
// primitive (it spans the full kernel lattice, not a finite-index sublattice).
std::vector<std::vector<Int>> kernel_basis(const IntMat& a);

// One rational solution of a x = b, free variables pinned to zero; nullopt if
// the system is inconsistent.
std::optional<std::vector<Rat>> solve_rational(const IntMat& a, const std::vector<Rat>& b);

// Monic characteristic polynomial det(lambda I - a), coefficients by ascending
// degree; square input required.
std::vector<Int> characteristic_polynomial(const IntMat& a);

}  // namespace heegaard
