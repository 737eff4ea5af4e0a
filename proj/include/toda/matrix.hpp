#pragma once

#include "toda/laurent.hpp"

#include <cstddef>
#include <vector>

namespace toda {

// Dense matrix of Laurent polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  LaurentPoly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentPoly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator*(const LaurentPoly& s) const;

  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const;

  PolyMatrix substitute(const std::map<VarId, LaurentPoly>& bindings) const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> data_;
};

// Exact determinant.  Uses fraction-free Bareiss elimination (every interior
// division is exact by the Sylvester identity); falls back to cofactor
// expansion if no nonzero pivot is available at some step without column
// swaps, or when exact division fails for a degenerate pattern.
LaurentPoly determinant(const PolyMatrix& m);

// Cofactor-expansion determinant; exponential, used as an independent oracle
// for small matrices and as a fallback.
LaurentPoly determinant_cofactor(const PolyMatrix& m);

// det(m - lam * I), collected as a polynomial in the variable `lam`.
LaurentPoly char_poly(const PolyMatrix& m, VarId lam);

}  // namespace toda
