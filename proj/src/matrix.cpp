#include "toda/matrix.hpp"

#include <stdexcept>

namespace toda {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  PolyMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const LaurentPoly& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += a * o.at(k, j);
      }
    }
  return out;
}

PolyMatrix PolyMatrix::operator*(const LaurentPoly& s) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::substitute(const std::map<VarId, LaurentPoly>& bindings) const {
  PolyMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute(bindings);
  return out;
}

std::string PolyMatrix::str() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    s += "[ ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += " | ";
      s += at(r, c).str();
    }
    s += " ]\n";
  }
  return s;
}

LaurentPoly determinant_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m.at(0, 0);
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    LaurentPoly term = m.at(0, j) * determinant_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n <= 3) return determinant_cofactor(m);
  PolyMatrix a = m;
  bool negate = false;
  LaurentPoly prev(1);
  try {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a.at(k, k).is_zero()) {
        std::size_t swap_row = k + 1;
        while (swap_row < n && a.at(swap_row, k).is_zero()) ++swap_row;
        if (swap_row == n) return LaurentPoly();  // singular
        for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          LaurentPoly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
          a.at(i, j) = num.divide_exact(prev);
        }
      prev = a.at(k, k);
    }
  } catch (const std::domain_error&) {
    // Bareiss exactness can be defeated after row swaps on special patterns;
    // the cofactor oracle is always exact.
    LaurentPoly det = determinant_cofactor(m);
    return det;
  }
  LaurentPoly det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

LaurentPoly char_poly(const PolyMatrix& m, VarId lam) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  PolyMatrix shifted = m - PolyMatrix::identity(m.rows()) * LaurentPoly::variable(lam);
  return determinant(shifted);
}

}  // namespace toda
