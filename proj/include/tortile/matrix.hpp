#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tortile/scalar.hpp"

namespace tortile {

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over a field scalar.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, S(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), d_(std::move(data)) {
    if (d_.size() != rows * cols) throw MatrixError("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix scalar(S s) { return Matrix(1, 1, std::vector<S>{std::move(s)}); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  S& operator()(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }
  const std::vector<S>& data() const { return d_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MatrixError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MatrixError("matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.d_.size(); ++i) out.d_[i] += b.d_[i];
    return out;
  }

  Matrix scaled(const S& s) const {
    Matrix out = *this;
    for (auto& v : out.d_) v = v * s;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Kronecker product; row index = i_a * rows_b + i_b.
  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (is_zero(a(i, j))) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.d_.size(); ++i)
      if (!(a.d_[i] == b.d_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& v : d_)
      if (!is_zero(v)) return false;
    return true;
  }

  /// Gauss-Jordan inverse; throws MatrixError when singular or non-square.
  Matrix inverse() const {
    auto inv = try_inverse();
    if (!inv) throw MatrixError("matrix is singular");
    return std::move(*inv);
  }

  std::optional<Matrix> try_inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && is_zero(a(p, c))) ++p;
      if (p == n) return std::nullopt;
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(p, j), a(c, j));
          std::swap(inv(p, j), inv(c, j));
        }
      }
      const S pivot_inv = S(1) / a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) = a(c, j) * pivot_inv;
        inv(c, j) = inv(c, j) * pivot_inv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || is_zero(a(r, c))) continue;
        const S f = a(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) = a(r, j) - f * a(c, j);
          inv(r, j) = inv(r, j) - f * inv(c, j);
        }
      }
    }
    return inv;
  }

  bool is_invertible() const { return try_inverse().has_value(); }

  /// Converts entry type, e.g. exact matrices to the float mode.
  template <class T, class F>
  Matrix<T> map(F&& f) const {
    std::vector<T> out;
    out.reserve(d_.size());
    for (const auto& v : d_) out.push_back(f(v));
    return Matrix<T>(rows_, cols_, std::move(out));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ", ";
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += "\"" + (*this)(i, j).to_string() + "\"";
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  static bool is_zero(const S& s) { return s.is_zero(); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> d_;
};

}  // namespace tortile
