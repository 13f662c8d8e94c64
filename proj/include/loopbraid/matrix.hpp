#pragma once
/**
 * @file matrix.hpp
 * @brief Minimal dense complex-matrix arithmetic for small verification problems.
 *
 * Every matrix in this library acts on a fusion space whose dimension is tiny
 * (rarely above a few dozen), so a plain row-major vector of
 * std::complex<double> with straightforward O(n^3) algorithms is the right
 * tool: no external dependency, deterministic results, easy to audit.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace loopbraid {

using Complex = std::complex<double>;

/** Dense row-major complex matrix. Entry (r, c) = row r (output), column c (input). */
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Mat operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
    Mat out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Complex v = at(i, k);
        if (v == Complex{}) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
      }
    return out;
  }

  Mat operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument("Mat: dimension mismatch in difference");
    Mat out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
  }

  /** Largest entry magnitude (0 for an empty matrix). */
  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  /** Entrywise max-norm distance; matrices must share dimensions. */
  static double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).max_abs(); }

  /** Entrywise max-norm distance to the identity (0 for the 0x0 matrix). */
  double distance_to_identity() const {
    if (!square()) throw std::invalid_argument("Mat: distance_to_identity on non-square matrix");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m = std::max(m, std::abs(at(i, j) - (i == j ? Complex{1.0} : Complex{})));
    return m;
  }

  /** Inverse by Gauss-Jordan elimination with partial pivoting. Throws on singular input. */
  Mat inverse() const {
    if (!square()) throw std::invalid_argument("Mat: inverse of non-square matrix");
    const std::size_t n = rows_;
    Mat work(*this);
    Mat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      double best = std::abs(work.at(col, col));
      for (std::size_t r = col + 1; r < n; ++r) {
        const double v = std::abs(work.at(r, col));
        if (v > best) { best = v; pivot = r; }
      }
      if (best < 1e-14) throw std::domain_error("Mat: singular matrix in inverse()");
      if (pivot != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(work.at(pivot, j), work.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      }
      const Complex d = work.at(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(col, j) /= d;
        inv.at(col, j) /= d;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        const Complex f = work.at(r, col);
        if (f == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) {
          work.at(r, j) -= f * work.at(col, j);
          inv.at(r, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Complex> a_;
};

}  // namespace loopbraid
