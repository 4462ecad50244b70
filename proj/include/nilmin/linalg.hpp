// Small dense matrices over an exact field (QRat, Rat) or double.
// Dimensions here are tiny (<= 2n = 6..12), so everything is plain O(n^3).

#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nilmin {

template <class T>
struct Mat {
  int r = 0, c = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), a(rows * cols, T(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  T& operator()(int i, int j) { return a[i * c + j]; }
  const T& operator()(int i, int j) const { return a[i * c + j]; }

  Mat transpose() const {
    Mat m(c, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (c != o.r) throw std::invalid_argument("Mat: dimension mismatch");
    Mat m(r, o.c);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < c; ++k) {
        const T& v = (*this)(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < o.c; ++j) m(i, j) += v * o(k, j);
      }
    return m;
  }

  Mat operator+(const Mat& o) const {
    Mat m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
    return m;
  }
  Mat operator-(const Mat& o) const {
    Mat m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
    return m;
  }
  Mat scaled(const T& s) const {
    Mat m = *this;
    for (auto& v : m.a) v = v * s;
    return m;
  }

  bool operator==(const Mat& o) const {
    if (r != o.r || c != o.c) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a[i] == o.a[i])) return false;
    return true;
  }

  std::vector<T> mul(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != c)
      throw std::invalid_argument("Mat: vector length mismatch");
    std::vector<T> y(r, T(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  // Gauss-Jordan inverse with first-nonzero pivoting (exact fields only).
  std::optional<Mat> inverse() const {
    if (r != c) return std::nullopt;
    Mat w = *this, inv = identity(r);
    for (int col = 0; col < r; ++col) {
      int piv = -1;
      for (int i = col; i < r; ++i)
        if (!(w(i, col) == T(0))) {
          piv = i;
          break;
        }
      if (piv < 0) return std::nullopt;
      if (piv != col)
        for (int j = 0; j < r; ++j) {
          std::swap(w(piv, j), w(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      T p = w(col, col);
      for (int j = 0; j < r; ++j) {
        w(col, j) = w(col, j) / p;
        inv(col, j) = inv(col, j) / p;
      }
      for (int i = 0; i < r; ++i) {
        if (i == col) continue;
        T f = w(i, col);
        if (f == T(0)) continue;
        for (int j = 0; j < r; ++j) {
          w(i, j) = w(i, j) - f * w(col, j);
          inv(i, j) = inv(i, j) - f * inv(col, j);
        }
      }
    }
    return inv;
  }
};

// Incremental echelon basis of a span (exact field).  Each stored row keeps a
// distinct leading index, so membership reduction is a single pass.
template <class T>
struct EchelonBasis {
  std::vector<std::vector<T>> rows;

  static std::size_t leading(const std::vector<T>& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i] == T(0)) ++i;
    return i;
  }

  // Adds v to the span; returns true if it was independent.
  bool add(std::vector<T> v) {
    for (const auto& b : rows) {
      std::size_t lead = leading(b);
      if (lead < v.size() && !(v[lead] == T(0))) {
        T f = v[lead] / b[lead];
        for (std::size_t j = lead; j < v.size(); ++j)
          v[j] = v[j] - f * b[j];
      }
    }
    if (leading(v) == v.size()) return false;
    rows.push_back(std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

}  // namespace nilmin
