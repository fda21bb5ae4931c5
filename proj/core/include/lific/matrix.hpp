#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lific/error.hpp"
#include "lific/structure.hpp"

namespace lific {

// Dense row-major matrix over a ring element type T (Scalar or Form).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = lift<T>(Scalar(1));
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!elem_is_zero(x)) return false;
    return true;
  }

  Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Mat b(nr, nc);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(size_t r0, size_t c0, const Mat& b) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  void add_block(size_t r0, size_t c0, const Mat& b) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) += b(i, j);
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Mat star(StarFlavor f) const {
    Mat t(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) t(j, i) = star_elem((*this)(i, j), f);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat scaled(const Scalar& c) const {
    Mat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = scale_elem(a_[k], c);
    return m;
  }
  Mat operator-() const { return scaled(Scalar(-1)); }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw Error(ErrorKind::DimensionMismatch, "matrix product inner dimensions");
    Mat m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
      for (size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (elem_is_zero(x)) continue;
        for (size_t j = 0; j < b.c_; ++j)
          if (!elem_is_zero(b(k, j))) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  const std::vector<T>& data() const { return a_; }

 private:
  void check_same(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

// Matrix polynomial sum_{j=0}^{grade} lambda^j C_j with an explicit grade.
template <class T>
struct PolyMat {
  size_t rows = 0, cols = 0;
  int grade = 0;
  std::vector<Mat<T>> coeffs;

  PolyMat() = default;
  PolyMat(size_t r, size_t c, int g) : rows(r), cols(c), grade(g) {
    if (g < 0) throw Error(ErrorKind::GradeTooSmall, "negative grade");
    coeffs.assign(static_cast<size_t>(g) + 1, Mat<T>(r, c));
  }

  Mat<T>& operator[](int j) { return coeffs[static_cast<size_t>(j)]; }
  const Mat<T>& operator[](int j) const { return coeffs[static_cast<size_t>(j)]; }

  // Largest j with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const {
    for (int j = grade; j >= 0; --j)
      if (!coeffs[static_cast<size_t>(j)].is_zero()) return j;
    return -1;
  }
  bool is_zero() const { return degree() < 0; }

  // Entry (i,j) as the coefficient list of a scalar polynomial.
  std::vector<T> entry(size_t i, size_t j) const {
    std::vector<T> e;
    for (const auto& c : coeffs) e.push_back(c(i, j));
    return e;
  }

  PolyMat block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    PolyMat b(nr, nc, grade);
    for (int j = 0; j <= grade; ++j) b[j] = (*this)[j].block(r0, c0, nr, nc);
    return b;
  }
  // Copies b into the region; b's grade must not exceed ours.
  void set_block(size_t r0, size_t c0, const PolyMat& b) {
    if (b.degree() > grade) throw Error(ErrorKind::GradeTooSmall, "block degree exceeds grade");
    for (int j = 0; j <= grade; ++j) {
      if (j <= b.grade)
        (*this)[j].set_block(r0, c0, b[j]);
      else
        (*this)[j].set_block(r0, c0, Mat<T>(b.rows, b.cols));
    }
  }

  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.grade == b.grade && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const PolyMat& a, const PolyMat& b) { return !(a == b); }
};

template <class T>
PolyMat<T> with_grade(const PolyMat<T>& p, int g) {
  if (p.degree() > g) throw Error(ErrorKind::GradeTooSmall, "grade below degree");
  PolyMat<T> q(p.rows, p.cols, g);
  for (int j = 0; j <= std::min(g, p.grade); ++j) q[j] = p[j];
  return q;
}

template <class T>
PolyMat<T> operator+(const PolyMat<T>& a, const PolyMat<T>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorKind::DimensionMismatch, "sum shapes differ");
  PolyMat<T> r(a.rows, a.cols, std::max(a.grade, b.grade));
  for (int j = 0; j <= a.grade; ++j) r[j] += a[j];
  for (int j = 0; j <= b.grade; ++j) r[j] += b[j];
  return r;
}

template <class T>
PolyMat<T> operator-(const PolyMat<T>& a, const PolyMat<T>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error(ErrorKind::DimensionMismatch, "difference shapes differ");
  PolyMat<T> r(a.rows, a.cols, std::max(a.grade, b.grade));
  for (int j = 0; j <= a.grade; ++j) r[j] += a[j];
  for (int j = 0; j <= b.grade; ++j) r[j] -= b[j];
  return r;
}

template <class T>
PolyMat<T> scaled(const PolyMat<T>& a, const Scalar& c) {
  PolyMat<T> r = a;
  for (auto& m : r.coeffs) m = m.scaled(c);
  return r;
}

template <class T>
PolyMat<T> operator-(const PolyMat<T>& a) {
  return scaled(a, Scalar(-1));
}

// Product as a polynomial of the given grade (>= sum of grades).
template <class T>
PolyMat<T> mul(const PolyMat<T>& p, const PolyMat<T>& q, int result_grade) {
  if (p.cols != q.rows) throw Error(ErrorKind::DimensionMismatch, "product inner dimensions");
  if (result_grade < p.grade + q.grade) throw Error(ErrorKind::GradeTooSmall, "product grade below sum of grades");
  PolyMat<T> r(p.rows, q.cols, result_grade);
  for (int i = 0; i <= p.grade; ++i) {
    if (p[i].is_zero()) continue;
    for (int j = 0; j <= q.grade; ++j) {
      if (q[j].is_zero()) continue;
      r[i + j] += p[i] * q[j];
    }
  }
  return r;
}

template <class T>
PolyMat<T> mul(const PolyMat<T>& p, const PolyMat<T>& q) {
  return mul(p, q, p.grade + q.grade);
}

template <class T>
PolyMat<T> star(const PolyMat<T>& p, StarFlavor f) {
  PolyMat<T> r(p.cols, p.rows, p.grade);
  for (int j = 0; j <= p.grade; ++j) r[j] = p[j].star(f);
  return r;
}

template <class T>
PolyMat<T> transpose(const PolyMat<T>& p) {
  PolyMat<T> r(p.cols, p.rows, p.grade);
  for (int j = 0; j <= p.grade; ++j) r[j] = p[j].transpose();
  return r;
}

// rev_k P(lambda) = sum_j lambda^j P_{k-j}.
template <class T>
PolyMat<T> rev(const PolyMat<T>& p, int k) {
  if (k < p.degree()) throw Error(ErrorKind::GradeTooSmall, "rev grade below degree");
  PolyMat<T> r(p.rows, p.cols, k);
  for (int j = 0; j <= k; ++j) {
    int src = k - j;
    if (src <= p.grade) r[j] = p[src];
  }
  return r;
}

template <class T>
PolyMat<T> rev(const PolyMat<T>& p) {
  return rev(p, p.grade);
}

// lambda -> lambda^ell; grade becomes grade*ell.
template <class T>
PolyMat<T> substitute_power(const PolyMat<T>& p, int ell) {
  if (ell < 1) throw Error(ErrorKind::GradeTooSmall, "substitute_power needs ell >= 1");
  PolyMat<T> r(p.rows, p.cols, p.grade * ell);
  for (int j = 0; j <= p.grade; ++j) r[j * ell] = p[j];
  return r;
}

// A (x) I_n applied coefficient-wise, with entries lifted into T.
template <class T>
PolyMat<T> kron_identity(const PolyMat<Scalar>& a, size_t n) {
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "kron needs n >= 1");
  PolyMat<T> r(a.rows * n, a.cols * n, a.grade);
  for (int j = 0; j <= a.grade; ++j)
    for (size_t s = 0; s < a.rows; ++s)
      for (size_t t = 0; t < a.cols; ++t) {
        const Scalar& x = a[j](s, t);
        if (x.is_zero()) continue;
        for (size_t q = 0; q < n; ++q) r[j](s * n + q, t * n + q) = lift<T>(x);
      }
  return r;
}

// Block transpose with blocks of size n (F_2 = F_1^B).
template <class T>
PolyMat<T> block_transpose(const PolyMat<T>& p, size_t n) {
  size_t br = p.rows / n, bc = p.cols / n;
  PolyMat<T> r(bc * n, br * n, p.grade);
  for (int j = 0; j <= p.grade; ++j)
    for (size_t s = 0; s < br; ++s)
      for (size_t t = 0; t < bc; ++t) r[j].set_block(t * n, s * n, p[j].block(s * n, t * n, n, n));
  return r;
}

}  // namespace lific
