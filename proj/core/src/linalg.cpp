#include "lific/linalg.hpp"

namespace lific {

Scalar determinant(Mat<Scalar> a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  size_t n = a.rows();
  Scalar det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (size_t j = c + 1; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<size_t> rref(Mat<Scalar>& a) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(Mat<Scalar> a) {
  // forward elimination only
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = c; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (size_t j = c + 1; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      a(i, c) = Scalar();
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<Scalar>> nullspace(const Mat<Scalar>& m) {
  Mat<Scalar> a = m;
  std::vector<size_t> piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(a.cols());
    v[f] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat<Scalar> inverse(const Mat<Scalar>& m) {
  size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  Mat<Scalar> aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat<Scalar>::identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] >= n) throw Error(ErrorKind::DivisionByZero, "singular matrix");
  return aug.block(0, n, n, n);
}

}  // namespace lific
