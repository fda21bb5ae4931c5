#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "lific/conditions.hpp"
#include "lific/generators.hpp"
#include "lific/io.hpp"
#include "lific/lification.hpp"
#include "lific/linalg.hpp"
#include "lific/matpoly.hpp"
#include "lific/minimal_bases.hpp"
#include "lific/mobius.hpp"
#include "lific/refuter.hpp"
#include "lific/verification.hpp"

namespace lt {

using namespace lific;

inline const std::vector<StructureKind> kAllKinds = {
    StructureKind::Symmetric,   StructureKind::SkewSymmetric, StructureKind::Even,
    StructureKind::Odd,         StructureKind::Palindromic,   StructureKind::AntiPalindromic};

inline std::vector<StructureTag> all_tags() {
  std::vector<StructureTag> out;
  for (StructureKind k : kAllKinds)
    for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose}) out.push_back({k, f});
  return out;
}

inline Backend backend_for(const StructureTag& tag) {
  return tag.star == StarFlavor::ConjTranspose ? Backend::Gaussian : Backend::Rational;
}

inline Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }
inline Scalar gi(long re, long im) { return Scalar::gaussian(re, im); }

// coeffs[j][r][c]
inline MatrixPolynomial poly(const std::vector<std::vector<std::vector<long>>>& coeffs) {
  size_t r = coeffs[0].size(), c = r ? coeffs[0][0].size() : 0;
  MatrixPolynomial p(r, c, static_cast<int>(coeffs.size()) - 1);
  for (size_t j = 0; j < coeffs.size(); ++j)
    for (size_t i = 0; i < r; ++i)
      for (size_t k = 0; k < c; ++k) p[static_cast<int>(j)](i, k) = Scalar(coeffs[j][i][k]);
  return p;
}

// Scalar polynomial from ascending coefficients.
inline ScalarPoly sp(const std::vector<long>& c) {
  std::vector<Scalar> v;
  for (long x : c) v.emplace_back(x);
  return ScalarPoly(v);
}

inline MatrixPolynomial identity_poly(size_t n, int grade = 0) {
  MatrixPolynomial p(n, n, grade);
  p[0] = Mat<Scalar>::identity(n);
  return p;
}

// Horner evaluation, independent of lific::eval.
inline Mat<Scalar> horner(const MatrixPolynomial& p, const Scalar& x) {
  Mat<Scalar> acc(p.rows, p.cols);
  for (int j = p.grade; j >= 0; --j) acc = acc.scaled(x) + p[j];
  return acc;
}

// Coefficient-wise product with explicit loops over entries.
inline MatrixPolynomial schoolbook(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  MatrixPolynomial r(a.rows, b.cols, a.grade + b.grade);
  for (int i = 0; i <= a.grade; ++i)
    for (int j = 0; j <= b.grade; ++j)
      for (size_t s = 0; s < a.rows; ++s)
        for (size_t t = 0; t < b.cols; ++t) {
          Scalar acc = r[i + j](s, t);
          for (size_t m = 0; m < a.cols; ++m) acc += a[i](s, m) * b[j](m, t);
          r[i + j](s, t) = acc;
        }
  return r;
}

inline MatrixPolynomial random_square_regular(Rng& rng, size_t n, int k, Backend b) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    MatrixPolynomial p = random_polynomial(rng, n, k, b);
    if (!det_poly(p).is_zero()) return p;
  }
  FAIL("no regular polynomial drawn");
  return {};
}

// Kronecker-with-identity computed entry by entry.
inline MatrixPolynomial kron_oracle(const MatrixPolynomial& a, size_t n) {
  MatrixPolynomial r(a.rows * n, a.cols * n, a.grade);
  for (int j = 0; j <= a.grade; ++j)
    for (size_t s = 0; s < a.rows; ++s)
      for (size_t t = 0; t < a.cols; ++t)
        for (size_t u = 0; u < n; ++u) r[j](s * n + u, t * n + u) = a[j](s, t);
  return r;
}

}  // namespace lt
