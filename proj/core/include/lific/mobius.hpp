#pragma once

#include <string>
#include <vector>

#include "lific/matpoly.hpp"

namespace lific {

struct MobiusMatrix {
  Scalar a{1}, b{0}, c{0}, d{1};

  static MobiusMatrix canonical(CanonicalMatrix m);
  static MobiusMatrix cayley(int which);  // +1 or -1
  static MobiusMatrix named(const std::string& name);  // A1|A2|A3|cayley+1|cayley-1

  Scalar det() const { return a * d - b * c; }
  bool is_coninvolutory() const;
  MobiusMatrix conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
  MobiusMatrix scaled(const Scalar& s) const { return {a * s, b * s, c * s, d * s}; }
  friend MobiusMatrix operator*(const MobiusMatrix& x, const MobiusMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const MobiusMatrix& x, const MobiusMatrix& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Scalar weights w_j(lambda) = (a lambda + b)^j (c lambda + d)^(k-j), j = 0..k.
std::vector<ScalarPoly> mobius_weights(const MobiusMatrix& A, int k);

// M_A[sign * P] at the declared grade of P.
template <class T>
PolyMat<T> mobius(const MobiusMatrix& A, const PolyMat<T>& p, int sign = 1) {
  if (A.det().is_zero()) throw Error(ErrorKind::SingularMobiusMatrix, "ad - bc = 0");
  int k = p.grade;
  std::vector<ScalarPoly> w = mobius_weights(A, k);
  PolyMat<T> r(p.rows, p.cols, k);
  for (int j = 0; j <= k; ++j) {
    if (p[j].is_zero()) continue;
    for (int i = 0; i <= w[static_cast<size_t>(j)].degree(); ++i) {
      Scalar c = w[static_cast<size_t>(j)].coeff(i);
      if (c.is_zero()) continue;
      if (sign < 0) c = -c;
      r[i] += p[j].scaled(c);
    }
  }
  return r;
}

BlockPolynomial mobius(const MobiusMatrix& A, const BlockPolynomial& p, int sign = 1);

// Cayley transforms: which = +1 gives (1-lambda)^k P((1+lambda)/(1-lambda)).
template <class T>
PolyMat<T> cayley(const PolyMat<T>& p, int which) {
  return mobius(MobiusMatrix::cayley(which), p, 1);
}
BlockPolynomial cayley(const BlockPolynomial& p, int which);

}  // namespace lific

namespace lific {

// M_A[sign P] = P^star at the declared grade.
template <class T>
bool is_ma_structured(const PolyMat<T>& p, const MobiusMatrix& A, int sign, StarFlavor flavor) {
  if (p.rows != p.cols) return false;
  return mobius(A, p, sign) == star(p, flavor);
}

bool check_structure(const MatrixPolynomial& p, const StructureTag& tag);

}  // namespace lific
