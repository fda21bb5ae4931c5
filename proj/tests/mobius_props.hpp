#pragma once

// Randomized checks of the Moebius transformation properties (a)-(l).
// Each call draws one instance and returns whether the property holds exactly.

#include <string>

#include "lific/generators.hpp"
#include "lific/linalg.hpp"
#include "lific/minimal_bases.hpp"
#include "lific/mobius.hpp"

namespace lt::mobius_props {

using namespace lific;

inline MobiusMatrix random_mobius(Rng& rng, Backend b) {
  for (;;) {
    MobiusMatrix A{random_scalar(rng, b, 3), random_scalar(rng, b, 3), random_scalar(rng, b, 3),
                   random_scalar(rng, b, 3)};
    if (!A.det().is_zero()) return A;
  }
}

inline Mat<Scalar> random_invertible(Rng& rng, size_t n, Backend b) {
  for (;;) {
    Mat<Scalar> m = random_matrix(rng, n, n, b, 3);
    if (!determinant(m).is_zero()) return m;
  }
}

inline MatrixPolynomial conj_poly(const MatrixPolynomial& p) {
  return transpose(star(p, StarFlavor::ConjTranspose));
}

inline MatrixPolynomial left_mul(const Mat<Scalar>& x, const MatrixPolynomial& p) {
  return mul(constant_polynomial(x), p, p.grade);
}
inline MatrixPolynomial right_mul(const MatrixPolynomial& p, const Mat<Scalar>& x) {
  return mul(p, constant_polynomial(x), p.grade);
}

// X (L_d(lambda^ell) (x) I_n) U and its dual Y (Lambda_d^T(lambda^ell) (x) I_n) U^{-T}.
struct DualInstance {
  MatrixPolynomial K, N;
  int degK = 0, degN = 0;
};

inline DualInstance random_dual_pair(Rng& rng, Backend b) {
  int d = 1 + static_cast<int>(rng() % 2), ell = 1 + static_cast<int>(rng() % 2);
  size_t n = 1 + rng() % 2;
  MatrixPolynomial Ld = kron_identity<Scalar>(substitute_power(build_Ld(d), ell), n);
  MatrixPolynomial Lt = kron_identity<Scalar>(transpose(substitute_power(build_Lambda(d), ell)), n);
  Mat<Scalar> U = random_invertible(rng, (d + 1) * n, b);
  Mat<Scalar> X = random_invertible(rng, d * n, b);
  Mat<Scalar> Y = random_invertible(rng, n, b);
  DualInstance r;
  r.K = left_mul(X, right_mul(Ld, U));
  r.N = left_mul(Y, right_mul(Lt, inverse(U).transpose()));
  r.degK = ell;
  r.degN = d * ell;
  return r;
}

inline bool rows_all(const MinimalBasisCertificate& c, int deg) {
  for (int r : c.row_degrees)
    if (r != deg) return false;
  return true;
}

inline bool check(char prop, Rng& rng) {
  Backend b = (rng() % 2) ? Backend::Gaussian : Backend::Rational;
  size_t m = 1 + rng() % 3, n = 1 + rng() % 3;
  int k = static_cast<int>(rng() % 5);
  MobiusMatrix A = random_mobius(rng, b);
  auto rp = [&](size_t r, size_t c, int g) {
    MatrixPolynomial p(r, c, g);
    for (int j = 0; j <= g; ++j) p[j] = random_matrix(rng, r, c, b, 4);
    return p;
  };
  switch (prop) {
    case 'a': {
      MatrixPolynomial c = rp(m, n, 0);
      return mobius(A, c) == c;
    }
    case 'b': {
      MatrixPolynomial p = rp(m, n, k);
      Scalar beta = random_scalar(rng, b);
      while (beta.is_zero()) beta = random_scalar(rng, b);
      Scalar bk(1);
      for (int i = 0; i < k; ++i) bk *= beta;
      return mobius(A.scaled(beta), p) == scaled(mobius(A, p), bk);
    }
    case 'c': {
      MatrixPolynomial p = rp(m, n, k);
      Scalar beta = random_scalar(rng, b);
      return mobius(A, scaled(p, beta)) == scaled(mobius(A, p), beta);
    }
    case 'd': {
      MatrixPolynomial p = rp(m, n, k), q = rp(m, n, k);
      return mobius(A, p + q) == mobius(A, p) + mobius(A, q);
    }
    case 'e': {
      int k2 = static_cast<int>(rng() % 4);
      size_t r = 1 + rng() % 3;
      MatrixPolynomial p = rp(m, n, k), q = rp(n, r, k2);
      return mobius(A, mul(p, q, k + k2)) == mul(mobius(A, p), mobius(A, q), k + k2);
    }
    case 'f': {
      MatrixPolynomial p = rp(m, n, k);
      size_t t = 1 + rng() % 3;
      return mobius(A, kron_identity<Scalar>(p, t)) == kron_identity<Scalar>(mobius(A, p), t);
    }
    case 'g': {
      MatrixPolynomial p = rp(m, n, k);
      return mobius(A, transpose(p)) == transpose(mobius(A, p));
    }
    case 'h': {
      MobiusMatrix G = random_mobius(rng, Backend::Gaussian);
      b = Backend::Gaussian;
      MatrixPolynomial p = rp(m, n, k);
      MatrixPolynomial lhs = mobius(G, p);
      bool conj_ok = conj_poly(lhs) == mobius(G.conj(), conj_poly(p));
      MatrixPolynomial s = star(lhs, StarFlavor::ConjTranspose);
      bool star_ok = s == mobius(G.conj(), star(p, StarFlavor::ConjTranspose)) &&
                     s == transpose(mobius(G.conj(), conj_poly(p)));
      return conj_ok && star_ok;
    }
    case 'i': {
      size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
      MatrixPolynomial p = rp(rows, cols, k);
      size_t r0 = rng() % rows, c0 = rng() % cols;
      size_t nr = 1 + rng() % (rows - r0), nc = 1 + rng() % (cols - c0);
      return mobius(A, p).block(r0, c0, nr, nc) == mobius(A, p.block(r0, c0, nr, nc));
    }
    case 'j': {
      MobiusMatrix B = random_mobius(rng, b);
      MatrixPolynomial p = rp(m, n, k);
      return mobius(B, mobius(A, p)) == mobius(A * B, p);
    }
    case 'k': {
      DualInstance di = random_dual_pair(rng, b);
      MatrixPolynomial K = with_grade(di.K, di.degK);
      if (!certify_minimal_basis(K).minimal()) return false;
      MinimalBasisCertificate c = certify_minimal_basis(mobius(A, K));
      return c.minimal() && rows_all(c, di.degK);
    }
    case 'l': {
      DualInstance di = random_dual_pair(rng, b);
      MatrixPolynomial K = with_grade(di.K, di.degK), N = with_grade(di.N, di.degN);
      if (!certify_dual_pair(K, N).ok()) return false;
      MatrixPolynomial MK = mobius(A, K), MN = mobius(A, N);
      return certify_dual_pair(MK, MN).ok() && rows_all(certify_minimal_basis(MK), di.degK) &&
             rows_all(certify_minimal_basis(MN), di.degN);
    }
    default:
      return false;
  }
}

inline const std::string kProperties = "abcdefghijkl";

}  // namespace lt::mobius_props
