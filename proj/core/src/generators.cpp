#include "lific/generators.hpp"

#include <algorithm>

namespace lific {

Scalar random_scalar(Rng& rng, Backend b, int range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 3);
  if (b == Backend::Float) return Scalar::from_double(static_cast<double>(num(rng)) / static_cast<double>(den(rng)));
  Scalar re = Scalar::rational(num(rng), den(rng));
  if (b == Backend::Rational) return re;
  return Scalar::gaussian(re.re(), Scalar::rational(num(rng), den(rng)).re());
}

Mat<Scalar> random_matrix(Rng& rng, size_t rows, size_t cols, Backend b, int range) {
  Mat<Scalar> m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, b, range);
  return m;
}

MatrixPolynomial random_polynomial(Rng& rng, size_t n, int k, Backend b, int range) {
  MatrixPolynomial p(n, n, k);
  for (int j = 0; j <= k; ++j) p[j] = random_matrix(rng, n, n, b, range);
  return p;
}

MatrixPolynomial random_structured(Rng& rng, const StructureTag& tag, size_t n, int k, Backend b, int range) {
  MatrixPolynomial q = random_polynomial(rng, n, k, b, range);
  MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
  return scaled(q + star(mobius(A, q, tag.sign()), tag.star), Scalar::rational(1, 2));
}

MatrixPolynomial random_regular_structured(Rng& rng, const StructureTag& tag, size_t n, int k, Backend b,
                                           int attempts) {
  for (int a = 0; a < attempts; ++a) {
    MatrixPolynomial p = random_structured(rng, tag, n, k, b);
    if (!det_poly(p).is_zero()) return p;
  }
  throw Error(ErrorKind::NotSingular, "no regular " + tag.name() + " polynomial found for this size and grade");
}

MatrixPolynomial tagged_polynomial(const StructureTag& tag, int k) {
  MatrixPolynomial p(1, 1, k);
  bool conj = tag.star == StarFlavor::ConjTranspose;
  for (int j = 0; j <= k; ++j) {
    int pj = tag.pi(j, k), sj = tag.sigma(j);
    Scalar& c = p[j](0, 0);
    if (pj == j) {
      // star(c) = sj c: real or purely imaginary
      if (sj == 1)
        c = Scalar(j + 1);
      else if (conj)
        c = Scalar::gaussian(0, j + 1);
    } else if (j < pj) {
      c = conj ? Scalar::gaussian(j + 1, k + 1) : Scalar(j + 1);
      p[pj](0, 0) = Scalar(sj) * star_elem(c, tag.star);
    }
  }
  return p;
}

SingularInstance singular_structured(Rng& rng, const StructureTag& tag, const std::vector<int>& degrees, int k,
                                     Backend b) {
  if (degrees.empty()) throw Error(ErrorKind::ShapeMismatch, "need at least one block");
  int beta = *std::max_element(degrees.begin(), degrees.end());
  int gD = k - 2 * beta;
  if (gD < 0) throw Error(ErrorKind::GradeTooSmall, "grade too small for the requested indices");
  size_t r = degrees.size();
  MatrixPolynomial B(r, 2 * r, beta);
  for (size_t i = 0; i < r; ++i) {
    B[degrees[i]](i, 2 * i) = Scalar(1);
    B[0](i, 2 * i + 1) += Scalar(1);
  }
  MatrixPolynomial D = random_regular_structured(rng, tag, r, gD, b);
  MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
  SingularInstance s;
  s.P = mul(mul(star(mobius(A, B, 1), tag.star), D), B);
  s.right_indices = degrees;
  std::sort(s.right_indices.begin(), s.right_indices.end());
  s.left_indices = s.right_indices;
  return s;
}

}  // namespace lific
