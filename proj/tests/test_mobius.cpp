#include "mobius_props.hpp"
#include "support.hpp"

using namespace lt;

TEST_CASE("canonical transforms") {
  Rng rng(21);
  MobiusMatrix A1 = MobiusMatrix::canonical(CanonicalMatrix::A1);
  MobiusMatrix A2 = MobiusMatrix::canonical(CanonicalMatrix::A2);
  MobiusMatrix A3 = MobiusMatrix::canonical(CanonicalMatrix::A3);
  for (int it = 0; it < 30; ++it) {
    MatrixPolynomial p = random_polynomial(rng, 2, 4, Backend::Gaussian);
    MatrixPolynomial c = random_polynomial(rng, 2, 0, Backend::Gaussian);
    CHECK(mobius(A2, c) == c);
    CHECK(mobius(A3, c) == c);
    CHECK(mobius(A1, p) == p);
    CHECK(mobius(A3, p) == rev(p, 4));
    // P(-lambda): coefficient j picks up (-1)^j.
    MatrixPolynomial alt = p;
    for (int j = 1; j <= 4; j += 2) alt[j] = p[j].scaled(Scalar(-1));
    CHECK(mobius(A2, p) == alt);
    CHECK(mobius(A3, p, -1) == scaled(rev(p, 4), Scalar(-1)));
  }
  CHECK(A1.is_coninvolutory());
  CHECK(A2.is_coninvolutory());
  CHECK(A3.is_coninvolutory());
  CHECK_FALSE(MobiusMatrix::cayley(1).is_coninvolutory());
  CHECK_THROWS_AS(mobius(MobiusMatrix{1, 1, 1, 1}, random_polynomial(rng, 1, 1, Backend::Rational)), Error);
  CHECK(MobiusMatrix::named("A3") == A3);
}

TEST_CASE("Cayley transform of a cubic") {
  Rng rng(22);
  MatrixPolynomial p = random_polynomial(rng, 2, 3, Backend::Rational);
  MatrixPolynomial q = cayley(p, 1);
  // Q(lambda) = (1-lambda)^3 P((1+lambda)/(1-lambda)); Q_0 = P(1).
  CHECK(q[0] == p[0] + p[1] + p[2] + p[3]);
  CHECK(q[3] == p[0].scaled(Scalar(-1)) + p[1] - p[2] + p[3]);
  Scalar x(3);
  Scalar y = (Scalar(1) + x) / (Scalar(1) - x);
  Scalar w = (Scalar(1) - x) * (Scalar(1) - x) * (Scalar(1) - x);
  CHECK(eval(q, x) == eval(p, y).scaled(w));
  MatrixPolynomial c = random_polynomial(rng, 2, 0, Backend::Rational);
  CHECK(cayley(c, 1) == c);
}

TEST_CASE("Moebius image of a palindromic polynomial under C_{+1} is even") {
  Rng rng(23);
  for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose}) {
    StructureTag pal{StructureKind::Palindromic, f}, even{StructureKind::Even, f};
    for (int k : {1, 2, 3, 4}) {
      MatrixPolynomial p = random_structured(rng, pal, 2, k, backend_for(pal));
      REQUIRE(check_structure(p, pal));
      CHECK(check_structure(cayley(p, 1), even));
    }
  }
}

TEST_CASE("Moebius properties (a)-(l) on random instances") {
  Rng rng(24);
  for (char prop : mobius_props::kProperties) {
    CAPTURE(prop);
    int failures = 0;
    for (int it = 0; it < 30; ++it) failures += mobius_props::check(prop, rng) ? 0 : 1;
    CHECK(failures == 0);
  }
}

TEST_CASE("Moebius transform of a block polynomial keeps registers consistent") {
  Rng rng(25);
  StructureTag tag{StructureKind::Palindromic, StarFlavor::Transpose};
  MatrixPolynomial p = random_structured(rng, tag, 1, 3, Backend::Rational);
  BlockPolynomial f = frobenius_pencil(p, 1);
  BlockPolynomial g = mobius(MobiusMatrix::cayley(1), f);
  CHECK(g.base == cayley(f.base, 1));
  for (size_t s = 0; s < f.block_rows(); ++s)
    for (size_t t = 0; t < f.block_cols(); ++t)
      CHECK(g.block(s, t) == cayley(f.block(s, t), 1));
}
