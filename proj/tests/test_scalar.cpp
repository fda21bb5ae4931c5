#include "support.hpp"

using namespace lt;

TEST_CASE("scalar arithmetic examples") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(gi(1, 1) * gi(1, -1) == Scalar(2));
  Scalar z = Scalar::gaussian(mpq_class(3, 4), mpq_class(2, 5));
  CHECK(z.conj() == Scalar::gaussian(mpq_class(3, 4), mpq_class(-2, 5)));
  CHECK(q(6, 4) == q(3, 2));
  CHECK(gi(0, 1) * gi(0, 1) == Scalar(-1));
  CHECK(gi(1, 0) == Scalar(1));
}

TEST_CASE("field axioms on random exact triples") {
  Rng rng(11);
  for (Backend b : {Backend::Rational, Backend::Gaussian}) {
    for (int it = 0; it < 300; ++it) {
      Scalar x = random_scalar(rng, b), y = random_scalar(rng, b), z = random_scalar(rng, b);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - x == Scalar());
      if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
      if (!y.is_zero()) CHECK((x / y) * y == x);
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
      CHECK(x.conj().conj() == x);
    }
  }
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  try {
    (void)Scalar(0).inverse();
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("scalar text round trip") {
  Rng rng(5);
  for (Backend b : {Backend::Rational, Backend::Gaussian}) {
    for (int it = 0; it < 100; ++it) {
      Scalar x = random_scalar(rng, b);
      CHECK(Scalar::parse(x.to_string(), Backend::Gaussian) == x);
    }
  }
  CHECK(Scalar::parse("-3/4", Backend::Rational) == q(-3, 4));
  CHECK_THROWS_AS(Scalar::parse("abc", Backend::Rational), Error);
}

TEST_CASE("rational values embed in the Gaussian backend") {
  CHECK(q(1, 2) + gi(0, 1) == Scalar::gaussian(mpq_class(1, 2), mpq_class(1)));
  CHECK((q(3) * gi(1, 1)).is_real() == false);
  CHECK(Scalar().is_zero());
}

TEST_CASE("float backend does not mix with exact values") {
  Scalar f = Scalar::from_double(0.5);
  CHECK_FALSE(f.is_exact());
  CHECK((f + Scalar()).to_complex().real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(f + q(1, 3), Error);
}

TEST_CASE("scalar polynomials") {
  ScalarPoly a = sp({-1, 0, 1});  // x^2 - 1
  ScalarPoly b = sp({1, 1});      // x + 1
  ScalarPoly qq, r;
  divmod(a, b, qq, r);
  CHECK(qq == sp({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, sp({-1, 1})) == sp({-1, 1}));
  CHECK(gcd(ScalarPoly(), ScalarPoly()).is_zero());
  CHECK(divides(b, a));
  CHECK_FALSE(divides(sp({2, 1}), a));
  CHECK(a.eval(Scalar(3)) == Scalar(8));
  CHECK(sp({2, 4}).monic() == ScalarPoly({q(1, 2), Scalar(1)}));
  CHECK(sp({1, 2, 3}).reversed(3) == ScalarPoly({Scalar(0), Scalar(3), Scalar(2), Scalar(1)}));

  Rng rng(3);
  for (int it = 0; it < 50; ++it) {
    std::vector<Scalar> c;
    for (int i = 0; i < 4; ++i) c.push_back(random_scalar(rng, Backend::Rational));
    ScalarPoly p(c);
    std::vector<Scalar> xs, ys;
    for (int i = 0; i < 5; ++i) {
      xs.emplace_back(i);
      ys.push_back(p.eval(Scalar(i)));
    }
    CHECK(interpolate(xs, ys) == p);
  }
}

TEST_CASE("float backend does not mix with exact values") {
  Scalar f = Scalar::from_double(0.5);
  CHECK((f + Scalar()).backend() == Backend::Float);
  try {
    (void)(f + Scalar(1));
    FAIL("expected backend mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BackendMismatch);
  }
}
