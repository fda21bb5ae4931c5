#include "support.hpp"

using namespace lt;

TEST_CASE("d = 0 gives L = M") {
  Rng rng(61);
  StructureTag tag{StructureKind::Symmetric, StarFlavor::Transpose};
  MatrixPolynomial p = random_structured(rng, tag, 2, 2, Backend::Rational);
  LificationResult r = build_structured(p, tag, 2, find_plan(tag, 0, 2, "sparse"));
  CHECK(r.L.base == p);
  CHECK(r.d == 0);
}

TEST_CASE("structured output for every structure") {
  Rng rng(62);
  for (const StructureTag& tag : all_tags())
    for (int d = 0; d <= 3; ++d)
      for (int ell = 1; ell <= 3; ++ell)
        for (size_t n : {1u, 2u}) {
          int k = (2 * d + 1) * ell;
          MatrixPolynomial p = random_structured(rng, tag, n, k, backend_for(tag));
          LificationResult r = build_structured(p, tag, ell, find_plan(tag, d, ell, "sparse"));
          CAPTURE(tag.name());
          CAPTURE(d);
          CAPTURE(ell);
          MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
          CHECK(mobius(A, r.L.base, tag.sign()) == star(r.L.base, tag.star));
          CHECK(r.L.base.rows * static_cast<size_t>(ell) == n * static_cast<size_t>(k));
          Recovery rec = recover_P(r);
          CHECK(rec.P == p);
          size_t m = (static_cast<size_t>(d) + 1) * n;
          BlockPolynomial top = make_block(r.L.base.block(0, 0, m, m), n);
          CHECK(block_census(r.L) == block_census(top) + 4 * static_cast<size_t>(d));
        }
}

TEST_CASE("recovery signs follow the structure") {
  Rng rng(63);
  StructureTag odd{StructureKind::Odd, StarFlavor::Transpose};
  MatrixPolynomial p = random_structured(rng, odd, 1, 10, Backend::Rational);
  LificationResult r = build_structured(p, odd, 2, find_plan(odd, 2, 2, "grade10-m2"));
  MobiusMatrix A = MobiusMatrix::canonical(odd.matrix());
  size_t m = 3;
  MatrixPolynomial mt = r.L.base.block(0, 0, m, m);
  Recovery rec = recover_P(mt, A, -1, 2, 2, 1);
  CHECK(rec.P == p);
  CHECK(rec.sign == -1);
  // The raw triple product is -P: (M_A[-Lambda]^T (x) I) M (Lambda (x) I).
  MatrixPolynomial lam = substitute_power(build_Lambda(2), 2);
  MatrixPolynomial left = transpose(mobius(A, lam, -1));
  CHECK(mul(mul(left, mt), lam) == scaled(p, Scalar(-1)));
}

TEST_CASE("symmetrization fixes structured input") {
  Rng rng(64);
  for (const StructureTag& tag : all_tags()) {
    MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
    MatrixPolynomial m = random_polynomial(rng, 3, 2, backend_for(tag));
    MatrixPolynomial s = symmetrize(m, A, tag.sign(), tag.star);
    CHECK(is_ma_structured(s, A, tag.sign(), tag.star));
    CHECK(symmetrize(s, A, tag.sign(), tag.star) == s);
  }
  CHECK_THROWS_AS(symmetrize(random_polynomial(rng, 1, 1, Backend::Rational), MobiusMatrix::cayley(1), 1,
                             StarFlavor::Transpose),
                  Error);
}

TEST_CASE("grade-10 examples render with halves") {
  StructureTag sym{StructureKind::Symmetric, StarFlavor::ConjTranspose};
  LificationResult s = build_structured(tagged_polynomial(sym, 10), sym, 2, find_plan(sym, 2, 2, "grade10-m1"));
  CHECK(s.L.render(0, 1) == "(P6+λP7+λ²P8)/2");
  CHECK(s.L.render(1, 0) == "(P6+λP7+λ²P8)/2");
  CHECK(s.L.render(0, 3) == "-I");
  CHECK(s.L.render(1, 3) == "λ²I");
  StructureTag odd{StructureKind::Odd, StarFlavor::ConjTranspose};
  LificationResult o = build_structured(tagged_polynomial(odd, 10), odd, 2, find_plan(odd, 2, 2, "grade10-m2"));
  CHECK(o.L.render(0, 2) == "P4/2");
  CHECK(o.L.render(0, 3) == "I");
  CHECK(o.L.render(1, 3) == "-λ²I");
}

TEST_CASE("grade-14 sparse palindromic quadratification") {
  StructureTag pal{StructureKind::Palindromic, StarFlavor::ConjTranspose};
  MatrixPolynomial p = tagged_polynomial(pal, 14);
  LificationResult r = build_structured(p, pal, 2, find_plan(pal, 3, 2, "grade14-m5"));
  CHECK(sparsity_census(r.L, 3, 2, pal).count == 19);
  CHECK(r.L.render(0, 1) == "λP5+λ²P6");
  CHECK(r.L.render(0, 3) == "P0+λP1+λ²P2/2");
  CHECK(r.L.render(1, 3) == "P2/2+λP3+λ²P4");
  CHECK(r.L.render(3, 0) == "P12/2+λP13+λ²P14");
  CHECK(r.L.render(3, 1) == "P10+λP11+λ²P12/2");
  CHECK(r.L.render(2, 2) == "λP7");
  CHECK(rescan(r.L, p));
}

TEST_CASE("unstructured input") {
  Rng rng(65);
  StructureTag tag{StructureKind::Symmetric, StarFlavor::Transpose};
  MatrixPolynomial p = random_polynomial(rng, 2, 3, Backend::Rational);
  REQUIRE_FALSE(check_structure(p, tag));
  try {
    build_structured(p, tag, 1, find_plan(tag, 1, 1, "sparse"));
    FAIL("expected structure failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StructureCheckFailed);
  }
  LificationResult r = build_structured(p, tag, 1, find_plan(tag, 1, 1, "sparse"), {true});
  CHECK_FALSE(r.warnings.empty());
  MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
  MatrixPolynomial qsym = scaled(p + star(mobius(A, p), tag.star), q(1, 2));
  CHECK(recover_P(r).P == qsym);
  CHECK(certify_lification(r.L, qsym, 1, 3).is_strong);
}

TEST_CASE("grade and shape errors") {
  CHECK(block_kronecker_d(15, 3) == 2);
  CHECK_THROWS_AS(block_kronecker_d(4, 2), Error);
  CHECK_THROWS_AS(block_kronecker_d(12, 3), Error);
  Rng rng(66);
  StructureTag tag{StructureKind::Symmetric, StarFlavor::Transpose};
  MatrixPolynomial p = random_structured(rng, tag, 1, 4, Backend::Rational);
  CHECK_THROWS_AS(build_structured(p, tag, 2, find_plan(tag, 1, 2, "sparse")), Error);
}

TEST_CASE("Frobenius pencils") {
  MatrixPolynomial lin = poly({{{1, 2}, {3, 4}}, {{5, 6}, {7, 8}}});
  CHECK(frobenius_pencil(lin, 1).base == lin);
  MatrixPolynomial cubic = poly({{{4}}, {{3}}, {{2}}, {{7}}});
  CHECK(frobenius_pencil(cubic, 1).base == poly({{{2, 3, 4}, {-1, 0, 0}, {0, -1, 0}}, {{7, 0, 0}, {0, 1, 0}, {0, 0, 1}}}));
  Rng rng(67);
  for (int it = 0; it < 10; ++it) {
    MatrixPolynomial p = random_polynomial(rng, 2, 3, Backend::Rational);
    ScalarPoly dp = det_poly(p), df = det_poly(frobenius_pencil(p, 1).base);
    CHECK((df == dp || df == -dp));
    CHECK(frobenius_pencil(p, 2).base == block_transpose(frobenius_pencil(p, 1).base, 2));
  }
}

TEST_CASE("palindromic quartic quadratification") {
  Rng rng(68);
  for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose}) {
    StructureTag tag{StructureKind::Palindromic, f};
    MatrixPolynomial p = random_regular_structured(rng, tag, 2, 4, backend_for(tag));
    BlockPolynomial l = palindromic_quartic_quadratification(p, f);
    CHECK(star(l.base, f) == rev(l.base, 2));
    CHECK(certify_lification(l, p, 2, 4).is_strong);
  }
  // Works for unstructured quartics too.
  MatrixPolynomial g = random_square_regular(rng, 2, 4, Backend::Rational);
  CHECK(certify_lification(palindromic_quartic_quadratification(g), g, 2, 4).is_strong);
}

TEST_CASE("Cayley counterexample") {
  Rng rng(69);
  StructureTag pal{StructureKind::Palindromic, StarFlavor::Transpose};
  StructureTag even{StructureKind::Even, StarFlavor::Transpose};
  MatrixPolynomial p = random_regular_structured(rng, pal, 2, 3, Backend::Rational);
  CayleyExample ex = cayley_counterexample(p);
  CHECK(ex.Q == cayley(p, 1));
  CHECK(check_structure(ex.Q, even));
  CHECK(ex.LQ.base == cayley(ex.LP.base, 1));
  CHECK(certify_lification(ex.LQ, ex.Q, 1, 3).is_strong);
  CHECK(rescan(ex.LQ, ex.Q));
  CHECK(ex.LQ.symbol == "Q");
}

TEST_CASE("cubification with invertible blocks") {
  Rng rng(70);
  for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose}) {
    StructureTag tag{StructureKind::Symmetric, f};
    MatrixPolynomial p = random_regular_structured(rng, tag, 1, 21, backend_for(tag));
    Mat<Scalar> X(1, 1), Y(1, 1);
    X(0, 0) = Scalar(3);
    Y(0, 0) = q(1, 2);
    GeneralBmb g = invertible_blocks_cubification(p, X, Y, f);
    CHECK(g.recovered == p);
    CHECK(check_structure(g.result.L.base, tag));
    CHECK(certify_lification(g.result.L, p, 3, 21, {false, true, {}}).is_strong);
  }
  Mat<Scalar> Z(1, 1);
  StructureTag tag{StructureKind::Symmetric, StarFlavor::Transpose};
  MatrixPolynomial p = random_structured(rng, tag, 1, 21, Backend::Rational);
  CHECK_THROWS_AS(invertible_blocks_cubification(p, Z, Z, StarFlavor::Transpose), Error);
}

TEST_CASE("support search") {
  StructureTag sym{StructureKind::Symmetric, StarFlavor::Transpose};
  for (int d = 1; d <= 2; ++d) {
    SupportSearch s = search_sparse_supports(sym, d, 2);
    CHECK(s.min_total == static_cast<size_t>(7 * d + 1));
    CHECK(s.realized == s.minimal_supports);
    CHECK(s.minimal_supports >= 1);
  }
}
