#include "mobius_props.hpp"
#include "support.hpp"

using namespace lt;

TEST_CASE("L_d and Lambda_d") {
  CHECK(build_Ld(1) == poly({{{-1, 0}}, {{0, 1}}}));
  CHECK(build_Ld(0).rows == 0);
  CHECK(build_Ld(0).cols == 1);
  CHECK(build_Ld(2) == poly({{{-1, 0, 0}, {0, -1, 0}}, {{0, 1, 0}, {0, 0, 1}}}));
  CHECK(build_Lambda(0) == poly({{{1}}}));
  CHECK(build_Lambda(2) == poly({{{0}, {0}, {1}}, {{0}, {1}, {0}}, {{1}, {0}, {0}}}));
  for (int d = 1; d <= 6; ++d) CHECK(mul(build_Ld(d), build_Lambda(d)).is_zero());
}

TEST_CASE("minimal basis certificates") {
  MinimalBasisCertificate c = certify_minimal_basis(build_Ld(2));
  CHECK(c.minimal());
  CHECK(c.row_degrees == std::vector<int>{1, 1});
  MatrixPolynomial diag_lam = poly({{{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}});
  MinimalBasisCertificate bad = certify_minimal_basis(diag_lam);
  CHECK_FALSE(bad.minimal());
  CHECK_FALSE(bad.full_row_rank_everywhere);
  // Row reduced fails: both rows have leading vector (1, 0).
  MatrixPolynomial nrr = poly({{{0, 1}, {1, 0}}, {{1, 0}, {1, 0}}});
  CHECK_FALSE(certify_minimal_basis(nrr).row_reduced);
}

TEST_CASE("reversal keeps constant-row-degree minimal bases and their duality") {
  for (int d = 1; d <= 4; ++d)
    for (int ell = 1; ell <= 3; ++ell) {
      MatrixPolynomial K = substitute_power(build_Ld(d), ell);
      MatrixPolynomial N = transpose(substitute_power(build_Lambda(d), ell));
      CHECK(certify_minimal_basis(rev(K, ell)).minimal());
      CHECK(certify_dual_pair(rev(K, ell), rev(N, d * ell)).ok());
    }
}

TEST_CASE("block-Kronecker dual pairs") {
  for (int d = 1; d <= 3; ++d)
    for (int ell = 1; ell <= 3; ++ell)
      for (size_t n : {1u, 2u}) {
        MatrixPolynomial K = kron_identity<Scalar>(substitute_power(build_Ld(d), ell), n);
        MatrixPolynomial N = kron_identity<Scalar>(transpose(substitute_power(build_Lambda(d), ell)), n);
        DualPairReport r = certify_dual_pair(K, N);
        CHECK(r.ok());
        MinimalBasisCertificate ck = certify_minimal_basis(K), cn = certify_minimal_basis(N);
        for (int x : ck.row_degrees) CHECK(x == ell);
        for (int x : cn.row_degrees) CHECK(x == d * ell);
      }
}

TEST_CASE("dual pair rejects a non-vanishing product") {
  MatrixPolynomial K = build_Ld(1);
  MatrixPolynomial N = poly({{{1, 0}}, {{0, 1}}});
  DualPairReport r = certify_dual_pair(K, N);
  CHECK_FALSE(r.product_vanishes);
  CHECK_FALSE(r.ok());
}

TEST_CASE("closed-form Moebius images of L_d") {
  struct Row {
    CanonicalMatrix m;
    int sign;
  };
  for (Row row : {Row{CanonicalMatrix::A1, 1}, Row{CanonicalMatrix::A1, -1}, Row{CanonicalMatrix::A2, 1},
                  Row{CanonicalMatrix::A2, -1}, Row{CanonicalMatrix::A3, 1}, Row{CanonicalMatrix::A3, -1}})
    for (int d = 1; d <= 3; ++d)
      for (int ell = 1; ell <= 3; ++ell) {
        MobiusMatrix A = MobiusMatrix::canonical(row.m);
        MatrixPolynomial generic = mobius(A, substitute_power(build_Ld(d), ell), row.sign);
        CHECK(mobius_Ld(A, row.sign, d, ell) == generic);
      }
  MatrixPolynomial Ld = substitute_power(build_Ld(2), 3);
  MobiusMatrix A1 = MobiusMatrix::canonical(CanonicalMatrix::A1);
  MobiusMatrix A2 = MobiusMatrix::canonical(CanonicalMatrix::A2);
  MobiusMatrix A3 = MobiusMatrix::canonical(CanonicalMatrix::A3);
  CHECK(mobius_Ld(A1, 1, 2, 3) == Ld);
  // A2 with ell odd: L_d(-lambda^ell).
  MatrixPolynomial neg = Ld;
  neg[3] = Ld[3].scaled(Scalar(-1));
  CHECK(mobius_Ld(A2, 1, 2, 3) == neg);
  CHECK(mobius_Ld(A3, -1, 2, 3) == scaled(rev(Ld, 3), Scalar(-1)));
  CHECK(canonical_of(A3) == CanonicalMatrix::A3);
  CHECK_THROWS_AS(canonical_of(MobiusMatrix::cayley(1)), Error);
}

TEST_CASE("minimal basis of the grade-21 cubification") {
  Rng rng(31);
  StructureTag tag{StructureKind::Symmetric, StarFlavor::Transpose};
  MatrixPolynomial p = random_structured(rng, tag, 1, 21, Backend::Rational);
  Mat<Scalar> X(1, 1), Y(1, 1);
  X(0, 0) = Scalar(2);
  Y(0, 0) = q(-1, 3);
  GeneralBmb g = invertible_blocks_cubification(p, X, Y, tag.star);
  size_t n = 1;
  size_t m = g.result.L.base.rows;
  size_t top = (3 + 1) * n;
  MatrixPolynomial K1 = g.result.L.base.block(top, 0, m - top, top);
  CHECK(certify_dual_pair(with_grade(K1, 3), g.N1).ok());
  CHECK(g.shift_right == 9);
  CHECK(g.shift_left == 9);
  CHECK(g.recovered == p);
}

TEST_CASE("Moebius preserves minimal bases and duality") {
  Rng rng(32);
  for (char prop : {'k', 'l'}) {
    int failures = 0;
    for (int it = 0; it < 20; ++it) failures += mobius_props::check(prop, rng) ? 0 : 1;
    CHECK(failures == 0);
  }
  for (CanonicalMatrix cm : {CanonicalMatrix::A1, CanonicalMatrix::A2, CanonicalMatrix::A3})
    for (int d = 1; d <= 3; ++d)
      for (int ell = 1; ell <= 2; ++ell) {
        MobiusMatrix A = MobiusMatrix::canonical(cm);
        MatrixPolynomial K = substitute_power(build_Ld(d), ell);
        CHECK(certify_dual_pair(mobius(A, K), transpose(mobius_Lambda(A, 1, d, ell))).ok());
      }
}
