#pragma once

#include <string>
#include <vector>

#include "lific/mobius.hpp"

namespace lific {

// d x (d+1) pencil with -1 on the diagonal and lambda on the superdiagonal.
MatrixPolynomial build_Ld(int d);
// (d+1) x 1 column [lambda^d, ..., lambda, 1]^T of grade d.
MatrixPolynomial build_Lambda(int d);

struct MinimalBasisCertificate {
  std::vector<int> row_degrees;
  Mat<Scalar> highest_row_degree_coeff;
  bool row_reduced = false;
  bool full_row_rank_everywhere = false;
  ScalarPoly witness;  // monic gcd of the maximal minors
  size_t minors_checked = 0;
  bool minimal() const { return row_reduced && full_row_rank_everywhere; }
};

constexpr size_t kDefaultMinorCap = 20000;

MinimalBasisCertificate certify_minimal_basis(const MatrixPolynomial& p, size_t minor_cap = kDefaultMinorCap);

struct DualPairReport {
  bool first_minimal = false;
  bool second_minimal = false;
  bool sizes_complementary = false;
  bool product_vanishes = false;
  bool ok() const { return first_minimal && second_minimal && sizes_complementary && product_vanishes; }
  std::string message;
};

// P (m1 x n) and Q (m2 x n) are dual minimal bases iff both are minimal,
// m1 + m2 = n and P Q^T = 0.
DualPairReport certify_dual_pair(const MatrixPolynomial& p, const MatrixPolynomial& q,
                                 size_t minor_cap = kDefaultMinorCap);

// M_A[sign L_d](lambda^ell) in closed form for A in {A1, A2, A3}.
MatrixPolynomial mobius_Ld(const MobiusMatrix& A, int sign, int d, int ell);

// M_A[sign Lambda_d](lambda^ell), grade d*ell, via the generic transform.
MatrixPolynomial mobius_Lambda(const MobiusMatrix& A, int sign, int d, int ell);

// Identifies A as one of the canonical matrices; throws UnsupportedMatrix otherwise.
CanonicalMatrix canonical_of(const MobiusMatrix& A);

}  // namespace lific
