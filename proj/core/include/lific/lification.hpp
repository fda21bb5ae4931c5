#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lific/conditions.hpp"
#include "lific/minimal_bases.hpp"

namespace lific {

struct LificationResult {
  BlockPolynomial L;
  int ell = 1, d = 0, k = 1;
  size_t n = 1;
  std::optional<StructureTag> structure;
  ConditionKind condition = ConditionKind::AS;
  MobiusMatrix A;
  int sign = 1;
  int shift = 0;     // d*ell, or deg N for the general path
  int padding = -1;  // size of the identity block, filled in by verification
  std::vector<std::string> warnings;
};

// 1/2 (M + M_A[sign M]^star).
template <class T>
PolyMat<T> symmetrize(const PolyMat<T>& M, const MobiusMatrix& A, int sign, StarFlavor flavor) {
  if (!A.is_coninvolutory()) throw Error(ErrorKind::NonConinvolutory, "A conj(A) != I");
  return scaled(M + star(mobius(A, M, sign), flavor), Scalar::rational(1, 2));
}

BlockPolynomial symmetrize(const BlockPolynomial& M, const MobiusMatrix& A, int sign, StarFlavor flavor);

// [[M, M_A[sign L_d]^T(lambda^ell) (x) I], [L_d(lambda^ell) (x) I, 0]].
template <class T>
PolyMat<T> assemble_block_kronecker(const PolyMat<T>& M, const MobiusMatrix& A, int sign, int d, int ell, size_t n) {
  size_t nb = static_cast<size_t>(d) + 1;
  if (M.rows != nb * n || M.cols != nb * n || M.grade != ell)
    throw Error(ErrorKind::ShapeMismatch, "M must be (d+1)x(d+1) blocks of size n and grade ell");
  size_t N = (2 * nb - 1) * n;
  PolyMat<T> L(N, N, ell);
  L.set_block(0, 0, M);
  if (d == 0) return L;
  MatrixPolynomial Ld = substitute_power(build_Ld(d), ell);
  MatrixPolynomial top = transpose(mobius(A, Ld, sign));
  L.set_block(0, nb * n, kron_identity<T>(top, n));
  L.set_block(nb * n, 0, kron_identity<T>(Ld, n));
  return L;
}

LificationResult assemble_block_kronecker(const BlockPolynomial& M, const MobiusMatrix& A, int sign, int d, int ell);

struct BuildOptions {
  // Build even if P fails the structure check (the result then l-ifies a symmetrization of P).
  bool allow_unstructured = false;
};

LificationResult build_structured(const MatrixPolynomial& P, const StructureTag& tag, int ell,
                                  const PlacementPlan& plan, const BuildOptions& opts = {});

// d from k and ell; throws GradeNotOddMultiple unless k = (2d+1) ell.
int block_kronecker_d(int k, int ell);

struct Recovery {
  MatrixPolynomial P;
  int sign = 1;  // the triple product equals sign * P
};

// (M_A[sign Lambda_d]^T(lambda^ell) (x) I) M (Lambda_d(lambda^ell) (x) I), returned as sign * product.
Recovery recover_P(const MatrixPolynomial& M, const MobiusMatrix& A, int sign, int d, int ell, size_t n);
Recovery recover_P(const LificationResult& r);

// [[M, K2^T], [K1, 0]] over any ring.
template <class T>
PolyMat<T> assemble_bmb(const PolyMat<T>& M, const PolyMat<T>& K1, const PolyMat<T>& K2) {
  if (M.rows != K2.cols || M.cols != K1.cols)
    throw Error(ErrorKind::ShapeMismatch, "M must be K2.cols x K1.cols");
  int g = std::max({M.grade, K1.grade, K2.grade});
  PolyMat<T> L(M.rows + K1.rows, M.cols + K2.rows, g);
  L.set_block(0, 0, M);
  L.set_block(0, M.cols, transpose(K2));
  L.set_block(M.rows, 0, K1);
  return L;
}

// General block minimal bases polynomial; K1, K2 must be minimal bases with all row degrees ell.
// N1, N2 are the dual bases used for recovery (P = N2 M N1^T) and the minimal-index shifts.
struct GeneralBmb {
  LificationResult result;
  MatrixPolynomial N1, N2;
  int shift_right = 0, shift_left = 0;  // deg N1, deg N2
  MatrixPolynomial recovered;
};

GeneralBmb assemble_general_bmb(const MatrixPolynomial& M, const MatrixPolynomial& K1, const MatrixPolynomial& K2,
                                const MatrixPolynomial& N1, const MatrixPolynomial& N2, int ell);

// Grade-21 star-symmetric cubification with invertible X, Y inside the minimal basis.
GeneralBmb invertible_blocks_cubification(const MatrixPolynomial& P, const Mat<Scalar>& X, const Mat<Scalar>& Y,
                                          StarFlavor flavor);

// Classical Frobenius companion pencils (which = 1 or 2).
BlockPolynomial frobenius_pencil(const MatrixPolynomial& P, int which);

// Generalized companion quadratification of a quartic that is star-palindromic with P.
BlockPolynomial palindromic_quartic_quadratification(const MatrixPolynomial& P,
                                                     StarFlavor flavor = StarFlavor::Transpose);

std::vector<int> predict_minimal_index_shift(const std::vector<int>& indices, int shift);

// Exhaustive search over symmetric block supports of the symmetrized (1,1) block.
struct SupportSearch {
  size_t supports_examined = 0;
  size_t admissible = 0;
  size_t min_blocks = 0;  // in the (1,1) block
  size_t min_total = 0;   // min_blocks + 4d
  size_t minimal_supports = 0;
  size_t realized = 0;  // minimal supports reproduced by a plan and symmetrization
  std::vector<std::pair<int, int>> example;
};

// A support is admissible when it meets every (anti-)diagonal the condition requires.
SupportSearch search_sparse_supports(const StructureTag& tag, int d, int ell);

}  // namespace lific

namespace lific {

// Companion pencil L_P of a cubic and its Cayley image L_Q = C_{+1}(L_P), with the
// register of L_Q rewritten in the coefficients Q_j of Q = C_{+1}(P).
struct CayleyExample {
  MatrixPolynomial Q;
  BlockPolynomial LP, LQ;
};

CayleyExample cayley_counterexample(const MatrixPolynomial& P, StarFlavor flavor = StarFlavor::Transpose);

}  // namespace lific
