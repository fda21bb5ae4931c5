#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lific/form.hpp"
#include "lific/poly.hpp"

namespace lific {

using MatrixPolynomial = PolyMat<Scalar>;

MatrixPolynomial constant_polynomial(const Mat<Scalar>& c);
Mat<Scalar> eval(const MatrixPolynomial& p, const Scalar& x);

// Entry-wise view as polynomials in lambda.
std::vector<std::vector<ScalarPoly>> entries(const MatrixPolynomial& p);
ScalarPoly entry_poly(const MatrixPolynomial& p, size_t i, size_t j);

// Exact determinant by evaluation at 0..D and interpolation (D = rows * grade).
ScalarPoly det_poly(const MatrixPolynomial& p);

Backend common_backend(const MatrixPolynomial& p);

enum class LabelKind { Zero, Identity, Coefficient, Expression };

struct BlockLabel {
  LabelKind kind = LabelKind::Zero;
  Scalar alpha;
  int j = -1;      // coefficient index for Coefficient
  int power = -1;  // lambda exponent for Identity/Coefficient
  std::string text;
};

std::string label_kind_name(LabelKind k);

// Matrix polynomial on a grid of n x n blocks, optionally carrying the
// symbolic register of each block (a FormPoly on the block grid).
struct BlockPolynomial {
  MatrixPolynomial base;
  size_t n = 1;
  std::optional<FormPoly> forms;
  StarFlavor flavor = StarFlavor::Transpose;
  std::string symbol = "P";  // coefficient letter used when rendering registers

  size_t block_rows() const { return base.rows / n; }
  size_t block_cols() const { return base.cols / n; }
  int grade() const { return base.grade; }
  MatrixPolynomial block(size_t s, size_t t) const { return base.block(s * n, t * n, n, n); }
  bool block_is_zero(size_t s, size_t t) const;
  bool has_provenance() const { return forms.has_value(); }

  BlockLabel label(size_t s, size_t t) const;
  std::vector<Form> block_forms(size_t s, size_t t) const;
  std::string render(size_t s, size_t t) const;
  std::string pretty() const;
};

BlockPolynomial make_block(const MatrixPolynomial& base, size_t n, std::optional<FormPoly> forms = std::nullopt,
                           StarFlavor flavor = StarFlavor::Transpose);

// Number of nonzero n x n blocks.
size_t block_census(const BlockPolynomial& b);
// Number of blocks with a nonzero register; entries that vanish only for the
// particular coefficients still count. Falls back to block_census without registers.
size_t register_census(const BlockPolynomial& b);

// Re-evaluates every register with the given coefficient (and auxiliary)
// matrices and compares with the numeric blocks.
bool rescan(const BlockPolynomial& b, const MatrixPolynomial& p, const std::vector<Mat<Scalar>>& aux = {});

}  // namespace lific
