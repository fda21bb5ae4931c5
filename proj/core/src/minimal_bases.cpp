#include "lific/minimal_bases.hpp"

#include "lific/linalg.hpp"

namespace lific {

MatrixPolynomial build_Ld(int d) {
  if (d < 0) throw Error(ErrorKind::DimensionMismatch, "L_d needs d >= 0");
  size_t m = static_cast<size_t>(d);
  MatrixPolynomial p(m, m + 1, 1);
  for (size_t i = 0; i < m; ++i) {
    p[0](i, i) = Scalar(-1);
    p[1](i, i + 1) = Scalar(1);
  }
  return p;
}

MatrixPolynomial build_Lambda(int d) {
  if (d < 0) throw Error(ErrorKind::DimensionMismatch, "Lambda_d needs d >= 0");
  MatrixPolynomial p(static_cast<size_t>(d) + 1, 1, d);
  for (int s = 0; s <= d; ++s) p[d - s](static_cast<size_t>(s), 0) = Scalar(1);
  return p;
}

namespace {

double binomial(size_t n, size_t k) {
  double r = 1;
  for (size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

MinimalBasisCertificate certify_minimal_basis(const MatrixPolynomial& p, size_t minor_cap) {
  if (common_backend(p) == Backend::Float)
    throw Error(ErrorKind::FloatBackendUnsupported, "minimal basis certification is exact only");
  if (p.rows > p.cols) throw Error(ErrorKind::DimensionMismatch, "minimal basis needs rows <= cols");
  MinimalBasisCertificate c;
  size_t m = p.rows, n = p.cols;
  c.highest_row_degree_coeff = Mat<Scalar>(m, n);
  bool zero_row = false;
  for (size_t i = 0; i < m; ++i) {
    int deg = -1;
    for (int k = p.grade; k >= 0 && deg < 0; --k)
      for (size_t j = 0; j < n; ++j)
        if (!p[k](i, j).is_zero()) {
          deg = k;
          break;
        }
    c.row_degrees.push_back(deg);
    if (deg < 0) {
      zero_row = true;
      continue;
    }
    for (size_t j = 0; j < n; ++j) c.highest_row_degree_coeff(i, j) = p[deg](i, j);
  }
  c.row_reduced = !zero_row && rank(c.highest_row_degree_coeff) == m;

  if (m == 0) {
    c.full_row_rank_everywhere = true;
    c.witness = ScalarPoly(Scalar(1));
    return c;
  }
  if (binomial(n, m) > static_cast<double>(minor_cap))
    throw Error(ErrorKind::TooManyMinors, "maximal minor count exceeds cap");

  std::vector<size_t> cols(m);
  for (size_t i = 0; i < m; ++i) cols[i] = i;
  ScalarPoly g;
  while (true) {
    MatrixPolynomial sub(m, m, p.grade);
    for (int k = 0; k <= p.grade; ++k)
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) sub[k](i, j) = p[k](i, cols[j]);
    g = gcd(g, det_poly(sub));
    ++c.minors_checked;
    if (!g.is_zero() && g.degree() == 0) break;
    size_t pos = m;
    while (pos > 0 && cols[pos - 1] == n - m + pos - 1) --pos;
    if (pos == 0) break;
    ++cols[pos - 1];
    for (size_t q = pos; q < m; ++q) cols[q] = cols[q - 1] + 1;
  }
  c.witness = g;
  c.full_row_rank_everywhere = !g.is_zero() && g.degree() == 0;
  return c;
}

DualPairReport certify_dual_pair(const MatrixPolynomial& p, const MatrixPolynomial& q, size_t minor_cap) {
  DualPairReport r;
  if (p.cols != q.cols) {
    r.message = "column counts differ";
    return r;
  }
  r.first_minimal = certify_minimal_basis(p, minor_cap).minimal();
  r.second_minimal = certify_minimal_basis(q, minor_cap).minimal();
  r.sizes_complementary = p.rows + q.rows == p.cols;
  r.product_vanishes = mul(p, transpose(q)).is_zero();
  if (!r.first_minimal) r.message = "first basis is not minimal";
  else if (!r.second_minimal) r.message = "second basis is not minimal";
  else if (!r.sizes_complementary) r.message = "row counts do not add up to the column count";
  else if (!r.product_vanishes) r.message = "P Q^T is not zero";
  return r;
}

CanonicalMatrix canonical_of(const MobiusMatrix& A) {
  for (CanonicalMatrix m : {CanonicalMatrix::A1, CanonicalMatrix::A2, CanonicalMatrix::A3})
    if (A == MobiusMatrix::canonical(m)) return m;
  throw Error(ErrorKind::UnsupportedMatrix, "only A1, A2 and A3 have a closed form");
}

MatrixPolynomial mobius_Ld(const MobiusMatrix& A, int sign, int d, int ell) {
  CanonicalMatrix which = canonical_of(A);
  MatrixPolynomial base = substitute_power(build_Ld(d), ell);
  MatrixPolynomial r;
  switch (which) {
    case CanonicalMatrix::A1: r = base; break;
    case CanonicalMatrix::A2:
      r = base;
      if (ell % 2 == 1) r[ell] = -r[ell];
      break;
    case CanonicalMatrix::A3: r = rev(base, ell); break;
  }
  return sign < 0 ? -r : r;
}

MatrixPolynomial mobius_Lambda(const MobiusMatrix& A, int sign, int d, int ell) {
  return mobius(A, substitute_power(build_Lambda(d), ell), sign);
}

}  // namespace lific
