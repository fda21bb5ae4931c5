#include "lific/verification.hpp"

#include <algorithm>

#include "lific/linalg.hpp"

namespace lific {

namespace {

using PolyGrid = std::vector<std::vector<ScalarPoly>>;

void check_exact(const MatrixPolynomial& p) {
  if (common_backend(p) == Backend::Float) throw Error(ErrorKind::FloatBackendUnsupported, "exact backend required");
}

}  // namespace

SmithForm smith_form(const MatrixPolynomial& p, const ProgressCallback& progress) {
  check_exact(p);
  if (p.rows + p.cols > kSmithSizeCap) throw Error(ErrorKind::SizeCapExceeded, "matrix too large for smith_form");
  PolyGrid a = entries(p);
  size_t m = p.rows, n = p.cols, lim = std::min(m, n);
  SmithForm out;
  for (size_t t = 0; t < lim; ++t) {
    if (progress && progress(t, lim)) throw Error(ErrorKind::Cancelled, "smith_form cancelled");
    bool found = true;
    while (true) {
      size_t pi = m, pj = n;
      int best = -1;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          if (best < 0 || a[i][j].degree() < best) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
        }
      if (best < 0) {
        found = false;
        break;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      ScalarPoly q, r;
      for (size_t i = t + 1; i < m; ++i) {
        if (a[i][t].is_zero()) continue;
        divmod(a[i][t], a[t][t], q, r);
        for (size_t j = t; j < n; ++j)
          if (!a[t][j].is_zero()) a[i][j] -= q * a[t][j];
        if (!r.is_zero()) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        divmod(a[t][j], a[t][t], q, r);
        for (size_t i = t; i < m; ++i)
          if (!a[i][t].is_zero()) a[i][j] -= q * a[i][t];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      bool fixed = false;
      for (size_t i = t + 1; i < m && !fixed; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (!divides(a[t][t], a[i][j])) {
            for (size_t c = t; c < n; ++c) a[t][c] += a[i][c];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (!found) break;
    out.factors.push_back(a[t][t].monic());
    ++out.rank;
  }
  return out;
}

size_t normal_rank(const MatrixPolynomial& p) {
  check_exact(p);
  size_t full = std::min(p.rows, p.cols), best = 0;
  int deg = std::max(p.degree(), 0);
  int points = static_cast<int>(std::max(p.rows, p.cols)) * deg + 1;
  for (int x = 0; x < points && best < full; ++x) best = std::max(best, rank(eval(p, Scalar(x))));
  return best;
}

std::vector<int> measure_minimal_indices(const MatrixPolynomial& p, Side side) {
  check_exact(p);
  MatrixPolynomial q = side == Side::Right ? p : transpose(p);
  size_t m = q.rows, n = q.cols;
  size_t nullity = n - normal_rank(q);
  if (nullity == 0) throw Error(ErrorKind::NotSingular, "null space is trivial");
  int g = std::max(q.degree(), 0);
  int cap = static_cast<int>(std::max(m, n)) * std::max(g, 1);
  std::vector<int> out;
  size_t prev_dim = 0, prev_count = 0;
  for (int delta = 0; delta <= cap; ++delta) {
    size_t rows = m * static_cast<size_t>(g + delta + 1), cols = n * static_cast<size_t>(delta + 1);
    Mat<Scalar> T(rows, cols);
    for (int s = 0; s <= delta; ++s)
      for (int j = 0; j <= g; ++j) T.set_block(static_cast<size_t>(s + j) * m, static_cast<size_t>(s) * n, q[j]);
    size_t dim = cols - rank(T);
    size_t count = dim - prev_dim;  // number of indices <= delta
    for (size_t c = prev_count; c < count; ++c) out.push_back(delta);
    if (count >= nullity) return out;
    prev_dim = dim;
    prev_count = count;
  }
  throw Error(ErrorKind::SizeCapExceeded, "degree sweep exceeded its cap");
}

std::string VerificationReport::det_ratio_text() const {
  if (singular) return "singular";
  if (!det_ratio) return "nonconstant";
  return det_ratio->to_string();
}

VerificationReport certify_lification(const MatrixPolynomial& L, const MatrixPolynomial& P, int ell, int k,
                                      const CertifyOptions& opts) {
  if (L.rows != L.cols || P.rows != P.cols) throw Error(ErrorKind::ShapeMismatch, "L and P must be square");
  if (L.rows < P.rows) throw Error(ErrorKind::ShapeMismatch, "L is smaller than P");
  if (L.degree() > ell || P.degree() > k) throw Error(ErrorKind::GradeTooSmall, "degree exceeds the declared grade");
  VerificationReport r;
  size_t s = L.rows - P.rows;
  r.padding = static_cast<int>(s);
  r.size_law = L.rows * static_cast<size_t>(ell) == P.rows * static_cast<size_t>(k);

  auto related = [&](const SmithForm& sl, const SmithForm& sp) {
    if (sl.rank != sp.rank + s) return false;
    std::vector<ScalarPoly> want(s, ScalarPoly(Scalar(1)));
    want.insert(want.end(), sp.factors.begin(), sp.factors.end());
    return sl.factors == want;
  };
  SmithForm sl = smith_form(L, opts.progress), sp = smith_form(P, opts.progress);
  r.invariant_factors_L = sl.factors;
  r.invariant_factors_P = sp.factors;
  r.is_lification = related(sl, sp);
  SmithForm rl = smith_form(rev(L, ell), opts.progress), rp = smith_form(rev(P, k), opts.progress);
  r.invariant_factors_revL = rl.factors;
  r.invariant_factors_revP = rp.factors;
  r.is_strong = r.is_lification && related(rl, rp);

  r.singular = sp.rank < P.rows;
  if (!r.singular) {
    ScalarPoly dl = det_poly(L), dp = det_poly(P), q, rem;
    divmod(dl, dp, q, rem);
    if (rem.is_zero() && q.degree() == 0) r.det_ratio = q.coeff(0);
  } else if (opts.measure_indices) {
    r.right_indices_P = measure_minimal_indices(P, Side::Right);
    r.left_indices_P = measure_minimal_indices(P, Side::Left);
    if (sl.rank < L.rows) {
      r.right_indices_L = measure_minimal_indices(L, Side::Right);
      r.left_indices_L = measure_minimal_indices(L, Side::Left);
    }
  }
  if (opts.structure_checks)
    for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose})
      for (StructureKind kind : {StructureKind::Symmetric, StructureKind::SkewSymmetric, StructureKind::Even,
                                 StructureKind::Odd, StructureKind::Palindromic, StructureKind::AntiPalindromic}) {
        StructureTag tag{kind, f};
        r.structure_checks[tag.name()] = check_structure(with_grade(L, ell), tag);
      }
  return r;
}

VerificationReport certify_lification(const BlockPolynomial& L, const MatrixPolynomial& P, int ell, int k,
                                      const CertifyOptions& opts) {
  VerificationReport r = certify_lification(L.base, P, ell, k, opts);
  r.block_census = block_census(L);
  return r;
}

bool companion_predicate(const BlockPolynomial& L, CompanionMode mode) {
  if (!L.forms) throw Error(ErrorKind::MissingProvenance, "companion predicate needs block registers");
  for (const auto& m : L.forms->coeffs)
    for (const auto& f : m.data()) {
      if (f.is_zero()) continue;
      if (f.has_aux() || f.has_starred_coefficient()) return false;
      if (mode == CompanionMode::Companion && (f.terms().size() != 1 || f.max_word_length() > 1)) return false;
    }
  return true;
}

SparsityReport sparsity_census(const BlockPolynomial& L, int d, int ell, const std::optional<StructureTag>& tag) {
  SparsityReport r;
  r.count = register_census(L);
  r.numeric_count = block_census(L);
  r.d = d;
  r.ell = ell;
  size_t dd = static_cast<size_t>(d);
  r.sparse_bound = ell == 1 ? 5 * dd + 1 : 6 * dd + 1;
  r.structured_floor = r.sparse_bound;
  if (tag && ell > 1 && tag->matrix() != CanonicalMatrix::A3) r.structured_floor = 7 * dd + 1;
  r.sparse = r.count == r.sparse_bound;
  return r;
}

}  // namespace lific
