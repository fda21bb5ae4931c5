#include "lific/lification.hpp"

#include <algorithm>

namespace lific {

BlockPolynomial symmetrize(const BlockPolynomial& M, const MobiusMatrix& A, int sign, StarFlavor flavor) {
  BlockPolynomial r = M;
  r.flavor = flavor;
  r.base = symmetrize(M.base, A, sign, flavor);
  if (!is_ma_structured(r.base, A, sign, flavor))
    throw Error(ErrorKind::StructureCheckFailed, "symmetrized block is not M_A-structured");
  if (M.forms) r.forms = symmetrize(*M.forms, A, sign, flavor);
  return r;
}

LificationResult assemble_block_kronecker(const BlockPolynomial& M, const MobiusMatrix& A, int sign, int d, int ell) {
  LificationResult r;
  size_t n = M.n;
  MatrixPolynomial L = assemble_block_kronecker(M.base, A, sign, d, ell, n);
  std::optional<FormPoly> F;
  if (M.forms) F = assemble_block_kronecker(*M.forms, A, sign, d, ell, 1);
  r.L = make_block(L, n, F, M.flavor);
  r.ell = ell;
  r.d = d;
  r.k = (2 * d + 1) * ell;
  r.n = n;
  r.A = A;
  r.sign = sign;
  r.shift = d * ell;
  return r;
}

int block_kronecker_d(int k, int ell) {
  if (ell < 1 || k < ell || k % ell != 0 || (k / ell) % 2 == 0)
    throw Error(ErrorKind::GradeNotOddMultiple,
                "grade " + std::to_string(k) + " is not an odd multiple of " + std::to_string(ell));
  return (k / ell - 1) / 2;
}

LificationResult build_structured(const MatrixPolynomial& P, const StructureTag& tag, int ell,
                                  const PlacementPlan& plan, const BuildOptions& opts) {
  if (P.rows != P.cols) throw Error(ErrorKind::ShapeMismatch, "P must be square");
  int k = P.grade;
  int d = block_kronecker_d(k, ell);
  ConditionKind kind = tag.condition(ell);
  if (plan.kind != kind)
    throw Error(ErrorKind::PlanKindMismatch, "plan '" + plan.name + "' is " + condition_name(plan.kind) + " but " +
                                                 tag.name() + " with ell=" + std::to_string(ell) + " needs " +
                                                 condition_name(kind));
  std::vector<std::string> warnings;
  bool structured = check_structure(P, tag);
  if (!structured) {
    if (!opts.allow_unstructured) throw Error(ErrorKind::StructureCheckFailed, "P is not " + tag.name());
    warnings.push_back("P is not " + tag.name() +
                       "; the result is a strong l-ification of the structured part of P, not of P");
  }
  MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
  int sign = tag.sign();
  BlockPolynomial M = build_M(P, plan, d, ell, tag.star);
  BlockPolynomial Mt = symmetrize(M, A, sign, tag.star);
  if (structured && Mt.forms) Mt.forms = normalize(*Mt.forms, tag, k);
  LificationResult r = assemble_block_kronecker(Mt, A, sign, d, ell);
  r.structure = tag;
  r.condition = kind;
  r.warnings = warnings;
  if (r.L.base.rows * static_cast<size_t>(ell) != P.rows * static_cast<size_t>(k))
    throw Error(ErrorKind::ShapeMismatch, "size law n k / ell violated");
  return r;
}

Recovery recover_P(const MatrixPolynomial& M, const MobiusMatrix& A, int sign, int d, int ell, size_t n) {
  size_t nb = static_cast<size_t>(d) + 1;
  if (M.rows != nb * n || M.cols != nb * n || M.grade != ell)
    throw Error(ErrorKind::ShapeMismatch, "M must be (d+1)x(d+1) blocks of size n and grade ell");
  MatrixPolynomial lam = substitute_power(build_Lambda(d), ell);
  MatrixPolynomial right = kron_identity<Scalar>(lam, n);
  MatrixPolynomial left = kron_identity<Scalar>(transpose(mobius(A, lam, sign)), n);
  MatrixPolynomial Q = mul(mul(left, M), right);
  Recovery rec;
  rec.sign = sign;
  rec.P = sign < 0 ? -Q : Q;
  return rec;
}

Recovery recover_P(const LificationResult& r) {
  size_t m = (static_cast<size_t>(r.d) + 1) * r.n;
  return recover_P(r.L.base.block(0, 0, m, m), r.A, r.sign, r.d, r.ell, r.n);
}

namespace {

void require_minimal_with_degree(const MatrixPolynomial& K, int ell, const char* what) {
  MinimalBasisCertificate c = certify_minimal_basis(K);
  if (!c.minimal()) throw Error(ErrorKind::NotMinimalBasis, std::string(what) + " is not a minimal basis");
  for (int deg : c.row_degrees)
    if (deg != ell) throw Error(ErrorKind::NotMinimalBasis, std::string(what) + " has a row degree other than ell");
}

}  // namespace

GeneralBmb assemble_general_bmb(const MatrixPolynomial& M, const MatrixPolynomial& K1, const MatrixPolynomial& K2,
                                const MatrixPolynomial& N1, const MatrixPolynomial& N2, int ell) {
  require_minimal_with_degree(K1, ell, "K1");
  require_minimal_with_degree(K2, ell, "K2");
  DualPairReport d1 = certify_dual_pair(K1, N1), d2 = certify_dual_pair(K2, N2);
  if (!d1.ok()) throw Error(ErrorKind::NotMinimalBasis, "K1/N1: " + d1.message);
  if (!d2.ok()) throw Error(ErrorKind::NotMinimalBasis, "K2/N2: " + d2.message);
  if (M.grade != ell) throw Error(ErrorKind::ShapeMismatch, "M must have grade ell");
  GeneralBmb g;
  MatrixPolynomial L = assemble_bmb(M, K1, K2);
  size_t n = N1.rows;
  if (n == 0 || L.rows % n != 0 || L.cols % n != 0) n = 1;
  g.result.L = make_block(L, n);
  g.result.ell = ell;
  g.result.n = N1.rows;
  g.N1 = N1;
  g.N2 = N2;
  g.shift_right = N1.degree();
  g.shift_left = N2.degree();
  g.result.shift = g.shift_right;
  g.recovered = mul(mul(N2, M), transpose(N1));
  g.result.k = g.recovered.grade;
  return g;
}

namespace {

PlacementPlan grade21_plan() {
  PlacementPlan p{"grade21-m", ConditionKind::AS, {}};
  auto add = [&](int s, int t, std::initializer_list<std::pair<int, int>> js) {
    for (auto [j, i] : js) p.assignments.push_back({j, s, t, i, Scalar(1)});
  };
  add(1, 1, {{18, 0}, {19, 1}, {20, 2}, {21, 3}});
  add(1, 4, {{9, 0}, {10, 1}, {11, 2}, {12, 3}});
  add(2, 1, {{15, 0}, {16, 1}, {17, 2}});
  add(2, 2, {{13, 1}, {14, 2}});
  add(3, 3, {{6, 0}, {7, 1}, {8, 2}});
  add(3, 4, {{3, 0}, {4, 1}, {5, 2}});
  add(4, 4, {{0, 0}, {1, 1}, {2, 2}});
  return p;
}

// K(lambda) = [[-X, lambda X, 0, 0], [0, -Y, lambda Y, 0], [0, 0, -I, lambda I]] with entries in T.
template <class T>
PolyMat<T> k_pencil(const Mat<T>& X, const Mat<T>& Y, size_t n) {
  PolyMat<T> K(3 * n, 4 * n, 1);
  Mat<T> I = Mat<T>::identity(n);
  const Mat<T>* rows[3] = {&X, &Y, &I};
  for (size_t r = 0; r < 3; ++r) {
    K[0].set_block(r * n, r * n, -*rows[r]);
    K[1].set_block(r * n, (r + 1) * n, *rows[r]);
  }
  return K;
}

}  // namespace

GeneralBmb invertible_blocks_cubification(const MatrixPolynomial& P, const Mat<Scalar>& X, const Mat<Scalar>& Y,
                                          StarFlavor flavor) {
  if (P.grade != 21) throw Error(ErrorKind::WrongGrade, "the cubification needs grade 21");
  size_t n = P.rows;
  if (X.rows() != n || Y.rows() != n) throw Error(ErrorKind::ShapeMismatch, "X and Y must be n x n");
  const int d = 3, ell = 3;
  StructureTag tag{StructureKind::Symmetric, flavor};
  MobiusMatrix A = MobiusMatrix::canonical(CanonicalMatrix::A1);
  bool structured = check_structure(P, tag);
  BlockPolynomial M = build_M(P, grade21_plan(), d, ell, flavor);
  BlockPolynomial Mt = symmetrize(M, A, 1, flavor);
  if (structured) Mt.forms = normalize(*Mt.forms, tag, P.grade);

  MatrixPolynomial K1 = substitute_power(k_pencil<Scalar>(X, Y, n), ell);
  MatrixPolynomial K2 = transpose(star(K1, flavor));
  MatrixPolynomial N = transpose(kron_identity<Scalar>(substitute_power(build_Lambda(d), ell), n));
  GeneralBmb g = assemble_general_bmb(Mt.base, K1, K2, N, N, ell);

  Mat<Form> fx(1, 1), fy(1, 1);
  fx(0, 0) = Form::aux(0);
  fy(0, 0) = Form::aux(1);
  FormPoly FK1 = substitute_power(k_pencil<Form>(fx, fy, 1), ell);
  FormPoly FK2 = transpose(star(FK1, flavor));
  g.result.L = make_block(g.result.L.base, n, assemble_bmb(*Mt.forms, FK1, FK2), flavor);
  g.result.d = d;
  g.result.structure = tag;
  g.result.condition = ConditionKind::AS;
  g.result.A = A;
  g.result.sign = 1;
  if (!structured) g.result.warnings.push_back("P is not " + tag.name());
  return g;
}

namespace {

template <class T>
PolyMat<T> frobenius_template(const std::vector<Mat<T>>& P, size_t n) {
  int k = static_cast<int>(P.size()) - 1;
  size_t kk = static_cast<size_t>(k);
  PolyMat<T> F(kk * n, kk * n, 1);
  Mat<T> I = Mat<T>::identity(n);
  for (size_t c = 0; c < kk; ++c) F[0].set_block(0, c * n, P[kk - 1 - c]);
  F[1].set_block(0, 0, P[kk]);
  for (size_t i = 1; i < kk; ++i) {
    F[1].set_block(i * n, i * n, I);
    F[0].set_block(i * n, (i - 1) * n, -I);
  }
  return F;
}

template <class T>
PolyMat<T> quartic_template(const std::vector<Mat<T>>& P, size_t n) {
  PolyMat<T> L(2 * n, 2 * n, 2);
  Mat<T> I = Mat<T>::identity(n);
  L[0].set_block(0, 0, P[1]);
  L[0].set_block(0, n, I);
  L[0].set_block(n, 0, P[0]);
  L[1].set_block(0, 0, P[2] - I - P[4] * P[0]);
  L[1].set_block(n, n, -I);
  L[2].set_block(0, 0, P[3]);
  L[2].set_block(0, n, P[4]);
  L[2].set_block(n, 0, I);
  return L;
}

std::vector<Mat<Form>> symbols(int k) {
  std::vector<Mat<Form>> s;
  for (int j = 0; j <= k; ++j) {
    Mat<Form> m(1, 1);
    m(0, 0) = Form::coefficient(j);
    s.push_back(m);
  }
  return s;
}

}  // namespace

BlockPolynomial frobenius_pencil(const MatrixPolynomial& P, int which) {
  if (P.grade < 1) throw Error(ErrorKind::GradeTooSmall, "Frobenius pencils need k >= 1");
  if (which != 1 && which != 2) throw Error(ErrorKind::ShapeMismatch, "which must be 1 or 2");
  size_t n = P.rows;
  MatrixPolynomial F = frobenius_template(P.coeffs, n);
  FormPoly S = frobenius_template(symbols(P.grade), 1);
  if (which == 2) {
    F = block_transpose(F, n);
    S = block_transpose(S, 1);
  }
  return make_block(F, n, S);
}

BlockPolynomial palindromic_quartic_quadratification(const MatrixPolynomial& P, StarFlavor flavor) {
  if (P.grade != 4) throw Error(ErrorKind::WrongGrade, "the quadratification needs grade 4");
  if (P.rows != P.cols) throw Error(ErrorKind::ShapeMismatch, "P must be square");
  return make_block(quartic_template(P.coeffs, P.rows), P.rows, quartic_template(symbols(4), 1), flavor);
}

std::vector<int> predict_minimal_index_shift(const std::vector<int>& indices, int shift) {
  std::vector<int> r = indices;
  for (int& x : r) x += shift;
  return r;
}

SupportSearch search_sparse_supports(const StructureTag& tag, int d, int ell) {
  if (ell < 2) throw Error(ErrorKind::ShapeMismatch, "support search covers ell > 1");
  if (d < 0 || d > 4) throw Error(ErrorKind::SizeCapExceeded, "support search is limited to d <= 4");
  ConditionKind kind = tag.condition(ell);
  int k = (2 * d + 1) * ell;
  std::vector<std::pair<int, int>> orbits;
  for (int s = 1; s <= d + 1; ++s)
    for (int t = s; t <= d + 1; ++t) orbits.push_back({s, t});
  auto diagonal_of = [&](int s, int t) { return kind == ConditionKind::DS ? s - t + d : s + t - 2; };

  SupportSearch out;
  out.min_blocks = static_cast<size_t>(-1);
  std::vector<std::vector<std::pair<int, int>>> minimal;
  size_t total = size_t{1} << orbits.size();
  for (size_t mask = 0; mask < total; ++mask) {
    ++out.supports_examined;
    std::vector<bool> hit(static_cast<size_t>(2 * d + 1), false);
    std::vector<std::pair<int, int>> cells;
    for (size_t o = 0; o < orbits.size(); ++o) {
      if (!(mask >> o & 1)) continue;
      auto [s, t] = orbits[o];
      cells.push_back({s, t});
      if (s != t) cells.push_back({t, s});
    }
    for (auto [s, t] : cells) hit[static_cast<size_t>(diagonal_of(s, t))] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) continue;
    ++out.admissible;
    if (cells.size() < out.min_blocks) {
      out.min_blocks = cells.size();
      minimal.clear();
    }
    if (cells.size() == out.min_blocks) minimal.push_back(cells);
  }
  out.minimal_supports = minimal.size();
  out.min_total = out.min_blocks + 4 * static_cast<size_t>(d);
  if (!minimal.empty()) out.example = minimal.front();

  MobiusMatrix A = MobiusMatrix::canonical(tag.matrix());
  FormPoly S = symbolic_polynomial(k);
  for (const auto& cells : minimal) {
    PlacementPlan plan = plan_from_support(kind, d, ell, cells);
    FormPoly Mt = normalize(symmetrize(build_M<Form>(S, plan, d, ell), A, tag.sign(), tag.star), tag, k);
    size_t count = 0;
    for (size_t s = 0; s < Mt.rows; ++s)
      for (size_t t = 0; t < Mt.cols; ++t) {
        bool nz = false;
        for (int i = 0; i <= ell; ++i) nz = nz || !Mt[i](s, t).is_zero();
        count += nz ? 1 : 0;
      }
    if (count == out.min_blocks && verify_condition(Mt, S, kind, d, ell).ok) ++out.realized;
  }
  return out;
}

}  // namespace lific

namespace lific {

namespace {

template <class T>
PolyMat<T> cubic_pencil(const std::vector<Mat<T>>& P, size_t n) {
  PolyMat<T> L(3 * n, 3 * n, 1);
  Mat<T> I = Mat<T>::identity(n);
  L[0].set_block(0, n, P[0]);
  L[1].set_block(0, n, P[1]);
  L[1].set_block(0, 2 * n, -I);
  L[0].set_block(n, 0, P[2]);
  L[1].set_block(n, 0, P[3]);
  L[0].set_block(n, 2 * n, I);
  L[0].set_block(2 * n, 0, -I);
  L[1].set_block(2 * n, n, I);
  return L;
}

}  // namespace

CayleyExample cayley_counterexample(const MatrixPolynomial& P, StarFlavor flavor) {
  if (P.grade != 3) throw Error(ErrorKind::WrongGrade, "the counterexample needs a cubic");
  size_t n = P.rows;
  CayleyExample ex;
  ex.Q = cayley(P, 1);
  FormPoly SP = cubic_pencil(symbols(3), 1);
  ex.LP = make_block(cubic_pencil(P.coeffs, n), n, SP, flavor);
  // P_j = 2^{-3} M_B[Q]_j with B = [[1,-1],[1,1]].
  MobiusMatrix B{Scalar(1), Scalar(-1), Scalar(1), Scalar(1)};
  FormPoly back = scaled(mobius(B, symbolic_polynomial(3)), Scalar::rational(1, 8));
  std::vector<Form> images;
  for (int j = 0; j <= 3; ++j) images.push_back(back[j](0, 0));
  FormPoly SQ = cayley(SP, 1);
  for (auto& m : SQ.coeffs)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) = substitute(m(i, j), images, flavor);
  ex.LQ = make_block(cayley(ex.LP.base, 1), n, SQ, flavor);
  ex.LQ.symbol = "Q";
  return ex;
}

}  // namespace lific
