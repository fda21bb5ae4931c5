#include "lific/mobius.hpp"

namespace lific {

MobiusMatrix MobiusMatrix::canonical(CanonicalMatrix m) {
  switch (m) {
    case CanonicalMatrix::A1: return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
    case CanonicalMatrix::A2: return {Scalar(-1), Scalar(0), Scalar(0), Scalar(1)};
    case CanonicalMatrix::A3: return {Scalar(0), Scalar(1), Scalar(1), Scalar(0)};
  }
  return {};
}

MobiusMatrix MobiusMatrix::cayley(int which) {
  if (which == 1) return {Scalar(1), Scalar(1), Scalar(-1), Scalar(1)};
  if (which == -1) return {Scalar(1), Scalar(-1), Scalar(1), Scalar(1)};
  throw Error(ErrorKind::UnsupportedMatrix, "cayley index must be +1 or -1");
}

MobiusMatrix MobiusMatrix::named(const std::string& name) {
  if (name == "A1") return canonical(CanonicalMatrix::A1);
  if (name == "A2") return canonical(CanonicalMatrix::A2);
  if (name == "A3") return canonical(CanonicalMatrix::A3);
  if (name == "cayley+1") return cayley(1);
  if (name == "cayley-1") return cayley(-1);
  throw Error(ErrorKind::UnsupportedMatrix, "unknown Mobius matrix '" + name + "'");
}

bool MobiusMatrix::is_coninvolutory() const {
  MobiusMatrix p = (*this) * conj();
  return p == MobiusMatrix{};
}

std::vector<ScalarPoly> mobius_weights(const MobiusMatrix& A, int k) {
  ScalarPoly num(std::vector<Scalar>{A.b, A.a});
  ScalarPoly den(std::vector<Scalar>{A.d, A.c});
  std::vector<ScalarPoly> np(static_cast<size_t>(k) + 1), dp(static_cast<size_t>(k) + 1);
  np[0] = ScalarPoly(Scalar(1));
  dp[0] = ScalarPoly(Scalar(1));
  for (int j = 1; j <= k; ++j) {
    np[static_cast<size_t>(j)] = np[static_cast<size_t>(j - 1)] * num;
    dp[static_cast<size_t>(j)] = dp[static_cast<size_t>(j - 1)] * den;
  }
  std::vector<ScalarPoly> w;
  for (int j = 0; j <= k; ++j) w.push_back(np[static_cast<size_t>(j)] * dp[static_cast<size_t>(k - j)]);
  return w;
}

BlockPolynomial mobius(const MobiusMatrix& A, const BlockPolynomial& p, int sign) {
  BlockPolynomial r = p;
  r.base = mobius(A, p.base, sign);
  if (p.forms) r.forms = mobius(A, *p.forms, sign);
  return r;
}

BlockPolynomial cayley(const BlockPolynomial& p, int which) { return mobius(MobiusMatrix::cayley(which), p, 1); }

}  // namespace lific

namespace lific {

bool check_structure(const MatrixPolynomial& p, const StructureTag& tag) {
  return is_ma_structured(p, MobiusMatrix::canonical(tag.matrix()), tag.sign(), tag.star);
}

}  // namespace lific
