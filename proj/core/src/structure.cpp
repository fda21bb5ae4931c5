#include "lific/structure.hpp"

namespace lific {

int StructureTag::sign() const {
  switch (kind) {
    case StructureKind::Symmetric:
    case StructureKind::Even:
    case StructureKind::Palindromic:
      return 1;
    default:
      return -1;
  }
}

CanonicalMatrix StructureTag::matrix() const {
  switch (kind) {
    case StructureKind::Symmetric:
    case StructureKind::SkewSymmetric:
      return CanonicalMatrix::A1;
    case StructureKind::Even:
    case StructureKind::Odd:
      return CanonicalMatrix::A2;
    default:
      return CanonicalMatrix::A3;
  }
}

int StructureTag::sigma(int j) const {
  int alt = (j % 2 == 0) ? 1 : -1;
  switch (kind) {
    case StructureKind::Symmetric: return 1;
    case StructureKind::SkewSymmetric: return -1;
    case StructureKind::Even: return alt;
    case StructureKind::Odd: return -alt;
    case StructureKind::Palindromic: return 1;
    case StructureKind::AntiPalindromic: return -1;
  }
  return 1;
}

int StructureTag::pi(int j, int k) const { return matrix() == CanonicalMatrix::A3 ? k - j : j; }

ConditionKind StructureTag::condition(int ell) const {
  switch (matrix()) {
    case CanonicalMatrix::A1: return ConditionKind::AS;
    case CanonicalMatrix::A2: return ell % 2 == 0 ? ConditionKind::AS : ConditionKind::ASS;
    case CanonicalMatrix::A3: return ConditionKind::DS;
  }
  return ConditionKind::AS;
}

std::string StructureTag::name() const {
  std::string s = star == StarFlavor::Transpose ? "T-" : "*-";
  switch (kind) {
    case StructureKind::Symmetric: return s + "symmetric";
    case StructureKind::SkewSymmetric: return s + "skew-symmetric";
    case StructureKind::Even: return s + "even";
    case StructureKind::Odd: return s + "odd";
    case StructureKind::Palindromic: return s + "palindromic";
    case StructureKind::AntiPalindromic: return s + "anti-palindromic";
  }
  return s;
}

bool operator==(const StructureTag& a, const StructureTag& b) { return a.kind == b.kind && a.star == b.star; }

std::string flavor_name(StarFlavor f) { return f == StarFlavor::Transpose ? "t" : "h"; }

StarFlavor flavor_from_name(const std::string& s) {
  if (s == "t" || s == "T" || s == "transpose") return StarFlavor::Transpose;
  if (s == "h" || s == "H" || s == "*" || s == "conjugate-transpose") return StarFlavor::ConjTranspose;
  throw Error(ErrorKind::SchemaError, "unknown star flavor '" + s + "'");
}

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::Symmetric: return "sym";
    case StructureKind::SkewSymmetric: return "skew";
    case StructureKind::Even: return "even";
    case StructureKind::Odd: return "odd";
    case StructureKind::Palindromic: return "palin";
    case StructureKind::AntiPalindromic: return "antipalin";
  }
  return "?";
}

StructureKind kind_from_name(const std::string& s) {
  if (s == "sym") return StructureKind::Symmetric;
  if (s == "skew") return StructureKind::SkewSymmetric;
  if (s == "even") return StructureKind::Even;
  if (s == "odd") return StructureKind::Odd;
  if (s == "palin") return StructureKind::Palindromic;
  if (s == "antipalin") return StructureKind::AntiPalindromic;
  throw Error(ErrorKind::SchemaError, "unknown structure '" + s + "'");
}

std::string condition_name(ConditionKind c) {
  switch (c) {
    case ConditionKind::AS: return "AS";
    case ConditionKind::ASS: return "ASS";
    case ConditionKind::DS: return "DS";
  }
  return "?";
}

ConditionKind condition_from_name(const std::string& s) {
  if (s == "AS") return ConditionKind::AS;
  if (s == "ASS") return ConditionKind::ASS;
  if (s == "DS") return ConditionKind::DS;
  throw Error(ErrorKind::SchemaError, "unknown condition '" + s + "'");
}

}  // namespace lific
