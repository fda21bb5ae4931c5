#pragma once

#include <string>

#include "lific/scalar.hpp"

namespace lific {

enum class StarFlavor { Transpose, ConjTranspose };

enum class StructureKind { Symmetric, SkewSymmetric, Even, Odd, Palindromic, AntiPalindromic };

enum class ConditionKind { AS, ASS, DS };

enum class CanonicalMatrix { A1, A2, A3 };

struct StructureTag {
  StructureKind kind = StructureKind::Symmetric;
  StarFlavor star = StarFlavor::Transpose;

  // +1 for symmetric/even/palindromic, -1 for the skew/odd/anti variants.
  int sign() const;
  CanonicalMatrix matrix() const;
  // P_j^star = sigma(j) * P_{pi(j)} for a structured P of grade k.
  int sigma(int j) const;
  int pi(int j, int k) const;
  ConditionKind condition(int ell) const;
  std::string name() const;
};

bool operator==(const StructureTag& a, const StructureTag& b);

std::string flavor_name(StarFlavor f);
StarFlavor flavor_from_name(const std::string& s);  // "t" | "h"
std::string kind_name(StructureKind k);
StructureKind kind_from_name(const std::string& s);  // sym|skew|even|odd|palin|antipalin
std::string condition_name(ConditionKind c);
ConditionKind condition_from_name(const std::string& s);

inline Scalar star_elem(const Scalar& x, StarFlavor f) {
  return f == StarFlavor::ConjTranspose ? x.conj() : x;
}
inline bool elem_is_zero(const Scalar& x) { return x.is_zero(); }
inline Scalar scale_elem(const Scalar& x, const Scalar& c) { return x * c; }

template <class T>
T lift(const Scalar& c);
template <>
inline Scalar lift<Scalar>(const Scalar& c) {
  return c;
}

}  // namespace lific
