#pragma once

#include <string>
#include <vector>

#include "lific/scalar.hpp"

namespace lific {

// Univariate polynomial over Scalar, lowest coefficient first, no trailing zeros.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<Scalar> c);
  explicit ScalarPoly(const Scalar& c);
  static ScalarPoly monomial(const Scalar& c, int power);
  static ScalarPoly x() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  const Scalar& lead() const { return c_.back(); }

  Scalar eval(const Scalar& x) const;
  ScalarPoly monic() const;
  ScalarPoly conj() const;
  ScalarPoly scaled(const Scalar& s) const;
  // Reversal at grade g (g >= degree).
  ScalarPoly reversed(int g) const;

  ScalarPoly& operator+=(const ScalarPoly& o);
  ScalarPoly& operator-=(const ScalarPoly& o);
  friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
  friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  ScalarPoly operator-() const { return scaled(Scalar(-1)); }
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ScalarPoly& a, const ScalarPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

void divmod(const ScalarPoly& a, const ScalarPoly& b, ScalarPoly& q, ScalarPoly& r);
ScalarPoly gcd(ScalarPoly a, ScalarPoly b);  // monic, gcd(0,0) = 0
bool divides(const ScalarPoly& a, const ScalarPoly& b);

// Newton interpolation through (xs[i], ys[i]); xs distinct.
ScalarPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

}  // namespace lific
