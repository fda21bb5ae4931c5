#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

#include "lific/error.hpp"

namespace lific {

enum class Backend { Rational, Gaussian, Float };

const char* backend_name(Backend b);
Backend backend_from_name(const std::string& s);

// Field element. Exact values are kept in lowest terms by GMP.
// An exact zero acts as the neutral element for every backend, so
// generic code may start accumulations from Scalar{}.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);
  static Scalar from_double(double re, double im = 0.0);
  static Scalar parse(const std::string& text, Backend b);

  Backend backend() const { return b_; }
  bool is_exact() const { return b_ != Backend::Float; }
  bool is_zero() const;
  bool is_one() const;
  bool is_real() const;

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  std::complex<double> to_complex() const;

  Scalar conj() const;
  Scalar inverse() const;
  Scalar as_backend(Backend b) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Backend b_ = Backend::Rational;
  mpq_class re_{0};
  mpq_class im_{0};
  std::complex<double> f_{};

  // Bring *this and o to a common backend; throws BackendMismatch for exact/float.
  void unify(const Scalar& o, Backend& out) const;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Strict-weak order on exact values (real part, then imaginary part); used for
// deterministic containers only, not a field order.
bool scalar_less(const Scalar& a, const Scalar& b);

}  // namespace lific
