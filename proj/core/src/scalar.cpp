#include "lific/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>

namespace lific {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Rational: return "rational";
    case Backend::Gaussian: return "gaussian";
    case Backend::Float: return "float";
  }
  return "?";
}

Backend backend_from_name(const std::string& s) {
  if (s == "rational") return Backend::Rational;
  if (s == "gaussian") return Backend::Gaussian;
  if (s == "float") return Backend::Float;
  throw Error(ErrorKind::SchemaError, "unknown field '" + s + "'");
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.re_ = q;
  s.re_.canonicalize();
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return rational(q);
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.b_ = Backend::Gaussian;
  s.re_ = re;
  s.im_ = im;
  s.re_.canonicalize();
  s.im_.canonicalize();
  return s;
}

Scalar Scalar::from_double(double re, double im) {
  Scalar s;
  s.b_ = Backend::Float;
  s.f_ = {re, im};
  return s;
}

bool Scalar::is_zero() const {
  if (b_ == Backend::Float) return f_ == std::complex<double>(0.0, 0.0);
  return sgn(re_) == 0 && sgn(im_) == 0;
}

bool Scalar::is_one() const {
  if (b_ == Backend::Float) return f_ == std::complex<double>(1.0, 0.0);
  return re_ == 1 && sgn(im_) == 0;
}

bool Scalar::is_real() const {
  if (b_ == Backend::Float) return f_.imag() == 0.0;
  return sgn(im_) == 0;
}

std::complex<double> Scalar::to_complex() const {
  if (b_ == Backend::Float) return f_;
  return {re_.get_d(), im_.get_d()};
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  if (b_ == Backend::Float) {
    s.f_ = std::conj(f_);
  } else if (b_ == Backend::Gaussian) {
    s.im_ = -im_;
  }
  return s;
}

Scalar Scalar::as_backend(Backend b) const {
  if (b == b_) return *this;
  if (b == Backend::Float) return from_double(re_.get_d(), im_.get_d());
  if (b_ == Backend::Float) throw Error(ErrorKind::BackendMismatch, "cannot convert float to exact");
  if (b == Backend::Rational && sgn(im_) != 0)
    throw Error(ErrorKind::BackendMismatch, "nonreal value has no rational form");
  Scalar s = *this;
  s.b_ = b;
  return s;
}

void Scalar::unify(const Scalar& o, Backend& out) const {
  if (b_ == o.b_) {
    out = b_;
    return;
  }
  bool af = b_ == Backend::Float, bf = o.b_ == Backend::Float;
  if (af || bf) {
    // exact zero is neutral
    if (af && o.is_zero()) { out = Backend::Float; return; }
    if (bf && is_zero()) { out = Backend::Float; return; }
    throw Error(ErrorKind::BackendMismatch, std::string(backend_name(b_)) + " vs " + backend_name(o.b_));
  }
  out = Backend::Gaussian;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Backend b;
  unify(o, b);
  if (b == Backend::Float) {
    f_ = to_complex() + o.to_complex();
    re_ = 0;
    im_ = 0;
  } else {
    re_ += o.re_;
    if (b == Backend::Gaussian) im_ += o.im_;
  }
  b_ = b;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  Backend b;
  unify(o, b);
  if (b == Backend::Float) {
    f_ = to_complex() - o.to_complex();
    re_ = 0;
    im_ = 0;
  } else {
    re_ -= o.re_;
    if (b == Backend::Gaussian) im_ -= o.im_;
  }
  b_ = b;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Backend b;
  unify(o, b);
  if (b == Backend::Float) {
    f_ = to_complex() * o.to_complex();
    re_ = 0;
    im_ = 0;
  } else if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
  } else {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
  }
  b_ = b;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (b_ == Backend::Float) return from_double(1.0) / *this;
  Scalar s = *this;
  if (sgn(im_) == 0) {
    s.re_ = 1 / re_;
    return s;
  }
  mpq_class n = re_ * re_ + im_ * im_;
  s.re_ = re_ / n;
  s.im_ = -im_ / n;
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  Backend b;
  unify(o, b);
  if (b == Backend::Float) {
    f_ = to_complex() / o.to_complex();
    re_ = 0;
    im_ = 0;
    b_ = b;
    return *this;
  }
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    b_ = b;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (b_ == Backend::Float) {
    s.f_ = -f_;
  } else {
    s.re_ = -re_;
    s.im_ = -im_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  bool af = a.b_ == Backend::Float, bf = b.b_ == Backend::Float;
  if (af || bf) {
    if (af && bf) return a.f_ == b.f_;
    return a.to_complex() == b.to_complex();
  }
  return a.re_ == b.re_ && a.im_ == b.im_;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

mpq_class parse_q(const std::string& raw) {
  std::string s = trim(raw);
  if (!s.empty() && s[0] == '+') s = s.substr(1);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw Error(ErrorKind::ParseError, "bad rational '" + raw + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::ParseError, "bad rational '" + raw + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + raw + "'");
  q.canonicalize();
  return q;
}

// Split "a+b i" into real and imaginary text; the imaginary sign is the
// last '+'/'-' that is not at the start of the string.
void split_complex(const std::string& s, std::string& re, std::string& im, bool& has_im) {
  std::string t = trim(s);
  has_im = false;
  if (t.empty() || t.back() != 'i') {
    re = t;
    return;
  }
  has_im = true;
  t = trim(t.substr(0, t.size() - 1));
  size_t cut = std::string::npos;
  for (size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) {
    re = "0";
    im = t;
  } else {
    re = t.substr(0, cut);
    im = t.substr(cut);
  }
  im = trim(im);
  if (im == "+" || im.empty()) im = "1";
  if (im == "-") im = "-1";
}

}  // namespace

Scalar Scalar::parse(const std::string& text, Backend b) {
  std::string re, im;
  bool has_im = false;
  split_complex(text, re, im, has_im);
  if (b == Backend::Float) {
    try {
      double r = std::stod(re);
      double i = has_im ? std::stod(im) : 0.0;
      return from_double(r, i);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad float '" + text + "'");
    }
  }
  mpq_class r = parse_q(re);
  mpq_class i = has_im ? parse_q(im) : mpq_class(0);
  if (b == Backend::Rational) {
    if (sgn(i) != 0) throw Error(ErrorKind::ParseError, "imaginary part in rational field: '" + text + "'");
    return rational(r);
  }
  return gaussian(r, i);
}

std::string Scalar::to_string() const {
  if (b_ == Backend::Float) {
    char buf[64];
    if (f_.imag() == 0.0) {
      std::snprintf(buf, sizeof buf, "%.17g", f_.real());
    } else {
      std::snprintf(buf, sizeof buf, "%.17g%+.17g i", f_.real(), f_.imag());
    }
    return buf;
  }
  if (b_ == Backend::Rational || sgn(im_) == 0) return q_str(re_);
  std::string s = q_str(re_);
  if (sgn(im_) >= 0) s += "+";
  return s + q_str(im_) + " i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lific
