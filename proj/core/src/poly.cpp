#include "lific/poly.hpp"

namespace lific {

ScalarPoly::ScalarPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }

ScalarPoly::ScalarPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

ScalarPoly ScalarPoly::monomial(const Scalar& c, int power) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<size_t>(power) + 1);
  v.back() = c;
  return ScalarPoly(std::move(v));
}

void ScalarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar ScalarPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar();
  return c_[static_cast<size_t>(i)];
}

Scalar ScalarPoly::eval(const Scalar& x) const {
  Scalar r;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

ScalarPoly ScalarPoly::monic() const {
  if (c_.empty()) return {};
  return scaled(lead().inverse());
}

ScalarPoly ScalarPoly::conj() const {
  std::vector<Scalar> v;
  for (const auto& x : c_) v.push_back(x.conj());
  return ScalarPoly(std::move(v));
}

ScalarPoly ScalarPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(x * s);
  return ScalarPoly(std::move(v));
}

ScalarPoly ScalarPoly::reversed(int g) const {
  std::vector<Scalar> v(static_cast<size_t>(g) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<size_t>(g - i)] = c_[static_cast<size_t>(i)];
  return ScalarPoly(std::move(v));
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return ScalarPoly(std::move(v));
}

std::string ScalarPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string t = c_[i].to_string();
    if (!c_[i].is_real()) t = "(" + t + ")";
    if (!s.empty()) s += " + ";
    s += t;
    if (i == 1) s += "*x";
    if (i > 1) s += "*x^" + std::to_string(i);
  }
  return s;
}

void divmod(const ScalarPoly& a, const ScalarPoly& b, ScalarPoly& q, ScalarPoly& r) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) {
    q = ScalarPoly();
    r = a;
    return;
  }
  std::vector<Scalar> quo(static_cast<size_t>(dq) + 1);
  Scalar inv = b.lead().inverse();
  const auto& bc = b.coeffs();
  for (int i = dq; i >= 0; --i) {
    Scalar t = rem[static_cast<size_t>(i + db)] * inv;
    quo[static_cast<size_t>(i)] = t;
    if (t.is_zero()) continue;
    for (int k = 0; k <= db; ++k) rem[static_cast<size_t>(i + k)] -= t * bc[static_cast<size_t>(k)];
  }
  rem.resize(static_cast<size_t>(db));
  q = ScalarPoly(std::move(quo));
  r = ScalarPoly(std::move(rem));
}

ScalarPoly gcd(ScalarPoly a, ScalarPoly b) {
  while (!b.is_zero()) {
    ScalarPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

bool divides(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero()) return b.is_zero();
  ScalarPoly q, r;
  divmod(b, a, q, r);
  return r.is_zero();
}

ScalarPoly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  size_t n = xs.size();
  std::vector<Scalar> dd = ys;
  for (size_t lvl = 1; lvl < n; ++lvl)
    for (size_t i = n - 1; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
  ScalarPoly p;
  for (size_t i = n; i-- > 0;) {
    p = p * ScalarPoly(std::vector<Scalar>{-xs[i], Scalar(1)});
    p += ScalarPoly(dd[i]);
  }
  return p;
}

}  // namespace lific
