#include "lific/form.hpp"

#include <algorithm>
#include <sstream>

namespace lific {

std::string symbol_name(int s, const std::string& letter) {
  std::string base;
  if (symbol_is_aux(s)) {
    static const char* names[] = {"X", "Y", "Z", "U", "V", "W"};
    int a = symbol_index(s);
    base = a < 6 ? names[a] : "X" + std::to_string(a);
  } else {
    base = letter + std::to_string(symbol_index(s));
  }
  if (symbol_starred(s)) base += "^*";
  return base;
}

Form::Form(const Scalar& c) {
  if (!c.is_zero()) terms_[Word{}] = c;
}

Form Form::coefficient(int j, const Scalar& alpha) {
  Form f;
  f.add_term(Word{coef_symbol(j)}, alpha);
  return f;
}

Form Form::aux(int a, const Scalar& alpha) {
  Form f;
  f.add_term(Word{aux_symbol(a)}, alpha);
  return f;
}

void Form::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Form Form::scaled(const Scalar& c) const {
  Form f;
  if (c.is_zero()) return f;
  for (const auto& [w, x] : terms_) f.terms_.emplace(w, x * c);
  return f;
}

Form Form::star(StarFlavor fl) const {
  Form f;
  for (const auto& [w, c] : terms_) {
    Word r(w.rbegin(), w.rend());
    for (int& s : r) s ^= 1;
    f.add_term(r, fl == StarFlavor::ConjTranspose ? c.conj() : c);
  }
  return f;
}

Form operator*(const Form& a, const Form& b) {
  Form f;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      f.add_term(w, ca * cb);
    }
  return f;
}

bool operator==(const Form& a, const Form& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (it->first != w || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

bool Form::has_aux() const {
  for (const auto& [w, c] : terms_)
    for (int s : w)
      if (symbol_is_aux(s)) return true;
  return false;
}

bool Form::has_starred_coefficient() const {
  for (const auto& [w, c] : terms_)
    for (int s : w)
      if (!symbol_is_aux(s) && symbol_starred(s)) return true;
  return false;
}

int Form::max_word_length() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, static_cast<int>(w.size()));
  return m;
}

namespace {

std::string word_text(const Word& w, const std::string& letter) {
  if (w.empty()) return "I";
  std::string s;
  for (int x : w) s += symbol_name(x, letter);
  return s;
}

// "c*word" with unit coefficients folded into a sign.
std::string term_text(const Word& w, const Scalar& c, const std::string& lam, bool first,
                      const std::string& letter = "P") {
  std::string body = lam + word_text(w, letter);
  std::string sign, coef;
  if (c.is_one()) {
    sign = first ? "" : "+";
  } else if ((-c).is_one()) {
    sign = "-";
  } else {
    std::string t = c.to_string();
    bool neg = c.is_real() && sgn(c.re()) < 0;
    if (neg) {
      sign = "-";
      t = (-c).to_string();
    } else {
      sign = first ? "" : "+";
    }
    if (c.is_real() && c.is_exact() && c.re().get_den() != 1 && !body.empty()) {
      // p/q times a word prints as "p" + word + "/q".
      mpq_class a = abs(c.re());
      std::string num = a.get_num() == 1 ? "" : a.get_num().get_str();
      return sign + num + body + "/" + a.get_den().get_str();
    }
    if (!c.is_real()) t = "(" + t + ")";
    bool bare = c.is_real() && t.find('/') == std::string::npos;
    coef = t + (w.empty() || bare ? "" : "*");
  }
  return sign + coef + body;
}

std::string lam_power(int i) {
  if (i == 0) return "";
  if (i == 1) return "λ";
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = "λ";
  std::string digits = std::to_string(i);
  for (char ch : digits) s += sup[ch - '0'];
  return s;
}

}  // namespace

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    s += term_text(w, c, "", first);
    first = false;
  }
  return s;
}

std::string render_block(const std::vector<Form>& by_power, const std::string& letter) {
  // Factor out a common coefficient when every term shares it.
  const Scalar* common = nullptr;
  bool uniform = true;
  for (const auto& f : by_power)
    for (const auto& [w, c] : f.terms()) {
      if (!common)
        common = &c;
      else if (!(c == *common))
        uniform = false;
    }
  if (!common) return "0";
  Scalar factor(1);
  if (uniform && !common->is_one()) {
    factor = *common;
  } else if (!uniform) {
    // All coefficients fractional: pull out the common denominator.
    mpz_class den = 1;
    bool fractional = true;
    for (const auto& f : by_power)
      for (const auto& [w, c] : f.terms()) {
        if (!c.is_exact() || !c.is_real() || c.re().get_den() == 1) fractional = false;
        if (fractional) den = lcm(den, mpz_class(c.re().get_den()));
      }
    if (fractional) factor = Scalar::rational(mpq_class(1, den));
  }
  std::string inner;
  bool first = true;
  size_t nterms = 0;
  for (size_t i = 0; i < by_power.size(); ++i)
    for (const auto& [w, c] : by_power[i].terms()) {
      inner += term_text(w, c / factor, lam_power(static_cast<int>(i)), first, letter);
      first = false;
      ++nterms;
    }
  if (factor.is_one()) return inner;
  if ((-factor).is_one()) return nterms == 1 ? "-" + inner : "-(" + inner + ")";
  if (factor.is_real() && factor.re().get_num() == 1 && factor.re().get_den() != 1) {
    std::string den = factor.re().get_den().get_str();
    return nterms == 1 ? inner + "/" + den : "(" + inner + ")/" + den;
  }
  return factor.to_string() + "*(" + inner + ")";
}

Form normalize(const Form& f, const StructureTag& tag, int k) {
  Form out;
  for (const auto& [w, c] : f.terms()) {
    Word nw;
    Scalar coef = c;
    for (int s : w) {
      if (!symbol_is_aux(s) && symbol_starred(s)) {
        int j = symbol_index(s);
        coef *= Scalar(tag.sigma(j));
        nw.push_back(coef_symbol(tag.pi(j, k)));
      } else {
        nw.push_back(s);
      }
    }
    out.add_term(nw, coef);
  }
  return out;
}

FormPoly normalize(const FormPoly& p, const StructureTag& tag, int k) {
  FormPoly r = p;
  for (auto& m : r.coeffs)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) = normalize(m(i, j), tag, k);
  return r;
}

Form substitute(const Form& f, const std::vector<Form>& images, StarFlavor flavor) {
  Form out;
  for (const auto& [w, c] : f.terms()) {
    Form r(c);
    for (int s : w) {
      Form sym;
      if (symbol_is_aux(s)) {
        sym = Form::aux(symbol_index(s));
        if (symbol_starred(s)) sym = sym.star(flavor);
      } else {
        int j = symbol_index(s);
        if (j >= static_cast<int>(images.size())) throw Error(ErrorKind::DimensionMismatch, "substitute: missing image");
        sym = symbol_starred(s) ? images[static_cast<size_t>(j)].star(flavor) : images[static_cast<size_t>(j)];
      }
      r = r * sym;
    }
    out += r;
  }
  return out;
}

Mat<Scalar> evaluate(const Form& f, const std::vector<Mat<Scalar>>& coefs, const std::vector<Mat<Scalar>>& aux,
                     size_t n, StarFlavor flavor) {
  Mat<Scalar> out(n, n);
  for (const auto& [w, c] : f.terms()) {
    Mat<Scalar> r = Mat<Scalar>::identity(n).scaled(c);
    for (int s : w) {
      const auto& src = symbol_is_aux(s) ? aux : coefs;
      size_t idx = static_cast<size_t>(symbol_index(s));
      if (idx >= src.size()) throw Error(ErrorKind::DimensionMismatch, "evaluate: missing matrix for " + symbol_name(s));
      r = r * (symbol_starred(s) ? src[idx].star(flavor) : src[idx]);
    }
    out += r;
  }
  return out;
}

FormPoly symbolic_polynomial(int k) {
  FormPoly p(1, 1, k);
  for (int j = 0; j <= k; ++j) p[j](0, 0) = Form::coefficient(j);
  return p;
}

}  // namespace lific
