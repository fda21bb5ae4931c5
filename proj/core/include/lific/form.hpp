#pragma once

#include <map>
#include <string>
#include <vector>

#include "lific/matrix.hpp"

namespace lific {

// Noncommutative polynomial in the coefficient symbols P_j, their starred
// versions, and opaque auxiliary matrices. The empty word stands for I.
// Used as the provenance register of a block.
using Word = std::vector<int>;

constexpr int kAuxBase = 1 << 20;

inline int coef_symbol(int j, bool starred = false) { return 2 * j + (starred ? 1 : 0); }
inline int aux_symbol(int a, bool starred = false) { return kAuxBase + 2 * a + (starred ? 1 : 0); }
inline bool symbol_is_aux(int s) { return s >= kAuxBase; }
inline bool symbol_starred(int s) { return (s & 1) != 0; }
inline int symbol_index(int s) { return symbol_is_aux(s) ? (s - kAuxBase) / 2 : s / 2; }
std::string symbol_name(int s, const std::string& letter = "P");

class Form {
 public:
  Form() = default;
  explicit Form(const Scalar& c);

  static Form coefficient(int j, const Scalar& alpha = Scalar(1));
  static Form aux(int a, const Scalar& alpha = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form scaled(const Scalar& c) const;
  Form star(StarFlavor f) const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Form& a, const Form& b);
  friend bool operator==(const Form& a, const Form& b);
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  bool has_aux() const;
  bool has_starred_coefficient() const;
  int max_word_length() const;
  std::string to_string() const;

  void add_term(const Word& w, const Scalar& c);

 private:
  std::map<Word, Scalar> terms_;
};

inline Form star_elem(const Form& x, StarFlavor f) { return x.star(f); }
inline bool elem_is_zero(const Form& x) { return x.is_zero(); }
inline Form scale_elem(const Form& x, const Scalar& c) { return x.scaled(c); }
template <>
inline Form lift<Form>(const Scalar& c) {
  return Form(c);
}

using FormPoly = PolyMat<Form>;

// Replace P_j^star by sigma(j) P_{pi(j)} for a structured polynomial of grade k.
Form normalize(const Form& f, const StructureTag& tag, int k);
FormPoly normalize(const FormPoly& p, const StructureTag& tag, int k);

// Substitute P_j := images[j] (P_j^star := images[j]^star).
Form substitute(const Form& f, const std::vector<Form>& images, StarFlavor flavor);

// Evaluate with concrete n x n coefficient and auxiliary matrices.
Mat<Scalar> evaluate(const Form& f, const std::vector<Mat<Scalar>>& coefs, const std::vector<Mat<Scalar>>& aux,
                     size_t n, StarFlavor flavor);

// Symbolic grade-k polynomial with coefficients P_0..P_k as a 1x1 block grid.
FormPoly symbolic_polynomial(int k);

// Text of one block entry as a polynomial in lambda, e.g. "(P6+λP7+λ²P8)/2".
std::string render_block(const std::vector<Form>& by_power, const std::string& letter = "P");

}  // namespace lific
