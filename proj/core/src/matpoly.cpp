#include "lific/matpoly.hpp"

#include "lific/linalg.hpp"

namespace lific {

MatrixPolynomial constant_polynomial(const Mat<Scalar>& c) {
  MatrixPolynomial p(c.rows(), c.cols(), 0);
  p[0] = c;
  return p;
}

Mat<Scalar> eval(const MatrixPolynomial& p, const Scalar& x) {
  Mat<Scalar> r(p.rows, p.cols);
  for (int j = p.grade; j >= 0; --j) {
    r = r.scaled(x);
    r += p[j];
  }
  return r;
}

std::vector<std::vector<ScalarPoly>> entries(const MatrixPolynomial& p) {
  std::vector<std::vector<ScalarPoly>> e(p.rows, std::vector<ScalarPoly>(p.cols));
  for (size_t i = 0; i < p.rows; ++i)
    for (size_t j = 0; j < p.cols; ++j) e[i][j] = entry_poly(p, i, j);
  return e;
}

ScalarPoly entry_poly(const MatrixPolynomial& p, size_t i, size_t j) {
  std::vector<Scalar> c;
  c.reserve(static_cast<size_t>(p.grade) + 1);
  for (int k = 0; k <= p.grade; ++k) c.push_back(p[k](i, j));
  return ScalarPoly(std::move(c));
}

Backend common_backend(const MatrixPolynomial& p) {
  Backend b = Backend::Rational;
  for (const auto& m : p.coeffs)
    for (const auto& x : m.data()) {
      if (x.backend() == Backend::Float) return Backend::Float;
      if (x.backend() == Backend::Gaussian) b = Backend::Gaussian;
    }
  return b;
}

ScalarPoly det_poly(const MatrixPolynomial& p) {
  if (p.rows != p.cols) throw Error(ErrorKind::DimensionMismatch, "det_poly needs a square polynomial");
  if (common_backend(p) == Backend::Float) throw Error(ErrorKind::FloatBackendUnsupported, "det_poly is exact only");
  if (p.rows == 0) return ScalarPoly(Scalar(1));
  int deg = p.degree();
  if (deg < 0) return {};
  int D = static_cast<int>(p.rows) * deg;
  std::vector<Scalar> xs, ys;
  for (int t = 0; t <= D; ++t) {
    xs.emplace_back(t);
    ys.push_back(determinant(eval(p, Scalar(t))));
  }
  return interpolate(xs, ys);
}

std::string label_kind_name(LabelKind k) {
  switch (k) {
    case LabelKind::Zero: return "Zero";
    case LabelKind::Identity: return "Identity";
    case LabelKind::Coefficient: return "Coefficient";
    case LabelKind::Expression: return "Expression";
  }
  return "?";
}

bool BlockPolynomial::block_is_zero(size_t s, size_t t) const {
  for (int k = 0; k <= base.grade; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (!base[k](s * n + i, t * n + j).is_zero()) return false;
  return true;
}

std::vector<Form> BlockPolynomial::block_forms(size_t s, size_t t) const {
  if (!forms) throw Error(ErrorKind::MissingProvenance, "block has no register");
  std::vector<Form> v;
  for (int k = 0; k <= forms->grade; ++k) v.push_back((*forms)[k](s, t));
  return v;
}

BlockLabel BlockPolynomial::label(size_t s, size_t t) const {
  std::vector<Form> f = block_forms(s, t);
  BlockLabel lab;
  int nz_power = -1, count = 0;
  for (size_t k = 0; k < f.size(); ++k)
    if (!f[k].is_zero()) {
      ++count;
      nz_power = static_cast<int>(k);
    }
  lab.text = render_block(f, symbol);
  if (count == 0) return lab;
  lab.kind = LabelKind::Expression;
  if (count != 1) return lab;
  const Form& g = f[static_cast<size_t>(nz_power)];
  if (g.terms().size() != 1) return lab;
  const auto& [w, c] = *g.terms().begin();
  if (w.empty() && nz_power == 0) {
    lab.kind = LabelKind::Identity;
    lab.alpha = c;
    lab.power = 0;
  } else if (w.size() == 1 && !symbol_is_aux(w[0]) && !symbol_starred(w[0])) {
    lab.kind = LabelKind::Coefficient;
    lab.alpha = c;
    lab.j = symbol_index(w[0]);
    lab.power = nz_power;
  }
  return lab;
}

std::string BlockPolynomial::render(size_t s, size_t t) const {
  if (forms) return render_block(block_forms(s, t), symbol);
  return block_is_zero(s, t) ? "0" : "*";
}

std::string BlockPolynomial::pretty() const {
  std::vector<std::vector<std::string>> cells(block_rows(), std::vector<std::string>(block_cols()));
  std::vector<size_t> width(block_cols(), 1);
  for (size_t s = 0; s < block_rows(); ++s)
    for (size_t t = 0; t < block_cols(); ++t) {
      cells[s][t] = render(s, t);
      // count code points, not bytes, for alignment
      size_t w = 0;
      for (unsigned char ch : cells[s][t])
        if ((ch & 0xC0) != 0x80) ++w;
      width[t] = std::max(width[t], w);
    }
  std::string out;
  for (size_t s = 0; s < block_rows(); ++s) {
    out += "[ ";
    for (size_t t = 0; t < block_cols(); ++t) {
      const std::string& c = cells[s][t];
      size_t w = 0;
      for (unsigned char ch : c)
        if ((ch & 0xC0) != 0x80) ++w;
      out += c + std::string(width[t] - w, ' ');
      out += t + 1 < block_cols() ? " | " : " ]\n";
    }
  }
  return out;
}

BlockPolynomial make_block(const MatrixPolynomial& base, size_t n, std::optional<FormPoly> forms, StarFlavor flavor) {
  if (n == 0 || base.rows % n != 0 || base.cols % n != 0)
    throw Error(ErrorKind::ShapeMismatch, "dimensions are not multiples of the block size");
  if (forms && (forms->rows * n != base.rows || forms->cols * n != base.cols))
    throw Error(ErrorKind::ShapeMismatch, "register grid does not match the block grid");
  BlockPolynomial b;
  b.base = base;
  b.n = n;
  b.forms = std::move(forms);
  b.flavor = flavor;
  if (b.forms && b.forms->grade != base.grade) *b.forms = with_grade(*b.forms, base.grade);
  return b;
}

size_t block_census(const BlockPolynomial& b) {
  size_t c = 0;
  for (size_t s = 0; s < b.block_rows(); ++s)
    for (size_t t = 0; t < b.block_cols(); ++t)
      if (!b.block_is_zero(s, t)) ++c;
  return c;
}

size_t register_census(const BlockPolynomial& b) {
  if (!b.forms) return block_census(b);
  size_t c = 0;
  for (size_t s = 0; s < b.forms->rows; ++s)
    for (size_t t = 0; t < b.forms->cols; ++t)
      for (int k = 0; k <= b.forms->grade; ++k)
        if (!(*b.forms)[k](s, t).is_zero()) {
          ++c;
          break;
        }
  return c;
}

bool rescan(const BlockPolynomial& b, const MatrixPolynomial& p, const std::vector<Mat<Scalar>>& aux) {
  if (!b.forms) throw Error(ErrorKind::MissingProvenance, "nothing to rescan");
  for (int k = 0; k <= b.base.grade; ++k)
    for (size_t s = 0; s < b.block_rows(); ++s)
      for (size_t t = 0; t < b.block_cols(); ++t) {
        const Form& f = k <= b.forms->grade ? (*b.forms)[k](s, t) : Form();
        Mat<Scalar> v = evaluate(f, p.coeffs, aux, b.n, b.flavor);
        if (v != b.base[k].block(s * b.n, t * b.n, b.n, b.n)) return false;
      }
  return true;
}

}  // namespace lific
