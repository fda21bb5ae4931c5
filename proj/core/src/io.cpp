#include "lific/io.hpp"

#include <fstream>
#include <sstream>

namespace lific {

namespace {

const char* field_name(Backend b) {
  switch (b) {
    case Backend::Rational:
      return "rational";
    case Backend::Gaussian:
      return "gaussian";
    case Backend::Float:
      return "float";
  }
  return "rational";
}

Backend field_from_name(const std::string& s) {
  if (s == "rational") return Backend::Rational;
  if (s == "gaussian") return Backend::Gaussian;
  if (s == "float") return Backend::Float;
  throw Error(ErrorKind::SchemaError, "unknown field \"" + s + "\"");
}

// Register coefficients are exact; the imaginary unit decides the backend.
Scalar parse_exact(const std::string& s) {
  return Scalar::parse(s, s.find('i') == std::string::npos ? Backend::Rational : Backend::Gaussian);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::SchemaError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

size_t require_size(const Json& j, const char* key, bool allow_zero) {
  const Json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < (allow_zero ? 0 : 1))
    throw Error(ErrorKind::SchemaError, std::string("\"") + key + "\" must be a " +
                                            (allow_zero ? "non-negative" : "positive") + " integer");
  return static_cast<size_t>(v.get<long long>());
}

Json poly_list(const std::vector<ScalarPoly>& v) {
  Json a = Json::array();
  for (const auto& p : v) {
    Json c = Json::array();
    for (const auto& x : p.coeffs()) c.push_back(x.to_string());
    a.push_back({{"text", p.to_string()}, {"coeffs", c}});
  }
  return a;
}

}  // namespace

Json poly_to_json(const MatrixPolynomial& p) {
  Json j;
  j["rows"] = p.rows;
  j["cols"] = p.cols;
  j["grade"] = p.grade;
  j["field"] = field_name(common_backend(p));
  Json cs = Json::array();
  for (int k = 0; k <= p.grade; ++k) {
    Json m = Json::array();
    for (size_t r = 0; r < p.rows; ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < p.cols; ++c) row.push_back(p[k](r, c).to_string());
      m.push_back(row);
    }
    cs.push_back(m);
  }
  j["coeffs"] = cs;
  return j;
}

MatrixPolynomial poly_from_json(const Json& j) {
  size_t rows = require_size(j, "rows", false), cols = require_size(j, "cols", false);
  size_t grade = require_size(j, "grade", true);
  Backend b = Backend::Rational;
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw Error(ErrorKind::SchemaError, "\"field\" must be a string");
    b = field_from_name(j["field"].get<std::string>());
  }
  const Json& cs = require(j, "coeffs");
  if (!cs.is_array() || cs.size() != grade + 1)
    throw Error(ErrorKind::SchemaError, "\"coeffs\" must hold grade+1 matrices");
  MatrixPolynomial p(rows, cols, static_cast<int>(grade));
  for (size_t k = 0; k <= grade; ++k) {
    const Json& m = cs[k];
    if (!m.is_array() || m.size() != rows)
      throw Error(ErrorKind::SchemaError, "coefficient " + std::to_string(k) + " must have " + std::to_string(rows) +
                                              " rows");
    for (size_t r = 0; r < rows; ++r) {
      if (!m[r].is_array() || m[r].size() != cols)
        throw Error(ErrorKind::SchemaError, "coefficient " + std::to_string(k) + " row " + std::to_string(r) +
                                                " must have " + std::to_string(cols) + " entries");
      for (size_t c = 0; c < cols; ++c) {
        const Json& e = m[r][c];
        if (e.is_string())
          p[static_cast<int>(k)](r, c) = Scalar::parse(e.get<std::string>(), b);
        else if (e.is_number_integer())
          p[static_cast<int>(k)](r, c) = Scalar(static_cast<long>(e.get<long long>())).as_backend(b);
        else if (e.is_number() && b == Backend::Float)
          p[static_cast<int>(k)](r, c) = Scalar::from_double(e.get<double>());
        else
          throw Error(ErrorKind::SchemaError, "entries must be strings in scalar text form");
      }
    }
  }
  return p;
}

Json form_to_json(const Form& f) {
  Json a = Json::array();
  for (const auto& [w, c] : f.terms()) a.push_back({{"word", w}, {"coef", c.to_string()}});
  return a;
}

Form form_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SchemaError, "a register must be a list of terms");
  Form f;
  for (const Json& t : j) {
    const Json& w = require(t, "word");
    const Json& c = require(t, "coef");
    if (!w.is_array() || !c.is_string()) throw Error(ErrorKind::SchemaError, "malformed register term");
    Word word;
    for (const Json& s : w) {
      if (!s.is_number_integer() || s.get<long long>() < 0) throw Error(ErrorKind::SchemaError, "bad symbol");
      word.push_back(static_cast<int>(s.get<long long>()));
    }
    f.add_term(word, parse_exact(c.get<std::string>()));
  }
  return f;
}

Json label_to_json(const BlockLabel& lab) {
  Json j;
  j["kind"] = label_kind_name(lab.kind);
  if (lab.kind == LabelKind::Identity || lab.kind == LabelKind::Coefficient) {
    j["alpha"] = lab.alpha.to_string();
    j["power"] = lab.power;
  }
  if (lab.kind == LabelKind::Coefficient) j["j"] = lab.j;
  j["text"] = lab.text;
  return j;
}

Json block_to_json(const BlockPolynomial& b) {
  Json j = poly_to_json(b.base);
  j["block_size"] = b.n;
  j["star"] = flavor_name(b.flavor);
  j["symbol"] = b.symbol;
  if (!b.forms) return j;
  Json prov = Json::array();
  for (size_t s = 0; s < b.block_rows(); ++s) {
    Json row = Json::array();
    for (size_t t = 0; t < b.block_cols(); ++t) row.push_back(label_to_json(b.label(s, t)));
    prov.push_back(row);
  }
  j["provenance"] = prov;
  Json regs = Json::array();
  for (int k = 0; k <= b.forms->grade; ++k) {
    Json m = Json::array();
    for (size_t s = 0; s < b.forms->rows; ++s) {
      Json row = Json::array();
      for (size_t t = 0; t < b.forms->cols; ++t) row.push_back(form_to_json((*b.forms)[k](s, t)));
      m.push_back(row);
    }
    regs.push_back(m);
  }
  j["registers"] = regs;
  return j;
}

BlockPolynomial block_from_json(const Json& j) {
  MatrixPolynomial base = poly_from_json(j);
  size_t n = j.contains("block_size") ? require_size(j, "block_size", false) : 1;
  if (base.rows % n != 0 || base.cols % n != 0)
    throw Error(ErrorKind::SchemaError, "block_size does not divide the dimensions");
  StarFlavor flavor = StarFlavor::Transpose;
  if (j.contains("star")) flavor = flavor_from_name(j["star"].get<std::string>());
  size_t br = base.rows / n, bc = base.cols / n;
  std::optional<FormPoly> forms;
  if (j.contains("registers")) {
    const Json& regs = j["registers"];
    if (!regs.is_array() || regs.size() != static_cast<size_t>(base.grade) + 1)
      throw Error(ErrorKind::SchemaError, "\"registers\" must hold grade+1 block grids");
    FormPoly f(br, bc, base.grade);
    for (int k = 0; k <= base.grade; ++k) {
      const Json& m = regs[static_cast<size_t>(k)];
      if (!m.is_array() || m.size() != br) throw Error(ErrorKind::SchemaError, "register grid has wrong shape");
      for (size_t s = 0; s < br; ++s) {
        if (!m[s].is_array() || m[s].size() != bc)
          throw Error(ErrorKind::SchemaError, "register grid has wrong shape");
        for (size_t t = 0; t < bc; ++t) f[k](s, t) = form_from_json(m[s][t]);
      }
    }
    forms = std::move(f);
  } else if (j.contains("provenance")) {
    // Labels alone determine the register unless some block is an Expression.
    const Json& prov = j["provenance"];
    if (!prov.is_array() || prov.size() != br) throw Error(ErrorKind::SchemaError, "provenance grid has wrong shape");
    FormPoly f(br, bc, base.grade);
    bool complete = true;
    for (size_t s = 0; s < br && complete; ++s) {
      if (!prov[s].is_array() || prov[s].size() != bc)
        throw Error(ErrorKind::SchemaError, "provenance grid has wrong shape");
      for (size_t t = 0; t < bc; ++t) {
        const Json& lab = prov[s][t];
        std::string kind = require(lab, "kind").get<std::string>();
        if (kind == "Zero") continue;
        if (kind == "Expression") {
          complete = false;
          break;
        }
        Scalar alpha = parse_exact(require(lab, "alpha").get<std::string>());
        int power = lab.value("power", 0);
        if (power < 0 || power > base.grade) throw Error(ErrorKind::SchemaError, "label power out of range");
        if (kind == "Identity")
          f[power](s, t) = Form(alpha);
        else if (kind == "Coefficient")
          f[power](s, t) = Form::coefficient(require(lab, "j").get<int>(), alpha);
        else
          throw Error(ErrorKind::SchemaError, "unknown label kind \"" + kind + "\"");
      }
    }
    if (complete) forms = std::move(f);
  }
  BlockPolynomial b = make_block(base, n, std::move(forms), flavor);
  if (j.contains("symbol") && j["symbol"].is_string()) b.symbol = j["symbol"].get<std::string>();
  return b;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["is_lification"] = r.is_lification;
  j["is_strong"] = r.is_strong;
  j["padding"] = r.padding;
  j["size_law"] = r.size_law;
  j["normalization"] = "monic";
  j["invariant_factors_P"] = poly_list(r.invariant_factors_P);
  j["invariant_factors_L"] = poly_list(r.invariant_factors_L);
  j["invariant_factors_revP"] = poly_list(r.invariant_factors_revP);
  j["invariant_factors_revL"] = poly_list(r.invariant_factors_revL);
  j["det_ratio"] = r.det_ratio_text();
  j["singular"] = r.singular;
  j["right_indices_P"] = r.right_indices_P;
  j["right_indices_L"] = r.right_indices_L;
  j["left_indices_P"] = r.left_indices_P;
  j["left_indices_L"] = r.left_indices_L;
  j["structure_checks"] = r.structure_checks;
  if (r.block_census) j["block_census"] = *r.block_census;
  return j;
}

Json sparsity_to_json(const SparsityReport& r) {
  return {{"count", r.count},
          {"numeric_count", r.numeric_count},
          {"d", r.d},
          {"ell", r.ell},
          {"sparse_bound", r.sparse_bound},
          {"structured_floor", r.structured_floor},
          {"sparse", r.sparse}};
}

Json lification_to_json(const LificationResult& r) {
  Json j;
  j["ell"] = r.ell;
  j["d"] = r.d;
  j["k"] = r.k;
  j["n"] = r.n;
  if (r.structure) j["structure"] = r.structure->name();
  j["condition"] = condition_name(r.condition);
  j["sign"] = r.sign;
  j["shift"] = r.shift;
  j["warnings"] = r.warnings;
  j["blocks"] = block_census(r.L);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j, bool pretty) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path + ": cannot write");
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

}  // namespace lific
