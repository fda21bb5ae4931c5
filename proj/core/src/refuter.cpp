#include "lific/refuter.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "lific/error.hpp"

namespace lific {

namespace {

[[noreturn]] void overflow() { throw Error(ErrorKind::SizeCapExceeded, "refuter coefficient overflow"); }

int64_t mul64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

int64_t add64(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

}  // namespace

SmallQ::SmallQ(int64_t n, int64_t d) : num(n), den(d) {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

SmallQ operator+(const SmallQ& a, const SmallQ& b) {
  int64_t g = std::gcd(a.den, b.den);
  int64_t bd = b.den / g, ad = a.den / g;
  return SmallQ(add64(mul64(a.num, bd), mul64(b.num, ad)), mul64(a.den, bd));
}

SmallQ operator-(const SmallQ& a, const SmallQ& b) { return a + (-b); }

SmallQ operator*(const SmallQ& a, const SmallQ& b) {
  if (a.num == 0 || b.num == 0) return {};
  int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den), g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  return SmallQ(mul64(a.num / g1, b.num / g2), mul64(a.den / g2, b.den / g1));
}

SmallQ operator/(const SmallQ& a, const SmallQ& b) {
  if (b.num == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return a * SmallQ(b.den, b.num);
}

SmallC operator*(const SmallC& a, const SmallC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

SmallC operator/(const SmallC& a, const SmallC& b) {
  SmallQ n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  SmallC num = a * b.conj();
  return {num.re / n, num.im / n};
}

SmallC SmallC::from_scalar(const Scalar& s) {
  if (!s.is_exact()) throw Error(ErrorKind::FloatBackendUnsupported, "refuter grid must be exact");
  auto conv = [](const mpq_class& q) {
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) overflow();
    return SmallQ(q.get_num().get_si(), q.get_den().get_si());
  };
  return {conv(s.re()), conv(s.im())};
}

Scalar SmallC::to_scalar() const {
  mpq_class r(re.num, re.den), i(im.num, im.den);
  if (im.is_zero()) return Scalar::rational(r);
  return Scalar::gaussian(r, i);
}

std::string SmallC::to_string() const { return to_scalar().to_string(); }

MPoly::MPoly(const SmallC& c) {
  if (!c.is_zero()) t_.push_back({0, c});
}

MPoly MPoly::variable(int v, const SmallC& c) {
  MPoly p;
  if (!c.is_zero()) p.t_.push_back({var_key(v), c});
  return p;
}

MPoly MPoly::product(int a, int b, const SmallC& c) {
  MPoly p;
  if (!c.is_zero()) p.t_.push_back({static_cast<Key>(var_key(a) + var_key(b)), c});
  return p;
}

SmallC MPoly::coeff(Key k) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), k, [](const auto& e, Key key) { return e.first < key; });
  return it != t_.end() && it->first == k ? it->second : SmallC();
}

void MPoly::add_term(Key k, const SmallC& c) {
  auto it = std::lower_bound(t_.begin(), t_.end(), k, [](const auto& e, Key key) { return e.first < key; });
  if (it != t_.end() && it->first == k) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  } else if (!c.is_zero()) {
    t_.insert(it, {k, c});
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      for (int v = 0; v < kRefuterVars; ++v)
        if (MPoly::exponent(ka, v) + MPoly::exponent(kb, v) > 7) overflow();
      r.add_term(static_cast<MPoly::Key>(ka + kb), ca * cb);
    }
  return r;
}

MPoly MPoly::scaled(const SmallC& c) const {
  MPoly r;
  if (c.is_zero()) return r;
  r.t_ = t_;
  for (auto& e : r.t_) e.second = e.second * c;
  return r;
}

size_t MPoly::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) { h = (h ^ x) * 1099511628211ull; };
  for (const auto& [k, c] : t_) {
    mix(k);
    mix(static_cast<uint64_t>(c.re.num));
    mix(static_cast<uint64_t>(c.re.den));
    mix(static_cast<uint64_t>(c.im.num));
    mix(static_cast<uint64_t>(c.im.den));
  }
  return h;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::string s;
  for (size_t n = 0; n < t_.size(); ++n) {
    const auto& [k, c] = t_[n];
    std::string mono;
    for (int v = 0; v < kRefuterVars; ++v) {
      int e = exponent(k, v);
      std::string name = v < static_cast<int>(names.size()) ? names[static_cast<size_t>(v)] : "p" + std::to_string(v);
      for (int r = 0; r < e; ++r) mono += name;
    }
    std::string cs = c.to_string();
    bool neg = c.im.is_zero() && c.re.num < 0;
    if (neg) cs = (-c).to_string();
    if (!c.im.is_zero()) cs = "(" + cs + ")";
    if (n > 0) s += neg ? "-" : "+";
    else if (neg) s += "-";
    if (mono.empty())
      s += cs;
    else if (cs == "1")
      s += mono;
    else
      s += cs + mono;
  }
  return s;
}

MPoly RefuterSpace::star(const MPoly& p) const {
  if (tag.star == StarFlavor::Transpose) return p;
  MPoly r;
  for (const auto& [k, c] : p.terms()) {
    MPoly m(c.conj());
    for (int v = 0; v < kRefuterVars; ++v)
      for (int e = 0; e < MPoly::exponent(k, v); ++e)
        m = m * MPoly::variable(star_var[static_cast<size_t>(v)], SmallC(star_sign[static_cast<size_t>(v)]));
    r += m;
  }
  return r;
}

MPoly RefuterSpace::target(int m) const {
  size_t j = static_cast<size_t>(m);
  if (target_var[j] < 0) return MPoly();
  return MPoly::variable(target_var[j], SmallC(target_sign[j]));
}

void RefuterSpace::assign(Template& t, size_t orbit, const MPoly& value) const {
  const Orbit& o = orbits[orbit];
  t[static_cast<size_t>(o.a.i)][static_cast<size_t>(o.a.s)][static_cast<size_t>(o.a.t)] = value;
  if (o.partner)
    t[static_cast<size_t>(o.partner->i)][static_cast<size_t>(o.partner->s)][static_cast<size_t>(o.partner->t)] =
        star(value).scaled(SmallC(o.sigma));
}

void RefuterSpace::assign(Template& t, size_t orbit, size_t option) const {
  const Orbit& o = orbits[orbit];
  t[static_cast<size_t>(o.a.i)][static_cast<size_t>(o.a.s)][static_cast<size_t>(o.a.t)] = options[orbit][option];
  if (o.partner)
    t[static_cast<size_t>(o.partner->i)][static_cast<size_t>(o.partner->s)][static_cast<size_t>(o.partner->t)] =
        partner_options[orbit][option];
}

void RefuterSpace::shuffle(uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (size_t o = 0; o < options.size(); ++o) {
    std::vector<size_t> perm(options[o].size());
    std::iota(perm.begin(), perm.end(), size_t(0));
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<MPoly> a, b;
    for (size_t k : perm) {
      a.push_back(options[o][k]);
      b.push_back(partner_options[o][k]);
    }
    options[o] = std::move(a);
    partner_options[o] = std::move(b);
  }
}

unsigned long long RefuterSpace::template_count() const {
  unsigned long long n = 1;
  for (const auto& o : options)
    if (__builtin_mul_overflow(n, static_cast<unsigned long long>(o.size()), &n)) overflow();
  return n;
}

std::vector<Scalar> default_refuter_grid() {
  return {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar::rational(1, 2), Scalar::rational(-1, 2)};
}

std::vector<Scalar> parse_grid(const std::string& text) {
  std::vector<Scalar> g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    g.push_back(Scalar::parse(item, item.find('i') == std::string::npos ? Backend::Rational : Backend::Gaussian));
  }
  if (g.empty()) throw Error(ErrorKind::EmptyGrid, "grid is empty");
  return g;
}

RefuterSpace make_refuter_space(const StructureTag& tag, const std::vector<Scalar>& grid_in, bool allow_products) {
  RefuterSpace sp;
  sp.tag = tag;
  sp.allow_products = allow_products;
  std::vector<Scalar> grid = grid_in.empty() ? default_refuter_grid() : grid_in;
  auto push_unique = [&sp](const SmallC& c) {
    if (std::find(sp.grid.begin(), sp.grid.end(), c) == sp.grid.end()) sp.grid.push_back(c);
  };
  for (const Scalar& g : grid) {
    if (g.is_zero()) throw Error(ErrorKind::SchemaError, "grid values must be nonzero");
    push_unique(SmallC::from_scalar(g));
  }
  if (sp.grid.empty()) throw Error(ErrorKind::EmptyGrid, "grid is empty");
  // Conjugate-transpose structures need imaginary constants on self-paired slots.
  if (tag.star == StarFlavor::ConjTranspose) {
    size_t n = sp.grid.size();
    for (size_t i = 0; i < n; ++i) push_unique(sp.grid[i] * SmallC(SmallQ(0), SmallQ(1)));
  }

  // Coefficient relations p_j^star = sigma_j p_{pi(j)}.
  for (int j = 0; j <= 4; ++j) {
    size_t u = static_cast<size_t>(j);
    int pj = tag.pi(j, 4), sj = tag.sigma(j);
    if (tag.star == StarFlavor::ConjTranspose) {
      sp.target_var[u] = j;
      sp.target_sign[u] = 1;
      sp.star_var[u] = pj;
      sp.star_sign[u] = sj;
      continue;
    }
    // Scalars satisfy p^T = p, so the relation identifies coefficients.
    if (pj == j) {
      sp.target_var[u] = sj == 1 ? j : -1;
      sp.target_sign[u] = 1;
    } else if (pj > j) {
      sp.target_var[u] = j;
      sp.target_sign[u] = 1;
    } else {
      sp.target_var[u] = sp.target_var[static_cast<size_t>(pj)];
      sp.target_sign[u] = sj * sp.target_sign[static_cast<size_t>(pj)];
    }
    sp.star_var[u] = j;
    sp.star_sign[u] = 1;
  }
  std::vector<int> vars;
  for (int j = 0; j <= 4; ++j)
    if (sp.target_var[static_cast<size_t>(j)] == j) vars.push_back(j);
  if (vars.empty()) throw Error(ErrorKind::DegenerateStructure, tag.name() + " forces scalar quartics to vanish");
  sp.nvars = static_cast<int>(vars.size());
  for (int v = 0; v < kRefuterVars; ++v) sp.var_names.push_back("p" + std::to_string(v));

  // Orbits of slots under (l_i)_{t,s}^star = sigma_i (l_{pi(i)})_{s,t}.
  bool seen[3][2][2] = {};
  for (int i = 0; i <= 2; ++i)
    for (int s = 0; s < 2; ++s)
      for (int t = 0; t < 2; ++t) {
        if (seen[i][s][t]) continue;
        Orbit o;
        o.a = {i, s, t};
        o.sigma = tag.sigma(i);
        Slot q{tag.pi(i, 2), t, s};
        seen[i][s][t] = true;
        if (!(q.i == i && q.s == s && q.t == t)) {
          o.partner = q;
          seen[q.i][q.s][q.t] = true;
        }
        sp.orbits.push_back(o);
      }

  std::vector<SmallC> units = {SmallC(1), SmallC(-1)};
  for (const Orbit& o : sp.orbits) {
    std::vector<MPoly> cand;
    auto add = [&cand](const MPoly& p) {
      if (std::find(cand.begin(), cand.end(), p) == cand.end()) cand.push_back(p);
    };
    add(MPoly());
    for (const SmallC& b : sp.grid) add(MPoly(b));
    for (int v : vars)
      for (const SmallC& b : sp.grid) add(MPoly::variable(v, b));
    if (allow_products && o.a.i == 1 && o.a.s == 0 && o.a.t == 0) {
      // c + beta p_j + gamma p_a p_b with c, beta, gamma in {0, 1, -1}
      std::vector<MPoly> lin = {MPoly()}, quad = {MPoly()};
      for (int v : vars)
        for (const SmallC& u : units) lin.push_back(MPoly::variable(v, u));
      for (size_t a = 0; a < vars.size(); ++a)
        for (size_t b = a; b < vars.size(); ++b)
          for (const SmallC& u : units) quad.push_back(MPoly::product(vars[a], vars[b], u));
      for (const MPoly& c : {MPoly(), MPoly(SmallC(1)), MPoly(SmallC(-1))})
        for (const MPoly& l : lin)
          for (const MPoly& q : quad) add(c + l + q);
    }
    std::vector<MPoly> ok, partner;
    for (const MPoly& p : cand) {
      MPoly q = sp.star(p).scaled(SmallC(o.sigma));
      if (!o.partner && !(q == p)) continue;
      ok.push_back(p);
      partner.push_back(std::move(q));
    }
    sp.options.push_back(std::move(ok));
    sp.partner_options.push_back(std::move(partner));
  }
  return sp;
}

std::array<MPoly, 5> det_coefficients(const Template& t) {
  std::array<MPoly, 5> c;
  for (size_t i = 0; i <= 2; ++i)
    for (size_t j = 0; j <= 2; ++j) {
      c[i + j] += t[i][0][0] * t[j][1][1];
      c[i + j] -= t[i][0][1] * t[j][1][0];
    }
  return c;
}

namespace {

// alpha forced by c_m = alpha p_m: nullopt = rejected, {nullopt} = unconstrained.
std::optional<std::optional<SmallC>> alpha_from(const RefuterSpace& sp, int m, const MPoly& cm) {
  MPoly tg = sp.target(m);
  if (tg.is_zero()) {
    if (!cm.is_zero()) return std::nullopt;
    return std::optional<SmallC>();
  }
  const auto& [key, sign] = tg.terms().front();
  SmallC a = cm.coeff(key) / sign;
  if (a.is_zero() || !(cm == tg.scaled(a))) return std::nullopt;
  return std::optional<SmallC>(a);
}

bool merge_alpha(std::optional<SmallC>& acc, const std::optional<SmallC>& a) {
  if (!a) return true;
  if (!acc) {
    acc = a;
    return true;
  }
  return *acc == *a;
}

}  // namespace

std::optional<SmallC> check_template(const RefuterSpace& space, const Template& t) {
  std::array<MPoly, 5> c = det_coefficients(t);
  std::optional<SmallC> alpha;
  for (int m = 0; m <= 4; ++m) {
    auto a = alpha_from(space, m, c[static_cast<size_t>(m)]);
    if (!a || !merge_alpha(alpha, *a)) return std::nullopt;
  }
  return alpha;
}

void for_each_template(const RefuterSpace& space, const std::function<void(const Template&)>& f) {
  Template t;
  std::function<void(size_t)> rec = [&](size_t o) {
    if (o == space.orbits.size()) {
      f(t);
      return;
    }
    for (size_t k = 0; k < space.options[o].size(); ++k) {
      space.assign(t, o, k);
      rec(o + 1);
    }
  };
  rec(0);
}

std::string template_to_string(const RefuterSpace& space, const Template& t) {
  auto entry = [&](size_t s, size_t u) {
    std::string r;
    static const char* lam[] = {"", "λ", "λ²"};
    for (size_t i = 0; i <= 2; ++i) {
      const MPoly& p = t[i][s][u];
      if (p.is_zero()) continue;
      std::string ps = p.to_string(space.var_names);
      if (i > 0 && p.terms().size() > 1) ps = "(" + ps + ")";
      else if (i > 0 && (ps == "1" || ps == "-1")) ps.pop_back();
      ps += lam[i];
      if (r.empty()) r = ps;
      else if (ps[0] == '-') r += " - " + ps.substr(1);
      else r += " + " + ps;
    }
    return r.empty() ? std::string("0") : r;
  };
  return "[[" + entry(0, 0) + ", " + entry(0, 1) + "], [" + entry(1, 0) + ", " + entry(1, 1) + "]]";
}

namespace {

struct Partial {
  Template t;
  std::optional<SmallC> alpha;
};

RefuteReport base_report(const RefuterSpace& space) {
  RefuteReport r;
  r.structure = space.tag.name();
  for (const SmallC& g : space.grid) r.grid.push_back(g.to_string());
  r.allow_products = space.allow_products;
  r.templates_tested = space.template_count();
  return r;
}

void record(RefuteReport& r, const RefuterSpace& space, const Template& t, size_t max_examples) {
  ++r.satisfying_count;
  if (r.examples.size() < max_examples) r.examples.push_back(template_to_string(space, t));
}

// Enumerate the orbits of one family and keep assignments passing the
// coefficient equations listed in `checks` (powers of lambda fully determined by the family).
std::vector<Partial> enumerate_family(const RefuterSpace& sp, const std::vector<size_t>& fam,
                                      const std::vector<int>& checks) {
  std::vector<Partial> out;
  Template t;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == fam.size()) {
      std::optional<SmallC> alpha;
      for (int m : checks) {
        MPoly cm;
        for (size_t i = 0; i <= 2; ++i) {
          size_t j = static_cast<size_t>(m) - i;
          if (j > 2) continue;
          cm += t[i][0][0] * t[j][1][1];
          cm -= t[i][0][1] * t[j][1][0];
        }
        auto a = alpha_from(sp, m, cm);
        if (!a || !merge_alpha(alpha, *a)) return;
      }
      out.push_back({t, alpha});
      return;
    }
    for (size_t v = 0; v < sp.options[fam[k]].size(); ++v) {
      sp.assign(t, fam[k], v);
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

void overlay(Template& dst, const Template& src, int power) {
  for (size_t s = 0; s < 2; ++s)
    for (size_t u = 0; u < 2; ++u) dst[static_cast<size_t>(power)][s][u] = src[static_cast<size_t>(power)][s][u];
}

}  // namespace

RefuteReport refute(const RefuterSpace& space_in, const RefuteOptions& opts) {
  RefuterSpace space = space_in;
  if (opts.shuffle_seed) space.shuffle(*opts.shuffle_seed);
  RefuteReport rep = base_report(space);

  std::vector<size_t> inner, fam0, fam2;
  bool coupled = space.tag.pi(0, 2) != 0;  // powers 0 and 2 paired by the structure
  for (size_t o = 0; o < space.orbits.size(); ++o) {
    int i = space.orbits[o].a.i;
    if (i == 1)
      inner.push_back(o);
    else if (i == 0 || coupled)
      fam0.push_back(o);
    else
      fam2.push_back(o);
  }

  // Outer survivors: power-0 and power-2 coefficients with alpha constraints.
  std::vector<Partial> outer;
  if (coupled) {
    outer = enumerate_family(space, fam0, {0, 4});
  } else {
    std::vector<Partial> s0 = enumerate_family(space, fam0, {0}), s2 = enumerate_family(space, fam2, {4});
    for (const Partial& a : s0)
      for (const Partial& b : s2) {
        Partial p{a.t, a.alpha};
        if (!merge_alpha(p.alpha, b.alpha)) continue;
        overlay(p.t, b.t, 2);
        outer.push_back(std::move(p));
      }
  }
  rep.outer_survivors = outer.size();

  // Inner assignments keyed by their lambda^2 contribution x00 x11 - x01 x10.
  std::vector<Template> inner_t;
  {
    Template t;
    std::function<void(size_t)> rec = [&](size_t k) {
      if (k == inner.size()) {
        inner_t.push_back(t);
        return;
      }
      for (size_t v = 0; v < space.options[inner[k]].size(); ++v) {
        space.assign(t, inner[k], v);
        rec(k + 1);
      }
    };
    rec(0);
  }
  rep.inner_assignments = inner_t.size();
  auto q_of = [](const Template& t) { return t[1][0][0] * t[1][1][1] - t[1][0][1] * t[1][1][0]; };
  std::vector<std::pair<size_t, uint32_t>> index;
  index.reserve(inner_t.size());
  for (size_t n = 0; n < inner_t.size(); ++n) index.push_back({q_of(inner_t[n]).hash(), static_cast<uint32_t>(n)});
  std::sort(index.begin(), index.end());

  MPoly p2 = space.target(2);
  auto full_check = [&](const Partial& o, const Template& in) {
    Template t = o.t;
    overlay(t, in, 1);
    ++rep.full_checks;
    if (check_template(space, t)) record(rep, space, t, opts.max_examples);
  };
  for (const Partial& o : outer) {
    const Template& t = o.t;
    MPoly cross = t[0][0][0] * t[2][1][1] + t[2][0][0] * t[0][1][1] - t[0][0][1] * t[2][1][0] - t[2][0][1] * t[0][1][0];
    if (!o.alpha && !p2.is_zero()) {
      for (const Template& in : inner_t) full_check(o, in);
      continue;
    }
    MPoly want = (o.alpha ? p2.scaled(*o.alpha) : MPoly()) - cross;
    size_t h = want.hash();
    auto lo = std::lower_bound(index.begin(), index.end(), std::make_pair(h, uint32_t(0)));
    for (auto it = lo; it != index.end() && it->first == h; ++it) {
      const Template& in = inner_t[it->second];
      if (q_of(in) == want) full_check(o, in);
    }
  }
  return rep;
}

RefuteReport refute_brute_force(const RefuterSpace& space, unsigned long long cap) {
  RefuteReport rep = base_report(space);
  if (rep.templates_tested > cap) throw Error(ErrorKind::SizeCapExceeded, "template space exceeds the brute-force cap");
  for_each_template(space, [&](const Template& t) {
    ++rep.full_checks;
    if (check_template(space, t)) record(rep, space, t, 4);
  });
  return rep;
}

}  // namespace lific
