#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lific/scalar.hpp"
#include "lific/structure.hpp"

namespace lific {

// Exhaustive search over scalar 2x2 quadratic companion templates for a
// structured quartic p(lambda) = sum p_j lambda^j. A finite-grid empirical
// check, not a proof: constants range over the given grid only.

// Exact rational with int64 parts; arithmetic throws SizeCapExceeded on overflow.
struct SmallQ {
  int64_t num = 0, den = 1;
  SmallQ() = default;
  SmallQ(int64_t n, int64_t d = 1);
  bool is_zero() const { return num == 0; }
  friend SmallQ operator+(const SmallQ& a, const SmallQ& b);
  friend SmallQ operator-(const SmallQ& a, const SmallQ& b);
  friend SmallQ operator*(const SmallQ& a, const SmallQ& b);
  friend SmallQ operator/(const SmallQ& a, const SmallQ& b);
  SmallQ operator-() const { return {-num, den}; }
  friend bool operator==(const SmallQ& a, const SmallQ& b) { return a.num == b.num && a.den == b.den; }
};

struct SmallC {
  SmallQ re, im;
  SmallC() = default;
  SmallC(SmallQ r, SmallQ i = {}) : re(r), im(i) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  SmallC conj() const { return {re, -im}; }
  friend SmallC operator+(const SmallC& a, const SmallC& b) { return {a.re + b.re, a.im + b.im}; }
  friend SmallC operator-(const SmallC& a, const SmallC& b) { return {a.re - b.re, a.im - b.im}; }
  friend SmallC operator*(const SmallC& a, const SmallC& b);
  friend SmallC operator/(const SmallC& a, const SmallC& b);
  SmallC operator-() const { return {-re, -im}; }
  friend bool operator==(const SmallC& a, const SmallC& b) { return a.re == b.re && a.im == b.im; }
  static SmallC from_scalar(const Scalar& s);
  Scalar to_scalar() const;
  std::string to_string() const;
};

constexpr int kRefuterVars = 5;

// Polynomial in p_0..p_4 (or their canonical representatives); the monomial
// key packs one 3-bit exponent per variable.
class MPoly {
 public:
  using Key = uint16_t;
  MPoly() = default;
  explicit MPoly(const SmallC& c);
  static MPoly variable(int v, const SmallC& c = SmallC(1));
  static MPoly product(int a, int b, const SmallC& c = SmallC(1));

  bool is_zero() const { return t_.empty(); }
  const std::vector<std::pair<Key, SmallC>>& terms() const { return t_; }
  // Coefficient of a monomial (zero if absent).
  SmallC coeff(Key k) const;
  static Key var_key(int v) { return static_cast<Key>(1u << (3 * v)); }
  static int exponent(Key k, int v) { return (k >> (3 * v)) & 7; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const SmallC& c) const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  size_t hash() const;

  // Names come from `names[v]`; default p0..p4.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  void add_term(Key k, const SmallC& c);
  std::vector<std::pair<Key, SmallC>> t_;
};

struct MPolyHash {
  size_t operator()(const MPoly& p) const { return p.hash(); }
};

// (l_i)_{s,t}, i = power 0..2, s,t = 0..1.
using Template = std::array<std::array<std::array<MPoly, 2>, 2>, 3>;

struct Slot {
  int i = 0, s = 0, t = 0;
};

// The free slot `a` of an orbit; the partner (if any) holds sigma * star(value).
struct Orbit {
  Slot a;
  std::optional<Slot> partner;
  int sigma = 1;
};

struct RefuterSpace {
  StructureTag tag;
  std::vector<SmallC> grid;  // constants beta (for the conjugate-transpose flavor, also i*beta)
  bool allow_products = false;
  // p_j = target_sign[j] * var target_var[j], or 0 when target_var[j] < 0.
  std::array<int, 5> target_var{}, target_sign{};
  int nvars = 0;
  std::vector<std::string> var_names;
  // star of variable v: star_sign[v] * variable star_var[v] (conjugate-transpose flavor only).
  std::array<int, 5> star_var{}, star_sign{};
  std::vector<Orbit> orbits;
  std::vector<std::vector<MPoly>> options;  // per orbit, admissible values of the free slot
  std::vector<std::vector<MPoly>> partner_options;  // sigma * star(option), aligned with options

  MPoly star(const MPoly& p) const;
  MPoly target(int m) const;  // p_m expressed in the variables
  void assign(Template& t, size_t orbit, const MPoly& value) const;
  void assign(Template& t, size_t orbit, size_t option) const;
  // Permutes the options of every orbit (keeps partner values aligned).
  void shuffle(uint64_t seed);
  unsigned long long template_count() const;
};

// Grid defaults to {1,-1,2,-2,1/2,-1/2}. Throws EmptyGrid, SchemaError (zero in grid)
// and DegenerateStructure (the structure forces p = 0, e.g. T-skew-symmetric scalars).
RefuterSpace make_refuter_space(const StructureTag& tag, const std::vector<Scalar>& grid = {},
                                bool allow_products = false);
std::vector<Scalar> default_refuter_grid();
std::vector<Scalar> parse_grid(const std::string& text);

// Coefficients c_0..c_4 of det L(lambda) as polynomials in the variables.
std::array<MPoly, 5> det_coefficients(const Template& t);

// Some alpha != 0 with det L = alpha p identically, if it exists.
std::optional<SmallC> check_template(const RefuterSpace& space, const Template& t);

// Calls f for every template of the space (dependent slots filled in).
void for_each_template(const RefuterSpace& space, const std::function<void(const Template&)>& f);

struct RefuteReport {
  std::string structure;
  std::vector<std::string> grid;
  bool allow_products = false;
  unsigned long long templates_tested = 0;
  unsigned long long satisfying_count = 0;
  unsigned long long outer_survivors = 0;  // power-0/2 assignments passing the lambda^0, lambda^4 equations
  unsigned long long inner_assignments = 0;
  unsigned long long full_checks = 0;
  std::vector<std::string> examples;  // first few satisfying templates
};

struct RefuteOptions {
  std::optional<uint64_t> shuffle_seed;  // permute option order (counts must not change)
  size_t max_examples = 4;
};

// Pruned exhaustive search.
RefuteReport refute(const RefuterSpace& space, const RefuteOptions& opts = {});
// Plain enumeration with check_template on every template; throws SizeCapExceeded above `cap`.
RefuteReport refute_brute_force(const RefuterSpace& space, unsigned long long cap = 5'000'000);

std::string template_to_string(const RefuterSpace& space, const Template& t);

}  // namespace lific
