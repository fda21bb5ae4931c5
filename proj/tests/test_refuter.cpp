#include <algorithm>
#include <limits>

#include "support.hpp"

using namespace lt;

namespace {

Template zero_template() { return Template{}; }

MPoly c(long v) { return MPoly(SmallC(SmallQ(v))); }

// Restricts each orbit to a few options, keeping `keep` (one value per orbit) when given.
RefuterSpace restricted(const RefuterSpace& full, const std::vector<MPoly>& keep, size_t extra) {
  RefuterSpace s = full;
  for (size_t o = 0; o < s.orbits.size(); ++o) {
    std::vector<size_t> idx;
    if (!keep.empty()) {
      auto it = std::find(full.options[o].begin(), full.options[o].end(), keep[o]);
      REQUIRE(it != full.options[o].end());
      idx.push_back(static_cast<size_t>(it - full.options[o].begin()));
    }
    for (size_t i = 0; i < full.options[o].size() && idx.size() < extra + (keep.empty() ? 0 : 1); ++i)
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
    s.options[o].clear();
    s.partner_options[o].clear();
    for (size_t i : idx) {
      s.options[o].push_back(full.options[o][i]);
      s.partner_options[o].push_back(full.partner_options[o][i]);
    }
  }
  return s;
}

// The quartic quadratification [[p1 + l(p2 - 1 - p0 p4) + l^2 p3, 1 + l^2 p4], [p0 + l^2, -l]].
Template witness(const RefuterSpace& sp) {
  Template t = zero_template();
  t[0][0][0] = sp.target(1);
  t[0][0][1] = c(1);
  t[0][1][0] = sp.target(0);
  t[1][0][0] = sp.target(2) - c(1) - sp.target(0) * sp.target(4);
  t[1][1][1] = c(-1);
  t[2][0][0] = sp.target(3);
  t[2][0][1] = sp.target(4);
  t[2][1][0] = c(1);
  return t;
}

std::vector<MPoly> free_values(const RefuterSpace& sp, const Template& t) {
  std::vector<MPoly> out;
  for (const Orbit& o : sp.orbits) out.push_back(t[o.a.i][o.a.s][o.a.t]);
  return out;
}

}  // namespace

TEST_CASE("small exact arithmetic") {
  CHECK(SmallQ(1, 2) + SmallQ(1, 3) == SmallQ(5, 6));
  CHECK(SmallQ(2, 4) == SmallQ(1, 2));
  CHECK(SmallQ(3, -6) == SmallQ(-1, 2));
  CHECK(SmallC(SmallQ(1), SmallQ(1)) * SmallC(SmallQ(1), SmallQ(-1)) == SmallC(SmallQ(2)));
  CHECK(SmallC::from_scalar(gi(2, -3)).to_scalar() == gi(2, -3));
  SmallQ big(std::numeric_limits<int64_t>::max() / 2);
  try {
    (void)(big * big);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeCapExceeded);
  }
  MPoly x = MPoly::variable(0), y = MPoly::variable(1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * y).coeff(MPoly::var_key(0) + MPoly::var_key(1)) == SmallC(SmallQ(1)));
  CHECK(MPoly::product(0, 1) == x * y);
  CHECK((x - x).is_zero());
}

TEST_CASE("determinant coefficient extraction") {
  Template t = zero_template();
  // Twelve independent symbols would overflow the 5-variable key, so use
  // distinct integer-scaled combinations of the five variables instead.
  int v = 0;
  for (int i = 0; i < 3; ++i)
    for (int s = 0; s < 2; ++s)
      for (int u = 0; u < 2; ++u, ++v) t[i][s][u] = MPoly::variable(v % 5, SmallC(SmallQ(v + 1))) + c(v);
  auto a = [&](int i) { return t[i][0][0]; };
  auto b = [&](int i) { return t[i][0][1]; };
  auto cc = [&](int i) { return t[i][1][0]; };
  auto d = [&](int i) { return t[i][1][1]; };
  std::array<MPoly, 5> got = det_coefficients(t);
  CHECK(got[0] == a(0) * d(0) - b(0) * cc(0));
  CHECK(got[1] == a(0) * d(1) + a(1) * d(0) - b(0) * cc(1) - b(1) * cc(0));
  CHECK(got[2] == a(0) * d(2) + a(1) * d(1) + a(2) * d(0) - b(0) * cc(2) - b(1) * cc(1) - b(2) * cc(0));
  CHECK(got[3] == a(1) * d(2) + a(2) * d(1) - b(1) * cc(2) - b(2) * cc(1));
  CHECK(got[4] == a(2) * d(2) - b(2) * cc(2));
}

TEST_CASE("proof case splits are rejected") {
  RefuterSpace sp = make_refuter_space({StructureKind::Symmetric, StarFlavor::Transpose});
  // Case S0.1, S4.1, S1.1: l0 = diag(b0, a0 p0), l2 = diag(b4, a4 p4), l1 = diag(0, a1 p1).
  for (const MPoly& off : {MPoly(), sp.target(2), sp.target(3), c(1)}) {
    Template t = zero_template();
    t[0][0][0] = c(1);
    t[0][1][1] = sp.target(0);
    t[2][0][0] = c(1);
    t[2][1][1] = sp.target(4);
    t[1][1][1] = sp.target(1);
    t[1][0][1] = off;
    t[1][1][0] = off;
    CHECK_FALSE(check_template(sp, t).has_value());
    // p3 cannot appear with degree one in the lambda^3 coefficient.
    MPoly c3 = det_coefficients(t)[3];
    CHECK(c3.coeff(sp.target(3).terms().front().first).is_zero());
  }
  // A nonzero (l0)_{12} next to p0 on the diagonal leaves a constant in the lambda^0 coefficient.
  Template t = zero_template();
  t[0][0][0] = c(1);
  t[0][1][1] = sp.target(0);
  t[0][0][1] = c(1);
  t[0][1][0] = c(1);
  t[1][1][1] = sp.target(1);
  t[2][0][0] = c(1);
  t[2][1][1] = sp.target(4);
  CHECK(det_coefficients(t)[0] == sp.target(0) - c(1));
  CHECK_FALSE(check_template(sp, t).has_value());
}

TEST_CASE("the product witness satisfies the determinant identity") {
  for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose}) {
    RefuterSpace sp = make_refuter_space({StructureKind::Palindromic, f}, {}, true);
    std::optional<SmallC> alpha = check_template(sp, witness(sp));
    REQUIRE(alpha.has_value());
    CHECK(*alpha == SmallC(SmallQ(-1)));
  }
}

TEST_CASE("space sizes match the closed-form slot count") {
  RefuterSpace sp = make_refuter_space({StructureKind::Symmetric, StarFlavor::Transpose}, parse_grid("1,-1"));
  // Three powers, each with two diagonal slots and one off-diagonal pair.
  CHECK(sp.orbits.size() == 9);
  // 0, +-1, +-p_j for j = 0..4.
  for (const auto& o : sp.options) CHECK(o.size() == 13);
  unsigned long long expect = 1;
  for (int i = 0; i < 9; ++i) expect *= 13;
  CHECK(sp.template_count() == expect);

  RefuterSpace small = restricted(sp, {}, 2);
  unsigned long long seen = 0;
  for_each_template(small, [&](const Template&) { ++seen; });
  CHECK(seen == 512);
  CHECK(small.template_count() == 512);
}

TEST_CASE("pruned search agrees with brute force") {
  for (StarFlavor f : {StarFlavor::Transpose, StarFlavor::ConjTranspose}) {
    RefuterSpace full = make_refuter_space({StructureKind::Palindromic, f}, {}, true);
    RefuterSpace sub = restricted(full, free_values(full, witness(full)), 2);
    RefuteReport pruned = refute(sub), brute = refute_brute_force(sub);
    CHECK(pruned.satisfying_count == brute.satisfying_count);
    CHECK(pruned.satisfying_count >= 1);
    CHECK(pruned.templates_tested == brute.templates_tested);
  }
  for (const StructureTag& tag : all_tags()) {
    if (tag.kind == StructureKind::SkewSymmetric && tag.star == StarFlavor::Transpose) continue;
    RefuterSpace full = make_refuter_space(tag);
    for (uint64_t seed : {1u, 2u}) {
      RefuterSpace s = full;
      s.shuffle(seed);
      RefuterSpace sub = restricted(s, {}, 3);
      CHECK(refute(sub).satisfying_count == refute_brute_force(sub).satisfying_count);
    }
  }
}

TEST_CASE("enumeration order does not change counts") {
  RefuterSpace full = make_refuter_space({StructureKind::Palindromic, StarFlavor::Transpose}, {}, true);
  RefuterSpace sub = restricted(full, free_values(full, witness(full)), 4);
  RefuteReport base = refute(sub);
  for (uint64_t seed : {3u, 4u, 5u}) {
    RefuteOptions o;
    o.shuffle_seed = seed;
    RefuteReport r = refute(sub, o);
    CHECK(r.satisfying_count == base.satisfying_count);
    CHECK(r.templates_tested == base.templates_tested);
  }
}

TEST_CASE("symmetric quartics on the unit grid") {
  RefuterSpace sp = make_refuter_space({StructureKind::Symmetric, StarFlavor::Transpose}, parse_grid("1,-1"));
  RefuteReport r = refute(sp);
  CHECK(r.satisfying_count == 0);
  CHECK(r.templates_tested == sp.template_count());
}

TEST_CASE("refuter input errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Cancelled;
  };
  StructureTag sym{StructureKind::Symmetric, StarFlavor::Transpose};
  CHECK(kind_of([&] { make_refuter_space(sym, std::vector<Scalar>{}); }) != ErrorKind::EmptyGrid);
  CHECK(kind_of([&] { parse_grid(""); }) == ErrorKind::EmptyGrid);
  CHECK(kind_of([&] { make_refuter_space(sym, {Scalar(1), Scalar(0)}); }) == ErrorKind::SchemaError);
  CHECK(kind_of([&] { make_refuter_space({StructureKind::SkewSymmetric, StarFlavor::Transpose}); }) ==
        ErrorKind::DegenerateStructure);
  CHECK(parse_grid("1, -1, 1/2").size() == 3);
  CHECK(default_refuter_grid().size() == 6);
}

TEST_CASE("template rendering") {
  RefuterSpace sp = make_refuter_space({StructureKind::Palindromic, StarFlavor::ConjTranspose}, {}, true);
  std::string s = template_to_string(sp, witness(sp));
  CHECK(s.find("λ²") != std::string::npos);
  CHECK(s.front() == '[');
}
