#include "lific/conditions.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <tuple>

namespace lific {

int slot_target(ConditionKind kind, int d, int ell, int s, int t, int i) {
  if (s < 1 || t < 1 || s > d + 1 || t > d + 1 || i < 0 || i > ell) return -1;
  int r;
  if (kind == ConditionKind::DS)
    r = (i == ell) ? s - t + d + 1 : s - t + d;
  else
    r = (i == ell) ? 2 * d + 3 - s - t : 2 * d + 2 - s - t;
  if (i == 0 || i == ell) return (r >= 0 && r <= 2 * d + 1) ? ell * r : -1;
  return (r >= 0 && r <= 2 * d) ? ell * r + i : -1;
}

int slot_sign(ConditionKind kind, int d, int s) {
  if (kind != ConditionKind::ASS) return 1;
  return ((d - s + 1) % 2 == 0) ? 1 : -1;
}

template <class T>
ConditionReport verify_condition(const PolyMat<T>& M, const PolyMat<T>& P, ConditionKind kind, int d, int ell) {
  size_t nb = static_cast<size_t>(d) + 1;
  if (P.rows != P.cols || M.rows != M.cols || M.rows != nb * P.rows || M.grade != ell ||
      P.grade != (2 * d + 1) * ell)
    throw Error(ErrorKind::ShapeMismatch, "M must be (d+1)x(d+1) blocks of grade ell and P of grade (2d+1) ell");
  size_t n = P.rows;
  int k = P.grade;
  std::vector<Mat<T>> sums(static_cast<size_t>(k) + 1, Mat<T>(n, n));
  for (int i = 0; i <= ell; ++i)
    for (int s = 1; s <= d + 1; ++s)
      for (int t = 1; t <= d + 1; ++t) {
        Mat<T> b = M[i].block(static_cast<size_t>(s - 1) * n, static_cast<size_t>(t - 1) * n, n, n);
        if (b.is_zero()) continue;
        int j = slot_target(kind, d, ell, s, t, i);
        if (j < 0) {
          ConditionReport rep{false, -1, -1, ""};
          rep.message = "block (" + std::to_string(s) + "," + std::to_string(t) + ") of M_" + std::to_string(i) +
                        " lies outside every equation";
          return rep;
        }
        int sg = slot_sign(kind, d, s);
        sums[static_cast<size_t>(j)] += sg > 0 ? b : -b;
      }
  for (int j = 0; j <= k; ++j)
    if (sums[static_cast<size_t>(j)] != P[j]) {
      ConditionReport rep{false, j / ell, j % ell, ""};
      rep.message = condition_name(kind) + " equation for P_" + std::to_string(j) + " fails (r=" +
                    std::to_string(rep.r) + ", c=" + std::to_string(rep.c) + ")";
      return rep;
    }
  return {};
}

template ConditionReport verify_condition<Scalar>(const PolyMat<Scalar>&, const PolyMat<Scalar>&, ConditionKind, int,
                                                  int);
template ConditionReport verify_condition<Form>(const PolyMat<Form>&, const PolyMat<Form>&, ConditionKind, int, int);

ConditionReport verify_condition(const BlockPolynomial& M, const MatrixPolynomial& P, ConditionKind kind, int d,
                                 int ell) {
  if (M.n != P.rows) throw Error(ErrorKind::ShapeMismatch, "block size differs from the size of P");
  return verify_condition(M.base, P, kind, d, ell);
}

void validate_plan(const PlacementPlan& plan, int d, int ell) {
  if (d < 0 || ell < 1) throw Error(ErrorKind::ShapeMismatch, "need d >= 0 and ell >= 1");
  int k = (2 * d + 1) * ell;
  std::map<std::tuple<int, int, int>, int> slot_owner;
  std::vector<Scalar> total(static_cast<size_t>(k) + 1);
  for (const auto& a : plan.assignments) {
    if (a.j < 0 || a.j > k)
      throw Error(ErrorKind::IncompletePlan, "plan '" + plan.name + "' names P_" + std::to_string(a.j) +
                                                 " outside 0.." + std::to_string(k));
    if (a.alpha.is_zero()) throw Error(ErrorKind::IncompletePlan, "plan '" + plan.name + "' has a zero multiplier");
    auto key = std::make_tuple(a.s, a.t, a.i);
    auto it = slot_owner.find(key);
    if (it != slot_owner.end() && it->second != a.j)
      throw Error(ErrorKind::OverlapConflict, "plan '" + plan.name + "' puts P_" + std::to_string(it->second) +
                                                  " and P_" + std::to_string(a.j) + " in the same slot");
    slot_owner[key] = a.j;
    int target = slot_target(plan.kind, d, ell, a.s, a.t, a.i);
    if (target != a.j)
      throw Error(ErrorKind::IncompletePlan, "plan '" + plan.name + "' places P_" + std::to_string(a.j) +
                                                 " in block (" + std::to_string(a.s) + "," + std::to_string(a.t) +
                                                 ") of M_" + std::to_string(a.i) + ", which feeds " +
                                                 (target < 0 ? std::string("no equation")
                                                             : "P_" + std::to_string(target)));
    total[static_cast<size_t>(a.j)] += a.alpha * Scalar(slot_sign(plan.kind, d, a.s));
  }
  for (int j = 0; j <= k; ++j)
    if (!total[static_cast<size_t>(j)].is_one())
      throw Error(ErrorKind::IncompletePlan, "plan '" + plan.name + "' does not reproduce P_" + std::to_string(j));
}

BlockPolynomial build_M(const MatrixPolynomial& P, const PlacementPlan& plan, int d, int ell, StarFlavor flavor) {
  MatrixPolynomial M = build_M<Scalar>(P, plan, d, ell);
  FormPoly F = build_M<Form>(symbolic_polynomial(P.grade), plan, d, ell);
  return make_block(M, P.rows, F, flavor);
}

namespace {

using Cell = std::pair<int, int>;

enum class Rule {
  Own,   // P_{ell r} at power 0 on its own cell; P_k at power ell on the cell of group 2d
  Top,   // as Own, but P_{ell 2d} moves to power ell on the cell of group 2d-1
  Pair,  // even r at power 0 on its own cell, odd r at power ell on the cell of group r-1
};

PlacementPlan grouped(const std::string& name, ConditionKind kind, int d, int ell,
                      const std::function<Cell(int)>& cell, Rule rule) {
  PlacementPlan p{name, kind, {}};
  auto put = [&](int j, Cell c, int i) {
    p.assignments.push_back({j, c.first, c.second, i, Scalar(slot_sign(kind, d, c.first))});
  };
  for (int r = 0; r <= 2 * d + 1; ++r) {
    if (r <= 2 * d)
      for (int c = 1; c < ell; ++c) put(ell * r + c, cell(r), c);
    bool up = false;
    if (r == 2 * d + 1) up = true;
    else if (rule == Rule::Top && r == 2 * d && d >= 1) up = true;
    else if (rule == Rule::Pair && r % 2 == 1) up = true;
    if (up) {
      int g = (rule == Rule::Top && r == 2 * d) ? 2 * d - 1 : r - 1;
      put(ell * r, cell(g), ell);
    } else {
      put(ell * r, cell(r), 0);
    }
  }
  return p;
}

// Anti-diagonal s+t = m; staircase cells (1,1),(1,2),(2,2),...
Cell staircase(int d, int r) {
  int m = 2 * d + 2 - r;
  return m % 2 == 0 ? Cell{m / 2, m / 2} : Cell{(m - 1) / 2, (m + 1) / 2};
}

Cell first_row_col(int d, int r) {
  int delta = r - d;
  if (delta < 0) return {1, 1 - delta};
  return {1 + delta, 1};
}

Cell last_row_col(int d, int r) {
  int delta = r - d;
  if (delta < 0) return {d + 1 + delta, d + 1};
  return {d + 1, d + 1 - delta};
}

Cell first_col_last_col(int d, int r) {
  int delta = r - d;
  if (delta >= 0) return {1 + delta, 1};
  return {d + 1 + delta, d + 1};
}

PlacementPlan explicit_plan(const std::string& name, ConditionKind kind,
                            std::initializer_list<std::tuple<int, int, int, int>> cells) {
  PlacementPlan p{name, kind, {}};
  for (const auto& [j, s, t, i] : cells) p.assignments.push_back({j, s, t, i, Scalar(1)});
  return p;
}

}  // namespace

std::vector<PlacementPlan> builtin_plans(const StructureTag& tag, int d, int ell) {
  if (d < 0 || ell < 1) throw Error(ErrorKind::ShapeMismatch, "need d >= 0 and ell >= 1");
  ConditionKind kind = tag.condition(ell);
  std::vector<PlacementPlan> out;
  if (d == 0) {
    PlacementPlan p{"single-block", kind, {}};
    for (int i = 0; i <= ell; ++i) p.assignments.push_back({i, 1, 1, i, Scalar(1)});
    out.push_back(p);
    return out;
  }
  if (kind == ConditionKind::DS) {
    out.push_back(grouped("stacked", kind, d, ell, [d](int r) { return first_col_last_col(d, r); }, Rule::Pair));
    out.push_back(grouped("firstrowcol", kind, d, ell, [d](int r) { return first_row_col(d, r); }, Rule::Pair));
    out.push_back(grouped("lastrowcol", kind, d, ell, [d](int r) { return last_row_col(d, r); }, Rule::Pair));
    if (ell == 1) {
      PlacementPlan p{"antidiagonal", kind, {}};
      for (int m = 0; m <= d; ++m) {
        p.assignments.push_back({2 * m, m + 1, d + 1 - m, 0, Scalar(1)});
        p.assignments.push_back({2 * m + 1, m + 1, d + 1 - m, 1, Scalar(1)});
      }
      out.push_back(p);
    }
    if (d == 2 && ell == 2)
      out.push_back(explicit_plan("grade10-m3", kind,
                                  {{4, 1, 1, 0}, {5, 1, 1, 1}, {6, 1, 1, 2}, {0, 1, 3, 0}, {1, 1, 3, 1}, {2, 1, 3, 2},
                                   {7, 2, 1, 1}, {3, 2, 3, 1}, {8, 3, 1, 0}, {9, 3, 1, 1}, {10, 3, 1, 2}}));
    if (d == 3 && ell == 2)
      out.push_back(explicit_plan("grade14-m5", kind,
                                  {{5, 1, 2, 1}, {6, 1, 2, 2}, {0, 1, 4, 0}, {1, 1, 4, 1}, {2, 1, 4, 2},
                                   {8, 2, 1, 0}, {9, 2, 1, 1}, {3, 2, 4, 1}, {4, 2, 4, 2}, {7, 3, 3, 1},
                                   {13, 4, 1, 1}, {14, 4, 1, 2}, {10, 4, 2, 0}, {11, 4, 2, 1}, {12, 4, 2, 2}}));
    return out;
  }
  out.push_back(grouped("stacked-upper", kind, d, ell, [d](int r) { return staircase(d, r); }, Rule::Top));
  out.push_back(grouped("stacked-lower", kind, d, ell,
                        [d](int r) {
                          Cell c = staircase(d, r);
                          return Cell{c.second, c.first};
                        },
                        Rule::Top));
  out.push_back(grouped("staircase-paired", kind, d, ell, [d](int r) { return staircase(d, r); }, Rule::Pair));
  if (ell == 1) {
    PlacementPlan p{"diagonal", kind, {}};
    for (int s = 1; s <= d + 1; ++s) {
      Scalar sg(slot_sign(kind, d, s));
      p.assignments.push_back({2 * d + 2 - 2 * s, s, s, 0, sg});
      p.assignments.push_back({2 * d + 3 - 2 * s, s, s, 1, sg});
    }
    out.push_back(p);
  }
  if (d == 2 && ell == 2 && kind == ConditionKind::AS) {
    out.push_back(explicit_plan("grade10-m1", kind,
                                {{9, 1, 1, 1}, {10, 1, 1, 2}, {6, 1, 2, 0}, {7, 1, 2, 1}, {8, 1, 2, 2},
                                 {4, 2, 2, 0}, {5, 2, 2, 1}, {2, 2, 3, 0}, {3, 2, 3, 1}, {0, 3, 3, 0}, {1, 3, 3, 1}}));
    out.push_back(explicit_plan("grade10-m2", kind,
                                {{8, 1, 1, 0}, {9, 1, 1, 1}, {10, 1, 1, 2}, {4, 1, 3, 0}, {6, 2, 1, 0}, {7, 2, 1, 1},
                                 {5, 2, 2, 1}, {3, 3, 2, 1}, {0, 3, 3, 0}, {1, 3, 3, 1}, {2, 3, 3, 2}}));
  }
  return out;
}

PlacementPlan find_plan(const StructureTag& tag, int d, int ell, const std::string& name) {
  std::string want = name;
  if (name == "sparse") {
    if (d == 0) want = "single-block";
    else if (tag.condition(ell) == ConditionKind::DS) want = ell == 1 ? "antidiagonal" : "firstrowcol";
    else want = ell == 1 ? "diagonal" : "stacked-upper";
  }
  for (auto& p : builtin_plans(tag, d, ell))
    if (p.name == want) return p;
  throw Error(ErrorKind::IncompletePlan, "no builtin plan named '" + name + "' for " + tag.name() + ", d=" +
                                             std::to_string(d) + ", ell=" + std::to_string(ell));
}

std::string plan_to_json(const PlacementPlan& plan) {
  nlohmann::json j;
  j["name"] = plan.name;
  j["kind"] = condition_name(plan.kind);
  j["assignments"] = nlohmann::json::array();
  for (const auto& a : plan.assignments)
    j["assignments"].push_back({{"j", a.j}, {"s", a.s}, {"t", a.t}, {"i", a.i}, {"alpha", a.alpha.to_string()}});
  return j.dump(2);
}

PlacementPlan plan_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("plan: ") + e.what());
  }
  try {
    PlacementPlan p;
    p.name = j.value("name", std::string("custom"));
    p.kind = condition_from_name(j.at("kind").get<std::string>());
    for (const auto& a : j.at("assignments")) {
      Assignment x;
      x.j = a.at("j").get<int>();
      x.s = a.at("s").get<int>();
      x.t = a.at("t").get<int>();
      x.i = a.at("i").get<int>();
      x.alpha = a.contains("alpha") ? Scalar::parse(a.at("alpha").get<std::string>(), Backend::Gaussian) : Scalar(1);
      p.assignments.push_back(x);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("plan: ") + e.what());
  }
}

PlacementPlan plan_from_support(ConditionKind kind, int d, int ell, const std::vector<std::pair<int, int>>& support) {
  auto cell = [&](int r) {
    for (const auto& c : support) {
      int j = slot_target(kind, d, ell, c.first, c.second, 0);
      if (j == ell * r) return c;
    }
    throw Error(ErrorKind::IncompletePlan, "support misses the diagonal of group " + std::to_string(r));
  };
  return grouped("support", kind, d, ell, cell, Rule::Pair);
}

}  // namespace lific
